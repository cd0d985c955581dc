#include "socle/module.hpp"

#include <stdexcept>
#include <unordered_map>

namespace socle {

namespace {

u32 binom_mod(u32 n, u32 k, u32 p) {
  if (k > n) return 0;
  u64 num = 1, den = 1;
  for (u32 i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return static_cast<u32>(num / den % p);
}

// Matrix of (a,b;c,d) over F_p on the basis X^k Y^{r-k} (index k), where
// X -> aX + cY and Y -> bX + dY, scaled by det^m.
FpMatrix weight_matrix(const Mat2& gb, u32 r, u32 m, u32 p) {
  const u32 a = gb.a[0], b = gb.a[1], c = gb.a[2], d = gb.a[3];
  FpMatrix out(p, r + 1, r + 1);
  for (u32 i = 0; i <= r; ++i) {
    for (u32 k1 = 0; k1 <= i; ++k1) {
      const u32 t1 =
          mod_mul(binom_mod(i, k1, p), mod_mul(mod_pow(a, k1, p), mod_pow(c, i - k1, p), p), p);
      if (t1 == 0) continue;
      for (u32 k2 = 0; k2 + i <= r; ++k2) {
        const u32 t2 = mod_mul(binom_mod(r - i, k2, p),
                               mod_mul(mod_pow(b, k2, p), mod_pow(d, r - i - k2, p), p), p);
        if (t2 == 0) continue;
        out.at(k1 + k2, i) = mod_add(out.at(k1 + k2, i), mod_mul(t1, t2, p), p);
      }
    }
  }
  if (m != 0) {
    const u32 s = mod_pow(gb.det(), m, p);
    for (auto& x : out.e) x = mod_mul(x, s, p);
  }
  return out;
}

bool det_one_kind(GroupKind k) {
  return k == GroupKind::SL2 || k == GroupKind::IWAHORI_S || k == GroupKind::PRO_P_IWAHORI_S;
}

}  // namespace

class ModuleImpl {
 public:
  ModuleImpl(GroupPtr g, std::size_t dim) : group_(std::move(g)), dim_(dim) {}
  virtual ~ModuleImpl() = default;

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  u32 p() const { return group_->spec.p; }

  const FpMatrix& act(const Mat2& g) const {
    const u64 k = g.key();
    if (auto it = cache_.find(k); it != cache_.end()) return it->second;
    if (!group_->is_member(g))
      throw std::invalid_argument("act: element outside " + group_->spec.name());
    return cache_.emplace(k, act_raw(g)).first->second;
  }

  const std::vector<FpMatrix>& gen_actions() const {
    if (gen_actions_.empty())
      for (const Mat2& g : group_->gens) gen_actions_.push_back(act(g));
    return gen_actions_;
  }

  virtual std::string describe() const = 0;

 protected:
  virtual FpMatrix act_raw(const Mat2& g) const = 0;

  GroupPtr group_;
  std::size_t dim_;
  mutable std::unordered_map<u64, FpMatrix> cache_;
  mutable std::vector<FpMatrix> gen_actions_;
};

const GroupPtr& Module::group() const { return impl_->group(); }
std::size_t Module::dim() const { return impl_->dim(); }
u32 Module::p() const { return impl_->p(); }
const FpMatrix& Module::act(const Mat2& g) const { return impl_->act(g); }
const std::vector<FpMatrix>& Module::gen_actions() const { return impl_->gen_actions(); }
std::string Module::describe() const { return impl_->describe(); }

namespace {

class WeightImpl : public ModuleImpl {
 public:
  WeightImpl(GroupPtr g, u32 r, u32 m) : ModuleImpl(std::move(g), r + 1), r_(r), m_(m) {}

  std::string describe() const override {
    std::string s = "Sym^" + std::to_string(r_);
    if (m_ != 0) s += "*det^" + std::to_string(m_);
    return s + "(" + group_->spec.name() + ")";
  }

 protected:
  FpMatrix act_raw(const Mat2& g) const override {
    return weight_matrix(g.reduce_to(p()), r_, m_, p());
  }

 private:
  u32 r_, m_;
};

class SigmaImpl : public ModuleImpl {
 public:
  SigmaImpl(GroupPtr g, u32 r, u32 n) : ModuleImpl(std::move(g), r + 1), r_(r), n_(n) {}

  std::string describe() const override {
    return "sigma(" + std::to_string(r_) + ",depth " + std::to_string(n_) + ")(" +
           group_->spec.name() + ")";
  }

 protected:
  FpMatrix act_raw(const Mat2& g) const override {
    const u32 pp = p();
    const u32 pn = static_cast<u32>(ipow(pp, n_));
    const Mat2 conj = Mat2::of(pp, g.a[0] % pp, static_cast<i64>(ipow(pp, n_) % pp) * g.a[1],
                               (g.a[2] / pn) % pp, g.a[3] % pp);
    return weight_matrix(conj, r_, 0, pp);
  }

 private:
  u32 r_, n_;
};

class CharacterImpl : public ModuleImpl {
 public:
  CharacterImpl(GroupPtr g, CharacterSpec chi) : ModuleImpl(std::move(g), 1), chi_(chi) {}

  std::string describe() const override {
    return chi_.name() + "(" + group_->spec.name() + ")";
  }

 protected:
  FpMatrix act_raw(const Mat2& g) const override {
    FpMatrix m(p(), 1, 1);
    m.at(0, 0) = chi_.eval(g);
    return m;
  }

 private:
  CharacterSpec chi_;
};

class InducedImpl : public ModuleImpl {
 public:
  InducedImpl(GroupPtr g, Module base, CosetSystem cs)
      : ModuleImpl(std::move(g), cs.reps.size() * base.dim()),
        base_(std::move(base)),
        cs_(std::move(cs)) {}

  std::string describe() const override {
    return "ind[" + cs_.big.name() + "/" + cs_.small.name() + "](" + base_.describe() + ")";
  }

  const CosetSystem& cosets() const { return cs_; }
  const Module& base() const { return base_; }

 protected:
  FpMatrix act_raw(const Mat2& g) const override {
    const std::size_t nb = cs_.reps.size(), db = base_.dim();
    FpMatrix out(p(), dim_, dim_);
    for (std::size_t i = 0; i < nb; ++i) {
      const auto loc = cs_.locate(g * cs_.reps[i]);
      const FpMatrix& bm = base_.act(loc.hpart);
      for (std::size_t rb = 0; rb < db; ++rb)
        for (std::size_t cb = 0; cb < db; ++cb)
          out.at(loc.index * db + rb, i * db + cb) = bm.at(rb, cb);
    }
    return out;
  }

 private:
  Module base_;
  CosetSystem cs_;
};

class RestrictImpl : public ModuleImpl {
 public:
  RestrictImpl(GroupPtr sub, Module parent)
      : ModuleImpl(std::move(sub), parent.dim()), parent_(std::move(parent)) {}

  std::string describe() const override {
    return parent_.describe() + "|" + group_->spec.name();
  }

 protected:
  FpMatrix act_raw(const Mat2& g) const override { return parent_.act(g); }

 private:
  Module parent_;
};

class TwistImpl : public ModuleImpl {
 public:
  TwistImpl(Module parent, CharacterSpec chi)
      : ModuleImpl(parent.group(), parent.dim()), parent_(std::move(parent)), chi_(chi) {}

  std::string describe() const override {
    return parent_.describe() + "*" + chi_.name();
  }

 protected:
  FpMatrix act_raw(const Mat2& g) const override {
    return mat_scale(parent_.act(g), chi_.eval(g));
  }

 private:
  Module parent_;
  CharacterSpec chi_;
};

class DirectSumImpl : public ModuleImpl {
 public:
  DirectSumImpl(Module a, Module b)
      : ModuleImpl(a.group(), a.dim() + b.dim()), a_(std::move(a)), b_(std::move(b)) {}

  std::string describe() const override { return a_.describe() + " (+) " + b_.describe(); }

 protected:
  FpMatrix act_raw(const Mat2& g) const override {
    const FpMatrix& ma = a_.act(g);
    const FpMatrix& mb = b_.act(g);
    FpMatrix out(p(), dim_, dim_);
    for (std::size_t i = 0; i < ma.rows; ++i)
      for (std::size_t j = 0; j < ma.cols; ++j) out.at(i, j) = ma.at(i, j);
    for (std::size_t i = 0; i < mb.rows; ++i)
      for (std::size_t j = 0; j < mb.cols; ++j)
        out.at(ma.rows + i, ma.cols + j) = mb.at(i, j);
    return out;
  }

 private:
  Module a_, b_;
};

class ContragredientImpl : public ModuleImpl {
 public:
  explicit ContragredientImpl(Module parent)
      : ModuleImpl(parent.group(), parent.dim()), parent_(std::move(parent)) {}

  std::string describe() const override { return "dual(" + parent_.describe() + ")"; }

 protected:
  FpMatrix act_raw(const Mat2& g) const override { return transpose(parent_.act(g.inv())); }

 private:
  Module parent_;
};

class SubImpl : public ModuleImpl {
 public:
  SubImpl(Module parent, Subspace s)
      : ModuleImpl(parent.group(), s.dim()), parent_(std::move(parent)), s_(std::move(s)) {
    pivots_.reserve(s_.dim());
    for (std::size_t i = 0; i < s_.basis.rows; ++i) {
      std::size_t j = 0;
      while (j < s_.basis.cols && s_.basis.at(i, j) == 0) ++j;
      pivots_.push_back(j);
    }
  }

  std::string describe() const override {
    return "sub[dim " + std::to_string(dim_) + "](" + parent_.describe() + ")";
  }

 protected:
  FpMatrix act_raw(const Mat2& g) const override {
    const FpMatrix& a = parent_.act(g);
    FpMatrix out(p(), dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      const auto w = mat_vec(a, s_.basis.row(i));
      if (!s_.contains(w))
        throw std::logic_error("sub module: subspace not invariant under " + group_->spec.name());
      for (std::size_t j = 0; j < dim_; ++j) out.at(j, i) = w[pivots_[j]];
    }
    return out;
  }

 private:
  Module parent_;
  Subspace s_;
  std::vector<std::size_t> pivots_;
};

class QuotientImpl : public ModuleImpl {
 public:
  QuotientImpl(Module parent, Subspace s)
      : ModuleImpl(parent.group(), parent.dim() - s.dim()),
        parent_(std::move(parent)),
        s_(std::move(s)) {
    std::vector<bool> is_pivot(parent_.dim(), false);
    for (std::size_t i = 0; i < s_.basis.rows; ++i) {
      std::size_t j = 0;
      while (j < s_.basis.cols && s_.basis.at(i, j) == 0) ++j;
      is_pivot[j] = true;
    }
    for (std::size_t j = 0; j < parent_.dim(); ++j)
      if (!is_pivot[j]) free_cols_.push_back(j);
  }

  std::string describe() const override {
    return "quot[dim " + std::to_string(dim_) + "](" + parent_.describe() + ")";
  }

  // Coordinates in the quotient basis of the class of an ambient vector.
  std::vector<u32> project(std::vector<u32> v) const {
    v = reduce_mod(s_, std::move(v));
    std::vector<u32> out(dim_);
    for (std::size_t j = 0; j < dim_; ++j) out[j] = v[free_cols_[j]];
    return out;
  }

  std::vector<u32> lift(const std::vector<u32>& coords) const {
    std::vector<u32> out(parent_.dim(), 0);
    for (std::size_t j = 0; j < dim_; ++j) out[free_cols_[j]] = coords[j] % p();
    return out;
  }

  const Subspace& denominator() const { return s_; }

 protected:
  FpMatrix act_raw(const Mat2& g) const override {
    const FpMatrix& a = parent_.act(g);
    FpMatrix out(p(), dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      const auto w = project(a.col(free_cols_[i]));
      for (std::size_t j = 0; j < dim_; ++j) out.at(j, i) = w[j];
    }
    return out;
  }

 private:
  Module parent_;
  Subspace s_;
  std::vector<std::size_t> free_cols_;
};

void check_invariant(const Module& m, const Subspace& s, const char* what) {
  for (const FpMatrix& a : m.gen_actions())
    for (std::size_t i = 0; i < s.basis.rows; ++i)
      if (!s.contains(mat_vec(a, s.basis.row(i))))
        throw std::invalid_argument(std::string(what) +
                                    ": subspace is not invariant in " + m.describe());
}

}  // namespace

Module weight_module(u32 p, u32 r, u32 m, const GroupSpec& gspec) {
  if (r > p - 1) throw std::invalid_argument("weight module: r out of range");
  if (det_one_kind(gspec.kind)) {
    if (m != 0) throw std::invalid_argument("weight module: det twist over a determinant-one kind");
  } else {
    m = mod_reduce(m, p - 1);
  }
  if (gspec.p != p) throw std::invalid_argument("weight module: prime mismatch");
  return Module(std::make_shared<WeightImpl>(make_group(gspec), r, m));
}

Module sigma_rn_module(u32 p, u32 r, u32 n, u32 level) {
  if (r > p - 1) throw std::invalid_argument("sigma module: r out of range");
  if (n < 1 || n >= level) throw std::invalid_argument("sigma module: need 1 <= depth < level");
  return Module(std::make_shared<SigmaImpl>(make_group({GroupKind::K0, p, level, n}), r, n));
}

Module character_module(const CharacterSpec& chi, const GroupSpec& gspec) {
  if (chi.p != gspec.p) throw std::invalid_argument("character module: prime mismatch");
  auto g = make_group(gspec);
  try {
    for (const Mat2& x : g->gens) chi.eval(x);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("character module: group kind incompatible with character");
  }
  return Module(std::make_shared<CharacterImpl>(std::move(g), chi));
}

Module induce(const GroupSpec& big, const Module& m) {
  CosetSystem cs = coset_system(big, m.group()->spec);
  return Module(std::make_shared<InducedImpl>(make_group(big), m, std::move(cs)));
}

Module restrict_to(const Module& m, const GroupSpec& subgroup) {
  auto sub = make_group(subgroup);
  if (sub->spec.modulus() != m.group()->spec.modulus())
    throw std::invalid_argument("restrict: level mismatch");
  for (const Mat2& g : sub->gens)
    if (!m.group()->is_member(g))
      throw std::invalid_argument("restrict: " + subgroup.name() + " is not inside " +
                                  m.group()->spec.name());
  return Module(std::make_shared<RestrictImpl>(std::move(sub), m));
}

Module twist(const Module& m, const CharacterSpec& chi) {
  if (chi.p != m.p()) throw std::invalid_argument("twist: prime mismatch");
  try {
    for (const Mat2& g : m.group()->gens) chi.eval(g);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("twist: character undefined on the module's group");
  }
  return Module(std::make_shared<TwistImpl>(m, chi));
}

Module direct_sum(const Module& a, const Module& b) {
  if (!(a.group()->spec == b.group()->spec))
    throw std::invalid_argument("direct sum: group mismatch");
  return Module(std::make_shared<DirectSumImpl>(a, b));
}

Module contragredient(const Module& m) { return Module(std::make_shared<ContragredientImpl>(m)); }

Module sub_module(const Module& m, const Subspace& s) {
  if (s.ambient != m.dim()) throw std::invalid_argument("sub module: ambient mismatch");
  check_invariant(m, s, "sub module");
  return Module(std::make_shared<SubImpl>(m, s));
}

Module quotient_module(const Module& m, const Subspace& s) {
  if (s.ambient != m.dim()) throw std::invalid_argument("quotient module: ambient mismatch");
  check_invariant(m, s, "quotient module");
  return Module(std::make_shared<QuotientImpl>(m, s));
}

namespace {
std::shared_ptr<const QuotientImpl> as_quotient(const Module& m) {
  auto impl = std::dynamic_pointer_cast<const QuotientImpl>(m.impl());
  if (!impl) throw std::invalid_argument("not a quotient module: " + m.describe());
  return impl;
}
}  // namespace

std::vector<u32> quotient_project(const Module& quot, const std::vector<u32>& ambient) {
  return as_quotient(quot)->project(ambient);
}

std::vector<u32> quotient_lift(const Module& quot, const std::vector<u32>& coords) {
  return as_quotient(quot)->lift(coords);
}

const Subspace& quotient_denominator(const Module& quot) {
  return as_quotient(quot)->denominator();
}

const CosetSystem& induced_cosets(const Module& ind) {
  auto impl = std::dynamic_pointer_cast<const InducedImpl>(ind.impl());
  if (!impl) throw std::invalid_argument("not an induced module: " + ind.describe());
  return impl->cosets();
}

const Module& induced_base(const Module& ind) {
  auto impl = std::dynamic_pointer_cast<const InducedImpl>(ind.impl());
  if (!impl) throw std::invalid_argument("not an induced module: " + ind.describe());
  return impl->base();
}

std::vector<u32> induced_symbol(const Module& ind, std::size_t rep_index,
                                const std::vector<u32>& v) {
  const auto& cs = induced_cosets(ind);
  const std::size_t db = induced_base(ind).dim();
  if (rep_index >= cs.reps.size() || v.size() != db)
    throw std::invalid_argument("induced symbol out of range");
  std::vector<u32> out(ind.dim(), 0);
  for (std::size_t k = 0; k < db; ++k) out[rep_index * db + k] = v[k] % ind.p();
  return out;
}

std::vector<u32> f_ell_element(const Module& ind, u32 ell, const std::vector<u32>& v) {
  const u32 p = ind.p();
  if (ell > p - 1) throw std::invalid_argument("f_ell: exponent out of range");
  const auto& cs = induced_cosets(ind);
  const u32 level = cs.big.level;
  // The identity-plus-Weyl transversal is required so that [1, v] makes sense.
  if (cs.reps.size() < 1 + p || !(cs.reps[0] == Mat2::id(cs.big.modulus())))
    throw std::invalid_argument("f_ell: unexpected transversal shape");
  const auto one_v = induced_symbol(ind, 0, v);
  std::vector<u32> acc(ind.dim(), 0);
  for (u32 l0 = 0; l0 < p; ++l0) {
    const u32 c = mod_pow(l0, ell, p);  // 0^0 = 1
    if (c == 0) continue;
    const auto moved = mat_vec(ind.act(coset_w(l0, p, level)), one_v);
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] = mod_add(acc[i], mod_mul(c, moved[i], p), p);
  }
  return acc;
}

}  // namespace socle
