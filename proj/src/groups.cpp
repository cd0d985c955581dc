#include "socle/groups.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "socle/witt.hpp"

namespace socle {

namespace {

bool fp_only(GroupKind k) {
  return k == GroupKind::BOREL_FP || k == GroupKind::U_FP || k == GroupKind::TORUS_FP;
}

void validate(const GroupSpec& s) {
  if (!is_prime(s.p)) throw std::invalid_argument("group spec: p must be prime");
  if (s.level < 1) throw std::invalid_argument("group spec: level must be >= 1");
  if (s.kind == GroupKind::K0 && (s.depth < 1 || s.depth > s.level))
    throw std::invalid_argument("group spec: K0 depth must satisfy 1 <= m <= level");
  if (fp_only(s.kind) && s.level != 1)
    throw std::invalid_argument("group spec: residue-field kind requires level 1");
}

// Congruence depth of the lower-left entry for the upper-type kinds.
u32 lower_left_depth(const GroupSpec& s) {
  switch (s.kind) {
    case GroupKind::K0: return s.depth;
    case GroupKind::IWAHORI:
    case GroupKind::IWAHORI_S:
    case GroupKind::PRO_P_IWAHORI_S:
    case GroupKind::BOREL_FP: return 1;
    default: return 0;
  }
}

std::vector<Mat2> bfs_closure(const GroupSpec& spec, const std::vector<Mat2>& gens) {
  std::vector<Mat2> out;
  std::unordered_set<u64> seen;
  const Mat2 id = Mat2::id(spec.modulus());
  out.push_back(id);
  seen.insert(id.key());
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Mat2 x = out[head];
    for (const Mat2& g : gens) {
      const Mat2 y = x * g;
      if (seen.insert(y.key()).second) {
        if (!member_of(spec, y))
          throw std::logic_error("closure escapes membership predicate for " + spec.name());
        out.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

const char* kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::GL2: return "GL2";
    case GroupKind::SL2: return "SL2";
    case GroupKind::K0: return "K0";
    case GroupKind::IWAHORI: return "IWAHORI";
    case GroupKind::IWAHORI_S: return "IWAHORI_S";
    case GroupKind::PRO_P_IWAHORI_S: return "PRO_P_IWAHORI_S";
    case GroupKind::U_UPPER: return "U_UPPER";
    case GroupKind::Z1: return "Z1";
    case GroupKind::BOREL_FP: return "BOREL_FP";
    case GroupKind::U_FP: return "U_FP";
    case GroupKind::TORUS_FP: return "TORUS_FP";
  }
  return "?";
}

std::string GroupSpec::name() const {
  std::string s = kind_name(kind);
  if (kind == GroupKind::K0) s += "m" + std::to_string(depth);
  s += "_p" + std::to_string(p) + "_N" + std::to_string(level);
  return s;
}

bool member_of(const GroupSpec& s, const Mat2& g) {
  const u32 q = s.modulus();
  if (g.q != q) return false;
  const u32 a = g.a[0], b = g.a[1], c = g.a[2], d = g.a[3];
  const u32 cdep = lower_left_depth(s);
  if (cdep && c % static_cast<u32>(ipow(s.p, std::min(cdep, s.level))) != 0) return false;
  switch (s.kind) {
    case GroupKind::GL2:
    case GroupKind::K0:
    case GroupKind::IWAHORI:
    case GroupKind::BOREL_FP: return g.det() % s.p != 0;
    case GroupKind::SL2:
    case GroupKind::IWAHORI_S: return g.det() == 1 % q;
    case GroupKind::PRO_P_IWAHORI_S:
      return g.det() == 1 % q && a % s.p == 1 % s.p && d % s.p == 1 % s.p;
    case GroupKind::U_UPPER: return a == 1 % q && d == 1 % q && c == 0;
    case GroupKind::Z1: return b == 0 && c == 0 && a == d && a % s.p == 1 % s.p;
    case GroupKind::U_FP: return a == 1 % q && d == 1 % q && c == 0;
    case GroupKind::TORUS_FP: return b == 0 && c == 0 && a % s.p != 0 && d % s.p != 0;
  }
  return false;
}

std::vector<Mat2> generators_of(const GroupSpec& s) {
  const u32 q = s.modulus();
  const Mat2 e12 = Mat2::of(q, 1, 1, 0, 1);
  switch (s.kind) {
    case GroupKind::GL2: {
      const u32 u = primitive_root(s.p, s.level);
      return {e12, Mat2::of(q, 1, 0, 1, 1), Mat2::of(q, u, 0, 0, 1)};
    }
    case GroupKind::SL2: return {e12, Mat2::of(q, 1, 0, 1, 1)};
    case GroupKind::K0:
    case GroupKind::IWAHORI: {
      const u32 u = primitive_root(s.p, s.level);
      const u32 pm = static_cast<u32>(ipow(s.p, lower_left_depth(s)));
      return {Mat2::of(q, u, 0, 0, 1), Mat2::of(q, 1, 0, 0, u), e12, Mat2::of(q, 1, 0, pm, 1)};
    }
    case GroupKind::IWAHORI_S: {
      const u32 u = primitive_root(s.p, s.level);
      return {e12, Mat2::of(q, 1, 0, s.p % q, 1), Mat2::of(q, u, 0, 0, mod_inv(u, q))};
    }
    case GroupKind::PRO_P_IWAHORI_S: {
      const u32 t = (1 + s.p) % q;
      return {e12, Mat2::of(q, 1, 0, s.p % q, 1), Mat2::of(q, t, 0, 0, mod_inv(t, q))};
    }
    case GroupKind::U_UPPER: return {e12};
    case GroupKind::Z1: {
      const u32 t = (1 + s.p) % q;
      return {Mat2::scalar(q, t)};
    }
    case GroupKind::BOREL_FP: {
      const u32 u = primitive_root(s.p, 1);
      return {Mat2::of(q, u, 0, 0, 1), Mat2::of(q, 1, 0, 0, u), e12};
    }
    case GroupKind::U_FP: return {e12};
    case GroupKind::TORUS_FP: {
      const u32 u = primitive_root(s.p, 1);
      return {Mat2::of(q, u, 0, 0, 1), Mat2::of(q, 1, 0, 0, u)};
    }
  }
  throw std::invalid_argument("unknown group kind");
}

u64 expected_order(const GroupSpec& s) {
  const u64 p = s.p;
  const u32 n = s.level;
  switch (s.kind) {
    case GroupKind::GL2: return ipow(p, 4 * (n - 1)) * (p * p - 1) * (p * p - p);
    case GroupKind::SL2: return ipow(p, 3 * (n - 1)) * p * (p * p - 1);
    case GroupKind::K0:
    case GroupKind::IWAHORI:
      return (p - 1) * (p - 1) * ipow(p, 4 * n - 2 - lower_left_depth(s));
    case GroupKind::IWAHORI_S: return (p - 1) * ipow(p, 3 * n - 2);
    case GroupKind::PRO_P_IWAHORI_S: return ipow(p, 3 * n - 2);
    case GroupKind::U_UPPER: return ipow(p, n);
    case GroupKind::Z1: return ipow(p, n - 1);
    case GroupKind::BOREL_FP: return (p - 1) * (p - 1) * p;
    case GroupKind::U_FP: return p;
    case GroupKind::TORUS_FP: return (p - 1) * (p - 1);
  }
  throw std::invalid_argument("unknown group kind");
}

Mat2 FiniteGroup::random_element(std::mt19937& rng) const {
  if (!elements.empty()) return elements[rng() % elements.size()];
  Mat2 x = Mat2::id(spec.modulus());
  for (int i = 0; i < 24; ++i) {
    const Mat2& g = gens[rng() % gens.size()];
    x = (rng() % 2) ? x * g : x * g.inv();
  }
  return x;
}

GroupPtr make_group(const GroupSpec& spec) {
  static std::map<GroupSpec, GroupPtr> cache;
  if (auto it = cache.find(spec); it != cache.end()) return it->second;

  validate(spec);
  auto g = std::make_shared<FiniteGroup>();
  g->spec = spec;
  g->gens = generators_of(spec);
  for (const Mat2& x : g->gens)
    if (!member_of(spec, x)) throw std::logic_error("generator outside " + spec.name());
  g->order = expected_order(spec);
  if (g->order <= kEnumerationBound) {
    g->elements = bfs_closure(spec, g->gens);
    if (g->elements.size() != g->order)
      throw std::logic_error("closure size mismatch for " + spec.name() + ": got " +
                             std::to_string(g->elements.size()) + ", expected " +
                             std::to_string(g->order));
  }
  cache.emplace(spec, g);
  return g;
}

u64 closure_check(const FiniteGroup& g) { return bfs_closure(g.spec, g.gens).size(); }

Mat2 coset_w(u32 lambda0, u32 p, u32 level) {
  return Mat2::of(static_cast<u32>(ipow(p, level)), teichmuller(lambda0 % p, p, level), 1, 1, 0);
}

namespace {

// Is `small` one of the kinds whose K-cosets are indexed by an identity coset
// plus one Weyl-twisted coset per residue?
bool upper_full_torus(GroupKind k) {
  return k == GroupKind::K0 || k == GroupKind::IWAHORI || k == GroupKind::BOREL_FP;
}

Mat2 lower_elem(u32 q, u32 pm, u32 t) { return Mat2::of(q, 1, 0, mod_mul(pm % q, t, q), 1); }

}  // namespace

CosetSystem::Location CosetSystem::locate(const Mat2& x) const {
  const u32 p = big.p, q = big.modulus();
  if (reps.size() == 1) return {0, x};

  if (big.kind == GroupKind::GL2 && upper_full_torus(small.kind)) {
    const u32 m = lower_left_depth(small);
    const u32 inner = static_cast<u32>(ipow(p, m - 1));
    std::size_t i1;
    Mat2 h = x;
    if (x.a[2] % p != 0) {
      const u32 l = mod_mul(x.a[0] % p, mod_inv(x.a[2] % p, p), p);
      i1 = 1 + l;
      h = coset_w(l, p, big.level).inv() * x;
    } else {
      i1 = 0;
    }
    if (m == 1) return {i1, h};
    const u32 pm1 = inner;  // p^{m-1}
    const u32 ctil = (h.a[2] / p) % pm1;
    const u32 t = mod_mul(ctil, mod_inv(h.a[0] % pm1, pm1), pm1);
    return {i1 * inner + t, lower_elem(q, p, t).inv() * h};
  }

  if (big.kind == GroupKind::SL2 && small.kind == GroupKind::IWAHORI_S) {
    if (x.a[2] % p != 0) {
      const u32 l = mod_mul(x.a[0] % p, mod_inv(x.a[2] % p, p), p);
      return {1 + l, reps[1 + l].inv() * x};
    }
    return {0, x};
  }

  if ((big.kind == GroupKind::K0 || big.kind == GroupKind::IWAHORI) &&
      small.kind == GroupKind::K0) {
    const u32 m = lower_left_depth(big), m2 = lower_left_depth(small);
    const u32 pm = static_cast<u32>(ipow(p, m));
    const u32 span = static_cast<u32>(ipow(p, m2 - m));
    const u32 ctil = (x.a[2] / pm) % span;
    const u32 t = mod_mul(ctil, mod_inv(x.a[0] % span, span), span);
    return {t, lower_elem(q, pm, t).inv() * x};
  }

  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Mat2 h = reps[i].inv() * x;
    if (member_of(small, h)) return {i, h};
  }
  throw std::logic_error("coset location failed: element not in " + big.name());
}

CosetSystem coset_system(const GroupSpec& big, const GroupSpec& small) {
  validate(big);
  validate(small);
  if (big.p != small.p || big.level != small.level)
    throw std::invalid_argument("coset system: groups live at different levels");
  for (const Mat2& g : generators_of(small))
    if (!member_of(big, g))
      throw std::invalid_argument("coset system: " + small.name() + " is not inside " + big.name());
  if (expected_order(big) % expected_order(small) != 0)
    throw std::invalid_argument("coset system: order of " + small.name() +
                                " does not divide order of " + big.name());

  CosetSystem cs{big, small, {}};
  const u32 p = big.p, q = big.modulus();

  if (big == small) {
    cs.reps = {Mat2::id(q)};
    return cs;
  }

  if (big.kind == GroupKind::GL2 && upper_full_torus(small.kind)) {
    const u32 m = lower_left_depth(small);
    const u32 inner = static_cast<u32>(ipow(p, m - 1));
    std::vector<Mat2> outer;
    outer.push_back(Mat2::id(q));
    for (u32 l = 0; l < p; ++l) outer.push_back(coset_w(l, p, big.level));
    for (const Mat2& w : outer)
      for (u32 t = 0; t < inner; ++t) cs.reps.push_back(w * lower_elem(q, p, t));
    return cs;
  }

  if (big.kind == GroupKind::SL2 && small.kind == GroupKind::IWAHORI_S) {
    cs.reps.push_back(Mat2::id(q));
    for (u32 l = 0; l < p; ++l)
      cs.reps.push_back(Mat2::of(q, teichmuller(l, p, big.level), -1, 1, 0));
    return cs;
  }

  if ((big.kind == GroupKind::K0 || big.kind == GroupKind::IWAHORI) &&
      small.kind == GroupKind::K0) {
    const u32 m = lower_left_depth(big), m2 = lower_left_depth(small);
    if (m2 < m) throw std::invalid_argument("coset system: depth must grow downward");
    const u32 pm = static_cast<u32>(ipow(p, m));
    const u32 span = static_cast<u32>(ipow(p, m2 - m));
    for (u32 t = 0; t < span; ++t) cs.reps.push_back(lower_elem(q, pm, t));
    return cs;
  }

  // Generic fallback: scan an enumerated big group.
  const GroupPtr g = make_group(big);
  if (g->elements.empty())
    throw std::invalid_argument("coset system: no closed form and group too large to enumerate");
  for (const Mat2& x : g->elements) {
    bool found = false;
    for (const Mat2& r : cs.reps)
      if (member_of(small, r.inv() * x)) {
        found = true;
        break;
      }
    if (!found) cs.reps.push_back(x);
  }
  return cs;
}

}  // namespace socle
