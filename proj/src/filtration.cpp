#include <socle/filtration.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace socle {

std::string SimpleLabel::name() const {
  switch (kind) {
    case LabelKind::WEIGHT: {
      std::string s = "Sym^" + std::to_string(a);
      if (b != 0) s += " det^" + std::to_string(b);
      return s;
    }
    case LabelKind::TORUS_CHAR:
      return "chi(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case LabelKind::S_CHAR:
      return "chi_s(" + std::to_string(a) + ")";
    case LabelKind::TRIVIAL:
      return "1";
  }
  throw std::logic_error("unknown label kind");
}

SimpleLabel weight_label(u32 r, u32 m) { return SimpleLabel{LabelKind::WEIGHT, r, m}; }

SimpleLabel torus_label_of(const CharacterSpec& chi) {
  const auto [alpha, delta] = chi.torus_label();
  return SimpleLabel{LabelKind::TORUS_CHAR, alpha, delta};
}

std::size_t SocleFiltration::layer_dim(std::size_t i) const {
  std::size_t d = 0;
  for (const LayerEntry& e : layers.at(i)) d += e.mult * label_dim(e.label);
  return d;
}

std::size_t SocleFiltration::total_dim() const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < layers.size(); ++i) d += layer_dim(i);
  return d;
}

std::size_t SocleFiltration::constituent_count() const {
  std::size_t n = 0;
  for (const Layer& layer : layers)
    for (const LayerEntry& e : layer) n += e.mult;
  return n;
}

std::string layer_to_string(const Layer& layer) {
  std::string s;
  const bool braces = layer.size() != 1 || layer.front().mult != 1;
  if (braces) s += "{";
  bool first = true;
  for (const LayerEntry& e : layer) {
    if (!first) s += ", ";
    first = false;
    s += e.label.name();
    if (e.mult != 1) s += " x" + std::to_string(e.mult);
  }
  if (braces) s += "}";
  return s;
}

std::string SocleFiltration::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (i) s += " --- ";
    s += layer_to_string(layers[i]);
  }
  return s;
}

std::size_t label_dim(const SimpleLabel& label) {
  return label.kind == LabelKind::WEIGHT ? label.a + 1 : 1;
}

std::vector<SimpleLabel> simple_catalog(const GroupSpec& gs) {
  const u32 p = gs.p;
  std::vector<SimpleLabel> out;
  switch (gs.kind) {
    case GroupKind::GL2:
      for (u32 r = 0; r < p; ++r)
        for (u32 m = 0; m + 1 < p; ++m) out.push_back(weight_label(r, m));
      break;
    case GroupKind::SL2:
      for (u32 r = 0; r < p; ++r) out.push_back(weight_label(r, 0));
      break;
    case GroupKind::K0:
    case GroupKind::BOREL_FP:
    case GroupKind::TORUS_FP:
      for (u32 alpha = 0; alpha + 1 < p; ++alpha)
        for (u32 delta = 0; delta + 1 < p; ++delta)
          out.push_back(SimpleLabel{LabelKind::TORUS_CHAR, alpha, delta});
      break;
    case GroupKind::IWAHORI_S:
      for (u32 n = 0; n + 1 < p; ++n) out.push_back(SimpleLabel{LabelKind::S_CHAR, n, 0});
      break;
    case GroupKind::PRO_P_IWAHORI_S:
    case GroupKind::U_UPPER:
    case GroupKind::U_FP:
    case GroupKind::Z1:
      out.push_back(SimpleLabel{LabelKind::TRIVIAL, 0, 0});
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Module simple_module(const SimpleLabel& label, const GroupSpec& gs) {
  switch (label.kind) {
    case LabelKind::WEIGHT:
      return weight_module(gs.p, label.a, label.b, gs);
    case LabelKind::TORUS_CHAR:
      return character_module(torus_char(gs.p, label.a, label.b), gs);
    case LabelKind::S_CHAR:
      return character_module(chi_s(gs.p, label.a), gs);
    case LabelKind::TRIVIAL:
      return character_module(torus_char(gs.p, 0, 0), gs);
  }
  throw std::logic_error("unknown label kind");
}

std::vector<Mat2> normal_p_core_gens(const GroupSpec& gs) {
  const u32 p = gs.p;
  const u32 q = gs.modulus();
  std::vector<Mat2> gens;
  auto push = [&](i64 a, i64 b, i64 c, i64 d) {
    const Mat2 g = Mat2::of(q, a, b, c, d);
    if (g != Mat2::id(q)) gens.push_back(g);
  };
  switch (gs.kind) {
    case GroupKind::GL2:
      if (gs.level >= 2) {
        push(1, p, 0, 1);
        push(1, 0, p, 1);
        push(1 + p, 0, 0, 1);
        push(1, 0, 0, 1 + p);
      }
      break;
    case GroupKind::SL2:
      if (gs.level >= 2) {
        push(1, p, 0, 1);
        push(1, 0, p, 1);
        push(1 + p, 0, 0, mod_inv((1 + p) % q, q));
      }
      break;
    case GroupKind::K0: {
      const u32 pm = static_cast<u32>(ipow(p, gs.depth) % q);
      push(1 + p, 0, 0, 1);
      push(1, 0, 0, 1 + p);
      push(1, 1, 0, 1);
      push(1, 0, pm, 1);
      break;
    }
    case GroupKind::IWAHORI_S:
      push(1, 1, 0, 1);
      push(1, 0, p, 1);
      push(1 + p, 0, 0, mod_inv((1 + p) % q, q));
      break;
    case GroupKind::BOREL_FP:
      push(1, 1, 0, 1);
      break;
    case GroupKind::PRO_P_IWAHORI_S:
    case GroupKind::U_UPPER:
    case GroupKind::U_FP:
    case GroupKind::Z1:
      // The whole group is a p-group.
      for (const Mat2& g : generators_of(gs)) gens.push_back(g);
      break;
    case GroupKind::TORUS_FP:
      break;
  }
  return gens;
}

namespace {

// Common fixed space of (act(g) - 1) over the given elements.
Subspace fixed_space(const Module& m, const std::vector<Mat2>& gens) {
  const u32 p = m.p();
  const std::size_t d = m.dim();
  if (gens.empty()) return Subspace::full(p, d);
  FpMatrix sys(p, gens.size() * d, d);
  std::size_t row = 0;
  for (const Mat2& g : gens) {
    const FpMatrix& a = m.act(g);
    for (std::size_t i = 0; i < d; ++i, ++row)
      for (std::size_t j = 0; j < d; ++j)
        sys.at(row, j) = mod_sub(a.at(i, j), i == j ? 1u : 0u, p);
  }
  return Subspace::span_rows(kernel_basis(sys));
}

struct SocleStep {
  Subspace socle;  // in the coordinates of the module passed in
  Layer layer;
};

SocleStep socle_step(const Module& m, const std::vector<SimpleLabel>& catalog) {
  const u32 p = m.p();
  const GroupSpec& gs = m.group()->spec;

  // Homs from simples land in the fixed space of the normal p-core, which is
  // a proper submodule whenever the core acts nontrivially; computing there
  // keeps the Hom systems small.
  const Subspace w = fixed_space(m, normal_p_core_gens(gs));
  const bool peeled = w.dim() < m.dim();
  const Module target = peeled ? sub_module(m, w) : m;

  SocleStep out;
  std::vector<std::vector<u32>> image_rows;
  for (const SimpleLabel& label : catalog) {
    const Module s = simple_module(label, gs);
    const auto homs = hom_space(s, target);
    if (homs.empty()) continue;
    out.layer.push_back(LayerEntry{label, static_cast<u32>(homs.size())});
    for (const FpMatrix& phi : homs) {
      // Columns of phi span the image inside `target`.
      for (std::size_t j = 0; j < phi.cols; ++j) {
        std::vector<u32> col = phi.col(j);
        if (peeled) {
          // Re-express in ambient coordinates: sum of basis rows of w.
          std::vector<u32> amb(m.dim(), 0);
          for (std::size_t i = 0; i < col.size(); ++i)
            for (std::size_t k = 0; k < m.dim(); ++k)
              amb[k] = mod_add(amb[k], mod_mul(col[i], w.basis.at(i, k), p), p);
          image_rows.push_back(std::move(amb));
        } else {
          image_rows.push_back(std::move(col));
        }
      }
    }
  }
  if (out.layer.empty())
    throw std::runtime_error("socle computation failed to exhaust the module (dim " +
                             std::to_string(m.dim()) + " remains)");
  FpMatrix stack(p, image_rows.size(), m.dim());
  for (std::size_t i = 0; i < image_rows.size(); ++i) stack.set_row(i, image_rows[i]);
  out.socle = Subspace::span_rows(stack);
  std::sort(out.layer.begin(), out.layer.end());
  return out;
}

}  // namespace

SocleFiltration socle_filtration(const Module& m) {
  SocleFiltration fil;
  fil.p = m.p();
  const auto catalog = simple_catalog(m.group()->spec);
  Module cur = m;
  while (cur.dim() > 0) {
    SocleStep step = socle_step(cur, catalog);
    fil.layers.push_back(std::move(step.layer));
    if (step.socle.dim() == cur.dim()) break;
    cur = quotient_module(cur, step.socle);
  }
  if (fil.total_dim() != m.dim())
    throw std::runtime_error("socle filtration dimension bookkeeping failed");
  return fil;
}

RadicalCosocle radical_cosocle(const Module& m) {
  const u32 p = m.p();
  const GroupSpec& gs = m.group()->spec;
  RadicalCosocle out;
  std::vector<FpMatrix> blocks;
  std::size_t total_rows = 0;
  for (const SimpleLabel& label : simple_catalog(gs)) {
    const Module s = simple_module(label, gs);
    const auto homs = hom_space(m, s);  // maps M -> S, shape dim(S) x dim(M)
    if (homs.empty()) continue;
    out.cosocle.push_back(LayerEntry{label, static_cast<u32>(homs.size())});
    for (const FpMatrix& phi : homs) {
      total_rows += phi.rows;
      blocks.push_back(phi);
    }
  }
  std::sort(out.cosocle.begin(), out.cosocle.end());
  FpMatrix stacked(p, total_rows, m.dim());
  std::size_t row = 0;
  for (const FpMatrix& b : blocks)
    for (std::size_t i = 0; i < b.rows; ++i) stacked.set_row(row++, b.row(i));
  out.radical = Subspace::span_rows(kernel_basis(stacked));
  return out;
}

bool is_uniserial(const SocleFiltration& fil) {
  for (const Layer& layer : fil.layers)
    if (layer.size() != 1 || layer.front().mult != 1) return false;
  return true;
}

bool is_uniserial(const Module& m) { return is_uniserial(socle_filtration(m)); }

SimpleLabel identify_weight(const Module& simple) {
  const GroupSpec& gs = simple.group()->spec;
  std::vector<SimpleLabel> matches;
  for (const SimpleLabel& label : simple_catalog(gs)) {
    if (label_dim(label) != simple.dim()) continue;
    if (hom_dim(simple_module(label, gs), simple) > 0) matches.push_back(label);
  }
  if (matches.size() != 1)
    throw std::runtime_error("weight identification failed: " +
                             std::to_string(matches.size()) + " catalog matches");
  return matches.front();
}

}  // namespace socle
