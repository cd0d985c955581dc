#include <stdexcept>

#include "socle/module.hpp"

namespace socle {

namespace {

FpMatrix append_row(const FpMatrix& basis, const std::vector<u32>& v, u32 p) {
  FpMatrix out(p, basis.rows + 1, v.size());
  std::copy(basis.e.begin(), basis.e.end(), out.e.begin());
  for (std::size_t j = 0; j < v.size(); ++j) out.at(basis.rows, j) = v[j] % p;
  return out;
}

void require_subgroup(const Module& m, const GroupPtr& h) {
  if (h->spec.modulus() != m.group()->spec.modulus())
    throw std::invalid_argument("subgroup at a different level than the module");
  for (const Mat2& g : h->gens)
    if (!m.group()->is_member(g))
      throw std::invalid_argument(h->spec.name() + " is not inside " + m.group()->spec.name());
}

}  // namespace

std::vector<FpMatrix> hom_space(const Module& s, const Module& m) {
  if (!(s.group()->spec == m.group()->spec))
    throw std::invalid_argument("hom space: modules over different groups");
  const u32 p = s.p();
  const std::size_t ds = s.dim(), dm = m.dim(), n = ds * dm;
  const auto& sg = s.gen_actions();
  const auto& mg = m.gen_actions();
  // Unknown phi is dm x ds, flattened row-major; equivariance per generator g
  // reads (M_g kron I_ds - I_dm kron S_g^T) vec(phi) = 0.
  FpMatrix sys(p, sg.size() * n, n);
  for (std::size_t t = 0; t < sg.size(); ++t) {
    const FpMatrix k =
        mat_sub(kron(mg[t], FpMatrix::identity(p, ds)),
                kron(FpMatrix::identity(p, dm), transpose(sg[t])));
    std::copy(k.e.begin(), k.e.end(), sys.e.begin() + t * n * n);
  }
  const FpMatrix ker = kernel_basis(sys);
  std::vector<FpMatrix> out;
  out.reserve(ker.rows);
  for (std::size_t i = 0; i < ker.rows; ++i) {
    FpMatrix phi(p, dm, ds);
    for (std::size_t a = 0; a < dm; ++a)
      for (std::size_t b = 0; b < ds; ++b) phi.at(a, b) = ker.at(i, a * ds + b);
    out.push_back(std::move(phi));
  }
  return out;
}

std::size_t hom_dim(const Module& s, const Module& m) { return hom_space(s, m).size(); }

Subspace isotypic_image(const Module& s, const Module& m) {
  const auto homs = hom_space(s, m);
  const u32 p = m.p();
  FpMatrix rows(p, homs.size() * s.dim(), m.dim());
  for (std::size_t i = 0; i < homs.size(); ++i) {
    const FpMatrix t = transpose(homs[i]);  // rows = images of the basis of s
    std::copy(t.e.begin(), t.e.end(), rows.e.begin() + i * t.rows * t.cols);
  }
  return Subspace::span_rows(rows);
}

namespace {

// Smallest subspace containing the vectors and stable under every action in
// `gens`.
Subspace close_under(u32 p, std::size_t dim, const std::vector<FpMatrix>& gens,
                     const std::vector<std::vector<u32>>& vectors) {
  Subspace s = Subspace::zero(p, dim);
  std::vector<std::vector<u32>> work;
  for (const auto& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("closure: vector of wrong length");
    if (!s.contains(v)) {
      s = Subspace::span_rows(append_row(s.basis, v, p));
      work.push_back(v);
    }
  }
  while (!work.empty()) {
    const auto v = std::move(work.back());
    work.pop_back();
    for (const FpMatrix& a : gens) {
      auto w = mat_vec(a, v);
      if (!s.contains(w)) {
        s = Subspace::span_rows(append_row(s.basis, w, p));
        work.push_back(std::move(w));
      }
    }
  }
  return s;
}

}  // namespace

Subspace spin(const Module& m, const std::vector<std::vector<u32>>& vectors) {
  return close_under(m.p(), m.dim(), m.gen_actions(), vectors);
}

Subspace invariants(const Module& m, const GroupSpec& h) {
  auto hg = make_group(h);
  require_subgroup(m, hg);
  const u32 p = m.p();
  const std::size_t d = m.dim();
  FpMatrix sys(p, hg->gens.size() * d, d);
  for (std::size_t t = 0; t < hg->gens.size(); ++t) {
    const FpMatrix k = mat_sub(m.act(hg->gens[t]), FpMatrix::identity(p, d));
    std::copy(k.e.begin(), k.e.end(), sys.e.begin() + t * d * d);
  }
  return Subspace{p, d, kernel_basis(sys)};
}

Subspace augmentation_span(const Module& m, const GroupSpec& h) {
  auto hg = make_group(h);
  require_subgroup(m, hg);
  const u32 p = m.p();
  const std::size_t d = m.dim();
  // Span of (g-1)v over all g in h is the h-closure of the generator images.
  std::vector<FpMatrix> hacts;
  std::vector<std::vector<u32>> seeds;
  for (const Mat2& g : hg->gens) {
    const FpMatrix k = mat_sub(m.act(g), FpMatrix::identity(p, d));
    for (std::size_t j = 0; j < d; ++j) seeds.push_back(k.col(j));
    hacts.push_back(m.act(g));
  }
  return close_under(p, d, hacts, seeds);
}

std::size_t coinvariants_dim(const Module& m, const GroupSpec& h) {
  return m.dim() - augmentation_span(m, h).dim();
}

}  // namespace socle
