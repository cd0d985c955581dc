#include "socle/subspace.hpp"

#include <stdexcept>

namespace socle {

Subspace Subspace::zero(u32 p, std::size_t ambient) {
  Subspace s;
  s.p = p;
  s.ambient = ambient;
  s.basis = FpMatrix(p, 0, ambient);
  return s;
}

Subspace Subspace::full(u32 p, std::size_t ambient) {
  Subspace s;
  s.p = p;
  s.ambient = ambient;
  s.basis = FpMatrix::identity(p, ambient);
  return s;
}

Subspace Subspace::span_rows(const FpMatrix& vectors) {
  RrefResult rr = rref(vectors);
  Subspace s;
  s.p = vectors.p;
  s.ambient = vectors.cols;
  s.basis = FpMatrix(vectors.p, rr.rank, vectors.cols);
  std::copy(rr.r.e.begin(), rr.r.e.begin() + rr.rank * vectors.cols, s.basis.e.begin());
  return s;
}

std::vector<u32> reduce_mod(const Subspace& s, std::vector<u32> v) {
  if (v.size() != s.ambient) throw std::invalid_argument("reduce_mod: ambient mismatch");
  for (auto& x : v) x %= s.p;
  // Basis rows are RREF with unit pivots: subtract v[pivot] * row per row.
  for (std::size_t i = 0; i < s.basis.rows; ++i) {
    std::size_t c = 0;
    while (c < s.ambient && s.basis.at(i, c) == 0) ++c;
    if (c == s.ambient) continue;
    u32 f = v[c] % s.p;
    if (!f) continue;
    u32 g = s.p - f;
    for (std::size_t j = c; j < s.ambient; ++j)
      v[j] = (v[j] + mod_mul(g, s.basis.at(i, j), s.p)) % s.p;
  }
  return v;
}

bool Subspace::contains(const std::vector<u32>& v) const {
  auto r = reduce_mod(*this, v);
  for (u32 x : r)
    if (x % p) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient != ambient) return false;
  for (std::size_t i = 0; i < other.basis.rows; ++i)
    if (!contains(other.basis.row(i))) return false;
  return true;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.p != v.p || u.ambient != v.ambient)
    throw std::invalid_argument("subspace_sum: ambient mismatch");
  return Subspace::span_rows(vstack(u.basis, v.basis));
}

std::pair<Subspace, Subspace> subspace_sum_intersect(const Subspace& u, const Subspace& v) {
  if (u.p != v.p || u.ambient != v.ambient)
    throw std::invalid_argument("subspace_sum_intersect: ambient mismatch");
  const u32 p = u.p;
  const std::size_t n = u.ambient;
  // Zassenhaus: eliminate [[U|U],[V|0]]; left block spans the sum, and rows
  // whose left half vanished carry a basis of the intersection on the right.
  FpMatrix z(p, u.dim() + v.dim(), 2 * n);
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      z.at(i, j) = u.basis.at(i, j);
      z.at(i, n + j) = u.basis.at(i, j);
    }
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) z.at(u.dim() + i, j) = v.basis.at(i, j);
  RrefResult rr = rref(z);
  std::vector<std::vector<u32>> sum_rows, int_rows;
  for (std::size_t i = 0; i < rr.rank; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = rr.r.at(i, j) == 0;
    std::vector<u32> half(n);
    if (left_zero) {
      for (std::size_t j = 0; j < n; ++j) half[j] = rr.r.at(i, n + j);
      int_rows.push_back(std::move(half));
    } else {
      for (std::size_t j = 0; j < n; ++j) half[j] = rr.r.at(i, j);
      sum_rows.push_back(std::move(half));
    }
  }
  auto mk = [&](std::vector<std::vector<u32>>& rows) {
    if (rows.empty()) return Subspace::zero(p, n);
    return Subspace::span_rows(FpMatrix::from_rows(p, rows));
  };
  return {mk(sum_rows), mk(int_rows)};
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  return subspace_sum_intersect(u, v).second;
}

}  // namespace socle
