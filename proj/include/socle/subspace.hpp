#pragma once

#include <utility>

#include "socle/fp_matrix.hpp"

namespace socle {

// Subspace of F_p^n held as a canonical RREF basis (rows = basis vectors),
// so two subspaces are equal as sets iff their representations are identical.
struct Subspace {
  u32 p = 0;
  std::size_t ambient = 0;
  FpMatrix basis;  // RREF, full row rank, no zero rows

  static Subspace zero(u32 p, std::size_t ambient);
  static Subspace full(u32 p, std::size_t ambient);
  // Canonicalizes an arbitrary spanning set given as matrix rows.
  static Subspace span_rows(const FpMatrix& vectors);

  std::size_t dim() const { return basis.rows; }
  bool contains(const std::vector<u32>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace&) const = default;
};

// Residue of v after reduction by the basis; zero iff v lies in the subspace.
std::vector<u32> reduce_mod(const Subspace& s, std::vector<u32> v);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
// Both at once (single Zassenhaus elimination).
std::pair<Subspace, Subspace> subspace_sum_intersect(const Subspace& u, const Subspace& v);

}  // namespace socle
