#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "socle/fp.hpp"

namespace socle {

// Dense matrix over F_p; entries stored reduced in [0, p), row-major.
struct FpMatrix {
  u32 p = 0;
  std::size_t rows = 0, cols = 0;
  std::vector<u32> e;

  FpMatrix() = default;
  FpMatrix(u32 p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), e(r * c, 0) {}

  u32& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
  u32 at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

  std::vector<u32> row(std::size_t i) const;
  std::vector<u32> col(std::size_t j) const;
  void set_row(std::size_t i, const std::vector<u32>& v);

  static FpMatrix identity(u32 p, std::size_t n);
  static FpMatrix from_rows(u32 p, const std::vector<std::vector<u32>>& rows);

  bool operator==(const FpMatrix&) const = default;
  auto operator<=>(const FpMatrix&) const = default;
};

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b);
FpMatrix mat_add(const FpMatrix& a, const FpMatrix& b);
FpMatrix mat_sub(const FpMatrix& a, const FpMatrix& b);
FpMatrix mat_scale(const FpMatrix& a, u32 c);
FpMatrix mat_pow(const FpMatrix& a, u64 k);
FpMatrix transpose(const FpMatrix& a);
FpMatrix kron(const FpMatrix& a, const FpMatrix& b);
FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);
std::vector<u32> mat_vec(const FpMatrix& a, const std::vector<u32>& v);

struct RrefResult {
  FpMatrix r;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

// Unique reduced row-echelon form; row space preserved.
RrefResult rref(const FpMatrix& a);
std::size_t rank_of(const FpMatrix& a);

// Null space {x : A x = 0}; rows of the result form a canonical (RREF) basis.
FpMatrix kernel_basis(const FpMatrix& a);

// One solution of A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<u32>> solve(const FpMatrix& a, const std::vector<u32>& b);

}  // namespace socle
