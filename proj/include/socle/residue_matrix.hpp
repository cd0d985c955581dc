#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <numeric>

#include "socle/fp.hpp"

namespace socle {

// 2x2 matrix over Z/q (q a prime power in practice), entries reduced in [0, q).
// q must stay below 2^16 so that key() packs losslessly.
struct Mat2 {
  u32 q = 0;
  std::array<u32, 4> a{};  // row-major [a00 a01; a10 a11]

  static Mat2 id(u32 q) { return {q, {1 % q, 0, 0, 1 % q}}; }
  static Mat2 scalar(u32 q, i64 c) {
    const u32 r = mod_reduce(c, q);
    return {q, {r, 0, 0, r}};
  }
  static Mat2 of(u32 q, i64 x00, i64 x01, i64 x10, i64 x11) {
    return {q, {mod_reduce(x00, q), mod_reduce(x01, q), mod_reduce(x10, q), mod_reduce(x11, q)}};
  }

  u32 at(int i, int j) const { return a[2 * i + j]; }

  u32 det() const { return mod_sub(mod_mul(a[0], a[3], q), mod_mul(a[1], a[2], q), q); }
  bool invertible() const { return std::gcd(det(), q) == 1; }

  // Adjugate divided by the determinant; only valid when invertible().
  Mat2 inv() const {
    const u32 d = mod_inv(det(), q);
    return {q,
            {mod_mul(a[3], d, q), mod_mul(mod_sub(0, a[1], q), d, q),
             mod_mul(mod_sub(0, a[2], q), d, q), mod_mul(a[0], d, q)}};
  }

  // Entrywise projection Z/q -> Z/q2 for q2 dividing q.
  Mat2 reduce_to(u32 q2) const { return {q2, {a[0] % q2, a[1] % q2, a[2] % q2, a[3] % q2}}; }

  u64 key() const {
    return static_cast<u64>(a[0]) | (static_cast<u64>(a[1]) << 16) |
           (static_cast<u64>(a[2]) << 32) | (static_cast<u64>(a[3]) << 48);
  }

  bool operator==(const Mat2&) const = default;
  auto operator<=>(const Mat2&) const = default;
};

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
  const u32 q = x.q;
  return {q,
          {mod_add(mod_mul(x.a[0], y.a[0], q), mod_mul(x.a[1], y.a[2], q), q),
           mod_add(mod_mul(x.a[0], y.a[1], q), mod_mul(x.a[1], y.a[3], q), q),
           mod_add(mod_mul(x.a[2], y.a[0], q), mod_mul(x.a[3], y.a[2], q), q),
           mod_add(mod_mul(x.a[2], y.a[1], q), mod_mul(x.a[3], y.a[3], q), q)}};
}

struct Mat2Hash {
  std::size_t operator()(const Mat2& m) const { return std::hash<u64>()(m.key()); }
};

}  // namespace socle
