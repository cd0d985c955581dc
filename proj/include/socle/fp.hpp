#pragma once

#include <cstdint>

namespace socle {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Reduce an arbitrary signed value into [0, m).
constexpr u32 mod_reduce(i64 x, u32 m) {
  i64 r = x % static_cast<i64>(m);
  return static_cast<u32>(r < 0 ? r + static_cast<i64>(m) : r);
}

constexpr u32 mod_add(u32 a, u32 b, u32 m) { return (a + b) % m; }

constexpr u32 mod_sub(u32 a, u32 b, u32 m) { return (a + m - b % m) % m; }

constexpr u32 mod_mul(u32 a, u32 b, u32 m) {
  return static_cast<u32>(static_cast<u64>(a) * b % m);
}

constexpr u32 mod_pow(u32 a, u64 e, u32 m) {
  u64 base = a % m, acc = 1 % m;
  while (e) {
    if (e & 1) acc = acc * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<u32>(acc);
}

constexpr u64 ipow(u64 b, u32 e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

// Inverse of a unit modulo m; m need not be prime (extended Euclid).
// Throws if gcd(a, m) != 1.
u32 mod_inv(u32 a, u32 m);

bool is_prime(u32 n);

// Smallest generator of (Z/p)^x, then adjusted so it also generates (Z/p^N)^x.
u32 primitive_root(u32 p, u32 n);

}  // namespace socle
