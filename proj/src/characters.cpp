#include "socle/characters.hpp"

#include <stdexcept>

namespace socle {

namespace {
u32 red(i64 k, u32 p) { return mod_reduce(k, p - 1); }
}  // namespace

u32 CharacterSpec::eval(const Mat2& g) const {
  const u32 a = g.a[0] % p, c = g.a[2] % p, d = g.a[3] % p;
  const auto [alpha, delta] = torus_label();
  if (c != 0) {
    // Only pure determinant powers extend past the congruence domain.
    if (alpha != delta)
      throw std::domain_error("character evaluated outside its congruence domain");
    const u32 det = g.det() % p;
    if (det == 0) throw std::domain_error("character evaluated on a singular reduction");
    return mod_pow(det, alpha, p);
  }
  if (a == 0 || d == 0) throw std::domain_error("character evaluated on a singular reduction");
  return mod_mul(mod_pow(a, alpha, p), mod_pow(d, delta, p), p);
}

std::pair<u32, u32> CharacterSpec::torus_label() const {
  return {red(static_cast<i64>(e) + t, p), red(static_cast<i64>(n) - e + t, p)};
}

bool CharacterSpec::same_map(const CharacterSpec& o) const {
  return p == o.p && torus_label() == o.torus_label();
}

CharacterSpec CharacterSpec::times(const CharacterSpec& o) const {
  if (p != o.p) throw std::invalid_argument("character product across different primes");
  return {p, red(static_cast<i64>(n) + o.n, p), red(static_cast<i64>(e) + o.e, p),
          red(static_cast<i64>(t) + o.t, p)};
}

CharacterSpec CharacterSpec::power(i64 k) const {
  const i64 kk = mod_reduce(k, p - 1);
  return {p, red(static_cast<i64>(n) * kk, p), red(static_cast<i64>(e) * kk, p),
          red(static_cast<i64>(t) * kk, p)};
}

bool CharacterSpec::is_trivial() const { return torus_label() == std::pair<u32, u32>{0, 0}; }

std::string CharacterSpec::name() const {
  const auto [alpha, delta] = torus_label();
  return "chi(" + std::to_string(alpha) + "," + std::to_string(delta) + ")";
}

CharacterSpec chi_s(u32 p, i64 n) { return {p, red(n, p), 0, 0}; }

CharacterSpec frak_a(u32 p) { return {p, 0, 1 % (p - 1), 0}; }

CharacterSpec det_char(u32 p) { return {p, 0, 0, 1 % (p - 1)}; }

CharacterSpec torus_char(u32 p, i64 alpha, i64 delta) {
  return {p, red(alpha + delta, p), red(alpha, p), 0};
}

}  // namespace socle
