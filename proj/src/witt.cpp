#include "socle/witt.hpp"

#include <stdexcept>

#include "socle/fp_matrix.hpp"

namespace socle {

u32 teichmuller(u32 a, u32 p, u32 n) {
  const u32 q = static_cast<u32>(ipow(p, n));
  u32 x = a % q;
  if (x % p == 0) {
    if (x != 0) throw std::invalid_argument("teichmuller: argument neither unit nor zero");
    return 0;
  }
  // x -> x^p converges to the fixed point of Frobenius; n-1 steps suffice mod p^n.
  for (u32 i = 1; i < n; ++i) x = mod_pow(x, p, q);
  return x;
}

u32 witt_carry(u32 l0, u32 mu, u32 p) {
  const u32 q = p * p;
  const u32 s = mod_add(teichmuller(l0, p, 2), teichmuller(mu, p, 2), q);
  const u32 t = teichmuller((l0 + mu) % p, p, 2);
  const u32 d = mod_sub(s, t, q);
  if (d % p != 0) throw std::logic_error("witt_carry: lift difference not divisible by p");
  return (d / p) % p;
}

std::vector<u32> interpolate(const std::vector<u32>& xs, const std::vector<u32>& ys, u32 p) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("interpolate: mismatched point counts");
  FpMatrix v(p, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    u32 t = 1 % p;
    for (std::size_t j = 0; j < n; ++j) {
      v.at(i, j) = t;
      t = mod_mul(t, xs[i] % p, p);
    }
  }
  auto c = solve(v, [&] {
    std::vector<u32> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = ys[i] % p;
    return b;
  }());
  if (!c) throw std::invalid_argument("interpolate: nodes not distinct mod p");
  return *c;
}

}  // namespace socle
