#pragma once

#include <vector>

#include "socle/fp.hpp"

namespace socle {

// Multiplicative lift [a] in Z/p^n: the unique root of x^p = x congruent to a
// mod p.  Extended by [0] = 0.
u32 teichmuller(u32 a, u32 p, u32 n);

// Carry of multiplicative lifts: the residue P(l0, mu) mod p defined by
// [l0] + [mu] = [l0 + mu] + p * P(l0, mu)  in Z/p^2.
u32 witt_carry(u32 l0, u32 mu, u32 p);

// Coefficients (constant term first, length = xs.size()) of the unique
// polynomial of degree < xs.size() through the points (xs[i], ys[i]) over F_p.
// The xs must be pairwise distinct mod p.
std::vector<u32> interpolate(const std::vector<u32>& xs, const std::vector<u32>& ys, u32 p);

}  // namespace socle
