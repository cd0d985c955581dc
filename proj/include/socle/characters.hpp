#pragma once

#include <string>
#include <utility>

#include "socle/residue_matrix.hpp"

namespace socle {

// A mod-p character of an upper-congruence group (lower-left entry divisible
// by p), evaluated through the mod-p reduction:
//   g = (a,b;c,d) |-> dbar^n * (abar/dbar)^e * det(gbar)^t   in F_p^x.
// Exponents live mod p-1 and are stored reduced.
struct CharacterSpec {
  u32 p = 0;
  u32 n = 0;  // power of the lower-right entry
  u32 e = 0;  // power of a/d
  u32 t = 0;  // power of det

  u32 eval(const Mat2& g) const;

  // (alpha, delta) with eval(diag(a,d)) = a^alpha * d^delta; two specs define
  // the same map on every upper-congruence group iff the labels agree.
  std::pair<u32, u32> torus_label() const;
  bool same_map(const CharacterSpec& o) const;

  CharacterSpec times(const CharacterSpec& o) const;
  CharacterSpec power(i64 k) const;
  bool is_trivial() const;

  std::string name() const;  // by torus label

  bool operator==(const CharacterSpec&) const = default;
  auto operator<=>(const CharacterSpec&) const = default;
};

// d^n.
CharacterSpec chi_s(u32 p, i64 n);
// a/d.
CharacterSpec frak_a(u32 p);
// det.
CharacterSpec det_char(u32 p);
// a^alpha * d^delta on the torus, extended by inflation.
CharacterSpec torus_char(u32 p, i64 alpha, i64 delta);

}  // namespace socle
