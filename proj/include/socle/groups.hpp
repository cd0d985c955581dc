#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "socle/residue_matrix.hpp"

namespace socle {

// Finite congruence subgroups of GL_2(Z/p^N).  The *_FP kinds live at level 1
// only.  K0 carries a congruence depth m (lower-left entry divisible by p^m);
// IWAHORI is K0 at depth 1.
enum class GroupKind {
  GL2,
  SL2,
  K0,
  IWAHORI,
  IWAHORI_S,
  PRO_P_IWAHORI_S,
  U_UPPER,
  Z1,
  BOREL_FP,
  U_FP,
  TORUS_FP,
};

const char* kind_name(GroupKind k);

struct GroupSpec {
  GroupKind kind{};
  u32 p = 0;
  u32 level = 1;  // N: entries live in Z/p^N
  u32 depth = 0;  // m for K0; ignored elsewhere

  u32 modulus() const { return static_cast<u32>(ipow(p, level)); }
  std::string name() const;
  bool operator==(const GroupSpec&) const = default;
  auto operator<=>(const GroupSpec&) const = default;
};

bool member_of(const GroupSpec& s, const Mat2& g);
std::vector<Mat2> generators_of(const GroupSpec& s);
u64 expected_order(const GroupSpec& s);

// Largest order for which the element list is materialized by closure.
inline constexpr u64 kEnumerationBound = 1000000;

struct FiniteGroup {
  GroupSpec spec;
  std::vector<Mat2> gens;
  u64 order = 0;               // from the order formula, always set
  std::vector<Mat2> elements;  // BFS closure order; empty above the bound

  bool is_member(const Mat2& g) const { return member_of(spec, g); }
  // Uniform over the element list when materialized, else a fixed-length
  // random word in the generators.
  Mat2 random_element(std::mt19937& rng) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Cached constructor.  Validates the spec, checks every generator against the
// membership predicate, and when the expected order is within the enumeration
// bound runs the closure and insists it match the order formula exactly.
GroupPtr make_group(const GroupSpec& spec);

// Breadth-first closure of g.gens; every element produced must satisfy the
// membership predicate.  Returns the closure size.
u64 closure_check(const FiniteGroup& g);

// The matrix ([l],1;1,0) over Z/p^level with [l] the multiplicative lift.
Mat2 coset_w(u32 lambda0, u32 p, u32 level);

// Left transversal: big = union over reps of rep * small.
struct CosetSystem {
  GroupSpec big, small;
  std::vector<Mat2> reps;

  struct Location {
    std::size_t index;
    Mat2 hpart;  // x == reps[index] * hpart with hpart in small
  };
  Location locate(const Mat2& x) const;
};

CosetSystem coset_system(const GroupSpec& big, const GroupSpec& small);

}  // namespace socle
