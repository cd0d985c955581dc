#pragma once

#include <socle/module.hpp>

#include <compare>
#include <string>
#include <vector>

namespace socle {

// A simple module of one of the finite groups in scope, named by parameters:
//   WEIGHT      Sym^a ⊗ det^b of GL2/SL2 (b = 0 for SL2), inflated to level N;
//   TORUS_CHAR  the character diag-part (a,b) of a congruence/triangular group;
//   S_CHAR      the determinant-one lower-triangular character with exponent a;
//   TRIVIAL     the one-dimensional trivial module (p-groups have no other).
enum class LabelKind : u32 { WEIGHT = 0, TORUS_CHAR = 1, S_CHAR = 2, TRIVIAL = 3 };

struct SimpleLabel {
  LabelKind kind = LabelKind::TRIVIAL;
  u32 a = 0;
  u32 b = 0;
  auto operator<=>(const SimpleLabel&) const = default;
  std::string name() const;
};

SimpleLabel weight_label(u32 r, u32 m);
SimpleLabel torus_label_of(const CharacterSpec& chi);

struct LayerEntry {
  SimpleLabel label;
  u32 mult = 0;
  auto operator<=>(const LayerEntry&) const = default;
};

// One semisimple layer: constituents sorted by label, multiplicities positive.
using Layer = std::vector<LayerEntry>;

// Socle filtration, outermost socle first: layers[0] = soc(M),
// layers[1] = soc(M/soc(M)), ...
struct SocleFiltration {
  u32 p = 0;
  std::vector<Layer> layers;
  bool operator==(const SocleFiltration&) const = default;
  std::size_t layer_dim(std::size_t i) const;
  std::size_t total_dim() const;
  std::size_t constituent_count() const;
  std::string to_string() const;
};

std::string layer_to_string(const Layer& layer);

// Dimension of the simple module a label denotes.
std::size_t label_dim(const SimpleLabel& label);

// The complete list of isomorphism classes of simple modules for the group, in
// canonical (sorted) order.  Completeness rests on the normal p-core argument:
// every simple factors through the reductive level-one quotient.
std::vector<SimpleLabel> simple_catalog(const GroupSpec& gs);

// Construct the simple module a label denotes, as a module of the given group.
Module simple_module(const SimpleLabel& label, const GroupSpec& gs);

// Generators of the largest normal p-subgroup (empty when it is trivial).
std::vector<Mat2> normal_p_core_gens(const GroupSpec& gs);

// Full socle filtration by iterated socle-of-quotient.  Throws if the catalog
// fails to exhaust the module (impossible by theory; acts as a self-check).
SocleFiltration socle_filtration(const Module& m);

struct RadicalCosocle {
  Subspace radical;  // intersection of kernels of all maps onto simples
  Layer cosocle;     // constituents of M/radical with multiplicities
};
RadicalCosocle radical_cosocle(const Module& m);

bool is_uniserial(const SocleFiltration& fil);
bool is_uniserial(const Module& m);

// The unique catalog label with a nonzero Hom into the given simple module.
// Throws when no label or more than one label matches.
SimpleLabel identify_weight(const Module& simple);

}  // namespace socle
