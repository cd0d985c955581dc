#pragma once

#include <memory>
#include <string>
#include <vector>

#include "socle/characters.hpp"
#include "socle/fp_matrix.hpp"
#include "socle/groups.hpp"
#include "socle/subspace.hpp"

namespace socle {

class ModuleImpl;

// Handle to a finite-dimensional F_p-representation of a FiniteGroup.  The
// action is an oracle valid on arbitrary group elements (cached per element),
// so restriction is re-evaluation rather than word rewriting.
class Module {
 public:
  Module() = default;
  explicit Module(std::shared_ptr<const ModuleImpl> impl) : impl_(std::move(impl)) {}

  bool valid() const { return impl_ != nullptr; }
  const GroupPtr& group() const;
  std::size_t dim() const;
  u32 p() const;
  // Matrix of g on column coordinates; g must lie in group().
  const FpMatrix& act(const Mat2& g) const;
  const std::vector<FpMatrix>& gen_actions() const;
  std::string describe() const;

  const std::shared_ptr<const ModuleImpl>& impl() const { return impl_; }

 private:
  std::shared_ptr<const ModuleImpl> impl_;
};

// Sym^r tensor det^m inflated from the residue field; m must be 0 over
// determinant-one kinds and is reduced mod p-1 otherwise.
Module weight_module(u32 p, u32 r, u32 m, const GroupSpec& gspec);

// The depth-n twisted symmetric power on K0(p^n) at level N > n: the matrix
// (a,b;p^n c,d) acts through the mod-p reduction of (a, p^n b; c, d).
Module sigma_rn_module(u32 p, u32 r, u32 n, u32 level);

// One-dimensional module given by a character; the group must keep the
// lower-left entry divisible by p.
Module character_module(const CharacterSpec& chi, const GroupSpec& gspec);

// Compact-induction model: basis symbols [rep_i, v_k]; the action permutes
// coset blocks by g * rep_i = rep_j * h and applies h on the inducing module.
Module induce(const GroupSpec& big, const Module& m);

Module restrict_to(const Module& m, const GroupSpec& subgroup);
Module twist(const Module& m, const CharacterSpec& chi);
Module direct_sum(const Module& a, const Module& b);
// Dual space with act(g) = transpose of act(g^{-1}).
Module contragredient(const Module& m);

// Subquotients carry base-changed oracles; both verify invariance of s under
// every generator and throw if it fails.
Module sub_module(const Module& m, const Subspace& s);
Module quotient_module(const Module& m, const Subspace& s);

// Smallest invariant subspace containing the given vectors.
Subspace spin(const Module& m, const std::vector<std::vector<u32>>& vectors);

// Fixed vectors / span of (act(g)-1)v over generators of h (h inside group).
Subspace invariants(const Module& m, const GroupSpec& h);
Subspace augmentation_span(const Module& m, const GroupSpec& h);
std::size_t coinvariants_dim(const Module& m, const GroupSpec& h);

// Hom_G(s, m): each element is a dim(m) x dim(s) matrix intertwining the two
// actions; the returned list is a basis.
std::vector<FpMatrix> hom_space(const Module& s, const Module& m);
std::size_t hom_dim(const Module& s, const Module& m);
// Sum of images of all equivariant maps s -> m.
Subspace isotypic_image(const Module& s, const Module& m);

// Quotient-module introspection: coordinates of the class of an ambient
// vector, the canonical lift of quotient coordinates (zero at the pivot
// columns of the denominator), and the denominator subspace itself.
std::vector<u32> quotient_project(const Module& quot, const std::vector<u32>& ambient);
std::vector<u32> quotient_lift(const Module& quot, const std::vector<u32>& coords);
const Subspace& quotient_denominator(const Module& quot);

// Induced-module introspection.
const CosetSystem& induced_cosets(const Module& ind);
const Module& induced_base(const Module& ind);
// Coordinates of the symbol [rep_index, v].
std::vector<u32> induced_symbol(const Module& ind, std::size_t rep_index,
                                const std::vector<u32>& v);

// F_ell(v) = sum over l0 in F_p of l0^ell * ([l0],1;1,0) applied to [1, v],
// with 0^0 = 1; requires the inducing subgroup to be of Iwahori type so the
// transversal is the identity plus the Weyl row.
std::vector<u32> f_ell_element(const Module& ind, u32 ell, const std::vector<u32>& v);

}  // namespace socle
