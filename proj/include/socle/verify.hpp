#pragma once

#include <socle/filtration.hpp>

#include <optional>
#include <string>
#include <vector>

namespace socle {

enum class TruncationFamily { PRINCIPAL_SERIES, STEINBERG, SUPERSINGULAR };

struct VerifyReport {
  std::string check;
  u32 p = 0;
  u32 r = 0;
  u32 level = 1;
  std::string group;  // "gl" or "sl"
  SocleFiltration computed;
  std::string expected;  // human-readable expected pattern
  bool pass = false;
  bool report_only = false;  // outcome map deliverable; excluded from exit status
  std::vector<std::string> notes;
};

// ---- building blocks ----------------------------------------------------

// ind of chi_r^s from the full-depth congruence level to GL2(Z/p^N).
Module principal_series_trunc(u32 p, u32 r, u32 level);

// The uniserial tower: ind of chi_r^s from depth-N to depth-1 lower-triangular
// congruence level, dimension p^{N-1}.
Module tower_module(u32 p, u32 r, u32 level);

// Depth-2 tower bottom: non-split extension of chi_r^s a by chi_r^s in the
// normalized basis (e0, e1) with (1,0;p,1) e1 = e1 + e0.
struct PaskuBasis {
  Module tower;         // the depth-2 tower the extension sits in
  Module e_module;      // the dimension-2 submodule
  Subspace e_space;     // its subspace of the tower
  std::vector<u32> e0;  // tower coordinates; spans the socle
  std::vector<u32> e1;  // tower coordinates; normalized against e0
};
PaskuBasis build_pasku_E(u32 p, u32 r);

// The weight extension built from E by induction to GL2(Z/p^2), quotient by
// the radical of the induced bottom character block, and pullback of the
// chosen constituent above it.  For r = 2 pass two_variant 0 or p-1.
struct ExtensionData {
  Module big_quotient;      // ind(E) / (radical of the induced character block)
  Module er;                // the extension itself, submodule of big_quotient
  Subspace er_space;        // its subspace of big_quotient
  Subspace bottom_space;    // the bottom weight subspace, in big_quotient coords
  SimpleLabel bottom;       // socle weight
  SimpleLabel top;          // cosocle weight
  std::vector<u32> f0_e1;   // image of F_0(e1), big_quotient coords
  std::vector<u32> fp1_e0;  // image of F_{p-1}(e0), big_quotient coords
  std::vector<std::vector<u32>> f_e0;  // images of F_l(e0), l = 0..p-1
};
ExtensionData build_E_r(u32 p, u32 r, std::optional<u32> two_variant = {});

// Expected layer patterns assembled from engine-computed level-one blocks.
struct ExpectedPattern {
  SocleFiltration fil;                  // concatenated block layers
  std::vector<std::size_t> block_sizes; // number of layers contributed per block
};
ExpectedPattern expected_sequence(TruncationFamily family, u32 p, u32 r,
                                  std::size_t blocks, bool over_sl);

// The two level-one shapes of ind chi_r^s over GL2(F_p).
SocleFiltration expected_bp(u32 p, u32 r);

// ---- verifiers ----------------------------------------------------------

VerifyReport verify_bp_structure(u32 p, u32 r);
VerifyReport verify_tower_uniserial(u32 p, u32 r, u32 level);
VerifyReport verify_pasku(u32 p, u32 r);
VerifyReport verify_unipotent_uniserial(u32 p, u32 r);
VerifyReport verify_nonsplit_sl(u32 p, u32 r);
VerifyReport verify_theorem1(u32 p, u32 r, u32 level, bool over_sl);
VerifyReport verify_theorem2(u32 p, u32 level);
VerifyReport verify_theorem3(u32 p, u32 r, u32 level);
VerifyReport verify_f_identities(u32 p, u32 r);
VerifyReport verify_brauer_pattern(u32 p, u32 r, u32 level);

}  // namespace socle
