#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dieu/invariants.hpp"

namespace dieu {

// S(g) in increasing order.
std::vector<NewtonPoint> admissible_slopes(int g);

// Cyclic spacing: a^i a^{i+1} = 0 for all i mod f (for f = 1 this forces a = 0).
bool is_spaced(const std::vector<int>& a);

// max |b| over spaced b <= a.
int lambda_exhaustive(const std::vector<int>& a);
int lambda_dp(const std::vector<int>& a);

struct StratumRecord {
  std::vector<int> a;
  int dim = 0;
  bool spaced = false;
  int lambda = 0;
  NewtonPoint generic_slope_lower;
  std::optional<NewtonPoint> generic_slope_exact;  // spaced types only
};

StratumRecord stratum_record(const std::vector<int>& a, int e);

struct ATypePoset {
  int e = 1;
  int f = 1;
  std::vector<StratumRecord> nodes;           // lexicographic order
  std::vector<std::pair<int, int>> covers;    // (lower, upper) node indices
};

inline constexpr long long kDefaultSizeCap = 1000000;

// Throws size_guard when (e+1)^f exceeds the cap.
ATypePoset atype_poset(int e, int f, long long size_cap = kDefaultSizeCap);
std::string poset_dot(const ATypePoset& P);

// g - 2 sum_i min(e^i_1, e^i_2); throws det_budget unless the Lie type sums to g.
int dp_stratum_dim(const LieType& L, int e);

struct DeformationDims {
  int unrestricted = 0;
  int dp = 0;
  int polarized = 0;
  bool dp_matches_unrestricted = true;
};
DeformationDims deformation_dims(const LieType& L, int e);

enum class Rotation { fixed, minimize };
// Exponent D of the minimal quasi-polarization degree p^D. `fixed` evaluates
// the formula with slot 0 taken as the minimum as given; `minimize` first
// moves the slot of minimal pairing valuation to index 0.
int polarization_degree_exponent(const LieType& L, int e, Rotation rot = Rotation::minimize);

// ceil(m) for m in S(g).
int newton_stratum_codim(const NewtonPoint& m);

using Pattern = std::vector<SlotPair>;
// Superspecial a-type = Lie type patterns. With reduce = true, patterns are
// identified under rotation of the cycle and swapping e1 and e2.
std::vector<Pattern> superspecial_types(int e, int f, bool reduce = true);

struct DetIdentityReport {
  int n = 0, m1 = 0, m2 = 0;
  bool symbolic_ok = false;
  int trials = 0;
  int failures = 0;
};
// Checks det(U + N) = Y_1^n + sum_k Tr_{k-1}(N) U_{1,k} for a square-zero N.
// With m2 > 0 the block form is used: U = diag(U_m1, U_m2), only the diagonal
// blocks of N enter the traces, and U_{1,k} is the Toeplitz cofactor of U_n.
// Passing toeplitz_cofactor = false uses the cofactor of the block matrix
// itself, which vanishes for k > m1 and breaks the identity when m2 > m1.
DetIdentityReport verify_det_identity(int m1, int m2, int trials, Rng& rng, u64 p = 101,
                                      bool toeplitz_cofactor = true);

}  // namespace dieu
