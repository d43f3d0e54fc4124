#pragma once

// Rank-2 Dieudonne O-modules presented slot by slot.
//
// Convention: with (X_i, Y_i) the basis of the slot M^i,
//     (F X_{i-1}, F Y_{i-1})^T = A[i] (X_i, Y_i)^T,      indices mod f.
// So the rows of A[i] are the images of the slot i-1 basis, written in the
// slot i basis. V is never stored: V maps M^i to M^{i-1} with matrix
// sigma^{-1}(p A[i]^{-1}).
//
// Worked example: f = 1, e = 2, A[0] = [[0, pi], [pi, 0]] means F X = pi Y and
// F Y = pi X. Then p A^{-1} = [[0, pi], [pi, 0]] as well, det A = -p.

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "dieu/arith.hpp"

namespace dieu {

struct Mat2 {
  std::array<std::array<RamElem, 2>, 2> m;

  static Mat2 zero(const CoeffTower& t);
  static Mat2 identity(const CoeffTower& t);
  static Mat2 of(RamElem a, RamElem b, RamElem c, RamElem d);

  const RamElem& operator()(int r, int c) const { return m[r][c]; }
  RamElem& operator()(int r, int c) { return m[r][c]; }
  const CoeffTower& tower() const { return m[0][0].tower(); }

  Mat2 operator*(const Mat2& o) const;
  Mat2 operator+(const Mat2& o) const;
  Mat2 operator*(const RamElem& s) const;
  bool operator==(const Mat2& o) const;
  bool equal_mod_pk(const Mat2& o, int k) const;

  RamElem det() const;
  RamElem trace() const;
  Mat2 adj() const;
  Mat2 transpose() const;
  Mat2 frobenius(int n) const;
  Mat2 mod_p() const;  // entries in the residue tower k[pi]/(pi^e)
  Val min_ord() const;
};

enum class PolMode { separable, general };

struct DModule {
  std::shared_ptr<const CoeffTower> tower;
  std::vector<Mat2> A;
  std::optional<std::vector<RamElem>> delta;
  PolMode mode = PolMode::separable;
  // Effective p-adic precision of the stored entries (N for direct input,
  // lower for modules derived through divisions).
  int precision = 0;
  std::vector<int> det_ords;
  int det_sum = 0;

  int f() const { return static_cast<int>(A.size()); }
  int e() const { return tower->e(); }
  int g() const { return tower->g(); }
  const Mat2& slot(int i) const;  // index taken mod f
};

// Validates and records the determinant valuations. Throws v_nonintegral,
// pairing_incompatible, degenerate_pairing, det_budget or shape.
DModule build_module(std::shared_ptr<const CoeffTower> tower, std::vector<Mat2> A,
                     std::optional<std::vector<RamElem>> delta = std::nullopt,
                     PolMode mode = PolMode::separable, int precision = 0);

// Splits x = pi^v * u with u a unit. Throws if x is zero at working precision.
std::pair<int, RamElem> pi_split(const RamElem& x);

// p / x for x of valuation at most e (the result is integral).
RamElem p_over(const RamElem& x);

// p * A^{-1}; throws v_nonintegral (with the slot if given) when not integral.
Mat2 p_times_inverse(const Mat2& A, std::optional<int> slot = std::nullopt);

// Matrix of F^f on slot b: A[b+1]^(f-1) A[b+2]^(f-2) ... A[b+f]^(0).
Mat2 twisted_power(const DModule& M, int base_slot);

// Minimal entry valuation m_n of B_n = B^(f(n-1)) ... B^(f) B with B the
// twisted power at slot 0. Values at or beyond the module's precision come
// back as infinity ("precision exhausted").
Val iterate_twisted(const DModule& M, int n);
// m_n for n = 1, 2, 4, ..., 2^k, computed by repeated doubling.
std::vector<Val> iterate_twisted_doubling(const DModule& M, int k);

struct ModPair {
  std::vector<Mat2> F;  // F[i] = A[i] mod p
  std::vector<Mat2> V;  // V[i] = sigma^{-1}(p A[i]^{-1}) mod p, the map M^i -> M^{i-1}
};
ModPair reduce_mod_p(const DModule& M);

// Dual module: A_dual[i] = (p A[i]^{-1})^T with pairing delta_dual[i] = pi^s / delta[i].
DModule dual_module(const DModule& M);

}  // namespace dieu
