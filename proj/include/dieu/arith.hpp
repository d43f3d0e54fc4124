#pragma once

// Exact arithmetic in the tower
//   F_q  ->  W_N(F_q) = (Z/p^N)[T]/m(T)  ->  W_N(F_q)[pi]/(P(pi)),   q = p^(f*ext).
// The modulus m is the Teichmuller lift of a primitive polynomial, so T is a
// root of unity of order q-1 and Frobenius is the ring map T -> T^p.

#include <compare>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace dieu {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using Rng = std::mt19937_64;

// A valuation that may be infinite. Infinity means "zero at working precision".
class Val {
 public:
  constexpr Val() = default;
  constexpr explicit Val(int v) : v_(v) {}
  static constexpr Val infinity() {
    Val r;
    r.inf_ = true;
    return r;
  }
  constexpr bool is_inf() const { return inf_; }
  int value() const;  // throws on infinity
  constexpr int value_or(int fallback) const { return inf_ ? fallback : v_; }

  friend constexpr bool operator==(const Val& a, const Val& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend constexpr std::strong_ordering operator<=>(const Val& a, const Val& b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    return a.v_ <=> b.v_;
  }
  friend constexpr Val operator+(const Val& a, const Val& b) {
    if (a.inf_ || b.inf_) return infinity();
    return Val(a.v_ + b.v_);
  }
  std::string str() const;

 private:
  int v_ = 0;
  bool inf_ = false;
};

inline constexpr Val min(const Val& a, const Val& b) { return b < a ? b : a; }

namespace zmod {
inline u64 add(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}
inline u64 sub(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }
inline u64 neg(u64 a, u64 m) { return a == 0 ? 0 : m - a; }
inline u64 mul(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 pow(u64 a, u64 k, u64 m);
u64 from_signed(i64 a, u64 m);
// p-adic valuation of a residue in [0, p^N); returns N for zero.
int vp(u64 a, u64 p, int N);
// Inverse of a unit modulo m via extended Euclid; throws if not a unit.
u64 inv(u64 a, u64 m);
}  // namespace zmod

bool is_prime(u64 n);
std::vector<u64> prime_factors(u64 n);  // distinct, ascending
u64 checked_pow(u64 base, int exp);     // throws on overflow past 2^62

class CoeffTower;

class WittElem {
 public:
  WittElem() = default;
  explicit WittElem(const CoeffTower* t);

  const CoeffTower& tower() const { return *t_; }
  const CoeffTower* tower_ptr() const { return t_; }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 coeff(int k) const { return c_[k]; }

  bool is_zero() const;
  bool is_unit() const;
  Val ord_p() const;

  WittElem operator+(const WittElem& o) const;
  WittElem operator-(const WittElem& o) const;
  WittElem operator-() const;
  WittElem operator*(const WittElem& o) const;
  WittElem& operator+=(const WittElem& o) { return *this = *this + o; }
  WittElem& operator-=(const WittElem& o) { return *this = *this - o; }
  WittElem& operator*=(const WittElem& o) { return *this = *this * o; }
  WittElem scaled(u64 s) const;  // multiply by an element of Z/p^N
  bool operator==(const WittElem& o) const { return c_ == o.c_; }

  WittElem pow(u64 k) const;
  WittElem inverse() const;  // throws not_unit
  WittElem frobenius(int n = 1) const;
  // Exact division by p; the result is determined modulo p^(N-1).
  WittElem div_p() const;
  // Equality modulo p^k.
  bool equal_mod_pk(const WittElem& o, int k) const;

 private:
  friend class CoeffTower;
  const CoeffTower* t_ = nullptr;
  std::vector<u64> c_;
};

class RamElem {
 public:
  RamElem() = default;
  explicit RamElem(const CoeffTower* t);

  const CoeffTower& tower() const { return *t_; }
  const std::vector<WittElem>& coeffs() const { return c_; }
  const WittElem& coeff(int j) const { return c_[j]; }

  bool is_zero() const;
  bool is_unit() const;
  Val ord_pi() const;

  RamElem operator+(const RamElem& o) const;
  RamElem operator-(const RamElem& o) const;
  RamElem operator-() const;
  RamElem operator*(const RamElem& o) const;
  RamElem& operator+=(const RamElem& o) { return *this = *this + o; }
  RamElem& operator-=(const RamElem& o) { return *this = *this - o; }
  RamElem& operator*=(const RamElem& o) { return *this = *this * o; }
  RamElem operator*(const WittElem& w) const;
  bool operator==(const RamElem& o) const;

  RamElem pow(u64 k) const;
  RamElem inverse() const;  // throws not_unit
  RamElem frobenius(int n = 1) const;
  RamElem mul_pi() const;
  // Exact division by pi (requires ord_pi >= 1). Costs one pi-adic digit of precision.
  RamElem div_pi() const;
  bool equal_mod_pk(const RamElem& o, int k) const;

  // Reduction modulo p, as an element of k[pi]/(pi^e) in the residue tower.
  RamElem mod_p() const;

 private:
  friend class CoeffTower;
  const CoeffTower* t_ = nullptr;
  std::vector<WittElem> c_;
};

struct TowerParams {
  u64 p = 0;
  int f = 1;
  int e = 1;
  int ext = 1;
  int N = 1;
  // Coefficients a_0..a_{e-1} of P(pi) = pi^e + sum a_j pi^j. Empty means pi^e - p.
  std::vector<i64> eisenstein;
};

class CoeffTower {
 public:
  // Validating constructor: p prime, f,e,ext >= 1, e*N >= e*f + 2, p^N < 2^62.
  static std::shared_ptr<const CoeffTower> build(const TowerParams& params);
  static std::shared_ptr<const CoeffTower> build(u64 p, int f, int e, int ext, int N);
  // Same construction without the precision policy; used for the residue tower
  // and for scratch computations.
  static std::shared_ptr<const CoeffTower> build_unchecked(const TowerParams& params);

  CoeffTower(const CoeffTower&) = delete;
  CoeffTower& operator=(const CoeffTower&) = delete;

  u64 p() const { return p_; }
  int f() const { return f_; }
  int e() const { return e_; }
  int ext() const { return ext_; }
  int N() const { return N_; }
  int degree() const { return d_; }  // f * ext
  int g() const { return e_ * f_; }
  u64 pN() const { return pN_; }
  u64 q() const { return q_; }  // size of the residue field
  const std::vector<u64>& modulus() const { return modulus_; }  // monic, length d+1
  const std::vector<u64>& eisenstein() const { return eis_; }   // a_0..a_{e-1} mod p^N
  bool default_eisenstein() const { return default_eis_; }
  TowerParams params() const;

  // The tower with N = 1: arithmetic in F_q and in k[pi]/(pi^e).
  const CoeffTower& residue() const { return residue_ ? *residue_ : *this; }

  WittElem wzero() const;
  WittElem wone() const;
  WittElem wint(i64 a) const;
  WittElem wgen() const;  // residue class of T
  WittElem witt(const std::vector<u64>& coeffs) const;  // reduces mod p^N, pads
  WittElem wrandom(Rng& rng) const;

  RamElem zero() const;
  RamElem one() const;
  RamElem integer(i64 a) const;
  RamElem pi() const;
  RamElem pi_pow(int k) const;
  RamElem from_witt(const WittElem& w) const;
  RamElem ram(const std::vector<WittElem>& c) const;
  RamElem random(Rng& rng) const;
  RamElem random_unit(Rng& rng) const;

  // Teichmuller lift of a residue-field element given in this tower's basis
  // (coefficients read mod p).
  WittElem teichmuller(const WittElem& a) const;
  WittElem teichmuller_coeffs(const std::vector<u64>& residue_coeffs) const;
  // Reduction to the residue tower and the naive coefficientwise lift back.
  WittElem reduce(const WittElem& w) const;
  WittElem lift(const WittElem& residue_elem) const;
  RamElem lift(const RamElem& residue_elem) const;
  // Random element of the residue field F_q, as a residue-tower element.
  WittElem residue_random(Rng& rng) const;

  // p / pi as an element of the ring (pi^(e-1) for the default polynomial).
  const RamElem& p_over_pi() const { return p_over_pi_; }

 private:
  CoeffTower() = default;
  void init(const TowerParams& params);

  friend class WittElem;
  friend class RamElem;

  u64 p_ = 0;
  int f_ = 1, e_ = 1, ext_ = 1, N_ = 1, d_ = 1;
  u64 pN_ = 0, q_ = 0;
  std::vector<u64> modulus_;
  std::vector<u64> eis_;
  bool default_eis_ = true;
  // red_[k - d][j] = coefficient of T^j in T^k mod m, for d <= k <= 2d-2.
  std::vector<std::vector<u64>> red_;
  // frob_[n][k] = coefficient vector of T^(p^n * k) mod m, n in [0, d).
  std::vector<std::vector<std::vector<u64>>> frob_;
  RamElem p_over_pi_;
  std::shared_ptr<const CoeffTower> residue_;
};

// Finds the smallest primitive monic polynomial of degree d over F_p, ordered
// by the integer sum c_k p^k. Returned as coefficients c_0..c_d.
std::vector<u64> smallest_primitive_poly(u64 p, int d);

}  // namespace dieu
