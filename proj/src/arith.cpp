#include "dieu/arith.hpp"

#include <algorithm>
#include <limits>

#include "dieu/error.hpp"

namespace dieu {

int Val::value() const {
  if (inf_) throw Error(ErrorCode::internal, "value() called on an infinite valuation");
  return v_;
}

std::string Val::str() const { return inf_ ? std::string("inf") : std::to_string(v_); }

namespace zmod {

u64 pow(u64 a, u64 k, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (k) {
    if (k & 1) r = mul(r, a, m);
    a = mul(a, a, m);
    k >>= 1;
  }
  return r;
}

u64 from_signed(i64 a, u64 m) {
  i64 r = a % static_cast<i64>(m);
  if (r < 0) r += static_cast<i64>(m);
  return static_cast<u64>(r);
}

int vp(u64 a, u64 p, int N) {
  if (a == 0) return N;
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

u64 inv(u64 a, u64 m) {
  i64 t = 0, nt = 1;
  i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
  while (nr != 0) {
    i64 qq = r / nr;
    i64 tmp = t - qq * nt;
    t = nt;
    nt = tmp;
    tmp = r - qq * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw Error(ErrorCode::not_unit, "element is not invertible modulo " + std::to_string(m));
  return from_signed(t, m);
}

}  // namespace zmod

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 checked_pow(u64 base, int exp) {
  constexpr u64 limit = u64{1} << 62;
  u64 r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / base) throw Error(ErrorCode::precision_too_large, "p^N must stay below 2^62");
    r *= base;
  }
  if (r >= limit) throw Error(ErrorCode::precision_too_large, "p^N must stay below 2^62");
  return r;
}

namespace {

using Poly = std::vector<u64>;

// a*b mod (monic mod) with coefficients in Z/m. Inputs have length deg(mod).
Poly polymulmod(const Poly& a, const Poly& b, const Poly& mod, u64 m) {
  const size_t d = mod.size() - 1;
  std::vector<u128> acc(2 * d - 1, 0);
  for (size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      acc[i + j] += static_cast<u128>(a[i]) * b[j];
      if (acc[i + j] >> 126) acc[i + j] %= m;
    }
  }
  Poly r(2 * d - 1);
  for (size_t k = 0; k < r.size(); ++k) r[k] = static_cast<u64>(acc[k] % m);
  for (size_t k = r.size(); k-- > d;) {
    u64 t = r[k];
    if (t == 0) continue;
    for (size_t j = 0; j < d; ++j) r[k - d + j] = zmod::sub(r[k - d + j], zmod::mul(t, mod[j], m), m);
    r[k] = 0;
  }
  r.resize(d);
  return r;
}

Poly polypowmod(Poly a, u64 k, const Poly& mod, u64 m) {
  Poly r(mod.size() - 1, 0);
  r[0] = 1 % m;
  while (k) {
    if (k & 1) r = polymulmod(r, a, mod, m);
    k >>= 1;
    if (k) a = polymulmod(a, a, mod, m);
  }
  return r;
}

Poly poly_T(size_t d, u64 m) {
  Poly t(d, 0);
  if (d == 1) {
    return t;  // caller handles degree one separately
  }
  t[1] = 1 % m;
  return t;
}

// T reduced modulo a monic polynomial, valid for any degree.
Poly poly_T_mod(const Poly& mod, u64 m) {
  const size_t d = mod.size() - 1;
  if (d == 1) return Poly{zmod::neg(mod[0], m)};
  return poly_T(d, m);
}

bool is_one(const Poly& a) {
  if (a[0] != 1) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

// Solve M x = b over Z/m where M is invertible mod p (unit pivots exist).
std::vector<u64> solve_unit_pivot(std::vector<std::vector<u64>> M, std::vector<u64> b, u64 p, u64 m) {
  const size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = n;
    for (size_t r = col; r < n; ++r)
      if (M[r][col] % p != 0) {
        piv = r;
        break;
      }
    if (piv == n) throw Error(ErrorCode::internal, "singular system while lifting the modulus");
    std::swap(M[piv], M[col]);
    std::swap(b[piv], b[col]);
    u64 inv = zmod::inv(M[col][col], m);
    for (size_t k = col; k < n; ++k) M[col][k] = zmod::mul(M[col][k], inv, m);
    b[col] = zmod::mul(b[col], inv, m);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      u64 fct = M[r][col];
      for (size_t k = col; k < n; ++k) M[r][k] = zmod::sub(M[r][k], zmod::mul(fct, M[col][k], m), m);
      b[r] = zmod::sub(b[r], zmod::mul(fct, b[col], m), m);
    }
  }
  return b;
}

}  // namespace

std::vector<u64> smallest_primitive_poly(u64 p, int d) {
  const u64 q = checked_pow(p, d);
  const auto factors = prime_factors(q - 1);
  const u64 count = q;  // number of monic polynomials of degree d
  for (u64 enc = 0; enc < count; ++enc) {
    Poly mu(d + 1);
    u64 x = enc;
    for (int k = 0; k < d; ++k) {
      mu[k] = x % p;
      x /= p;
    }
    mu[d] = 1;
    if (mu[0] == 0) continue;
    Poly t = poly_T_mod(mu, p);
    if (!is_one(polypowmod(t, q - 1, mu, p))) continue;
    bool primitive = true;
    for (u64 r : factors) {
      if (is_one(polypowmod(t, (q - 1) / r, mu, p))) {
        primitive = false;
        break;
      }
    }
    if (primitive) return mu;
  }
  throw Error(ErrorCode::internal, "no primitive polynomial found");
}

// ---------------------------------------------------------------------------
// CoeffTower

std::shared_ptr<const CoeffTower> CoeffTower::build(u64 p, int f, int e, int ext, int N) {
  TowerParams tp;
  tp.p = p;
  tp.f = f;
  tp.e = e;
  tp.ext = ext;
  tp.N = N;
  return build(tp);
}

std::shared_ptr<const CoeffTower> CoeffTower::build(const TowerParams& params) {
  if (!is_prime(params.p)) throw Error(ErrorCode::not_prime, std::to_string(params.p) + " is not prime");
  if (params.e * params.N < params.e * params.f + 2)
    throw Error(ErrorCode::precision_policy,
                "precision policy violated: e*N = " + std::to_string(params.e * params.N) + " < e*f + 2 = " +
                    std::to_string(params.e * params.f + 2));
  return build_unchecked(params);
}

std::shared_ptr<const CoeffTower> CoeffTower::build_unchecked(const TowerParams& params) {
  if (!is_prime(params.p)) throw Error(ErrorCode::not_prime, std::to_string(params.p) + " is not prime");
  if (params.f < 1 || params.e < 1 || params.ext < 1 || params.N < 1)
    throw Error(ErrorCode::invalid_argument, "f, e, ext and N must all be at least 1");
  std::shared_ptr<CoeffTower> t(new CoeffTower());
  t->init(params);
  return t;
}

TowerParams CoeffTower::params() const {
  TowerParams tp;
  tp.p = p_;
  tp.f = f_;
  tp.e = e_;
  tp.ext = ext_;
  tp.N = N_;
  if (!default_eis_)
    for (u64 a : eis_) tp.eisenstein.push_back(a > pN_ / 2 ? static_cast<i64>(a) - static_cast<i64>(pN_) : static_cast<i64>(a));
  return tp;
}

void CoeffTower::init(const TowerParams& params) {
  p_ = params.p;
  f_ = params.f;
  e_ = params.e;
  ext_ = params.ext;
  N_ = params.N;
  d_ = f_ * ext_;
  pN_ = checked_pow(p_, N_);
  try {
    q_ = checked_pow(p_, d_);
  } catch (const Error&) {
    throw Error(ErrorCode::size_guard, "residue field too large: p^(f*ext) must stay below 2^62");
  }

  // Eisenstein polynomial.
  eis_.assign(e_, 0);
  default_eis_ = params.eisenstein.empty();
  if (default_eis_) {
    eis_[0] = zmod::neg(p_ % pN_, pN_);
  } else {
    if (static_cast<int>(params.eisenstein.size()) != e_)
      throw Error(ErrorCode::invalid_argument, "eisenstein polynomial needs exactly e lower coefficients");
    for (int j = 0; j < e_; ++j) eis_[j] = zmod::from_signed(params.eisenstein[j], pN_);
    bool ok = true;
    for (int j = 0; j < e_; ++j) ok = ok && (zmod::from_signed(params.eisenstein[j], p_) == 0);
    if (N_ >= 2) ok = ok && (zmod::vp(eis_[0], p_, N_) == 1);
    if (!ok) throw Error(ErrorCode::invalid_argument, "polynomial is not Eisenstein");
  }

  // Modulus: Teichmuller lift of the smallest primitive polynomial.
  const Poly mu = smallest_primitive_poly(p_, d_);
  if (N_ == 1) {
    modulus_ = mu;
  } else {
    Poly theta = poly_T_mod(mu, pN_);
    for (int i = 0; i < N_ - 1; ++i) theta = polypowmod(theta, q_, mu, pN_);
    std::vector<std::vector<u64>> M(d_, std::vector<u64>(d_, 0));
    Poly pw(d_, 0);
    pw[0] = 1;
    for (int k = 0; k < d_; ++k) {
      for (int r = 0; r < d_; ++r) M[r][k] = pw[r];
      pw = polymulmod(pw, theta, mu, pN_);
    }
    auto b = solve_unit_pivot(M, pw, p_, pN_);
    modulus_.assign(d_ + 1, 0);
    for (int k = 0; k < d_; ++k) modulus_[k] = zmod::neg(b[k], pN_);
    modulus_[d_] = 1;
  }

  // Reduction table for T^k, d <= k <= 2d-2.
  red_.clear();
  if (d_ >= 2) {
    Poly cur(d_);
    for (int j = 0; j < d_; ++j) cur[j] = zmod::neg(modulus_[j], pN_);
    red_.push_back(cur);
    for (int k = d_ + 1; k <= 2 * d_ - 2; ++k) {
      Poly nxt(d_, 0);
      u64 top = cur[d_ - 1];
      for (int j = d_ - 1; j >= 1; --j) nxt[j] = cur[j - 1];
      for (int j = 0; j < d_; ++j) nxt[j] = zmod::sub(nxt[j], zmod::mul(top, modulus_[j], pN_), pN_);
      red_.push_back(nxt);
      cur = nxt;
    }
  }

  // Frobenius tables.
  frob_.assign(d_, {});
  Poly gen = poly_T_mod(modulus_, pN_);
  Poly img = gen;  // T^(p^n)
  for (int n = 0; n < d_; ++n) {
    auto& tab = frob_[n];
    Poly pw(d_, 0);
    pw[0] = 1 % pN_;
    for (int k = 0; k < d_; ++k) {
      tab.push_back(pw);
      pw = polymulmod(pw, img, modulus_, pN_);
    }
    img = polypowmod(img, p_, modulus_, pN_);
  }

  if (N_ > 1) {
    TowerParams rp = params;
    rp.N = 1;
    rp.eisenstein.clear();
    residue_ = build_unchecked(rp);
  }

  // p / pi = -b0^{-1} (pi^{e-1} + a_{e-1} pi^{e-2} + ... + a_1), with a_0 = p*b0.
  p_over_pi_ = RamElem(this);
  if (default_eis_ || N_ == 1) {
    p_over_pi_.c_[e_ - 1] = wone();
    if (e_ == 1) p_over_pi_.c_[0] = wone();
  } else {
    u64 b0 = eis_[0] / p_;
    u64 nb0inv = zmod::neg(zmod::inv(b0 % pN_, pN_), pN_);
    p_over_pi_.c_[e_ - 1] = wint(1).scaled(nb0inv);
    for (int j = 1; j < e_; ++j) p_over_pi_.c_[j - 1] = wint(1).scaled(zmod::mul(eis_[j], nb0inv, pN_));
  }
}

WittElem CoeffTower::wzero() const { return WittElem(this); }
WittElem CoeffTower::wone() const { return wint(1); }

WittElem CoeffTower::wint(i64 a) const {
  WittElem w(this);
  w.c_[0] = zmod::from_signed(a, pN_);
  return w;
}

WittElem CoeffTower::wgen() const {
  WittElem w(this);
  if (d_ == 1)
    w.c_[0] = zmod::neg(modulus_[0], pN_);
  else
    w.c_[1] = 1 % pN_;
  return w;
}

WittElem CoeffTower::witt(const std::vector<u64>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > d_) throw Error(ErrorCode::shape, "too many Witt coefficients");
  WittElem w(this);
  for (size_t k = 0; k < coeffs.size(); ++k) w.c_[k] = coeffs[k] % pN_;
  return w;
}

WittElem CoeffTower::wrandom(Rng& rng) const {
  WittElem w(this);
  for (auto& x : w.c_) x = rng() % pN_;
  return w;
}

RamElem CoeffTower::zero() const { return RamElem(this); }
RamElem CoeffTower::one() const { return integer(1); }

RamElem CoeffTower::integer(i64 a) const {
  RamElem r(this);
  r.c_[0] = wint(a);
  return r;
}

RamElem CoeffTower::pi() const {
  RamElem r(this);
  if (e_ >= 2)
    r.c_[1] = wone();
  else
    r.c_[0] = wint(1).scaled(zmod::neg(eis_[0], pN_));
  return r;
}

RamElem CoeffTower::pi_pow(int k) const {
  RamElem r = one();
  for (int i = 0; i < k; ++i) r = r.mul_pi();
  return r;
}

RamElem CoeffTower::from_witt(const WittElem& w) const {
  RamElem r(this);
  r.c_[0] = w;
  return r;
}

RamElem CoeffTower::ram(const std::vector<WittElem>& c) const {
  if (static_cast<int>(c.size()) != e_) throw Error(ErrorCode::shape, "ramified element needs e coefficients");
  RamElem r(this);
  r.c_ = c;
  return r;
}

RamElem CoeffTower::random(Rng& rng) const {
  RamElem r(this);
  for (auto& w : r.c_) w = wrandom(rng);
  return r;
}

RamElem CoeffTower::random_unit(Rng& rng) const {
  for (;;) {
    RamElem r = random(rng);
    if (r.is_unit()) return r;
  }
}

WittElem CoeffTower::teichmuller_coeffs(const std::vector<u64>& rc) const {
  WittElem x(this);
  for (size_t k = 0; k < rc.size() && static_cast<int>(k) < d_; ++k) x.c_[k] = rc[k] % p_;
  for (int i = 0; i < N_ - 1; ++i) x = x.pow(p_).frobenius(-1);
  return x;
}

WittElem CoeffTower::teichmuller(const WittElem& a) const { return teichmuller_coeffs(a.coeffs()); }

WittElem CoeffTower::reduce(const WittElem& w) const {
  std::vector<u64> c(w.coeffs().size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = w.coeff(static_cast<int>(k)) % p_;
  return residue().witt(c);
}

WittElem CoeffTower::lift(const WittElem& r) const { return witt(r.coeffs()); }

RamElem CoeffTower::lift(const RamElem& r) const {
  RamElem out(this);
  for (int j = 0; j < e_; ++j) out.c_[j] = lift(r.coeff(j));
  return out;
}

WittElem CoeffTower::residue_random(Rng& rng) const {
  std::vector<u64> c(d_);
  for (auto& x : c) x = rng() % p_;
  return residue().witt(c);
}

// ---------------------------------------------------------------------------
// WittElem

WittElem::WittElem(const CoeffTower* t) : t_(t), c_(t->d_, 0) {}

bool WittElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](u64 x) { return x == 0; });
}

bool WittElem::is_unit() const {
  const u64 p = t_->p_;
  return std::any_of(c_.begin(), c_.end(), [p](u64 x) { return x % p != 0; });
}

Val WittElem::ord_p() const {
  int best = t_->N_;
  for (u64 x : c_) best = std::min(best, zmod::vp(x, t_->p_, t_->N_));
  return best >= t_->N_ ? Val::infinity() : Val(best);
}

WittElem WittElem::operator+(const WittElem& o) const {
  WittElem r(t_);
  for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = zmod::add(c_[k], o.c_[k], t_->pN_);
  return r;
}

WittElem WittElem::operator-(const WittElem& o) const {
  WittElem r(t_);
  for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = zmod::sub(c_[k], o.c_[k], t_->pN_);
  return r;
}

WittElem WittElem::operator-() const {
  WittElem r(t_);
  for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = zmod::neg(c_[k], t_->pN_);
  return r;
}

WittElem WittElem::operator*(const WittElem& o) const {
  const int d = t_->d_;
  const u64 m = t_->pN_;
  WittElem r(t_);
  if (d == 1) {
    r.c_[0] = zmod::mul(c_[0], o.c_[0], m);
    return r;
  }
  u128 acc[64];
  std::vector<u128> big;
  u128* a = acc;
  if (2 * d - 1 > 64) {
    big.assign(2 * d - 1, 0);
    a = big.data();
  } else {
    std::fill(acc, acc + 2 * d - 1, u128{0});
  }
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      a[i + j] += static_cast<u128>(c_[i]) * o.c_[j];
      if (a[i + j] >> 126) a[i + j] %= m;
    }
  }
  std::vector<u128> out(a, a + d);
  for (int k = d; k <= 2 * d - 2; ++k) {
    u64 t = static_cast<u64>(a[k] % m);
    if (t == 0) continue;
    const auto& row = t_->red_[k - d];
    for (int j = 0; j < d; ++j) {
      out[j] += static_cast<u128>(t) * row[j];
      if (out[j] >> 126) out[j] %= m;
    }
  }
  for (int j = 0; j < d; ++j) r.c_[j] = static_cast<u64>(out[j] % m);
  return r;
}

WittElem WittElem::scaled(u64 s) const {
  WittElem r(t_);
  s %= t_->pN_;
  for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = zmod::mul(c_[k], s, t_->pN_);
  return r;
}

WittElem WittElem::pow(u64 k) const {
  WittElem r = t_->wone();
  WittElem b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

WittElem WittElem::inverse() const {
  if (!is_unit()) throw Error(ErrorCode::not_unit, "Witt element is not a unit");
  // x^(q-2) inverts x modulo p; Newton steps lift the inverse to p^N.
  WittElem y = pow(t_->q_ - 2);
  WittElem two = t_->wint(2);
  for (int prec = 1; prec < t_->N_; prec *= 2) y = y * (two - *this * y);
  return y;
}

WittElem WittElem::frobenius(int n) const {
  const int d = t_->d_;
  int k = ((n % d) + d) % d;
  if (k == 0) return *this;
  const auto& tab = t_->frob_[k];
  const u64 m = t_->pN_;
  std::vector<u128> acc(d, 0);
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      acc[j] += static_cast<u128>(c_[i]) * tab[i][j];
      if (acc[j] >> 126) acc[j] %= m;
    }
  }
  WittElem r(t_);
  for (int j = 0; j < d; ++j) r.c_[j] = static_cast<u64>(acc[j] % m);
  return r;
}

WittElem WittElem::div_p() const {
  WittElem r(t_);
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] % t_->p_ != 0) throw Error(ErrorCode::internal, "div_p on an element not divisible by p");
    r.c_[k] = c_[k] / t_->p_;
  }
  return r;
}

bool WittElem::equal_mod_pk(const WittElem& o, int k) const {
  if (k >= t_->N_) return *this == o;
  u64 m = checked_pow(t_->p_, k);
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] % m != o.c_[i] % m) return false;
  return true;
}

// ---------------------------------------------------------------------------
// RamElem

RamElem::RamElem(const CoeffTower* t) : t_(t), c_(t->e_, WittElem(t)) {}

bool RamElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const WittElem& w) { return w.is_zero(); });
}

bool RamElem::is_unit() const { return c_[0].is_unit(); }

Val RamElem::ord_pi() const {
  Val best = Val::infinity();
  const int e = t_->e_;
  for (int j = 0; j < e; ++j) {
    Val v = c_[j].ord_p();
    if (v.is_inf()) continue;
    best = min(best, Val(e * v.value() + j));
  }
  return best;
}

RamElem RamElem::operator+(const RamElem& o) const {
  RamElem r(t_);
  for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = c_[j] + o.c_[j];
  return r;
}

RamElem RamElem::operator-(const RamElem& o) const {
  RamElem r(t_);
  for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = c_[j] - o.c_[j];
  return r;
}

RamElem RamElem::operator-() const {
  RamElem r(t_);
  for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = -c_[j];
  return r;
}

RamElem RamElem::operator*(const RamElem& o) const {
  const int e = t_->e_;
  if (e == 1) {
    RamElem r(t_);
    r.c_[0] = c_[0] * o.c_[0];
    return r;
  }
  std::vector<WittElem> acc(2 * e - 1, WittElem(t_));
  for (int i = 0; i < e; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j < e; ++j) {
      if (o.c_[j].is_zero()) continue;
      acc[i + j] += c_[i] * o.c_[j];
    }
  }
  // pi^e = -sum a_j pi^j
  const u64 m = t_->pN_;
  for (int k = 2 * e - 2; k >= e; --k) {
    if (acc[k].is_zero()) continue;
    for (int j = 0; j < e; ++j) {
      u64 a = t_->eis_[j];
      if (a == 0) continue;
      acc[k - e + j] -= acc[k].scaled(a % m);
    }
  }
  RamElem r(t_);
  for (int j = 0; j < e; ++j) r.c_[j] = std::move(acc[j]);
  return r;
}

RamElem RamElem::operator*(const WittElem& w) const {
  RamElem r(t_);
  for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = c_[j] * w;
  return r;
}

bool RamElem::operator==(const RamElem& o) const { return c_ == o.c_; }

RamElem RamElem::pow(u64 k) const {
  RamElem r = t_->one();
  RamElem b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

RamElem RamElem::inverse() const {
  if (!is_unit()) throw Error(ErrorCode::not_unit, "ramified element is not a unit");
  RamElem y = t_->from_witt(c_[0].inverse());
  RamElem two = t_->integer(2);
  for (int prec = 1; prec < t_->e_ * t_->N_; prec *= 2) y = y * (two - *this * y);
  return y;
}

RamElem RamElem::frobenius(int n) const {
  RamElem r(t_);
  for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = c_[j].frobenius(n);
  return r;
}

RamElem RamElem::mul_pi() const {
  const int e = t_->e_;
  RamElem r(t_);
  if (e == 1) {
    r.c_[0] = c_[0].scaled(zmod::neg(t_->eis_[0], t_->pN_));
    return r;
  }
  for (int j = e - 1; j >= 1; --j) r.c_[j] = c_[j - 1];
  const WittElem& top = c_[e - 1];
  if (!top.is_zero())
    for (int j = 0; j < e; ++j)
      if (t_->eis_[j] != 0) r.c_[j] -= top.scaled(t_->eis_[j]);
  return r;
}

RamElem RamElem::div_pi() const {
  const int e = t_->e_;
  if (c_[0].is_unit()) throw Error(ErrorCode::internal, "div_pi on an element of valuation 0");
  RamElem r(t_);
  for (int j = 1; j < e; ++j) r.c_[j - 1] = c_[j];
  if (t_->N_ == 1) return r;
  if (!c_[0].is_zero()) r += t_->p_over_pi_ * c_[0].div_p();
  return r;
}

bool RamElem::equal_mod_pk(const RamElem& o, int k) const {
  for (size_t j = 0; j < c_.size(); ++j)
    if (!c_[j].equal_mod_pk(o.c_[j], k)) return false;
  return true;
}

RamElem RamElem::mod_p() const {
  const CoeffTower& res = t_->residue();
  RamElem r(&res);
  for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = t_->reduce(c_[j]);
  return r;
}

}  // namespace dieu
