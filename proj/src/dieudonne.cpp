#include "dieu/dieudonne.hpp"

#include <algorithm>
#include <string>

#include "dieu/error.hpp"

namespace dieu {

Mat2 Mat2::zero(const CoeffTower& t) {
  Mat2 r;
  for (auto& row : r.m)
    for (auto& x : row) x = t.zero();
  return r;
}

Mat2 Mat2::identity(const CoeffTower& t) {
  Mat2 r = zero(t);
  r.m[0][0] = t.one();
  r.m[1][1] = t.one();
  return r;
}

Mat2 Mat2::of(RamElem a, RamElem b, RamElem c, RamElem d) {
  Mat2 r;
  r.m[0][0] = std::move(a);
  r.m[0][1] = std::move(b);
  r.m[1][0] = std::move(c);
  r.m[1][1] = std::move(d);
  return r;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
  return r;
}

Mat2 Mat2::operator+(const Mat2& o) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
  return r;
}

Mat2 Mat2::operator*(const RamElem& s) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] * s;
  return r;
}

bool Mat2::operator==(const Mat2& o) const { return m == o.m; }

bool Mat2::equal_mod_pk(const Mat2& o, int k) const {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!m[i][j].equal_mod_pk(o.m[i][j], k)) return false;
  return true;
}

RamElem Mat2::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
RamElem Mat2::trace() const { return m[0][0] + m[1][1]; }
Mat2 Mat2::adj() const { return of(m[1][1], -m[0][1], -m[1][0], m[0][0]); }
Mat2 Mat2::transpose() const { return of(m[0][0], m[1][0], m[0][1], m[1][1]); }

Mat2 Mat2::frobenius(int n) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j].frobenius(n);
  return r;
}

Mat2 Mat2::mod_p() const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j].mod_p();
  return r;
}

Val Mat2::min_ord() const {
  Val v = Val::infinity();
  for (const auto& row : m)
    for (const auto& x : row) v = min(v, x.ord_pi());
  return v;
}

const Mat2& DModule::slot(int i) const {
  int n = f();
  return A[((i % n) + n) % n];
}

std::pair<int, RamElem> pi_split(const RamElem& x) {
  Val v = x.ord_pi();
  if (v.is_inf()) throw Error(ErrorCode::v_nonintegral, "zero determinant at working precision");
  RamElem u = x;
  for (int i = 0; i < v.value(); ++i) u = u.div_pi();
  return {v.value(), u};
}

RamElem p_over(const RamElem& x) {
  const CoeffTower& t = x.tower();
  auto [v, u] = pi_split(x);
  if (v > t.e()) throw Error(ErrorCode::v_nonintegral, "p / x is not integral");
  RamElem pv = t.integer(static_cast<i64>(t.p()));
  for (int i = 0; i < v; ++i) pv = pv.div_pi();
  return pv * u.inverse();
}

Mat2 p_times_inverse(const Mat2& A, std::optional<int> slot) {
  const CoeffTower& t = A.tower();
  const int e = t.e();
  RamElem d = A.det();
  if (d.ord_pi().is_inf()) throw Error(ErrorCode::v_nonintegral, "matrix is singular at working precision", slot);
  auto [v, u] = pi_split(d);
  Mat2 adj = A.adj();
  RamElem uinv = u.inverse();
  if (v <= e) {
    RamElem pv = t.integer(static_cast<i64>(t.p()));
    for (int i = 0; i < v; ++i) pv = pv.div_pi();
    return adj * (pv * uinv);
  }
  // v > e: every adjugate entry must absorb pi^(v-e).
  RamElem scale = t.integer(static_cast<i64>(t.p()));
  for (int i = 0; i < e; ++i) scale = scale.div_pi();
  scale = scale * uinv;
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      RamElem x = adj(i, j);
      if (x.ord_pi() < Val(v - e))
        throw Error(ErrorCode::v_nonintegral, "p A^{-1} is not integral", slot);
      for (int k = 0; k < v - e && !x.is_zero(); ++k) x = x.div_pi();
      r(i, j) = x * scale;
    }
  return r;
}

DModule build_module(std::shared_ptr<const CoeffTower> tower, std::vector<Mat2> A,
                     std::optional<std::vector<RamElem>> delta, PolMode mode, int precision) {
  const int f = tower->f();
  const int e = tower->e();
  const int g = tower->g();
  if (static_cast<int>(A.size()) != f)
    throw Error(ErrorCode::shape, "expected " + std::to_string(f) + " slot matrices, got " + std::to_string(A.size()));
  for (const auto& M : A)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (&M(i, j).tower() != tower.get()) throw Error(ErrorCode::shape, "matrix entry from a different tower");

  DModule M;
  M.tower = tower;
  M.A = std::move(A);
  M.mode = mode;
  M.precision = precision > 0 ? precision : tower->N();

  for (int i = 0; i < f; ++i) {
    Val v = M.A[i].det().ord_pi();
    if (v.is_inf() || v.value() >= e * M.precision)
      throw Error(ErrorCode::v_nonintegral, "slot matrix is singular at working precision", i);
    M.det_ords.push_back(v.value());
    M.det_sum += v.value();
    p_times_inverse(M.A[i], i);  // throws when V is not integral
  }
  if (mode == PolMode::separable && M.det_sum != g)
    throw Error(ErrorCode::det_budget,
                "determinant valuations sum to " + std::to_string(M.det_sum) + ", expected g = " + std::to_string(g));
  if (mode == PolMode::general && M.det_sum > 2 * g)
    throw Error(ErrorCode::det_budget, "determinant valuations sum to " + std::to_string(M.det_sum) + " > 2g");

  if (delta) {
    if (static_cast<int>(delta->size()) != f) throw Error(ErrorCode::shape, "expected f pairing scalars");
    const int cmp = std::max(1, M.precision - 1);
    const RamElem p = tower->integer(static_cast<i64>(tower->p()));
    for (int i = 0; i < f; ++i) {
      if ((*delta)[i].ord_pi() >= Val(e * cmp))
        throw Error(ErrorCode::degenerate_pairing, "pairing scalar vanishes", i);
    }
    for (int i = 0; i < f; ++i) {
      const RamElem& prev = (*delta)[(i + f - 1) % f];
      RamElem lhs = M.A[i].det() * (*delta)[i];
      RamElem rhs = p * prev.frobenius(1);
      if (!lhs.equal_mod_pk(rhs, cmp))
        throw Error(ErrorCode::pairing_incompatible, "det(A_i) delta_i != p sigma(delta_{i-1})", i);
    }
    M.delta = std::move(delta);
  }
  return M;
}

Mat2 twisted_power(const DModule& M, int b) {
  const int f = M.f();
  Mat2 B = M.slot(b + 1).frobenius(f - 1);
  for (int k = 2; k <= f; ++k) B = B * M.slot(b + k).frobenius(f - k);
  return B;
}

namespace {
Val capped(Val v, int cap) { return (!v.is_inf() && v.value() >= cap) ? Val::infinity() : v; }
}  // namespace

Val iterate_twisted(const DModule& M, int n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be positive");
  const int f = M.f();
  const Mat2 B = twisted_power(M, 0);
  Mat2 Bn = B;
  for (int k = 1; k < n; ++k) Bn = B.frobenius(f * k) * Bn;
  return capped(Bn.min_ord(), M.e() * M.precision);
}

std::vector<Val> iterate_twisted_doubling(const DModule& M, int k) {
  const int f = M.f();
  const int cap = M.e() * M.precision;
  std::vector<Val> out;
  Mat2 Bn = twisted_power(M, 0);
  int n = 1;
  for (int i = 0; i <= k; ++i) {
    Val v = capped(Bn.min_ord(), cap);
    out.push_back(v);
    if (v.is_inf()) break;
    if (i < k) {
      Bn = Bn.frobenius(f * n) * Bn;
      n *= 2;
    }
  }
  return out;
}

ModPair reduce_mod_p(const DModule& M) {
  ModPair r;
  for (int i = 0; i < M.f(); ++i) {
    r.F.push_back(M.A[i].mod_p());
    r.V.push_back(p_times_inverse(M.A[i], i).frobenius(-1).mod_p());
  }
  return r;
}

DModule dual_module(const DModule& M) {
  const auto& t = *M.tower;
  std::vector<Mat2> Ad;
  for (int i = 0; i < M.f(); ++i) Ad.push_back(p_times_inverse(M.A[i], i).transpose());
  std::optional<std::vector<RamElem>> dd;
  if (M.delta) {
    int s = 0;
    for (const auto& x : *M.delta) s = std::max(s, x.ord_pi().value());
    std::vector<RamElem> v;
    for (const auto& x : *M.delta) {
      auto [k, u] = pi_split(x);
      v.push_back(t.pi_pow(s - k) * u.inverse());
    }
    dd = std::move(v);
  }
  PolMode mode = M.mode;
  return build_module(M.tower, std::move(Ad), std::move(dd), mode, M.precision - 1);
}

}  // namespace dieu
