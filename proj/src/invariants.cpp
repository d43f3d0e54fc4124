#include "dieu/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "dieu/error.hpp"

namespace dieu {

int LieType::sum() const {
  int s = 0;
  for (const auto& p : slots) s += p[0] + p[1];
  return s;
}

bool LieType::rapoport(int e) const {
  return std::all_of(slots.begin(), slots.end(), [e](const SlotPair& p) { return p[0] == 0 && p[1] == e; });
}

bool in_S(int g, int twice_index) {
  if (twice_index == g) return true;
  return twice_index >= 0 && twice_index % 2 == 0 && twice_index <= g;
}

std::string NewtonPoint::index_str() const {
  return den() == 1 ? std::to_string(num()) : std::to_string(num()) + "/2";
}

namespace {
std::string frac(int a, int b) {
  int d = std::gcd(a, b);
  if (d == 0) d = 1;
  return std::to_string(a / d) + "/" + std::to_string(b / d);
}
}  // namespace

std::vector<std::string> NewtonPoint::sequence() const {
  // slopes i/g and (g-i)/g with i = twice_index / 2; work with 2g as denominator
  std::vector<std::string> out;
  std::string lo = frac(twice_index, 2 * g);
  std::string hi = frac(2 * g - twice_index, 2 * g);
  for (int k = 0; k < g; ++k) out.push_back(lo);
  for (int k = 0; k < g; ++k) out.push_back(hi);
  return out;
}

SlotPair elementary_divisors(std::vector<std::array<RamElem, 2>> rows, int e) {
  SlotPair ex{e, e};
  const int r = static_cast<int>(rows.size());
  for (int step = 0; step < 2; ++step) {
    int pr = -1, pc = -1;
    Val best = Val::infinity();
    for (int i = step; i < r; ++i)
      for (int j = step; j < 2; ++j) {
        Val v = rows[i][j].ord_pi();
        if (!v.is_inf() && v.value() < e && (pr < 0 || v < best)) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    std::swap(rows[pr], rows[step]);
    if (pc != step)
      for (auto& row : rows) std::swap(row[pc], row[step]);
    const int v = best.value();
    ex[step] = v;
    RamElem u = rows[step][step];
    for (int k = 0; k < v; ++k) u = u.div_pi();
    const RamElem uinv = u.inverse();
    auto quotient = [&](const RamElem& x) {
      RamElem y = x;
      for (int k = 0; k < v; ++k) y = y.div_pi();
      return y * uinv;
    };
    for (int i = step + 1; i < r; ++i) {
      if (rows[i][step].is_zero()) continue;
      RamElem fct = quotient(rows[i][step]);
      for (int j = step; j < 2; ++j) rows[i][j] -= fct * rows[step][j];
    }
    for (int j = step + 1; j < 2; ++j) {
      if (rows[step][j].is_zero()) continue;
      RamElem fct = quotient(rows[step][j]);
      for (int i = step; i < r; ++i) rows[i][j] -= fct * rows[i][step];
    }
  }
  if (ex[0] > ex[1]) std::swap(ex[0], ex[1]);
  return ex;
}

namespace {

std::array<RamElem, 2> row_of(const Mat2& M, int r) { return {M(r, 0), M(r, 1)}; }

}  // namespace

LieType lie_type(const DModule& M) {
  const ModPair mp = reduce_mod_p(M);
  const int f = M.f();
  LieType L;
  for (int i = 0; i < f; ++i) {
    const Mat2& V = mp.V[(i + 1) % f];
    L.slots.push_back(elementary_divisors({row_of(V, 0), row_of(V, 1)}, M.e()));
  }
  return L;
}

AType a_type(const DModule& M) {
  const ModPair mp = reduce_mod_p(M);
  const int f = M.f();
  AType a;
  bool rap = true;
  for (int i = 0; i < f; ++i) {
    const Mat2& F = mp.F[i];
    const Mat2& V = mp.V[(i + 1) % f];
    SlotPair s = elementary_divisors({row_of(F, 0), row_of(F, 1), row_of(V, 0), row_of(V, 1)}, M.e());
    a.slots.push_back(s);
    a.a_number += s[0] + s[1];
    rap = rap && s[0] == 0;
  }
  if (rap) {
    std::vector<int> r;
    for (const auto& s : a.slots) r.push_back(s[1]);
    a.rapoport_form = r;
  }
  return a;
}

int reduced_a_number(const DModule& M) {
  int n = 0;
  for (const auto& s : a_type(M).slots) n += (s[0] > 0) + (s[1] > 0);
  return n;
}

AIndex a_index(const DModule& M) {
  if (!lie_type(M).rapoport(M.e()))
    throw Error(ErrorCode::not_rapoport, "the a-index is only defined on the Rapoport locus");
  AType a = a_type(M);
  AIndex r;
  for (int i = 0; i < M.f(); ++i)
    if (a.slots[i][1] != 0) r.tau.push_back(i);
  r.t = static_cast<int>(r.tau.size());
  r.reduced_a = reduced_a_number(M);
  return r;
}

namespace {

void require_budget(const DModule& M) {
  if (M.det_sum != M.g())
    throw Error(ErrorCode::det_budget, "Newton point needs determinant valuations summing to g");
}

// Smallest element of S(g), doubled, that is >= m / n.
int candidate(int g, int m, int n) {
  // smallest even s with s * n >= 2 m
  int s = (2 * m + n - 1) / n;
  if (s % 2) ++s;
  if (s <= 2 * (g / 2)) return s;
  return g;
}

// Element of S(g), doubled, nearest to m / n (ties go down).
int nearest(int g, int m, int n) {
  int best = 0;
  long long dist = -1;
  auto consider = [&](int s) {
    long long d = std::llabs(static_cast<long long>(s) * n - 2LL * m);
    if (dist < 0 || d < dist) {
      dist = d;
      best = s;
    }
  };
  for (int s = 0; s <= 2 * (g / 2); s += 2) consider(s);
  consider(g);
  return best;
}

}  // namespace

// m_n never exceeds n i (Hodge below Newton), so candidate(m_n, n) is a
// certified lower bound. m_n - n i is eventually constant, so the increments
// (m_2n - m_n) / n pin down i long before m_n / n itself gets close.
OracleReport newton_oracle(const DModule& M) {
  require_budget(M);
  const int g = M.g();
  const int f = M.f();
  const int cap = M.e() * M.precision;
  OracleReport rep;
  Mat2 Bn = twisted_power(M, 0);
  int n = 1;
  int lower = 0;
  for (int round = 0; round < 12; ++round) {
    Val m = Bn.min_ord();
    if (!m.is_inf() && m.value() >= cap) m = Val::infinity();
    if (m.is_inf()) {
      lower = std::max(lower, candidate(g, cap, n));
      if (lower == g) {
        rep.steps.push_back({n, m, lower, -1});
        rep.point = NewtonPoint{g, g};
        return rep;
      }
      throw Error(ErrorCode::precision_exhausted, "precision exhausted at n = " + std::to_string(n) +
                                                      "; certified lower bound s(" + NewtonPoint{g, lower}.index_str() +
                                                      ")");
    }
    lower = std::max(lower, candidate(g, m.value(), n));
    OracleStep st{n, m, lower, -1};
    if (!rep.steps.empty()) st.estimate = std::max(lower, nearest(g, m.value() - rep.steps.back().m.value(), n / 2));
    rep.steps.push_back(st);
    if (lower == g) {
      rep.point = NewtonPoint{g, g};
      return rep;
    }
    const size_t k = rep.steps.size();
    auto est = [&](size_t back) { return rep.steps[k - 1 - back].estimate; };
    const bool three = k >= 4 && est(0) == est(1) && est(1) == est(2);
    const bool two_at_bound = k >= 3 && est(0) == est(1) && est(0) == lower;
    if (three || two_at_bound) {
      rep.point = NewtonPoint{g, st.estimate};
      return rep;
    }
    Bn = Bn.frobenius(f * n) * Bn;
    n *= 2;
  }
  throw Error(ErrorCode::precision_exhausted, "oracle did not stabilize");
}

NewtonPoint newton_point(const DModule& M, NewtonMethod method) {
  if (method == NewtonMethod::oracle) return newton_oracle(M).point;
  require_budget(M);
  const int g = M.g();
  Val v = twisted_power(M, 0).trace().ord_pi();
  if (v.is_inf() || v.value() >= M.e() * M.precision) return NewtonPoint{g, g};
  return NewtonPoint{g, std::min(g, 2 * v.value())};
}

Flags classify(const DModule& M, NewtonMethod method) {
  Flags fl;
  LieType L = lie_type(M);
  fl.rapoport = L.rapoport(M.e());
  fl.dp = true;
  for (const auto& s : L.slots) fl.dp = fl.dp && (s[0] + s[1] == L.slots[0][0] + L.slots[0][1]);
  AType a = a_type(M);
  fl.superspecial = a.a_number == M.g();
  if (M.det_sum == M.g()) {
    NewtonPoint np = newton_point(M, method);
    fl.ordinary = np.ordinary();
    fl.supersingular = np.supersingular();
  }
  return fl;
}

std::vector<ATypeBound> a_type_bounds(const LieType& L, int e) {
  const int f = static_cast<int>(L.slots.size());
  std::vector<ATypeBound> out;
  for (int i = 0; i < f; ++i) {
    const SlotPair& cur = L.slots[i];
    const SlotPair& prev = L.slots[(i + f - 1) % f];
    ATypeBound b;
    if (cur[0] <= e - prev[1]) {
      b.a1 = cur[0];
      b.lo = std::min(cur[1], e - prev[1]);
      b.hi = std::min(cur[1], e - prev[0]);
    } else {
      b.a1 = e - prev[1];
      b.lo = std::min(e - prev[0], cur[0]);
      b.hi = std::min(e - prev[0], cur[1]);
    }
    out.push_back(b);
  }
  return out;
}

DualInvariants dual_invariants(const LieType& L, const AType& a, int e) {
  const int f = static_cast<int>(L.slots.size());
  DualInvariants d;
  for (const auto& s : L.slots) d.lie.slots.push_back({e - s[1], e - s[0]});
  for (int i = 0; i < f; ++i) {
    const SlotPair& cur = L.slots[i];
    const SlotPair& prev = L.slots[(i + f - 1) % f];
    int b1 = std::min({e - cur[0], e - cur[1], prev[0], prev[1]});
    int sum = a.slots[i][0] + a.slots[i][1] + prev[0] + prev[1] - cur[0] - cur[1];
    int b2 = sum - b1;
    if (b2 < b1 || b2 > e)
      throw Error(ErrorCode::inconsistent, "dual a-type exponent out of range", i);
    d.a.push_back({b1, b2});
  }
  return d;
}

}  // namespace dieu
