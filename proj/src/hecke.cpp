#include "dieu/hecke.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "dieu/error.hpp"

namespace dieu {

namespace {

constexpr int X1 = 0, X2 = 1, X1P = 2, X2P = 3;

Vec4 unit(int j) {
  Vec4 v{0, 0, 0, 0};
  v[j] = 1;
  return v;
}

bool is_zero(const Vec4& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0; }

Mat4 zero_mat() { return Mat4{Vec4{0, 0, 0, 0}, Vec4{0, 0, 0, 0}, Vec4{0, 0, 0, 0}, Vec4{0, 0, 0, 0}}; }

// Row-reduces in place and returns the rank.
int row_reduce(const FiniteField& k, std::vector<Vec4>& rows) {
  int r = 0;
  for (int c = 0; c < 4 && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    Elem s = k.inv(rows[r][c]);
    for (auto& x : rows[r]) x = k.mul(x, s);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Elem m = rows[i][c];
      for (int j = 0; j < 4; ++j) rows[i][j] = k.sub(rows[i][j], k.mul(m, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return r;
}

// v in the span of reduced rows `basis` with pivots `piv`.
bool in_span(const FiniteField& k, const std::array<Vec4, 2>& basis, const std::array<int, 2>& piv,
             Vec4 v) {
  for (int r = 0; r < 2; ++r) {
    Elem c = v[piv[r]];
    if (c == 0) continue;
    for (int j = 0; j < 4; ++j) v[j] = k.sub(v[j], k.mul(c, basis[r][j]));
  }
  return is_zero(v);
}

bool stable_reduced(const HeckeSetting& S, const std::array<Vec4, 2>& b, const std::array<int, 2>& piv) {
  const FiniteField& k = S.field;
  if (pairing(S, b[0], b[1]) != 0) return false;
  for (const auto& r : b) {
    if (!in_span(k, b, piv, apply_linear(k, S.pi, r))) return false;
    if (!in_span(k, b, piv, apply_F(S, r))) return false;
    if (!in_span(k, b, piv, apply_V(S, r))) return false;
  }
  return true;
}

std::array<int, 2> pivots(const std::array<Vec4, 2>& b) {
  std::array<int, 2> piv{};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c)
      if (b[r][c] != 0) {
        piv[r] = c;
        break;
      }
  return piv;
}

long long checked_power(u64 q, int k, long long cap) {
  long long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= static_cast<long long>(q);
    if (n > cap) throw Error(ErrorCode::size_guard, "candidate count exceeds the size cap");
  }
  return n;
}

}  // namespace

Vec4 apply_linear(const FiniteField& k, const Mat4& m, const Vec4& v) {
  Vec4 out{0, 0, 0, 0};
  for (int j = 0; j < 4; ++j) {
    if (v[j] == 0) continue;
    for (int c = 0; c < 4; ++c) out[c] = k.add(out[c], k.mul(v[j], m[j][c]));
  }
  return out;
}

Vec4 apply_F(const HeckeSetting& S, const Vec4& v) {
  Vec4 w;
  for (int j = 0; j < 4; ++j) w[j] = S.field.frob(v[j]);
  return apply_linear(S.field, S.F, w);
}

Vec4 apply_V(const HeckeSetting& S, const Vec4& v) {
  Vec4 w;
  for (int j = 0; j < 4; ++j) w[j] = S.field.frob_inv(v[j]);
  return apply_linear(S.field, S.V, w);
}

Elem pairing(const HeckeSetting& S, const Vec4& u, const Vec4& v) {
  const FiniteField& k = S.field;
  Elem s = 0;
  for (int i = 0; i < 4; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < 4; ++j)
      if (v[j] != 0 && S.gram[i][j] != 0) s = k.add(s, k.mul(k.mul(u[i], v[j]), S.gram[i][j]));
  }
  return s;
}

HeckeSetting build_setting(u64 p, int s) {
  if (!is_prime(p)) throw Error(ErrorCode::not_prime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::invalid_argument, "p must be odd");
  if (s < 1) throw Error(ErrorCode::invalid_argument, "s must be at least 1");
  HeckeSetting S{p, s, FiniteField(p, 2 * s), zero_mat(), zero_mat(), zero_mat(), zero_mat()};
  const FiniteField& k = S.field;

  // pi x_i' = x_i, pi x_i = 0
  S.pi[X1P] = unit(X1);
  S.pi[X2P] = unit(X2);
  // Mod p both F and V send x1' to x2 and x2' to x1 and kill x1, x2.
  S.F[X1P] = unit(X2);
  S.F[X2P] = unit(X1);
  S.V = S.F;
  // <x1, x2'> = <x1', x2> = 1, alternating
  const Elem one = 1, minus = k.neg(1);
  S.gram[X1][X2P] = one;
  S.gram[X2P][X1] = minus;
  S.gram[X1P][X2] = one;
  S.gram[X2][X1P] = minus;

  for (int j = 0; j < 4; ++j) {
    Vec4 b = unit(j);
    if (!is_zero(apply_linear(k, S.pi, apply_linear(k, S.pi, b))))
      throw Error(ErrorCode::internal, "pi^2 != 0");
    if (!is_zero(apply_F(S, apply_V(S, b))) || !is_zero(apply_V(S, apply_F(S, b))))
      throw Error(ErrorCode::internal, "FV != 0 mod p");
    if (pairing(S, b, b) != 0) throw Error(ErrorCode::internal, "pairing not alternating");
    // F and V commute with pi
    if (apply_F(S, apply_linear(k, S.pi, b)) != apply_linear(k, S.pi, apply_F(S, b)))
      throw Error(ErrorCode::internal, "F does not commute with pi");
  }
  std::vector<Vec4> rows(S.gram.begin(), S.gram.end());
  if (row_reduce(k, rows) != 4) throw Error(ErrorCode::degenerate_pairing, "pairing is degenerate");
  return S;
}

bool is_stable_isotropic(const HeckeSetting& S, const std::array<Vec4, 2>& rows) {
  std::vector<Vec4> r(rows.begin(), rows.end());
  if (row_reduce(S.field, r) != 2) throw Error(ErrorCode::invalid_argument, "rows are dependent");
  std::array<Vec4, 2> b{r[0], r[1]};
  return stable_reduced(S, b, pivots(b));
}

std::vector<StablePlane> enumerate_stable_planes(const HeckeSetting& S, bool chart_only,
                                                 long long size_cap, unsigned threads) {
  const FiniteField& k = S.field;
  const u64 q = k.q();
  std::vector<StablePlane> out;
  if (chart_only) {
    checked_power(q, 4, size_cap);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<u64>(threads, q));
    // each worker takes the t11 values congruent to its index
    std::vector<std::vector<std::vector<StablePlane>>> parts(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        auto& mine = parts[w];
        for (u64 a = w; a < q; a += threads) {
          std::vector<StablePlane> found;
          const std::array<int, 2> piv{0, 1};
          for (u64 b = 0; b < q; ++b)
            for (u64 c = 0; c < q; ++c)
              for (u64 d = 0; d < q; ++d) {
                std::array<Vec4, 2> rows{Vec4{1, 0, Elem(a), Elem(b)}, Vec4{0, 1, Elem(c), Elem(d)}};
                if (stable_reduced(S, rows, piv))
                  found.push_back({rows, std::array<Elem, 4>{Elem(a), Elem(b), Elem(c), Elem(d)}});
              }
          mine.push_back(std::move(found));
        }
      });
    }
    for (auto& t : pool) t.join();
    for (u64 a = 0; a < q; ++a) {
      auto& chunk = parts[a % threads][a / threads];
      out.insert(out.end(), chunk.begin(), chunk.end());
    }
    return out;
  }

  const long long total = static_cast<long long>((q * q + 1) * (q * q + q + 1));
  if (total > size_cap) throw Error(ErrorCode::size_guard, "candidate count exceeds the size cap");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::vector<int> free1, free2;
      for (int c = i + 1; c < 4; ++c)
        if (c != j) free1.push_back(c);
      for (int c = j + 1; c < 4; ++c) free2.push_back(c);
      const int nfree = static_cast<int>(free1.size() + free2.size());
      u64 count = 1;
      for (int t = 0; t < nfree; ++t) count *= q;
      for (u64 code = 0; code < count; ++code) {
        std::array<Vec4, 2> rows{unit(i), unit(j)};
        u64 x = code;
        for (int c : free1) {
          rows[0][c] = static_cast<Elem>(x % q);
          x /= q;
        }
        for (int c : free2) {
          rows[1][c] = static_cast<Elem>(x % q);
          x /= q;
        }
        if (!stable_reduced(S, rows, {i, j})) continue;
        StablePlane P{rows, std::nullopt};
        if (i == 0 && j == 1) P.chart = std::array<Elem, 4>{rows[0][2], rows[0][3], rows[1][2], rows[1][3]};
        out.push_back(P);
      }
    }
  std::sort(out.begin(), out.end(),
            [](const StablePlane& a, const StablePlane& b) { return a.rref < b.rref; });
  return out;
}

bool satisfies_local_equations(const HeckeSetting& S, const std::array<Elem, 4>& t) {
  const FiniteField& k = S.field;
  const u64 p = S.p;
  const Elem t11 = t[0], t12 = t[1], t21 = t[2], t22 = t[3];
  const Elem tr = k.add(t11, t22);
  const Elem eqs[] = {
      k.add(k.mul(t11, t11), k.mul(t12, t21)),
      k.mul(t12, tr),
      k.add(k.mul(t22, t22), k.mul(t12, t21)),
      k.mul(t21, tr),
      k.add(k.mul(k.pow(t11, p), t21), k.mul(k.pow(t12, p), t11)),
      k.add(k.mul(k.pow(t11, p), t22), k.pow(t12, p + 1)),
      k.add(k.pow(t21, p + 1), k.mul(k.pow(t22, p), t11)),
      k.add(k.mul(k.pow(t21, p), t22), k.mul(k.pow(t22, p), t12)),
      tr,
  };
  for (Elem x : eqs)
    if (x != 0) return false;
  return true;
}

std::vector<std::array<Elem, 4>> solve_chart_equations(const HeckeSetting& S, long long size_cap) {
  const u64 q = S.field.q();
  checked_power(q, 4, size_cap);
  std::vector<std::array<Elem, 4>> out;
  for (u64 a = 0; a < q; ++a)
    for (u64 b = 0; b < q; ++b)
      for (u64 c = 0; c < q; ++c)
        for (u64 d = 0; d < q; ++d) {
          std::array<Elem, 4> t{Elem(a), Elem(b), Elem(c), Elem(d)};
          if (satisfies_local_equations(S, t)) out.push_back(t);
        }
  return out;
}

std::vector<std::array<Elem, 4>> parametrized_points(const HeckeSetting& S) {
  const FiniteField& k = S.field;
  std::vector<Elem> roots;
  for (Elem a : k.elements())
    if (a != 0 && k.pow(a, S.p + 1) == 1) roots.push_back(a);
  std::set<std::array<Elem, 4>> pts;
  for (Elem t : k.elements())
    for (Elem a : roots)
      pts.insert({t, k.mul(a, t), k.neg(k.mul(k.inv(a), t)), k.neg(t)});
  return {pts.begin(), pts.end()};
}

VarietyReport compare_variety(const HeckeSetting& S, const std::vector<StablePlane>& planes,
                              long long size_cap) {
  const FiniteField& k = S.field;
  const u64 p = S.p, q = k.q();
  VarietyReport R;
  R.p = p;
  R.q = q;
  R.expected_count = 1 + static_cast<long long>((p + 1) * (q - 1));

  std::vector<std::array<Elem, 4>> chart;
  for (const auto& P : planes)
    if (P.chart) chart.push_back(*P.chart);
  std::sort(chart.begin(), chart.end());
  R.chart_count = static_cast<long long>(chart.size());

  auto poly1 = [&](Elem t1, Elem t2) { return k.sub(k.pow(t1, p + 1), k.pow(t2, p + 1)); };
  auto poly2 = [&](Elem t1, Elem t2, Elem t3) { return k.add(k.mul(t1, t1), k.mul(t2, t3)); };

  R.equations_verified = true;
  R.displayed_polys_verified = true;
  std::set<std::array<Elem, 3>> projected;
  std::set<std::array<Elem, 4>> directions;
  for (const auto& t : chart) {
    if (!satisfies_local_equations(S, t)) R.equations_verified = false;
    if (poly1(t[0], t[1]) != 0 || poly2(t[0], t[1], t[2]) != 0) R.displayed_polys_verified = false;
    projected.insert({t[0], t[1], t[2]});
    int lead = -1;
    for (int j = 0; j < 4; ++j)
      if (t[j] != 0) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    std::array<Elem, 4> d;
    Elem s = k.inv(t[lead]);
    for (int j = 0; j < 4; ++j) d[j] = k.mul(t[j], s);
    directions.insert(d);
  }
  R.lines = static_cast<int>(directions.size());
  R.matches_parametrization = (chart == parametrized_points(S));
  R.matches_equation_solving = (chart == solve_chart_equations(S, size_cap));

  checked_power(q, 3, size_cap);
  R.extras_on_t1_t2_zero = true;
  for (u64 a = 0; a < q; ++a)
    for (u64 b = 0; b < q; ++b) {
      if (poly1(Elem(a), Elem(b)) != 0) continue;
      for (u64 c = 0; c < q; ++c) {
        if (poly2(Elem(a), Elem(b), Elem(c)) != 0) continue;
        ++R.variety_count;
        std::array<Elem, 3> x{Elem(a), Elem(b), Elem(c)};
        if (!projected.count(x)) {
          R.extra_variety_points.push_back(x);
          if (a != 0 || b != 0) R.extras_on_t1_t2_zero = false;
        }
      }
    }
  return R;
}

}  // namespace dieu
