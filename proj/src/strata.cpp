#include "dieu/strata.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

#include "dieu/error.hpp"

namespace dieu {

std::vector<NewtonPoint> admissible_slopes(int g) {
  if (g < 1) throw Error(ErrorCode::invalid_argument, "g must be positive");
  std::vector<NewtonPoint> out;
  for (int i = 0; 2 * i <= g; ++i) out.push_back(NewtonPoint::from_index(g, i));
  if (g % 2) out.push_back(NewtonPoint::half(g));
  return out;
}

bool is_spaced(const std::vector<int>& a) {
  const size_t f = a.size();
  for (size_t i = 0; i < f; ++i)
    if (a[i] != 0 && a[(i + 1) % f] != 0) return false;
  return true;
}

int lambda_exhaustive(const std::vector<int>& a) {
  std::vector<int> b(a.size(), 0);
  int best = 0;
  while (true) {
    if (is_spaced(b)) best = std::max(best, std::accumulate(b.begin(), b.end(), 0));
    size_t k = 0;
    while (k < b.size() && b[k] == a[k]) b[k++] = 0;
    if (k == b.size()) break;
    ++b[k];
  }
  return best;
}

namespace {

// Maximum weight of a set of pairwise non-adjacent positions in w[lo..hi].
int path_best(const std::vector<int>& w, int lo, int hi) {
  int take = 0, skip = 0;
  for (int i = lo; i <= hi; ++i) {
    int t = skip + w[i];
    skip = std::max(skip, take);
    take = t;
  }
  return std::max(take, skip);
}

}  // namespace

int lambda_dp(const std::vector<int>& a) {
  const int f = static_cast<int>(a.size());
  if (f <= 1) return 0;
  // the optimum keeps b = a on a cyclically independent set of slots
  return std::max(path_best(a, 1, f - 1), a[0] + path_best(a, 2, f - 2));
}

StratumRecord stratum_record(const std::vector<int>& a, int e) {
  const int f = static_cast<int>(a.size());
  const int g = e * f;
  StratumRecord r;
  r.a = a;
  const int size = std::accumulate(a.begin(), a.end(), 0);
  r.dim = g - size;
  r.spaced = is_spaced(a);
  double downset = 1;
  for (int x : a) downset *= x + 1;
  r.lambda = downset <= 4096 ? lambda_exhaustive(a) : lambda_dp(a);
  r.generic_slope_lower = NewtonPoint{g, std::min(g, 2 * r.lambda)};
  if (r.spaced) r.generic_slope_exact = NewtonPoint{g, std::min(g, 2 * size)};
  return r;
}

ATypePoset atype_poset(int e, int f, long long size_cap) {
  if (e < 1 || f < 1) throw Error(ErrorCode::invalid_argument, "e and f must be positive");
  long long count = 1;
  for (int i = 0; i < f; ++i) {
    count *= e + 1;
    if (count > size_cap)
      throw Error(ErrorCode::size_guard, "poset has more than " + std::to_string(size_cap) + " elements");
  }
  ATypePoset P;
  P.e = e;
  P.f = f;
  std::vector<int> a(f, 0);
  for (long long idx = 0; idx < count; ++idx) {
    P.nodes.push_back(stratum_record(a, e));
    int k = f - 1;
    while (k >= 0 && a[k] == e) a[k--] = 0;
    if (k >= 0) ++a[k];
  }
  for (long long idx = 0; idx < count; ++idx) {
    long long weight = 1;
    for (int i = f - 1; i >= 0; --i) {
      if (P.nodes[idx].a[i] < e) P.covers.emplace_back(static_cast<int>(idx), static_cast<int>(idx + weight));
      weight *= e + 1;
    }
  }
  std::sort(P.covers.begin(), P.covers.end());
  return P;
}

namespace {
std::string tuple_str(const std::vector<int>& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}
}  // namespace

std::string poset_dot(const ATypePoset& P) {
  std::ostringstream os;
  os << "digraph atypes {\n  rankdir=BT;\n";
  for (size_t i = 0; i < P.nodes.size(); ++i) {
    const auto& n = P.nodes[i];
    os << "  n" << i << " [label=\"" << tuple_str(n.a) << "\\ndim " << n.dim << "\\n";
    if (n.generic_slope_exact)
      os << "s(" << n.generic_slope_exact->index_str() << ")";
    else
      os << ">= s(" << n.generic_slope_lower.index_str() << ")";
    os << "\"];\n";
  }
  for (auto [lo, hi] : P.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

int dp_stratum_dim(const LieType& L, int e) {
  const int g = e * static_cast<int>(L.slots.size());
  if (L.sum() != g) throw Error(ErrorCode::det_budget, "Lie type must sum to g");
  int s = 0;
  for (const auto& p : L.slots) s += std::min(p[0], p[1]);
  return g - 2 * s;
}

DeformationDims deformation_dims(const LieType& L, int e) {
  const int g = e * static_cast<int>(L.slots.size());
  DeformationDims d;
  int mins = 0;
  for (const auto& p : L.slots) {
    mins += std::min(p[0], p[1]);
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) d.unrestricted += std::min(p[j], e - p[k]);
  }
  d.dp = g + 2 * mins;
  d.polarized = g + mins;
  d.dp_matches_unrestricted = d.dp == d.unrestricted;
  return d;
}

int polarization_degree_exponent(const LieType& L, int e, Rotation rot) {
  const int f = static_cast<int>(L.slots.size());
  std::vector<int> P(f, 0);  // pairing valuation of slot i relative to slot 0
  for (int i = 1; i < f; ++i) P[i] = P[i - 1] + L.slots[i - 1][0] + L.slots[i - 1][1] - e;
  if (rot == Rotation::fixed) return 2 * std::accumulate(P.begin(), P.end(), 0);
  if (L.sum() != e * f)
    throw Error(ErrorCode::det_budget, "rotation normalization needs a Lie type summing to g");
  const int lo = *std::min_element(P.begin(), P.end());
  int D = 0;
  for (int x : P) D += x - lo;
  return 2 * D;
}

int newton_stratum_codim(const NewtonPoint& m) {
  if (!in_S(m.g, m.twice_index)) throw Error(ErrorCode::invalid_argument, "Newton point not in S(g)");
  return (m.twice_index + 1) / 2;
}

std::vector<Pattern> superspecial_types(int e, int f, bool reduce) {
  if (e < 1 || f < 1) throw Error(ErrorCode::invalid_argument, "e and f must be positive");
  std::vector<Pattern> out;
  if (f % 2 == 1) {
    for (int e1 = 0; 2 * e1 <= e; ++e1) out.push_back(Pattern(f, SlotPair{e1, e - e1}));
    return out;
  }
  for (int x = 0; x <= e; ++x)
    for (int y = x; y <= e; ++y) {
      SlotPair s{x, y}, c{e - y, e - x};
      if (reduce && c < s) continue;
      Pattern pat;
      for (int i = 0; i < f; ++i) pat.push_back(i % 2 == 0 ? s : c);
      out.push_back(pat);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Determinant identity over rings with square-zero perturbations.

namespace {

constexpr int kMaxVars = 8;
using Mono = std::array<std::uint8_t, kMaxVars>;
using Poly = std::map<Mono, i64>;  // integer polynomial in Y_1..Y_n

struct PolyRing {
  using T = Poly;
  T zero() const { return {}; }
  T one() const { return {{Mono{}, 1}}; }
  T add(const T& a, const T& b) const {
    T r = a;
    for (const auto& [m, c] : b) {
      i64& x = r[m];
      x += c;
      if (x == 0) r.erase(m);
    }
    return r;
  }
  T neg(T a) const {
    for (auto& [m, c] : a) c = -c;
    return a;
  }
  T mul(const T& a, const T& b) const {
    T r;
    for (const auto& [m1, c1] : a)
      for (const auto& [m2, c2] : b) {
        Mono m;
        for (int k = 0; k < kMaxVars; ++k) m[k] = static_cast<std::uint8_t>(m1[k] + m2[k]);
        i64& x = r[m];
        x += c1 * c2;
        if (x == 0) r.erase(m);
      }
    return r;
  }
  bool is_zero(const T& a) const { return a.empty(); }
};

struct FpRing {
  u64 p;
  using T = u64;
  T zero() const { return 0; }
  T one() const { return 1; }
  T add(T a, T b) const { return zmod::add(a, b, p); }
  T neg(T a) const { return zmod::neg(a, p); }
  T mul(T a, T b) const { return zmod::mul(a, b, p); }
  bool is_zero(T a) const { return a == 0; }
};

// a + sum_j e_j eps_j with eps_j eps_k = 0.
template <class T>
struct Dual {
  T a;
  std::map<int, T> eps;
};

template <class R>
Dual<typename R::T> dadd(const R& r, const Dual<typename R::T>& x, const Dual<typename R::T>& y) {
  Dual<typename R::T> z{r.add(x.a, y.a), x.eps};
  for (const auto& [k, v] : y.eps) {
    auto it = z.eps.find(k);
    auto s = it == z.eps.end() ? v : r.add(it->second, v);
    if (r.is_zero(s))
      z.eps.erase(k);
    else
      z.eps[k] = s;
  }
  return z;
}

template <class R>
Dual<typename R::T> dmul(const R& r, const Dual<typename R::T>& x, const Dual<typename R::T>& y) {
  Dual<typename R::T> z{r.mul(x.a, y.a), {}};
  auto acc = [&](int k, const typename R::T& v) {
    if (r.is_zero(v)) return;
    auto it = z.eps.find(k);
    auto s = it == z.eps.end() ? v : r.add(it->second, v);
    if (r.is_zero(s))
      z.eps.erase(k);
    else
      z.eps[k] = s;
  };
  for (const auto& [k, v] : y.eps) acc(k, r.mul(x.a, v));
  for (const auto& [k, v] : x.eps) acc(k, r.mul(v, y.a));
  return z;
}

template <class R>
bool dzero(const R& r, const Dual<typename R::T>& x) {
  return r.is_zero(x.a) && x.eps.empty();
}

// Leibniz expansion, independent of any elimination.
template <class R>
Dual<typename R::T> ddet(const R& r, const std::vector<std::vector<Dual<typename R::T>>>& M) {
  const int n = static_cast<int>(M.size());
  using D = Dual<typename R::T>;
  D total{r.zero(), {}};
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    D term{r.one(), {}};
    bool zero = false;
    for (int i = 0; i < n && !zero; ++i) {
      const D& x = M[i][perm[i]];
      if (dzero(r, x)) zero = true;
      else term = dmul(r, term, x);
    }
    if (zero || dzero(r, term)) continue;
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    if (inv % 2) {
      term.a = r.neg(term.a);
      for (auto& [k, v] : term.eps) v = r.neg(v);
    }
    total = dadd(r, total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <class R>
bool dequal(const R& r, const Dual<typename R::T>& x, const Dual<typename R::T>& y) {
  Dual<typename R::T> ny{r.neg(y.a), {}};
  for (const auto& [k, v] : y.eps) ny.eps[k] = r.neg(v);
  return dzero(r, dadd(r, x, ny));
}

// Checks the identity for one assignment: Ys[k] is Y_{k+1}, Nent[i][j] the
// perturbation (pure eps part).
template <class R>
bool check_identity(const R& r, int m1, int m2, const std::vector<typename R::T>& Ys,
                    const std::vector<std::vector<Dual<typename R::T>>>& Nent, bool toeplitz_cofactor) {
  using D = Dual<typename R::T>;
  const int n = m1 + m2;
  auto toeplitz = [&](int size) {
    std::vector<std::vector<D>> U(size, std::vector<D>(size, D{r.zero(), {}}));
    for (int i = 0; i < size; ++i)
      for (int j = 0; j <= i; ++j) U[i][j].a = Ys[i - j];
    return U;
  };
  // U' = diag(U_m1, U_m2), or U_n when m2 = 0
  std::vector<std::vector<D>> U(n, std::vector<D>(n, D{r.zero(), {}}));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool b1 = i < m1 && j < m1, b2 = i >= m1 && j >= m1;
      if (b1 && i >= j) U[i][j].a = Ys[i - j];
      if (b2 && i >= j) U[i][j].a = Ys[i - j];
    }
  std::vector<std::vector<D>> UN = U;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) UN[i][j] = dadd(r, U[i][j], Nent[i][j]);
  const D lhs = ddet(r, UN);

  // Y_1^n
  D rhs{r.one(), {}};
  for (int i = 0; i < n; ++i) rhs.a = r.mul(rhs.a, Ys[0]);
  const auto Un = toeplitz_cofactor ? toeplitz(n) : U;
  auto trace_block = [&](int off, int size, int k) {
    D t{r.zero(), {}};
    for (int i = 0; i + k < size; ++i) t = dadd(r, t, Nent[off + i][off + i + k]);
    return t;
  };
  for (int k = 1; k <= n; ++k) {
    D tr = m2 == 0 ? trace_block(0, n, k - 1) : dadd(r, trace_block(0, m1, k - 1), trace_block(m1, m2, k - 1));
    if (dzero(r, tr)) continue;
    // cofactor (1, k) of U_n (or of U' itself in the literal reading)
    std::vector<std::vector<D>> minor;
    for (int i = 1; i < n; ++i) {
      std::vector<D> row;
      for (int j = 0; j < n; ++j)
        if (j != k - 1) row.push_back(Un[i][j]);
      minor.push_back(row);
    }
    D cof = n == 1 ? D{r.one(), {}} : ddet(r, minor);
    if ((k + 1) % 2) {
      cof.a = r.neg(cof.a);
      for (auto& [kk, v] : cof.eps) v = r.neg(v);
    }
    rhs = dadd(r, rhs, dmul(r, tr, cof));
  }
  return dequal(r, lhs, rhs);
}

}  // namespace

DetIdentityReport verify_det_identity(int m1, int m2, int trials, Rng& rng, u64 p, bool toeplitz_cofactor) {
  const int n = m1 + m2;
  if (m1 < 1 || m2 < 0) throw Error(ErrorCode::invalid_argument, "need m1 >= 1 and m2 >= 0");
  if (n > kMaxVars) throw Error(ErrorCode::size_guard, "n is limited to " + std::to_string(kMaxVars));
  DetIdentityReport rep;
  rep.n = n;
  rep.m1 = m1;
  rep.m2 = m2;

  // symbolic: Y_k indeterminates, one eps variable per entry of N
  {
    PolyRing r;
    std::vector<Poly> Ys(n);
    for (int k = 0; k < n; ++k) {
      Mono m{};
      m[k] = 1;
      Ys[k] = Poly{{m, 1}};
    }
    std::vector<std::vector<Dual<Poly>>> Nent(n, std::vector<Dual<Poly>>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) Nent[i][j] = Dual<Poly>{r.zero(), {{i * n + j, r.one()}}};
    rep.symbolic_ok = check_identity(r, m1, m2, Ys, Nent, toeplitz_cofactor);
  }
  // random evaluations in F_p[eps]/(eps^2)
  FpRing r{p};
  for (int t = 0; t < trials; ++t) {
    std::vector<u64> Ys(n);
    for (auto& y : Ys) y = rng() % p;
    std::vector<std::vector<Dual<u64>>> Nent(n, std::vector<Dual<u64>>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        u64 c = rng() % p;
        Nent[i][j] = Dual<u64>{0, {}};
        if (c) Nent[i][j].eps[0] = c;
      }
    ++rep.trials;
    if (!check_identity(r, m1, m2, Ys, Nent, toeplitz_cofactor)) ++rep.failures;
  }
  return rep;
}

}  // namespace dieu
