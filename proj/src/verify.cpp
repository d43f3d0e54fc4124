#include "dieu/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "dieu/constructions.hpp"
#include "dieu/error.hpp"
#include "dieu/hecke.hpp"
#include "dieu/invariants.hpp"

namespace dieu {

namespace {

struct Tally {
  Check c;
  Tally(int criterion, std::string name, std::string validates) {
    c.criterion = criterion;
    c.name = std::move(name);
    c.validates = std::move(validates);
  }
  void add(bool ok, const std::string& what) {
    ++c.instances;
    if (!ok) {
      ++c.failures;
      if (c.detail.empty()) c.detail = "first failure: " + what;
    }
  }
  Check done(const std::string& summary = "") {
    c.passed = c.failures == 0 && c.instances > 0;
    if (c.detail.empty()) c.detail = summary;
    return c;
  }
};

Rng rng_for(const VerifyConfig& cfg, int salt) { return Rng(cfg.seed * 1000003ULL + static_cast<u64>(salt)); }

// Precision that leaves the oracle room to separate every index in S(g).
int oracle_N(u64 p, int f) {
  int N = 4 * f + 4;
  while (N > 2) {
    u64 x = 1;
    bool ok = true;
    for (int i = 0; i < N && ok; ++i) {
      if (x > (u64(1) << 62) / p) ok = false;
      x *= p;
    }
    if (ok) break;
    --N;
  }
  return N;
}

std::shared_ptr<const CoeffTower> tower(u64 p, int f, int e, int ext) {
  return CoeffTower::build(p, f, e, ext, oracle_N(p, f));
}

std::string describe(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string params(u64 p, int f, int e) {
  return "p=" + std::to_string(p) + " f=" + std::to_string(f) + " e=" + std::to_string(e);
}

int twice_of(const Val& v, int g) { return v.is_inf() ? g : std::min(g, 2 * v.value()); }

// Both Newton methods must land on the expected point.
bool newton_is(const DModule& M, int twice) {
  const NewtonPoint want{M.g(), twice};
  return newton_point(M, NewtonMethod::oracle) == want && newton_point(M, NewtonMethod::fast) == want;
}

RamElem pi_power_unit(const CoeffTower& t, int k, Rng& rng) { return t.pi_pow(k) * t.random_unit(rng); }

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Check check_slope_family(const VerifyConfig&) {
  Tally T(1, "slope family", "the explicit family with parameter a has Newton point s(a), fast and oracle agreeing");
  for (int e = 1; e <= 3; ++e)
    for (int f = 1; f <= 4 && e * f <= 8; ++f) {
      auto t = tower(3, f, e, 1);
      for (int a = 0; 2 * a <= e * f; ++a) {
        DModule M = slope_family(t, a).module;
        T.add(newton_is(M, 2 * a), params(3, f, e) + " a=" + std::to_string(a));
      }
    }
  return T.done("all (e, f, a) with g <= 8");
}

Check check_t1_formula(const VerifyConfig& cfg) {
  Tally T(2, "t = 1 slope formula", "one-slot a-index: Newton index = min(g/2, ord c0)");
  Rng rng = rng_for(cfg, 2);
  for (u64 p : {3ULL, 5ULL})
    for (int f = 1; f <= 3; ++f)
      for (int e = 1; e <= 3; ++e) {
        auto t = tower(p, f, e, 1);
        const int g = e * f;
        for (int trial = 0; trial < 12; ++trial) {
          const int slot = static_cast<int>(rng() % f);
          const bool zero = trial % 10 == 9;
          const int k = 1 + static_cast<int>(rng() % (g + 1));
          RamElem c0 = zero ? t->zero() : pi_power_unit(*t, k, rng);
          DModule M = normal_form_entries(t, {slot}, {{slot, c0}}).module;
          T.add(newton_is(M, twice_of(c0.ord_pi(), g)), params(p, f, e) + " ord c0=" + c0.ord_pi().str());
        }
      }
  return T.done("216 random instances over p in {3,5}, f, e <= 3");
}

Check check_t2_formula(const VerifyConfig& cfg) {
  Tally T(3, "t = 2 slope formula", "two-slot a-index: Newton index = min(g/2, ord(u1 u2 + pi^(e l2)))");
  Rng rng = rng_for(cfg, 3);
  int cancelling = 0;
  for (u64 p : {3ULL, 5ULL})
    for (int f = 2; f <= 4; ++f)
      for (int e = 1; e <= 3; ++e) {
        auto t = tower(p, f, e, 1);
        const int g = e * f;
        for (int trial = 0; trial < 12; ++trial) {
          const int l = 1 + static_cast<int>(rng() % (f / 2));  // l2 <= l1
          const int r = static_cast<int>(rng() % f);
          const int s0 = r, s1 = (r + l) % f;
          RamElem c0, c1;
          if (trial % 3 == 0 && e * l >= 2) {
            // force the leading terms of u1 u2 and pi^(e l) to cancel
            const int k0 = 1 + static_cast<int>(rng() % (e * l - 1));
            RamElem u = t->random_unit(rng);
            const int m = 1 + static_cast<int>(rng() % g);
            c0 = t->pi_pow(k0) * u;
            c1 = -(t->pi_pow(e * l - k0) * u.frobenius(l).inverse()) + pi_power_unit(*t, m, rng);
            ++cancelling;
          } else {
            c0 = trial % 7 == 6 ? t->zero() : pi_power_unit(*t, 1 + static_cast<int>(rng() % g), rng);
            c1 = pi_power_unit(*t, 1 + static_cast<int>(rng() % g), rng);
          }
          const RamElem x = c0.frobenius(l) * c1 + t->pi_pow(e * l);
          DModule M = normal_form_entries(t, {std::min(s0, s1), std::max(s0, s1)}, {{s0, c0}, {s1, c1}}).module;
          T.add(newton_is(M, twice_of(x.ord_pi(), g)),
                params(p, f, e) + " tau={" + std::to_string(s0) + "," + std::to_string(s1) + "}");
        }
      }
  return T.done("216 random instances, " + std::to_string(cancelling) + " with forced cancellation");
}

Check check_degenerate_coefficients(const VerifyConfig&) {
  Tally T(4, "vanishing coefficients",
          "c = 0: t even gives index min(e sum l_even, e sum l_odd), t odd gives supersingular");
  for (int f = 1; f <= 5; ++f)
    for (int e = 1; e <= 2; ++e) {
      auto t = tower(3, f, e, 1);
      const int g = e * f;
      for (int mask = 0; mask < (1 << f); ++mask) {
        std::vector<int> tau;
        std::map<int, RamElem> c;
        for (int i = 0; i < f; ++i)
          if (mask >> i & 1) {
            tau.push_back(i);
            c.emplace(i, t->zero());
          }
        const int n = static_cast<int>(tau.size());
        int twice = g;
        if (n % 2 == 0) {
          int even = 0, odd = 0;
          for (int i = 1; i <= n; ++i) {
            const int prev = i == 1 ? tau[n - 1] - f : tau[i - 2];
            (i % 2 == 0 ? even : odd) += tau[i - 1] - prev;
          }
          twice = n == 0 ? 0 : 2 * e * std::min(even, odd);
        }
        DModule M = normal_form(t, tau, c).module;
        T.add(newton_is(M, twice), params(3, f, e) + " tau=" + describe(tau));
      }
    }
  return T.done("every tau for f <= 5, e <= 2");
}

Check check_spaced_bound(const VerifyConfig& cfg) {
  Tally T(5, "spaced lower bound", "spaced a-type: Newton index >= min(g/2, |a|)");
  Rng rng = rng_for(cfg, 5);
  const std::vector<std::tuple<u64, int, int>> shapes{{3, 2, 1}, {3, 2, 2}, {3, 3, 2}, {3, 4, 1}, {3, 4, 2},
                                                      {5, 2, 3}, {5, 3, 1}, {5, 4, 2}, {5, 3, 3}, {3, 4, 3}};
  long long sharp = 0;
  for (auto [p, f, e] : shapes) {
    auto t = tower(p, f, e, 1);
    const int g = e * f;
    for (int trial = 0; trial < 52; ++trial) {
      std::vector<int> a(f);
      for (auto& x : a) x = static_cast<int>(rng() % (e + 1));
      for (int i = 0; i < f; ++i)
        if (a[i] > 0 && a[(i + f - 1) % f] > 0) a[i] = 0;
      std::vector<int> tau;
      std::map<int, RamElem> c;
      int size = 0;
      for (int i = 0; i < f; ++i) {
        size += a[i];
        if (a[i] == 0) continue;
        tau.push_back(i);
        c.emplace(i, a[i] < e ? pi_power_unit(*t, a[i], rng) : t->pi_pow(e) * t->random(rng));
      }
      DModule M = normal_form_entries(t, tau, c).module;
      const std::string what = params(p, f, e) + " a=" + describe(a);
      if (a_type(M).rapoport_form != a) {
        T.add(false, what + " (a-type not realized)");
        continue;
      }
      const NewtonPoint n = newton_point(M, NewtonMethod::oracle);
      const int bound = std::min(g, 2 * size);
      T.add(n.twice_index >= bound, what);
      if (n.twice_index == bound) ++sharp;
    }
  }
  return T.done("520 random spaced normal forms, bound attained in " + std::to_string(sharp));
}

Check check_newton_strata_t1(const VerifyConfig&) {
  Tally T(6, "Newton strata at a-number one",
          "t_0 = ... = t_(m-1) = 0 with t_m a unit gives Newton point s(m)");
  for (int e = 1; e <= 6; ++e)
    for (int f = 1; e * f <= 6; ++f) {
      auto t = tower(3, f, e, 1);
      const CoeffTower& r = t->residue();
      const int g = e * f;
      DModule base = normal_form(t, {0}, {{0, t->zero()}}).module;
      const std::vector<int> target(f, 0);
      for (int twice = 0; twice <= g; ++twice) {
        if (!in_S(g, twice)) continue;
        const int first = (twice + 1) / 2;  // ceil(m)
        for (int variant = 0; variant < 2; ++variant) {
          Assignment a;
          for (auto [i, j] : deformation_keys(target, e)) {
            const int k = e * i + j;
            const bool one = k == first || (k > first && variant == 1);
            a.emplace(std::pair{i, j}, one ? r.wone() : r.wzero());
          }
          DModule M = deform_specialize(base, target, a).module;
          T.add(newton_is(M, twice),
                params(3, f, e) + " m=" + NewtonPoint{g, twice}.index_str() + " variant " + std::to_string(variant));
        }
      }
    }
  return T.done("every m in S(g), g <= 6, two fillings of the remaining coordinates");
}

Check check_ordinary_locus(const VerifyConfig& cfg) {
  Tally T(7, "ordinary locus", "the non-ordinary locus of the deformation is prod_{i in tau} t_(i,0) = 0");
  Rng rng = rng_for(cfg, 7);
  for (int f = 1; f <= 4; ++f)
    for (int e = 1; e <= 2; ++e) {
      auto t = tower(3, f, e, 2);
      const CoeffTower& r = t->residue();
      const std::vector<int> target(f, 0);
      for (int mask = 1; mask < (1 << f); ++mask) {
        std::vector<int> tau;
        std::map<int, RamElem> c;
        for (int i = 0; i < f; ++i)
          if (mask >> i & 1) {
            tau.push_back(i);
            c.emplace(i, t->zero());
          }
        DModule base = normal_form(t, tau, c).module;
        for (int trial = 0; trial < 50; ++trial) {
          Assignment a;
          for (auto key : deformation_keys(target, e)) {
            WittElem v = r.residue_random(rng);
            const bool pinned = key.second == 0 && (mask >> key.first & 1);
            while (pinned && v.is_zero()) v = r.residue_random(rng);
            a.emplace(key, v);
          }
          const std::string what = params(3, f, e) + " tau=" + describe(tau);
          T.add(newton_point(deform_specialize(base, target, a).module, NewtonMethod::oracle).ordinary(),
                what + " all t_(i,0) nonzero");
          const int i = tau[rng() % tau.size()];
          a[{i, 0}] = r.wzero();
          T.add(!newton_point(deform_specialize(base, target, a).module, NewtonMethod::oracle).ordinary(),
                what + " t_(" + std::to_string(i) + ",0) = 0");
        }
      }
    }
  return T.done("every nonempty tau for f <= 4, e <= 2, 50 assignments each");
}

Check check_spaced_density(const VerifyConfig& cfg) {
  Tally T(8, "spaced density", "spaced target: a random point of the stratum has slope s(|a|)");
  Rng rng = rng_for(cfg, 8);
  constexpr int trials = 100;
  double worst = 2.0;
  std::string worst_at;
  for (int e = 1; e <= 2; ++e)
    for (int f = 1; f <= 4; ++f) {
      auto t = tower(3, f, e, 4);
      const CoeffTower& r = t->residue();
      ATypePoset P = atype_poset(e, f);
      for (const auto& node : P.nodes) {
        if (!node.spaced) continue;
        const auto& a = node.a;
        std::vector<int> tau;
        std::map<int, RamElem> c;
        int size = 0;
        for (int i = 0; i < f; ++i) {
          size += a[i];
          if (a[i] == 0) continue;
          tau.push_back(i);
          c.emplace(i, a[i] < e ? pi_power_unit(*t, a[i], rng) : t->zero());
        }
        DModule base = normal_form_entries(t, tau, c).module;
        int hits = 0;
        for (int trial = 0; trial < trials; ++trial) {
          Assignment as;
          for (auto key : deformation_keys(a, e)) as.emplace(key, r.residue_random(rng));
          DModule M = deform_specialize(base, a, as).module;
          if (newton_point(M, NewtonMethod::oracle) == NewtonPoint::from_index(e * f, size)) ++hits;
        }
        const double freq = static_cast<double>(hits) / trials;
        if (freq < worst) {
          worst = freq;
          worst_at = params(3, f, e) + " a=" + describe(a);
        }
        T.add(freq >= 0.99, params(3, f, e) + " a=" + describe(a) + " frequency " + std::to_string(freq));
      }
    }
  std::ostringstream os;
  os << "every spaced target for e <= 2, f <= 4 over F_(3^(4f)), " << trials << " trials each; lowest frequency "
     << worst << " at " << worst_at;
  return T.done(os.str());
}

Check check_superspecial_neighbourhood(const VerifyConfig& cfg) {
  Tally T(0, "superspecial neighbourhood",
          "near the superspecial point, targets with a^i <= e/2 contain a point of slope s(|a|)");
  Rng rng = rng_for(cfg, 100);
  for (int e = 2; e <= 3; ++e)
    for (int f = 1; f <= 3; ++f) {
      auto t = tower(3, f, e, 4);
      const CoeffTower& r = t->residue();
      std::vector<int> all(f);
      std::map<int, RamElem> zero;
      for (int i = 0; i < f; ++i) {
        all[i] = i;
        zero.emplace(i, t->zero());
      }
      DModule base = normal_form(t, all, zero).module;
      const int half = e / 2;
      int count = 1;
      for (int i = 0; i < f; ++i) count *= half + 1;
      for (int code = 0; code < count; ++code) {
        std::vector<int> a(f);
        int x = code, size = 0;
        for (auto& v : a) {
          v = x % (half + 1);
          x /= half + 1;
          size += v;
        }
        int hits = 0;
        for (int trial = 0; trial < 20; ++trial) {
          // only the coordinates t_(i, a^i) move
          Assignment as;
          for (auto key : deformation_keys(a, e))
            as.emplace(key, key.second == a[key.first] ? r.residue_random(rng) : r.wzero());
          DModule M = deform_specialize(base, a, as).module;
          if (newton_point(M, NewtonMethod::oracle) == NewtonPoint::from_index(e * f, size)) ++hits;
        }
        T.add(hits > 0, params(3, f, e) + " a=" + describe(a));
      }
    }
  return T.done("every a with a^i <= e/2 for e in {2,3}, f <= 3");
}

Check check_hecke(const VerifyConfig& cfg) {
  Tally T(9, "Hecke fibre", "stable isotropic planes: 1 + (p+1)(q-1) chart points on p+1 lines satisfying the local equations");
  std::ostringstream os;
  for (u64 p : cfg.hecke_primes) {
    HeckeSetting S = build_setting(p, cfg.hecke_s);
    auto planes = enumerate_stable_planes(S, true, cfg.size_cap);
    VarietyReport R = compare_variety(S, planes, cfg.size_cap);
    const std::string q = "q=" + std::to_string(R.q);
    T.add(R.chart_count == R.expected_count, q + " count " + std::to_string(R.chart_count));
    T.add(R.equations_verified, q + " local equations");
    T.add(R.displayed_polys_verified, q + " displayed polynomials");
    T.add(R.lines == static_cast<int>(p + 1), q + " lines " + std::to_string(R.lines));
    T.add(R.matches_parametrization, q + " parametrization");
    T.add(R.matches_equation_solving, q + " equation solving");
    T.add(R.extras_on_t1_t2_zero, q + " extra variety points off t1 = t2 = 0");
    if (os.tellp() > 0) os << "; ";
    os << q << ": " << R.chart_count << " chart points, " << R.lines << " lines, variety has " << R.variety_count
       << " points (" << R.extra_variety_points.size() << " extra on t1 = t2 = 0)";
  }
  return T.done(os.str());
}

Check check_non_rapoport(const VerifyConfig&) {
  Tally T(10, "non-Rapoport example",
          "F X = pi Y, F Y = pi X: not Rapoport, DP, supersingular, superspecial, Lie type and a-type {1,1}");
  for (u64 p : {5ULL, 7ULL, 11ULL}) {
    auto t = CoeffTower::build(p, 1, 2, 2, 6);
    Built b = non_rapoport_example(t);
    const std::string w = "p=" + std::to_string(p);
    T.add(!b.pairing_omitted, w + " pairing");
    T.add(classify(b.module) == Flags{false, true, false, true, true}, w + " flags");
    T.add(lie_type(b.module).slots == std::vector<SlotPair>{{1, 1}}, w + " Lie type");
    T.add(a_type(b.module).slots == std::vector<SlotPair>{{1, 1}}, w + " a-type");
    T.add(newton_point(b.module, NewtonMethod::oracle).supersingular(), w + " Newton point");
  }
  return T.done("p in {5, 7, 11} over F_(p^2)");
}

Check check_formulas(const VerifyConfig& cfg) {
  Tally T(11, "formula suite",
          "stratum, DP and deformation dimensions, polarization degree, Newton codimension, superspecial tables, duality");
  // stratum dimension g - |a| and its monotonicity
  for (int e = 1; e <= 3; ++e)
    for (int f = 1; f <= 4; ++f) {
      ATypePoset P = atype_poset(e, f);
      bool ok = true;
      for (const auto& n : P.nodes) {
        int size = 0;
        for (int v : n.a) size += v;
        ok = ok && n.dim == e * f - size && n.lambda <= size && (n.spaced == (n.lambda == size));
      }
      T.add(ok && P.nodes.size() == static_cast<size_t>(std::pow(e + 1, f)), "poset e=" + std::to_string(e) +
                                                                                 " f=" + std::to_string(f));
    }
  // DP stratum dimension g - 2 sum min, over every Lie type with budget g
  for (int e = 1; e <= 3; ++e)
    for (int f = 1; f <= 3; ++f) {
      const int g = e * f;
      std::vector<SlotPair> choices;
      for (int x = 0; x <= e; ++x)
        for (int y = x; y <= e; ++y) choices.push_back({x, y});
      const int n = static_cast<int>(choices.size());
      int total = 1;
      for (int i = 0; i < f; ++i) total *= n;
      for (int code = 0; code < total; ++code) {
        LieType L;
        int x = code, sum = 0, mins = 0;
        for (int i = 0; i < f; ++i) {
          L.slots.push_back(choices[x % n]);
          sum += choices[x % n][0] + choices[x % n][1];
          mins += choices[x % n][0];
          x /= n;
        }
        if (sum != g) continue;
        T.add(dp_stratum_dim(L, e) == g - 2 * mins, "DP dimension");
      }
    }
  // frozen values of the deformation dimensions and polarization exponent
  auto dd = deformation_dims(LieType{{{1, 1}}}, 2);
  T.add(dd.unrestricted == 4 && dd.dp == 4 && dd.polarized == 3, "deformation dims {1,1}, e=2");
  dd = deformation_dims(LieType{{{0, 3}, {0, 3}}}, 3);
  T.add(dd.unrestricted == 6 && dd.dp == 6 && dd.polarized == 6, "deformation dims Rapoport");
  T.add(!deformation_dims(LieType{{{1, 2}, {0, 1}}}, 2).dp_matches_unrestricted, "deformation dims off DP");
  T.add(polarization_degree_exponent(LieType{{{1, 1}, {0, 2}, {1, 1}}}, 2) == 0, "polarization exponent 0");
  T.add(polarization_degree_exponent(LieType{{{1, 2}, {0, 1}}}, 2, Rotation::fixed) == 2, "polarization exponent 2");
  T.add(polarization_degree_exponent(LieType{{{1, 1}, {0, 1}, {0, 0}}}, 1, Rotation::fixed) == 4,
        "polarization exponent 4");
  T.add(polarization_degree_exponent(LieType{{{0, 1}, {1, 2}}}, 2) == 2, "polarization exponent after rotation");
  // codimension ceil(m)
  for (int g = 1; g <= 10; ++g)
    for (int twice = 0; twice <= g; ++twice)
      if (in_S(g, twice)) T.add(newton_stratum_codim(NewtonPoint{g, twice}) == (twice + 1) / 2, "codimension");
  // superspecial tables against the builders
  for (int e = 1; e <= 3; ++e)
    for (int f = 1; f <= 3; ++f) {
      auto t = CoeffTower::build(3, f, e, 2, f + 3);
      for (const auto& pat : superspecial_types(e, f, false)) {
        DModule M = superspecial(t, pat[0][0], pat[0][1], SuperspecialVariant::general).module;
        const AType a = a_type(M);
        T.add(lie_type(M).slots == pat && a.slots == pat && a.a_number == e * f && classify(M).superspecial,
              "superspecial pattern " + params(3, f, e));
      }
    }
  // duality formulas against the dual module
  Rng rng = rng_for(cfg, 11);
  for (auto [p, f, e] : std::vector<std::tuple<u64, int, int>>{{3, 1, 2}, {3, 2, 2}, {5, 3, 1}, {2, 2, 3}, {3, 3, 2}}) {
    auto t = CoeffTower::build(p, f, e, 2, f + 4);
    for (int trial = 0; trial < 24; ++trial) {
      DModule M = random_module(t, rng, trial % 2 == 0).module;
      const LieType L = lie_type(M);
      const AType a = a_type(M);
      DModule D = dual_module(M);
      DualInvariants di = dual_invariants(L, a, e);
      T.add(lie_type(D) == di.lie && a_type(D).slots == di.a, "duality " + params(p, f, e));
    }
  }
  return T.done("closed forms against enumeration, builders and 120 random dual modules");
}

Check check_det_identity(const VerifyConfig& cfg) {
  Tally T(12, "determinant identity", "det(U + N) expansion for square-zero N, all block splits");
  Rng rng = rng_for(cfg, 12);
  for (int n = 1; n <= 6; ++n)
    for (int m1 = n; m1 >= 1; --m1) {
      const int m2 = n - m1;
      auto r = verify_det_identity(m1, m2, 100, rng);
      T.add(r.symbolic_ok && r.failures == 0 && r.trials >= 100,
            "n=" + std::to_string(n) + " split " + std::to_string(m1) + "+" + std::to_string(m2));
    }
  return T.done("n <= 6, symbolic expansion plus 100 square-zero evaluations per split");
}

Check check_arith(const VerifyConfig& cfg) {
  Tally T(13, "arithmetic kernel", "ring axioms, Frobenius, valuations and Teichmuller lifts");
  Rng rng = rng_for(cfg, 13);
  const std::vector<TowerParams> towers{{3, 2, 2, 1, 4, {}}, {5, 3, 1, 2, 5, {}}, {2, 2, 3, 1, 6, {}},
                                        {7, 1, 2, 1, 5, {}}, {3, 1, 2, 2, 5, {-3, 3}}};
  for (const auto& tp : towers) {
    auto t = CoeffTower::build(tp);
    const int d = t->degree();
    const int cap = t->e() * t->N();
    const std::string w = params(tp.p, tp.f, tp.e);
    auto sample = [&] {
      const int k = static_cast<int>(rng() % (cap + 1));
      return t->pi_pow(k) * t->random(rng);
    };
    for (int i = 0; i < 500; ++i) {
      const RamElem x = sample(), y = sample(), z = sample();
      T.add((x * y) * z == x * (y * z), w + " associativity");
      T.add(x * (y + z) == x * y + x * z, w + " distributivity");
      T.add(x * y == y * x && x + y == y + x, w + " commutativity");
      T.add(x - x == t->zero() && x + t->zero() == x && x * t->one() == x, w + " identities");
      T.add((x * y).frobenius(1) == x.frobenius(1) * y.frobenius(1) &&
                (x + y).frobenius(1) == x.frobenius(1) + y.frobenius(1),
            w + " Frobenius is a ring map");
      T.add(x.frobenius(d) == x && x.frobenius(-1).frobenius(1) == x, w + " Frobenius order");
      const Val vx = x.ord_pi(), vy = y.ord_pi(), vxy = (x * y).ord_pi();
      const bool mult = (vx + vy).is_inf() || (vx + vy).value() >= cap ? vxy.is_inf() : vxy == vx + vy;
      T.add(mult && (x + y).ord_pi() >= min(vx, vy) && x.frobenius(1).ord_pi() == vx, w + " valuation");
      const WittElem a = t->residue_random(rng), b = t->residue_random(rng);
      const WittElem ta = t->teichmuller(a);
      T.add(t->teichmuller(a * b) == ta * t->teichmuller(b) && t->reduce(ta) == a && ta.pow(t->q()) == ta &&
                ta.frobenius(1) == t->teichmuller(a.frobenius(1)),
            w + " Teichmuller");
    }
  }
  return T.done("5 towers, 500 random triples each");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"arith", "slopes", "strata", "deform", "hecke", "all"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg) {
  using Fn = Check (*)(const VerifyConfig&);
  using Entry = std::pair<int, Fn>;
  static const std::map<std::string, std::vector<Entry>> suites{
      {"arith", {{13, check_arith}}},
      {"slopes",
       {{1, check_slope_family},
        {2, check_t1_formula},
        {3, check_t2_formula},
        {4, check_degenerate_coefficients},
        {5, check_spaced_bound},
        {10, check_non_rapoport}}},
      {"strata", {{11, check_formulas}, {12, check_det_identity}}},
      {"deform",
       {{6, check_newton_strata_t1},
        {7, check_ordinary_locus},
        {8, check_spaced_density},
        {0, check_superspecial_neighbourhood}}},
      {"hecke", {{9, check_hecke}}},
  };
  SuiteReport R{name, {}};
  std::vector<Entry> fns;
  if (name == "all") {
    for (const auto& [suite, entries] : suites) fns.insert(fns.end(), entries.begin(), entries.end());
    std::stable_sort(fns.begin(), fns.end(), [](const Entry& a, const Entry& b) {
      return (a.first == 0 ? 100 : a.first) < (b.first == 0 ? 100 : b.first);
    });
  } else {
    auto it = suites.find(name);
    if (it == suites.end()) throw Error(ErrorCode::unknown_suite, "unknown suite '" + name + "'");
    fns = it->second;
  }
  for (auto [criterion, fn] : fns) {
    try {
      R.checks.push_back(fn(cfg));
    } catch (const Error& e) {
      Check c;
      c.criterion = criterion;
      c.name = "aborted";
      c.detail = std::string(to_string(e.code())) + ": " + e.what();
      R.checks.push_back(c);
    }
  }
  return R;
}

}  // namespace dieu
