#include "dieu/constructions.hpp"

#include <algorithm>
#include <set>

#include "dieu/error.hpp"

namespace dieu {

namespace {

RamElem P0(const CoeffTower& t) {
  // p / pi^e, a unit (1 for the default Eisenstein polynomial)
  RamElem x = t.integer(static_cast<i64>(t.p()));
  for (int i = 0; i < t.e(); ++i) x = x.div_pi();
  return x;
}

struct Chain {
  std::vector<int> k;
  std::vector<RamElem> w;
};

// delta_i = pi^k_i w_i with w_0 = y; entry f closes the cycle.
Chain run_chain(const std::vector<Mat2>& A, const RamElem& y, const RamElem& p0,
                const std::vector<std::pair<int, RamElem>>& split) {
  const int f = static_cast<int>(A.size());
  const int e = y.tower().e();
  Chain c;
  c.k.push_back(0);
  c.w.push_back(y);
  for (int i = 1; i <= f; ++i) {
    const auto& [v, u] = split[i % f];
    c.k.push_back(c.k.back() + e - v);
    c.w.push_back(p0 * c.w.back().frobenius(1) * u.inverse());
  }
  return c;
}

}  // namespace

std::optional<std::vector<RamElem>> solve_pairing(const CoeffTower& t, const std::vector<Mat2>& A,
                                                  std::string* why) {
  auto fail = [&](const std::string& msg) -> std::optional<std::vector<RamElem>> {
    if (why) *why = msg;
    return std::nullopt;
  };
  const int f = static_cast<int>(A.size());
  const int cmp = std::max(1, t.N() - 1);
  std::vector<std::pair<int, RamElem>> split;
  for (const auto& M : A) split.push_back(pi_split(M.det()));
  const RamElem p0 = P0(t);

  Chain c1 = run_chain(A, t.one(), p0, split);
  if (c1.k[f] != 0) return fail("determinant valuations do not sum to g; no pairing of this shape");
  // chain(y)_f = c * sigma^f(y); we need sigma^f(y) / y = c^{-1}
  RamElem r = c1.w[f].inverse();
  RamElem y = t.one();
  if (!r.equal_mod_pk(t.one(), cmp)) {
    for (int j = 1; j < t.e(); ++j)
      if (!r.coeff(j).equal_mod_pk(t.wzero(), cmp)) return fail("cyclic pairing constant is not in W");
    WittElem r0 = r.coeff(0);
    if (!r0.equal_mod_pk(t.teichmuller(r0), cmp)) return fail("cyclic pairing constant is not a Teichmuller unit");
    const u64 q = t.q();
    u64 jlog = 0;
    bool found = false;
    if (t.p() != 2 && r0.equal_mod_pk(t.wint(-1), cmp)) {
      jlog = (q - 1) / 2;
      found = true;
    } else if (q <= 1000000) {
      const CoeffTower& res = t.residue();
      WittElem target = t.reduce(r0);
      WittElem gen = res.wgen();
      WittElem cur = res.wone();
      for (u64 j = 0; j + 1 < q; ++j) {
        if (cur == target) {
          jlog = j;
          found = true;
          break;
        }
        cur = cur * gen;
      }
    }
    if (!found) return fail("cyclic pairing constant has no computable discrete logarithm");
    u64 m = checked_pow(t.p(), t.f()) - 1;
    if (jlog % m != 0)
      return fail("sigma^f(y)/y = c has no solution over this field (for c = -1 an even extension is needed)");
    y = t.from_witt(t.wgen().pow(jlog / m));
  }
  Chain c = run_chain(A, y, p0, split);
  if (!c.w[f].equal_mod_pk(y, cmp)) return fail("internal: pairing chain did not close");
  int kmin = *std::min_element(c.k.begin(), c.k.begin() + f);
  std::vector<RamElem> delta;
  for (int i = 0; i < f; ++i) delta.push_back(t.pi_pow(c.k[i] - kmin) * c.w[i]);
  return delta;
}

Built assemble(std::shared_ptr<const CoeffTower> tower, std::vector<Mat2> A) {
  Built b;
  std::string why;
  auto delta = solve_pairing(*tower, A, &why);
  b.module = build_module(tower, std::move(A), delta);
  if (!delta) {
    b.pairing_omitted = true;
    b.note = why;
  }
  return b;
}

namespace {

Mat2 rowform(const CoeffTower& t, const RamElem& x) {
  // [[x, 1], [-p, 0]]
  return Mat2::of(x, t.one(), t.integer(-static_cast<i64>(t.p())), t.zero());
}

void check_tau(const std::vector<int>& tau, int f) {
  std::set<int> s(tau.begin(), tau.end());
  if (s.size() != tau.size()) throw Error(ErrorCode::invalid_argument, "a-index has repeated slots");
  for (int i : tau)
    if (i < 0 || i >= f) throw Error(ErrorCode::invalid_argument, "a-index slot out of range", i);
}

}  // namespace

Built slope_family(std::shared_ptr<const CoeffTower> tower, int a) {
  const CoeffTower& t = *tower;
  const int e = t.e(), f = t.f(), g = t.g();
  if (a < 0 || 2 * a > g) throw Error(ErrorCode::invalid_argument, "need 0 <= a <= g/2");
  const int d = a / e, r = a % e;
  std::vector<Mat2> A(f);
  for (int i = 1; i <= f; ++i) {
    Mat2 M;
    if (i <= 2 * d)
      M = rowform(t, t.zero());
    else if (i < f)
      M = rowform(t, t.one());
    else
      M = rowform(t, t.pi_pow(r));
    A[i % f] = M;
  }
  return assemble(tower, std::move(A));
}

Built normal_form_entries(std::shared_ptr<const CoeffTower> tower, const std::vector<int>& tau,
                          const std::map<int, RamElem>& entries) {
  const CoeffTower& t = *tower;
  const int f = t.f();
  check_tau(tau, f);
  std::set<int> keys;
  for (const auto& [i, x] : entries) keys.insert(i);
  if (keys != std::set<int>(tau.begin(), tau.end()))
    throw Error(ErrorCode::key_mismatch, "coefficients must be given exactly on the a-index");
  const RamElem pie = t.pi_pow(t.e());
  std::vector<Mat2> A;
  for (int i = 0; i < f; ++i) {
    auto it = entries.find(i);
    if (it == entries.end()) {
      A.push_back(Mat2::of(t.one(), t.zero(), t.zero(), pie));
    } else {
      if (it->second.is_unit())
        throw Error(ErrorCode::invalid_argument, "a slot in the a-index needs a non-unit coefficient", i);
      A.push_back(Mat2::of(it->second, t.one(), pie, t.zero()));
    }
  }
  return assemble(tower, std::move(A));
}

Built normal_form(std::shared_ptr<const CoeffTower> tower, const std::vector<int>& tau,
                  const std::map<int, RamElem>& c) {
  std::map<int, RamElem> entries;
  for (const auto& [i, x] : c) entries.emplace(i, x.mul_pi());
  return normal_form_entries(tower, tau, entries);
}

Built superspecial(std::shared_ptr<const CoeffTower> tower, int e1, int e2, SuperspecialVariant variant) {
  const CoeffTower& t = *tower;
  const int e = t.e(), f = t.f();
  std::vector<Mat2> A;
  if (variant == SuperspecialVariant::rapoport) {
    // F X_i = -Y_{i+1}, F Y_i = p X_{i+1}
    for (int i = 0; i < f; ++i)
      A.push_back(Mat2::of(t.zero(), t.integer(-1), t.integer(static_cast<i64>(t.p())), t.zero()));
    return assemble(tower, std::move(A));
  }
  if (e1 < 0 || e2 < 0 || e1 > e || e2 > e) throw Error(ErrorCode::invalid_argument, "need 0 <= e1, e2 <= e");
  const RamElem v = P0(t);
  auto block = [&](int x, int y) { return Mat2::of(t.zero(), -t.pi_pow(x), t.pi_pow(y) * v, t.zero()); };
  if (f % 2 == 1) {
    if (e1 + e2 != e) throw Error(ErrorCode::parity_mismatch, "for odd f the exponents must satisfy e1 + e2 = e");
    for (int i = 0; i < f; ++i) A.push_back(block(e1, e2));
  } else {
    for (int i = 0; i < f; ++i) A.push_back(i % 2 == 0 ? block(e1, e2) : block(e - e2, e - e1));
  }
  return assemble(tower, std::move(A));
}

std::vector<std::pair<int, int>> deformation_keys(const std::vector<int>& target, int e) {
  std::vector<std::pair<int, int>> keys;
  for (int i = 0; i < static_cast<int>(target.size()); ++i)
    for (int j = target[i]; j < e; ++j) keys.emplace_back(i, j);
  return keys;
}

Built deform_specialize(const DModule& base, const std::vector<int>& target, const Assignment& assignment) {
  const CoeffTower& t = *base.tower;
  const int f = base.f(), e = t.e();
  if (static_cast<int>(target.size()) != f) throw Error(ErrorCode::shape, "target a-type needs f entries");
  const RamElem pie = t.pi_pow(e);

  std::vector<bool> in_tau(f, false);
  std::vector<int> base_a(f, 0);
  for (int i = 0; i < f; ++i) {
    const Mat2& A = base.A[i];
    if (A(0, 1) == t.one() && A(1, 0) == pie && A(1, 1).is_zero() && !A(0, 0).is_unit()) {
      in_tau[i] = true;
      base_a[i] = std::min(e, A(0, 0).ord_pi().value_or(e));
    } else if (A == Mat2::of(t.one(), t.zero(), t.zero(), pie)) {
      in_tau[i] = false;
    } else {
      throw Error(ErrorCode::shape, "base module is not in normal form", i);
    }
  }
  for (int i = 0; i < f; ++i) {
    if (target[i] < 0 || target[i] > e) throw Error(ErrorCode::invalid_argument, "target a-type out of range", i);
    if (target[i] > base_a[i])
      throw Error(ErrorCode::window, "target a-type exceeds the base a-type", i);
  }
  const auto keys = deformation_keys(target, e);
  const std::set<std::pair<int, int>> keyset(keys.begin(), keys.end());
  for (const auto& [key, val] : assignment) {
    if (keyset.count(key)) continue;
    const auto [i, j] = key;
    if (i >= 0 && i < f && (j < target[i] || j >= e))
      throw Error(ErrorCode::window, "coordinate (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") lies outside the deformation window", i);
    throw Error(ErrorCode::key_mismatch, "unknown deformation coordinate");
  }
  for (const auto& key : keys)
    if (!assignment.count(key))
      throw Error(ErrorCode::key_mismatch,
                  "missing deformation coordinate (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");

  std::vector<Mat2> A;
  for (int i = 0; i < f; ++i) {
    RamElem S = t.zero();
    for (int j = target[i]; j < e; ++j) S += t.pi_pow(j) * t.teichmuller(assignment.at({i, j}));
    if (in_tau[i])
      A.push_back(Mat2::of(base.A[i](0, 0) + S, t.one(), pie, t.zero()));
    else
      A.push_back(Mat2::of(t.one(), t.zero(), S * pie, pie));
  }
  return assemble(base.tower, std::move(A));
}

Built random_module(std::shared_ptr<const CoeffTower> tower, Rng& rng, bool separable) {
  const CoeffTower& t = *tower;
  const int e = t.e(), f = t.f();
  std::vector<int> ex(2 * f, 0);
  if (separable) {
    // distribute g = e f units over 2f boxes of capacity e
    for (int placed = 0; placed < e * f;) {
      int k = static_cast<int>(rng() % (2 * f));
      if (ex[k] < e) {
        ++ex[k];
        ++placed;
      }
    }
  } else {
    for (auto& x : ex) x = static_cast<int>(rng() % (e + 1));
  }
  auto unimodular = [&] {
    // lower times upper triangular with unit diagonals
    Mat2 L = Mat2::of(t.random_unit(rng), t.zero(), t.random(rng), t.random_unit(rng));
    Mat2 U = Mat2::of(t.random_unit(rng), t.random(rng), t.zero(), t.random_unit(rng));
    return rng() % 2 ? L * U : U * L;
  };
  std::vector<Mat2> A;
  for (int i = 0; i < f; ++i) {
    Mat2 D = Mat2::of(t.pi_pow(ex[2 * i]), t.zero(), t.zero(), t.pi_pow(ex[2 * i + 1]));
    A.push_back(unimodular() * D * unimodular());
  }
  if (!separable) {
    Built b;
    b.module = build_module(tower, std::move(A), std::nullopt, PolMode::general);
    b.pairing_omitted = true;
    b.note = "general mode";
    return b;
  }
  return assemble(tower, std::move(A));
}

Built non_rapoport_example(std::shared_ptr<const CoeffTower> tower) {
  const CoeffTower& t = *tower;
  if (t.f() != 1 || t.e() != 2) throw Error(ErrorCode::invalid_argument, "this example needs f = 1 and e = 2");
  if (t.p() == 2) throw Error(ErrorCode::invalid_argument, "this example needs an odd prime");
  std::vector<Mat2> A{Mat2::of(t.zero(), t.pi(), t.pi(), t.zero())};
  Built b = assemble(tower, std::move(A));
  if (t.p() == 3) {
    std::string w = "p = 3 lies outside the range p > 3 where this example is usually stated";
    b.note = b.note.empty() ? w : b.note + "; " + w;
  }
  return b;
}

}  // namespace dieu
