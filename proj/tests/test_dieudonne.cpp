#include "doctest.h"
#include "dieu/constructions.hpp"
#include "dieu/dieudonne.hpp"
#include "dieu/error.hpp"
#include "dieu/invariants.hpp"

using namespace dieu;

namespace {

Mat2 ordinary_slot(const CoeffTower& t) { return Mat2::of(t.one(), t.zero(), t.zero(), t.pi_pow(t.e())); }

Mat2 swap_pi(const CoeffTower& t) { return Mat2::of(t.zero(), t.pi(), t.pi(), t.zero()); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

}  // namespace

TEST_CASE("ordinary split module validates with the trivial pairing") {
  auto t = CoeffTower::build(5, 3, 2, 1, 6);
  std::vector<Mat2> A(3, ordinary_slot(*t));
  std::vector<RamElem> delta(3, t->one());
  DModule M = build_module(t, A, delta);
  CHECK(M.det_sum == 6);
  CHECK(M.det_ords == std::vector<int>{2, 2, 2});
  CHECK(M.delta.has_value());
}

TEST_CASE("the swap module needs a non-trivial pairing constant") {
  auto t = CoeffTower::build(5, 1, 2, 1, 4);
  // det = -pi^2 = -p, so delta = 1 gives -p on the left and p on the right
  CHECK(code_of([&] { build_module(t, {swap_pi(*t)}, std::vector<RamElem>{t->one()}); }) ==
        ErrorCode::pairing_incompatible);
  CHECK_NOTHROW(build_module(t, {swap_pi(*t)}));

  // over F_25 the constant -1 becomes sigma(y)/y for a Teichmuller y
  auto t2 = CoeffTower::build(5, 1, 2, 2, 4);
  auto delta = solve_pairing(*t2, {swap_pi(*t2)});
  REQUIRE(delta.has_value());
  CHECK_NOTHROW(build_module(t2, {swap_pi(*t2)}, delta));
}

TEST_CASE("validation errors") {
  auto t = CoeffTower::build(3, 1, 2, 1, 4);
  // etale-only module: V integral but the budget is 0
  CHECK(code_of([&] { build_module(t, {Mat2::identity(*t)}); }) == ErrorCode::det_budget);
  // diag(1, pi^3): p / pi^3 is not integral
  Mat2 bad = Mat2::of(t->one(), t->zero(), t->zero(), t->pi_pow(3));
  CHECK(code_of([&] { build_module(t, {bad}, std::nullopt, PolMode::general); }) == ErrorCode::v_nonintegral);
  // ... unless the adjugate absorbs the extra power: pi^2 * I has det pi^4 and p A^{-1} = I
  Mat2 scalar = Mat2::of(t->pi_pow(2), t->zero(), t->zero(), t->pi_pow(2));
  CHECK_NOTHROW(build_module(t, {scalar}, std::nullopt, PolMode::general));
  CHECK(code_of([&] { build_module(t, {scalar}); }) == ErrorCode::det_budget);
  // wrong number of slots
  CHECK(code_of([&] { build_module(t, {}); }) == ErrorCode::shape);
  // zero pairing scalar
  CHECK(code_of([&] { build_module(t, {ordinary_slot(*t)}, std::vector<RamElem>{t->zero()}); }) ==
        ErrorCode::degenerate_pairing);
}

TEST_CASE("slot validation reports the offending slot") {
  auto t = CoeffTower::build(3, 2, 1, 1, 4);
  Mat2 bad = Mat2::of(t->integer(9), t->zero(), t->zero(), t->one());
  try {
    build_module(t, {ordinary_slot(*t), bad}, std::nullopt, PolMode::general);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::v_nonintegral);
    REQUIRE(e.slot().has_value());
    CHECK(*e.slot() == 1);
  }
}

TEST_CASE("F V = p holds slot by slot") {
  auto t = CoeffTower::build(3, 2, 3, 1, 5);
  Rng rng(11);
  const int cmp = t->N() - 1;
  for (int trial = 0; trial < 40; ++trial) {
    // random matrix of det valuation <= e: unit times diag(1, pi^v) times unit
    int v = static_cast<int>(rng() % (t->e() + 1));
    Mat2 U = Mat2::of(t->random_unit(rng), t->random(rng), t->pi() * t->random(rng), t->random_unit(rng));
    Mat2 D = Mat2::of(t->one(), t->zero(), t->zero(), t->pi_pow(v));
    Mat2 A = U * D;
    Mat2 pAinv = p_times_inverse(A);
    Mat2 pI = Mat2::of(t->integer(3), t->zero(), t->zero(), t->integer(3));
    CHECK((A * pAinv).equal_mod_pk(pI, cmp));
    CHECK((pAinv * A).equal_mod_pk(pI, cmp));
  }
}

TEST_CASE("twisted power") {
  auto t = CoeffTower::build(5, 2, 1, 1, 6);
  Rng rng(3);
  Mat2 A0 = Mat2::of(t->random_unit(rng), t->one(), t->integer(-5), t->zero());
  Mat2 A1 = Mat2::of(t->random(rng), t->one(), t->integer(-5), t->zero());
  DModule M = build_module(t, {A0, A1});
  CHECK(twisted_power(M, 0) == A1.frobenius(1) * A0);
  CHECK(twisted_power(M, 1) == A0.frobenius(1) * A1);

  auto t1 = CoeffTower::build(5, 1, 2, 1, 4);
  DModule S = build_module(t1, {swap_pi(*t1)});
  CHECK(twisted_power(S, 0) == S.A[0]);
}

TEST_CASE("twisted power valuations agree across base slots") {
  auto t = CoeffTower::build(3, 3, 2, 1, 8);
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    int a = static_cast<int>(rng() % 4);
    DModule M = slope_family(t, a).module;
    Val tr0 = twisted_power(M, 0).trace().ord_pi();
    Val det0 = twisted_power(M, 0).det().ord_pi();
    CHECK(det0 == Val(M.det_sum));
    for (int b = 1; b < 3; ++b) {
      CHECK(twisted_power(M, b).trace().ord_pi() == tr0);
      CHECK(twisted_power(M, b).det().ord_pi() == det0);
    }
  }
}

TEST_CASE("slope family trace valuation for g = 6, a = 2") {
  auto t = CoeffTower::build(3, 3, 2, 1, 6);
  DModule M = slope_family(t, 2).module;
  CHECK(twisted_power(M, 0).trace().ord_pi() == Val(2));
}

TEST_CASE("iterated twisted products") {
  auto t = CoeffTower::build(5, 1, 2, 1, 6);
  DModule O = build_module(t, {ordinary_slot(*t)});
  for (int n = 1; n <= 4; ++n) CHECK(iterate_twisted(O, n) == Val(0));
  DModule S = build_module(t, {swap_pi(*t)});
  CHECK(iterate_twisted(S, 1) == Val(1));
  CHECK(iterate_twisted(S, 2) == Val(2));
  auto dbl = iterate_twisted_doubling(S, 2);
  REQUIRE(dbl.size() == 3);
  CHECK(dbl[0] == Val(1));
  CHECK(dbl[1] == Val(2));
  CHECK(dbl[2] == Val(4));
  CHECK(iterate_twisted(S, 4) == dbl[2]);
}

TEST_CASE("iterate_twisted is superadditive and reports exhaustion") {
  auto t = CoeffTower::build(3, 2, 2, 1, 5);
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    std::map<int, RamElem> c{{0, t->random(rng)}};
    DModule M = normal_form(t, {0}, c).module;
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        Val ma = iterate_twisted(M, a), mb = iterate_twisted(M, b), mab = iterate_twisted(M, a + b);
        if (!ma.is_inf() && !mb.is_inf()) CHECK(mab >= ma + mb);
      }
  }
  // supersingular with slope 1/2 at low precision: m_n = n * g / 2 runs past e N
  auto small = CoeffTower::build(3, 1, 2, 1, 2);
  DModule S = build_module(small, {swap_pi(*small)});
  CHECK(iterate_twisted(S, 8).is_inf());
}

TEST_CASE("reduction mod p") {
  auto t = CoeffTower::build(5, 1, 2, 1, 4);
  const CoeffTower& r = t->residue();
  DModule O = build_module(t, {ordinary_slot(*t)});
  ModPair op = reduce_mod_p(O);
  CHECK(op.F[0] == Mat2::of(r.one(), r.zero(), r.zero(), r.zero()));
  CHECK(op.V[0] == Mat2::of(r.zero(), r.zero(), r.zero(), r.one()));

  DModule S = build_module(t, {swap_pi(*t)});
  ModPair sp = reduce_mod_p(S);
  CHECK(sp.F[0] == Mat2::of(r.zero(), r.pi(), r.pi(), r.zero()));
  // p A^{-1} = p adj / (-p) = [[0, pi], [pi, 0]]
  CHECK(sp.V[0] == Mat2::of(r.zero(), r.pi(), r.pi(), r.zero()));

  // a normal-form slot: V bar has a unit in the Y column
  std::map<int, RamElem> c{{0, t->one()}};
  DModule N = normal_form(t, {0}, c).module;
  ModPair np = reduce_mod_p(N);
  CHECK((np.V[0](0, 1).is_unit() || np.V[0](1, 1).is_unit()));
}

TEST_CASE("dual modules") {
  auto t = CoeffTower::build(5, 1, 2, 2, 6);
  DModule S = non_rapoport_example(t).module;
  DModule Sd = dual_module(S);
  CHECK(lie_type(Sd).slots == std::vector<SlotPair>{{1, 1}});
  CHECK(Sd.delta.has_value());

  DModule O = build_module(t, {ordinary_slot(*t)}, std::vector<RamElem>{t->one()});
  DModule Od = dual_module(O);
  CHECK(newton_point(Od, NewtonMethod::oracle).ordinary());
  CHECK(lie_type(Od).rapoport(2));
}

TEST_CASE("double dual keeps the invariants") {
  auto t = CoeffTower::build(3, 3, 2, 2, 10);
  Rng rng(21);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<int> tau;
    std::map<int, RamElem> c;
    for (int i = 0; i < 3; ++i)
      if (rng() % 2) {
        tau.push_back(i);
        c.emplace(i, t->random(rng));
      }
    DModule M = normal_form(t, tau, c).module;
    DModule D2 = dual_module(dual_module(M));
    CHECK(lie_type(D2) == lie_type(M));
    CHECK(a_type(D2) == a_type(M));
    CHECK(newton_point(D2, NewtonMethod::oracle) == newton_point(M, NewtonMethod::oracle));
  }
}
