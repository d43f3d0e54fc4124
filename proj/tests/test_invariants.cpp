#include "doctest.h"
#include "dieu/constructions.hpp"
#include "dieu/error.hpp"
#include "dieu/invariants.hpp"

using namespace dieu;

namespace {

using Row = std::array<RamElem, 2>;

DModule ordinary(std::shared_ptr<const CoeffTower> t) {
  std::vector<Mat2> A(t->f(), Mat2::of(t->one(), t->zero(), t->zero(), t->pi_pow(t->e())));
  return build_module(t, A);
}

}  // namespace

TEST_CASE("elementary divisors over k[pi]/pi^e") {
  auto t = CoeffTower::build(3, 1, 3, 1, 4);
  const CoeffTower& r = t->residue();
  CHECK(elementary_divisors({Row{r.pi(), r.zero()}, Row{r.zero(), r.pi_pow(2)}}, 3) == SlotPair{1, 2});
  CHECK(elementary_divisors({Row{r.pi_pow(2), r.pi()}}, 3) == SlotPair{1, 3});
  CHECK(elementary_divisors({Row{r.zero(), r.zero()}}, 3) == SlotPair{3, 3});
  CHECK(elementary_divisors({Row{r.one(), r.one()}, Row{r.one(), r.integer(2)}}, 3) == SlotPair{0, 0});
  // (pi, pi) and (pi, pi + pi^2): span is pi * <(1,1), (0, pi)>
  CHECK(elementary_divisors({Row{r.pi(), r.pi()}, Row{r.pi(), r.pi() + r.pi_pow(2)}}, 3) == SlotPair{1, 2});
}

TEST_CASE("elementary divisors match a brute-force cokernel count") {
  // |coker| = p^(d1 + d2) over F_p; count the span by enumeration
  auto t = CoeffTower::build(2, 1, 3, 1, 5);
  const CoeffTower& r = t->residue();
  Rng rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Row> rows;
    int nr = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < nr; ++i) {
      RamElem a = r.random(rng), b = r.random(rng);
      if (rng() % 2) a = a.mul_pi();
      if (rng() % 2) b = b.mul_pi();
      rows.push_back({a, b});
    }
    SlotPair ex = elementary_divisors(rows, 3);
    // span over F_2 of {pi^k row}: enumerate all k[pi]-combinations via F_2-span of pi^k rows
    std::vector<std::vector<u64>> gens;
    for (const auto& row : rows) {
      Row cur = row;
      for (int k = 0; k < 3; ++k) {
        std::vector<u64> v;
        for (const auto& x : cur)
          for (int j = 0; j < 3; ++j) v.push_back(x.coeff(j).coeff(0));
        gens.push_back(v);
        cur = {cur[0].mul_pi(), cur[1].mul_pi()};
      }
    }
    // Gaussian elimination over F_2 for the rank
    int rank = 0;
    for (int col = 0; col < 6; ++col) {
      int piv = -1;
      for (int i = rank; i < static_cast<int>(gens.size()); ++i)
        if (gens[i][col]) piv = i;
      if (piv < 0) continue;
      std::swap(gens[piv], gens[rank]);
      for (int i = 0; i < static_cast<int>(gens.size()); ++i)
        if (i != rank && gens[i][col])
          for (int c = 0; c < 6; ++c) gens[i][c] ^= gens[rank][c];
      ++rank;
    }
    CHECK(ex[0] + ex[1] == 6 - rank);
  }
}

TEST_CASE("invariants of the ordinary module") {
  auto t = CoeffTower::build(3, 2, 2, 1, 4);
  DModule O = ordinary(t);
  CHECK(lie_type(O).slots == std::vector<SlotPair>{{0, 2}, {0, 2}});
  AType a = a_type(O);
  CHECK(a.slots == std::vector<SlotPair>{{0, 0}, {0, 0}});
  CHECK(a.a_number == 0);
  REQUIRE(a.rapoport_form.has_value());
  CHECK(*a.rapoport_form == std::vector<int>{0, 0});
  AIndex ai = a_index(O);
  CHECK(ai.tau.empty());
  CHECK(ai.t == 0);
  CHECK(ai.reduced_a == 0);
  CHECK(newton_point(O, NewtonMethod::fast) == NewtonPoint{4, 0});
  CHECK(newton_point(O, NewtonMethod::oracle) == NewtonPoint{4, 0});
  CHECK(classify(O) == Flags{true, true, true, false, false});
}

TEST_CASE("invariants of the non-Rapoport example") {
  auto t = CoeffTower::build(5, 1, 2, 2, 6);
  DModule S = non_rapoport_example(t).module;
  CHECK(lie_type(S).slots == std::vector<SlotPair>{{1, 1}});
  AType a = a_type(S);
  CHECK(a.slots == std::vector<SlotPair>{{1, 1}});
  CHECK(a.a_number == 2);
  CHECK_FALSE(a.rapoport_form.has_value());
  CHECK_THROWS_AS(a_index(S), Error);
  CHECK(reduced_a_number(S) == 2);
  CHECK(newton_point(S, NewtonMethod::fast).supersingular());
  CHECK(newton_point(S, NewtonMethod::oracle).supersingular());
  CHECK(classify(S) == Flags{false, true, false, true, true});
}

TEST_CASE("superspecial invariants") {
  auto t = CoeffTower::build(3, 1, 3, 1, 5);
  DModule M = superspecial(t, 1, 2, SuperspecialVariant::general).module;
  CHECK(lie_type(M).slots == std::vector<SlotPair>{{1, 2}});
  CHECK(a_type(M).slots == std::vector<SlotPair>{{1, 2}});

  auto t2 = CoeffTower::build(3, 2, 2, 1, 5);
  DModule M2 = superspecial(t2, 0, 1, SuperspecialVariant::general).module;
  CHECK(lie_type(M2).slots == std::vector<SlotPair>{{0, 1}, {1, 2}});
  CHECK(a_type(M2).a_number == 4);

  for (auto [f, e] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 1}, {2, 3}}) {
    auto tr = CoeffTower::build(5, f, e, 1, f + 3);
    DModule R = superspecial(tr, 0, 0, SuperspecialVariant::rapoport).module;
    AType a = a_type(R);
    CHECK(a.a_number == f * e);
    REQUIRE(a.rapoport_form.has_value());
    CHECK(*a.rapoport_form == std::vector<int>(f, e));
    Flags fl = classify(R);
    CHECK(fl.rapoport);
    CHECK(fl.dp);
    CHECK(fl.supersingular);
    CHECK(fl.superspecial);
  }
}

TEST_CASE("a-index round trip on a normal form") {
  auto t = CoeffTower::build(3, 4, 1, 1, 6);
  std::map<int, RamElem> c{{0, t->one()}, {2, t->integer(2)}};
  DModule M = normal_form(t, {0, 2}, c).module;
  AIndex ai = a_index(M);
  CHECK(ai.tau == std::vector<int>{0, 2});
  CHECK(ai.t == 2);
  CHECK(ai.reduced_a == 2);
}

TEST_CASE("t = 1 normal form with c = pi") {
  auto t = CoeffTower::build(3, 1, 3, 1, 4);
  std::map<int, RamElem> c{{0, t->pi()}};
  DModule M = normal_form(t, {0}, c).module;
  CHECK(*a_type(M).rapoport_form == std::vector<int>{2});
  NewtonPoint np = newton_point(M, NewtonMethod::oracle);
  CHECK(np == NewtonPoint{3, 3});
  CHECK(np.index_str() == "3/2");
  CHECK(newton_point(M, NewtonMethod::fast) == np);
}

TEST_CASE("Newton point helpers") {
  CHECK(NewtonPoint{2, 2}.sequence() == std::vector<std::string>(4, "1/2"));
  auto s = NewtonPoint{3, 2}.sequence();
  CHECK(s == std::vector<std::string>{"1/3", "1/3", "1/3", "2/3", "2/3", "2/3"});
  CHECK(NewtonPoint{4, 0}.sequence() == std::vector<std::string>{"0/1", "0/1", "0/1", "0/1", "1/1", "1/1", "1/1", "1/1"});
  CHECK(in_S(5, 5));
  CHECK(in_S(5, 4));
  CHECK_FALSE(in_S(5, 3));
  CHECK_FALSE(in_S(4, 6));
  CHECK(NewtonPoint::from_index(6, 2).index_str() == "2");
}

TEST_CASE("Newton point rejects a wrong budget and reports exhausted precision") {
  auto t = CoeffTower::build(3, 1, 2, 1, 4);
  Mat2 scalar = Mat2::of(t->pi_pow(2), t->zero(), t->zero(), t->pi_pow(2));
  DModule M = build_module(t, {scalar}, std::nullopt, PolMode::general);
  CHECK_THROWS_AS(newton_point(M, NewtonMethod::fast), Error);

  // precision at the policy bound is too short for the oracle on slope 2/6
  auto small = CoeffTower::build(3, 3, 2, 1, 4);
  DModule R = slope_family(small, 2).module;
  CHECK(newton_point(R, NewtonMethod::fast) == NewtonPoint{6, 4});
  try {
    newton_oracle(R);
    FAIL("expected precision_exhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::precision_exhausted);
    CHECK(std::string(e.what()).find("lower bound") != std::string::npos);
  }
}

TEST_CASE("a-type bounds") {
  LieType rap{{{0, 2}, {0, 2}, {0, 2}}};
  for (const auto& b : a_type_bounds(rap, 2)) {
    CHECK(b.a1 == 0);
    CHECK(b.lo == 0);
    CHECK(b.hi == 2);
  }
  auto one = a_type_bounds(LieType{{{1, 2}}}, 3);
  CHECK(one[0].a1 == 1);
  CHECK(one[0].lo == 1);
  CHECK(one[0].hi == 2);
}

TEST_CASE("dual invariant formulas") {
  auto d = dual_invariants(LieType{{{1, 1}}}, AType{{{1, 1}}, std::nullopt, 2}, 2);
  CHECK(d.lie.slots == std::vector<SlotPair>{{1, 1}});
  CHECK(d.a == std::vector<SlotPair>{{1, 1}});
  d = dual_invariants(LieType{{{0, 2}}}, AType{{{0, 0}}, std::nullopt, 0}, 2);
  CHECK(d.lie.slots == std::vector<SlotPair>{{0, 2}});
  CHECK(d.a == std::vector<SlotPair>{{0, 0}});
  d = dual_invariants(LieType{{{1, 2}}}, AType{{{1, 2}}, std::nullopt, 3}, 3);
  CHECK(d.lie.slots == std::vector<SlotPair>{{1, 2}});
  CHECK(d.a == std::vector<SlotPair>{{1, 2}});
  CHECK_THROWS_AS(dual_invariants(LieType{{{0, 2}}}, AType{{{2, 2}}, std::nullopt, 4}, 2), Error);
}

TEST_CASE("random modules: bounds, classification and duality") {
  Rng rng(2024);
  for (auto [p, f, e] : std::vector<std::tuple<u64, int, int>>{{3, 1, 2}, {3, 2, 2}, {5, 3, 1}, {2, 2, 3}, {3, 3, 2}}) {
    auto t = CoeffTower::build(p, f, e, 2, f + 4);
    for (int trial = 0; trial < 12; ++trial) {
      bool sep = trial % 2 == 0;
      DModule M = random_module(t, rng, sep).module;
      LieType L = lie_type(M);
      AType a = a_type(M);
      // length of M/VM is the V-determinant budget 2g - sum ord det A
      CHECK(L.sum() == 2 * M.g() - M.det_sum);
      auto bounds = a_type_bounds(L, e);
      for (int i = 0; i < f; ++i) {
        CHECK(a.slots[i][0] == bounds[i].a1);
        CHECK(a.slots[i][1] >= bounds[i].lo);
        CHECK(a.slots[i][1] <= bounds[i].hi);
      }
      DModule D = dual_module(M);
      DualInvariants di = dual_invariants(L, a, e);
      CHECK(lie_type(D) == di.lie);
      CHECK(a_type(D).slots == di.a);
      if (sep) {
        Flags fl = classify(M);
        if (fl.superspecial) CHECK(fl.supersingular);
        if (fl.ordinary) CHECK(a.a_number == 0);
        if (fl.rapoport) CHECK(fl.dp);
      }
    }
  }
}
