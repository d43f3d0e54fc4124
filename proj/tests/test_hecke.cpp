#include "doctest.h"
#include "dieu/error.hpp"
#include "dieu/hecke.hpp"

using namespace dieu;

TEST_CASE("finite field axioms by exhaustion over F_9") {
  FiniteField k(3, 2);
  CHECK(k.q() == 9);
  int failures = 0;
  for (Elem a : k.elements()) {
    if (k.add(a, k.neg(a)) != 0) ++failures;
    if (a != 0 && k.mul(a, k.inv(a)) != 1) ++failures;
    if (k.frob_inv(k.frob(a)) != a) ++failures;
    if (k.pow(a, 9) != a) ++failures;
    for (Elem b : k.elements()) {
      if (k.frob(k.add(a, b)) != k.add(k.frob(a), k.frob(b))) ++failures;
      if (k.mul(a, b) != k.mul(b, a)) ++failures;
      for (Elem c : k.elements())
        if (k.mul(a, k.add(b, c)) != k.add(k.mul(a, b), k.mul(a, c))) ++failures;
    }
  }
  CHECK(failures == 0);
  // the generator has order q - 1
  int order = 1;
  for (Elem x = k.gen(); x != 1; x = k.mul(x, k.gen())) ++order;
  CHECK(order == 8);
  CHECK_THROWS_AS(k.inv(0), Error);
  CHECK_THROWS_AS(FiniteField(4, 1), Error);
}

TEST_CASE("setting checks") {
  auto S = build_setting(3, 1);
  CHECK(S.field.q() == 9);
  CHECK_THROWS_AS(build_setting(2, 1), Error);
  CHECK_THROWS_AS(build_setting(3, 0), Error);
  CHECK_THROWS_AS(build_setting(9, 1), Error);
  // the base point <x1, x2> is stable
  CHECK(is_stable_isotropic(S, {Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0}}));
  // <x1', x2'> is isotropic but not V-stable
  CHECK_FALSE(is_stable_isotropic(S, {Vec4{0, 0, 1, 0}, Vec4{0, 0, 0, 1}}));
  CHECK_THROWS_AS(is_stable_isotropic(S, {Vec4{1, 0, 0, 0}, Vec4{2, 0, 0, 0}}), Error);
}

TEST_CASE("chart enumeration for q = 9") {
  auto S = build_setting(3, 1);
  auto planes = enumerate_stable_planes(S, true, 1000000, 3);
  CHECK(planes.size() == 33);
  for (const auto& P : planes) {
    REQUIRE(P.chart.has_value());
    CHECK(S.field.add((*P.chart)[0], (*P.chart)[3]) == 0);
    CHECK(satisfies_local_equations(S, *P.chart));
  }
  // the worker count does not change the output
  auto single = enumerate_stable_planes(S, true, 1000000, 1);
  REQUIRE(single.size() == planes.size());
  for (size_t i = 0; i < planes.size(); ++i) CHECK(single[i].rref == planes[i].rref);

  auto R = compare_variety(S, planes);
  CHECK(R.chart_count == 33);
  CHECK(R.expected_count == 33);
  CHECK(R.equations_verified);
  CHECK(R.displayed_polys_verified);
  CHECK(R.matches_parametrization);
  CHECK(R.matches_equation_solving);
  CHECK(R.lines == 4);
  CHECK(R.variety_count == 41);
  CHECK(R.extra_variety_points.size() == 8);
  CHECK(R.extras_on_t1_t2_zero);
  CHECK_THROWS_AS(enumerate_stable_planes(S, true, 1000), Error);
}

TEST_CASE("chart enumeration for q = 25") {
  auto S = build_setting(5, 1);
  auto planes = enumerate_stable_planes(S, true);
  CHECK(planes.size() == 145);
  auto R = compare_variety(S, planes);
  CHECK(R.lines == 6);
  CHECK(R.matches_parametrization);
  CHECK(R.matches_equation_solving);
  CHECK(R.variety_count == 25 + 6 * 24);
  CHECK(R.extras_on_t1_t2_zero);
}

TEST_CASE("full Grassmannian pass for q = 9") {
  auto S = build_setting(3, 1);
  auto all = enumerate_stable_planes(S, false);
  int in_chart = 0;
  for (const auto& P : all) {
    if (P.chart) ++in_chart;
    CHECK(is_stable_isotropic(S, P.rref));
  }
  CHECK(in_chart == 33);
  // the rest are the points at infinity of the p + 1 lines:
  // <x1 + b x2, x1' + b x2'> with b^(p+1) = 1
  CHECK(all.size() - in_chart == 4);
  for (const auto& P : all) {
    if (P.chart) continue;
    const Elem b = P.rref[0][1];
    CHECK(P.rref[0] == Vec4{1, b, 0, 0});
    CHECK(P.rref[1] == Vec4{0, 0, 1, b});
    CHECK(S.field.pow(b, 4) == 1);
  }
}
