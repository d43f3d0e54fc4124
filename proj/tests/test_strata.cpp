#include "doctest.h"
#include "dieu/error.hpp"
#include "dieu/strata.hpp"

using namespace dieu;

namespace {

std::vector<int> twice(const std::vector<NewtonPoint>& v) {
  std::vector<int> r;
  for (const auto& x : v) r.push_back(x.twice_index);
  return r;
}

bool leq(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("admissible slopes") {
  CHECK(twice(admissible_slopes(4)) == std::vector<int>{0, 2, 4});
  CHECK(twice(admissible_slopes(5)) == std::vector<int>{0, 2, 4, 5});
  CHECK(twice(admissible_slopes(1)) == std::vector<int>{0, 1});
  CHECK_THROWS_AS(admissible_slopes(0), Error);
}

TEST_CASE("stratum records") {
  auto r = stratum_record({1, 0, 1, 0}, 1);
  CHECK(r.spaced);
  CHECK(r.lambda == 2);
  CHECK(r.dim == 2);
  REQUIRE(r.generic_slope_exact.has_value());
  CHECK(r.generic_slope_exact->supersingular());

  auto s = stratum_record({1, 1}, 1);
  CHECK_FALSE(s.spaced);
  CHECK(s.lambda == 1);
  CHECK(s.generic_slope_lower == NewtonPoint{2, 2});
  CHECK_FALSE(s.generic_slope_exact.has_value());

  CHECK_FALSE(is_spaced({1}));
  CHECK(is_spaced({0}));
  CHECK(is_spaced({2, 0, 0}));
  CHECK_FALSE(is_spaced({2, 0, 1}));
}

TEST_CASE("lambda: exhaustive search and the cyclic DP agree") {
  Rng rng(1);
  for (int trial = 0; trial < 400; ++trial) {
    int f = 1 + static_cast<int>(rng() % 7);
    int e = 1 + static_cast<int>(rng() % 3);
    std::vector<int> a(f);
    for (auto& x : a) x = static_cast<int>(rng() % (e + 1));
    CHECK(lambda_exhaustive(a) == lambda_dp(a));
  }
}

TEST_CASE("poset structure and monotonicity") {
  ATypePoset P = atype_poset(2, 2);
  CHECK(P.nodes.size() == 9);
  ATypePoset Q = atype_poset(1, 4);
  CHECK(Q.nodes.size() == 16);
  CHECK(Q.covers.size() == 32);  // f 2^(f-1)
  for (auto [lo, hi] : Q.covers) {
    int diff = 0;
    for (int i = 0; i < 4; ++i) diff += Q.nodes[hi].a[i] - Q.nodes[lo].a[i];
    CHECK(diff == 1);
    CHECK(leq(Q.nodes[lo].a, Q.nodes[hi].a));
  }
  ATypePoset R = atype_poset(2, 3);
  for (const auto& x : R.nodes) {
    int size = 0;
    for (int v : x.a) size += v;
    CHECK(x.lambda <= size);
    CHECK((x.lambda == size) == x.spaced);
    for (const auto& y : R.nodes)
      if (leq(x.a, y.a)) {
        CHECK(x.lambda <= y.lambda);
        CHECK(x.dim >= y.dim);
      }
  }
  CHECK(R.nodes.front().dim == 6);
  CHECK(R.nodes.back().dim == 0);
  CHECK(std::is_sorted(R.nodes.begin(), R.nodes.end(),
                       [](const StratumRecord& u, const StratumRecord& v) { return u.a < v.a; }));
  CHECK_THROWS_AS(atype_poset(9, 7, 1000000), Error);
  CHECK(poset_dot(Q).find("n0 -> n1;") != std::string::npos);
}

TEST_CASE("DP stratum dimension") {
  CHECK(dp_stratum_dim(LieType{{{0, 2}, {0, 2}}}, 2) == 4);
  CHECK(dp_stratum_dim(LieType{{{1, 1}}}, 2) == 0);
  CHECK(dp_stratum_dim(LieType{{{0, 2}, {1, 1}}}, 2) == 2);
  CHECK_THROWS_AS(dp_stratum_dim(LieType{{{1, 2}}}, 2), Error);
}

TEST_CASE("deformation dimensions") {
  auto d = deformation_dims(LieType{{{0, 3}, {0, 3}}}, 3);
  CHECK(d.unrestricted == 6);
  CHECK(d.dp == 6);
  CHECK(d.polarized == 6);
  d = deformation_dims(LieType{{{1, 1}}}, 2);
  CHECK(d.dp == 4);
  CHECK(d.polarized == 3);
  CHECK(d.unrestricted == 4);
  d = deformation_dims(LieType{{{0, 1}, {0, 1}}}, 1);
  CHECK(d.polarized == 2);
  d = deformation_dims(LieType{{{1, 2}, {0, 1}}}, 2);
  CHECK_FALSE(d.dp_matches_unrestricted);
  // polarized = g exactly on the Rapoport locus
  for (int x = 0; x <= 2; ++x)
    for (int y = x; y <= 2; ++y) {
      if (x + y != 2) continue;
      LieType L{{{x, y}, {x, y}}};
      CHECK((deformation_dims(L, 2).polarized == 4) == L.rapoport(2));
    }
}

TEST_CASE("polarization degree exponent") {
  CHECK(polarization_degree_exponent(LieType{{{1, 1}, {0, 2}, {1, 1}}}, 2) == 0);
  CHECK(polarization_degree_exponent(LieType{{{1, 2}, {0, 1}}}, 2, Rotation::fixed) == 2);
  CHECK(polarization_degree_exponent(LieType{{{1, 1}, {0, 1}, {0, 0}}}, 1, Rotation::fixed) == 4);
  // rotation puts the minimum first
  CHECK(polarization_degree_exponent(LieType{{{0, 1}, {1, 2}}}, 2, Rotation::fixed) == -2);
  CHECK(polarization_degree_exponent(LieType{{{0, 1}, {1, 2}}}, 2) == 2);
  CHECK(polarization_degree_exponent(LieType{{{0, 0}, {1, 1}, {0, 1}}}, 1) == 4);
}

TEST_CASE("Newton stratum codimension") {
  CHECK(newton_stratum_codim(NewtonPoint{4, 0}) == 0);
  CHECK(newton_stratum_codim(NewtonPoint{5, 5}) == 3);
  CHECK(newton_stratum_codim(NewtonPoint{4, 4}) == 2);
  CHECK_THROWS_AS(newton_stratum_codim(NewtonPoint{5, 3}), Error);
}

TEST_CASE("superspecial type tables") {
  CHECK(superspecial_types(3, 1) == std::vector<Pattern>{{{0, 3}}, {{1, 2}}});
  CHECK(superspecial_types(2, 1) == std::vector<Pattern>{{{0, 2}}, {{1, 1}}});
  auto all = superspecial_types(1, 2, false);
  CHECK(all == std::vector<Pattern>{{{0, 0}, {1, 1}}, {{0, 1}, {0, 1}}, {{1, 1}, {0, 0}}});
  CHECK(superspecial_types(1, 2).size() == 2);
  CHECK(superspecial_types(2, 4)[0] == Pattern{{0, 0}, {2, 2}, {0, 0}, {2, 2}});
}

TEST_CASE("determinant identity") {
  Rng rng(7);
  // 2 x 2 hand expansion: det [[Y1, eps], [Y2, Y1]] = Y1^2 - eps Y2
  auto r = verify_det_identity(2, 0, 20, rng);
  CHECK(r.symbolic_ok);
  CHECK(r.failures == 0);
  for (int n = 1; n <= 4; ++n) {
    auto a = verify_det_identity(n, 0, 20, rng);
    CHECK(a.symbolic_ok);
    CHECK(a.failures == 0);
    for (int m1 = 1; m1 < n; ++m1) {
      auto b = verify_det_identity(m1, n - m1, 20, rng);
      CHECK(b.symbolic_ok);
      CHECK(b.failures == 0);
    }
  }
  // the block cofactor reading fails exactly when the second block is longer
  CHECK(verify_det_identity(2, 1, 10, rng, 101, false).symbolic_ok);
  auto lit = verify_det_identity(1, 2, 10, rng, 101, false);
  CHECK_FALSE(lit.symbolic_ok);
  CHECK(lit.failures > 0);
}
