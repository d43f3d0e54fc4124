#pragma once

// Brute-force probe of the Hecke correspondence fibre: pi-, F- and V-stable
// maximal isotropic planes in the 4-dimensional mod-p Dieudonne space with
// basis (x1, x2, x1', x2').

#include <array>
#include <optional>
#include <vector>

#include "dieu/finite_field.hpp"

namespace dieu {

using Elem = FiniteField::Elem;
using Vec4 = std::array<Elem, 4>;
using Mat4 = std::array<Vec4, 4>;  // row j = image of basis vector j

struct HeckeSetting {
  u64 p = 0;
  int s = 1;
  FiniteField field;
  Mat4 pi;     // linear
  Mat4 F;      // F(sum a_j b_j) = sum a_j^p F(b_j)
  Mat4 V;      // V(sum a_j b_j) = sum a_j^(1/p) V(b_j)
  Mat4 gram;   // alternating: gram[i][j] = <b_i, b_j>
};

// Rejects p = 2 and s < 1. Checks pi^2 = 0, FV = VF = 0 and that the pairing
// is alternating and perfect.
HeckeSetting build_setting(u64 p, int s);

Vec4 apply_linear(const FiniteField& k, const Mat4& m, const Vec4& v);
Vec4 apply_F(const HeckeSetting& S, const Vec4& v);
Vec4 apply_V(const HeckeSetting& S, const Vec4& v);
Elem pairing(const HeckeSetting& S, const Vec4& u, const Vec4& v);

struct StablePlane {
  std::array<Vec4, 2> rref;
  std::optional<std::array<Elem, 4>> chart;  // (t11, t12, t21, t22)
};

// The raw definitional test on a plane spanned by two independent rows.
bool is_stable_isotropic(const HeckeSetting& S, const std::array<Vec4, 2>& rows);

// Chart: rows (1, 0, t11, t12) and (0, 1, t21, t22). The full pass walks every
// reduced row-echelon 2 x 4 matrix. Throws size_guard when the candidate
// count exceeds size_cap. Output is in lexicographic order of the echelon rows.
std::vector<StablePlane> enumerate_stable_planes(const HeckeSetting& S, bool chart_only,
                                                 long long size_cap = 1000000,
                                                 unsigned threads = 0);

// Independent computation: all chart points satisfying the six local equations
// and t11 + t22 = 0, found by direct solving over F_q^4.
std::vector<std::array<Elem, 4>> solve_chart_equations(const HeckeSetting& S,
                                                       long long size_cap = 1000000);
// {(t, a t, -t/a, -t) : t in F_q, a^(p+1) = 1}, sorted.
std::vector<std::array<Elem, 4>> parametrized_points(const HeckeSetting& S);

bool satisfies_local_equations(const HeckeSetting& S, const std::array<Elem, 4>& t);

struct VarietyReport {
  u64 p = 0, q = 0;
  long long chart_count = 0;
  long long expected_count = 0;            // 1 + (p+1)(q-1)
  bool equations_verified = false;         // six local equations and the trace relation
  bool displayed_polys_verified = false;   // t1^(p+1) - t2^(p+1), t1^2 + t2 t3
  bool matches_parametrization = false;
  bool matches_equation_solving = false;
  int lines = 0;                           // distinct lines through the origin
  long long variety_count = 0;             // F_q-points of the displayed variety
  std::vector<std::array<Elem, 3>> extra_variety_points;
  bool extras_on_t1_t2_zero = false;
};

VarietyReport compare_variety(const HeckeSetting& S, const std::vector<StablePlane>& planes,
                              long long size_cap = 1000000);

}  // namespace dieu
