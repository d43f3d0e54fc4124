#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dieu/dieudonne.hpp"

namespace dieu {

using SlotPair = std::array<int, 2>;  // sorted, first <= second

struct LieType {
  std::vector<SlotPair> slots;
  int sum() const;
  bool rapoport(int e) const;
  bool operator==(const LieType&) const = default;
};

struct AType {
  std::vector<SlotPair> slots;
  std::optional<std::vector<int>> rapoport_form;  // set when every a^i_1 = 0
  int a_number = 0;
  bool operator==(const AType&) const = default;
};

// An element of S(g) = {0, 1, ..., floor(g/2)} u {g/2}, stored doubled.
struct NewtonPoint {
  int g = 1;
  int twice_index = 0;

  static NewtonPoint from_index(int g, int i) { return {g, 2 * i}; }
  static NewtonPoint half(int g) { return {g, g}; }
  int num() const { return twice_index % 2 == 0 ? twice_index / 2 : twice_index; }
  int den() const { return twice_index % 2 == 0 ? 1 : 2; }
  bool ordinary() const { return twice_index == 0; }
  bool supersingular() const { return twice_index == g; }
  std::string index_str() const;
  // The slope multiset {i/g x g, (g-i)/g x g}, as reduced fractions "a/b".
  std::vector<std::string> sequence() const;
  bool operator==(const NewtonPoint&) const = default;
};

bool in_S(int g, int twice_index);

struct AIndex {
  std::vector<int> tau;
  int t = 0;
  int reduced_a = 0;
};

struct Flags {
  bool rapoport = false;
  bool dp = false;
  bool ordinary = false;
  bool supersingular = false;
  bool superspecial = false;
  bool operator==(const Flags&) const = default;
};

enum class NewtonMethod { fast, oracle };

// Elementary divisor exponents (capped at e) of the cokernel of the span of
// the given rows inside (k[pi]/pi^e)^2. Entries must live in a residue tower.
SlotPair elementary_divisors(std::vector<std::array<RamElem, 2>> rows, int e);

LieType lie_type(const DModule& M);
AType a_type(const DModule& M);
// dim_k M / ((F,V)M + pi M); defined for every module.
int reduced_a_number(const DModule& M);
// Throws not_rapoport off the Rapoport locus.
AIndex a_index(const DModule& M);

struct OracleStep {
  int n = 0;
  Val m;
  int candidate = 0;  // certified lower bound: smallest element of S(g) >= m_n / n, doubled
  int estimate = -1;  // element of S(g) nearest (m_n - m_(n/2)) / (n/2), doubled; -1 at n = 1
};

struct OracleReport {
  NewtonPoint point;
  std::vector<OracleStep> steps;
};

NewtonPoint newton_point(const DModule& M, NewtonMethod method);
// The oracle with its iteration trace. Throws precision_exhausted, with the
// certified lower bound in the message, when no stable value is reached.
OracleReport newton_oracle(const DModule& M);

Flags classify(const DModule& M, NewtonMethod method = NewtonMethod::oracle);

struct ATypeBound {
  int a1 = 0;
  int lo = 0;
  int hi = 0;
};
std::vector<ATypeBound> a_type_bounds(const LieType& L, int e);

struct DualInvariants {
  LieType lie;
  std::vector<SlotPair> a;
};
// Throws inconsistent when the implied second dual exponent leaves [b1, e].
DualInvariants dual_invariants(const LieType& L, const AType& a, int e);

}  // namespace dieu
