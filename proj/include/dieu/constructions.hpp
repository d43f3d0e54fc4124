#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dieu/dieudonne.hpp"

namespace dieu {

// Result of a builder: the module plus a note when the pairing had to be
// left out (the cyclic condition had no solution over the working field).
struct Built {
  DModule module;
  bool pairing_omitted = false;
  std::string note;
};

// Solves det(A_i) delta_i = p sigma(delta_{i-1}) for all i. Returns nothing
// when the cyclic consistency condition cannot be met over this field.
std::optional<std::vector<RamElem>> solve_pairing(const CoeffTower& t, const std::vector<Mat2>& A,
                                                  std::string* why = nullptr);

// Validates A and attaches a pairing when one exists.
Built assemble(std::shared_ptr<const CoeffTower> tower, std::vector<Mat2> A);

// Family with Newton point s(a): a = d e + r, slots 1..2d get [[0,1],[-p,0]],
// the middle slots [[1,1],[-p,0]], and slot f (= 0) gets [[pi^r,1],[-p,0]].
Built slope_family(std::shared_ptr<const CoeffTower> tower, int a);

// Normal form: slot i in tau gets [[pi c_i, 1], [pi^e, 0]], other slots diag(1, pi^e).
Built normal_form(std::shared_ptr<const CoeffTower> tower, const std::vector<int>& tau,
                  const std::map<int, RamElem>& c);
// Same, with the (0,0) entries of the tau slots given directly.
Built normal_form_entries(std::shared_ptr<const CoeffTower> tower, const std::vector<int>& tau,
                          const std::map<int, RamElem>& entries);

enum class SuperspecialVariant { rapoport, general };
Built superspecial(std::shared_ptr<const CoeffTower> tower, int e1, int e2, SuperspecialVariant variant);

using Assignment = std::map<std::pair<int, int>, WittElem>;  // (i, j) -> residue field value

// Deformation coordinates (i, j) with target[i] <= j < e.
std::vector<std::pair<int, int>> deformation_keys(const std::vector<int>& target, int e);

// Specializes the universal deformation of a normal-form base module.
Built deform_specialize(const DModule& base, const std::vector<int>& target, const Assignment& assignment);

// Random module U1 diag(pi^a_i, pi^b_i) U2 with random invertible U1, U2 and
// 0 <= a_i, b_i <= e. With separable = true the exponents sum to g.
Built random_module(std::shared_ptr<const CoeffTower> tower, Rng& rng, bool separable);

// The non-Rapoport module with F X = pi Y, F Y = pi X (f = 1, e = 2).
Built non_rapoport_example(std::shared_ptr<const CoeffTower> tower);

}  // namespace dieu
