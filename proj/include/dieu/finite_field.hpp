#pragma once

// Small finite fields F_q with log/antilog tables. Elements are integers in
// [0, q) holding the base-p digits of the coefficient vector in F_p[T]/mu(T),
// with mu the smallest primitive polynomial (the same one the tower uses).

#include <cstdint>
#include <vector>

#include "dieu/arith.hpp"

namespace dieu {

class FiniteField {
 public:
  using Elem = std::uint32_t;

  // Throws size_guard past q = 2^20.
  FiniteField(u64 p, int degree);

  u64 p() const { return p_; }
  int degree() const { return d_; }
  u64 q() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem gen() const { return exp_[1 % (q_ - 1)]; }
  Elem from_int(i64 a) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws on zero
  Elem pow(Elem a, u64 k) const;
  Elem frob(Elem a) const { return pow(a, p_); }
  Elem frob_inv(Elem a) const { return pow(a, q_ / p_); }

  std::vector<Elem> elements() const;

 private:
  u64 p_;
  int d_;
  u64 q_;
  std::vector<Elem> exp_;
  std::vector<u64> log_;
};

}  // namespace dieu
