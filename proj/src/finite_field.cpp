#include "dieu/finite_field.hpp"

#include "dieu/error.hpp"

namespace dieu {

FiniteField::FiniteField(u64 p, int degree) : p_(p), d_(degree) {
  if (!is_prime(p)) throw Error(ErrorCode::not_prime, std::to_string(p) + " is not prime");
  if (degree < 1) throw Error(ErrorCode::invalid_argument, "degree must be positive");
  q_ = 1;
  for (int i = 0; i < degree; ++i) {
    q_ *= p;
    if (q_ > (1u << 20)) throw Error(ErrorCode::size_guard, "finite field too large for tables");
  }
  const std::vector<u64> mu = smallest_primitive_poly(p, degree);  // monic, length d+1
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  std::vector<u64> cur(degree, 0);
  cur[0] = 1;
  auto encode = [&](const std::vector<u64>& v) {
    Elem x = 0;
    for (int j = degree - 1; j >= 0; --j) x = static_cast<Elem>(x * p + v[j]);
    return x;
  };
  for (u64 i = 0; i + 1 < q_; ++i) {
    Elem x = encode(cur);
    exp_[i] = x;
    log_[x] = i;
    // multiply by T modulo mu
    u64 top = cur[degree - 1];
    for (int j = degree - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (int j = 0; j < degree; ++j) cur[j] = (cur[j] + (p - top) * mu[j]) % p;
  }
}

FiniteField::Elem FiniteField::from_int(i64 a) const { return static_cast<Elem>(zmod::from_signed(a, p_)); }

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  Elem r = 0, scale = 1;
  for (int j = 0; j < d_; ++j) {
    r += static_cast<Elem>(((a % p_) + (b % p_)) % p_) * scale;
    a = static_cast<Elem>(a / p_);
    b = static_cast<Elem>(b / p_);
    scale = static_cast<Elem>(scale * p_);
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  Elem r = 0, scale = 1;
  for (int j = 0; j < d_; ++j) {
    r += static_cast<Elem>((p_ - a % p_) % p_) * scale;
    a = static_cast<Elem>(a / p_);
    scale = static_cast<Elem>(scale * p_);
  }
  return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::not_unit, "zero has no inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, u64 k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<u64>((static_cast<u128>(log_[a]) * k) % (q_ - 1))];
}

std::vector<FiniteField::Elem> FiniteField::elements() const {
  std::vector<Elem> v(q_);
  for (u64 i = 0; i < q_; ++i) v[i] = static_cast<Elem>(i);
  return v;
}

}  // namespace dieu
