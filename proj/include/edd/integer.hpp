#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "edd/error.hpp"

namespace edd {

/// Arbitrary-precision integer; canonical associates are nonnegative.
class Integer {
 public:
  static constexpr const char* name = "Z";

  Integer() = default;
  Integer(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

  static Integer zero() { return Integer(); }
  static Integer one() { return Integer(1); }

  bool is_zero() const { return sgn(v_) == 0; }
  const mpz_class& value() const { return v_; }

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
  friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }
  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }

 private:
  mpz_class v_;
};

inline Integer unit_part(const Integer& a) { return Integer(sgn(a.value()) < 0 ? -1 : 1); }

inline Integer unit_inverse(const Integer& u) {
  if (abs(u.value()) != 1) throw RingError("not a unit in Z");
  return u;
}

/// Truncating division; |r| < |b|.
inline std::pair<Integer, Integer> div_rem(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw RingError("division by zero");
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.value().get_mpz_t(), b.value().get_mpz_t());
  return {Integer(std::move(q)), Integer(std::move(r))};
}

inline mpz_class euclid_norm(const Integer& a) { return abs(a.value()); }

inline std::string to_string(const Integer& a) { return a.value().get_str(); }

/// Primes of Z are caller-asserted; any non-unit is accepted.
inline bool prime_admissible(const Integer&) { return true; }

}  // namespace edd
