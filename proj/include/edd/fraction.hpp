#pragma once

#include <string>
#include <type_traits>
#include <utility>

#include "edd/error.hpp"
#include "edd/poly.hpp"
#include "edd/ring.hpp"

namespace edd {

/// Element of the field of fractions of R, kept reduced with a canonical
/// denominator so that equal values compare equal.
template <EuclideanRing R>
class Frac {
 public:
  using ring_type = R;

  Frac() : num_(R::zero()), den_(R::one()) {}
  Frac(R value) : num_(std::move(value)), den_(R::one()) {}  // NOLINT(google-explicit-constructor)
  Frac(long value) : Frac(R(value)) {}                       // NOLINT(google-explicit-constructor)

  static Frac zero() { return Frac(); }
  static Frac one() { return Frac(R::one()); }

  /// Reduced num/den; throws on a zero denominator.
  static Frac reduce(const R& num, const R& den) {
    if (den.is_zero()) throw RingError("zero denominator");
    if (num.is_zero()) return Frac();
    const R g = gcd(num, den);
    R n = divide_exact(num, g);
    R d = divide_exact(den, g);
    const R u = unit_inverse(unit_part(d));
    return Frac(n * u, d * u);
  }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the value lies in R itself.
  bool is_integral() const { return den_ == R::one(); }
  const R& num() const { return num_; }
  const R& den() const { return den_; }

  Frac inverse() const {
    if (is_zero()) throw RingError("inverse of zero");
    return reduce(den_, num_);
  }

  friend Frac operator+(const Frac& a, const Frac& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_integral() && b.is_integral()) return Frac(a.num_ + b.num_);
    return reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Frac operator-(const Frac& a) { return Frac(-a.num_, a.den_); }
  friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
  friend Frac operator*(const Frac& a, const Frac& b) {
    if (a.is_zero() || b.is_zero()) return Frac();
    if (a.is_integral() && b.is_integral()) return Frac(a.num_ * b.num_);
    return reduce(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.is_zero()) throw RingError("division by zero");
    return reduce(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const Frac& a, const Frac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  Frac(R num, R den) : num_(std::move(num)), den_(std::move(den)) {}

  R num_;
  R den_;
};

template <EuclideanRing R>
Frac<R> frac_reduce(const R& num, const R& den) {
  return Frac<R>::reduce(num, den);
}

template <class T>
struct is_frac : std::false_type {};
template <class R>
struct is_frac<Frac<R>> : std::true_type {};
template <class T>
inline constexpr bool is_frac_v = is_frac<T>::value;

/// Base ring of a scalar type: R for both R and Frac<R>.
template <class T>
struct base_ring {
  using type = T;
};
template <class R>
struct base_ring<Frac<R>> {
  using type = R;
};
template <class T>
using base_ring_t = typename base_ring<T>::type;

/// deg(den) - deg(num) of a nonzero rational function.
inline int order_at_infinity(const Frac<Poly>& f) {
  if (f.is_zero()) throw RingError("order at infinity of zero");
  return f.den().degree() - f.num().degree();
}

template <EuclideanRing R>
std::string to_string(const Frac<R>& f) {
  if (f.is_integral()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace edd
