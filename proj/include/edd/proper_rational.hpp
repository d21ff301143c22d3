#pragma once

#include <limits>
#include <string>
#include <utility>

#include "edd/error.hpp"
#include "edd/poly.hpp"
#include "edd/ring.hpp"

namespace edd {

/// Proper rational function num/den over Q (deg num <= deg den).
///
/// The ring of such functions is a discrete valuation ring whose valuation
/// is the order at infinity, deg den - deg num. Its units are the biproper
/// functions and every nonzero element is associate to exactly one power
/// (1/z)^k, which is the canonical representative. Storage is a reduced
/// polynomial pair with monic denominator.
class ProperRat {
 public:
  static constexpr const char* name = "Rpr";

  ProperRat() : den_(Poly::one()) {}
  ProperRat(long c) : num_(c), den_(Poly::one()) {}  // NOLINT(google-explicit-constructor)

  /// Reduces num/den; throws if den is zero or the quotient is improper.
  static ProperRat make(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw RingError("division by zero");
    if (num.is_zero()) return ProperRat();
    if (num.degree() > den.degree())
      throw RingError("(" + to_string(num) + ")/(" + to_string(den) + ") is not proper");
    const Poly g = gcd(num, den);
    const bool trivial = g.is_constant();
    Poly n = trivial ? num : divide_exact(num, g);
    Poly d = trivial ? den : divide_exact(den, g);
    const mpq_class lc = d.leading();
    return ProperRat(n.scaled(1 / lc), d.scaled(1 / lc));
  }

  /// (1/z)^k.
  static ProperRat inv_z_power(unsigned k) { return ProperRat(Poly::one(), Poly::monomial(mpq_class(1), k)); }

  static ProperRat zero() { return ProperRat(); }
  static ProperRat one() { return ProperRat(1); }

  bool is_zero() const { return num_.is_zero(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  /// Order at infinity; meaningless for zero.
  int valuation() const { return den_.degree() - num_.degree(); }

  friend ProperRat operator+(const ProperRat& a, const ProperRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return make(a.num_ + b.num_, a.den_);
    return make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend ProperRat operator-(const ProperRat& a) { return ProperRat(-a.num_, a.den_); }
  friend ProperRat operator-(const ProperRat& a, const ProperRat& b) { return a + (-b); }
  friend ProperRat operator*(const ProperRat& a, const ProperRat& b) {
    if (a.is_zero() || b.is_zero()) return ProperRat();
    if (a.den_ == Poly::one() && a.num_.is_constant()) return ProperRat(b.num_.scaled(a.num_.leading()), b.den_);
    if (b.den_ == Poly::one() && b.num_.is_constant()) return ProperRat(a.num_.scaled(b.num_.leading()), a.den_);
    return make(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend bool operator==(const ProperRat& a, const ProperRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  ProperRat(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// Biproper factor u with a == u * (1/z)^valuation(a).
inline ProperRat unit_part(const ProperRat& a) {
  if (a.is_zero()) return ProperRat::one();
  return ProperRat::make(a.num().shifted(static_cast<unsigned>(a.valuation())), a.den());
}

inline ProperRat unit_inverse(const ProperRat& u) {
  if (u.is_zero() || u.valuation() != 0) throw RingError("not a unit in Rpr");
  return ProperRat::make(u.den(), u.num());
}

/// Valuation division: q = a/b when v(a) >= v(b), otherwise r = a.
inline std::pair<ProperRat, ProperRat> div_rem(const ProperRat& a, const ProperRat& b) {
  if (b.is_zero()) throw RingError("division by zero");
  if (a.is_zero()) return {ProperRat(), ProperRat()};
  if (a.valuation() < b.valuation()) return {ProperRat(), a};
  return {ProperRat::make(a.num() * b.den(), a.den() * b.num()), ProperRat()};
}

inline int euclid_norm(const ProperRat& a) {
  return a.is_zero() ? std::numeric_limits<int>::max() : a.valuation();
}

inline std::string to_string(const ProperRat& a) {
  if (a.den() == Poly::one()) return to_string(a.num());
  return "(" + to_string(a.num()) + ")/(" + to_string(a.den()) + ")";
}

/// 1/z is the only prime of the valuation ring, up to units.
inline bool prime_admissible(const ProperRat& p) {
  return !p.is_zero() && p.valuation() == 1;
}

}  // namespace edd
