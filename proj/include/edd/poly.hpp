#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "edd/error.hpp"

namespace edd {

/// Degree reported for the zero polynomial. Sums of a few such values stay
/// far below any real degree, so degree inequalities read naturally.
inline constexpr int neg_inf_degree = std::numeric_limits<int>::min() / 8;

/// Univariate polynomial over Q in the variable z. Coefficients are stored
/// in ascending order with no trailing zeros; canonical associates are monic.
class Poly {
 public:
  static constexpr const char* name = "Qz";

  Poly() = default;
  Poly(long c) : Poly(mpq_class(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(mpq_class c) {
    if (sgn(c) != 0) coeffs_.push_back(std::move(c));
  }
  explicit Poly(std::vector<mpq_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(1); }
  static Poly z() { return monomial(mpq_class(1), 1); }
  static Poly monomial(const mpq_class& c, unsigned k) {
    std::vector<mpq_class> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return coeffs_.empty() ? neg_inf_degree : static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpq_class(0); }
  mpq_class leading() const { return coeffs_.empty() ? mpq_class(0) : coeffs_.back(); }

  /// Number of nonzero coefficients.
  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return sgn(c) != 0; }));
  }

  /// z^k * this.
  Poly shifted(unsigned k) const {
    if (is_zero()) return *this;
    std::vector<mpq_class> v(k, mpq_class(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
  }

  /// z^d * p(1/z); requires d >= degree().
  Poly reversed(int d) const {
    if (is_zero()) return *this;
    if (d < degree()) throw RingError("reversal degree below polynomial degree");
    std::vector<mpq_class> v(static_cast<std::size_t>(d) + 1, mpq_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[static_cast<std::size_t>(d) - i] = coeffs_[i];
    return Poly(std::move(v));
  }

  Poly scaled(const mpq_class& c) const {
    std::vector<mpq_class> v(coeffs_);
    for (auto& x : v) x *= c;
    return Poly(std::move(v));
  }

  /// Largest k with z^k dividing this (0 for the zero polynomial).
  unsigned low_order() const {
    unsigned k = 0;
    while (k < coeffs_.size() && sgn(coeffs_[k]) == 0) ++k;
    return coeffs_.empty() ? 0 : k;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<mpq_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<mpq_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a) { return a.scaled(mpq_class(-1)); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<mpq_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<mpq_class> coeffs_;
};

inline Poly unit_part(const Poly& a) { return a.is_zero() ? Poly::one() : Poly(a.leading()); }

inline Poly unit_inverse(const Poly& u) {
  if (u.degree() != 0) throw RingError("not a unit in Q[z]");
  return Poly(mpq_class(1 / u.leading()));
}

/// Polynomial long division; deg r < deg b.
inline std::pair<Poly, Poly> div_rem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw RingError("division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<mpq_class> rem(a.coeffs());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<mpq_class> quot(rem.size() - db, mpq_class(0));
  const mpq_class lead_inv = 1 / b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpq_class c = rem[k + db] * lead_inv;
    quot[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

inline int euclid_norm(const Poly& a) { return a.degree(); }

namespace detail {

using ZPoly = std::vector<mpz_class>;

inline void trim(ZPoly& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

/// Divides out the content and makes the leading coefficient positive.
inline void make_primitive(ZPoly& v) {
  if (v.empty()) return;
  mpz_class g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(v.back()) < 0) g = -g;
  if (g != 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

inline ZPoly primitive_integer(const Poly& a) {
  mpz_class l = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) v.push_back(c.get_num() * (l / c.get_den()));
  make_primitive(v);
  return v;
}

/// lc(b)^k * a reduced modulo b.
inline ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const mpz_class c = a.back();
    const std::size_t shift = a.size() - b.size();
    if (lb != 1)
      for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  return a;
}

}  // namespace detail

/// Monic gcd through a primitive remainder sequence over Z.
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero() || b.is_zero()) {
    const Poly& x = a.is_zero() ? b : a;
    return x.scaled(1 / x.leading());
  }
  if (a.is_constant() || b.is_constant()) return Poly::one();
  detail::ZPoly r0 = detail::primitive_integer(a), r1 = detail::primitive_integer(b);
  if (r0.size() < r1.size()) std::swap(r0, r1);
  while (!r1.empty()) {
    if (r1.size() == 1) return Poly::one();
    detail::ZPoly r = detail::pseudo_remainder(std::move(r0), r1);
    detail::make_primitive(r);
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  std::vector<mpq_class> c;
  c.reserve(r0.size());
  for (const auto& x : r0) c.emplace_back(x, r0.back());
  for (auto& x : c) x.canonicalize();
  return Poly(std::move(c));
}

namespace detail {

inline std::string coeff_str(const mpq_class& c) { return c.get_str(); }

}  // namespace detail

/// Descending-degree text form, e.g. "3*z^2 - 1/2*z + 4".
inline std::string to_string(const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    const mpq_class& c = a.coeffs()[k];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    const mpq_class mag = abs(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    if (k >= 1) mono = k == 1 ? "z" : "z^" + std::to_string(k);
    if (mono.empty()) {
      out += detail::coeff_str(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += detail::coeff_str(mag) + "*" + mono;
    }
  }
  return out;
}

/// Irreducibility over Q is caller-asserted.
inline bool prime_admissible(const Poly&) { return true; }

}  // namespace edd
