#pragma once

// Generic arithmetic over the shipped elementary divisor domains.
//
// A ring type R supplies value semantics, `R::zero()`, `R::one()`,
// `is_zero()`, the ring operators, and four ADL hooks:
//
//   unit_part(a)      unit u with a == u * canonical(a) (one() for zero)
//   unit_inverse(u)   multiplicative inverse of a unit
//   div_rem(a, b)     Euclidean division, euclid_norm(r) < euclid_norm(b)
//   euclid_norm(a)    totally ordered size of a nonzero element
//
// Every shipped ring is Euclidean (Z, Q[z]) or a discrete valuation ring
// (proper rational functions), so an extended gcd always exists and the
// Euclidean loop below terminates.

#include <concepts>
#include <string>
#include <utility>

#include "edd/error.hpp"

namespace edd {

template <class R>
concept EuclideanRing = std::regular<R> && requires(const R a, const R b) {
  { R::zero() } -> std::same_as<R>;
  { R::one() } -> std::same_as<R>;
  { R::name } -> std::convertible_to<const char*>;
  { a.is_zero() } -> std::same_as<bool>;
  { a + b } -> std::same_as<R>;
  { a - b } -> std::same_as<R>;
  { a * b } -> std::same_as<R>;
  { -a } -> std::same_as<R>;
  { unit_part(a) } -> std::same_as<R>;
  { unit_inverse(a) } -> std::same_as<R>;
  { div_rem(a, b) } -> std::same_as<std::pair<R, R>>;
  { euclid_norm(a) } -> std::totally_ordered;
  { to_string(a) } -> std::same_as<std::string>;
};

template <EuclideanRing R>
struct ExtGcd {
  R g;
  R x;
  R y;
};

/// Representative of the associate class of `a`.
template <EuclideanRing R>
R canonical(const R& a) {
  if (a.is_zero()) return a;
  return a * unit_inverse(unit_part(a));
}

template <EuclideanRing R>
R unit_of(const R& a) {
  return unit_part(a);
}

template <EuclideanRing R>
bool is_unit(const R& a) {
  return !a.is_zero() && canonical(a) == R::one();
}

template <EuclideanRing R>
bool associates(const R& a, const R& b) {
  return canonical(a) == canonical(b);
}

/// Extended gcd: x*a + y*b == g with g canonical. gcd_ext(0, 0) = (0, 0, 0).
template <EuclideanRing R>
ExtGcd<R> gcd_ext(const R& a, const R& b) {
  if (a.is_zero() && b.is_zero()) return {R::zero(), R::zero(), R::zero()};
  R r0 = a, r1 = b;
  R s0 = R::one(), s1 = R::zero();
  R t0 = R::zero(), t1 = R::one();
  while (!r1.is_zero()) {
    auto [q, r] = div_rem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    R s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    R t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const R u = unit_inverse(unit_part(r0));
  return {r0 * u, s0 * u, t0 * u};
}

template <EuclideanRing R>
R gcd(const R& a, const R& b) {
  if (a.is_zero()) return canonical(b);
  if (b.is_zero()) return canonical(a);
  R r0 = a, r1 = b;
  while (!r1.is_zero()) {
    R r = div_rem(r0, r1).second;
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return canonical(r0);
}

template <EuclideanRing R>
bool divides(const R& d, const R& a) {
  if (d.is_zero()) return a.is_zero();
  return div_rem(a, d).second.is_zero();
}

/// Exact quotient a / b; throws unless b is nonzero and divides a.
template <EuclideanRing R>
R divide_exact(const R& a, const R& b) {
  if (b.is_zero()) throw RingError("division by zero");
  auto [q, r] = div_rem(a, b);
  if (!r.is_zero())
    throw RingError(to_string(b) + " does not divide " + to_string(a));
  return q;
}

template <EuclideanRing R>
R lcm(const R& a, const R& b) {
  if (a.is_zero() || b.is_zero()) return R::zero();
  return canonical(divide_exact(a * b, gcd(a, b)));
}

template <EuclideanRing R>
R power(R base, unsigned exp) {
  R acc = R::one();
  while (exp != 0) {
    if (exp & 1U) acc = acc * base;
    base = base * base;
    exp >>= 1U;
  }
  return acc;
}

}  // namespace edd
