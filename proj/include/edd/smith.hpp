#pragma once

#include <cstddef>
#include <vector>

#include "edd/error.hpp"
#include "edd/fraction.hpp"
#include "edd/matrix.hpp"
#include "edd/ring.hpp"

namespace edd {

/// U * A * V == S with U, V unimodular and S = diag(inv_factors) + 0.
/// The inverses of the transformations are carried along.
template <EuclideanRing R>
struct SmithDecomp {
  Matrix<R> U;
  Matrix<R> V;
  Matrix<R> U_inv;
  Matrix<R> V_inv;
  Matrix<R> S;
  std::vector<R> inv_factors;  // canonical, each divides the next
  std::size_t rank = 0;
  std::vector<R> det_divisors;  // products of the first k invariant factors
};

namespace detail {

/// Elimination state for the Smith form. Every operation is applied to S
/// and mirrored on U, U^-1 (rows) or V, V^-1 (columns).
template <EuclideanRing R>
class SmithEngine {
 public:
  explicit SmithEngine(const Matrix<R>& a)
      : S(a),
        U(Matrix<R>::identity(a.rows())),
        U_inv(Matrix<R>::identity(a.rows())),
        V(Matrix<R>::identity(a.cols())),
        V_inv(Matrix<R>::identity(a.cols())) {}

  Matrix<R> S, U, U_inv, V, V_inv;

  void swap_rows(std::size_t a, std::size_t b) {
    S.swap_rows(a, b);
    U.swap_rows(a, b);
    U_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    S.swap_cols(a, b);
    V.swap_cols(a, b);
    V_inv.swap_rows(a, b);
  }

  /// Replaces S(k, col) by gcd(S(k, col), S(i, col)) and zeroes S(i, col).
  void row_gcd_step(std::size_t k, std::size_t i, std::size_t col) {
    const R& a = S(k, col);
    const R& b = S(i, col);
    if (divides(a, b)) {
      const R t = -divide_exact(b, a);
      S.combine_rows(k, i, R::one(), R::zero(), t, R::one());
      U.combine_rows(k, i, R::one(), R::zero(), t, R::one());
      U_inv.combine_cols(k, i, R::one(), -t, R::zero(), R::one());
      return;
    }
    const ExtGcd<R> e = gcd_ext(a, b);
    const R ag = divide_exact(a, e.g);
    const R bg = divide_exact(b, e.g);
    S.combine_rows(k, i, e.x, e.y, -bg, ag);
    U.combine_rows(k, i, e.x, e.y, -bg, ag);
    U_inv.combine_cols(k, i, ag, bg, -e.y, e.x);
  }

  /// Replaces S(k, k) by gcd(S(k, k), S(k, j)) and zeroes S(k, j).
  void col_gcd_step(std::size_t k, std::size_t j) {
    const R& a = S(k, k);
    const R& b = S(k, j);
    if (divides(a, b)) {
      add_col(j, k, -divide_exact(b, a));
      return;
    }
    const ExtGcd<R> e = gcd_ext(a, b);
    const R ag = divide_exact(a, e.g);
    const R bg = divide_exact(b, e.g);
    S.combine_cols(k, j, e.x, e.y, -bg, ag);
    V.combine_cols(k, j, e.x, e.y, -bg, ag);
    V_inv.combine_rows(k, j, ag, bg, -e.y, e.x);
  }

  /// col i += t * col j.
  void add_col(std::size_t i, std::size_t j, const R& t) {
    S.combine_cols(i, j, R::one(), t, R::zero(), R::one());
    V.combine_cols(i, j, R::one(), t, R::zero(), R::one());
    V_inv.combine_rows(i, j, R::one(), R::zero(), -t, R::one());
  }

  void scale_row(std::size_t k, const R& unit) {
    S.scale_row(k, unit);
    U.scale_row(k, unit);
    U_inv.scale_col(k, unit_inverse(unit));
  }

  /// diag(a, b) at (i, i), (j, j) -> diag(gcd, lcm).
  void fold(std::size_t i, std::size_t j) {
    add_col(i, j, R::one());
    row_gcd_step(i, j, i);
    const R t = divide_exact(S(i, j), S(i, i));
    add_col(j, i, -t);
  }

  std::size_t diagonalize() {
    const std::size_t p = S.rows(), m = S.cols();
    std::size_t k = 0;
    for (; k < p && k < m; ++k) {
      if (!bring_pivot(k)) break;
      while (true) {
        for (std::size_t i = k + 1; i < p; ++i)
          if (!S(i, k).is_zero()) row_gcd_step(k, i, k);
        for (std::size_t j = k + 1; j < m; ++j)
          if (!S(k, j).is_zero()) col_gcd_step(k, j);
        bool clean = true;
        for (std::size_t i = k + 1; i < p && clean; ++i) clean = S(i, k).is_zero();
        if (clean) break;
      }
    }
    return k;
  }

 private:
  /// Moves the nonzero entry of least Euclidean size in S[k.., k..] to (k, k).
  bool bring_pivot(std::size_t k) {
    bool found = false;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = k; i < S.rows(); ++i)
      for (std::size_t j = k; j < S.cols(); ++j) {
        if (S(i, j).is_zero()) continue;
        if (!found || euclid_norm(S(i, j)) < euclid_norm(S(bi, bj))) {
          found = true;
          bi = i;
          bj = j;
        }
      }
    if (!found) return false;
    swap_rows(k, bi);
    swap_cols(k, bj);
    return true;
  }
};

}  // namespace detail

/// Smith form with unimodular transformations. Deterministic for a given input.
template <EuclideanRing R>
SmithDecomp<R> smith(const Matrix<R>& a) {
  detail::SmithEngine<R> eng(a);
  const std::size_t r = eng.diagonalize();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (!divides(eng.S(i, i), eng.S(j, j))) eng.fold(i, j);
  for (std::size_t i = 0; i < r; ++i) {
    const R u = unit_part(eng.S(i, i));
    if (!(u == R::one())) eng.scale_row(i, unit_inverse(u));
  }
  SmithDecomp<R> out;
  out.rank = r;
  R acc = R::one();
  for (std::size_t i = 0; i < r; ++i) {
    out.inv_factors.push_back(eng.S(i, i));
    acc = acc * eng.S(i, i);
    out.det_divisors.push_back(acc);
  }
  out.S = std::move(eng.S);
  out.U = std::move(eng.U);
  out.V = std::move(eng.V);
  out.U_inv = std::move(eng.U_inv);
  out.V_inv = std::move(eng.V_inv);
  return out;
}

inline constexpr std::size_t minor_enumeration_limit = 6;

/// delta_k = gcd of all k x k minors, k = 1..min(p, m). Entries past the
/// rank are zero. Exhaustive; refuses matrices with min(p, m) > 6.
template <EuclideanRing R>
std::vector<R> determinantal_divisors(const Matrix<R>& a) {
  const std::size_t kmax = std::min(a.rows(), a.cols());
  if (kmax > minor_enumeration_limit)
    throw HypothesisError("minor enumeration limited to min(p, m) <= 6");
  std::vector<R> out;
  for (std::size_t k = 1; k <= kmax; ++k) {
    R g = R::zero();
    for_each_subset(a.rows(), k, [&](const IndexSet& rows) {
      if (is_unit(g)) return;
      for_each_subset(a.cols(), k, [&](const IndexSet& cols) {
        if (is_unit(g)) return;
        g = gcd(g, minor(a, rows, cols));
      });
    });
    out.push_back(g);
  }
  return out;
}

/// Invariant factors from determinantal divisors, alpha_k = delta_k / delta_{k-1}.
template <EuclideanRing R>
std::vector<R> smith_oracle(const Matrix<R>& a) {
  const std::vector<R> delta = determinantal_divisors(a);
  std::vector<R> out;
  R prev = R::one();
  for (const R& d : delta) {
    if (d.is_zero()) break;
    out.push_back(canonical(divide_exact(d, prev)));
    prev = d;
  }
  return out;
}

/// U * G * V == diag(eps_i / psi_i) + 0 with gcd(eps_i, psi_i) = 1,
/// eps_1 | eps_2 | ... and ... | psi_2 | psi_1.
template <EuclideanRing R>
struct SMDecomp {
  Matrix<R> U;
  Matrix<R> V;
  Matrix<R> U_inv;
  Matrix<R> V_inv;
  std::vector<R> eps;
  std::vector<R> psi;
  std::size_t rank = 0;
  R lcd;  // least common denominator of G

  /// Invariant fractions eps_i / psi_i.
  std::vector<Frac<R>> fractions() const {
    std::vector<Frac<R>> f;
    for (std::size_t i = 0; i < rank; ++i) f.push_back(Frac<R>::reduce(eps[i], psi[i]));
    return f;
  }

  MatF<R> form(std::size_t rows, std::size_t cols) const { return MatF<R>::diagonal(fractions(), rows, cols); }
};

/// Number of non-unit denominators: the largest g with psi_g not a unit.
template <EuclideanRing R>
std::size_t pole_count(const std::vector<R>& psi) {
  std::size_t g = 0;
  for (std::size_t i = 0; i < psi.size(); ++i)
    if (!is_unit(psi[i])) g = i + 1;
  return g;
}

template <EuclideanRing R>
SMDecomp<R> smith_mcmillan(const MatF<R>& g) {
  const R phi = lcd(g);
  SmithDecomp<R> sd = smith(scale_to_ring(phi, g));
  SMDecomp<R> out;
  out.lcd = phi;
  out.rank = sd.rank;
  for (const R& alpha : sd.inv_factors) {
    const R c = gcd(alpha, phi);
    out.eps.push_back(canonical(divide_exact(alpha, c)));
    out.psi.push_back(canonical(divide_exact(phi, c)));
  }
  out.U = std::move(sd.U);
  out.V = std::move(sd.V);
  out.U_inv = std::move(sd.U_inv);
  out.V_inv = std::move(sd.V_inv);
  return out;
}

template <EuclideanRing R>
SMDecomp<R> smith_mcmillan(const Matrix<R>& a) {
  return smith_mcmillan(to_field(a));
}

/// Largest t with prime^t dividing a nonzero element.
template <EuclideanRing R>
unsigned multiplicity(R value, const R& prime) {
  if (value.is_zero()) throw RingError("multiplicity of zero");
  if (prime.is_zero() || is_unit(prime)) throw RingError("prime must be a nonzero non-unit");
  unsigned t = 0;
  while (true) {
    auto [q, r] = div_rem(value, prime);
    if (!r.is_zero()) return t;
    value = std::move(q);
    ++t;
  }
}

template <EuclideanRing R>
struct PartialMults {
  R prime;
  std::vector<unsigned> mults;  // positive, non-decreasing

  friend bool operator==(const PartialMults&, const PartialMults&) = default;
};

/// Partial multiplicities of an invariant-factor chain at a prime.
template <EuclideanRing R>
PartialMults<R> partial_multiplicities(const std::vector<R>& factors, const R& prime) {
  if (prime.is_zero() || is_unit(prime)) throw RingError("prime must be a nonzero non-unit");
  if (!prime_admissible(prime)) throw HypothesisError(to_string(prime) + " is not a prime of " + R::name);
  PartialMults<R> out{canonical(prime), {}};
  for (const R& f : factors) {
    const unsigned t = multiplicity(f, prime);
    if (t > 0) out.mults.push_back(t);
  }
  return out;
}

}  // namespace edd
