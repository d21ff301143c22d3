#pragma once

#include <optional>
#include <utility>

#include "edd/error.hpp"
#include "edd/matrix.hpp"
#include "edd/smith.hpp"

namespace edd {

enum class Side { left, right };

/// Coprimeness verdict with a certificate either way.
///
/// right: X * G1 + Y * G2 == I, completion * [G1; G2] == [I; 0],
///        G1 == G1t * divisor and G2 == G2t * divisor.
/// left:  G1 * X + G2 * Y == I, [G1 G2] * completion == [I 0],
///        G1 == divisor * G1t and G2 == divisor * G2t.
template <EuclideanRing R>
struct CoprimeReport {
  Side side = Side::right;
  bool coprime = false;
  std::optional<std::pair<Matrix<R>, Matrix<R>>> witness;
  std::optional<Matrix<R>> common_divisor;
  std::optional<std::pair<Matrix<R>, Matrix<R>>> cofactors;
  std::optional<Matrix<R>> completion;
};

namespace detail {

template <EuclideanRing R>
CoprimeReport<R> right_coprime(const Matrix<R>& g1, const Matrix<R>& g2) {
  if (g1.cols() != g2.cols()) throw ShapeError("right coprimeness needs equal column counts");
  const std::size_t p = g1.rows(), q = g2.rows(), m = g1.cols();
  const SmithDecomp<R> sd = smith(vcat(g1, g2));
  CoprimeReport<R> rep;
  rep.side = Side::right;
  rep.coprime = sd.rank == m;
  for (std::size_t i = 0; i < sd.rank && rep.coprime; ++i) rep.coprime = is_unit(sd.inv_factors[i]);

  if (rep.coprime) {
    // W * M * Z == [I; 0]  =>  (Z (+) I) * W * M == [I; 0]
    const Matrix<R> u = direct_sum(sd.V, Matrix<R>::identity(p + q - m)) * sd.U;
    rep.witness = std::make_pair(u.block(0, 0, m, p), u.block(0, p, m, q));
    rep.completion = u;
  } else {
    // M == W^-1 * E * Sigma * Z^-1 with E the rectangular identity
    std::vector<R> diag(sd.inv_factors);
    diag.resize(m, R::zero());
    const Matrix<R> divisor = Matrix<R>::diagonal(diag) * sd.V_inv;
    const Matrix<R> left =
        sd.U_inv * Matrix<R>::diagonal(std::vector<R>(std::min(p + q, m), R::one()), p + q, m);
    rep.common_divisor = divisor;
    rep.cofactors = std::make_pair(left.block(0, 0, p, m), left.block(p, 0, q, m));
  }
  return rep;
}

template <EuclideanRing R>
CoprimeReport<R> transpose_report(CoprimeReport<R> r) {
  r.side = Side::left;
  if (r.witness) r.witness = std::make_pair(r.witness->first.transposed(), r.witness->second.transposed());
  if (r.completion) r.completion = r.completion->transposed();
  if (r.common_divisor) r.common_divisor = r.common_divisor->transposed();
  if (r.cofactors) r.cofactors = std::make_pair(r.cofactors->first.transposed(), r.cofactors->second.transposed());
  return r;
}

}  // namespace detail

/// Right: the stacked matrix [G1; G2] has Smith form [I; 0].
/// Left: the abutted matrix [G1 G2] has Smith form [I 0].
template <EuclideanRing R>
CoprimeReport<R> coprime_check(const Matrix<R>& g1, const Matrix<R>& g2, Side side) {
  if (side == Side::right) return detail::right_coprime(g1, g2);
  if (g1.rows() != g2.rows()) throw ShapeError("left coprimeness needs equal row counts");
  return detail::transpose_report(detail::right_coprime(g1.transposed(), g2.transposed()));
}

/// Unimodular U with [A B] * U == [I 0]. Requires A square, nonsingular and
/// left coprime with B. The block U[n.., n..] is checked to be nonsingular.
template <EuclideanRing R>
Matrix<R> completion_I0(const Matrix<R>& a, const Matrix<R>& b) {
  if (!a.is_square()) throw ShapeError("A must be square");
  if (b.rows() != a.rows()) throw ShapeError("A and B must have equal row counts");
  const std::size_t n = a.rows(), m = b.cols();
  if (det(a).is_zero()) throw HypothesisError("A is singular");
  const SmithDecomp<R> sd = smith(hcat(a, b));
  bool ok = sd.rank == n;
  for (std::size_t i = 0; i < sd.rank && ok; ++i) ok = is_unit(sd.inv_factors[i]);
  if (!ok) throw HypothesisError("A and B are not left coprime");
  // W * [A B] * Z == [I 0]  =>  [A B] * Z * (W (+) I) == [I 0]
  Matrix<R> u = sd.V * direct_sum(sd.U, Matrix<R>::identity(m));
  if (det(u.block(n, n, m, m)).is_zero()) throw HypothesisError("completion has singular Y22");
  return u;
}

/// Coprimeness of fraction matrices after clearing each by its own lcd.
template <EuclideanRing R>
CoprimeReport<R> fraction_coprime(const MatF<R>& t1, const MatF<R>& t2, Side side) {
  return coprime_check(scale_to_ring(lcd(t1), t1), scale_to_ring(lcd(t2), t2), side);
}

}  // namespace edd
