#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edd/coprime.hpp"
#include "edd/error.hpp"
#include "edd/matrix.hpp"
#include "edd/smith.hpp"

namespace edd {

/// P = [[A, B], [C, D]] with A square and nonsingular. T is a ring or a fraction field.
template <class T>
struct SystemMatrix {
  Matrix<T> A, B, C, D;

  std::size_t n() const { return A.rows(); }
  std::size_t p() const { return C.rows(); }
  std::size_t m() const { return B.cols(); }

  static SystemMatrix make(Matrix<T> a, Matrix<T> b, Matrix<T> c, Matrix<T> d) {
    if (!a.is_square()) throw ShapeError("A must be square");
    if (b.rows() != a.rows() || c.cols() != a.cols() || d.rows() != c.rows() || d.cols() != b.cols())
      throw ShapeError("inconsistent block shapes");
    if (det(a).is_zero()) throw HypothesisError("A is singular");
    return SystemMatrix{std::move(a), std::move(b), std::move(c), std::move(d)};
  }

  /// Splits P with A the leading n x n block.
  static SystemMatrix split(const Matrix<T>& P, std::size_t n) {
    if (n > P.rows() || n > P.cols()) throw ShapeError("state dimension exceeds matrix size");
    const std::size_t p = P.rows() - n, m = P.cols() - n;
    return make(P.block(0, 0, n, n), P.block(0, n, n, m), P.block(n, 0, p, n), P.block(n, n, p, m));
  }

  Matrix<T> assemble() const { return block2x2(A, B, C, D); }
};

/// G = D - C A^-1 B over the fraction field.
template <class T>
auto transfer(const SystemMatrix<T>& s) {
  const auto a = to_field(s.A);
  return to_field(s.D) - to_field(s.C) * inverse(a) * to_field(s.B);
}

template <EuclideanRing R>
struct SchurResult {
  MatF<R> G;
  std::size_t rank_G = 0;
  std::size_t rank_P = 0;
};

template <class T>
auto schur_complement(const SystemMatrix<T>& s) {
  using R = base_ring_t<T>;
  SchurResult<R> out;
  out.G = transfer(s);
  out.rank_G = rank(out.G);
  out.rank_P = rank(to_field(s.assemble()));
  if (out.rank_P != s.n() + out.rank_G) throw HypothesisError("rank P != n + rank G");
  return out;
}

template <EuclideanRing R>
struct SchurMinorReport {
  Frac<R> lhs, rhs;  // det P[[n] u I^, [n] u J^] and det A * det G[I, J]
  Frac<R> lhs_scaled, rhs_scaled;
  bool holds = false;
  bool holds_scaled = false;
};

/// Checks det P[[n] u I^, [n] u J^] == det A * det G[I, J] and the variant
/// with P, A, G all multiplied by e.
template <EuclideanRing R>
SchurMinorReport<R> schur_minor_identity(const SystemMatrix<R>& s, const IndexSet& I, const IndexSet& J,
                                         const R& e) {
  if (I.size() != J.size()) throw ShapeError("index sets must have equal size");
  const std::size_t n = s.n();
  const IndexSet rows = IndexSet::range(n).concat(I.shifted(n));
  const IndexSet cols = IndexSet::range(n).concat(J.shifted(n));
  const MatF<R> P = to_field(s.assemble());
  const MatF<R> A = to_field(s.A);
  const MatF<R> G = transfer(s);
  const Frac<R> fe(e);
  SchurMinorReport<R> out;
  out.lhs = minor(P, rows, cols);
  out.rhs = det(A) * minor(G, I, J);
  out.lhs_scaled = minor(fe * P, rows, cols);
  out.rhs_scaled = det(fe * A) * minor(fe * G, I, J);
  out.holds = out.lhs == out.rhs;
  out.holds_scaled = out.lhs_scaled == out.rhs_scaled;
  return out;
}

// ---------------------------------------------------------------------------
// Irreducibility and Rosenbrock's theorem

template <EuclideanRing R>
struct IrreducibilityReport {
  CoprimeReport<R> left;   // (A, B)
  CoprimeReport<R> right;  // (A, C)
  bool irreducible = false;
};

template <EuclideanRing R>
IrreducibilityReport<R> is_irreducible(const SystemMatrix<R>& s) {
  IrreducibilityReport<R> out{coprime_check(s.A, s.B, Side::left), coprime_check(s.A, s.C, Side::right), false};
  out.irreducible = out.left.coprime && out.right.coprime;
  return out;
}

template <EuclideanRing R>
struct RosenbrockPrediction {
  std::vector<R> S_P;  // I_n (+) eps_1..eps_r
  std::vector<R> S_A;  // I_{n-g} (+) psi_g..psi_1
  std::size_t g = 0;
};

namespace detail {

template <EuclideanRing R>
RosenbrockPrediction<R> predict(const SMDecomp<R>& sm, std::size_t n) {
  RosenbrockPrediction<R> out;
  out.g = pole_count(sm.psi);
  out.S_P.assign(n, R::one());
  out.S_P.insert(out.S_P.end(), sm.eps.begin(), sm.eps.end());
  if (n >= out.g) {
    out.S_A.assign(n - out.g, R::one());
    for (std::size_t i = out.g; i > 0; --i) out.S_A.push_back(sm.psi[i - 1]);
  }
  return out;
}

}  // namespace detail

/// Smith forms of P and A forced by an irreducible realization of dimension n.
template <EuclideanRing R>
RosenbrockPrediction<R> rosenbrock_forward(const MatF<R>& G, std::size_t n) {
  const auto sm = smith_mcmillan(G);
  auto out = detail::predict(sm, n);
  if (n < out.g) throw HypothesisError("dimension " + std::to_string(n) + " is below g = " + std::to_string(out.g));
  return out;
}

/// Invariant fractions of G recovered from the Smith forms of A (n entries,
/// psi_n | ... | psi_1) and of P (n + r entries) of an irreducible system.
template <EuclideanRing R>
std::vector<Frac<R>> rosenbrock_converse(const std::vector<R>& S_A, const std::vector<R>& S_P, std::size_t n,
                                         std::size_t r) {
  if (S_A.size() != n) throw ShapeError("S_A must list n invariant factors");
  if (S_P.size() != n + r) throw ShapeError("S_P must list n + r invariant factors");
  for (std::size_t i = 0; i < n; ++i)
    if (!is_unit(S_P[i]))
      throw HypothesisError("eps_" + std::to_string(i + 1) + " = " + to_string(S_P[i]) + " is not a unit");
  const auto psi = [&](std::size_t i) { return i <= n ? S_A[n - i] : R::one(); };
  for (std::size_t i = r + 1; i <= n; ++i)
    if (!is_unit(psi(i)))
      throw HypothesisError("psi_" + std::to_string(i) + " = " + to_string(psi(i)) + " is not a unit");
  std::vector<Frac<R>> out;
  for (std::size_t i = 1; i <= r; ++i) {
    const R& e = S_P[n + i - 1];
    if (!is_unit(gcd(e, psi(i)))) throw HypothesisError("numerator and denominator " + std::to_string(i) + " share a factor");
    out.push_back(Frac<R>::reduce(e, psi(i)));
  }
  return out;
}

template <EuclideanRing R>
struct RosenbrockReport {
  SMDecomp<R> sm_G;
  std::size_t g = 0;
  std::vector<R> predicted_SP, predicted_SA;
  std::vector<R> computed_SP, computed_SA;
  IrreducibilityReport<R> coprimeness;
  bool irreducible = false;
  bool match = false;
};

template <EuclideanRing R>
RosenbrockReport<R> verify_rosenbrock(const SystemMatrix<R>& s) {
  RosenbrockReport<R> out;
  out.sm_G = smith_mcmillan(transfer(s));
  const auto pred = detail::predict(out.sm_G, s.n());
  out.g = pred.g;
  out.predicted_SP = pred.S_P;
  out.predicted_SA = pred.S_A;
  out.computed_SP = smith(s.assemble()).inv_factors;
  out.computed_SA = smith(s.A).inv_factors;
  out.coprimeness = is_irreducible(s);
  out.irreducible = out.coprimeness.irreducible;
  out.match = s.n() >= out.g && out.predicted_SP == out.computed_SP && out.predicted_SA == out.computed_SA;
  return out;
}

// ---------------------------------------------------------------------------
// Reduction to an irreducible system

enum class ReductionOrder { ef, fe };

template <EuclideanRing R>
struct ReductionResult {
  Matrix<R> E, F;
  SystemMatrix<R> P0;
};

namespace detail {

template <EuclideanRing R>
struct LeftStep {
  Matrix<R> E, A, B;  // A_in == E * A, B_in == E * B
};

/// Extracts a common left divisor of (A, B). With a split element, only the
/// part of each invariant factor sharing primes with it is extracted.
template <EuclideanRing R>
LeftStep<R> left_step(const Matrix<R>& a, const Matrix<R>& b, const std::optional<R>& split = std::nullopt) {
  const std::size_t n = a.rows();
  const SmithDecomp<R> sd = smith(hcat(a, b));
  bool coprime = true;
  for (const R& s : sd.inv_factors) coprime = coprime && is_unit(s);
  if (coprime) return {Matrix<R>::identity(n), a, b};
  // [A B] == W^-1 * S * Z^-1[0:n, :]
  std::vector<R> taken(n), left(n);
  for (std::size_t i = 0; i < n; ++i) {
    taken[i] = split ? gcd(sd.inv_factors[i], *split) : sd.inv_factors[i];
    left[i] = divide_exact(sd.inv_factors[i], taken[i]);
  }
  const Matrix<R> rest = Matrix<R>::diagonal(left) * sd.V_inv.block(0, 0, n, sd.V_inv.cols());
  return {sd.U_inv * Matrix<R>::diagonal(taken), rest.block(0, 0, n, n), rest.block(0, n, n, b.cols())};
}

/// Right analogue: A_in == A * F, C_in == C * F.
template <EuclideanRing R>
LeftStep<R> right_step(const Matrix<R>& a, const Matrix<R>& c, const std::optional<R>& split = std::nullopt) {
  const LeftStep<R> t = left_step(a.transposed(), c.transposed(), split);
  return {t.E.transposed(), t.A.transposed(), t.B.transposed()};
}

}  // namespace detail

/// P == (E (+) I) * P0 * (F (+) I) with P0 irreducible and the same transfer
/// function. With a split element the first pass extracts only the part of the
/// divisor sharing primes with it, leaving the rest to the other side.
template <EuclideanRing R>
ReductionResult<R> reduce_system(const SystemMatrix<R>& s, ReductionOrder order = ReductionOrder::ef,
                                 const std::optional<std::type_identity_t<R>>& split = std::nullopt) {
  const std::size_t n = s.n();
  Matrix<R> E = Matrix<R>::identity(n), F = Matrix<R>::identity(n);
  Matrix<R> A = s.A, B = s.B, C = s.C;
  auto do_left = [&](const std::optional<R>& sp) {
    auto st = detail::left_step(A, B, sp);
    E = E * st.E;
    A = std::move(st.A);
    B = std::move(st.B);
  };
  auto do_right = [&](const std::optional<R>& sp) {
    auto st = detail::right_step(A, C, sp);
    F = st.E * F;
    A = std::move(st.A);
    C = std::move(st.B);
  };
  if (order == ReductionOrder::ef) {
    do_left(split);
    do_right(std::nullopt);
    do_left(std::nullopt);
  } else {
    do_right(split);
    do_left(std::nullopt);
    do_right(std::nullopt);
  }
  return {std::move(E), std::move(F), SystemMatrix<R>::make(std::move(A), std::move(B), std::move(C), s.D)};
}

// ---------------------------------------------------------------------------
// Diagnostics for reducible systems

template <EuclideanRing R>
struct DiagnosticItem {
  bool applicable = true;
  bool holds = false;
  std::vector<R> evidence;
};

template <EuclideanRing R>
struct DiagnosticReport {
  SMDecomp<R> sm_G;
  std::size_t g = 0;
  std::vector<R> psi_tilde;  // psi~_1, ..., psi~_n: invariant factors of A, largest first
  std::vector<R> eps_tilde;  // invariant factors of P
  std::vector<R> psi;        // psi_1..psi_n with psi_i := 1 past r
  // items of the divisibility theorem
  DiagnosticItem<R> item_i, item_ii, item_iii, item_iv, item_v;
  // full-rank strengthening
  DiagnosticItem<R> full_row, full_col;
};

namespace detail {

template <EuclideanRing R>
std::optional<R> quotient(const R& a, const R& b) {
  if (b.is_zero() || !divides(b, a)) return std::nullopt;
  return canonical(divide_exact(a, b));
}

template <EuclideanRing R>
R product(const std::vector<R>& v, std::size_t from, std::size_t to) {
  R acc = R::one();
  for (std::size_t i = from; i < to; ++i) acc = acc * v[i];
  return acc;
}

}  // namespace detail

template <EuclideanRing R>
DiagnosticReport<R> diagnose_reducible(const SystemMatrix<R>& s) {
  const auto irr = is_irreducible(s);
  if (irr.irreducible) throw HypothesisError("system is irreducible; use verify_rosenbrock");
  const std::size_t n = s.n(), p = s.p(), m = s.m();
  DiagnosticReport<R> out;
  out.sm_G = smith_mcmillan(transfer(s));
  const std::size_t r = out.sm_G.rank;
  out.g = pole_count(out.sm_G.psi);
  const std::vector<R> sa = smith(s.A).inv_factors;
  for (std::size_t i = n; i > 0; --i) out.psi_tilde.push_back(sa[i - 1]);
  out.eps_tilde = smith(s.assemble()).inv_factors;
  out.psi = out.sm_G.psi;
  out.psi.resize(std::max(n, r), R::one());

  // i) n >= g and psi_i | psi~_i
  out.item_i.holds = n >= out.g;
  for (std::size_t i = 0; i < n; ++i) {
    const auto q = detail::quotient(out.psi_tilde[i], out.psi[i]);
    out.item_i.holds = out.item_i.holds && q.has_value();
    out.item_i.evidence.push_back(q.value_or(R::zero()));
  }
  // ii) prod psi~ / prod_{i<=g} psi_i is not a unit
  const R psi_g = detail::product(out.sm_G.psi, 0, out.g);
  const auto q_psi = detail::quotient(detail::product(out.psi_tilde, 0, n), psi_g);
  out.item_ii.holds = q_psi && !is_unit(*q_psi);
  if (q_psi) out.item_ii.evidence.push_back(*q_psi);
  // iii) eps_i | eps~_{n+i}
  out.item_iii.holds = out.eps_tilde.size() == n + r;
  for (std::size_t i = 0; i < r && out.item_iii.holds; ++i) {
    const auto q = detail::quotient(out.eps_tilde[n + i], out.sm_G.eps[i]);
    out.item_iii.holds = q.has_value();
    out.item_iii.evidence.push_back(q.value_or(R::zero()));
  }
  // iv) prod eps~ / prod eps divides the psi quotient
  const auto q_eps = detail::quotient(detail::product(out.eps_tilde, 0, out.eps_tilde.size()),
                                      detail::product(out.sm_G.eps, 0, r));
  out.item_iv.holds = q_eps && q_psi && divides(*q_eps, *q_psi);
  if (q_eps) out.item_iv.evidence.push_back(*q_eps);
  if (q_psi) out.item_iv.evidence.push_back(*q_psi);
  // v) square nonsingular: the two quotients are associates and not units
  out.item_v.applicable = r == p && r == m;
  out.item_v.holds = out.item_v.applicable && q_eps && q_psi && associates(*q_eps, *q_psi) && !is_unit(*q_psi);
  out.item_v.evidence = out.item_iv.evidence;
  // full row / column rank
  out.full_row.applicable = !irr.left.coprime && r == p;
  out.full_row.holds = out.full_row.applicable && q_eps && !is_unit(*q_eps);
  out.full_col.applicable = !irr.right.coprime && r == m;
  out.full_col.holds = out.full_col.applicable && q_eps && !is_unit(*q_eps);
  if (q_eps) {
    out.full_row.evidence.push_back(*q_eps);
    out.full_col.evidence.push_back(*q_eps);
  }
  return out;
}

template <EuclideanRing R>
struct LocalStructure {
  R prime;
  std::vector<unsigned> system;     // partial multiplicities of P
  std::vector<unsigned> numerator;  // partial multiplicities of eps_1..eps_r
  R cofactor;                       // det A / (psi_g ... psi_1)
  bool equal = false;
};

/// Partial multiplicities of P and of the numerators of G at a prime that
/// does not divide det A / (psi_g ... psi_1).
template <EuclideanRing R>
LocalStructure<R> local_zero_structure(const SystemMatrix<R>& s, const R& prime) {
  if constexpr (!std::is_same_v<R, Integer> && !std::is_same_v<R, Poly>) {
    throw HypothesisError(std::string("local structure needs Z or Qz, not ") + R::name);
  } else {
    const SMDecomp<R> sm = smith_mcmillan(transfer(s));
    const std::size_t g = pole_count(sm.psi);
    const auto c = detail::quotient(det(s.A), detail::product(sm.psi, 0, g));
    if (!c) throw HypothesisError("psi_g ... psi_1 does not divide det A");
    if (!is_unit(gcd(prime, *c)))
      throw HypothesisError(to_string(prime) + " divides det A / (psi_g ... psi_1) = " + to_string(*c));
    LocalStructure<R> out;
    out.prime = canonical(prime);
    out.cofactor = *c;
    out.system = partial_multiplicities(smith(s.assemble()).inv_factors, prime).mults;
    out.numerator = partial_multiplicities(sm.eps, prime).mults;
    out.equal = out.system == out.numerator;
    return out;
  }
}

// ---------------------------------------------------------------------------
// Minimal realizations

template <EuclideanRing R>
struct Realization {
  SystemMatrix<R> system;
  std::size_t n = 0;
  IrreducibilityReport<R> coprimeness;
};

/// Irreducible realization of dimension g built from the Smith-McMillan form.
template <EuclideanRing R>
Realization<R> minimal_realization(const MatF<R>& G) {
  const SMDecomp<R> sm = smith_mcmillan(G);
  const std::size_t p = G.rows(), m = G.cols(), r = sm.rank, g = pole_count(sm.psi);
  std::vector<R> psi_g(sm.psi.begin(), sm.psi.begin() + g);
  std::vector<R> eps_g(sm.eps.begin(), sm.eps.begin() + g);
  std::vector<R> tail(r, R::zero());
  for (std::size_t i = g; i < r; ++i) tail[i] = sm.eps[i];
  const Matrix<R> A = Matrix<R>::diagonal(psi_g);
  const Matrix<R> B = Matrix<R>::diagonal(std::vector<R>(g, R::one()), g, m) * sm.V_inv;
  const Matrix<R> C = -(sm.U_inv * Matrix<R>::diagonal(eps_g, p, g));
  const Matrix<R> D = sm.U_inv * Matrix<R>::diagonal(tail, p, m) * sm.V_inv;
  Realization<R> out{SystemMatrix<R>::make(A, B, C, D), g, {}};
  out.coprimeness = is_irreducible(out.system);
  return out;
}

template <EuclideanRing R>
std::size_t realization_dimension(const MatF<R>& G) {
  return pole_count(smith_mcmillan(G).psi);
}

}  // namespace edd
