#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edd/coprime.hpp"
#include "edd/error.hpp"
#include "edd/matrix.hpp"
#include "edd/proper_rational.hpp"
#include "edd/smith.hpp"
#include "edd/system.hpp"

namespace edd {

/// a/b is a unit of R (both zero counts as equal).
template <EuclideanRing R>
bool associates(const Frac<R>& a, const Frac<R>& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const Frac<R> q = a / b;
  return is_unit(q.num()) && is_unit(q.den());
}

template <EuclideanRing R>
bool associates(const std::vector<Frac<R>>& a, const std::vector<Frac<R>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!associates(a[i], b[i])) return false;
  return true;
}

/// num/den with canonical numerator and denominator.
template <EuclideanRing R>
Frac<R> canonical_fraction(const R& num, const R& den) {
  const Frac<R> f = Frac<R>::reduce(num, den);
  if (f.is_zero()) return f;
  return Frac<R>::reduce(canonical(f.num()), f.den());
}

/// Blocks over the fraction field with their least common denominators and
/// P = (1/(beta gamma)) [alpha A, beta B; gamma C, (beta gamma/alpha) D].
template <EuclideanRing R>
struct FofSystem {
  MatF<R> A, B, C, D;
  R alpha, beta, gamma;
  MatF<R> P;
  CoprimeReport<R> left;   // (alpha A, beta B)
  CoprimeReport<R> right;  // (alpha A, gamma C)

  std::size_t n() const { return A.rows(); }
  std::size_t p() const { return C.rows(); }
  std::size_t m() const { return B.cols(); }
  bool coprime() const { return left.coprime && right.coprime; }
  MatF<R> transfer() const { return D - C * inverse(A) * B; }
};

template <EuclideanRing R>
FofSystem<R> fof_assemble(const MatF<R>& A, const MatF<R>& B, const MatF<R>& C, const MatF<R>& D) {
  const std::size_t n = A.rows();
  if (A.cols() != n || B.rows() != n || C.cols() != n || D.rows() != C.rows() || D.cols() != B.cols())
    throw ShapeError("blocks do not form a system matrix");
  if (det(A).is_zero()) throw HypothesisError("A is singular");
  FofSystem<R> s{A, B, C, D, lcd(A), lcd(B), lcd(C), {}, {}, {}};
  const R bg = s.beta * s.gamma;
  const Frac<R> d_scale = Frac<R>::reduce(bg, s.alpha);
  const MatF<R> dd = d_scale * D;
  if (!is_integral(dd)) throw HypothesisError("(beta gamma / alpha) D is not ring-valued");
  const Matrix<R> aA = scale_to_ring(s.alpha, A);
  const Matrix<R> bB = scale_to_ring(s.beta, B);
  const Matrix<R> cC = scale_to_ring(s.gamma, C);
  const Matrix<R> Q = block2x2(aA, bB, cC, to_ring(dd));
  s.P = Frac<R>::reduce(R::one(), bg) * to_field(Q);
  s.left = coprime_check(aA, bB, Side::left);
  s.right = coprime_check(aA, cC, Side::right);
  return s;
}

template <EuclideanRing R>
struct FofForwardReport {
  SMDecomp<R> sm_G;
  std::vector<R> delta, nu, chi;
  std::vector<R> alpha_hat, beta_hat, alpha_tilde, beta_tilde, eps_tilde, psi_tilde;
  std::size_t g = 0;
  std::vector<Frac<R>> predicted_SA, predicted_SP;
  std::vector<Frac<R>> computed_SA, computed_SP;
  bool chains_hold = false;  // eps~, psi~, alpha~, beta~ divisibility chains
  bool leading_block = false;  // SM(P) starts with (1/(beta gamma)) I_n
  bool lcd_P = false;          // lcd(P) ~ beta gamma
  bool match_A = false, match_P = false;
  bool match() const { return match_A && match_P; }
};

namespace detail {

template <EuclideanRing R>
bool chain_up(const std::vector<R>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (!divides(v[i], v[i + 1])) return false;
  return true;
}

template <EuclideanRing R>
bool chain_down(const std::vector<R>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (!divides(v[i + 1], v[i])) return false;
  return true;
}

template <EuclideanRing R>
bool has_leading_block(const std::vector<Frac<R>>& sm, std::size_t n, const R& bg) {
  if (sm.size() < n) return false;
  const Frac<R> lead = Frac<R>::reduce(R::one(), bg);
  for (std::size_t i = 0; i < n; ++i)
    if (!associates(sm[i], lead)) return false;
  return true;
}

}  // namespace detail

/// Smith-McMillan forms of A and P predicted from that of G, checked
/// against direct computation.
template <EuclideanRing R>
FofForwardReport<R> fof_forward(const FofSystem<R>& s) {
  if (!s.left.coprime) throw HypothesisError("(alpha A, beta B) is not left coprime");
  if (!s.right.coprime) throw HypothesisError("(alpha A, gamma C) is not right coprime");
  const std::size_t n = s.n();
  const R bg = s.beta * s.gamma;
  FofForwardReport<R> rep;
  rep.sm_G = smith_mcmillan(s.transfer());
  const std::size_t r = rep.sm_G.rank;
  for (std::size_t i = 0; i < r; ++i) {
    const R& e = rep.sm_G.eps[i];
    const R& ps = rep.sm_G.psi[i];
    const R d = gcd(e, s.alpha);
    const R v = gcd(ps, bg);
    const R ah = divide_exact(s.alpha, d);
    const R bh = divide_exact(bg, v);
    const R c = gcd(ah, bh);
    rep.delta.push_back(d);
    rep.nu.push_back(v);
    rep.chi.push_back(c);
    rep.alpha_hat.push_back(ah);
    rep.beta_hat.push_back(bh);
    rep.alpha_tilde.push_back(divide_exact(ah, c));
    rep.beta_tilde.push_back(divide_exact(bh, c));
    rep.eps_tilde.push_back(divide_exact(e, d));
    rep.psi_tilde.push_back(divide_exact(ps, v));
    if (!is_unit(rep.alpha_tilde[i] * rep.psi_tilde[i])) rep.g = i + 1;
  }
  if (n < rep.g) throw HypothesisError("dimension " + std::to_string(n) + " is below g = " + std::to_string(rep.g));
  rep.chains_hold = detail::chain_up(rep.eps_tilde) && detail::chain_down(rep.psi_tilde) &&
                    detail::chain_down(rep.alpha_tilde) && detail::chain_up(rep.beta_tilde);

  rep.predicted_SA.assign(n - rep.g, canonical_fraction(R::one(), s.alpha));
  for (std::size_t i = rep.g; i > 0; --i)
    rep.predicted_SA.push_back(canonical_fraction(rep.psi_tilde[i - 1], rep.delta[i - 1] * rep.chi[i - 1]));
  rep.predicted_SP.assign(n, canonical_fraction(R::one(), bg));
  for (std::size_t i = 0; i < r; ++i)
    rep.predicted_SP.push_back(canonical_fraction(rep.eps_tilde[i], rep.nu[i] * rep.chi[i]));

  rep.computed_SA = smith_mcmillan(s.A).fractions();
  const SMDecomp<R> sm_P = smith_mcmillan(s.P);
  rep.computed_SP = sm_P.fractions();
  rep.leading_block = detail::has_leading_block(rep.computed_SP, n, bg);
  rep.lcd_P = associates(sm_P.lcd, bg);
  rep.match_A = associates(rep.predicted_SA, rep.computed_SA);
  rep.match_P = associates(rep.predicted_SP, rep.computed_SP);
  return rep;
}

template <EuclideanRing R>
struct FofConverseReport {
  R beta_gamma;
  std::vector<R> mu, sigma;
  std::vector<R> alpha_tilde, beta_tilde, delta_tilde, nu_tilde;  // alpha~_{n-i+1}, beta~_{n-i+1}, indexed by i
  std::vector<Frac<R>> predicted_SG;
  bool chains_hold = false;  // predicted SM(G) is a Smith-McMillan chain
  std::optional<std::vector<Frac<R>>> computed_SG;
  std::optional<bool> verified;
};

/// Smith-McMillan form of G predicted from those of A (n fractions) and P
/// (n + r nonzero fractions, leading block (1/(beta gamma)) I_n).
template <EuclideanRing R>
FofConverseReport<R> fof_converse(const std::vector<Frac<R>>& sm_A, const std::vector<Frac<R>>& sm_P, std::size_t n,
                                  std::size_t r) {
  if (sm_A.size() != n) throw ShapeError("SM(A) must list n fractions");
  if (sm_P.size() != n + r) throw ShapeError("SM(P) must list n + r fractions");
  for (const auto& f : sm_A)
    if (f.is_zero()) throw HypothesisError("SM(A) has a zero entry");
  for (const auto& f : sm_P)
    if (f.is_zero()) throw HypothesisError("SM(P) has a zero entry");
  FofConverseReport<R> rep;
  rep.beta_gamma = n > 0 ? canonical(sm_P[0].den()) : R::one();
  if (n > 0 && !is_unit(sm_P[0].num())) throw HypothesisError("SM(P) does not start with 1/(beta gamma)");
  if (!detail::has_leading_block(sm_P, n, rep.beta_gamma))
    throw HypothesisError("SM(P) lacks the leading block (1/(beta gamma)) I_n");

  // past the end of SM(A): alpha_j = alpha_1 (the lcd of A) and beta_j = 1
  const R alpha = n > 0 ? canonical(sm_A[0].den()) : R::one();
  std::vector<R> num, den;
  for (std::size_t i = 1; i <= r; ++i) {
    const R b = n >= i ? canonical(sm_A[n - i].num()) : R::one();
    const R a = n >= i ? canonical(sm_A[n - i].den()) : alpha;
    const R v = canonical(sm_P[n + i - 1].num());
    const R d = canonical(sm_P[n + i - 1].den());
    if (n > 0 && !divides(d, rep.beta_gamma))
      throw HypothesisError("denominator " + std::to_string(i) + " of SM(P) does not divide beta gamma");
    const R mu = gcd(a, d);
    const R sigma = gcd(b, v);
    rep.mu.push_back(mu);
    rep.sigma.push_back(sigma);
    rep.alpha_tilde.push_back(divide_exact(a, mu));
    rep.beta_tilde.push_back(divide_exact(b, sigma));
    rep.delta_tilde.push_back(divide_exact(d, mu));
    rep.nu_tilde.push_back(divide_exact(v, sigma));
    num.push_back(canonical(rep.alpha_tilde.back() * rep.nu_tilde.back()));
    den.push_back(canonical(rep.beta_tilde.back() * rep.delta_tilde.back()));
    rep.predicted_SG.push_back(Frac<R>::reduce(num.back(), den.back()));
  }
  rep.chains_hold = detail::chain_up(num) && detail::chain_down(den);
  for (std::size_t i = 0; i < r && rep.chains_hold; ++i) rep.chains_hold = is_unit(gcd(num[i], den[i]));
  return rep;
}

template <EuclideanRing R>
FofConverseReport<R> fof_converse(const SMDecomp<R>& sm_A, const SMDecomp<R>& sm_P, std::size_t n, std::size_t r) {
  return fof_converse(sm_A.fractions(), sm_P.fractions(), n, r);
}

/// Converse run on a full system, with the prediction verified against
/// the Smith-McMillan form of its transfer function.
template <EuclideanRing R>
FofConverseReport<R> fof_converse(const FofSystem<R>& s) {
  if (!s.coprime()) throw HypothesisError("coprimeness hypotheses fail");
  const SMDecomp<R> sm_A = smith_mcmillan(s.A);
  const SMDecomp<R> sm_P = smith_mcmillan(s.P);
  if (sm_P.rank < s.n()) throw HypothesisError("rank P is below n");
  auto rep = fof_converse(sm_A, sm_P, s.n(), sm_P.rank - s.n());
  rep.computed_SG = smith_mcmillan(s.transfer()).fractions();
  rep.verified = associates(rep.predicted_SG, *rep.computed_SG);
  return rep;
}

/// p(z) as an element of the fraction field of the proper rational functions.
inline Frac<ProperRat> to_proper_fraction(const Poly& p) {
  if (p.is_zero()) return Frac<ProperRat>();
  const unsigned k = static_cast<unsigned>(p.degree());
  return Frac<ProperRat>::reduce(ProperRat::make(p, Poly::monomial(mpq_class(1), k)), ProperRat::inv_z_power(k));
}

inline MatF<ProperRat> to_proper_fractions(const Matrix<Poly>& t) {
  MatF<ProperRat> out(t.rows(), t.cols());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) out(i, j) = to_proper_fraction(t(i, j));
  return out;
}

struct InfinityStructure {
  int degree = 0;                  // d_T
  std::vector<unsigned> rev_mults;  // e_i: multiplicity of z in the invariant factors of rev T
  std::vector<int> orders;          // e_i - d_T
  std::vector<int> orders_rpr;      // from the Smith-McMillan form over Rpr
  bool agree = false;
};

/// z^d T(1/z) with d the largest entry degree.
inline Matrix<Poly> reversal(const Matrix<Poly>& t, int d) {
  Matrix<Poly> out(t.rows(), t.cols());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) out(i, j) = t(i, j).reversed(d);
  return out;
}

inline int matrix_degree(const Matrix<Poly>& t) {
  int d = neg_inf_degree;
  for (const Poly& x : t.entries()) d = std::max(d, x.degree());
  return d;
}

/// Invariant orders at infinity of a nonzero polynomial matrix, computed
/// through the reversal and cross-checked over Rpr.
inline InfinityStructure infinity_structure(const Matrix<Poly>& t) {
  InfinityStructure out;
  out.degree = matrix_degree(t);
  if (out.degree == neg_inf_degree) throw HypothesisError("zero matrix has no structure at infinity");
  const SmithDecomp<Poly> sd = smith(reversal(t, out.degree));
  for (std::size_t i = 0; i < sd.rank; ++i) {
    const unsigned e = sd.inv_factors[i].low_order();
    out.rev_mults.push_back(e);
    out.orders.push_back(static_cast<int>(e) - out.degree);
  }
  const SMDecomp<ProperRat> sm = smith_mcmillan(to_proper_fractions(t));
  for (std::size_t i = 0; i < sm.rank; ++i) out.orders_rpr.push_back(sm.eps[i].valuation() - sm.psi[i].valuation());
  out.agree = out.orders == out.orders_rpr;
  return out;
}

}  // namespace edd
