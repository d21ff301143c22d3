#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "edd/edd.hpp"
#include "edd/json_io.hpp"

namespace edd::cli {

struct Options {
  std::string command;
  std::vector<std::string> inputs;  // file paths, "-" for standard input
  std::optional<std::size_t> n;
  std::string side = "right";
  std::string order = "ef";
  std::optional<std::string> prime;
  std::optional<std::string> split;
  bool no_transforms = false;
};

struct CommandInfo {
  std::string name;
  std::string help;
  std::size_t inputs = 1;
  bool needs_n = false;
};

inline const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> table{
      {"smith", "Smith form with unimodular transforms", 1, false},
      {"smith-mcmillan", "Smith-McMillan form of a fraction matrix", 1, false},
      {"detdiv", "determinantal divisors (minors up to order 6)", 1, false},
      {"coprime", "coprimeness certificate for a pair of matrices", 2, false},
      {"complete-i0", "unimodular U with [A B] U = [I 0]", 2, false},
      {"transfer", "transfer function D - C A^-1 B of a system matrix", 1, true},
      {"rosenbrock", "Rosenbrock predictions against direct Smith forms", 1, true},
      {"reduce", "reduction to an irreducible system matrix", 1, true},
      {"diagnose", "divisibility diagnostics of a reducible system", 1, true},
      {"local", "partial multiplicities at a prime", 1, true},
      {"realize", "minimal realization of a fraction matrix", 1, false},
      {"realize-dim", "least realization dimension", 1, false},
      {"fof-assemble", "system matrix over the fraction field", 1, true},
      {"fof-forward", "Smith-McMillan forms of A and P predicted from G", 1, true},
      {"fof-converse", "Smith-McMillan form of G predicted from A and P", 1, true},
      {"infinity", "invariant orders at infinity of a polynomial matrix", 1, false},
      {"schur-smith", "Smith form of P through the Schur complement", 1, true},
  };
  return table;
}

namespace detail {

/// Inputs already read as JSON.
struct Context {
  const Options& opt;
  std::vector<MatrixDoc> docs;
  std::ostream& err;
  json out;
};

template <EuclideanRing R>
MatF<R> load(const Context& c, std::size_t k) {
  return matrix_from_doc<R>(c.docs.at(k));
}

template <EuclideanRing R>
Matrix<R> load_ring(const Context& c, std::size_t k) {
  const MatF<R> m = load<R>(c, k);
  if (!is_integral(m)) throw HypothesisError(c.opt.command + " needs entries in " + R::name + ", not fractions");
  return to_ring(m);
}

inline std::size_t need_n(const Context& c) {
  if (!c.opt.n) throw InputError(c.opt.command + " needs --n");
  return *c.opt.n;
}

template <EuclideanRing R>
SystemMatrix<R> load_system(const Context& c) {
  return SystemMatrix<R>::split(load_ring<R>(c, 0), need_n(c));
}

template <EuclideanRing R>
R parse_element(const std::string& text, const std::string& what) {
  const Frac<R> f = parse_value<R>(text);
  if (!f.is_integral()) throw HypothesisError(what + " must lie in " + R::name);
  return f.num();
}

inline void add_transforms(Context& c, const auto& d) {
  if (c.opt.no_transforms) return;
  c.out["U"] = matrix_json(d.U);
  c.out["V"] = matrix_json(d.V);
  c.out["U_inv"] = matrix_json(d.U_inv);
  c.out["V_inv"] = matrix_json(d.V_inv);
}

template <EuclideanRing R>
json item_json(const DiagnosticItem<R>& it) {
  return json{{"applicable", it.applicable}, {"holds", it.holds}, {"evidence", elements_json(it.evidence)}};
}

template <EuclideanRing R>
json sm_json(const SMDecomp<R>& sm) {
  return json{{"eps", elements_json(sm.eps)},
              {"psi", elements_json(sm.psi)},
              {"fractions", elements_json(sm.fractions())},
              {"rank", sm.rank}};
}

template <EuclideanRing R>
FofSystem<R> load_fof(const Context& c) {
  const MatF<R> P = load<R>(c, 0);
  const std::size_t n = need_n(c);
  if (n > P.rows() || n > P.cols()) throw ShapeError("state dimension exceeds matrix size");
  const std::size_t p = P.rows() - n, m = P.cols() - n;
  return fof_assemble(P.block(0, 0, n, n), P.block(0, n, n, m), P.block(n, 0, p, n), P.block(n, n, p, m));
}

template <EuclideanRing R>
void cmd_smith(Context& c) {
  const auto d = smith(load_ring<R>(c, 0));
  c.out["rank"] = d.rank;
  c.out["inv_factors"] = elements_json(d.inv_factors);
  c.out["S"] = matrix_json(d.S);
  add_transforms(c, d);
}

template <EuclideanRing R>
void cmd_smith_mcmillan(Context& c) {
  const MatF<R> g = load<R>(c, 0);
  const auto d = smith_mcmillan(g);
  c.out.update(sm_json(d));
  c.out["lcd"] = format_value(d.lcd);
  c.out["form"] = matrix_json(d.form(g.rows(), g.cols()));
  add_transforms(c, d);
}

template <EuclideanRing R>
void cmd_detdiv(Context& c) {
  c.out["det_divisors"] = elements_json(determinantal_divisors(load_ring<R>(c, 0)));
}

template <EuclideanRing R>
void cmd_coprime(Context& c) {
  if (c.opt.side != "left" && c.opt.side != "right") throw InputError("--side must be left or right");
  const Side side = c.opt.side == "left" ? Side::left : Side::right;
  const auto rep = coprime_check(load_ring<R>(c, 0), load_ring<R>(c, 1), side);
  c.out["side"] = c.opt.side;
  c.out["coprime"] = rep.coprime;
  if (rep.witness) {
    c.out["X"] = matrix_json(rep.witness->first);
    c.out["Y"] = matrix_json(rep.witness->second);
  }
  if (rep.completion && !c.opt.no_transforms) c.out["completion"] = matrix_json(*rep.completion);
  if (rep.common_divisor) c.out["common_divisor"] = matrix_json(*rep.common_divisor);
  if (rep.cofactors) {
    c.out["cofactor_1"] = matrix_json(rep.cofactors->first);
    c.out["cofactor_2"] = matrix_json(rep.cofactors->second);
  }
}

template <EuclideanRing R>
void cmd_complete_i0(Context& c) {
  c.out["U"] = matrix_json(completion_I0(load_ring<R>(c, 0), load_ring<R>(c, 1)));
}

template <EuclideanRing R>
void cmd_transfer(Context& c) {
  const auto res = schur_complement(load_system<R>(c));
  c.out["G"] = matrix_json(res.G);
  c.out["rank_G"] = res.rank_G;
  c.out["rank_P"] = res.rank_P;
}

template <EuclideanRing R>
void cmd_rosenbrock(Context& c) {
  const auto rep = verify_rosenbrock(load_system<R>(c));
  c.out["sm_G"] = sm_json(rep.sm_G);
  c.out["g"] = rep.g;
  c.out["predicted_SP"] = elements_json(rep.predicted_SP);
  c.out["predicted_SA"] = elements_json(rep.predicted_SA);
  c.out["computed_SP"] = elements_json(rep.computed_SP);
  c.out["computed_SA"] = elements_json(rep.computed_SA);
  c.out["left_coprime"] = rep.coprimeness.left.coprime;
  c.out["right_coprime"] = rep.coprimeness.right.coprime;
  c.out["irreducible"] = rep.irreducible;
  c.out["match"] = rep.match;
}

template <EuclideanRing R>
void cmd_reduce(Context& c) {
  if (c.opt.order != "ef" && c.opt.order != "fe") throw InputError("--order must be ef or fe");
  std::optional<R> split;
  if (c.opt.split) split = parse_element<R>(*c.opt.split, "--split");
  const auto res = reduce_system(load_system<R>(c), c.opt.order == "ef" ? ReductionOrder::ef : ReductionOrder::fe, split);
  c.out["E"] = matrix_json(res.E);
  c.out["F"] = matrix_json(res.F);
  c.out["det_E"] = format_value(canonical(det(res.E)));
  c.out["det_F"] = format_value(canonical(det(res.F)));
  c.out["P0"] = matrix_json(res.P0.assemble());
  c.out["n"] = res.P0.n();
  c.out["irreducible"] = is_irreducible(res.P0).irreducible;
}

template <EuclideanRing R>
void cmd_diagnose(Context& c) {
  const auto rep = diagnose_reducible(load_system<R>(c));
  c.out["sm_G"] = sm_json(rep.sm_G);
  c.out["g"] = rep.g;
  c.out["psi_tilde"] = elements_json(rep.psi_tilde);
  c.out["eps_tilde"] = elements_json(rep.eps_tilde);
  c.out["psi"] = elements_json(rep.psi);
  c.out["items"] = json{{"i", item_json(rep.item_i)},   {"ii", item_json(rep.item_ii)},
                        {"iii", item_json(rep.item_iii)}, {"iv", item_json(rep.item_iv)},
                        {"v", item_json(rep.item_v)},   {"full_row", item_json(rep.full_row)},
                        {"full_col", item_json(rep.full_col)}};
}

template <EuclideanRing R>
void cmd_local(Context& c) {
  if (!c.opt.prime) throw InputError("local needs --prime");
  const R prime = parse_element<R>(*c.opt.prime, "--prime");
  const auto rep = local_zero_structure(load_system<R>(c), prime);
  c.out["prime"] = format_value(rep.prime);
  c.out["system"] = rep.system;
  c.out["numerator"] = rep.numerator;
  c.out["cofactor"] = format_value(rep.cofactor);
  c.out["equal"] = rep.equal;
}

template <EuclideanRing R>
void cmd_realize(Context& c) {
  const auto real = minimal_realization(load<R>(c, 0));
  c.out["n"] = real.n;
  c.out["P"] = matrix_json(real.system.assemble());
  c.out["irreducible"] = real.coprimeness.irreducible;
}

template <EuclideanRing R>
void cmd_realize_dim(Context& c) {
  c.out["g"] = realization_dimension(load<R>(c, 0));
}

template <EuclideanRing R>
void cmd_fof_assemble(Context& c) {
  const auto s = load_fof<R>(c);
  c.out["alpha"] = format_value(s.alpha);
  c.out["beta"] = format_value(s.beta);
  c.out["gamma"] = format_value(s.gamma);
  c.out["P"] = matrix_json(s.P);
  c.out["left_coprime"] = s.left.coprime;
  c.out["right_coprime"] = s.right.coprime;
}

template <EuclideanRing R>
void cmd_fof_forward(Context& c) {
  const auto rep = fof_forward(load_fof<R>(c));
  c.out["sm_G"] = sm_json(rep.sm_G);
  c.out["g"] = rep.g;
  c.out["delta"] = elements_json(rep.delta);
  c.out["nu"] = elements_json(rep.nu);
  c.out["chi"] = elements_json(rep.chi);
  c.out["alpha_hat"] = elements_json(rep.alpha_hat);
  c.out["beta_hat"] = elements_json(rep.beta_hat);
  c.out["alpha_tilde"] = elements_json(rep.alpha_tilde);
  c.out["beta_tilde"] = elements_json(rep.beta_tilde);
  c.out["eps_tilde"] = elements_json(rep.eps_tilde);
  c.out["psi_tilde"] = elements_json(rep.psi_tilde);
  c.out["predicted_SA"] = elements_json(rep.predicted_SA);
  c.out["predicted_SP"] = elements_json(rep.predicted_SP);
  c.out["computed_SA"] = elements_json(rep.computed_SA);
  c.out["computed_SP"] = elements_json(rep.computed_SP);
  c.out["chains_hold"] = rep.chains_hold;
  c.out["leading_block"] = rep.leading_block;
  c.out["lcd_P"] = rep.lcd_P;
  c.out["match"] = rep.match();
}

template <EuclideanRing R>
void cmd_fof_converse(Context& c) {
  const auto rep = fof_converse(load_fof<R>(c));
  c.out["beta_gamma"] = format_value(rep.beta_gamma);
  c.out["mu"] = elements_json(rep.mu);
  c.out["sigma"] = elements_json(rep.sigma);
  c.out["alpha_tilde"] = elements_json(rep.alpha_tilde);
  c.out["beta_tilde"] = elements_json(rep.beta_tilde);
  c.out["delta_tilde"] = elements_json(rep.delta_tilde);
  c.out["nu_tilde"] = elements_json(rep.nu_tilde);
  c.out["predicted_SG"] = elements_json(rep.predicted_SG);
  c.out["computed_SG"] = elements_json(*rep.computed_SG);
  c.out["chains_hold"] = rep.chains_hold;
  c.out["verified"] = *rep.verified;
}

template <EuclideanRing R>
void cmd_infinity(Context& c) {
  if constexpr (!std::is_same_v<R, Poly>) {
    throw HypothesisError("infinity needs a polynomial matrix over Qz");
  } else {
    const auto s = infinity_structure(load_ring<Poly>(c, 0));
    c.out["degree"] = s.degree;
    c.out["rev_mults"] = s.rev_mults;
    c.out["orders"] = s.orders;
    c.out["orders_rpr"] = s.orders_rpr;
    c.out["agree"] = s.agree;
  }
}

template <EuclideanRing R>
void cmd_schur_smith(Context& c) {
  const Matrix<R> P = load_ring<R>(c, 0);
  const auto s = SystemMatrix<R>::split(P, need_n(c));
  std::vector<R> inv;
  if (is_irreducible(s).irreducible) {
    inv.assign(s.n(), R::one());
    const auto sm = smith_mcmillan(transfer(s));
    inv.insert(inv.end(), sm.eps.begin(), sm.eps.end());
    c.out["method"] = "schur";
  } else {
    const std::string w = "system matrix is not irreducible; computed the Smith form directly";
    c.err << "warning: " << w << "\n";
    c.out["warning"] = w;
    inv = smith(P).inv_factors;
    c.out["method"] = "direct";
  }
  c.out["rank"] = inv.size();
  c.out["inv_factors"] = elements_json(inv);
}

template <EuclideanRing R>
void dispatch(Context& c) {
  using Fn = void (*)(Context&);
  static const std::map<std::string, Fn> fns{
      {"smith", cmd_smith<R>},
      {"smith-mcmillan", cmd_smith_mcmillan<R>},
      {"detdiv", cmd_detdiv<R>},
      {"coprime", cmd_coprime<R>},
      {"complete-i0", cmd_complete_i0<R>},
      {"transfer", cmd_transfer<R>},
      {"rosenbrock", cmd_rosenbrock<R>},
      {"reduce", cmd_reduce<R>},
      {"diagnose", cmd_diagnose<R>},
      {"local", cmd_local<R>},
      {"realize", cmd_realize<R>},
      {"realize-dim", cmd_realize_dim<R>},
      {"fof-assemble", cmd_fof_assemble<R>},
      {"fof-forward", cmd_fof_forward<R>},
      {"fof-converse", cmd_fof_converse<R>},
      {"infinity", cmd_infinity<R>},
      {"schur-smith", cmd_schur_smith<R>},
  };
  const auto it = fns.find(c.opt.command);
  if (it == fns.end()) throw InputError("unknown command " + c.opt.command);
  it->second(c);
}

}  // namespace detail

/// Runs a command on already-loaded documents; throws on failure.
inline json execute(const Options& opt, const std::vector<json>& inputs, std::ostream& err) {
  const auto info = std::find_if(command_table().begin(), command_table().end(),
                                 [&](const CommandInfo& ci) { return ci.name == opt.command; });
  if (info == command_table().end()) throw InputError("unknown command " + opt.command);
  if (inputs.size() != info->inputs)
    throw InputError(opt.command + " expects " + std::to_string(info->inputs) + " input document(s)");
  detail::Context c{opt, {}, err, json::object()};
  for (const json& j : inputs) c.docs.push_back(doc_from_json(j));
  for (const auto& d : c.docs)
    if (d.ring != c.docs.front().ring) throw InputError("input documents use different rings");
  const std::string ring = c.docs.front().ring;
  c.out["command"] = opt.command;
  c.out["ring"] = ring;
  switch (ring_tag(ring)) {
    case RingTag::Z: detail::dispatch<Integer>(c); break;
    case RingTag::Qz: detail::dispatch<Poly>(c); break;
    case RingTag::Rpr: detail::dispatch<ProperRat>(c); break;
  }
  return c.out;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// Reads the inputs, runs the command and writes JSON to out. Exit code 0 on
/// success, 1 on domain errors, 2 on I/O or parse errors.
inline int run(const Options& opt, std::ostream& out, std::ostream& err) {
  try {
    std::vector<json> inputs;
    for (const auto& path : opt.inputs) inputs.push_back(read_json(path));
    out << dump(execute(opt, inputs, err));
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

// ---------------------------------------------------------------------------
// Round-trip check for emitted documents

/// Reparses every string that is a valid entry expression in the ring and
/// reformats it; returns the offending strings.
inline std::vector<std::string> unstable_entries(const json& j, RingTag ring) {
  std::vector<std::string> bad;
  std::function<void(const json&)> walk = [&](const json& x) {
    if (x.is_string()) {
      const std::string s = x.get<std::string>();
      try {
        std::string again;
        switch (ring) {
          case RingTag::Z: again = format_value(parse_value<Integer>(s)); break;
          case RingTag::Qz: again = format_value(parse_value<Poly>(s)); break;
          case RingTag::Rpr: again = format_value(parse_value<ProperRat>(s)); break;
        }
        if (again != s) bad.push_back(s);
      } catch (const ParseError&) {
        // not an entry expression
      } catch (const RingError&) {
      }
    } else if (x.is_structured()) {
      for (const auto& y : x) walk(y);
    }
  };
  walk(j);
  return bad;
}

}  // namespace edd::cli
