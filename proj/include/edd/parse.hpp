#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "edd/error.hpp"
#include "edd/fof.hpp"
#include "edd/fraction.hpp"
#include "edd/integer.hpp"
#include "edd/poly.hpp"
#include "edd/proper_rational.hpp"

namespace edd {

enum class RingTag { Z, Qz, Rpr };

inline RingTag ring_tag(std::string_view name) {
  if (name == "Z") return RingTag::Z;
  if (name == "Qz") return RingTag::Qz;
  if (name == "Rpr") return RingTag::Rpr;
  throw InputError("unknown ring \"" + std::string(name) + "\"");
}

inline const char* ring_name(RingTag t) {
  switch (t) {
    case RingTag::Z: return "Z";
    case RingTag::Qz: return "Qz";
    case RingTag::Rpr: return "Rpr";
  }
  return "";
}

template <class R>
struct ring_traits;
template <>
struct ring_traits<Integer> {
  static constexpr RingTag tag = RingTag::Z;
};
template <>
struct ring_traits<Poly> {
  static constexpr RingTag tag = RingTag::Qz;
};
template <>
struct ring_traits<ProperRat> {
  static constexpr RingTag tag = RingTag::Rpr;
};

/// Rational function in Q(z) together with the offset of the first z, if any.
struct ParsedExpr {
  Frac<Poly> value;
  std::optional<std::size_t> first_z;
};

namespace detail {

/// Grammar, loosest first:
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor | factor)*     juxtaposition multiplies
///   factor  := ('+'|'-') factor | primary ['^' digits]
///   primary := digits | 'z' | '(' expr ')'
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  ParsedExpr run() {
    skip();
    if (at_end()) throw ParseError("empty expression", pos_);
    Frac<Poly> v = expr();
    skip();
    if (!at_end()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return {std::move(v), first_z_};
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() {
    skip();
    return at_end() ? '\0' : s_[pos_];
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Frac<Poly> expr() {
    Frac<Poly> acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      Frac<Poly> rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  static bool starts_primary(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == 'z' || c == '('; }

  Frac<Poly> term() {
    Frac<Poly> acc = factor();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        const std::size_t at = pos_++;
        const Frac<Poly> d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else if (starts_primary(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Frac<Poly> factor() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    Frac<Poly> base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      const mpz_class e = digits();
      if (e > 4096) throw ParseError("exponent too large", at);
      Frac<Poly> out = Frac<Poly>::one();
      for (unsigned long k = e.get_ui(); k > 0; --k) out = out * base;
      return out;
    }
    return base;
  }

  Frac<Poly> primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Frac<Poly> v = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (c == 'z') {
      if (!first_z_) first_z_ = pos_;
      ++pos_;
      return Frac<Poly>(Poly::z());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Frac<Poly>(Poly(mpq_class(digits())));
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::optional<std::size_t> first_z_;
};

}  // namespace detail

inline ParsedExpr parse_expr(std::string_view text) { return detail::ExprParser(text).run(); }

/// Value of an entry expression in the fraction field of R.
template <EuclideanRing R>
Frac<R> parse_value(std::string_view text) {
  ParsedExpr e = parse_expr(text);
  if constexpr (std::is_same_v<R, Poly>) {
    return e.value;
  } else if constexpr (std::is_same_v<R, ProperRat>) {
    return to_proper_fraction(e.value.num()) / to_proper_fraction(e.value.den());
  } else {
    if (e.first_z)
      throw ParseError("variable z is not allowed in ring Z", *e.first_z);
    const mpq_class q = e.value.num().coeff(0) / e.value.den().coeff(0);
    return Frac<Integer>::reduce(Integer(q.get_num()), Integer(q.get_den()));
  }
}

// ---------------------------------------------------------------------------
// Formatting; every output reparses to an equal value.

namespace detail {

inline bool is_atom(const std::string& s) {
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != 'z' && c != '^') return false;
  return !s.empty();
}

inline std::string format_ratio(const std::string& num, const std::string& den) {
  if (den == "1") return num;
  const std::string n = num.find(' ') == std::string::npos ? num : "(" + num + ")";
  const std::string d = is_atom(den) ? den : "(" + den + ")";
  return n + "/" + d;
}

}  // namespace detail

inline std::string format_value(const Integer& a) { return to_string(a); }
inline std::string format_value(const Poly& a) { return to_string(a); }
inline std::string format_value(const ProperRat& a) { return detail::format_ratio(to_string(a.num()), to_string(a.den())); }

inline std::string format_value(const Frac<Integer>& a) {
  return detail::format_ratio(to_string(a.num()), to_string(a.den()));
}
inline std::string format_value(const Frac<Poly>& a) {
  return detail::format_ratio(to_string(a.num()), to_string(a.den()));
}
/// Written as a quotient of polynomials.
inline std::string format_value(const Frac<ProperRat>& a) {
  const Frac<Poly> f =
      Frac<Poly>::reduce(a.num().num() * a.den().den(), a.num().den() * a.den().num());
  return format_value(f);
}

}  // namespace edd
