#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tracelab/error.hpp"

namespace tracelab {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

/// Graded order, ties broken lexicographically (x₁ > x₂ > …).
inline bool graded_less(const Exponents& a, const Exponents& b) {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

/// Integer-coefficient polynomial in a fixed number of variables.
class Polynomial {
 public:
  using Terms = std::map<Exponents, mpz_class>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const mpz_class& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t index) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e.at(index) = 1;
    p.terms_[e] = 1;
    return p;
  }

  std::size_t num_variables() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  mpz_class constant_term() const {
    auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? mpz_class(0) : it->second;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  unsigned low_degree() const {
    unsigned d = ~0u;
    for (const auto& [e, c] : terms_) d = std::min(d, total_degree(e));
    return terms_.empty() ? 0 : d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const { return Polynomial(nvars_) - *this; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  Polynomial pow(unsigned n) const {
    Polynomial out = constant(nvars_, 1);
    for (unsigned i = 0; i < n; ++i) out = out * *this;
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest graded term first.
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return graded_less(b->first, a->first); });
    for (const auto* t : order) {
      const auto& [e, c] = *t;
      mpz_class mag = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += mag.get_str();
      } else if (mag == 1) {
        out += mono;
      } else {
        out += mag.get_str() + "*" + mono;
      }
    }
    return out;
  }

 private:
  void add_term(const Exponents& e, const mpz_class& c) {
    auto [it, inserted] = terms_.try_emplace(e, 0);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  std::size_t nvars_;
  Terms terms_;
};

namespace detail {

/// Recursive-descent parser for
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := ('+'|'-') factor | atom ('^' int)?
///   atom   := int | var | '(' expr ')'
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::span<const std::string> vars, std::size_t line,
                   std::size_t column_offset)
      : text_(text), vars_(vars), line_(line), col0_(column_offset) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  static constexpr unsigned kMaxExponent = 256;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError,
                what + " at line " + std::to_string(line_) + ", column " +
                    std::to_string(col0_ + pos_ + 1),
                line_, col0_ + pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned long n = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (n > kMaxExponent) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(n));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(vars_.size(),
                                  mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return Polynomial::variable(vars_.size(), i);
      }
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` over the given variable names. `line`/`column_offset` only
/// affect error positions.
inline Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables,
                                   std::size_t line = 1, std::size_t column_offset = 0) {
  return detail::PolynomialParser(text, variables, line, column_offset).parse();
}

}  // namespace tracelab
