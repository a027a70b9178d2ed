#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tracelab/error.hpp"

namespace tracelab {

/// Exact rational number backed by GMP. Always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  static constexpr bool is_finite = false;
  static constexpr unsigned characteristic = 0;
  static std::string name() { return "Q"; }

  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    value_.canonicalize();
  }
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  static Rational from_integer(const mpz_class& n) { return Rational(mpq_class(n)); }

  /// Parses "p" or "p/q".
  static Rational parse(std::string_view text) {
    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0 || v.get_den() == 0) {
      throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
    }
    v.canonicalize();
    return Rational(std::move(v));
  }

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational inverse() const { return Rational(1) / *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return value_.get_str(); }

  /// this -= b * c without a temporary Rational.
  void sub_mul(const Rational& b, const Rational& c) {
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), b.value_.get_mpq_t(), c.value_.get_mpq_t());
    mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
  }

 private:
  mpq_class value_;
};

/// Residue class modulo a small prime.
template <unsigned P>
class Fp {
  static_assert(P == 2 || P == 3 || P == 5, "supported primes are 2, 3, 5");

 public:
  static constexpr bool is_finite = true;
  static constexpr unsigned characteristic = P;
  static std::string name() { return "F" + std::to_string(P); }

  Fp() = default;
  Fp(long n)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<std::uint8_t>(((n % static_cast<long>(P)) + P) % P)) {}

  static Fp from_integer(const mpz_class& n) {
    return Fp(static_cast<long>(mpz_fdiv_ui(n.get_mpz_t(), P)));
  }

  static std::vector<Fp> elements() {
    std::vector<Fp> out;
    for (unsigned i = 0; i < P; ++i) out.emplace_back(static_cast<long>(i));
    return out;
  }

  unsigned value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  Fp& operator+=(Fp o) {
    value_ = static_cast<std::uint8_t>((value_ + o.value_) % P);
    return *this;
  }
  Fp& operator-=(Fp o) {
    value_ = static_cast<std::uint8_t>((value_ + P - o.value_) % P);
    return *this;
  }
  Fp& operator*=(Fp o) {
    value_ = static_cast<std::uint8_t>((value_ * o.value_) % P);
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  Fp operator-() const { return Fp(0) - *this; }

  Fp inverse() const {
    if (is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    Fp r(1);
    for (unsigned i = 0; i + 2 < P; ++i) r *= *this;
    return r;
  }

  friend bool operator==(Fp, Fp) = default;
  friend auto operator<=>(Fp, Fp) = default;

  std::string to_string() const { return std::to_string(value_); }

  void sub_mul(Fp b, Fp c) { *this -= b * c; }

 private:
  std::uint8_t value_ = 0;
};

using F2 = Fp<2>;
using F3 = Fp<3>;
using F5 = Fp<5>;

template <class F>
concept Field = std::regular<F> && std::totally_ordered<F> &&
                requires(F a, const F b, const mpz_class& z) {
                  { b + b } -> std::same_as<F>;
                  { b - b } -> std::same_as<F>;
                  { b * b } -> std::same_as<F>;
                  { b / b } -> std::same_as<F>;
                  { -b } -> std::same_as<F>;
                  { b.is_zero() } -> std::same_as<bool>;
                  { b.inverse() } -> std::same_as<F>;
                  { b.to_string() } -> std::convertible_to<std::string>;
                  { F::from_integer(z) } -> std::same_as<F>;
                  { F::name() } -> std::convertible_to<std::string>;
                  a.sub_mul(b, b);
                  F::is_finite;
                };

template <class F>
concept FiniteField = Field<F> && F::is_finite && requires {
  { F::elements() } -> std::same_as<std::vector<F>>;
};

/// Calls `fn.template operator()<F>()` with F selected by a field tag
/// ("Q", "F2", "F3", "F5").
template <class Fn>
decltype(auto) dispatch_field(std::string_view tag, Fn&& fn) {
  if (tag == "Q") return fn.template operator()<Rational>();
  if (tag == "F2") return fn.template operator()<F2>();
  if (tag == "F3") return fn.template operator()<F3>();
  if (tag == "F5") return fn.template operator()<F5>();
  throw Error(ErrorKind::InvalidArgument,
              "unknown field '" + std::string(tag) + "' (expected Q, F2, F3 or F5)");
}

}  // namespace tracelab
