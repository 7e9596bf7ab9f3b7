#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "fano/error.hpp"
#include "fano/textexpr.hpp"

namespace fano {

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}
  Rational(int v) : v_(v) {}
  Rational(const mpz_class& v) : v_(v) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inv() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1 / v_));
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string to_string() const { return v_.get_str(); }

  // Accepts "n", "-n", "p/q".
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(mpz_class(s));
      return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw ParseError("not a rational: '" + s + "'");
    }
  }

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

inline Rational pow(Rational base, unsigned e) {
  Rational out(1);
  for (; e; e >>= 1, base *= base)
    if (e & 1) out *= base;
  return out;
}

// Element a + b*w of Q(w), w^2 + w + 1 = 0.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(int a) : a_(a) {}
  Cyclotomic(long a) : a_(a) {}
  Cyclotomic(Rational a) : a_(std::move(a)) {}
  Cyclotomic(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Cyclotomic omega() { return {0, 1}; }
  static Cyclotomic omega2() { return {-1, -1}; }

  const Rational& re1() const { return a_; }
  const Rational& rew() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  Cyclotomic operator-() const { return {-a_, -b_}; }
  Cyclotomic& operator+=(const Cyclotomic& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Cyclotomic& operator-=(const Cyclotomic& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this * o.inv(); }

  friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic& y) { return x += y; }
  friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic& y) { return x -= y; }
  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
    // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, w^2 = -1 - w
    Rational bd = x.b_ * y.b_;
    return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd};
  }
  friend Cyclotomic operator/(const Cyclotomic& x, const Cyclotomic& y) { return x * y.inv(); }

  // Galois conjugation w -> w^2.
  Cyclotomic conj() const { return {a_ - b_, -b_}; }
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  Cyclotomic inv() const {
    if (is_zero()) throw DivisionByZero();
    Rational n = norm();
    Cyclotomic c = conj();
    return {c.a_ / n, c.b_ / n};
  }

  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  // Total order on the coordinates; only for use as a container key.
  friend bool operator<(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
  }

  // Printed forms: "a", "w", "-w", "b*w", "a+b*w", "a-w".
  std::string to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string wpart;
    if (b_ == Rational(1))
      wpart = "w";
    else if (b_ == Rational(-1))
      wpart = "-w";
    else
      wpart = b_.to_string() + "*w";
    if (a_.is_zero()) return wpart;
    return a_.to_string() + (wpart[0] == '-' ? "" : "+") + wpart;
  }

  // True when the printed form needs parentheses as a factor in a product.
  bool is_compound() const { return !a_.is_zero() && !b_.is_zero(); }

  static Cyclotomic parse(std::string_view text);

 private:
  Rational a_;
  Rational b_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

inline Cyclotomic pow(Cyclotomic base, unsigned e) {
  Cyclotomic out(1);
  for (; e; e >>= 1, base = base * base)
    if (e & 1) out = out * base;
  return out;
}

inline const TextRing<Cyclotomic>& cyclotomic_text_ring() {
  static const TextRing<Cyclotomic> ring{
      [](const mpz_class& n) { return Cyclotomic(Rational(n)); },
      [](std::string_view id) -> Cyclotomic {
        if (id == "w") return Cyclotomic::omega();
        throw ParseError("unknown symbol '" + std::string(id) + "' in scalar");
      },
      [](const Cyclotomic& x, const Cyclotomic& y) { return x / y; },
      Cyclotomic(1)};
  return ring;
}

inline Cyclotomic Cyclotomic::parse(std::string_view text) { return read_expression(text, cyclotomic_text_ring()); }

// Field helpers used by the generic algorithms.
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline std::string to_text(const Rational& x) { return x.to_string(); }
inline std::string to_text(const Cyclotomic& x) { return x.to_string(); }

}  // namespace fano

template <>
struct std::hash<fano::Rational> {
  std::size_t operator()(const fano::Rational& r) const {
    return std::hash<std::string>{}(r.to_string());
  }
};
