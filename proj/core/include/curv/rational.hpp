#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "curv/errors.hpp"

namespace curv {

// Exact rational number, always in canonical form: reduced, denominator > 0.
// All curvature, mass and cost values in this library are carried exactly;
// there is no floating point anywhere in the core, so sign decisions at
// exactly zero (e.g. kappa == 0 on the 4-path) are reliable.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) {
    if (den == 0) throw InputError("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "num/den" or a bare integer, with optional signs.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  // "3/2", "-1/14", integers without the "/1".
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class v_;
};

inline std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (!is_integer()) {
    s += '/';
    s += v_.get_den().get_str();
  }
  return s;
}

inline Rational Rational::parse(std::string_view text) {
  const auto bad = [&] { throw InputError("Rational: cannot parse '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  std::string num_part, den_part = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = std::string(text.substr(0, slash));
    den_part = std::string(text.substr(slash + 1));
    if (num_part.empty() || den_part.empty()) bad();
  } else {
    num_part = std::string(text);
  }
  mpz_class num, den;
  if (num.set_str(num_part, 10) != 0 || den.set_str(den_part, 10) != 0) bad();
  if (den == 0) throw InputError("Rational: zero denominator in '" + std::string(text) + "'");
  mpq_class q(num);
  q /= mpq_class(den);
  return Rational(std::move(q));
}

}  // namespace curv
