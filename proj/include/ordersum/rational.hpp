#pragma once

// Exact rational arithmetic on top of GMP. Values are always reduced with a
// positive denominator, so operator== is canonical equality. No floating
// point is used anywhere except the display-only decimal approximation.

#include <gmpxx.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace ordersum {

using Int = mpz_class;

inline Int int_pow(unsigned long base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long value) : q_(value) {}
  Rational(const Int& value) : q_(value) {}
  Rational(const Int& num, const Int& den) : q_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }

  // Machine form, always "num/den" ("2/1", "10/3").
  std::string fraction_str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  // Natural form, "/1" omitted ("2", "10/3").
  std::string str() const { return q_.get_str(); }

  // Display-only approximation, 6 significant digits.
  std::string approx_str() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", q_.get_d());
    return buf;
  }

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_), Canonical{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ - b.q_), Canonical{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_), Canonical{});
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (sgn(b.q_) == 0) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.q_ / b.q_), Canonical{});
  }
  friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.q_)), Canonical{}); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  struct Canonical {};  // tag: the argument is already canonical
  Rational(mpq_class q, Canonical) : q_(std::move(q)) {}

  mpq_class q_;  // invariant: canonical (reduced, positive denominator)
};

}  // namespace ordersum
