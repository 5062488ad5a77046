#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <stdexcept>
#include <string>
#include <utility>

#include "arrangeo/rational.hpp"

namespace arrangeo {

// Element of Q or Q(sqrt(d)): a + b*sqrt(d), d squarefree >= 2 when b != 0.
// Rational values carry d == 1, b == 0. All comparisons are exact sign
// determinations; no floating point anywhere in the value path.
class ExactScalar {
 public:
  ExactScalar() : a_(0), b_(0), d_(1) {}
  ExactScalar(Rat a) : a_(std::move(a)), b_(0), d_(1) {}  // NOLINT: implicit by design
  ExactScalar(long v) : a_(v), b_(0), d_(1) {}            // NOLINT
  ExactScalar(int v) : a_(v), b_(0), d_(1) {}             // NOLINT
  ExactScalar(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    normalize();
  }

  const Rat& rat_part() const { return a_; }
  const Rat& quad_coeff() const { return b_; }
  const Int& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  // Exact rational value; throws on irrational inputs.
  const Rat& as_rational() const {
    if (!is_rational()) throw std::logic_error("irrational ExactScalar");
    return a_;
  }

  ExactScalar conjugate() const { return ExactScalar(a_, -b_, d_); }

  int sign() const { return single_sign(a_, b_, d_); }

  friend ExactScalar operator-(const ExactScalar& x) {
    return ExactScalar(-x.a_, -x.b_, x.d_);
  }
  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    Int d = merged_radicand(x, y);
    return ExactScalar(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
    return x + (-y);
  }
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    Int d = merged_radicand(x, y);
    return ExactScalar(x.a_ * y.a_ + x.b_ * y.b_ * Rat(d),
                       x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
    Int d = merged_radicand(x, y);
    Rat n = y.a_ * y.a_ - y.b_ * y.b_ * Rat(d);
    if (n == 0) throw std::domain_error("division by zero ExactScalar");
    // x / y = x * conj(y) / (a^2 - b^2 d)
    ExactScalar num = x * ExactScalar(y.a_, -y.b_, d);
    return ExactScalar(num.a_ / n, num.b_ / n, num.d_);
  }

  bool operator==(const ExactScalar& o) const { return compare(*this, o) == 0; }
  bool operator!=(const ExactScalar& o) const { return compare(*this, o) != 0; }
  bool operator<(const ExactScalar& o) const { return compare(*this, o) < 0; }
  bool operator<=(const ExactScalar& o) const { return compare(*this, o) <= 0; }
  bool operator>(const ExactScalar& o) const { return compare(*this, o) > 0; }
  bool operator>=(const ExactScalar& o) const { return compare(*this, o) >= 0; }

  // Total order on R restricted to quadratic values; -1/0/+1.
  // Cross-field comparisons cost at most two squarings.
  static int compare(const ExactScalar& x, const ExactScalar& y) {
    if (x.d_ == y.d_) return single_sign(x.a_ - y.a_, x.b_ - y.b_, x.d_);
    // A + B sqrt(d1) + C sqrt(d2), distinct radicands, B,C != 0.
    const Rat A = x.a_ - y.a_;
    const Rat& B = x.b_;
    const Rat C = -y.b_;
    if (B == 0) return single_sign(A, C, y.d_);
    if (C == 0) return single_sign(A, B, x.d_);
    int su = single_sign(A, B, x.d_);
    int sw = C.sign();
    if (su == 0) return sw;
    if (sw == 0 || su == sw) return su;
    // Opposite signs: compare squares of u = A+B sqrt(d1) and w = C sqrt(d2).
    Rat head = A * A + B * B * Rat(x.d_) - C * C * Rat(y.d_);
    return su * single_sign(head, 2 * A * B, x.d_);
  }

  std::string str() const {
    if (is_rational()) return rat_str(a_);
    return rat_str(a_) + "+(" + rat_str(b_) + ")*sqrt(" + d_.str() + ")";
  }

  // 100-digit evaluation; used only by test oracles and report rendering.
  boost::multiprecision::cpp_bin_float_100 approx() const {
    using F = boost::multiprecision::cpp_bin_float_100;
    F v = static_cast<F>(a_);
    if (b_ != 0) v += static_cast<F>(b_) * sqrt(static_cast<F>(d_));
    return v;
  }

 private:
  // sign of a + b*sqrt(d), exact.
  static int single_sign(const Rat& a, const Rat& b, const Int& d) {
    if (b == 0) return a.sign();
    if (a == 0) return b.sign();
    if (a.sign() == b.sign()) return a.sign();
    return (a * a - b * b * Rat(d)).sign() * a.sign();
  }

  static Int merged_radicand(const ExactScalar& x, const ExactScalar& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_)
      throw std::logic_error("arithmetic across distinct radicands");
    return x.d_;
  }

  void normalize() {
    if (b_ == 0) { d_ = 1; return; }
    if (d_ <= 0) throw std::invalid_argument("radicand must be positive");
    auto [m, core] = extract_square(d_);
    if (m != 1) { b_ *= Rat(m); d_ = core; }
    if (d_ == 1) { a_ += b_; b_ = 0; }
  }

  // d = m^2 * core with core squarefree.
  static std::pair<Int, Int> extract_square(Int d) {
    Int m = 1;
    for (Int p = 2; p * p <= d; ++p) {
      while (d % (p * p) == 0) { d /= p * p; m *= p; }
    }
    return {m, d};
  }

  Rat a_, b_;
  Int d_;
};

inline int compare(const ExactScalar& x, const ExactScalar& y) {
  return ExactScalar::compare(x, y);
}

// sqrt of a nonnegative rational as an ExactScalar: sqrt(p/q) = sqrt(p*q)/q.
inline ExactScalar sqrt_of_rational(const Rat& r) {
  if (r.sign() < 0) throw std::domain_error("sqrt of negative rational");
  if (r == 0) return ExactScalar(Rat(0));
  Int pq = rat_num(r) * rat_den(r);
  return ExactScalar(Rat(0), Rat(1, rat_den(r)), pq);
}

}  // namespace arrangeo
