#ifndef LINKFOL_EXACTNUM_HPP
#define LINKFOL_EXACTNUM_HPP

#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "linkfol/errors.hpp"

namespace linkfol {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (the backing type maintains that canonical form).
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}                     // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : v_(n) {}                 // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(boost::multiprecision::cpp_rational(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inv() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational pow(long long e) const;

    /// "a" for integers, "a/b" otherwise. Round-trips through parse_rational.
    std::string str() const;

  private:
    boost::multiprecision::cpp_rational v_;
};

/// Splits n as s*m^2 with s squarefree (up to the trial-division bound; the
/// leftover cofactor is additionally tested for being a perfect square).
/// Returns {s, m}; sign of n goes into s.
std::pair<BigInt, BigInt> squarefree_part(const BigInt& n);

/// Exact square root of a nonnegative rational, when it is one.
std::optional<Rational> sqrt_rational(const Rational& r);

/// Exact cube root of a rational, when it is one.
std::optional<Rational> cbrt_rational(const Rational& r);

/// Element a + b*sqrt(d) of a quadratic extension of the rationals.
///
/// d is a squarefree integer, normalized at construction (square factors are
/// absorbed into b); a pure rational is stored with b = 0, d = 0 and is
/// compatible with every field. Mixing two distinct nonzero d is a
/// FieldMismatch. All arithmetic is exact.
class QuadraticNumber {
  public:
    QuadraticNumber() : a_(0), b_(0), d_(0) {}
    QuadraticNumber(long long a) : a_(a), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
    QuadraticNumber(Rational a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
    QuadraticNumber(Rational a, Rational b, BigInt d);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    const BigInt& discriminant() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return b_.is_zero() && a_ == Rational(1); }
    bool is_rational() const { return b_.is_zero(); }
    /// True when the value is a rational number > 0.
    bool is_positive_rational() const { return b_.is_zero() && a_.sign() > 0; }

    QuadraticNumber conj() const { return QuadraticNumber(a_, -b_, d_); }
    /// a^2 - d*b^2, the field norm down to the rationals.
    Rational norm_q() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadraticNumber operator-() const { return QuadraticNumber(-a_, -b_, d_); }
    QuadraticNumber& operator+=(const QuadraticNumber& o);
    QuadraticNumber& operator-=(const QuadraticNumber& o) { return *this += -o; }
    QuadraticNumber& operator*=(const QuadraticNumber& o);
    QuadraticNumber& operator/=(const QuadraticNumber& o) { return *this *= o.inv(); }

    friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber& b) { return a += b; }
    friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber& b) { return a -= b; }
    friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber& b) { return a *= b; }
    friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber& b) { return a /= b; }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }

    QuadraticNumber inv() const;
    QuadraticNumber pow(long long e) const;

    /// Canonical textual form: "a", "a/b", or "(a+b*sqrt(d))/c" with integer
    /// a, b, c, d. Round-trips through parse_quadratic.
    std::string str() const;

  private:
    Rational a_, b_;
    BigInt d_;  // 0 iff b_ == 0
};

QuadraticNumber qn_add(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber qn_mul(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber qn_neg(const QuadraticNumber& x);
QuadraticNumber qn_inv(const QuadraticNumber& x);
Rational qn_norm(const QuadraticNumber& x);

/// Minimal k in 1..12 with x^k = 1, if any. Quadratic fields only contain
/// roots of unity of order 1, 2, 3, 4 or 6, so the bound is exhaustive.
std::optional<int> root_of_unity_order(const QuadraticNumber& x);

/// Both roots of t^2 + p t + q = 0, as elements of the quadratic extension
/// generated by the squarefree part of p^2 - 4q (pure rationals when the
/// discriminant is a rational square). Returned with the +sqrt root first.
std::pair<QuadraticNumber, QuadraticNumber> solve_monic_quadratic(const Rational& p,
                                                                  const Rational& q);

/// Exact square root inside a quadratic extension, when one exists there.
/// For a rational input the result may generate a new extension.
std::optional<QuadraticNumber> sqrt_in_field(const QuadraticNumber& r);

} // namespace linkfol

#endif
