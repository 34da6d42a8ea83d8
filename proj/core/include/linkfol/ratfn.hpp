#ifndef LINKFOL_RATFN_HPP
#define LINKFOL_RATFN_HPP

#include <string>
#include <utility>

#include "linkfol/poly.hpp"

namespace linkfol {

/// Quotient of two bivariate polynomials, kept with the gcd divided out and
/// the denominator monic in lex order (canonical representative).
class RationalFn2 {
  public:
    RationalFn2() : num_(), den_(Poly2::constant(QuadraticNumber(1))) {}
    RationalFn2(Poly2 num, Poly2 den);
    explicit RationalFn2(const Poly2& num) : RationalFn2(num, Poly2::constant(QuadraticNumber(1))) {}

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFn2 operator-() const;
    RationalFn2& operator+=(const RationalFn2& o);
    RationalFn2& operator-=(const RationalFn2& o);
    RationalFn2& operator*=(const RationalFn2& o);
    RationalFn2& operator/=(const RationalFn2& o);
    friend RationalFn2 operator+(RationalFn2 a, const RationalFn2& b) { return a += b; }
    friend RationalFn2 operator-(RationalFn2 a, const RationalFn2& b) { return a -= b; }
    friend RationalFn2 operator*(RationalFn2 a, const RationalFn2& b) { return a *= b; }
    friend RationalFn2 operator/(RationalFn2 a, const RationalFn2& b) { return a /= b; }

    friend bool operator==(const RationalFn2& a, const RationalFn2& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFn2& a, const RationalFn2& b) { return !(a == b); }

    RationalFn2 scaled(const QuadraticNumber& c) const { return RationalFn2(num_.scaled(c), den_); }
    /// Partial derivative (quotient rule), 0 = x, 1 = y.
    RationalFn2 partial(int which) const;
    /// Exact value at a point; throws ZeroInverse on a denominator zero.
    QuadraticNumber eval(const QuadraticNumber& x, const QuadraticNumber& y) const;
    bool defined_at(const QuadraticNumber& x, const QuadraticNumber& y) const;

    std::string str() const;

  private:
    Poly2 num_, den_;
};

/// Substitute rational functions for the variables of a polynomial.
RationalFn2 poly_compose(const Poly2& p, const RationalFn2& fx, const RationalFn2& fy);
/// Substitute rational functions for the variables of a rational function.
RationalFn2 ratfn_compose(const RationalFn2& f, const RationalFn2& fx, const RationalFn2& fy);

/// Rational self-map expressed between two labeled affine charts.
struct RationalMap2 {
    RationalFn2 c1, c2;
    std::string source_chart;
    std::string target_chart;

    RationalMap2() = default;
    RationalMap2(RationalFn2 f, RationalFn2 g, std::string src = "", std::string tgt = "");

    static RationalMap2 identity(const std::string& chart = "");

    bool is_identity() const;
    bool defined_at(const QuadraticNumber& x, const QuadraticNumber& y) const;
    std::pair<QuadraticNumber, QuadraticNumber> eval(const QuadraticNumber& x,
                                                     const QuadraticNumber& y) const;
    std::string str() const;
};

/// Composite f after g (apply g first). Chart labels must be compatible.
RationalMap2 compose(const RationalMap2& f, const RationalMap2& g);

} // namespace linkfol

#endif
