#ifndef LINKFOL_POLY_HPP
#define LINKFOL_POLY_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linkfol/exactnum.hpp"

namespace linkfol {

struct Mono {
    int ex = 0;
    int ey = 0;
    auto operator<=>(const Mono&) const = default;
};

/// Sparse bivariate polynomial over one quadratic extension (or the
/// rationals), tagged with the affine chart its variables live in. Zero
/// coefficients are never stored. Monomial order is lex with x > y.
class Poly2 {
  public:
    Poly2() = default;
    explicit Poly2(std::string chart) : chart_(std::move(chart)) {}

    static Poly2 constant(const QuadraticNumber& c, std::string chart = "");
    static Poly2 variable(int which, std::string chart = "");  // 0 = x, 1 = y
    static Poly2 monomial(int ex, int ey, const QuadraticNumber& c, std::string chart = "");

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The constant term (zero if absent).
    QuadraticNumber constant_term() const;
    const std::map<Mono, QuadraticNumber>& terms() const { return terms_; }
    const std::string& chart() const { return chart_; }
    void set_chart(std::string chart) { chart_ = std::move(chart); }

    int deg_x() const;
    int deg_y() const;
    int total_degree() const;
    /// Smallest x-exponent over all terms; -1 for the zero polynomial.
    int min_deg_x() const;

    QuadraticNumber coeff(int ex, int ey) const;
    void set_coeff(int ex, int ey, const QuadraticNumber& c);
    void add_term(int ex, int ey, const QuadraticNumber& c);

    /// Leading term in lex order.
    std::pair<Mono, QuadraticNumber> leading() const;

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
    Poly2 scaled(const QuadraticNumber& c) const;

    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

    QuadraticNumber eval(const QuadraticNumber& x, const QuadraticNumber& y) const;
    Poly2 partial(int which) const;  // 0 = d/dx, 1 = d/dy
    /// Coefficient of y^k, as a polynomial in x alone.
    Poly2 coeff_of_y_power(int k) const;
    /// Substitute x -> x + cx, y -> y + cy.
    Poly2 translated(const QuadraticNumber& cx, const QuadraticNumber& cy) const;
    /// Substitute x -> polynomial px, y -> polynomial py.
    Poly2 substituted(const Poly2& px, const Poly2& py) const;

    /// Divide every coefficient by the lex-leading one (canonical associate).
    Poly2 monic_lex() const;

    std::string str() const;

  private:
    std::map<Mono, QuadraticNumber> terms_;
    std::string chart_;
};

Poly2 poly_add(const Poly2& a, const Poly2& b);
Poly2 poly_mul(const Poly2& a, const Poly2& b);
QuadraticNumber poly_eval(const Poly2& p, const QuadraticNumber& x, const QuadraticNumber& y);
Poly2 poly_partial(const Poly2& p, int which);

/// Lex division by a single divisor: p = q*f + r with no term of r divisible
/// by the leading term of f. Exact (field coefficients).
std::pair<Poly2, Poly2> poly_divmod(const Poly2& p, const Poly2& f);
/// True iff f divides p exactly.
bool poly_divides(const Poly2& f, const Poly2& p);
/// Division that must be exact; throws Error otherwise.
Poly2 poly_exact_div(const Poly2& p, const Poly2& f);

/// Polynomial gcd over the coefficient field, monic in lex order.
/// Computed by a primitive pseudo-remainder sequence in y over K[x].
Poly2 poly_gcd(const Poly2& a, const Poly2& b);

} // namespace linkfol

#endif
