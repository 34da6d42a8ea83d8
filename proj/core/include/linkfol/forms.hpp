#ifndef LINKFOL_FORMS_HPP
#define LINKFOL_FORMS_HPP

#include <array>
#include <string>

#include "linkfol/ratfn.hpp"

namespace linkfol {

/// Polynomial 1-form A dx + B dy in a labeled affine chart. Always stored as
/// the canonical primitive representative: gcd(A, B) divided out and the
/// lex-leading coefficient scaled to 1. Two forms define the same foliation
/// iff their wedge vanishes; equality here is equality of representatives.
class OneForm {
  public:
    OneForm(Poly2 A, Poly2 B, std::string chart = "");

    const Poly2& A() const { return A_; }
    const Poly2& B() const { return B_; }
    const std::string& chart() const { return chart_; }

    friend bool operator==(const OneForm& a, const OneForm& b) {
        return a.A_ == b.A_ && a.B_ == b.B_;
    }
    friend bool operator!=(const OneForm& a, const OneForm& b) { return !(a == b); }

    /// Substitute x -> x + cx, y -> y + cy (used to move a point of interest
    /// to the chart origin).
    OneForm translated(const QuadraticNumber& cx, const QuadraticNumber& cy) const;

    std::string str() const;

  private:
    Poly2 A_, B_;
    std::string chart_;
};

/// 2-form c dx^dy with a rational-function coefficient.
struct TwoForm {
    RationalFn2 coeff;
    std::string chart;

    bool is_zero() const { return coeff.is_zero(); }
};

/// A1*B2 - A2*B1, in the common chart of the two forms.
TwoForm wedge(const OneForm& w1, const OneForm& w2);

/// Exact pullback of the form under the map, as a pair of rational
/// functions (coefficients of dx and dy in the source chart).
std::pair<RationalFn2, RationalFn2> pullback_fn(const RationalMap2& phi, const OneForm& w);

/// Pullback, denominators cleared and the result normalized to the primitive
/// representative. Throws IndeterminateForm when the pullback vanishes
/// identically.
OneForm pullback_form(const RationalMap2& phi, const OneForm& w);

/// Coefficient of wedge(w_src, phi^* w_tgt) as an exact rational function.
/// Vanishes iff phi maps the foliation of w_src to the one of w_tgt.
RationalFn2 invariance_wedge(const RationalMap2& phi, const OneForm& w_tgt, const OneForm& w_src);

/// For the pencil of forms w(t) = t*eta1 + eta0, the coefficient of
/// wedge(w(t), phi^* w(t)) is a quadratic polynomial in t with coefficients
/// in the rational-function field. Returns {c0, c1, c2} with
/// coefficient = c0 + c1*t + c2*t^2, computed exactly by interpolation.
/// eta1/eta0 are raw coefficient pairs (A, B), not normalized forms.
std::array<RationalFn2, 3> pencil_wedge_quadratic(const RationalMap2& phi, const Poly2& A1,
                                                  const Poly2& B1, const Poly2& A0,
                                                  const Poly2& B0);

/// True iff the curve f = 0 is invariant: w ^ df is divisible by f.
bool curve_invariant(const OneForm& w, const Poly2& f);

} // namespace linkfol

#endif
