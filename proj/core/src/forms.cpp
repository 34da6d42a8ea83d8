#include "linkfol/forms.hpp"

namespace linkfol {

OneForm::OneForm(Poly2 A, Poly2 B, std::string chart)
    : A_(std::move(A)), B_(std::move(B)), chart_(std::move(chart)) {
    if (A_.is_zero() && B_.is_zero()) throw IndeterminateForm("zero 1-form");
    if (chart_.empty()) {
        if (!A_.chart().empty())
            chart_ = A_.chart();
        else
            chart_ = B_.chart();
    }
    Poly2 g = poly_gcd(A_, B_);
    if (!g.is_constant()) {
        A_ = poly_exact_div(A_, g);
        B_ = poly_exact_div(B_, g);
    }
    QuadraticNumber lead = A_.is_zero() ? B_.leading().second : A_.leading().second;
    if (!lead.is_one()) {
        A_ = A_.scaled(lead.inv());
        B_ = B_.scaled(lead.inv());
    }
    A_.set_chart(chart_);
    B_.set_chart(chart_);
}

OneForm OneForm::translated(const QuadraticNumber& cx, const QuadraticNumber& cy) const {
    return OneForm(A_.translated(cx, cy), B_.translated(cx, cy), chart_);
}

std::string OneForm::str() const {
    std::string s;
    if (!A_.is_zero()) s += "(" + A_.str() + ")*dx";
    if (!B_.is_zero()) {
        if (!s.empty()) s += " + ";
        s += "(" + B_.str() + ")*dy";
    }
    return s;
}

TwoForm wedge(const OneForm& w1, const OneForm& w2) {
    if (!w1.chart().empty() && !w2.chart().empty() && w1.chart() != w2.chart())
        throw Error("wedge across charts: " + w1.chart() + " vs " + w2.chart());
    return TwoForm{RationalFn2(w1.A() * w2.B() - w2.A() * w1.B()), w1.chart()};
}

std::pair<RationalFn2, RationalFn2> pullback_fn(const RationalMap2& phi, const OneForm& w) {
    if (!phi.target_chart.empty() && !w.chart().empty() && phi.target_chart != w.chart())
        throw Error("pullback: map targets chart " + phi.target_chart + " but form lives in " +
                    w.chart());
    RationalFn2 S1 = poly_compose(w.A(), phi.c1, phi.c2);
    RationalFn2 S2 = poly_compose(w.B(), phi.c1, phi.c2);
    RationalFn2 P = S1 * phi.c1.partial(0) + S2 * phi.c2.partial(0);
    RationalFn2 Q = S1 * phi.c1.partial(1) + S2 * phi.c2.partial(1);
    return {P, Q};
}

OneForm pullback_form(const RationalMap2& phi, const OneForm& w) {
    auto [P, Q] = pullback_fn(phi, w);
    if (P.is_zero() && Q.is_zero())
        throw IndeterminateForm("pullback of the form vanishes identically");
    // Clear by the lcm of the two denominators, then the OneForm constructor
    // normalizes to the primitive representative.
    Poly2 g = poly_gcd(P.den(), Q.den());
    Poly2 lcm = poly_exact_div(P.den() * Q.den(), g);
    Poly2 a = P.num() * poly_exact_div(lcm, P.den());
    Poly2 b = Q.num() * poly_exact_div(lcm, Q.den());
    a.set_chart("");
    b.set_chart("");
    return OneForm(a, b, phi.source_chart);
}

RationalFn2 invariance_wedge(const RationalMap2& phi, const OneForm& w_tgt,
                             const OneForm& w_src) {
    auto [P, Q] = pullback_fn(phi, w_tgt);
    return RationalFn2(w_src.A()) * Q - RationalFn2(w_src.B()) * P;
}

std::array<RationalFn2, 3> pencil_wedge_quadratic(const RationalMap2& phi, const Poly2& A1,
                                                  const Poly2& B1, const Poly2& A0,
                                                  const Poly2& B0) {
    auto sample = [&](long long t) {
        QuadraticNumber tt((Rational(t)));
        Poly2 A = A1.scaled(tt) + A0;
        Poly2 B = B1.scaled(tt) + B0;
        RationalFn2 S1 = poly_compose(A, phi.c1, phi.c2);
        RationalFn2 S2 = poly_compose(B, phi.c1, phi.c2);
        RationalFn2 P = S1 * phi.c1.partial(0) + S2 * phi.c2.partial(0);
        RationalFn2 Q = S1 * phi.c1.partial(1) + S2 * phi.c2.partial(1);
        return RationalFn2(A) * Q - RationalFn2(B) * P;
    };
    RationalFn2 W1 = sample(1), W2 = sample(2), W3 = sample(3);
    // Solve the Vandermonde system for t = 1, 2, 3 exactly.
    QuadraticNumber half(Rational(1, 2));
    RationalFn2 c2 = (W3 - W2 - (W2 - W1)).scaled(half);
    RationalFn2 c1 = (W2 - W1) - c2.scaled(QuadraticNumber(3));
    RationalFn2 c0 = W1 - c1 - c2;
    return {c0, c1, c2};
}

bool curve_invariant(const OneForm& w, const Poly2& f) {
    if (f.is_zero()) throw Error("curve_invariant: zero polynomial is not a curve");
    Poly2 coeff = w.A() * f.partial(1) - w.B() * f.partial(0);
    return poly_divides(f, coeff);
}

} // namespace linkfol
