#include "linkfol/blowup.hpp"

#include <algorithm>

namespace linkfol {

namespace {

// Minimal exponent of the chosen variable over all terms of both polys.
int min_exponent(const Poly2& p, const Poly2& q, bool in_x) {
    int m = -1;
    auto scan = [&](const Poly2& r) {
        for (const auto& [mono, c] : r.terms()) {
            int e = in_x ? mono.ex : mono.ey;
            m = m < 0 ? e : std::min(m, e);
        }
    };
    scan(p);
    scan(q);
    return std::max(m, 0);
}

Poly2 shift_down(const Poly2& p, int k, bool in_x) {
    Poly2 r(p.chart());
    for (const auto& [mono, c] : p.terms())
        r.set_coeff(in_x ? mono.ex - k : mono.ex, in_x ? mono.ey : mono.ey - k, c);
    return r;
}

} // namespace

BlowupResult blow_up_form(const OneForm& w, bool allow_regular, std::string chart1,
                          std::string chart2) {
    QuadraticNumber zero(0);
    bool singular = w.A().eval(zero, zero).is_zero() && w.B().eval(zero, zero).is_zero();
    if (!singular && !allow_regular)
        throw NotSingular("blow-up center is a regular point of the form");
    if (chart1.empty()) chart1 = w.chart() + "#1";
    if (chart2.empty()) chart2 = w.chart() + "#2";

    Poly2 X = Poly2::variable(0), Y = Poly2::variable(1);

    // Chart 1: x = u, y = u v. dx = du, dy = v du + u dv.
    Poly2 Au = w.A().substituted(X, X * Y);
    Poly2 Bu = w.B().substituted(X, X * Y);
    Poly2 P1 = Au + Y * Bu;
    Poly2 Q1 = X * Bu;
    int m1 = min_exponent(P1, Q1, /*in_x=*/true);
    P1 = shift_down(P1, m1, true);
    Q1 = shift_down(Q1, m1, true);

    // Chart 2: x = s t, y = t. dx = t ds + s dt, dy = dt.
    Poly2 As = w.A().substituted(X * Y, Y);
    Poly2 Bs = w.B().substituted(X * Y, Y);
    Poly2 P2 = Y * As;
    Poly2 Q2 = X * As + Bs;
    int m2 = min_exponent(P2, Q2, /*in_x=*/false);
    P2 = shift_down(P2, m2, false);
    Q2 = shift_down(Q2, m2, false);

    if (m1 != m2)
        throw Error("blow-up charts disagree on the exceptional multiplicity");

    // The exceptional divisor {u = 0} is invariant iff u divides the reduced
    // dv-coefficient.
    bool dicritical = !poly_divides(X, Q1);

    P1.set_chart("");
    Q1.set_chart("");
    P2.set_chart("");
    Q2.set_chart("");
    return BlowupResult{m1, OneForm(P1, Q1, std::move(chart1)),
                        OneForm(P2, Q2, std::move(chart2)), dicritical};
}

RationalMap2 blowup_chart_transition(const std::string& chart2, const std::string& chart1) {
    Poly2 X = Poly2::variable(0), Y = Poly2::variable(1);
    Poly2 one = Poly2::constant(QuadraticNumber(1));
    return RationalMap2(RationalFn2(X * Y), RationalFn2(one, X), chart2, chart1);
}

} // namespace linkfol
