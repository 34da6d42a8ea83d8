#include "linkfol/ratfn.hpp"

#include <vector>

namespace linkfol {

RationalFn2::RationalFn2(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroInverse("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly2::constant(QuadraticNumber(1), den_.chart());
        return;
    }
    Poly2 g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = poly_exact_div(num_, g);
        den_ = poly_exact_div(den_, g);
    }
    QuadraticNumber lead = den_.leading().second;
    if (!lead.is_one()) {
        den_ = den_.scaled(lead.inv());
        num_ = num_.scaled(lead.inv());
    }
}

RationalFn2 RationalFn2::operator-() const {
    RationalFn2 r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn2& RationalFn2::operator+=(const RationalFn2& o) {
    *this = RationalFn2(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFn2& RationalFn2::operator-=(const RationalFn2& o) {
    *this = RationalFn2(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFn2& RationalFn2::operator*=(const RationalFn2& o) {
    *this = RationalFn2(num_ * o.num_, den_ * o.den_);
    return *this;
}

RationalFn2& RationalFn2::operator/=(const RationalFn2& o) {
    if (o.is_zero()) throw ZeroInverse("division by zero rational function");
    *this = RationalFn2(num_ * o.den_, den_ * o.num_);
    return *this;
}

RationalFn2 RationalFn2::partial(int which) const {
    Poly2 n = num_.partial(which) * den_ - num_ * den_.partial(which);
    return RationalFn2(n, den_ * den_);
}

QuadraticNumber RationalFn2::eval(const QuadraticNumber& x, const QuadraticNumber& y) const {
    QuadraticNumber d = den_.eval(x, y);
    if (d.is_zero()) throw ZeroInverse("rational function pole at evaluation point");
    return num_.eval(x, y) / d;
}

bool RationalFn2::defined_at(const QuadraticNumber& x, const QuadraticNumber& y) const {
    return !den_.eval(x, y).is_zero();
}

std::string RationalFn2::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFn2 poly_compose(const Poly2& p, const RationalFn2& fx, const RationalFn2& fy) {
    std::vector<RationalFn2> xs{RationalFn2(Poly2::constant(QuadraticNumber(1)))};
    std::vector<RationalFn2> ys{RationalFn2(Poly2::constant(QuadraticNumber(1)))};
    auto power = [](std::vector<RationalFn2>& cache, const RationalFn2& v, int e) {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * v);
        return cache[static_cast<std::size_t>(e)];
    };
    RationalFn2 acc;
    for (const auto& [m, c] : p.terms())
        acc += (power(xs, fx, m.ex) * power(ys, fy, m.ey)).scaled(c);
    return acc;
}

RationalFn2 ratfn_compose(const RationalFn2& f, const RationalFn2& fx, const RationalFn2& fy) {
    RationalFn2 d = poly_compose(f.den(), fx, fy);
    if (d.is_zero()) throw ZeroInverse("composition lands in the denominator zero locus");
    return poly_compose(f.num(), fx, fy) / d;
}

RationalMap2::RationalMap2(RationalFn2 f, RationalFn2 g, std::string src, std::string tgt)
    : c1(std::move(f)), c2(std::move(g)), source_chart(std::move(src)),
      target_chart(std::move(tgt)) {
    if (c1.is_constant() && c2.is_constant())
        throw Error("rational map with both components constant");
}

RationalMap2 RationalMap2::identity(const std::string& chart) {
    return RationalMap2(RationalFn2(Poly2::variable(0)), RationalFn2(Poly2::variable(1)), chart,
                        chart);
}

bool RationalMap2::is_identity() const {
    return c1 == RationalFn2(Poly2::variable(0)) && c2 == RationalFn2(Poly2::variable(1));
}

bool RationalMap2::defined_at(const QuadraticNumber& x, const QuadraticNumber& y) const {
    return c1.defined_at(x, y) && c2.defined_at(x, y);
}

std::pair<QuadraticNumber, QuadraticNumber> RationalMap2::eval(const QuadraticNumber& x,
                                                               const QuadraticNumber& y) const {
    return {c1.eval(x, y), c2.eval(x, y)};
}

std::string RationalMap2::str() const {
    std::string s = "(" + c1.str() + ", " + c2.str() + ")";
    if (!source_chart.empty() || !target_chart.empty())
        s += " : " + source_chart + " -> " + target_chart;
    return s;
}

RationalMap2 compose(const RationalMap2& f, const RationalMap2& g) {
    if (!f.source_chart.empty() && !g.target_chart.empty() && f.source_chart != g.target_chart)
        throw Error("map composition across incompatible charts: " + g.target_chart + " vs " +
                    f.source_chart);
    return RationalMap2(ratfn_compose(f.c1, g.c1, g.c2), ratfn_compose(f.c2, g.c1, g.c2),
                        g.source_chart, f.target_chart);
}

} // namespace linkfol
