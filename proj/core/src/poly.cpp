#include "linkfol/poly.hpp"

#include <algorithm>

namespace linkfol {

namespace {
std::string join_charts(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a != b) throw Error("chart mismatch: '" + a + "' vs '" + b + "'");
    return a;
}
} // namespace

Poly2 Poly2::constant(const QuadraticNumber& c, std::string chart) {
    Poly2 p(std::move(chart));
    p.set_coeff(0, 0, c);
    return p;
}

Poly2 Poly2::variable(int which, std::string chart) {
    Poly2 p(std::move(chart));
    p.set_coeff(which == 0 ? 1 : 0, which == 0 ? 0 : 1, QuadraticNumber(1));
    return p;
}

Poly2 Poly2::monomial(int ex, int ey, const QuadraticNumber& c, std::string chart) {
    Poly2 p(std::move(chart));
    p.set_coeff(ex, ey, c);
    return p;
}

bool Poly2::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
}

QuadraticNumber Poly2::constant_term() const { return coeff(0, 0); }

int Poly2::deg_x() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.ex);
    return d;
}

int Poly2::deg_y() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.ey);
    return d;
}

int Poly2::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.ex + m.ey);
    return d;
}

int Poly2::min_deg_x() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.ex;
    for (const auto& [m, c] : terms_) d = std::min(d, m.ex);
    return d;
}

QuadraticNumber Poly2::coeff(int ex, int ey) const {
    auto it = terms_.find(Mono{ex, ey});
    return it == terms_.end() ? QuadraticNumber(0) : it->second;
}

void Poly2::set_coeff(int ex, int ey, const QuadraticNumber& c) {
    if (c.is_zero())
        terms_.erase(Mono{ex, ey});
    else
        terms_[Mono{ex, ey}] = c;
}

void Poly2::add_term(int ex, int ey, const QuadraticNumber& c) {
    set_coeff(ex, ey, coeff(ex, ey) + c);
}

std::pair<Mono, QuadraticNumber> Poly2::leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

Poly2 Poly2::operator-() const {
    Poly2 r(chart_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    chart_ = join_charts(chart_, o.chart_);
    for (const auto& [m, c] : o.terms_) add_term(m.ex, m.ey, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    chart_ = join_charts(chart_, o.chart_);
    for (const auto& [m, c] : o.terms_) add_term(m.ex, m.ey, -c);
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r(join_charts(a.chart_, b.chart_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma.ex + mb.ex, ma.ey + mb.ey, ca * cb);
    return r;
}

Poly2 Poly2::scaled(const QuadraticNumber& c) const {
    Poly2 r(chart_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

QuadraticNumber Poly2::eval(const QuadraticNumber& x, const QuadraticNumber& y) const {
    // Power caches keep this exact and cheap for the small degrees we see.
    std::vector<QuadraticNumber> xs{QuadraticNumber(1)}, ys{QuadraticNumber(1)};
    auto power = [](std::vector<QuadraticNumber>& cache, const QuadraticNumber& v, int e) {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * v);
        return cache[static_cast<std::size_t>(e)];
    };
    QuadraticNumber acc(0);
    for (const auto& [m, c] : terms_) acc += c * power(xs, x, m.ex) * power(ys, y, m.ey);
    return acc;
}

Poly2 Poly2::partial(int which) const {
    Poly2 r(chart_);
    for (const auto& [m, c] : terms_) {
        int e = which == 0 ? m.ex : m.ey;
        if (e == 0) continue;
        Mono n = which == 0 ? Mono{m.ex - 1, m.ey} : Mono{m.ex, m.ey - 1};
        r.add_term(n.ex, n.ey, c * QuadraticNumber(e));
    }
    return r;
}

Poly2 Poly2::coeff_of_y_power(int k) const {
    Poly2 r(chart_);
    for (const auto& [m, c] : terms_)
        if (m.ey == k) r.set_coeff(m.ex, 0, c);
    return r;
}

Poly2 Poly2::translated(const QuadraticNumber& cx, const QuadraticNumber& cy) const {
    Poly2 px = Poly2::variable(0, chart_) + Poly2::constant(cx, chart_);
    Poly2 py = Poly2::variable(1, chart_) + Poly2::constant(cy, chart_);
    return substituted(px, py);
}

Poly2 Poly2::substituted(const Poly2& px, const Poly2& py) const {
    std::vector<Poly2> xs{Poly2::constant(QuadraticNumber(1), px.chart())};
    std::vector<Poly2> ys{Poly2::constant(QuadraticNumber(1), py.chart())};
    auto power = [](std::vector<Poly2>& cache, const Poly2& v, int e) {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * v);
        return cache[static_cast<std::size_t>(e)];
    };
    Poly2 acc;
    for (const auto& [m, c] : terms_)
        acc += (power(xs, px, m.ex) * power(ys, py, m.ey)).scaled(c);
    return acc;
}

Poly2 Poly2::monic_lex() const {
    if (is_zero()) return *this;
    return scaled(leading().second.inv());
}

std::string Poly2::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string vars;
        if (m.ex > 0) vars += m.ex == 1 ? "x" : "x^" + std::to_string(m.ex);
        if (m.ey > 0) {
            if (!vars.empty()) vars += "*";
            vars += m.ey == 1 ? "y" : "y^" + std::to_string(m.ey);
        }
        QuadraticNumber cc = c;
        std::string sep = first ? "" : " + ";
        if (!first && c.is_rational() && c.rational_part().sign() < 0) {
            sep = " - ";
            cc = -c;
        }
        std::string coeff_str;
        if (vars.empty()) {
            coeff_str = cc.str();
        } else if (cc.is_one()) {
            coeff_str.clear();
        } else if (cc.is_rational() && cc.rational_part() == Rational(-1)) {
            coeff_str = "-";
        } else {
            coeff_str = cc.str();
        }
        std::string term;
        if (coeff_str.empty() || coeff_str == "-")
            term = coeff_str + vars;
        else
            term = vars.empty() ? coeff_str : coeff_str + "*" + vars;
        out += sep + term;
        first = false;
    }
    return out;
}

Poly2 poly_add(const Poly2& a, const Poly2& b) { return a + b; }
Poly2 poly_mul(const Poly2& a, const Poly2& b) { return a * b; }
QuadraticNumber poly_eval(const Poly2& p, const QuadraticNumber& x, const QuadraticNumber& y) {
    return p.eval(x, y);
}
Poly2 poly_partial(const Poly2& p, int which) { return p.partial(which); }

std::pair<Poly2, Poly2> poly_divmod(const Poly2& p, const Poly2& f) {
    if (f.is_zero()) throw ZeroInverse("division by zero polynomial");
    Poly2 q(p.chart()), r(p.chart()), rest = p;
    auto [fm, fc] = f.leading();
    while (!rest.is_zero()) {
        auto [m, c] = rest.leading();
        if (m.ex >= fm.ex && m.ey >= fm.ey) {
            Poly2 t = Poly2::monomial(m.ex - fm.ex, m.ey - fm.ey, c / fc, p.chart());
            q += t;
            rest -= t * f;
        } else {
            r.add_term(m.ex, m.ey, c);
            rest.set_coeff(m.ex, m.ey, QuadraticNumber(0));
        }
    }
    return {q, r};
}

bool poly_divides(const Poly2& f, const Poly2& p) {
    if (p.is_zero()) return true;
    if (f.is_zero()) return false;
    return poly_divmod(p, f).second.is_zero();
}

Poly2 poly_exact_div(const Poly2& p, const Poly2& f) {
    auto [q, r] = poly_divmod(p, f);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

namespace {

// Degree in y, -1 for zero.
int ydeg(const Poly2& p) { return p.is_zero() ? -1 : p.deg_y(); }

// Euclidean gcd for polynomials in a single variable (both inputs must
// involve at most one and the same variable).
Poly2 gcd_univ(Poly2 a, Poly2 b) {
    while (!b.is_zero()) {
        Poly2 r = poly_divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic_lex();
}

// Content of p with respect to y: gcd in K[x] of the y-coefficients.
Poly2 content_y(const Poly2& p) {
    Poly2 c;
    for (int k = 0; k <= p.deg_y(); ++k) {
        Poly2 ck = p.coeff_of_y_power(k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck.monic_lex() : gcd_univ(c, ck);
        if (c.is_constant()) break;
    }
    return c.is_zero() ? Poly2::constant(QuadraticNumber(1), p.chart()) : c;
}

// Pseudo-remainder of f by g in the variable y.
Poly2 prem_y(Poly2 f, const Poly2& g) {
    int dg = ydeg(g);
    Poly2 lcg = g.coeff_of_y_power(dg);
    while (!f.is_zero() && ydeg(f) >= dg) {
        int df = ydeg(f);
        Poly2 lcf = f.coeff_of_y_power(df);
        Poly2 shift = Poly2::monomial(0, df - dg, QuadraticNumber(1), f.chart());
        f = lcg * f - lcf * shift * g;
    }
    return f;
}

} // namespace

Poly2 poly_gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic_lex();
    if (b.is_zero()) return a.monic_lex();
    if (a.deg_y() == 0 && b.deg_y() == 0) return gcd_univ(a, b);
    if (a.deg_x() == 0 && b.deg_x() == 0) return gcd_univ(a, b);

    Poly2 ca = content_y(a), cb = content_y(b);
    Poly2 cg = gcd_univ(ca, cb);
    Poly2 pa = poly_exact_div(a, ca), pb = poly_exact_div(b, cb);
    if (ydeg(pa) < ydeg(pb)) std::swap(pa, pb);
    // Primitive PRS in y over K[x].
    while (!pb.is_zero() && ydeg(pb) > 0) {
        Poly2 r = prem_y(pa, pb);
        pa = pb;
        pb = r.is_zero() ? r : poly_exact_div(r, content_y(r));
    }
    Poly2 prim = pb.is_zero() ? pa : Poly2::constant(QuadraticNumber(1), a.chart());
    prim = poly_exact_div(prim, content_y(prim));
    return (cg * prim).monic_lex();
}

} // namespace linkfol
