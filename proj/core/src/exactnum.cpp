#include "linkfol/exactnum.hpp"

#include <algorithm>

namespace linkfol {

namespace mp = boost::multiprecision;

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ZeroInverse("rational with zero denominator");
    v_ = mp::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroInverse("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw ZeroInverse();
    return Rational(1) / *this;
}

Rational Rational::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    Rational r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
}

std::pair<BigInt, BigInt> squarefree_part(const BigInt& n) {
    if (n == 0) return {0, 1};
    BigInt rest = n < 0 ? BigInt(-n) : n;
    BigInt m = 1;
    const long long bound = 100000;
    for (long long p = 2; p <= bound && BigInt(p) * p <= rest; p == 2 ? p = 3 : p += 2) {
        BigInt pp = BigInt(p) * p;
        while (rest % pp == 0) {
            rest /= pp;
            m *= p;
        }
    }
    // Large leftover: catch the case of a perfect square beyond the bound.
    if (rest > 1) {
        BigInt r = mp::sqrt(rest);
        if (r * r == rest) {
            m *= r;
            rest = 1;
        }
    }
    if (n < 0) rest = -rest;
    return {rest, m};
}

std::optional<Rational> sqrt_rational(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    BigInt n = r.numerator(), d = r.denominator();
    BigInt sn = mp::sqrt(n), sd = mp::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

namespace {
std::optional<BigInt> cbrt_int(const BigInt& n) {
    if (n < 0) {
        auto r = cbrt_int(-n);
        if (r) return -*r;
        return std::nullopt;
    }
    if (n == 0) return BigInt(0);
    // Newton iteration from a generous upper bound, then exact check.
    BigInt x = BigInt(1) << (static_cast<unsigned>(mp::msb(n)) / 3 + 2);
    while (true) {
        BigInt y = (2 * x + n / (x * x)) / 3;
        if (y >= x) break;
        x = y;
    }
    for (BigInt c = x - 2; c <= x + 2; ++c)
        if (c > 0 && c * c * c == n) return c;
    if (n == 1) return BigInt(1);
    return std::nullopt;
}
} // namespace

std::optional<Rational> cbrt_rational(const Rational& r) {
    auto n = cbrt_int(r.numerator());
    auto d = cbrt_int(r.denominator());
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (b_.is_zero() || d_ == 0) {
        b_ = Rational(0);
        d_ = 0;
        return;
    }
    auto [sf, m] = squarefree_part(d_);
    d_ = sf;
    if (m != 1) b_ *= Rational(m);
    if (d_ == 1) {  // sqrt(1) collapses into the rational part
        a_ += b_;
        b_ = Rational(0);
        d_ = 0;
    }
}

namespace {
// Reconciles the fields of two operands; throws on a genuine mismatch.
BigInt join_fields(const QuadraticNumber& x, const QuadraticNumber& y) {
    const BigInt& dx = x.discriminant();
    const BigInt& dy = y.discriminant();
    if (dx == 0) return dy;
    if (dy == 0 || dx == dy) return dx;
    throw FieldMismatch("mixed quadratic fields: sqrt(" + dx.str() + ") vs sqrt(" + dy.str() + ")");
}
} // namespace

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
    BigInt d = join_fields(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    *this = QuadraticNumber(a_, b_, d);
    return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
    BigInt d = join_fields(*this, o);
    Rational na = a_ * o.a_ + Rational(d) * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    *this = QuadraticNumber(na, nb, d);
    return *this;
}

QuadraticNumber QuadraticNumber::inv() const {
    Rational n = norm_q();
    if (n.is_zero()) throw ZeroInverse("inverse of zero (or zero-norm) quadratic number");
    return QuadraticNumber(a_ / n, -b_ / n, d_);
}

QuadraticNumber QuadraticNumber::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    QuadraticNumber r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::string QuadraticNumber::str() const {
    if (is_rational()) return a_.str();
    // Common positive denominator c, integer parts for a and b.
    BigInt c = boost::multiprecision::lcm(a_.denominator(), b_.denominator());
    BigInt ia = a_.numerator() * (c / a_.denominator());
    BigInt ib = b_.numerator() * (c / b_.denominator());
    std::string radical = (ib == 1)    ? "sqrt(" + d_.str() + ")"
                          : (ib == -1) ? "-sqrt(" + d_.str() + ")"
                                       : ib.str() + "*sqrt(" + d_.str() + ")";
    std::string body;
    if (ia == 0) {
        body = radical;
    } else if (ib < 0) {
        std::string rad = (ib == -1) ? "sqrt(" + d_.str() + ")" : (-ib).str() + "*sqrt(" + d_.str() + ")";
        body = ia.str() + "-" + rad;
    } else {
        body = ia.str() + "+" + radical;
    }
    if (c == 1) return (ia == 0) ? body : "(" + body + ")";
    return "(" + body + ")/" + c.str();
}

QuadraticNumber qn_add(const QuadraticNumber& x, const QuadraticNumber& y) { return x + y; }
QuadraticNumber qn_mul(const QuadraticNumber& x, const QuadraticNumber& y) { return x * y; }
QuadraticNumber qn_neg(const QuadraticNumber& x) { return -x; }
QuadraticNumber qn_inv(const QuadraticNumber& x) { return x.inv(); }
Rational qn_norm(const QuadraticNumber& x) { return x.norm_q(); }

std::optional<int> root_of_unity_order(const QuadraticNumber& x) {
    QuadraticNumber p(1);
    for (int k = 1; k <= 12; ++k) {
        p = p * x;
        if (p.is_one()) return k;
    }
    return std::nullopt;
}

std::pair<QuadraticNumber, QuadraticNumber> solve_monic_quadratic(const Rational& p,
                                                                  const Rational& q) {
    Rational disc = p * p - Rational(4) * q;
    Rational half = Rational(1, 2);
    Rational mid = -p * half;
    if (auto s = sqrt_rational(disc)) {
        return {QuadraticNumber(mid + *s * half), QuadraticNumber(mid - *s * half)};
    }
    // sqrt(num/den) = sqrt(num*den)/den; pull the square part out.
    BigInt nd = disc.numerator() * disc.denominator();
    auto [sf, m] = squarefree_part(nd);
    Rational coeff = Rational(m, disc.denominator()) * half;
    return {QuadraticNumber(mid, coeff, sf), QuadraticNumber(mid, -coeff, sf)};
}

std::optional<QuadraticNumber> sqrt_in_field(const QuadraticNumber& r) {
    if (r.is_rational()) {
        const Rational& a = r.rational_part();
        if (a.sign() == 0) return QuadraticNumber(0);
        if (auto s = sqrt_rational(a)) return QuadraticNumber(*s);
        // Adjoin the root: sqrt(n/d) = sqrt(n*d)/d, squarefree part out front.
        BigInt nd = a.numerator() * a.denominator();
        auto [sf, m] = squarefree_part(nd);
        return QuadraticNumber(Rational(0), Rational(m, a.denominator()), sf);
    }
    // Solve (x + y*sqrt(d))^2 = a + b*sqrt(d): x^2 + y^2 d = a, 2xy = b.
    // x^2 = (a +- sqrt(a^2 - d b^2))/2 must be a rational square.
    auto rho = sqrt_rational(r.norm_q());
    if (!rho) return std::nullopt;
    const Rational& a = r.rational_part();
    const Rational& b = r.radical_part();
    for (int sign : {+1, -1}) {
        Rational x2 = (a + Rational(sign) * *rho) / Rational(2);
        auto x = sqrt_rational(x2);
        if (!x || x->is_zero()) continue;
        Rational y = b / (Rational(2) * *x);
        QuadraticNumber cand(*x, y, r.discriminant());
        if (cand * cand == r) return cand;
    }
    return std::nullopt;
}

} // namespace linkfol
