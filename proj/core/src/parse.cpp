#include "linkfol/parse.hpp"

#include <cctype>

namespace linkfol {

namespace {

// Value of a subexpression: a polynomial part plus polynomial coefficients
// of dx and dy. Nonlinear products of dx/dy are rejected.
struct FormValue {
    Poly2 p, pdx, pdy;

    bool form_free() const { return pdx.is_zero() && pdy.is_zero(); }
};

class Parser {
  public:
    Parser(const std::string& text, const ConstantEnv& env, bool allow_vars, bool allow_forms)
        : text_(text), env_(env), allow_vars_(allow_vars), allow_forms_(allow_forms) {}

    FormValue run() {
        FormValue v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return v;
    }

  private:
    const std::string& text_;
    const ConstantEnv& env_;
    bool allow_vars_, allow_forms_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }

    BigInt integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
            skip_ws();
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw SyntaxError("expected an integer", pos_);
        BigInt v(text_.substr(start, pos_ - start));
        return neg ? BigInt(-v) : v;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    FormValue expr() {
        FormValue v = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                FormValue w = term();
                v.p += w.p;
                v.pdx += w.pdx;
                v.pdy += w.pdy;
            } else if (c == '-') {
                ++pos_;
                FormValue w = term();
                v.p -= w.p;
                v.pdx -= w.pdx;
                v.pdy -= w.pdy;
            } else {
                return v;
            }
        }
    }

    FormValue term() {
        FormValue v = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                v = mul(v, factor());
            } else if (c == '/') {
                std::size_t at = pos_;
                ++pos_;
                FormValue w = factor();
                if (!w.form_free() || !w.p.is_constant())
                    throw SyntaxError("division requires a constant divisor", at);
                QuadraticNumber d = w.p.constant_term();
                if (d.is_zero()) throw SyntaxError("division by zero", at);
                QuadraticNumber i = d.inv();
                v.p = v.p.scaled(i);
                v.pdx = v.pdx.scaled(i);
                v.pdy = v.pdy.scaled(i);
            } else {
                return v;
            }
        }
    }

    FormValue mul(const FormValue& a, const FormValue& b) {
        if (!a.form_free() && !b.form_free())
            throw SyntaxError("product of differentials is not a 1-form", pos_);
        FormValue r;
        r.p = a.p * b.p;
        r.pdx = a.pdx * b.p + a.p * b.pdx;
        r.pdy = a.pdy * b.p + a.p * b.pdy;
        return r;
    }

    FormValue factor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            FormValue v = factor();
            v.p = -v.p;
            v.pdx = -v.pdx;
            v.pdy = -v.pdy;
            return v;
        }
        if (c == '+') {
            ++pos_;
            return factor();
        }
        FormValue v = base();
        if (peek() == '^') {
            std::size_t at = pos_;
            ++pos_;
            BigInt e = integer();
            if (!v.form_free()) throw SyntaxError("cannot raise a differential to a power", at);
            if (e < 0) throw SyntaxError("negative exponent", at);
            Poly2 r = Poly2::constant(QuadraticNumber(1));
            Poly2 base_p = v.p;
            for (BigInt i = 0; i < e; ++i) r = r * base_p;
            v.p = r;
        }
        return v;
    }

    FormValue base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            FormValue v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            FormValue v;
            v.p = Poly2::constant(QuadraticNumber(Rational(integer())));
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name = ident();
            FormValue v;
            if (name == "sqrt") {
                expect('(');
                BigInt d = integer();
                expect(')');
                v.p = Poly2::constant(QuadraticNumber(Rational(0), Rational(1), d));
                return v;
            }
            if (name == "x" || name == "y") {
                if (!allow_vars_) throw SyntaxError("variable '" + name + "' not allowed here", at);
                v.p = Poly2::variable(name == "x" ? 0 : 1);
                return v;
            }
            if (name == "dx" || name == "dy") {
                if (!allow_forms_)
                    throw SyntaxError("differential '" + name + "' not allowed here", at);
                Poly2 one = Poly2::constant(QuadraticNumber(1));
                (name == "dx" ? v.pdx : v.pdy) = one;
                return v;
            }
            auto it = env_.find(name);
            if (it == env_.end()) throw SyntaxError("unknown constant '" + name + "'", at);
            v.p = Poly2::constant(it->second);
            return v;
        }
        throw SyntaxError("unexpected character", pos_);
    }
};

} // namespace

Poly2 parse_poly(const std::string& text, const ConstantEnv& env, std::string chart) {
    Parser p(text, env, /*allow_vars=*/true, /*allow_forms=*/false);
    FormValue v = p.run();
    v.p.set_chart(std::move(chart));
    return v.p;
}

OneForm parse_form(const std::string& text, const ConstantEnv& env, std::string chart) {
    Parser p(text, env, /*allow_vars=*/true, /*allow_forms=*/true);
    FormValue v = p.run();
    if (!v.p.is_zero()) throw SyntaxError("expression has a part without dx or dy", 0);
    if (v.pdx.is_zero() && v.pdy.is_zero()) throw SyntaxError("zero 1-form", 0);
    return OneForm(v.pdx, v.pdy, std::move(chart));
}

QuadraticNumber parse_quadratic(const std::string& text) {
    Parser p(text, {}, /*allow_vars=*/false, /*allow_forms=*/false);
    FormValue v = p.run();
    return v.p.constant_term();
}

Rational parse_rational(const std::string& text) {
    QuadraticNumber q = parse_quadratic(text);
    if (!q.is_rational()) throw SyntaxError("expected a rational number", 0);
    return q.rational_part();
}

} // namespace linkfol
