#include "linkfol/localfol.hpp"

namespace linkfol {

std::pair<Poly2, Poly2> dual_vector_field(const OneForm& w) {
    return {w.B(), -w.A()};
}

SingularityAnalysis analyze_singularity(const OneForm& w,
                                        const std::pair<QuadraticNumber, QuadraticNumber>& p) {
    auto [X1, X2] = dual_vector_field(w);
    if (!X1.eval(p.first, p.second).is_zero() || !X2.eval(p.first, p.second).is_zero())
        throw NotSingular("the form does not vanish at the given point");

    SingularityAnalysis out;
    out.point = p;
    out.linearization = {{{X1.partial(0).eval(p.first, p.second),
                           X1.partial(1).eval(p.first, p.second)},
                          {X2.partial(0).eval(p.first, p.second),
                           X2.partial(1).eval(p.first, p.second)}}};
    const auto& J = out.linearization;
    out.trace = J[0][0] + J[1][1];
    out.determinant = J[0][0] * J[1][1] - J[0][1] * J[1][0];

    bool linear_part_zero =
        J[0][0].is_zero() && J[0][1].is_zero() && J[1][0].is_zero() && J[1][1].is_zero();
    if (linear_part_zero) {
        out.classification = SingularityClass::DegenerateLinearPart;
        return out;
    }
    if (out.determinant.is_zero()) {
        out.classification = SingularityClass::SaddleNode;
        return out;
    }

    QuadraticNumber s = out.trace * out.trace / out.determinant - QuadraticNumber(2);
    if (s.is_rational()) {
        out.eigenvalue_quotients = solve_monic_quadratic(-s.rational_part(), Rational(1));
    } else if (auto r = sqrt_in_field(s * s - QuadraticNumber(4))) {
        QuadraticNumber half(Rational(1, 2));
        out.eigenvalue_quotients = std::make_pair((s + *r) * half, (s - *r) * half);
    }
    // q + 1/q is rational whenever q is, so an irrational sum already rules
    // out a positive rational quotient.
    bool positive_rational_quotient = false;
    if (out.eigenvalue_quotients) {
        positive_rational_quotient = out.eigenvalue_quotients->first.is_positive_rational() ||
                                     out.eigenvalue_quotients->second.is_positive_rational();
    }
    out.classification = positive_rational_quotient ? SingularityClass::NonReduced
                                                    : SingularityClass::ReducedNondegenerate;
    return out;
}

LambdaClassification classify_lambda(int n) {
    if (n < 1) throw Error("classify_lambda requires n >= 1");
    LambdaClassification out;
    out.n = n;
    out.roots = solve_monic_quadratic(Rational(2 - n), Rational(1));
    if (n == 4) {
        out.kind = LambdaKind::Unit;
    } else if (n > 4) {
        out.kind = LambdaKind::PositiveIrrational;
    } else {
        out.kind = LambdaKind::PrimitiveRoot;
        auto order = root_of_unity_order(-out.roots.first);
        if (!order) throw Error("expected -lambda to be a root of unity for n < 4");
        out.root_order = *order;
    }
    return out;
}

QuadraticNumber cs_node_index(const QuadraticNumber& lambda) {
    return lambda + QuadraticNumber(2) + lambda.inv();
}

QuadraticNumber cs_corner_index(const OneForm& w,
                                const std::pair<QuadraticNumber, QuadraticNumber>& p,
                                Branch branch) {
    OneForm local = w.translated(p.first, p.second);
    // Invariance of the axis: for {y=0} the dx-coefficient must lie in (y),
    // for {x=0} the dy-coefficient in (x).
    const Poly2 axis = branch == Branch::XAxis ? Poly2::variable(1) : Poly2::variable(0);
    const Poly2& must_divide = branch == Branch::XAxis ? local.A() : local.B();
    if (!poly_divides(axis, must_divide))
        throw NotSeparatrix("the selected axis is not invariant at the point");

    SingularityAnalysis an = analyze_singularity(local, {QuadraticNumber(0), QuadraticNumber(0)});
    const auto& J = an.linearization;
    // With the axis invariant the linearization is triangular, so the
    // diagonal carries the tangent and transverse eigenvalues.
    QuadraticNumber tangent = branch == Branch::XAxis ? J[0][0] : J[1][1];
    QuadraticNumber transverse = branch == Branch::XAxis ? J[1][1] : J[0][0];
    if (tangent.is_zero()) throw Degenerate("eigenvalue along the branch vanishes");
    return transverse / tangent;
}

} // namespace linkfol
