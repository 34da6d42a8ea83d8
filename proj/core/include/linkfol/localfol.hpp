#ifndef LINKFOL_LOCALFOL_HPP
#define LINKFOL_LOCALFOL_HPP

#include <array>
#include <optional>
#include <utility>

#include "linkfol/forms.hpp"

namespace linkfol {

enum class SingularityClass {
    ReducedNondegenerate,
    SaddleNode,
    NonReduced,
    DegenerateLinearPart,
};

/// Local data of a foliation singularity: the linearization of the dual
/// vector field, its trace/determinant, the unordered pair of eigenvalue
/// quotients {q, 1/q} when it is representable in a single quadratic
/// extension, and the reducedness classification.
struct SingularityAnalysis {
    std::pair<QuadraticNumber, QuadraticNumber> point;
    std::array<std::array<QuadraticNumber, 2>, 2> linearization;
    QuadraticNumber trace;
    QuadraticNumber determinant;
    std::optional<std::pair<QuadraticNumber, QuadraticNumber>> eigenvalue_quotients;
    SingularityClass classification = SingularityClass::DegenerateLinearPart;
};

enum class LambdaKind { PrimitiveRoot, Unit, PositiveIrrational };

/// The dictionary between the self-intersection n of an invariant nodal
/// curve and the eigenvalue quotient at its node: the roots of
/// t^2 + (2-n)t + 1 = 0 and which of the three regimes they fall in.
struct LambdaClassification {
    int n = 0;
    std::pair<QuadraticNumber, QuadraticNumber> roots;
    LambdaKind kind = LambdaKind::Unit;
    int root_order = 0;  // order of -lambda when kind == PrimitiveRoot
};

/// The vector field (B, -A) annihilated by A dx + B dy.
std::pair<Poly2, Poly2> dual_vector_field(const OneForm& w);

/// Linearize the dual vector field at a singular point and classify.
/// The eigenvalue quotients are recovered from trace T and determinant D
/// alone, as the roots of t^2 - (T^2/D - 2) t + 1 = 0, so every value stays
/// in one quadratic extension; when even that is impossible the pair is
/// absent (the quotient is then irrational, hence never a positive rational).
SingularityAnalysis analyze_singularity(const OneForm& w,
                                        const std::pair<QuadraticNumber, QuadraticNumber>& p);

LambdaClassification classify_lambda(int n);

/// Camacho-Sad index contribution at a node through which both branches of
/// the curve pass: lambda + 2 + 1/lambda.
QuadraticNumber cs_node_index(const QuadraticNumber& lambda);

enum class Branch {
    XAxis,  // the branch {y = p.second} through p
    YAxis,  // the branch {x = p.first} through p
};

/// Camacho-Sad index of the selected invariant axis branch at a corner
/// singularity: transverse eigenvalue over tangent eigenvalue.
QuadraticNumber cs_corner_index(const OneForm& w,
                                const std::pair<QuadraticNumber, QuadraticNumber>& p,
                                Branch branch);

} // namespace linkfol

#endif
