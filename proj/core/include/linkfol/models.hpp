#ifndef LINKFOL_MODELS_HPP
#define LINKFOL_MODELS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkfol/curveconfig.hpp"
#include "linkfol/localfol.hpp"
#include "linkfol/parse.hpp"
#include "linkfol/report.hpp"
#include "linkfol/riccati.hpp"

namespace linkfol {

enum class SurfaceKind { ProjectivePlane, QuadricProduct, BlowupTower };

/// Defining polynomial of one cycle curve in one chart where it is visible.
struct CurveChart {
    std::string curve_id;
    std::string chart;
    Poly2 poly;
};

/// A corner of the invariant cycle, anchored in a chart where both local
/// branches are coordinate axes through the given point.
struct Corner {
    std::string point_id;
    std::string chart;
    std::pair<QuadraticNumber, QuadraticNumber> at;
    std::string curve_on_x_axis;  // branch {y = at.second}
    std::string curve_on_y_axis;  // branch {x = at.first}
};

/// Automorphism stored chart-wise: one rational expression per source chart,
/// each landing in a fixed target chart.
struct Automorphism {
    std::string name;
    int expected_order = 0;
    std::vector<RationalMap2> charts;

    const RationalMap2* from_chart(const std::string& source) const;
};

/// A surface atlas with a 1-form per chart, the invariant cycle with its
/// per-chart equations and corner anchors, and the model automorphisms.
struct FoliationModel {
    std::string name;
    SurfaceKind surface = SurfaceKind::ProjectivePlane;
    std::vector<std::string> charts;
    std::map<std::string, OneForm> forms;
    std::vector<RationalMap2> transitions;
    CurveConfig cycle;
    std::vector<CurveChart> curve_charts;
    std::vector<Corner> corners;
    std::vector<Automorphism> automorphisms;
    ConstantEnv constants;

    // Pencil data for the symbolic invariance condition: in pencil_chart the
    // family w(t) = t*eta1 + eta0 must satisfy
    // wedge(w(t), pencil_map^* w(t)) = m * (sum_i pencil_condition[i] t^i).
    std::string pencil_chart;
    Poly2 pencil_A1, pencil_B1, pencil_A0, pencil_B0;
    RationalMap2 pencil_map;
    std::array<Rational, 3> pencil_condition{Rational(0), Rational(0), Rational(0)};

    // Present for models whose two sign choices are conjugated by a swap.
    std::optional<OneForm> conjugate_sign_form;
    std::optional<RationalMap2> sign_swap_map;

    const OneForm& form_in(const std::string& chart) const;
};

/// The linear model on the projective plane: w = L y dx - x dy with
/// L = (1 + sign*sqrt(-3))/2, its cycle of three +1 lines, and the
/// coordinate rotation of order three.
FoliationModel build_L(int sign = +1);

/// The model on the product of two projective lines: w = L y dx - x dy with
/// L = sign*sqrt(-1), its cycle of four 0-lines, and the order-four
/// automorphism swapping the factors.
FoliationModel build_M(int sign = +1);

/// The blow-up of build_L at the three corners of its cycle: six (-1)-curves
/// and the order-six automorphism lifting the Cremona involution composed
/// with the coordinate rotation.
FoliationModel build_N();

/// The standard quadratic involution of the plane in the affine chart:
/// (x, y) -> (1/x, 1/y).
RationalMap2 build_cremona();

/// Order of the automorphism by iterated composition of its chart
/// expressions, or 0 if the bound is exceeded.
int automorphism_order(const FoliationModel& model, const Automorphism& aut, int bound = 12);

/// The permutation the automorphism induces on the cycle curves, as a map
/// curve id -> curve id (computed from the defining polynomials).
std::map<std::string, std::string> cycle_permutation(const FoliationModel& model,
                                                     const Automorphism& aut);

/// Run every checkable claim about the model and report exact evidence.
VerificationReport verify_model(const FoliationModel& model);

using Mat2 = std::array<std::array<QuadraticNumber, 2>, 2>;
using Mat3 = std::array<std::array<QuadraticNumber, 3>, 3>;

Mat3 mat3_mul(const Mat3& a, const Mat3& b);
QuadraticNumber mat3_det(const Mat3& a);
bool mat3_equal(const Mat3& a, const Mat3& b);
/// a == c*b for some nonzero scalar c in the field.
bool mat3_proportional(const Mat3& a, const Mat3& b);

/// The cyclic coordinate rotation [z1:z2:z3] -> [z3:z1:z2] as a matrix.
Mat3 gamma_matrix();

/// For J of the shape [0 0 x; y 0 0; 0 z 0] (the projective maps cyclically
/// permuting the three coordinate points), produce an invertible A with
/// A*J = gamma*A, after normalizing x*y*z to 1 by an exact rational cube
/// root. Verified by exact matrix arithmetic before returning.
Mat3 conjugate_to_gamma(const Mat3& J);

/// Automorphism of the product of two projective lines: factor maps P, Q
/// plus whether the factors are swapped. Action: (w, z) -> (P z, Q w) when
/// swapping, (P w, Q z) otherwise.
struct ProductAut {
    Mat2 P, Q;
    bool swaps_factors = false;
};

ProductAut product_compose(const ProductAut& f, const ProductAut& g);
ProductAut product_inverse(const ProductAut& f);
bool product_equal(const ProductAut& a, const ProductAut& b);  // projective equality

/// The order-four automorphism (z1:z2, z3:z4) -> (z4:z3, z1:z2).
ProductAut beta_aut();

/// For J cyclically permuting the four marked points ((1:0),(1:0)),
/// ((0:1),(1:0)), ((0:1),(0:1)), ((1:0),(0:1)), produce g with
/// g J g^{-1} = beta. Needs one exact square root; verified by direct
/// composition before returning.
ProductAut conjugate_to_beta(const ProductAut& J);

} // namespace linkfol

#endif
