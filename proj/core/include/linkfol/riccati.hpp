#ifndef LINKFOL_RICCATI_HPP
#define LINKFOL_RICCATI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkfol/curveconfig.hpp"
#include "linkfol/forms.hpp"

namespace linkfol {

/// The 1-form (a(x) y^2 + b(x) y + c(x)) dx + h(x) dy of a foliation
/// transverse to the generic fibre of a fibration, near the invariant fibre
/// {x = 0}. h must not vanish identically.
struct RiccatiForm {
    Poly2 a, b, c, h;  // univariate in x

    RiccatiForm(Poly2 a_, Poly2 b_, Poly2 c_, Poly2 h_);
    OneForm to_form() const;
};

/// Reads the Riccati coefficients off a form when the dx-coefficient has
/// y-degree at most 2 and the dy-coefficient is y-free.
std::optional<RiccatiForm> recognize_riccati(const OneForm& w);

/// Order of vanishing of h at x = 0; the fibre {x = 0} must be invariant
/// (h(0) = 0).
int fibre_multiplicity(const RiccatiForm& r);

/// One fibre flip: blow up the origin and collapse the strict transform of
/// the fibre, realized as the substitution y -> x*y followed by reduction.
/// Requires multiplicity > 1 and a trivial linear part at the origin
/// (b(0) = c(0) = c'(0) = 0, a(0) != 0). Strictly decreases the
/// multiplicity.
RiccatiForm flip_fibre(const RiccatiForm& r);

/// Whether fibre_candidate could be a fibre of a rational fibration having
/// regular_fibre as another fibre: contained in the cycle, connected,
/// disjoint from regular_fibre (unless equal to it), and contractible to a
/// single smooth rational curve of self-intersection zero by repeated
/// (-1)-contractions. regular_fibre may be empty when no fibre has been
/// designated.
bool fibre_support_check(const CurveConfig& config, const std::vector<std::string>& cycle,
                         const std::vector<std::string>& fibre_candidate,
                         const std::vector<std::string>& regular_fibre = {});

/// True when the configuration restricted to the given curves contracts to a
/// single smooth rational 0-curve (the shape of a fibre).
bool contracts_to_zero_curve(const CurveConfig& sub);

/// Search for a crossing point that no admissible fibre can pass through.
/// With a designated regular fibre the candidates must avoid it and its
/// neighbours and satisfy the horizontal-curve closure constraint; without
/// one, only support and contractibility are required. Returns the point id
/// of an unsupported crossing, or nothing.
std::optional<std::string> find_unsupported_crossing(
    const CurveConfig& config, const std::optional<std::string>& designated_fibre);

struct CycleSpec {
    int k = 0;  // number of curves, > 1
    int l = 0;  // common self-intersection
};

struct SurgeryStep {
    std::string op;   // "blow_up" (point id) or "blow_down" (curve id)
    std::string arg;
    std::uint64_t before_hash = 0;
    std::uint64_t after_hash = 0;
};

/// Outcome of the feasibility analysis, with a replayable surgery trace from
/// the initial configuration to the configuration where the verdict fired.
struct FeasibilityReport {
    CycleSpec spec;
    bool feasible = false;
    std::string verdict;  // "all-zero-even-cycle", "plane-model-cycle", "link-model",
                          // "all-zero-odd-cycle", "no-fibre-through-point", "search-exhausted"
    std::string detail;
    std::vector<SurgeryStep> steps;
    CurveConfig initial;
    CurveConfig final_config;
};

/// Replay the steps of a report from its initial configuration, verifying
/// the recorded hashes; returns the final configuration.
CurveConfig replay_steps(const CurveConfig& initial, const std::vector<SurgeryStep>& steps);

/// Decides whether a cycle of k > 1 smooth rational curves of constant
/// self-intersection l, invariant with reduced nondegenerate corners, can
/// exist on some surface: bounded surgery search that either reaches a
/// configuration known to be realized (all-zero even cycle, the cycle of
/// three +1 lines, a link of self-intersection 1, 2 or 3) or finds a
/// crossing that no fibre of the forced rational fibration can pass
/// through.
FeasibilityReport kl_cycle_feasible(const CycleSpec& spec);

/// Blow up the node of the self-intersection-n link (n = 1, 2, 3) and
/// exhaust fibre candidates through the resulting crossings, producing the
/// obstruction that rules out a Riccati structure.
FeasibilityReport not_riccati_witness(int n);

} // namespace linkfol

#endif
