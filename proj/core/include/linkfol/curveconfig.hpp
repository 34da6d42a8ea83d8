#ifndef LINKFOL_CURVECONFIG_HPP
#define LINKFOL_CURVECONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkfol/exactnum.hpp"

namespace linkfol {

struct Curve {
    std::string id;
    int self_intersection = 0;
    bool is_rational = true;
    bool is_invariant = true;
};

/// A crossing between two curves; a == b encodes a node (self-crossing).
/// The optional lambda annotation records one of the two eigenvalue
/// quotients of the corner singularity sitting at the point.
struct Crossing {
    std::string a, b;
    std::string point_id;
    std::optional<QuadraticNumber> lambda;
};

/// Weighted configuration of curves on a surface: self-intersections plus
/// the combinatorics of their crossings.
struct CurveConfig {
    std::vector<Curve> curves;
    std::vector<Crossing> crossings;

    const Curve* find_curve(const std::string& id) const;
    Curve* find_curve(const std::string& id);
    const Crossing* find_crossing_at(const std::string& point_id) const;
    bool has_curve(const std::string& id) const { return find_curve(id) != nullptr; }

    /// Number of crossings whose endpoints are exactly {a, b}.
    int crossings_between(const std::string& a, const std::string& b) const;
    /// Ids of curves sharing a crossing with the given one (no duplicates).
    std::vector<std::string> neighbours(const std::string& id) const;
    /// Crossing count involving the curve (self-crossings count twice).
    int valence(const std::string& id) const;
    bool has_self_crossing(const std::string& id) const;

    std::string fresh_curve_id(const std::string& prefix = "E") const;
    std::string fresh_point_id() const;
};

/// One rational curve with a node and self-intersection n (the verification
/// target's standard configuration). The node carries the quotient
/// annotation for the given n when annotate is set.
CurveConfig make_link_config(int n, bool annotate = true);

/// Cycle of k smooth rational curves, each of self-intersection l.
CurveConfig make_cycle_config(int k, int l);

/// Blow up the point of the given crossing. Each smooth branch through the
/// point costs its curve 1 of self-intersection (a node costs 4); the new
/// exceptional curve E has E^2 = -1 and crosses each branch once. Known
/// corner annotations are transported (lambda -> lambda - 1 on the side of
/// the annotated branch, 1/lambda - 1 on the other).
CurveConfig blow_up_config(const CurveConfig& config, const std::string& point_id);

/// Blow up a smooth point of one curve: self-intersection drops by 1 and E
/// crosses the strict transform once.
CurveConfig blow_up_smooth_point(const CurveConfig& config, const std::string& curve_id);

/// Contract a (-1)-curve: every pair of branches that met it becomes a
/// crossing of their curves (a node when they belong to the same curve) and
/// a curve meeting it j times gains j^2.
CurveConfig blow_down_config(const CurveConfig& config, const std::string& curve_id);

using IntMatrix = std::vector<std::vector<long long>>;

/// Symmetric intersection matrix in the order of config.curves. The diagonal
/// is the stored self-intersection; self-crossings are combinatorial data
/// (arithmetic genus), not matrix entries.
IntMatrix intersection_matrix(const CurveConfig& config);

/// Exact leading principal minors det(M_k), k = 1..n.
std::vector<BigInt> leading_principal_minors(const IntMatrix& m);

/// Negative definiteness decided exactly: (-1)^k det(M_k) > 0 for all k.
bool grauert_is_contractible(const IntMatrix& m);

/// The configuration reached from a link of self-intersection n > 4 by
/// blowing up the node and then n-4 further crossing points on the strict
/// transform. choices[i] selects which of the two exceptional crossings on
/// the strict transform is blown up at step i+2 (false = the freshest).
/// Yields the strict transform "C" with C^2 = 0 and a chain of n-3
/// exceptional curves of self-intersections -1, -2, ..., -2.
CurveConfig build_exceptional_chain(int n, const std::vector<bool>& choices = {});

/// Ids of the exceptional chain of build_exceptional_chain(n), ordered from
/// the (-1)-curve inward.
std::vector<std::string> exceptional_chain_ids(const CurveConfig& config);

/// Restriction to a subset of curves (keeps crossings with both ends inside).
CurveConfig induced_subconfig(const CurveConfig& config, const std::vector<std::string>& ids);

/// Line-based text format:
///   curve <id> self=<int> rational=<0|1> invariant=<0|1>
///   cross <id1> <id2> point=<pid> [lambda=<expr>]
std::string config_to_text(const CurveConfig& config);
CurveConfig parse_config(const std::string& text);

/// FNV-1a hash of the canonical serialization; stable across runs.
std::uint64_t config_hash(const CurveConfig& config);

/// Equality of the weighted configurations, ignoring point labels.
bool same_configuration(const CurveConfig& a, const CurveConfig& b);

} // namespace linkfol

#endif
