#ifndef LINKFOL_BLOWUP_HPP
#define LINKFOL_BLOWUP_HPP

#include <string>

#include "linkfol/forms.hpp"

namespace linkfol {

/// Result of blowing up a 1-form at the chart origin.
///
/// Chart 1 has coordinates (u, v) with x = u, y = u*v and exceptional divisor
/// {u = 0}; chart 2 has (s, t) with x = s*t, y = t and exceptional divisor
/// {t = 0}. Both pulled-back forms are reduced by the maximal power of the
/// exceptional coordinate; that power is the multiplicity. The two charts
/// glue under (u, v) = (s*t, 1/s).
struct BlowupResult {
    int multiplicity = 0;
    OneForm chart1_form;
    OneForm chart2_form;
    bool dicritical = false;
};

/// Blow up w at the origin of its chart. The origin must be a singular point
/// unless allow_regular is set (the regular case is legal and produces an
/// invariant exceptional divisor with a single node-type singularity on it).
/// Callers translate first to blow up elsewhere.
BlowupResult blow_up_form(const OneForm& w, bool allow_regular = false,
                          std::string chart1 = "", std::string chart2 = "");

/// The transition map from chart 2 to chart 1 of a blow-up:
/// (s, t) -> (u, v) = (s*t, 1/s).
RationalMap2 blowup_chart_transition(const std::string& chart2 = "",
                                     const std::string& chart1 = "");

} // namespace linkfol

#endif
