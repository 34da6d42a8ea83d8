#include "linkfol/riccati.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace linkfol {

namespace {
void require_univariate_x(const Poly2& p, const char* name) {
    if (p.deg_y() != 0)
        throw Error(std::string("Riccati coefficient ") + name + " must be univariate in x");
}
} // namespace

RiccatiForm::RiccatiForm(Poly2 a_, Poly2 b_, Poly2 c_, Poly2 h_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), h(std::move(h_)) {
    require_univariate_x(a, "a");
    require_univariate_x(b, "b");
    require_univariate_x(c, "c");
    require_univariate_x(h, "h");
    if (h.is_zero()) throw Error("degenerate Riccati form: h = 0");
}

OneForm RiccatiForm::to_form() const {
    Poly2 Y = Poly2::variable(1);
    Poly2 A = a * Y * Y + b * Y + c;
    return OneForm(A, h);
}

std::optional<RiccatiForm> recognize_riccati(const OneForm& w) {
    if (w.A().deg_y() > 2 || w.B().deg_y() != 0 || w.B().is_zero()) return std::nullopt;
    return RiccatiForm(w.A().coeff_of_y_power(2), w.A().coeff_of_y_power(1),
                       w.A().coeff_of_y_power(0), w.B());
}

int fibre_multiplicity(const RiccatiForm& r) {
    QuadraticNumber zero(0);
    if (!r.h.eval(zero, zero).is_zero())
        throw NotInvariantFibre("h(0) != 0: the fibre {x = 0} is not invariant");
    return r.h.min_deg_x();
}

RiccatiForm flip_fibre(const RiccatiForm& r) {
    int mult = fibre_multiplicity(r);
    if (mult <= 1) throw PreconditionFailed("fibre multiplicity is not > 1");
    QuadraticNumber zero(0);
    if (!r.b.eval(zero, zero).is_zero()) throw PreconditionFailed("b(0) != 0");
    if (!r.c.eval(zero, zero).is_zero()) throw PreconditionFailed("c(0) != 0");
    if (!r.c.partial(0).eval(zero, zero).is_zero()) throw PreconditionFailed("c'(0) != 0");
    if (r.a.eval(zero, zero).is_zero()) throw PreconditionFailed("a(0) = 0");

    // Substitute y -> x*y into (a y^2 + b y + c) dx + h dy and divide the
    // exceptional x^2 out; the dy-coefficient becomes x*h / x^2 = h/x.
    Poly2 X = Poly2::variable(0), Y = Poly2::variable(1);
    Poly2 A = r.a * X * X * Y * Y + r.b * X * Y + r.c + r.h * Y;
    Poly2 B = X * r.h;
    Poly2 X2 = X * X;
    OneForm flipped(poly_exact_div(A, X2), poly_exact_div(B, X2));
    auto out = recognize_riccati(flipped);
    if (!out) throw Error("fibre flip left the Riccati normal form unexpectedly");
    return *out;
}

bool contracts_to_zero_curve(const CurveConfig& sub) {
    std::map<std::uint64_t, bool> memo;
    auto rec = [&](auto&& self, const CurveConfig& cfg) -> bool {
        if (cfg.curves.size() == 1) {
            const Curve& c = cfg.curves.front();
            return c.self_intersection == 0 && c.is_rational && !cfg.has_self_crossing(c.id);
        }
        std::uint64_t h = config_hash(cfg);
        auto it = memo.find(h);
        if (it != memo.end()) return it->second;
        memo[h] = false;
        for (const auto& c : cfg.curves) {
            if (c.self_intersection != -1 || !c.is_rational || cfg.has_self_crossing(c.id))
                continue;
            if (self(self, blow_down_config(cfg, c.id))) {
                memo[h] = true;
                return true;
            }
        }
        return false;
    };
    if (sub.curves.empty()) return false;
    return rec(rec, sub);
}

bool fibre_support_check(const CurveConfig& config, const std::vector<std::string>& cycle,
                         const std::vector<std::string>& fibre_candidate,
                         const std::vector<std::string>& regular_fibre) {
    for (const auto& id : cycle)
        if (!config.has_curve(id)) throw UnknownIds("cycle curve '" + id + "' not in config");
    for (const auto& id : fibre_candidate)
        if (!config.has_curve(id)) throw UnknownIds("candidate curve '" + id + "' not in config");
    for (const auto& id : regular_fibre)
        if (!config.has_curve(id)) throw UnknownIds("fibre curve '" + id + "' not in config");

    if (fibre_candidate.empty()) return false;
    for (const auto& id : fibre_candidate)
        if (std::find(cycle.begin(), cycle.end(), id) == cycle.end()) return false;

    std::vector<std::string> cand = fibre_candidate, reg = regular_fibre;
    std::sort(cand.begin(), cand.end());
    std::sort(reg.begin(), reg.end());
    bool self_case = cand == reg;
    if (!self_case && !reg.empty()) {
        for (const auto& id : cand)
            if (std::binary_search(reg.begin(), reg.end(), id)) return false;
        for (const auto& a : cand)
            for (const auto& b : reg)
                if (config.crossings_between(a, b) > 0) return false;
    }

    // Connectivity inside the candidate.
    std::set<std::string> todo(cand.begin(), cand.end()), seen;
    std::deque<std::string> bfs{*todo.begin()};
    seen.insert(bfs.front());
    while (!bfs.empty()) {
        std::string cur = bfs.front();
        bfs.pop_front();
        for (const auto& other : todo)
            if (!seen.count(other) && config.crossings_between(cur, other) > 0) {
                seen.insert(other);
                bfs.push_back(other);
            }
    }
    if (seen.size() != cand.size()) return false;

    return contracts_to_zero_curve(induced_subconfig(config, fibre_candidate));
}

namespace {

// All connected subsets of the allowed curves (each sorted by id).
std::vector<std::vector<std::string>> connected_subsets(const CurveConfig& config,
                                                        const std::vector<std::string>& allowed) {
    std::vector<std::vector<std::string>> out;
    std::set<std::vector<std::string>> seen;
    std::deque<std::vector<std::string>> queue;
    std::vector<std::string> sorted_allowed = allowed;
    std::sort(sorted_allowed.begin(), sorted_allowed.end());
    for (const auto& id : sorted_allowed) {
        queue.push_back({id});
        seen.insert({id});
    }
    while (!queue.empty()) {
        auto s = queue.front();
        queue.pop_front();
        out.push_back(s);
        for (const auto& id : sorted_allowed) {
            if (std::binary_search(s.begin(), s.end(), id)) continue;
            bool adjacent = false;
            for (const auto& member : s)
                if (config.crossings_between(id, member) > 0) {
                    adjacent = true;
                    break;
                }
            if (!adjacent) continue;
            auto t = s;
            t.insert(std::lower_bound(t.begin(), t.end(), id), id);
            if (seen.insert(t).second) queue.push_back(t);
        }
    }
    return out;
}

} // namespace

std::optional<std::string> find_unsupported_crossing(
    const CurveConfig& config, const std::optional<std::string>& designated_fibre) {
    std::vector<std::string> all_ids;
    for (const auto& c : config.curves) all_ids.push_back(c.id);

    std::vector<std::string> allowed;
    if (designated_fibre) {
        auto nbs = config.neighbours(*designated_fibre);
        for (const auto& id : all_ids) {
            if (id == *designated_fibre) continue;
            if (std::find(nbs.begin(), nbs.end(), id) != nbs.end()) continue;
            allowed.push_back(id);
        }
    } else {
        allowed = all_ids;
    }
    auto subsets = connected_subsets(config, allowed);

    std::vector<const Crossing*> points;
    for (const auto& x : config.crossings) {
        if (designated_fibre && (x.a == *designated_fibre || x.b == *designated_fibre)) continue;
        points.push_back(&x);
    }
    std::sort(points.begin(), points.end(),
              [](const Crossing* a, const Crossing* b) { return a->point_id < b->point_id; });

    std::vector<std::string> reg;
    if (designated_fibre) reg.push_back(*designated_fibre);

    for (const Crossing* q : points) {
        bool supported = false;
        for (const auto& s : subsets) {
            if (!std::binary_search(s.begin(), s.end(), q->a) &&
                !std::binary_search(s.begin(), s.end(), q->b))
                continue;
            if (designated_fibre) {
                // A curve meeting the candidate but not contained in it is
                // horizontal, so it must meet the designated fibre too.
                bool closure_ok = true;
                for (const auto& id : all_ids) {
                    if (std::binary_search(s.begin(), s.end(), id)) continue;
                    bool meets = false;
                    for (const auto& member : s)
                        if (config.crossings_between(id, member) > 0) {
                            meets = true;
                            break;
                        }
                    if (meets && config.crossings_between(id, *designated_fibre) == 0) {
                        closure_ok = false;
                        break;
                    }
                }
                if (!closure_ok) continue;
            }
            if (!fibre_support_check(config, all_ids, s, reg)) continue;
            supported = true;
            break;
        }
        if (!supported) return q->point_id;
    }
    return std::nullopt;
}

namespace {

// Shape classification of a search state.
struct StateShape {
    bool is_link = false;       // one curve with a node
    bool is_cycle = false;
    std::vector<int> cycle_ints;  // self-intersections in cycle order
};

StateShape classify_state(const CurveConfig& cfg) {
    StateShape out;
    if (cfg.curves.size() == 1 && cfg.has_self_crossing(cfg.curves.front().id)) {
        out.is_link = cfg.crossings.size() == 1;
        return out;
    }
    // Walk the cycle. Every curve must have exactly two crossing slots.
    for (const auto& c : cfg.curves) {
        if (cfg.valence(c.id) != 2 || cfg.has_self_crossing(c.id)) return out;
    }
    if (cfg.curves.size() == 2) {
        if (cfg.crossings.size() != 2) return out;
        out.is_cycle = true;
        out.cycle_ints = {cfg.curves[0].self_intersection, cfg.curves[1].self_intersection};
        return out;
    }
    std::string start = cfg.curves.front().id;
    std::vector<std::string> order{start};
    std::string prev, cur = start;
    while (true) {
        auto nbs = cfg.neighbours(cur);
        if (nbs.size() != 2) return out;
        std::string next = (nbs[0] == prev) ? nbs[1] : nbs[0];
        if (next == start) break;
        if (order.size() > cfg.curves.size()) return out;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    if (order.size() != cfg.curves.size()) return out;
    out.is_cycle = true;
    for (const auto& id : order) out.cycle_ints.push_back(cfg.find_curve(id)->self_intersection);
    return out;
}

std::string cycle_signature(const std::vector<int>& ints) {
    auto render = [](const std::vector<int>& v) {
        std::string s;
        for (int x : v) s += std::to_string(x) + ",";
        return s;
    };
    std::vector<int> best;
    std::vector<int> cur = ints;
    for (int refl = 0; refl < 2; ++refl) {
        for (std::size_t r = 0; r < cur.size(); ++r) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (best.empty() || render(cur) < render(best)) best = cur;
        }
        std::reverse(cur.begin(), cur.end());
    }
    return render(best);
}

std::string state_key(const CurveConfig& cfg) {
    StateShape shape = classify_state(cfg);
    if (shape.is_link)
        return "link:" + std::to_string(cfg.curves.front().self_intersection);
    if (shape.is_cycle) return "cycle:" + cycle_signature(shape.cycle_ints);
    return "other:" + std::to_string(config_hash(cfg));
}

struct Verdict {
    bool conclusive = false;
    bool feasible = false;
    std::string verdict;
    std::string detail;
};

Verdict conclusive_verdict(const CurveConfig& cfg) {
    StateShape shape = classify_state(cfg);
    if (shape.is_link) {
        int n = cfg.curves.front().self_intersection;
        if (n >= 1 && n <= 3)
            return {true, true, "link-model",
                    "contracts to a nodal rational curve of self-intersection " +
                        std::to_string(n) + ", realized by the model foliations"};
        return {};
    }
    if (!shape.is_cycle) return {};

    bool all_zero = std::all_of(shape.cycle_ints.begin(), shape.cycle_ints.end(),
                                [](int v) { return v == 0; });
    if (all_zero) {
        if (shape.cycle_ints.size() % 2 == 0)
            return {true, true, "all-zero-even-cycle",
                    "alternate curves form the fibres of a rational fibration; the "
                    "assignment closes up because the cycle length is even"};
        return {true, false, "all-zero-odd-cycle",
                "propagating fibres around the cycle forces the designated fibre to "
                "meet itself; an odd cycle of fibres cannot close up"};
    }
    if (shape.cycle_ints.size() == 3 && std::all_of(shape.cycle_ints.begin(),
                                                    shape.cycle_ints.end(),
                                                    [](int v) { return v == 1; }))
        return {true, true, "plane-model-cycle",
                "the cycle of three +1 lines invariant under the linear plane model"};

    for (const auto& c : cfg.curves) {
        if (c.self_intersection != 0) continue;
        if (auto q = find_unsupported_crossing(cfg, c.id))
            return {true, false, "no-fibre-through-point",
                    "with '" + c.id +
                        "' as a regular fibre, no admissible fibre passes through crossing '" +
                        *q + "'"};
    }
    return {};
}

} // namespace

CurveConfig replay_steps(const CurveConfig& initial, const std::vector<SurgeryStep>& steps) {
    CurveConfig cfg = initial;
    for (const auto& s : steps) {
        if (config_hash(cfg) != s.before_hash)
            throw Error("trace replay: configuration hash mismatch before step " + s.op);
        cfg = s.op == "blow_up" ? blow_up_config(cfg, s.arg) : blow_down_config(cfg, s.arg);
        if (config_hash(cfg) != s.after_hash)
            throw Error("trace replay: configuration hash mismatch after step " + s.op);
    }
    return cfg;
}

FeasibilityReport kl_cycle_feasible(const CycleSpec& spec) {
    if (spec.k < 2) throw Error("a (k,l)-cycle needs k > 1");
    CurveConfig initial = make_cycle_config(spec.k, spec.l);

    struct Node {
        CurveConfig cfg;
        std::vector<SurgeryStep> steps;
        int depth = 0;
        int blowups = 0;
    };
    const int max_depth = 2 * (spec.k + std::abs(spec.l) + 4);
    const int blowup_budget = std::abs(spec.l) + 2;
    const std::size_t state_cap = 30000;
    const std::size_t length_cap = static_cast<std::size_t>(spec.k + std::abs(spec.l) + 6);

    std::deque<Node> queue;
    std::set<std::string> visited;
    queue.push_back(Node{initial, {}, 0, 0});
    visited.insert(state_key(initial) + "#0");

    FeasibilityReport report;
    report.spec = spec;
    report.initial = initial;

    std::size_t popped = 0;
    while (!queue.empty() && popped < state_cap) {
        Node node = std::move(queue.front());
        queue.pop_front();
        ++popped;

        Verdict v = conclusive_verdict(node.cfg);
        if (v.conclusive) {
            report.feasible = v.feasible;
            report.verdict = v.verdict;
            report.detail = v.detail;
            report.steps = node.steps;
            report.final_config = node.cfg;
            return report;
        }
        if (node.depth >= max_depth) continue;

        auto push_child = [&](CurveConfig child, const std::string& op, const std::string& arg,
                              int blowups) {
            if (child.curves.size() > length_cap) return;
            std::string key = state_key(child) + "#" + std::to_string(blowups);
            if (!visited.insert(key).second) return;
            SurgeryStep step{op, arg, config_hash(node.cfg), config_hash(child)};
            auto steps = node.steps;
            steps.push_back(step);
            queue.push_back(Node{std::move(child), std::move(steps), node.depth + 1, blowups});
        };

        for (const auto& c : node.cfg.curves) {
            if (c.self_intersection != -1 || !c.is_rational ||
                node.cfg.has_self_crossing(c.id))
                continue;
            push_child(blow_down_config(node.cfg, c.id), "blow_down", c.id, node.blowups);
        }
        if (node.blowups < blowup_budget) {
            for (const auto& x : node.cfg.crossings)
                push_child(blow_up_config(node.cfg, x.point_id), "blow_up", x.point_id,
                           node.blowups + 1);
        }
    }

    report.feasible = false;
    report.verdict = "search-exhausted";
    report.detail = "no surgery sequence reaches a configuration carrying a rational "
                    "fibration compatible with the cycle";
    report.final_config = initial;
    return report;
}

FeasibilityReport not_riccati_witness(int n) {
    if (n < 1 || n > 3) throw Error("not_riccati_witness expects n in {1, 2, 3}");
    CurveConfig link = make_link_config(n);
    CurveConfig blown = blow_up_config(link, "p1");

    FeasibilityReport report;
    report.spec = CycleSpec{2, 0};  // the blown-up node is a 2-cycle, mixed self-intersections
    report.initial = link;
    report.steps.push_back(
        SurgeryStep{"blow_up", "p1", config_hash(link), config_hash(blown)});
    report.final_config = blown;
    report.feasible = false;

    auto q = find_unsupported_crossing(blown, std::nullopt);
    if (!q) throw Error("expected an unsupported crossing on the blown-up link");
    report.verdict = "no-fibre-through-point";
    report.detail = "after blowing up the node, no connected union of cycle curves through "
                    "crossing '" + *q + "' contracts to a fibre; a Riccati structure is impossible";
    return report;
}

} // namespace linkfol
