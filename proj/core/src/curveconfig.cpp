#include "linkfol/curveconfig.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "linkfol/parse.hpp"

namespace linkfol {

const Curve* CurveConfig::find_curve(const std::string& id) const {
    for (const auto& c : curves)
        if (c.id == id) return &c;
    return nullptr;
}

Curve* CurveConfig::find_curve(const std::string& id) {
    for (auto& c : curves)
        if (c.id == id) return &c;
    return nullptr;
}

const Crossing* CurveConfig::find_crossing_at(const std::string& point_id) const {
    for (const auto& x : crossings)
        if (x.point_id == point_id) return &x;
    return nullptr;
}

int CurveConfig::crossings_between(const std::string& a, const std::string& b) const {
    int n = 0;
    for (const auto& x : crossings)
        if ((x.a == a && x.b == b) || (x.a == b && x.b == a)) ++n;
    return n;
}

std::vector<std::string> CurveConfig::neighbours(const std::string& id) const {
    std::vector<std::string> out;
    auto push = [&](const std::string& c) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    };
    for (const auto& x : crossings) {
        if (x.a == id && x.b != id) push(x.b);
        if (x.b == id && x.a != id) push(x.a);
    }
    return out;
}

int CurveConfig::valence(const std::string& id) const {
    int n = 0;
    for (const auto& x : crossings) {
        if (x.a == id) ++n;
        if (x.b == id) ++n;
    }
    return n;
}

bool CurveConfig::has_self_crossing(const std::string& id) const {
    for (const auto& x : crossings)
        if (x.a == id && x.b == id) return true;
    return false;
}

namespace {
std::string fresh_id(const std::set<std::string>& used, const std::string& prefix) {
    for (int k = 1;; ++k) {
        std::string cand = prefix + std::to_string(k);
        if (!used.count(cand)) return cand;
    }
}
} // namespace

std::string CurveConfig::fresh_curve_id(const std::string& prefix) const {
    std::set<std::string> used;
    for (const auto& c : curves) used.insert(c.id);
    return fresh_id(used, prefix);
}

std::string CurveConfig::fresh_point_id() const {
    std::set<std::string> used;
    for (const auto& x : crossings) used.insert(x.point_id);
    return fresh_id(used, "p");
}

CurveConfig make_link_config(int n, bool annotate) {
    CurveConfig cfg;
    cfg.curves.push_back(Curve{"C", n, true, true});
    Crossing node{"C", "C", "p1", std::nullopt};
    if (annotate) node.lambda = solve_monic_quadratic(Rational(2 - n), Rational(1)).first;
    cfg.crossings.push_back(node);
    return cfg;
}

CurveConfig make_cycle_config(int k, int l) {
    if (k < 2) throw Error("a cycle needs more than one curve");
    CurveConfig cfg;
    for (int i = 1; i <= k; ++i)
        cfg.curves.push_back(Curve{"C" + std::to_string(i), l, true, true});
    for (int i = 1; i <= k; ++i) {
        std::string a = "C" + std::to_string(i);
        std::string b = "C" + std::to_string(i % k + 1);
        cfg.crossings.push_back(Crossing{a, b, "p" + std::to_string(i), std::nullopt});
    }
    return cfg;
}

CurveConfig blow_up_config(const CurveConfig& config, const std::string& point_id) {
    const Crossing* at = config.find_crossing_at(point_id);
    if (!at) throw UnknownPoint("no crossing at point '" + point_id + "'");

    CurveConfig out = config;
    Crossing cr = *at;
    out.crossings.erase(
        std::find_if(out.crossings.begin(), out.crossings.end(),
                     [&](const Crossing& x) { return x.point_id == point_id; }));

    bool node = cr.a == cr.b;
    if (node) {
        out.find_curve(cr.a)->self_intersection -= 4;
    } else {
        out.find_curve(cr.a)->self_intersection -= 1;
        out.find_curve(cr.b)->self_intersection -= 1;
    }

    std::string e = out.fresh_curve_id();
    bool carry = cr.lambda && !cr.lambda->is_zero() && *cr.lambda != QuadraticNumber(1);
    bool dicritical = cr.lambda && *cr.lambda == QuadraticNumber(1);
    out.curves.push_back(Curve{e, -1, true, !dicritical});

    Crossing xa{e, cr.a, out.fresh_point_id(), std::nullopt};
    if (carry) xa.lambda = *cr.lambda - QuadraticNumber(1);
    out.crossings.push_back(xa);
    Crossing xb{e, cr.b, out.fresh_point_id(), std::nullopt};
    if (carry) xb.lambda = cr.lambda->inv() - QuadraticNumber(1);
    out.crossings.push_back(xb);
    return out;
}

CurveConfig blow_up_smooth_point(const CurveConfig& config, const std::string& curve_id) {
    if (!config.has_curve(curve_id)) throw UnknownPoint("no curve '" + curve_id + "'");
    CurveConfig out = config;
    out.find_curve(curve_id)->self_intersection -= 1;
    std::string e = out.fresh_curve_id();
    out.curves.push_back(Curve{e, -1, true, true});
    out.crossings.push_back(Crossing{e, curve_id, out.fresh_point_id(), std::nullopt});
    return out;
}

CurveConfig blow_down_config(const CurveConfig& config, const std::string& curve_id) {
    const Curve* c = config.find_curve(curve_id);
    if (!c) throw UnknownIds("no curve '" + curve_id + "'");
    if (!c->is_rational || c->self_intersection != -1 || config.has_self_crossing(curve_id))
        throw NotContractible("'" + curve_id +
                              "' is not a smooth rational (-1)-curve without self-crossings");

    CurveConfig out;
    for (const auto& cv : config.curves)
        if (cv.id != curve_id) out.curves.push_back(cv);
    std::vector<std::string> branches;  // other endpoints of crossings through E, in order
    for (const auto& x : config.crossings) {
        if (x.a != curve_id && x.b != curve_id) {
            out.crossings.push_back(x);
            continue;
        }
        branches.push_back(x.a == curve_id ? x.b : x.a);
    }
    for (const auto& b : branches) {
        // j crossings with E contribute j^2 in total: 1 per branch plus 2 per
        // unordered pair, handled below.
        out.find_curve(b)->self_intersection += 1;
    }
    for (std::size_t i = 0; i < branches.size(); ++i) {
        for (std::size_t j = i + 1; j < branches.size(); ++j) {
            // A curve meeting E j times gains j^2 in total: 1 per branch
            // (added above) plus 2 per unordered pair of its own branches.
            if (branches[i] == branches[j])
                out.find_curve(branches[i])->self_intersection += 2;
            out.crossings.push_back(
                Crossing{branches[i], branches[j], out.fresh_point_id(), std::nullopt});
        }
    }
    return out;
}

IntMatrix intersection_matrix(const CurveConfig& config) {
    std::size_t n = config.curves.size();
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = config.curves[i].self_intersection;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            long long k = config.crossings_between(config.curves[i].id, config.curves[j].id);
            m[i][j] = m[j][i] = k;
        }
    return m;
}

namespace {
BigInt det_bareiss(std::vector<std::vector<BigInt>> a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    BigInt prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : BigInt(-a[n - 1][n - 1]);
}
} // namespace

std::vector<BigInt> leading_principal_minors(const IntMatrix& m) {
    std::vector<BigInt> out;
    for (std::size_t k = 1; k <= m.size(); ++k) {
        std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                sub[i][j] = m[i][j];
        out.push_back(det_bareiss(std::move(sub)));
    }
    return out;
}

bool grauert_is_contractible(const IntMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw NotSymmetric("intersection matrix is not square");
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != m[j][i]) throw NotSymmetric("intersection matrix is not symmetric");
    if (m.empty()) return false;
    auto minors = leading_principal_minors(m);
    for (std::size_t k = 0; k < minors.size(); ++k) {
        BigInt v = (k % 2 == 0) ? BigInt(-minors[k]) : minors[k];
        if (v <= 0) return false;
    }
    return true;
}

CurveConfig build_exceptional_chain(int n, const std::vector<bool>& choices) {
    if (n <= 4) throw Error("the exceptional chain construction needs n > 4");
    CurveConfig cfg = make_link_config(n);
    cfg = blow_up_config(cfg, "p1");
    int steps = n - 3;
    for (int j = 2; j <= steps; ++j) {
        // The strict transform C meets the exceptional locus at exactly two
        // points; pick one of them (freshest exceptional curve by default).
        std::vector<const Crossing*> cand;
        for (const auto& x : cfg.crossings)
            if ((x.a == "C") != (x.b == "C")) cand.push_back(&x);
        if (cand.size() != 2) throw Error("unexpected chain state");
        auto index_of = [](const std::string& id) {
            return std::stoi(id.substr(1));
        };
        std::sort(cand.begin(), cand.end(), [&](const Crossing* l, const Crossing* r) {
            std::string le = l->a == "C" ? l->b : l->a;
            std::string re = r->a == "C" ? r->b : r->a;
            return index_of(le) > index_of(re);
        });
        bool other = static_cast<std::size_t>(j - 2) < choices.size() && choices[j - 2];
        cfg = blow_up_config(cfg, cand[other ? 1 : 0]->point_id);
    }
    return cfg;
}

std::vector<std::string> exceptional_chain_ids(const CurveConfig& config) {
    std::string start;
    for (const auto& c : config.curves)
        if (c.id != "C" && c.self_intersection == -1) start = c.id;
    if (start.empty()) throw Error("no (-1)-curve in the chain");
    std::vector<std::string> out{start};
    std::string prev = "C", cur = start;
    while (true) {
        std::string next;
        for (const auto& nb : config.neighbours(cur))
            if (nb != "C" && nb != prev) next = nb;
        if (next.empty()) break;
        out.push_back(next);
        prev = cur;
        cur = next;
    }
    return out;
}

CurveConfig induced_subconfig(const CurveConfig& config, const std::vector<std::string>& ids) {
    CurveConfig out;
    for (const auto& c : config.curves)
        if (std::find(ids.begin(), ids.end(), c.id) != ids.end()) out.curves.push_back(c);
    for (const auto& x : config.crossings) {
        bool a_in = std::find(ids.begin(), ids.end(), x.a) != ids.end();
        bool b_in = std::find(ids.begin(), ids.end(), x.b) != ids.end();
        if (a_in && b_in) out.crossings.push_back(x);
    }
    return out;
}

std::string config_to_text(const CurveConfig& config) {
    std::ostringstream os;
    for (const auto& c : config.curves)
        os << "curve " << c.id << " self=" << c.self_intersection
           << " rational=" << (c.is_rational ? 1 : 0) << " invariant=" << (c.is_invariant ? 1 : 0)
           << "\n";
    for (const auto& x : config.crossings) {
        os << "cross " << x.a << " " << x.b << " point=" << x.point_id;
        if (x.lambda) os << " lambda=" << x.lambda->str();
        os << "\n";
    }
    return os.str();
}

CurveConfig parse_config(const std::string& text) {
    CurveConfig cfg;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind.empty() || kind[0] == '#') continue;
        if (kind == "curve") {
            Curve c;
            if (!(ls >> c.id)) throw SyntaxError("curve line without id", lineno);
            std::string kv;
            while (ls >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw SyntaxError("expected key=value", lineno);
                std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                if (key == "self")
                    c.self_intersection = std::stoi(val);
                else if (key == "rational")
                    c.is_rational = val != "0";
                else if (key == "invariant")
                    c.is_invariant = val != "0";
                else
                    throw SyntaxError("unknown curve key '" + key + "'", lineno);
            }
            cfg.curves.push_back(c);
        } else if (kind == "cross") {
            Crossing x;
            if (!(ls >> x.a >> x.b)) throw SyntaxError("cross line without two ids", lineno);
            std::string kv;
            while (ls >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw SyntaxError("expected key=value", lineno);
                std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                if (key == "point")
                    x.point_id = val;
                else if (key == "lambda")
                    x.lambda = parse_quadratic(val);
                else
                    throw SyntaxError("unknown cross key '" + key + "'", lineno);
            }
            cfg.crossings.push_back(x);
        } else {
            throw SyntaxError("unknown directive '" + kind + "'", lineno);
        }
    }
    // Assign point ids the input left out.
    for (auto& x : cfg.crossings)
        if (x.point_id.empty()) x.point_id = cfg.fresh_point_id();
    for (const auto& x : cfg.crossings)
        if (!cfg.has_curve(x.a) || !cfg.has_curve(x.b))
            throw UnknownIds("crossing references unknown curve");
    return cfg;
}

namespace {
std::string canonical_text(const CurveConfig& config, bool with_points) {
    std::vector<std::string> lines;
    for (const auto& c : config.curves) {
        std::ostringstream os;
        os << "curve " << c.id << " self=" << c.self_intersection
           << " rational=" << (c.is_rational ? 1 : 0) << " invariant="
           << (c.is_invariant ? 1 : 0);
        lines.push_back(os.str());
    }
    std::vector<std::string> xlines;
    for (const auto& x : config.crossings) {
        std::string a = x.a, b = x.b;
        if (b < a) std::swap(a, b);
        std::ostringstream os;
        os << "cross " << a << " " << b;
        if (with_points) os << " point=" << x.point_id;
        if (x.lambda) os << " lambda=" << x.lambda->str();
        xlines.push_back(os.str());
    }
    std::sort(lines.begin(), lines.end());
    std::sort(xlines.begin(), xlines.end());
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    for (const auto& l : xlines) out += l + "\n";
    return out;
}
} // namespace

std::uint64_t config_hash(const CurveConfig& config) {
    std::string text = canonical_text(config, /*with_points=*/true);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

bool same_configuration(const CurveConfig& a, const CurveConfig& b) {
    return canonical_text(a, false) == canonical_text(b, false);
}

} // namespace linkfol
