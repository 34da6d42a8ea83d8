// Command-line front end: verifies the model foliations, prints the
// eigenvalue-quotient dictionary, decides (k,l)-cycle feasibility with
// replayable traces, and wraps the blow-up and contractibility primitives.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linkfol/blowup.hpp"
#include "linkfol/localfol.hpp"
#include "linkfol/models.hpp"
#include "linkfol/parse.hpp"
#include "linkfol/riccati.hpp"

namespace {

using namespace linkfol;
using nlohmann::json;

struct CliReport {
    std::string command;
    std::string timestamp;  // empty when suppressed
    std::vector<ClaimResult> results;

    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

std::string now_iso8601() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

std::string render_text(const CliReport& r) {
    std::ostringstream os;
    os << "# " << r.command << "\n";
    if (!r.timestamp.empty()) os << "# " << r.timestamp << "\n";
    for (const auto& c : r.results)
        os << (c.pass ? "pass" : "FAIL") << "  " << c.id << "  [" << c.reference << "]  "
           << c.evidence << "\n";
    os << (r.all_pass() ? "all claims pass" : "some claims FAILED") << "\n";
    return os.str();
}

std::string render_markdown(const CliReport& r) {
    std::ostringstream os;
    os << "## `" << r.command << "`\n\n";
    if (!r.timestamp.empty()) os << "_" << r.timestamp << "_\n\n";
    os << "| status | claim | reference | evidence |\n|---|---|---|---|\n";
    for (const auto& c : r.results)
        os << "| " << (c.pass ? "pass" : "**FAIL**") << " | " << c.id << " | " << c.reference
           << " | " << c.evidence << " |\n";
    os << "\n" << (r.all_pass() ? "all claims pass" : "some claims FAILED") << "\n";
    return os.str();
}

std::string render_json(const CliReport& r) {
    json j;
    j["command"] = r.command;
    if (!r.timestamp.empty()) j["timestamp"] = r.timestamp;
    j["results"] = json::array();
    for (const auto& c : r.results)
        j["results"].push_back({{"id", c.id},
                                {"reference", c.reference},
                                {"status", c.pass ? "pass" : "fail"},
                                {"evidence", c.evidence}});
    j["exit_status"] = r.all_pass() ? 0 : 1;
    return j.dump(2) + "\n";
}

// ---- subcommand payloads ----------------------------------------------

void run_verify(CliReport& rep, const std::string& which) {
    FoliationModel model;
    if (which == "f1")
        model = build_N();
    else if (which == "f2")
        model = build_M();
    else if (which == "f3")
        model = build_L();
    else
        throw CLI::ValidationError("model must be one of f1, f2, f3");
    VerificationReport vr = verify_model(model);
    rep.results = vr.claims;
}

void run_classify(CliReport& rep, int n) {
    LambdaClassification cl = classify_lambda(n);
    const auto& [r1, r2] = cl.roots;
    Rational p(2 - n), q(1);
    auto satisfies = [&](const QuadraticNumber& r) {
        return (r * r + QuadraticNumber(p) * r + QuadraticNumber(q)).is_zero();
    };
    rep.results.push_back({"roots", "the eigenvalue quotient at the node solves t^2 + (2-n)t + 1 = 0",
                           satisfies(r1) && satisfies(r2),
                           "roots " + r1.str() + ", " + r2.str()});
    bool cs_ok = cs_node_index(r1) == QuadraticNumber(Rational(n)) &&
                 cs_node_index(r2) == QuadraticNumber(Rational(n));
    rep.results.push_back({"camacho-sad", "lambda + 2 + 1/lambda equals the self-intersection",
                           cs_ok, "both roots give index " + std::to_string(n)});
    std::string kind;
    switch (cl.kind) {
        case LambdaKind::PrimitiveRoot:
            kind = "-lambda is a primitive root of unity of order " +
                   std::to_string(cl.root_order);
            break;
        case LambdaKind::Unit:
            kind = "lambda = 1: dicritical, not reduced nondegenerate (quotient is a positive "
                   "rational)";
            break;
        case LambdaKind::PositiveIrrational:
            kind = "lambda is a positive irrational";
            break;
    }
    rep.results.push_back({"kind", "the five-case dictionary by self-intersection", true, kind});
}

void append_feasibility(CliReport& rep, const FeasibilityReport& fr, const std::string& prefix) {
    std::ostringstream ev;
    ev << (fr.feasible ? "feasible" : "infeasible") << " (" << fr.verdict << "): " << fr.detail;
    if (!fr.steps.empty()) {
        ev << "; trace:";
        for (const auto& s : fr.steps) ev << " " << s.op << "(" << s.arg << ")";
    }
    rep.results.push_back({prefix + "verdict",
                           "classification of invariant cycles of constant self-intersection",
                           true, ev.str()});
    bool replay_ok = true;
    std::string replay_note = "replayed " + std::to_string(fr.steps.size()) + " steps";
    try {
        CurveConfig end = replay_steps(fr.initial, fr.steps);
        replay_ok = config_hash(end) == config_hash(fr.final_config);
    } catch (const Error& e) {
        replay_ok = false;
        replay_note = e.what();
    }
    rep.results.push_back({prefix + "trace-replay",
                           "every surgery step of the verdict trace replays exactly", replay_ok,
                           replay_note});
}

void run_cycle_feasible(CliReport& rep, int k, int l) {
    FeasibilityReport fr = kl_cycle_feasible(CycleSpec{k, l});
    append_feasibility(rep, fr, "");
}

void run_enumerate(CliReport& rep, int kmax, int lmin, int lmax) {
    std::vector<std::pair<int, int>> found;
    for (int k = 2; k <= kmax; ++k)
        for (int l = lmin; l <= lmax; ++l) {
            FeasibilityReport fr = kl_cycle_feasible(CycleSpec{k, l});
            if (fr.feasible) found.push_back({k, l});
            rep.results.push_back(
                {"k=" + std::to_string(k) + ",l=" + std::to_string(l),
                 "feasibility with replayable trace", true,
                 std::string(fr.feasible ? "feasible" : "infeasible") + " (" + fr.verdict + ")"});
        }
    // Cross-check against the closed-form answer.
    std::vector<std::pair<int, int>> expected;
    for (int k = 2; k <= kmax; ++k)
        for (int l = lmin; l <= lmax; ++l) {
            bool in = (l == -1 && (k == 2 || k == 3 || k == 6)) || (l == 1 && k == 3) ||
                      (l == 0 && k % 2 == 0);
            if (in) expected.push_back({k, l});
        }
    std::ostringstream ev;
    ev << "feasible set {";
    for (auto [k, l] : found) ev << " (" << k << "," << l << ")";
    ev << " }";
    rep.results.push_back({"closed-form",
                           "the feasible set is {(2,-1),(3,-1),(3,1),(6,-1)} plus the even "
                           "(k,0) cycles",
                           found == expected, ev.str()});
}

void run_blowup(CliReport& rep, const std::string& form_text, const std::string& point_text,
                const ConstantEnv& env) {
    OneForm w = parse_form(form_text, env);
    QuadraticNumber px(0), py(0);
    if (!point_text.empty()) {
        auto comma = point_text.find(',');
        if (comma == std::string::npos)
            throw SyntaxError("point must be 'x,y'", 0);
        px = parse_quadratic(point_text.substr(0, comma));
        py = parse_quadratic(point_text.substr(comma + 1));
    }
    OneForm local = w.translated(px, py);
    BlowupResult res = blow_up_form(local, /*allow_regular=*/true);
    rep.results.push_back({"multiplicity", "power of the exceptional coordinate divided out",
                           true, std::to_string(res.multiplicity)});
    rep.results.push_back({"dicritical", "the exceptional divisor fails to be invariant", true,
                           res.dicritical ? "yes" : "no"});
    rep.results.push_back({"chart1", "x = u, y = u v; exceptional divisor u = 0", true,
                           res.chart1_form.str()});
    rep.results.push_back({"chart2", "x = s t, y = t; exceptional divisor t = 0", true,
                           res.chart2_form.str()});
    RationalMap2 t = blowup_chart_transition(res.chart2_form.chart(), res.chart1_form.chart());
    RationalFn2 glue = invariance_wedge(t, res.chart1_form, res.chart2_form);
    rep.results.push_back({"gluing", "the two blow-up charts define one foliation",
                           glue.is_zero(), glue.is_zero() ? "wedge = 0" : glue.str()});
}

IntMatrix parse_matrix(const std::string& text) {
    std::string s = text;
    auto strip = [&](char c) {
        s.erase(std::remove(s.begin(), s.end(), c), s.end());
    };
    strip(' ');
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw SyntaxError("matrix must look like [a,b;c,d]", 0);
    s = s.substr(1, s.size() - 2);
    IntMatrix m;
    std::istringstream rows(s);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<long long> r;
        std::istringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ','))
            r.push_back(std::stoll(cell));
        m.push_back(std::move(r));
    }
    return m;
}

void run_grauert(CliReport& rep, const std::string& matrix_text) {
    IntMatrix m = parse_matrix(matrix_text);
    bool verdict = grauert_is_contractible(m);
    auto minors = leading_principal_minors(m);
    std::string ev = "leading principal minors:";
    for (const auto& d : minors) ev += " " + d.str();
    rep.results.push_back({"contractible",
                           "a curve configuration contracts iff its intersection matrix is "
                           "negative definite",
                           true, std::string(verdict ? "yes" : "no") + "; " + ev});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linkfol: exact verification toolkit for foliations with an invariant "
                 "positive rational nodal curve"};
    app.require_subcommand(1);

    bool as_json = false, as_md = false, deterministic = false;
    app.add_flag("--json", as_json, "machine-readable JSON report");
    app.add_flag("--md", as_md, "markdown report");
    app.add_flag("--deterministic", deterministic, "suppress the timestamp field");

    std::string model_name;
    auto* verify = app.add_subcommand("verify", "build a model foliation and verify its claims");
    verify->add_option("model", model_name, "f1, f2 or f3")->required();

    int n = 1;
    auto* classify = app.add_subcommand("classify-lambda",
                                        "eigenvalue quotients for a node of self-intersection n");
    classify->add_option("n", n, "self-intersection, n >= 1")->required()->check(CLI::PositiveNumber);

    int k = 2, l = 0;
    auto* feas = app.add_subcommand("cycle-feasible", "decide one (k,l)-cycle");
    feas->add_option("k", k, "number of curves, k > 1")->required();
    feas->add_option("l", l, "common self-intersection")->required();

    int kmax = 12, lmin = -3, lmax = 3;
    auto* enumerate = app.add_subcommand("enumerate", "tabulate (k,l)-cycle feasibility");
    enumerate->add_option("kmax", kmax)->required();
    enumerate->add_option("lmin", lmin)->required();
    enumerate->add_option("lmax", lmax)->required();

    std::string form_text, point_text = "0,0";
    std::vector<std::string> const_defs;
    auto* blowup = app.add_subcommand("blowup", "blow up a 1-form at a point");
    blowup->add_option("--form", form_text, "1-form, e.g. \"L*y*dx - x*dy\"")->required();
    blowup->add_option("--point", point_text, "center, e.g. 0,0");
    blowup->add_option("--const", const_defs, "bind a named constant, NAME=value");

    std::string matrix_text;
    auto* grauert = app.add_subcommand("grauert", "negative-definiteness of an intersection matrix");
    grauert->add_option("--matrix", matrix_text, "e.g. \"[-1,1;1,-2]\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CliReport rep;
    {
        std::ostringstream cmd;
        for (int i = 1; i < argc; ++i) cmd << (i > 1 ? " " : "") << argv[i];
        rep.command = cmd.str();
    }
    if (!deterministic) rep.timestamp = now_iso8601();

    try {
        if (*verify) run_verify(rep, model_name);
        if (*classify) run_classify(rep, n);
        if (*feas) {
            if (k < 2) throw SyntaxError("k must be > 1", 0);
            run_cycle_feasible(rep, k, l);
        }
        if (*enumerate) {
            if (kmax < 2 || lmin > lmax) throw SyntaxError("empty enumeration range", 0);
            run_enumerate(rep, kmax, lmin, lmax);
        }
        if (*blowup) {
            ConstantEnv env{{"L", QuadraticNumber(Rational(1, 2), Rational(1, 2), -3)}};
            for (const auto& def : const_defs) {
                auto eq = def.find('=');
                if (eq == std::string::npos) throw SyntaxError("--const expects NAME=value", 0);
                env[def.substr(0, eq)] = parse_quadratic(def.substr(eq + 1));
            }
            run_blowup(rep, form_text, point_text, env);
        }
        if (*grauert) run_grauert(rep, matrix_text);
    } catch (const SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string out = as_json ? render_json(rep) : as_md ? render_markdown(rep) : render_text(rep);
    std::cout << out;

    if (const char* dir = std::getenv("LINKFOL_REPORT_DIR")) {
        std::string name;
        for (char c : rep.command)
            name += (std::isalnum(static_cast<unsigned char>(c)) ? c : '-');
        std::string ext = as_json ? ".json" : as_md ? ".md" : ".txt";
        std::ofstream f(std::string(dir) + "/" + name + ext);
        if (f)
            f << out;
        else
            std::cerr << "warning: cannot write report to " << dir << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}
