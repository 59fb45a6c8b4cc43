#include "fcl/acceptance.hpp"

#include "fcl/crossing.hpp"
#include "fcl/errors.hpp"
#include "fcl/io.hpp"
#include "fcl/ledger.hpp"
#include "fcl/level_calculus.hpp"
#include "fcl/oracle.hpp"
#include "fcl/pointpush.hpp"
#include "fcl/random_curves.hpp"
#include "fcl/sequence.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace fcl {

bool AcceptanceReport::pass() const {
    for (const auto& r : results) {
        if (!r.pass) return false;
    }
    return !results.empty();
}

namespace {

using Levels = std::vector<std::int64_t>;

struct GoldenRow {
    std::size_t step;
    const char* push;
    Levels tail1, tail2, tail3;
    std::size_t c_gamma_beta, c_beta_gamma;
};

const std::vector<GoldenRow>& golden_push_rows() {
    static const std::vector<GoldenRow> rows = {
        {0, "T1 Purple", {0, 1}, {}, {}, 2, 2},
        {0, "T2 Orange", {0, 1}, {-1}, {}, 3, 2},
        {0, "T3 Blue", {0, 1}, {-1}, {-1}, 3, 2},
        {1, "T1 Orange", {0, 1, 2}, {-1}, {-1}, 4, 3},
        {2, "T2 Pink", {0, 1, 2}, {-1, -2}, {-1}, 5, 3},
        {3, "T1 Pink", {0, 1, 2, 3}, {-1, -2}, {-1}, 6, 4},
        {4, "T3 Blue", {0, 1, 2, 3}, {-1, -2}, {-1, -2}, 6, 4},
        {5, "T2 Blue", {0, 1, 2, 3}, {-1, -2, -3}, {-1, -2}, 7, 4},
        {6, "T1 Blue", {0, 1, 2, 3, 4}, {-1, -2, -3}, {-1, -2}, 8, 5},
        {7, "T3 Blue", {0, 1, 2, 3, 4}, {-1, -2, -3}, {-1, -2, -3}, 8, 5},
        {8, "T2 Blue", {0, 1, 2, 3, 4}, {-1, -2, -3, -4}, {-1, -2, -3}, 9, 5},
        {9, "T1 Blue", {0, 1, 2, 3, 4, 5}, {-1, -2, -3, -4}, {-1, -2, -3}, 10, 6},
    };
    return rows;
}

CriterionResult push_trace() {
    CriterionResult r{1, "push schedule golden rows", false, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    const auto trace = run_schedule(9);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto& golden = golden_push_rows();
    std::set<std::size_t> bad_steps;
    std::set<std::size_t> steps;
    for (std::size_t i = 0; i < golden.size(); ++i) {
        const auto& g = golden[i];
        steps.insert(g.step);
        const bool ok = i < trace.size() && trace[i].step == g.step && trace[i].push == g.push &&
                        trace[i].state.tail1() == g.tail1 && trace[i].state.tail2() == g.tail2 &&
                        trace[i].state.tail3() == g.tail3 && trace[i].profile.c_gamma_beta == g.c_gamma_beta &&
                        trace[i].profile.c_beta_gamma == g.c_beta_gamma;
        if (!ok) bad_steps.insert(g.step);
    }
    const bool sizes = trace.size() == golden.size();
    r.pass = sizes && bad_steps.empty() && secs < 1.0;
    std::ostringstream d;
    d << (steps.size() - bad_steps.size()) << "/" << steps.size() << " steps match (" << trace.size() << " trace lines, "
      << golden.size() << " golden lines), " << secs << " s";
    r.detail = d.str();
    return r;
}

CriterionResult three_two_profile() {
    CriterionResult r{2, "(3,2) profile bounds and feasibility", false, {}, 0};
    const CrossingProfile p32{3, 2, ProfileKind::nonseparating, false};
    const CrossingProfile p42{4, 2, ProfileKind::nonseparating, false};
    const auto b = nonseparating_bounds(p32);
    const bool f32 = profile_feasible(p32);
    const bool f42 = profile_feasible(p42);
    r.pass = b.lower == 3 && b.upper == 3 && f32 && !f42;
    r.detail = "bounds(3,2)=(" + std::to_string(b.lower) + "," + std::to_string(b.upper) +
               "), feasible(3,2)=" + (f32 ? "true" : "false") + ", feasible(4,2)=" + (f42 ? "true" : "false");
    return r;
}

CriterionResult lists() {
    CriterionResult r{3, "intersection-list classification", true, {}, 0};
    struct Case {
        Levels levels;
        ListShape shape;
        std::size_t pivot;
    };
    const std::vector<Case> cases = {
        {{-3, -2, -1, 0}, ListShape::monotone, 0}, {{-3, -2, -2, -3}, ListShape::vee, 2},
        {{2, 1, 1, 2}, ListShape::vee, 2},         {{-1, -1}, ListShape::degenerate_pair, 0},
        {{0, 0}, ListShape::invalid, 0},           {{1, 3}, ListShape::invalid, 0},
    };
    std::ostringstream d;
    std::size_t ok = 0;
    for (const auto& c : cases) {
        const auto got = classify_list({c.levels, false});
        const bool match = got.shape == c.shape && (c.shape != ListShape::vee || got.pivot == c.pivot);
        ok += match;
        if (!match) {
            r.pass = false;
            d << " mismatch on " << format_run(c.levels) << " -> " << got.describe() << ";";
        }
    }
    r.detail = std::to_string(ok) + "/" + std::to_string(cases.size()) + " lists classified as expected" + d.str();
    return r;
}

struct GridCheck {
    std::size_t pairs = 0;
    std::size_t exceptions = 0;
    std::size_t max_c = 0;
    std::vector<std::vector<PLCurve>> geodesics;
    std::string first_failure;
};

void check_grid(int w, int h, const Caps& caps, GridCheck& out) {
    OracleGraph graph(w, h, OracleVertices::family, caps);
    const auto tests = coarse_curves(w, h, caps);
    std::vector<std::size_t> sources;
    std::vector<PLCurve> pls;
    for (const auto& t : tests) {
        sources.push_back(graph.ensure(t));
        pls.push_back(t.to_pl());
    }
    const auto crossings = crossing_matrix_parallel(pls);
    const auto dist = distance_rows_parallel(graph.matrix(), sources);
    const std::size_t n = graph.curves().size();
    const std::size_t m = tests.size();
    for (std::size_t a = 0; a < m; ++a) {
        std::optional<BfsTree> tree;
        for (std::size_t b = 0; b < m; ++b) {
            const std::int32_t c = crossings[a * m + b];
            const std::int32_t d = dist[a * n + sources[b]];
            const std::int32_t expected = c < 0 ? 0 : c + 1;
            ++out.pairs;
            if (c > 0) out.max_c = std::max(out.max_c, static_cast<std::size_t>(c));
            if (d != expected) {
                ++out.exceptions;
                if (out.first_failure.empty()) {
                    out.first_failure = std::to_string(w) + "x" + std::to_string(h) + " pair (" + std::to_string(a) +
                                        "," + std::to_string(b) + "): oracle " + std::to_string(d) + ", C+1 " +
                                        std::to_string(expected);
                }
            }
            if (d >= 1) {
                if (!tree) tree = bfs(graph.matrix(), sources[a]);
                std::vector<PLCurve> path;
                for (std::size_t v : tree_path(*tree, sources[a], sources[b])) path.push_back(graph.curves()[v].to_pl());
                out.geodesics.push_back(std::move(path));
            }
        }
    }
}

std::vector<std::pair<int, int>> oracle_grids(const Caps& caps) {
    std::vector<std::pair<int, int>> grids;
    const int top = std::min(caps.max_grid, caps.grid_ceiling);
    for (int w = 4; w <= top; w += 2) {
        for (int h = 4; h <= top; h += 2) grids.emplace_back(w, h);
    }
    return grids;
}

void torus_oracle(const AcceptanceOptions& opt, std::vector<CriterionResult>& out) {
    CriterionResult c4{4, "torus formula matches BFS oracle", false, {}, 0};
    CriterionResult c5{5, "geodesic ledger bound", false, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    GridCheck check;
    std::string grids_text;
    for (const auto& [w, h] : oracle_grids(opt.caps)) {
        check_grid(w, h, opt.caps, check);
        grids_text += (grids_text.empty() ? "" : ",") + std::to_string(w) + "x" + std::to_string(h);
    }
    c4.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c4.pass = check.pairs > 0 && check.exceptions == 0 && c4.seconds < 300;
    c4.detail = std::to_string(check.pairs) + " pairs on grids " + grids_text + ", " +
                std::to_string(check.exceptions) + " exceptions, C up to " + std::to_string(check.max_c);
    if (!check.first_failure.empty()) c4.detail += "; first: " + check.first_failure;
    out.push_back(c4);

    const auto ledger_start = std::chrono::steady_clock::now();
    std::size_t violations = 0;
    std::size_t rows = 0;
    for (const auto& g : check.geodesics) {
        for (const auto& row : geodesic_level_ledger(g)) {
            ++rows;
            violations += row.violates;
        }
    }
    c5.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - ledger_start).count();
    c5.pass = check.geodesics.size() >= opt.min_geodesics && violations == 0;
    c5.detail = std::to_string(check.geodesics.size()) + " geodesics, " + std::to_string(rows) + " ledger rows, " +
                std::to_string(violations) + " violations";
    out.push_back(c5);
}

CriterionResult symmetry(const AcceptanceOptions& opt) {
    CriterionResult r{6, "torus crossing-number symmetry", false, {}, 0};
    std::mt19937_64 rng(opt.seed);
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    std::size_t resampled = 0;
    std::map<std::size_t, std::size_t> histogram;
    while (checked < opt.symmetry_pairs) {
        const bool graphs = checked % 2 == 0;
        const PLCurve b = graphs ? random_graph_curve(rng) : random_general_curve(rng);
        const PLCurve g = graphs ? random_graph_curve(rng) : random_general_curve(rng);
        try {
            const auto bg = crossing_number(b, g);
            const auto gb = crossing_number(g, b);
            ++checked;
            ++histogram[bg];
            if (bg != gb) ++mismatches;
        } catch (const DegeneracyError&) {
            ++resampled;
        }
    }
    r.pass = mismatches == 0;
    std::ostringstream d;
    d << checked << " pairs (seed " << opt.seed << "), " << mismatches << " mismatches, " << resampled
      << " degenerate pairs resampled, C values";
    for (const auto& [c, count] : histogram) d << " " << c << ":" << count;
    r.detail = d.str();
    return r;
}

CriterionResult surgery_lengths() {
    CriterionResult r{7, "separating surgery lengths", true, {}, 0};
    std::ostringstream d;
    for (std::size_t c = 0; c <= 12; ++c) {
        LevelSet set;
        const auto m = static_cast<std::int64_t>(c / 2);
        if (c % 2 == 1) {
            for (std::int64_t k = -m; k <= m; ++k) set.insert(k);
        } else {
            for (std::int64_t k = -m + 1; k <= m; ++k) set.insert(k);
        }
        const auto path = surgery_path(set, ProfileKind::separating);
        const std::size_t formula = (c + 1) / 2 + 1;
        const std::size_t dist = separating_distance({c, c, ProfileKind::separating, false});
        if (path.min_transitions != formula || path.max_transitions != formula || dist != formula) {
            r.pass = false;
            d << " C=" << c << " gives " << path.min_transitions << " vs " << formula << ";";
        }
    }
    r.detail = std::string(r.pass ? "C = 0..12 all match ceil(C/2)+1" : "mismatches:") + d.str();
    return r;
}

CriterionResult certificates(const AcceptanceOptions& opt) {
    CriterionResult r{8, "distance certificates", true, {}, 0};
    std::ostringstream d;
    std::size_t built = 0;
    for (std::size_t n = 1; n <= 10; ++n) {
        for (ProfileKind kind : {ProfileKind::separating, ProfileKind::nonseparating, ProfileKind::torus}) {
            for (SeparatingParity parity : {SeparatingParity::even, SeparatingParity::odd}) {
                if (parity == SeparatingParity::odd && kind != ProfileKind::separating) continue;
                const auto cert = build_certificate(n, kind, parity);
                ++built;
                const auto back = certificate_from_json(Json::parse(to_json(cert).dump()));
                const auto bounds = derive_bounds(back.profile);
                if (!(back == cert) || back.claimed_distance != n || bounds.lower != n || bounds.upper != n) {
                    r.pass = false;
                    d << " n=" << n << " " << to_string(kind) << " fails;";
                }
            }
        }
    }
    // Grid realization confirmed by the oracle.
    const auto alphas = realize_torus_sequence_on_grid(3);
    OracleGraph graph(6, 6, OracleVertices::family, opt.caps);
    std::string oracle_text;
    for (std::size_t k = 1; k < alphas.size(); ++k) {
        const auto res = bfs_oracle_distance(graph, alphas[0], alphas[k]);
        const auto c = crossing_number(alphas[0].to_pl(), alphas[k].to_pl(), ContactMode::point_set);
        const bool ok = res.distance && *res.distance == k && c + 1 == k;
        oracle_text += " d(a0,a" + std::to_string(k) + ")=" + (res.distance ? std::to_string(*res.distance) : "inf");
        if (!ok) r.pass = false;
    }
    // Transverse realization checked with the strict crossing number.
    const auto tents = realize_torus_sequence(4);
    for (std::size_t k = 1; k < tents.size(); ++k) {
        if (crossing_number(tents[0], tents[k]) != k - 1) {
            r.pass = false;
            d << " transverse alpha_" << k << " has the wrong crossing number;";
        }
    }
    r.detail = std::to_string(built) + " certificates round-tripped;" + oracle_text + d.str();
    return r;
}

template <typename F>
CriterionResult timed(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r = f();
    if (r.seconds == 0) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

AcceptanceReport run_acceptance(const std::string& suite, const AcceptanceOptions& options) {
    static const std::set<std::string> known = {"table1", "bounds", "lists", "torus-oracle", "certificates", "all"};
    if (!known.contains(suite)) throw ValidationError("unknown acceptance suite '" + suite + "'");
    AcceptanceReport report{suite, {}};
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    auto& out = report.results;
    if (want("table1")) out.push_back(timed(push_trace));
    if (want("bounds")) out.push_back(timed(three_two_profile));
    if (want("lists")) out.push_back(timed(lists));
    if (want("torus-oracle")) {
        torus_oracle(options, out);
        out.push_back(timed([&] { return symmetry(options); }));
    }
    if (want("bounds")) out.push_back(timed(surgery_lengths));
    if (want("certificates")) out.push_back(timed([&] { return certificates(options); }));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return report;
}

std::string format_report(const AcceptanceReport& report) {
    std::ostringstream s;
    for (const auto& r : report.results) {
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
        s << "criterion " << r.id << " [" << r.name << "]: " << (r.pass ? "PASS" : "FAIL") << " (" << secs << " s) "
          << r.detail << "\n";
    }
    s << "suite " << report.suite << ": " << (report.pass() ? "PASS" : "FAIL") << "\n";
    return s.str();
}

}  // namespace fcl
