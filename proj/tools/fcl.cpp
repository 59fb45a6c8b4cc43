#include "fcl/acceptance.hpp"
#include "fcl/crossing.hpp"
#include "fcl/errors.hpp"
#include "fcl/io.hpp"
#include "fcl/ledger.hpp"
#include "fcl/level_calculus.hpp"
#include "fcl/oracle.hpp"
#include "fcl/pointpush.hpp"
#include "fcl/render.hpp"
#include "fcl/sequence.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

using namespace fcl;

namespace {

struct Globals {
    std::string caps_text;
    std::uint64_t seed = 20240611;
    bool json = false;
    bool quiet = false;
    Caps caps;
};

Caps parse_caps(const std::string& text) {
    Caps caps;
    if (text.empty()) return caps;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ValidationError("caps entries look like key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const auto values = parse_int_list(item.substr(eq + 1));
        if (values.size() != 1 || values[0] <= 0) throw ValidationError("cap '" + key + "' must be a positive integer");
        const auto v = values[0];
        if (key == "max_grid") caps.max_grid = static_cast<int>(v);
        else if (key == "grid_ceiling") caps.grid_ceiling = static_cast<int>(v);
        else if (key == "max_count") caps.max_count = static_cast<std::size_t>(v);
        else if (key == "max_oracle_vertices") caps.max_oracle_vertices = static_cast<std::size_t>(v);
        else if (key == "max_steps") caps.max_steps = static_cast<std::size_t>(v);
        else throw ValidationError("unknown cap '" + key + "'");
    }
    if (caps.grid_ceiling > 8) throw ValidationError("grid_ceiling cannot exceed 8");
    return caps;
}

void emit(const Globals& g, const Json& j, const std::string& text) {
    if (g.quiet) return;
    if (g.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

ContactMode parse_mode(const std::string& s) {
    if (s == "transverse") return ContactMode::transverse;
    if (s == "point-set") return ContactMode::point_set;
    throw ValidationError("mode must be transverse or point-set");
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

CrossingProfile parse_profile(const std::string& text, ProfileKind kind) {
    const auto v = parse_int_list(text);
    if (v.size() != 2 || v[0] < 0 || v[1] < 0) throw ValidationError("profile is two nonnegative integers, e.g. 3,2");
    return {static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1]), kind, false};
}

void check_writable(const std::string& path) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent)) {
        throw ValidationError("output directory " + parent.string() + " does not exist");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crossing numbers, level calculus and fine curve graph distances on the torus"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--caps", g.caps_text, "caps as key=value list (max_grid, grid_ceiling, max_count, max_oracle_vertices, max_steps)");
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_flag("--json", g.json, "JSON output");
    app.add_flag("--quiet", g.quiet, "suppress normal output");

    // crossing
    auto* crossing = app.add_subcommand("crossing", "crossing number of two curves");
    std::string beta_file, gamma_file, mode_text = "transverse";
    crossing->add_option("--beta", beta_file)->required();
    crossing->add_option("--gamma", gamma_file)->required();
    crossing->add_option("--mode", mode_text, "transverse or point-set");

    // validate
    auto* validate = app.add_subcommand("validate", "check a curve file");
    std::string curve_file;
    validate->add_option("--curve", curve_file)->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "BFS distance in the disjointness graph of grid curves");
    int width = 0, height = 0;
    std::string geodesic_out, vertices_text = "family";
    oracle->add_option("--width", width)->required();
    oracle->add_option("--height", height)->required();
    oracle->add_option("--beta", beta_file)->required();
    oracle->add_option("--gamma", gamma_file)->required();
    oracle->add_option("--emit-geodesic", geodesic_out, "write the geodesic as a curve list");
    oracle->add_option("--vertices", vertices_text, "family or full");

    // ledger
    auto* ledger = app.add_subcommand("ledger", "level ledger of a path of disjoint curves");
    std::string path_file;
    ledger->add_option("--path", path_file, "curve list file, e.g. from oracle --emit-geodesic")->required();

    // render
    auto* render = app.add_subcommand("render", "SVG of cylinder lifts");
    std::vector<std::string> curve_files;
    std::string svg_out;
    bool cover = false;
    int window = 2;
    render->add_option("--curves", curve_files);
    render->add_flag("--cover", cover, "draw the cyclic cover (the only view)");
    render->add_option("--out", svg_out)->required();
    render->add_option("--window", window, "half-height of the drawn strip");

    // levels
    auto* levels = app.add_subcommand("levels", "level calculus");
    levels->require_subcommand(1);
    std::string list_text, kind_text = "nonsep", profile_text, set_text, tags_text;
    bool degenerate = false;
    auto* classify = levels->add_subcommand("classify", "classify an intersection list");
    classify->add_option("--list", list_text)->required()->allow_extra_args(false);
    classify->add_flag("--degenerate", degenerate);
    auto* essential = levels->add_subcommand("essential", "essential intersection count of a list");
    essential->add_option("--list", list_text)->required();
    essential->add_flag("--degenerate", degenerate);
    auto* bounds = levels->add_subcommand("bounds", "distance or bounds for a crossing profile");
    bounds->add_option("--kind", kind_text, "sep, nonsep or torus");
    bounds->add_option("--profile", profile_text)->required();
    auto* feasible = levels->add_subcommand("feasible", "is a nonseparating profile feasible");
    feasible->add_option("--profile", profile_text)->required();
    auto* surgery = levels->add_subcommand("surgery", "outermost-level deletion path");
    surgery->add_option("--kind", kind_text, "sep, nonsep or torus");
    surgery->add_option("--set", set_text)->required();
    surgery->add_option("--tags", tags_text, "level:toward|away list for nonsep");
    auto* validate_sep = levels->add_subcommand("validate-sep", "check a separating level set");
    validate_sep->add_option("--set", set_text)->required();

    // pushsim
    auto* pushsim = app.add_subcommand("pushsim", "three-tail point-push schedule");
    std::size_t steps = 9;
    std::string format = "table";
    pushsim->add_option("--steps", steps);
    pushsim->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

    // sequence
    auto* sequence = app.add_subcommand("sequence", "distance-n certificates");
    std::string case_text;
    std::size_t n = 1;
    bool realize = false, odd = false;
    std::string out_dir;
    sequence->add_option("--case", case_text, "sep, nonsep or torus")->required();
    sequence->add_option("--n", n)->required();
    sequence->add_flag("--realize", realize, "write grid curves alpha_0..alpha_n (torus only)");
    sequence->add_flag("--odd", odd, "separating profile 2n-3 instead of 2(n-1)");
    sequence->add_option("--out", out_dir);

    // acceptance
    auto* acceptance = app.add_subcommand("acceptance", "run acceptance criteria");
    std::string suite = "all";
    acceptance->add_option("--suite", suite, "table1, bounds, lists, torus-oracle, certificates or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(ExitCode::validation);
    }

    try {
        g.caps = parse_caps(g.caps_text);

        if (*crossing) {
            const auto beta = read_curve_file(beta_file);
            const auto gamma = read_curve_file(gamma_file);
            const auto mode = parse_mode(mode_text);
            const auto r = crossing_levels(beta, gamma, mode);
            const auto back = crossing_levels(gamma, beta, mode);
            const std::size_t d = r.identical ? 0 : r.count() + 1;
            Json j{{"crossing_number", r.count()},
                   {"levels", r.levels},
                   {"reverse_crossing_number", back.count()},
                   {"identical", r.identical},
                   {"distance", d}};
            emit(g, j,
                 "C(beta,gamma) = " + std::to_string(r.count()) + " (levels " + join(r.levels) + ")\n" +
                     "C(gamma,beta) = " + std::to_string(back.count()) + "\ndistance = " + std::to_string(d) + "\n");
        } else if (*validate) {
            const auto report = validate_curve(read_curve_file(curve_file));
            Json issues = Json::array();
            std::string text = report.ok() ? "valid\n" : "";
            for (const auto& i : report.issues) {
                Json item{{"kind", to_string(i.kind)}, {"message", i.message}};
                if (i.segments) item["segments"] = {i.segments->first, i.segments->second};
                issues.push_back(item);
                text += to_string(i.kind) + ": " + i.message + "\n";
            }
            emit(g, Json{{"valid", report.ok()}, {"issues", issues}}, text);
            if (!report.ok()) return static_cast<int>(ExitCode::validation);
        } else if (*oracle) {
            if (vertices_text != "family" && vertices_text != "full") {
                throw ValidationError("--vertices must be family or full");
            }
            if (!geodesic_out.empty()) check_writable(geodesic_out);
            const auto beta = read_curve_file(beta_file);
            const auto gamma = read_curve_file(gamma_file);
            const auto kind = vertices_text == "full" ? OracleVertices::full : OracleVertices::family;
            const auto r = bfs_oracle_distance(beta, gamma, width, height, kind, g.caps);
            std::vector<PLCurve> geo;
            for (const auto& c : r.geodesic) geo.push_back(c.to_pl());
            if (!geodesic_out.empty()) write_text_file(geodesic_out, curves_to_json(geo).dump(2) + "\n");
            Json j{{"distance", r.distance ? Json(*r.distance) : Json("unreachable")}, {"geodesic_length", geo.size()}};
            emit(g, j,
                 "distance = " + (r.distance ? std::to_string(*r.distance) : std::string("unreachable")) + "\n");
        } else if (*ledger) {
            const Json j = Json::parse(read_text_file(path_file));
            const auto path = curves_from_json(j);
            const auto rows = geodesic_level_ledger(path);
            std::string text;
            bool violated = false;
            for (const auto& r : rows) {
                text += "n=" + std::to_string(r.n) + " levels {" + join(r.levels) + "} M=" +
                        std::to_string(r.max_abs_level) + (r.violates ? " VIOLATES M_n <= n-1" : "") + "\n";
                violated = violated || r.violates;
            }
            emit(g, to_json(rows), text);
            if (violated) return static_cast<int>(ExitCode::failure);
        } else if (*render) {
            (void)cover;
            check_writable(svg_out);
            std::vector<PLCurve> curves;
            for (const auto& f : curve_files) curves.push_back(read_curve_file(f));
            write_text_file(svg_out, render_cover(curves, window));
            emit(g, Json{{"out", svg_out}, {"curves", curves.size()}}, "wrote " + svg_out + "\n");
        } else if (*levels) {
            Json j;
            if (*classify) {
                const auto c = classify_list({parse_int_list(list_text), degenerate});
                j = {{"classification", c.describe()}};
            } else if (*essential) {
                const auto e = essential_count({parse_int_list(list_text), degenerate});
                j = {{"count", e.count}, {"endpoint_case", e.endpoint_case ? Json(*e.endpoint_case) : Json(nullptr)}};
            } else if (*bounds) {
                const auto kind = parse_profile_kind(kind_text);
                const auto b = derive_bounds(parse_profile(profile_text, kind));
                j = {{"lower", b.lower}, {"upper", b.upper}, {"formula", b.formula}};
            } else if (*feasible) {
                j = {{"feasible", profile_feasible(parse_profile(profile_text, ProfileKind::nonseparating))}};
            } else if (*surgery) {
                const auto kind = parse_profile_kind(kind_text);
                const auto values = parse_int_list(set_text);
                std::map<std::int64_t, OutermostTag> tags;
                if (!tags_text.empty()) {
                    std::stringstream ss(tags_text);
                    std::string item;
                    while (std::getline(ss, item, ',')) {
                        const auto colon = item.find(':');
                        if (colon == std::string::npos) throw ValidationError("tags look like level:toward or level:away");
                        const auto lv = parse_int_list(item.substr(0, colon));
                        const std::string t = item.substr(colon + 1);
                        if (lv.size() != 1 || (t != "toward" && t != "away")) {
                            throw ValidationError("bad tag '" + item + "'");
                        }
                        tags[lv[0]] = t == "toward" ? OutermostTag::toward_end : OutermostTag::away_from_end;
                    }
                }
                const auto p = surgery_path(LevelSet(values.begin(), values.end()), kind, tags);
                Json sets = Json::array();
                for (const auto& s : p.sets) sets.push_back(to_json(s));
                j = {{"path", sets}, {"length", p.min_transitions}};
                if (p.max_transitions != p.min_transitions) j["length_max"] = p.max_transitions;
            } else if (*validate_sep) {
                const auto values = parse_int_list(set_text);
                const auto r = validate_separating_levels(LevelSet(values.begin(), values.end()));
                j = {{"valid", r.ok}, {"message", r.message}, {"missing", r.missing ? Json(*r.missing) : Json(nullptr)}};
                if (!g.quiet) std::cout << j.dump() << "\n";
                return r.ok ? 0 : static_cast<int>(ExitCode::validation);
            }
            if (!g.quiet) std::cout << j.dump() << "\n";
        } else if (*pushsim) {
            const auto rows = run_schedule(steps, g.caps.max_steps);
            if (g.quiet) return 0;
            if (format == "json" || g.json) {
                std::cout << to_json(rows).dump(2) << "\n";
            } else {
                std::cout << format_table(rows);
            }
        } else if (*sequence) {
            const auto kind = parse_profile_kind(case_text);
            const auto cert = build_certificate(n, kind, odd ? SeparatingParity::odd : SeparatingParity::even);
            Json j = to_json(cert);
            if (realize) {
                if (kind != ProfileKind::torus) throw ValidationError("--realize is only available for the torus case");
                if (out_dir.empty()) throw ValidationError("--realize needs --out DIR");
                std::filesystem::create_directories(out_dir);
                const auto alphas = realize_torus_sequence_on_grid(n);
                Json files = Json::array();
                for (std::size_t k = 0; k < alphas.size(); ++k) {
                    const std::string f = (std::filesystem::path(out_dir) / ("alpha_" + std::to_string(k) + ".json")).string();
                    write_curve_file(f, alphas[k].to_pl());
                    files.push_back(f);
                }
                j["grid"] = {{"width", 6}, {"height", 6}};
                j["curves"] = files;
            }
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                write_text_file((std::filesystem::path(out_dir) / "certificate.json").string(), j.dump(2) + "\n");
            }
            if (!g.quiet) std::cout << j.dump(2) << "\n";
        } else if (*acceptance) {
            AcceptanceOptions opt;
            opt.caps = g.caps;
            opt.seed = g.seed;
            const auto report = run_acceptance(suite, opt);
            if (!g.quiet) {
                if (g.json) {
                    Json rs = Json::array();
                    for (const auto& r : report.results) {
                        rs.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
                    }
                    std::cout << Json{{"suite", report.suite}, {"pass", report.pass()}, {"results", rs}}.dump(2) << "\n";
                } else {
                    std::cout << format_report(report);
                }
            }
            return report.pass() ? 0 : static_cast<int>(ExitCode::failure);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::validation);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::failure);
    }
    return 0;
}
