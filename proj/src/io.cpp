#include "fcl/io.hpp"

#include "fcl/errors.hpp"

#include <fstream>
#include <sstream>

namespace fcl {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ValidationError("malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

std::size_t as_size(const Json& j, const char* what) {
    const auto v = as_int(j, what);
    if (v < 0) bad(std::string(what) + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

Rational as_rational(const Json& j) {
    if (!j.is_string()) bad("rationals are written as \"p/q\" strings");
    return parse_rational(j.get<std::string>());
}

void check_format(const Json& j) {
    if (as_int(field(j, "format"), "format") != kCurveFormat) bad("unsupported format version");
}

}  // namespace

Json curve_to_json(const PLCurve& curve) {
    Json j;
    j["format"] = kCurveFormat;
    j["vertices"] = Json::array();
    for (const auto& v : curve.vertices()) j["vertices"].push_back({format_rational(v.x()), format_rational(v.y())});
    j["offsets"] = Json::array();
    for (const auto& o : curve.offsets()) j["offsets"].push_back({o.dx, o.dy});
    return j;
}

PLCurve curve_from_json(const Json& j) {
    check_format(j);
    const Json& vs = field(j, "vertices");
    const Json& os = field(j, "offsets");
    if (!vs.is_array() || !os.is_array()) bad("vertices and offsets must be arrays");
    std::vector<RationalPoint> vertices;
    for (const auto& v : vs) {
        if (!v.is_array() || v.size() != 2) bad("each vertex is a pair");
        vertices.emplace_back(as_rational(v[0]), as_rational(v[1]));
    }
    std::vector<IntOffset> offsets;
    for (const auto& o : os) {
        if (!o.is_array() || o.size() != 2) bad("each offset is a pair");
        offsets.push_back({as_int(o[0], "offset"), as_int(o[1], "offset")});
    }
    return {std::move(vertices), std::move(offsets)};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << text;
    if (!out) throw ValidationError("failed writing " + path);
}

PLCurve read_curve_file(const std::string& path) {
    const std::string text = read_text_file(path);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
    return curve_from_json(j);
}

void write_curve_file(const std::string& path, const PLCurve& curve) {
    write_text_file(path, curve_to_json(curve).dump(2) + "\n");
}

Json curves_to_json(const std::vector<PLCurve>& curves) {
    Json j;
    j["format"] = kCurveFormat;
    j["curves"] = Json::array();
    for (const auto& c : curves) j["curves"].push_back(curve_to_json(c));
    return j;
}

std::vector<PLCurve> curves_from_json(const Json& j) {
    check_format(j);
    const Json& cs = field(j, "curves");
    if (!cs.is_array()) bad("curves must be an array");
    std::vector<PLCurve> out;
    for (const auto& c : cs) out.push_back(curve_from_json(c));
    return out;
}

Json to_json(const IntersectionList& list) {
    return Json{{"levels", list.levels}, {"degenerate", list.degenerate}};
}

IntersectionList intersection_list_from_json(const Json& j) {
    IntersectionList list;
    const Json& ls = field(j, "levels");
    if (!ls.is_array()) bad("levels must be an array");
    for (const auto& l : ls) list.levels.push_back(as_int(l, "level"));
    if (j.contains("degenerate")) {
        if (!j.at("degenerate").is_boolean()) bad("degenerate must be a boolean");
        list.degenerate = j.at("degenerate").get<bool>();
    }
    return list;
}

Json to_json(const CrossingProfile& p) {
    return Json{{"c_gamma_beta", p.c_gamma_beta},
                {"c_beta_gamma", p.c_beta_gamma},
                {"kind", to_string(p.kind)},
                {"identical", p.identical}};
}

CrossingProfile profile_from_json(const Json& j) {
    CrossingProfile p;
    p.c_gamma_beta = as_size(field(j, "c_gamma_beta"), "c_gamma_beta");
    p.c_beta_gamma = as_size(field(j, "c_beta_gamma"), "c_beta_gamma");
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) bad("kind must be a string");
    p.kind = parse_profile_kind(kind.get<std::string>());
    if (j.contains("identical")) p.identical = j.at("identical").get<bool>();
    return p;
}

Json to_json(const LevelSet& set) { return Json(std::vector<std::int64_t>(set.begin(), set.end())); }

LevelSet level_set_from_json(const Json& j) {
    if (!j.is_array()) bad("a level set is an array of integers");
    LevelSet s;
    for (const auto& l : j) s.insert(as_int(l, "level"));
    return s;
}

Json to_json(const PushState& s) {
    Json history = Json::array();
    for (const auto& e : s.history()) history.push_back({{"step", e.step}, {"tail", e.tail}, {"arc", e.arc}});
    return Json{{"step", s.step()},
                {"tail1", s.tail1()},
                {"tail2", s.tail2()},
                {"tail3", s.tail3()},
                {"history", history}};
}

PushState push_state_from_json(const Json& j) {
    auto run_size = [&](const char* key) {
        const Json& t = field(j, key);
        if (!t.is_array()) bad(std::string(key) + " must be an array");
        return static_cast<std::int64_t>(t.size());
    };
    std::vector<PushEvent> history;
    for (const auto& e : field(j, "history")) {
        history.push_back({as_size(field(e, "step"), "step"), static_cast<int>(as_int(field(e, "tail"), "tail")),
                           field(e, "arc").get<std::string>()});
    }
    const PushState s = PushState::from_parts(run_size("tail1") - 1, run_size("tail2"), run_size("tail3"),
                                              as_size(field(j, "step"), "step"), std::move(history));
    if (to_json(s) != j) bad("push state tails must be runs {0..a}, {-1..-b}, {-1..-c}");
    return s;
}

Json to_json(const DistanceCertificate& c) {
    Json j{{"n", c.n},
           {"case", to_string(c.kind)},
           {"profile", to_json(c.profile)},
           {"claimed_distance", c.claimed_distance},
           {"bound_check",
            {{"formula", c.bound_check.formula}, {"lower", c.bound_check.lower}, {"upper", c.bound_check.upper}}}};
    j["push_step"] = c.push_step ? Json(*c.push_step) : Json(nullptr);
    return j;
}

DistanceCertificate certificate_from_json(const Json& j) {
    DistanceCertificate c;
    c.n = as_size(field(j, "n"), "n");
    c.kind = parse_profile_kind(field(j, "case").get<std::string>());
    c.profile = profile_from_json(field(j, "profile"));
    c.claimed_distance = as_size(field(j, "claimed_distance"), "claimed_distance");
    const Json& b = field(j, "bound_check");
    c.bound_check = {field(b, "formula").get<std::string>(), as_size(field(b, "lower"), "lower"),
                     as_size(field(b, "upper"), "upper")};
    if (j.contains("push_step") && !j.at("push_step").is_null()) c.push_step = as_size(j.at("push_step"), "push_step");
    return c;
}

Json to_json(const std::vector<LedgerRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        out.push_back({{"n", r.n},
                       {"lift_shift", r.lift_shift},
                       {"levels", r.levels},
                       {"M", r.max_abs_level},
                       {"violates", r.violates}});
    }
    return out;
}

Json to_json(const std::vector<TraceRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        out.push_back({{"step", r.step},
                       {"push", r.push},
                       {"tail1", r.state.tail1()},
                       {"tail2", r.state.tail2()},
                       {"tail3", r.state.tail3()},
                       {"c_gamma_beta", r.profile.c_gamma_beta},
                       {"c_beta_gamma", r.profile.c_beta_gamma}});
    }
    return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ValidationError("empty entry in list '" + text + "'");
        const std::string t = item.substr(b, e - b + 1);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(t, &used);
        } catch (const std::exception&) {
            throw ValidationError("'" + t + "' is not an integer");
        }
        if (used != t.size()) throw ValidationError("'" + t + "' is not an integer");
        out.push_back(v);
    }
    return out;
}

}  // namespace fcl
