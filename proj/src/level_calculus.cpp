#include "fcl/level_calculus.hpp"

#include "fcl/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace fcl {

std::string Classification::describe() const {
    switch (shape) {
        case ListShape::monotone: return "Monotone";
        case ListShape::vee: return "Vee(" + std::to_string(pivot) + ")";
        case ListShape::degenerate_pair: return "DegeneratePair";
        case ListShape::invalid: return "Invalid(" + reason + ")";
    }
    return "Invalid(unknown)";
}

namespace {

Classification invalid(std::string reason) { return {ListShape::invalid, 0, std::move(reason)}; }

std::string pos(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

Classification classify_list(const IntersectionList& list) {
    const auto& l = list.levels;
    const std::size_t n = l.size();
    if (n == 0) return invalid("empty list");
    if (list.degenerate) {
        if (n == 2 && l[0] == l[1]) return {ListShape::degenerate_pair, 0, {}};
        return invalid("a degenerate arc has a list of the form (l,l)");
    }
    std::vector<std::size_t> repeats;
    int direction = 0;
    bool turns = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::int64_t d = l[i + 1] - l[i];
        if (std::llabs(d) > 1) {
            return invalid("step between positions " + pos(i) + " and " + pos(i + 1) + " is not 1");
        }
        if (d == 0) {
            repeats.push_back(i);
            continue;
        }
        if (direction != 0 && d != direction) turns = true;
        direction = static_cast<int>(d);
    }
    if (repeats.empty()) {
        if (turns) return invalid("list changes direction without a repeated level");
        return {ListShape::monotone, 0, {}};
    }
    for (std::size_t k : repeats) {
        if (l[k] == 0) return invalid("the repeated level cannot be 0");
    }
    if (repeats.size() > 1) return invalid("more than one repeated level");
    if (n == 2) return {ListShape::degenerate_pair, 0, {}};
    const std::size_t k = repeats.front();
    for (std::size_t i = 0; i < k; ++i) {
        if (std::llabs(l[i]) <= std::llabs(l[i + 1])) {
            return invalid("absolute values are not strictly decreasing up to the repeated level");
        }
    }
    for (std::size_t i = k + 1; i + 1 < n; ++i) {
        if (std::llabs(l[i]) >= std::llabs(l[i + 1])) {
            return invalid("absolute values are not strictly increasing after the repeated level");
        }
    }
    return {ListShape::vee, k + 1, {}};
}

EssentialCount essential_count(const IntersectionList& list) {
    const auto c = classify_list(list);
    if (c.shape == ListShape::invalid) throw ValidationError("cannot count an invalid list: " + c.reason);
    EssentialCount out;
    if (c.shape == ListShape::degenerate_pair && list.degenerate) {
        out.count = 1;
        return out;
    }
    out.count = list.levels.size();

    std::vector<std::int64_t> l = list.levels;
    if (std::llabs(l.front()) != 1) std::reverse(l.begin(), l.end());
    if (std::llabs(l.front()) != 1) return out;
    const auto n = static_cast<std::int64_t>(out.count);
    const std::int64_t s = l.front();
    const std::int64_t e = l.back();
    const bool repeats_first = l.size() >= 2 && l[1] == s;
    if (e == s * n) {
        out.endpoint_case = 1;
    } else if (e == -s * (n - 2)) {
        out.endpoint_case = 2;
    } else if (e == s * (n - 1) && repeats_first) {
        out.endpoint_case = 3;
    }
    return out;
}

std::string to_string(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::separating: return "separating";
        case ProfileKind::nonseparating: return "nonseparating";
        case ProfileKind::torus: return "torus";
    }
    return "unknown";
}

ProfileKind parse_profile_kind(const std::string& text) {
    if (text == "sep" || text == "separating") return ProfileKind::separating;
    if (text == "nonsep" || text == "nonseparating") return ProfileKind::nonseparating;
    if (text == "torus") return ProfileKind::torus;
    throw ValidationError("unknown kind '" + text + "' (expected sep, nonsep or torus)");
}

namespace {

bool half_max_bound_holds(std::size_t a, std::size_t b) {
    const std::size_t hi = std::max(a, b);
    const std::size_t lo = std::min(a, b);
    return hi / 2 + 1 <= lo;
}

std::string pair_text(const CrossingProfile& p) {
    return "(" + std::to_string(p.c_gamma_beta) + "," + std::to_string(p.c_beta_gamma) + ")";
}

}  // namespace

void check_profile(const CrossingProfile& p) {
    const bool zero_a = p.c_gamma_beta == 0;
    const bool zero_b = p.c_beta_gamma == 0;
    if (zero_a != zero_b) {
        throw InvariantError("profile " + pair_text(p) + " has exactly one zero crossing number");
    }
    if (p.identical && !zero_a) throw InvariantError("identical curves must have profile (0,0)");
    switch (p.kind) {
        case ProfileKind::separating:
        case ProfileKind::torus:
            if (p.c_gamma_beta != p.c_beta_gamma) {
                throw InvariantError(to_string(p.kind) + " profile " + pair_text(p) + " is not symmetric");
            }
            break;
        case ProfileKind::nonseparating:
            if (!zero_a && !half_max_bound_holds(p.c_gamma_beta, p.c_beta_gamma)) {
                throw InvariantError("nonseparating profile " + pair_text(p) + " violates floor(max/2)+1 <= min");
            }
            break;
    }
}

std::int64_t mirror_level(std::int64_t n) { return n > 0 ? 1 - n : -n - 1; }

LevelSet mirror_closure_step(const LevelSet& set) {
    LevelSet out = set;
    for (std::int64_t n : set) {
        if (n != 0) out.insert(mirror_level(n));
    }
    return out;
}

LevelSetReport validate_separating_levels(const LevelSet& set) {
    if (set.empty()) return {};
    if (!set.contains(0)) return {false, "level set does not contain 0", 0};
    for (std::int64_t k = *set.begin(); k <= *set.rbegin(); ++k) {
        if (!set.contains(k)) return {false, "level set is not consecutive, missing " + std::to_string(k), k};
    }
    for (std::int64_t n : set) {
        if (n == 0) continue;
        const std::int64_t m = mirror_level(n);
        if (!set.contains(m)) {
            return {false, "level " + std::to_string(n) + " requires mirror level " + std::to_string(m), m};
        }
    }
    return {};
}

std::size_t separating_distance(const CrossingProfile& p) {
    if (p.kind != ProfileKind::separating) throw ValidationError("separating_distance needs a separating profile");
    check_profile(p);
    if (p.identical) return 0;
    const std::size_t c = p.c_gamma_beta;
    return (c + 1) / 2 + 1;
}

DistanceBounds nonseparating_bounds(const CrossingProfile& p) {
    if (p.kind != ProfileKind::nonseparating) {
        throw ValidationError("nonseparating_bounds needs a nonseparating profile");
    }
    check_profile(p);
    if (p.identical) return {0, 0};
    const std::size_t hi = std::max(p.c_gamma_beta, p.c_beta_gamma);
    const std::size_t lo = std::min(p.c_gamma_beta, p.c_beta_gamma);
    return {(hi + 1) / 2 + 1, lo + 1};
}

bool profile_feasible(const CrossingProfile& p) {
    if (p.kind != ProfileKind::nonseparating) throw ValidationError("profile_feasible needs a nonseparating profile");
    if (p.c_gamma_beta == 0 && p.c_beta_gamma == 0) return true;
    if (p.c_gamma_beta == 0 || p.c_beta_gamma == 0) return false;
    return half_max_bound_holds(p.c_gamma_beta, p.c_beta_gamma);
}

namespace {

void require_run_with_zero(const LevelSet& set) {
    if (set.empty()) return;
    if (!set.contains(0)) throw ValidationError("level set does not contain 0");
    for (std::int64_t k = *set.begin(); k <= *set.rbegin(); ++k) {
        if (!set.contains(k)) throw ValidationError("level set is not consecutive, missing " + std::to_string(k));
    }
}

OutermostTag tag_of(const std::map<std::int64_t, OutermostTag>& tags, std::int64_t level) {
    const auto it = tags.find(level);
    return it == tags.end() ? OutermostTag::toward_end : it->second;
}

}  // namespace

SurgeryPath surgery_path(const LevelSet& initial, ProfileKind kind,
                         const std::map<std::int64_t, OutermostTag>& tags) {
    SurgeryPath path;
    path.sets.push_back(initial);
    LevelSet cur = initial;
    if (kind == ProfileKind::separating) {
        const auto report = validate_separating_levels(initial);
        if (!report.ok) throw ValidationError(report.message);
        if (cur.size() % 2 == 1) {
            cur.erase(std::prev(cur.end()));
            path.sets.push_back(cur);
        }
        while (!cur.empty()) {
            cur.erase(cur.begin());
            cur.erase(std::prev(cur.end()));
            path.sets.push_back(cur);
        }
        path.min_transitions = path.max_transitions = path.sets.size();
        return path;
    }

    require_run_with_zero(initial);
    std::size_t lo = 0;
    std::size_t hi = 0;
    while (!cur.empty()) {
        const std::int64_t a = *cur.begin();
        const std::int64_t b = *cur.rbegin();
        const bool mixed = kind == ProfileKind::nonseparating && a != b && tag_of(tags, a) != tag_of(tags, b);
        if (mixed) {
            cur.erase(a);
            cur.erase(b);
            lo += 1;
            hi += 2;
        } else {
            cur.erase(std::llabs(b) >= std::llabs(a) ? b : a);
            lo += 1;
            hi += 1;
        }
        path.sets.push_back(cur);
    }
    path.min_transitions = lo + 1;
    path.max_transitions = hi + 1;
    return path;
}

}  // namespace fcl
