#ifndef FCL_LEVEL_CALCULUS_HPP
#define FCL_LEVEL_CALCULUS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fcl {

// Levels met by an arc, in order along the arc.
struct IntersectionList {
    std::vector<std::int64_t> levels;
    bool degenerate = false;  // the arc is homotopic into one elevation
};

enum class ListShape { monotone, vee, degenerate_pair, invalid };

struct Classification {
    ListShape shape = ListShape::invalid;
    std::size_t pivot = 0;  // 1-based k with l_k = l_{k+1}, for vee
    std::string reason;     // first violated clause, for invalid

    std::string describe() const;  // "Monotone", "Vee(2)", "DegeneratePair", "Invalid(...)"
};

Classification classify_list(const IntersectionList& list);

struct EssentialCount {
    std::size_t count = 0;
    // Which characterization (1, 2 or 3) of lists that start or end at level +-1
    // applies, when one does.
    std::optional<int> endpoint_case;
};

// Throws ValidationError for an Invalid list.
EssentialCount essential_count(const IntersectionList& list);

enum class ProfileKind { separating, nonseparating, torus };

std::string to_string(ProfileKind kind);
ProfileKind parse_profile_kind(const std::string& text);

struct CrossingProfile {
    std::size_t c_gamma_beta = 0;  // levels of gamma met by beta^
    std::size_t c_beta_gamma = 0;  // levels of beta met by gamma^
    ProfileKind kind = ProfileKind::torus;
    bool identical = false;  // beta = gamma, as opposed to disjoint

    friend bool operator==(const CrossingProfile&, const CrossingProfile&) = default;
};

// Throws InvariantError naming the first violated invariant.
void check_profile(const CrossingProfile& profile);

using LevelSet = std::set<std::int64_t>;

struct LevelSetReport {
    bool ok = true;
    std::string message;
    std::optional<std::int64_t> missing;
};

// The mirror level required next to a nonzero level n: 1 - n for n > 0, -n - 1 for n < 0.
std::int64_t mirror_level(std::int64_t n);

// Adds the mirror of every nonzero level.
LevelSet mirror_closure_step(const LevelSet& set);

LevelSetReport validate_separating_levels(const LevelSet& set);

std::size_t separating_distance(const CrossingProfile& profile);

struct DistanceBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
};

DistanceBounds nonseparating_bounds(const CrossingProfile& profile);

bool profile_feasible(const CrossingProfile& profile);

// Orientation of the bigon side at an outermost level, for nonseparating surgery.
enum class OutermostTag { toward_end, away_from_end };

struct SurgeryPath {
    std::vector<LevelSet> sets;  // initial set first, empty set last
    std::size_t min_transitions = 0;
    std::size_t max_transitions = 0;
};

// Outermost-level deletion sequence ending at the empty set; transitions count
// the final edge to gamma. Tags default to toward_end for every level.
SurgeryPath surgery_path(const LevelSet& initial, ProfileKind kind,
                         const std::map<std::int64_t, OutermostTag>& tags = {});

}  // namespace fcl

#endif  // FCL_LEVEL_CALCULUS_HPP
