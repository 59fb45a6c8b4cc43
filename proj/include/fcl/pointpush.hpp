#ifndef FCL_POINTPUSH_HPP
#define FCL_POINTPUSH_HPP

#include "fcl/level_calculus.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fcl {

struct PushEvent {
    std::size_t step = 0;
    int tail = 0;       // 1, 2 or 3
    std::string arc;    // arc colour pushed along

    std::string label() const { return "T" + std::to_string(tail) + " " + arc; }
    friend bool operator==(const PushEvent&, const PushEvent&) = default;
};

// Levels of gamma met by the three tails of beta^. Tail 1 covers {0..a},
// tail 2 covers {-1..-b}, tail 3 covers {-1..-c}; -1 and 0 mean "no tail yet".
class PushState {
public:
    std::int64_t tail1_top() const { return a_; }
    std::int64_t tail2_depth() const { return b_; }
    std::int64_t tail3_depth() const { return c_; }
    std::size_t step() const { return step_; }
    const std::vector<PushEvent>& history() const { return history_; }

    // For deserialization; throws ValidationError on inconsistent parts.
    static PushState from_parts(std::int64_t a, std::int64_t b, std::int64_t c, std::size_t step,
                                std::vector<PushEvent> history);

    std::vector<std::int64_t> tail1() const;
    std::vector<std::int64_t> tail2() const;
    std::vector<std::int64_t> tail3() const;

    friend bool operator==(const PushState&, const PushState&) = default;

private:
    friend class PushRunner;
    std::int64_t a_ = -1;
    std::int64_t b_ = 0;
    std::int64_t c_ = 0;
    std::size_t step_ = 0;
    std::vector<PushEvent> history_;
};

// State after the three pushes of step 0.
PushState init_state();

// Throws SequencingError unless k = state.step() + 1.
PushState apply_step(const PushState& state, std::size_t k);

CrossingProfile crossing_profile(const PushState& state);

struct TraceRow {
    std::size_t step = 0;
    std::string push;
    PushState state;
    CrossingProfile profile;
};

// Steps 0..n_steps; step 0 contributes one row per push. Throws
// CapExceededError past max_steps.
std::vector<TraceRow> run_schedule(std::size_t n_steps, std::size_t max_steps = 10000);

std::string format_run(const std::vector<std::int64_t>& levels);
std::string format_table(const std::vector<TraceRow>& rows);

}  // namespace fcl

#endif  // FCL_POINTPUSH_HPP
