#include "fcl/pointpush.hpp"

#include "fcl/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace fcl {

class PushRunner {
public:
    static void push(PushState& s, int tail, const std::string& arc, std::int64_t levels = 1) {
        switch (tail) {
            case 1: s.a_ += levels; break;
            case 2: s.b_ += levels; break;
            default: s.c_ += levels; break;
        }
        s.history_.push_back({s.step_, tail, arc});
    }
    static void set_step(PushState& s, std::size_t step) { s.step_ = step; }
};

PushState PushState::from_parts(std::int64_t a, std::int64_t b, std::int64_t c, std::size_t step,
                                std::vector<PushEvent> history) {
    if (a < -1 || b < 0 || c < 0) throw ValidationError("push state tails out of range");
    PushState s;
    s.a_ = a;
    s.b_ = b;
    s.c_ = c;
    s.step_ = step;
    s.history_ = std::move(history);
    return s;
}

std::vector<std::int64_t> PushState::tail1() const {
    std::vector<std::int64_t> out;
    for (std::int64_t k = 0; k <= a_; ++k) out.push_back(k);
    return out;
}

std::vector<std::int64_t> PushState::tail2() const {
    std::vector<std::int64_t> out;
    for (std::int64_t k = 1; k <= b_; ++k) out.push_back(-k);
    return out;
}

std::vector<std::int64_t> PushState::tail3() const {
    std::vector<std::int64_t> out;
    for (std::int64_t k = 1; k <= c_; ++k) out.push_back(-k);
    return out;
}

namespace {

struct Push {
    int tail;
    const char* arc;
};

constexpr Push kStepZero[3] = {{1, "Purple"}, {2, "Orange"}, {3, "Blue"}};

// The first tail is created by pushing along black and then purple, which
// reaches levels 0 and 1 at once.
void push_step_zero(PushState& s, const Push& p) { PushRunner::push(s, p.tail, p.arc, p.tail == 1 ? 2 : 1); }

Push scheduled_push(std::size_t k) {
    switch (k) {
        case 1: return {1, "Orange"};
        case 2: return {2, "Pink"};
        case 3: return {1, "Pink"};
        default: break;
    }
    switch (k % 3) {
        case 1: return {3, "Blue"};
        case 2: return {2, "Blue"};
        default: return {1, "Blue"};
    }
}

}  // namespace

PushState init_state() {
    PushState s;
    for (const auto& p : kStepZero) push_step_zero(s, p);
    return s;
}

PushState apply_step(const PushState& state, std::size_t k) {
    if (k != state.step() + 1) {
        throw SequencingError("step " + std::to_string(k) + " cannot follow step " + std::to_string(state.step()));
    }
    PushState next = state;
    PushRunner::set_step(next, k);
    const Push p = scheduled_push(k);
    PushRunner::push(next, p.tail, p.arc);
    return next;
}

CrossingProfile crossing_profile(const PushState& s) {
    CrossingProfile p;
    p.kind = ProfileKind::nonseparating;
    const auto t1 = static_cast<std::size_t>(s.tail1_top() + 1);
    const auto below = static_cast<std::size_t>(std::max(s.tail2_depth(), s.tail3_depth()));
    p.c_gamma_beta = t1 + below;
    p.c_beta_gamma = s.tail1_top() >= 0 ? static_cast<std::size_t>(s.tail1_top() + 1) : 0;
    return p;
}

std::vector<TraceRow> run_schedule(std::size_t n_steps, std::size_t max_steps) {
    if (n_steps > max_steps) {
        throw CapExceededError("schedule of " + std::to_string(n_steps) + " steps exceeds the cap " +
                               std::to_string(max_steps));
    }
    std::vector<TraceRow> rows;
    PushState s;
    for (const auto& p : kStepZero) {
        push_step_zero(s, p);
        rows.push_back({0, std::string("T") + std::to_string(p.tail) + " " + p.arc, s, crossing_profile(s)});
    }
    for (std::size_t k = 1; k <= n_steps; ++k) {
        s = apply_step(s, k);
        rows.push_back({k, s.history().back().label(), s, crossing_profile(s)});
    }
    return rows;
}

std::string format_run(const std::vector<std::int64_t>& levels) {
    if (levels.empty()) return "none";
    std::ostringstream out;
    out << "{";
    if (levels.size() <= 2) {
        for (std::size_t i = 0; i < levels.size(); ++i) out << (i ? "," : "") << levels[i];
    } else {
        out << levels.front() << ".." << levels.back();
    }
    out << "}";
    return out.str();
}

std::string format_table(const std::vector<TraceRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(6) << "Step" << std::setw(12) << "Push" << std::setw(12) << "Tail 1"
        << std::setw(12) << "Tail 2" << std::setw(12) << "Tail 3" << std::setw(8) << "C_g(b)"
        << "C_b(g)\n";
    for (const auto& r : rows) {
        out << std::setw(6) << r.step << std::setw(12) << r.push << std::setw(12) << format_run(r.state.tail1())
            << std::setw(12) << format_run(r.state.tail2()) << std::setw(12) << format_run(r.state.tail3())
            << std::setw(8) << r.profile.c_gamma_beta << r.profile.c_beta_gamma << "\n";
    }
    return out.str();
}

}  // namespace fcl
