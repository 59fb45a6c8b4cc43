#include "fcl/sequence.hpp"

#include "fcl/errors.hpp"
#include "fcl/pointpush.hpp"

namespace fcl {

BoundCheck derive_bounds(const CrossingProfile& profile) {
    switch (profile.kind) {
        case ProfileKind::separating: {
            const std::size_t d = separating_distance(profile);
            return {"ceil(C/2)+1", d, d};
        }
        case ProfileKind::nonseparating: {
            const auto b = nonseparating_bounds(profile);
            return {"ceil(max/2)+1 <= d <= min+1", b.lower, b.upper};
        }
        case ProfileKind::torus: {
            check_profile(profile);
            const std::size_t d = profile.identical ? 0 : profile.c_gamma_beta + 1;
            return {"C+1", d, d};
        }
    }
    throw ValidationError("unknown profile kind");
}

DistanceCertificate build_certificate(std::size_t n, ProfileKind kind, SeparatingParity parity) {
    if (n == 0) throw ValidationError("distance 0 means equal curves; no certificate is needed");
    DistanceCertificate cert;
    cert.n = n;
    cert.kind = kind;
    cert.claimed_distance = n;
    cert.profile.kind = kind;
    switch (kind) {
        case ProfileKind::separating: {
            const std::size_t c = (parity == SeparatingParity::odd && n >= 2) ? 2 * n - 3 : 2 * (n - 1);
            cert.profile.c_gamma_beta = cert.profile.c_beta_gamma = c;
            break;
        }
        case ProfileKind::torus:
            cert.profile.c_gamma_beta = cert.profile.c_beta_gamma = n - 1;
            break;
        case ProfileKind::nonseparating: {
            if (n <= 2) {
                cert.profile.c_gamma_beta = cert.profile.c_beta_gamma = n - 1;
                break;
            }
            // Odd-max profile (2m-1, m) with m = n-1, taken from the push trace.
            const std::size_t m = n - 1;
            for (const auto& row : run_schedule(3 * n + 3)) {
                if (row.profile.c_gamma_beta == 2 * m - 1 && row.profile.c_beta_gamma == m) {
                    cert.profile = row.profile;
                    cert.push_step = row.step;
                    break;
                }
            }
            if (!cert.push_step) {
                throw InvariantError("push schedule does not realize (" + std::to_string(2 * m - 1) + "," +
                                     std::to_string(m) + ")");
            }
            break;
        }
    }
    cert.bound_check = derive_bounds(cert.profile);
    if (cert.bound_check.lower != n || cert.bound_check.upper != n) {
        throw InvariantError("certificate bounds do not pin distance " + std::to_string(n));
    }
    return cert;
}

std::vector<PLCurve> realize_torus_sequence(std::size_t n) {
    std::vector<PLCurve> out;
    const IntOffset w{1, 0};
    const Rational q(1, 4);
    out.push_back(PLCurve::from_lift({{Rational(0), Rational(0)}, {Rational(1, 2), Rational(0)}}, w));
    for (std::size_t k = 1; k <= n; ++k) {
        if (k == 1) {
            out.push_back(PLCurve::from_lift({{Rational(0), Rational(1, 2)}}, w));
            continue;
        }
        // A tent from -1/4 up to (k-2)+1/4 crosses the horizontals y = 0..k-2.
        const Rational peak = Rational(static_cast<long>(k) - 2) + q;
        out.push_back(PLCurve::from_lift({{Rational(0), -q},
                                          {Rational(1, 8), peak},
                                          {Rational(3, 8), peak},
                                          {Rational(1, 2), -q}},
                                         w));
    }
    return out;
}

namespace {

// Coarse 3x3 staircase with column heights h[0..2], drawn on the 6x6 grid.
GridCurve coarse_staircase(const std::vector<int>& h) {
    std::vector<LatticePoint> coarse;
    for (std::size_t c = 0; c < h.size(); ++c) {
        const int from = h[c];
        const int to = h[(c + 1) % h.size()];
        const int dir = (to > from) - (to < from);
        for (int j = from; j != to; j += dir) coarse.push_back({static_cast<int>(c), j});
        coarse.push_back({static_cast<int>(c), to});
    }
    std::vector<LatticePoint> fine;
    for (std::size_t k = 0; k < coarse.size(); ++k) {
        const LatticePoint next = k + 1 < coarse.size() ? coarse[k + 1] : LatticePoint{coarse[0].i + 3, coarse[0].j};
        fine.push_back({2 * coarse[k].i, 2 * coarse[k].j});
        fine.push_back({coarse[k].i + next.i, coarse[k].j + next.j});
    }
    return GridCurve(6, 6, std::move(fine));
}

}  // namespace

std::vector<GridCurve> realize_torus_sequence_on_grid(std::size_t n) {
    if (n > 3) {
        throw CapExceededError("grid realization covers n <= 3 on the 6x6 grid, got n = " + std::to_string(n));
    }
    const std::vector<std::vector<int>> heights = {{0, -1, -1}, {1, 1, 1}, {0, -2, -2}, {2, 0, 0}};
    std::vector<GridCurve> out;
    for (std::size_t k = 0; k <= n; ++k) out.push_back(coarse_staircase(heights[k]));
    return out;
}

}  // namespace fcl
