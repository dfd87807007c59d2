#include "loghankel/ymax.hpp"

#include "loghankel/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace loghankel {

std::string_view to_string(YBranch branch) {
    switch (branch) {
    case YBranch::same_sign_edge:
        return "same_sign_edge";
    case YBranch::same_sign_interior:
        return "same_sign_interior";
    case YBranch::mixed_interior_minus:
        return "mixed_interior_minus";
    case YBranch::mixed_interior_plus:
        return "mixed_interior_plus";
    case YBranch::mixed_edge_plus:
        return "mixed_edge_plus";
    case YBranch::mixed_edge_minus:
        return "mixed_edge_minus";
    case YBranch::mixed_sqrt:
        return "mixed_sqrt";
    }
    return "unknown";
}

YResult y_closed(const YInput& y) {
    const double A = y.A;
    const double B = y.B;
    const double C = y.C;
    const double a = std::abs(A);
    const double b = std::abs(B);
    const double c = std::abs(C);
    const double b2 = B * B;

    if (A * C >= 0.0) {
        if (b >= 2.0 * (1.0 - c)) {
            return {a + b + c, YBranch::same_sign_edge};
        }
        return {1.0 + a + b2 / (4.0 * (1.0 - c)), YBranch::same_sign_interior};
    }

    // AC < 0, so C != 0 below.
    const double threshold = -4.0 * A * C * (1.0 / (C * C) - 1.0);
    if (threshold <= b2 && b < 2.0 * (1.0 - c)) {
        return {1.0 - a + b2 / (4.0 * (1.0 - c)), YBranch::mixed_interior_minus};
    }
    if (b2 < std::min(4.0 * (1.0 + c) * (1.0 + c), threshold)) {
        return {1.0 + a + b2 / (4.0 * (1.0 + c)), YBranch::mixed_interior_plus};
    }
    if (c * (b + 4.0 * a) <= std::abs(A * B)) {
        return {a + b - c, YBranch::mixed_edge_plus};
    }
    if (std::abs(A * B) <= c * (b - 4.0 * a)) {
        return {-a + b + c, YBranch::mixed_edge_minus};
    }
    return {(a + c) * std::sqrt(1.0 - b2 / (4.0 * A * C)), YBranch::mixed_sqrt};
}

namespace {

struct Candidate {
    double value;
    std::complex<double> z;
};

double objective(const YInput& y, std::complex<double> z) {
    return std::abs(y.A + z * (y.B + y.C * z)) + 1.0 - std::norm(z);
}

std::complex<double> into_disk(std::complex<double> z) {
    const double r = std::abs(z);
    return r > 1.0 ? z / r : z;
}

} // namespace

OracleResult y_oracle(const YInput& y, const OracleGrid& grid) {
    if (grid.radial < 256 || grid.angular < 1024) {
        throw DomainError("y_oracle needs at least a 256 x 1024 polar grid");
    }
    constexpr double pi = std::numbers::pi;
    const int nr = grid.radial;
    const int nt = grid.angular;
    const double dr = 1.0 / nr;
    const double dt = pi / nt;

    std::vector<double> values(static_cast<std::size_t>(nr + 1) * (nt + 1));
    auto at = [&](int i, int j) -> double& { return values[static_cast<std::size_t>(i) * (nt + 1) + j]; };
    for (int i = 0; i <= nr; ++i) {
        for (int j = 0; j <= nt; ++j) {
            at(i, j) = objective(y, std::polar(i * dr, j * dt));
        }
    }

    // Grid-local maxima over the 8-neighbourhood.
    std::vector<Candidate> peaks;
    for (int i = 0; i <= nr; ++i) {
        for (int j = 0; j <= nt; ++j) {
            const double v = at(i, j);
            bool peak = true;
            for (int di = -1; di <= 1 && peak; ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    const int ii = i + di;
                    const int jj = j + dj;
                    if ((di == 0 && dj == 0) || ii < 0 || ii > nr || jj < 0 || jj > nt) {
                        continue;
                    }
                    if (at(ii, jj) > v) {
                        peak = false;
                        break;
                    }
                }
            }
            if (peak) {
                peaks.push_back({v, std::polar(i * dr, j * dt)});
            }
        }
    }
    std::stable_sort(peaks.begin(), peaks.end(),
                     [](const Candidate& l, const Candidate& r) { return l.value > r.value; });
    if (peaks.size() > static_cast<std::size_t>(grid.candidates)) {
        peaks.resize(static_cast<std::size_t>(grid.candidates));
    }

    // Refinement works on Cartesian windows: near the origin a polar cell is
    // long and thin, and a peak can sit a whole angular sweep away from the
    // best grid node while being only a radial step away in the plane.
    Candidate best{-1.0, {}};
    for (Candidate incumbent : peaks) {
        double half = std::max(dr, std::abs(incumbent.z) * dt);
        for (int round = 0; round < grid.refine_rounds; ++round) {
            const std::complex<double> centre = incumbent.z;
            const double fine = half / grid.zoom;
            for (int i = -grid.zoom; i <= grid.zoom; ++i) {
                for (int j = -grid.zoom; j <= grid.zoom; ++j) {
                    const auto z = into_disk(centre + std::complex<double>(i * fine, j * fine));
                    const double v = objective(y, z);
                    if (v > incumbent.value) {
                        incumbent = {v, z};
                    }
                }
            }
            half = fine;
        }
        if (incumbent.value > best.value) {
            best = incumbent;
        }
    }

    // With real A, B, C the objective is symmetric under conjugation and often
    // peaks on a ridge along the real axis, which a 2-D window approaches only
    // slowly. Refine the real diameter on its own as well.
    Candidate on_axis{-1.0, {}};
    for (int i = -nr; i <= nr; ++i) {
        const std::complex<double> z(i * dr, 0.0);
        const double v = objective(y, z);
        if (v > on_axis.value) {
            on_axis = {v, z};
        }
    }
    double half = dr;
    for (int round = 0; round < grid.refine_rounds + 3; ++round) {
        const double centre = on_axis.z.real();
        const double fine = half / grid.zoom;
        for (int i = -grid.zoom; i <= grid.zoom; ++i) {
            const double x = std::clamp(centre + i * fine, -1.0, 1.0);
            const double v = objective(y, {x, 0.0});
            if (v > on_axis.value) {
                on_axis = {v, {x, 0.0}};
            }
        }
        half = fine;
    }
    if (on_axis.value > best.value) {
        best = on_axis;
    }
    return {best.value, best.z};
}

} // namespace loghankel
