#include "loghankel/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace loghankel {

namespace {

void require_in_disk(Complex p, const char* name) {
    if (!(std::isfinite(p.real()) && std::isfinite(p.imag())) || std::abs(p) > 1.0 + kUnitTol) {
        throw DomainError(std::string("disk parameter ") + name + " must lie in the closed unit disk");
    }
}

bool on_circle(Complex p) { return std::abs(std::abs(p) - 1.0) <= kUnitTol; }

// Recovered parameters may overshoot the circle by rounding.
Complex project_recovered(Complex p, const char* name) {
    const double r = std::abs(p);
    if (r > 1.0 + 1e-9) {
        throw DomainError(std::string("coefficients are not attainable: |") + name + "| > 1");
    }
    return r > 1.0 ? p / r : p;
}

} // namespace

DiskParams::DiskParams(Complex p1, Complex p2, Complex p3) : p1_(p1), p2_(p2), p3_(p3) {
    require_in_disk(p1_, "p1");
    require_in_disk(p2_, "p2");
    require_in_disk(p3_, "p3");
}

CaraCoeffs coeffs_from_params(const DiskParams& p) {
    const Complex p1 = p.p1();
    const Complex p2 = p.p2();
    const Complex p3 = p.p3();
    const double s1 = 1.0 - std::norm(p1);
    const double s2 = 1.0 - std::norm(p2);
    return CaraCoeffs{
        2.0 * p1,
        2.0 * p1 * p1 + 2.0 * s1 * p2,
        2.0 * p1 * p1 * p1 + 4.0 * s1 * p1 * p2 - 2.0 * s1 * std::conj(p1) * p2 * p2 + 2.0 * s1 * s2 * p3,
    };
}

ParamsRecovery params_from_coeffs(const CaraCoeffs& c) {
    const Complex p1 = project_recovered(c.c1 / 2.0, "p1");
    if (std::abs(p1) >= 1.0 - kUnitTol) {
        return ParamsRecovery{DiskParams(p1, 0.0, 0.0), true, true};
    }
    const double s1 = 1.0 - std::norm(p1);
    const Complex p2 = project_recovered((c.c2 - 2.0 * p1 * p1) / (2.0 * s1), "p2");
    if (std::abs(p2) >= 1.0 - kUnitTol) {
        return ParamsRecovery{DiskParams(p1, p2, 0.0), false, true};
    }
    const double s2 = 1.0 - std::norm(p2);
    const Complex rest = c.c3 - 2.0 * p1 * p1 * p1 - 4.0 * s1 * p1 * p2 + 2.0 * s1 * std::conj(p1) * p2 * p2;
    const Complex p3 = project_recovered(rest / (2.0 * s1 * s2), "p3");
    return ParamsRecovery{DiskParams(p1, p2, p3), false, false};
}

TruncatedSeries boundary_p(const DiskParams& p, BoundaryLevel level, int order) {
    const Complex p1 = p.p1();
    const Complex p2 = p.p2();
    const Complex p3 = p.p3();
    TruncatedSeries num(order);
    TruncatedSeries den(order);
    num.set(0, 1.0);
    den.set(0, 1.0);

    switch (level) {
    case BoundaryLevel::one:
        if (!on_circle(p1)) {
            throw DomainError("level-1 extremal needs |p1| = 1");
        }
        // (1 + p1 z) / (1 - p1 z)
        num.set(1, p1);
        den.set(1, -p1);
        break;
    case BoundaryLevel::two:
        if (on_circle(p1) || !on_circle(p2)) {
            throw DomainError("level-2 extremal needs |p1| < 1 and |p2| = 1");
        }
        {
            const Complex n[] = {p1 + std::conj(p1) * p2, p2};
            const Complex d[] = {-(p1 - std::conj(p1) * p2), -p2};
            for (int k = 1; k <= 2 && k <= order; ++k) {
                num.set(k, n[k - 1]);
                den.set(k, d[k - 1]);
            }
        }
        break;
    case BoundaryLevel::three: {
        if (on_circle(p1) || on_circle(p2) || !on_circle(p3)) {
            throw DomainError("level-3 extremal needs |p1|, |p2| < 1 and |p3| = 1");
        }
        const Complex q1 = std::conj(p1);
        const Complex q2 = std::conj(p2);
        const Complex n[] = {q2 * p3 + q1 * p2 + p1, q1 * p3 + p1 * q2 * p3 + p2, p3};
        const Complex d[] = {q2 * p3 + q1 * p2 - p1, q1 * p3 - p1 * q2 * p3 - p2, -p3};
        for (int k = 1; k <= 3 && k <= order; ++k) {
            num.set(k, n[k - 1]);
            den.set(k, d[k - 1]);
        }
        break;
    }
    default:
        throw DomainError("unknown boundary level");
    }
    return divide(num, den);
}

TruncatedSeries cara_polynomial(const CaraCoeffs& c, int order) {
    TruncatedSeries s(std::max(order, 3));
    s.set(0, 1.0);
    s.set(1, c.c1);
    s.set(2, c.c2);
    s.set(3, c.c3);
    return order >= 3 ? s : s.truncated(order);
}

} // namespace loghankel
