#include "loghankel/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace loghankel {

CoeffTriple coeff_triple(const TruncatedSeries& f) {
    if (f.order() < 4) {
        throw DomainError("coeff_triple needs a series of order >= 4");
    }
    return CoeffTriple{f[2], f[3], f[4]};
}

TruncatedSeries series_from_triple(const CoeffTriple& t, int order) {
    TruncatedSeries f = TruncatedSeries::identity(std::max(order, 4));
    f.set(2, t.a2);
    f.set(3, t.a3);
    f.set(4, t.a4);
    return order >= 4 ? f : f.truncated(order);
}

CoeffTriple inverse_coeffs(const CoeffTriple& t) {
    const Complex a2 = t.a2;
    return CoeffTriple{
        -a2,
        -t.a3 + 2.0 * a2 * a2,
        -t.a4 + 5.0 * a2 * t.a3 - 5.0 * a2 * a2 * a2,
    };
}

GammaTriple log_coeffs(const CoeffTriple& t) {
    const Complex a2 = t.a2;
    return GammaTriple{
        0.5 * a2,
        0.5 * (t.a3 - 0.5 * a2 * a2),
        0.5 * (t.a4 - a2 * t.a3 + a2 * a2 * a2 / 3.0),
    };
}

GammaTriple inv_log_coeffs(const CoeffTriple& t) { return log_coeffs(inverse_coeffs(t)); }

namespace {

Complex determinant(std::vector<std::vector<Complex>> m) {
    const std::size_t q = m.size();
    if (q == 1) {
        return m[0][0];
    }
    if (q == 2) {
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    }
    if (q == 3) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
    // Gaussian elimination with partial pivoting.
    Complex det{1.0};
    for (std::size_t col = 0; col < q; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < q; ++row) {
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) {
                pivot = row;
            }
        }
        if (m[pivot][col] == Complex{}) {
            return Complex{};
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < q; ++row) {
            const Complex factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < q; ++k) {
                m[row][k] -= factor * m[col][k];
            }
        }
    }
    return det;
}

} // namespace

Complex hankel(std::span<const Complex> seq, int q, int n) {
    if (q < 1 || n < 1) {
        throw DomainError("hankel: q and n must be positive");
    }
    const auto last = static_cast<std::size_t>(n + 2 * (q - 1));
    if (last > seq.size()) {
        throw DomainError("hankel: sequence too short for index " + std::to_string(last));
    }
    std::vector<std::vector<Complex>> m(q, std::vector<Complex>(q));
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            m[i][j] = seq[static_cast<std::size_t>(n - 1 + i + j)];
        }
    }
    return determinant(std::move(m));
}

Complex h21_inv_log(const CoeffTriple& t) {
    const Complex a2 = t.a2;
    const Complex a3 = t.a3;
    const Complex a2sq = a2 * a2;
    return (13.0 * a2sq * a2sq - 12.0 * a2sq * a3 - 12.0 * a3 * a3 + 12.0 * a2 * t.a4) / 48.0;
}

Complex h21_from_inverse(const CoeffTriple& inverse) {
    const Complex b2 = inverse.a2;
    const Complex b2sq = b2 * b2;
    return 0.25 * (b2 * inverse.a4 - inverse.a3 * inverse.a3 + b2sq * b2sq / 12.0);
}

CoeffTriple closed_form_coeffs(ClassTag tag, const CaraCoeffs& c) {
    const Complex c1 = c.c1;
    const Complex c2 = c.c2;
    const Complex c3 = c.c3;
    const Complex cubic = 2.0 * c3 + 3.0 * c1 * c2 + c1 * c1 * c1;
    switch (tag) {
    case ClassTag::convex:
        return CoeffTriple{0.5 * c1, (c2 + c1 * c1) / 6.0, cubic / 24.0};
    case ClassTag::starlike:
        return CoeffTriple{c1, 0.5 * (c2 + c1 * c1), cubic / 6.0};
    case ClassTag::generic:
        break;
    }
    throw DomainError("closed_form_coeffs needs a convex or starlike class");
}

ReducedParts reduced_parts(ClassTag tag, Complex p1, Complex p2) {
    const double r1 = std::norm(p1);
    const double s = 1.0 - r1;
    const double t = 1.0 - std::norm(p2);
    const Complex p1sq = p1 * p1;
    const Complex p2sq = p2 * p2;
    switch (tag) {
    case ClassTag::convex:
        return ReducedParts{
            p1sq * p1sq / 48.0 - s * p1sq * p2 / 24.0 - s * (2.0 + r1) * p2sq / 72.0,
            p1 * (s * t / 24.0),
        };
    case ClassTag::starlike:
        return ReducedParts{
            13.0 * p1sq * p1sq / 12.0 - 5.0 * s * p1sq * p2 / 6.0 - s * (3.0 + r1) * p2sq / 12.0,
            p1 * (s * t / 3.0),
        };
    case ClassTag::generic:
        break;
    }
    throw DomainError("reduced objective needs a convex or starlike class");
}

Complex reduced_objective(ClassTag tag, const DiskParams& p) {
    const ReducedParts parts = reduced_parts(tag, p.p1(), p.p2());
    return parts.base + parts.p3_factor * p.p3();
}

Complex reduced_convex(const DiskParams& p) { return reduced_objective(ClassTag::convex, p); }

Complex reduced_starlike(const DiskParams& p) { return reduced_objective(ClassTag::starlike, p); }

} // namespace loghankel
