#pragma once

#include <complex>
#include <string_view>

namespace loghankel {

/// Real coefficients of the quadratic A + B z + C z^2.
struct YInput {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
};

/// Which closed-form piece produced Y(A, B, C).
enum class YBranch {
    same_sign_edge,      // AC >= 0, |B| >= 2(1 - |C|)
    same_sign_interior,  // AC >= 0, |B| < 2(1 - |C|)
    mixed_interior_minus,
    mixed_interior_plus,
    mixed_edge_plus,     // R: |A| + |B| - |C|
    mixed_edge_minus,    // R: -|A| + |B| + |C|
    mixed_sqrt,          // R: (|A| + |C|) sqrt(1 - B^2 / (4AC))
};

std::string_view to_string(YBranch branch);

struct YResult {
    double value;
    YBranch branch;
};

/// Y(A, B, C) = max over |z| <= 1 of |A + B z + C z^2| + 1 - |z|^2, in closed form.
///
/// Conditions are tested in order, non-strict as written, first match wins:
///
///   AC >= 0:
///     |A| + |B| + |C|                    if |B| >= 2(1 - |C|)
///     1 + |A| + B^2 / (4(1 - |C|))       otherwise
///   AC < 0:
///     1 - |A| + B^2 / (4(1 - |C|))       if -4AC(C^-2 - 1) <= B^2 and |B| < 2(1 - |C|)
///     1 + |A| + B^2 / (4(1 + |C|))       if B^2 < min(4(1 + |C|)^2, -4AC(C^-2 - 1))
///     R(A, B, C)                         otherwise
///   R(A, B, C):
///     |A| + |B| - |C|                    if |C|(|B| + 4|A|) <= |AB|
///     -|A| + |B| + |C|                   if |AB| <= |C|(|B| - 4|A|)
///     (|A| + |C|) sqrt(1 - B^2 / (4AC))  otherwise
///
/// In R's first piece the |C| enters with a minus sign: with AC < 0 the three
/// terms of A + Bz + Cz^2 cannot align on the unit circle, and the brute-force
/// maximum confirms |A| + |B| - |C|.
YResult y_closed(const YInput& y);

/// Polar grid on the closed half disk 0 <= arg z <= pi (the integrand is
/// conjugate-symmetric for real coefficients), followed by zoom refinement.
struct OracleGrid {
    int radial = 256;
    int angular = 1024;
    int refine_rounds = 3;
    int zoom = 10;
    /// Grid-local maxima refined independently; the best survives.
    int candidates = 4;
};

struct OracleResult {
    double value;
    std::complex<double> argmax;
};

/// Brute-force maximum of |A + B z + C z^2| + 1 - |z|^2 over the closed disk.
/// Throws DomainError when the grid is coarser than 256 x 1024.
OracleResult y_oracle(const YInput& y, const OracleGrid& grid = {});

} // namespace loghankel
