#pragma once

#include "loghankel/series.hpp"

namespace loghankel {

/// Parameter triple (p1, p2, p3) of the closed unit disk describing the
/// first three coefficients of a Caratheodory function.
class DiskParams {
public:
    DiskParams(Complex p1, Complex p2, Complex p3);

    Complex p1() const { return p1_; }
    Complex p2() const { return p2_; }
    Complex p3() const { return p3_; }

    friend bool operator==(const DiskParams&, const DiskParams&) = default;

private:
    Complex p1_;
    Complex p2_;
    Complex p3_;
};

/// First three Taylor coefficients of p(z) = 1 + c1 z + c2 z^2 + c3 z^3 + ...
struct CaraCoeffs {
    Complex c1;
    Complex c2;
    Complex c3;
};

/// Inverse parametrization, with flags for the boundary cases where the
/// deeper parameters are not determined and were set to zero.
struct ParamsRecovery {
    DiskParams params;
    bool p2_undetermined = false;  // |p1| = 1
    bool p3_undetermined = false;  // |p1| = 1 or |p2| = 1
};

/// Tolerance used to decide |p| = 1.
inline constexpr double kUnitTol = 1e-12;

/// c1 = 2 p1,
/// c2 = 2 p1^2 + 2 (1 - |p1|^2) p2,
/// c3 = 2 p1^3 + 4 (1 - |p1|^2) p1 p2 - 2 (1 - |p1|^2) conj(p1) p2^2
///      + 2 (1 - |p1|^2)(1 - |p2|^2) p3.
///
/// For real p1 this is the familiar real-parameter form; the modulus and
/// conjugate are what make it valid on the whole disk.
CaraCoeffs coeffs_from_params(const DiskParams& p);

/// Solves coeffs_from_params for the parameters. Throws DomainError when
/// the coefficients are not attainable (recovered |p_k| > 1 beyond tolerance).
ParamsRecovery params_from_coeffs(const CaraCoeffs& c);

/// Which closed-form extremal function of the parametrization to build.
enum class BoundaryLevel { one = 1, two = 2, three = 3 };

/// Taylor expansion to `order` of the unique Caratheodory function whose
/// parameters end on the unit circle at the given level:
///   level 1: |p1| = 1;  level 2: |p1| < 1, |p2| = 1;
///   level 3: |p1|, |p2| < 1, |p3| = 1.
/// Throws DomainError on a parameter/level mismatch.
TruncatedSeries boundary_p(const DiskParams& p, BoundaryLevel level, int order = kDefaultOrder);

/// Series 1 + c1 z + c2 z^2 + c3 z^3, padded with zeros to `order`.
TruncatedSeries cara_polynomial(const CaraCoeffs& c, int order = 3);

} // namespace loghankel
