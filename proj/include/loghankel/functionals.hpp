#pragma once

#include "loghankel/caratheodory.hpp"
#include "loghankel/classes.hpp"
#include "loghankel/series.hpp"

#include <span>

namespace loghankel {

/// (a_2, a_3, a_4) of f(z) = z + a_2 z^2 + ..., or (A_2, A_3, A_4) of its inverse.
struct CoeffTriple {
    Complex a2;
    Complex a3;
    Complex a4;
};

/// First three logarithmic coefficients: gamma_n of f, or Gamma_n of f^{-1}.
struct GammaTriple {
    Complex g1;
    Complex g2;
    Complex g3;
};

/// Reads a_2..a_4 from a series of order >= 4.
CoeffTriple coeff_triple(const TruncatedSeries& f);

/// Polynomial z + a_2 z^2 + a_3 z^3 + a_4 z^4, zero-padded to `order`.
TruncatedSeries series_from_triple(const CoeffTriple& t, int order = 4);

/// Inverse-function coefficients:
/// A_2 = -a_2, A_3 = -a_3 + 2 a_2^2, A_4 = -a_4 + 5 a_2 a_3 - 5 a_2^3.
CoeffTriple inverse_coeffs(const CoeffTriple& t);

/// gamma_1 = a_2/2, gamma_2 = (a_3 - a_2^2/2)/2,
/// gamma_3 = (a_4 - a_2 a_3 + a_2^3/3)/2.
GammaTriple log_coeffs(const CoeffTriple& t);

/// Logarithmic coefficients of f^{-1}: log_coeffs(inverse_coeffs(t)).
GammaTriple inv_log_coeffs(const CoeffTriple& t);

/// q x q Hankel determinant with entries seq_{n+i+j}, 0 <= i, j < q.
///
/// `seq` holds the sequence starting at index 1 (seq[0] is the first
/// coefficient), so n is 1-based. Throws DomainError when n + 2(q - 1)
/// runs past the end of the sequence or when q, n < 1.
Complex hankel(std::span<const Complex> seq, int q, int n);

/// Second Hankel determinant of the logarithmic inverse coefficients,
/// Gamma_1 Gamma_3 - Gamma_2^2, in closed form
///   (13 a_2^4 - 12 a_2^2 a_3 - 12 a_3^2 + 12 a_2 a_4) / 48.
Complex h21_inv_log(const CoeffTriple& t);

/// The same determinant written through the inverse coefficients,
///   (A_2 A_4 - A_3^2 + A_2^4 / 12) / 4.
///
/// The A_2^4 weight is 1/12: expanding Gamma_n = (A_{n+1} - ...)/2 gives
/// it, and a weight of 1/4 would put the Koebe value at 7/4 instead of 13/12.
Complex h21_from_inverse(const CoeffTriple& inverse);

/// a_2..a_4 of the convex or starlike function generated by a Caratheodory
/// function with leading coefficients c:
///   convex:   a_2 = c_1/2, a_3 = (c_2 + c_1^2)/6, a_4 = (2c_3 + 3c_1c_2 + c_1^3)/24
///   starlike: a_2 = c_1,   a_3 = (c_2 + c_1^2)/2, a_4 = (2c_3 + 3c_1c_2 + c_1^3)/6
CoeffTriple closed_form_coeffs(ClassTag tag, const CaraCoeffs& c);

/// H as a function of the disk parameters is affine in p3:
///   H = base(p1, p2) + p3_factor(p1, p2) * p3.
struct ReducedParts {
    Complex base;
    Complex p3_factor;
};

/// Splits the reduced objective of the given class (convex or starlike).
///
/// With s = 1 - |p1|^2 and t = 1 - |p2|^2:
///   convex:   base = p1^4/48 - s p1^2 p2/24 - s (2 + |p1|^2) p2^2/72,
///             p3_factor = p1 s t / 24
///   starlike: base = 13 p1^4/12 - 5 s p1^2 p2/6 - s (3 + |p1|^2) p2^2/12,
///             p3_factor = p1 s t / 3
///
/// For real p1 these are the familiar forms in p1^2. Note the p3 factor
/// carries 1 - |p2|^2 (not 1 - |p1|^2), and the starlike p2 term carries p1^2.
ReducedParts reduced_parts(ClassTag tag, Complex p1, Complex p2);

/// H for a convex function, in terms of its disk parameters.
Complex reduced_convex(const DiskParams& p);

/// H for a starlike function, in terms of its disk parameters.
Complex reduced_starlike(const DiskParams& p);

Complex reduced_objective(ClassTag tag, const DiskParams& p);

} // namespace loghankel
