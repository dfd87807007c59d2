#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace loghankel {

using Complex = std::complex<double>;

/// Thrown when an operation's precondition on its inputs is violated.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Default truncation order for generated functions.
inline constexpr int kDefaultOrder = 12;

/// Complex Taylor polynomial c_0 + c_1 z + ... + c_N z^N, with all terms
/// beyond z^N discarded.
///
/// The order N is at least 1 and every stored coefficient is finite.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(int order);
    /// Takes ownership of c_0..c_N; N = coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    /// The series `z`.
    static TruncatedSeries identity(int order);
    static TruncatedSeries constant(Complex value, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Complex> coeffs() const { return coeffs_; }

    Complex operator[](std::size_t n) const { return coeffs_.at(n); }
    void set(std::size_t n, Complex value);

    /// Horner evaluation of the polynomial at z.
    Complex evaluate(Complex z) const;

    /// Drops or zero-pads to the requested order.
    TruncatedSeries truncated(int order) const;

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(Complex scale);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Complex> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(TruncatedSeries a, Complex scale);

/// Largest coefficient-wise modulus of a - b over the common order.
double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated at min(a.order(), b.order()).
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Quotient num/den by long division; den(0) must be non-zero.
TruncatedSeries divide(const TruncatedSeries& num, const TruncatedSeries& den);

/// f(g(z)) through min(f.order(), g.order()); g(0) must vanish.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Compositional inverse of a normalized series f = z + a_2 z^2 + ...
///
/// Solved order by order from f(g(w)) = w: the coefficient of w^n in
/// f(g(w)) is A_n plus a polynomial in A_2..A_{n-1}, so each A_n is fixed
/// by cancelling the remainder.
TruncatedSeries revert(const TruncatedSeries& f);

/// log(f(z)/z) for normalized f, through order N-1 (requires N >= 2).
///
/// Computed by integrating (f/z)' / (f/z) termwise, so no branch of the
/// complex logarithm is ever chosen. Halving the result gives the
/// logarithmic coefficients.
TruncatedSeries log_ratio(const TruncatedSeries& f);

/// exp(h) for a series with h(0) = 0, via E' = h'E.
TruncatedSeries exp_series(const TruncatedSeries& h);

/// Termwise derivative, of order max(N - 1, 1).
TruncatedSeries derivative(const TruncatedSeries& f);

/// True when c_0 = 0 and c_1 = 1 to within `tol`.
bool is_normalized(const TruncatedSeries& f, double tol = 1e-12);

} // namespace loghankel
