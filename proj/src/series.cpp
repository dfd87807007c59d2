#include "loghankel/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace loghankel {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_finite(Complex c) {
    if (!finite(c)) {
        throw DomainError("series coefficient is not finite");
    }
}

void require_normalized(const TruncatedSeries& f) {
    if (!is_normalized(f)) {
        throw DomainError("series must satisfy f(0) = 0 and f'(0) = 1");
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 1) {
        throw DomainError("series order must be at least 1, got " + std::to_string(order));
    }
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex{});
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) {
        throw DomainError("series needs at least two coefficients");
    }
    std::for_each(coeffs_.begin(), coeffs_.end(), require_finite);
}

TruncatedSeries TruncatedSeries::identity(int order) {
    TruncatedSeries s(order);
    s.coeffs_[1] = 1.0;
    return s;
}

TruncatedSeries TruncatedSeries::constant(Complex value, int order) {
    TruncatedSeries s(order);
    s.set(0, value);
    return s;
}

void TruncatedSeries::set(std::size_t n, Complex value) {
    require_finite(value);
    coeffs_.at(n) = value;
}

Complex TruncatedSeries::evaluate(Complex z) const {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    TruncatedSeries out(order);
    const auto n = std::min(coeffs_.size(), out.coeffs_.size());
    std::copy_n(coeffs_.begin(), n, out.coeffs_.begin());
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    const auto n = std::min(coeffs_.size(), other.coeffs_.size());
    coeffs_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    const auto n = std::min(coeffs_.size(), other.coeffs_.size());
    coeffs_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(Complex scale) {
    for (auto& c : coeffs_) {
        c *= scale;
    }
    return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
TruncatedSeries operator*(TruncatedSeries a, Complex scale) { return a *= scale; }

double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    double worst = 0.0;
    for (int i = 0; i <= n; ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<Complex> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Complex sum{};
        for (int i = 0; i <= k; ++i) {
            sum += ac[i] * bc[k - i];
        }
        out[k] = sum;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries divide(const TruncatedSeries& num, const TruncatedSeries& den) {
    if (den[0] == Complex{}) {
        throw DomainError("series division by a series with zero constant term");
    }
    const int n = std::min(num.order(), den.order());
    const auto dc = den.coeffs();
    std::vector<Complex> q(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Complex acc = num[k];
        for (int i = 1; i <= k; ++i) {
            acc -= dc[i] * q[k - i];
        }
        q[k] = acc / dc[0];
    }
    return TruncatedSeries(std::move(q));
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (g[0] != Complex{}) {
        throw DomainError("compose: inner series must vanish at the origin");
    }
    const int n = std::min(f.order(), g.order());
    const TruncatedSeries inner = g.truncated(n);
    TruncatedSeries acc = TruncatedSeries::constant(f[n], n);
    for (int k = n - 1; k >= 0; --k) {
        acc = multiply(acc, inner);
        acc.set(0, acc[0] + f[k]);
    }
    return acc;
}

TruncatedSeries revert(const TruncatedSeries& f) {
    require_normalized(f);
    const int n = f.order();
    TruncatedSeries g = TruncatedSeries::identity(n);
    for (int k = 2; k <= n; ++k) {
        // With A_k still zero, the w^k coefficient of f(g(w)) is the
        // remainder that A_k must cancel (f'(0) = 1).
        const Complex residual = compose(f, g)[k];
        g.set(k, -residual);
    }
    return g;
}

TruncatedSeries log_ratio(const TruncatedSeries& f) {
    require_normalized(f);
    const int n = f.order();
    if (n < 2) {
        throw DomainError("log_ratio needs order at least 2");
    }
    // u = f(z)/z, order n - 1, u(0) = 1.
    std::vector<Complex> u(f.coeffs().begin() + 1, f.coeffs().end());
    const TruncatedSeries quotient(std::move(u));
    const TruncatedSeries dlog = divide(derivative(quotient), quotient);

    TruncatedSeries out(n - 1);
    for (int k = 1; k <= n - 1; ++k) {
        out.set(k, dlog[k - 1] / static_cast<double>(k));
    }
    return out;
}

TruncatedSeries exp_series(const TruncatedSeries& h) {
    if (h[0] != Complex{}) {
        throw DomainError("exp_series: argument must vanish at the origin");
    }
    const int n = h.order();
    TruncatedSeries e = TruncatedSeries::constant(1.0, n);
    for (int k = 1; k <= n; ++k) {
        Complex acc{};
        for (int j = 1; j <= k; ++j) {
            acc += static_cast<double>(j) * h[j] * e[k - j];
        }
        e.set(k, acc / static_cast<double>(k));
    }
    return e;
}

TruncatedSeries derivative(const TruncatedSeries& f) {
    TruncatedSeries out(std::max(f.order() - 1, 1));
    for (int k = 1; k <= f.order(); ++k) {
        out.set(k - 1, static_cast<double>(k) * f[k]);
    }
    return out;
}

bool is_normalized(const TruncatedSeries& f, double tol) {
    return std::abs(f[0]) <= tol && std::abs(f[1] - Complex{1.0}) <= tol;
}

} // namespace loghankel
