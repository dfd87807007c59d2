#include "loghankel/classes.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace loghankel {

std::string_view to_string(ClassTag tag) {
    switch (tag) {
    case ClassTag::convex:
        return "convex";
    case ClassTag::starlike:
        return "starlike";
    case ClassTag::generic:
        return "generic";
    }
    return "generic";
}

ClassTag parse_class_tag(std::string_view name) {
    if (name == "convex") {
        return ClassTag::convex;
    }
    if (name == "starlike") {
        return ClassTag::starlike;
    }
    if (name == "generic") {
        return ClassTag::generic;
    }
    throw DomainError("unknown function class '" + std::string(name) + "'");
}

SchlichtFunction::SchlichtFunction(TruncatedSeries series, ClassTag tag)
    : series_(std::move(series)), tag_(tag) {
    if (!is_normalized(series_)) {
        throw DomainError("schlicht function must satisfy a_0 = 0 and a_1 = 1");
    }
}

namespace {

void require_caratheodory_start(const TruncatedSeries& p, int order) {
    if (std::abs(p[0] - Complex{1.0}) > 1e-12) {
        throw DomainError("Caratheodory function must satisfy p(0) = 1");
    }
    if (order < 1) {
        throw DomainError("order must be at least 1");
    }
}

// c_m, or zero past the end of p.
Complex cara_coeff(const TruncatedSeries& p, int m) {
    return m <= p.order() ? p[static_cast<std::size_t>(m)] : Complex{};
}

} // namespace

SchlichtFunction starlike_from_p(const TruncatedSeries& p, int order) {
    require_caratheodory_start(p, order);
    TruncatedSeries f = TruncatedSeries::identity(order);
    for (int n = 2; n <= order; ++n) {
        Complex acc{};
        for (int m = 1; m <= n - 1; ++m) {
            acc += cara_coeff(p, m) * f[n - m];
        }
        f.set(n, acc / static_cast<double>(n - 1));
    }
    return SchlichtFunction(std::move(f), ClassTag::starlike);
}

SchlichtFunction convex_from_p(const TruncatedSeries& p, int order) {
    require_caratheodory_start(p, order);
    TruncatedSeries f = TruncatedSeries::identity(order);
    for (int n = 2; n <= order; ++n) {
        Complex acc{};
        for (int m = 1; m <= n - 1; ++m) {
            acc += cara_coeff(p, m) * static_cast<double>(n - m) * f[n - m];
        }
        f.set(n, acc / static_cast<double>(n * (n - 1)));
    }
    return SchlichtFunction(std::move(f), ClassTag::convex);
}

SchlichtFunction function_from_p(ClassTag tag, const TruncatedSeries& p, int order) {
    switch (tag) {
    case ClassTag::convex:
        return convex_from_p(p, order);
    case ClassTag::starlike:
        return starlike_from_p(p, order);
    case ClassTag::generic:
        break;
    }
    throw DomainError("function_from_p needs a convex or starlike class");
}

bool membership_check(const SchlichtFunction& f, const SampleGrid& grid) {
    const TruncatedSeries& s = f.series();
    const TruncatedSeries d1 = derivative(s);
    const TruncatedSeries d2 = derivative(d1);
    const bool convex = f.class_tag() == ClassTag::convex;

    for (int i = 1; i <= grid.radii; ++i) {
        const double r = grid.max_radius * i / grid.radii;
        for (int j = 0; j < grid.angles; ++j) {
            const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / grid.angles);
            const Complex value = convex ? 1.0 + z * d2.evaluate(z) / d1.evaluate(z)
                                         : z * d1.evaluate(z) / s.evaluate(z);
            if (!(value.real() > -1e-6)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace loghankel
