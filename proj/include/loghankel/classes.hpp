#pragma once

#include "loghankel/series.hpp"

#include <string_view>

namespace loghankel {

enum class ClassTag { convex, starlike, generic };

std::string_view to_string(ClassTag tag);
/// Parses "convex" / "starlike" / "generic"; throws DomainError otherwise.
ClassTag parse_class_tag(std::string_view name);

/// Normalized function f(z) = z + a_2 z^2 + ... with the class it was built for.
class SchlichtFunction {
public:
    SchlichtFunction(TruncatedSeries series, ClassTag tag);

    const TruncatedSeries& series() const { return series_; }
    ClassTag class_tag() const { return tag_; }
    Complex coeff(int n) const { return series_[static_cast<std::size_t>(n)]; }

private:
    TruncatedSeries series_;
    ClassTag tag_;
};

/// Solves z f'(z) / f(z) = p(z) for f, through `order`.
///
/// Coefficient matching in z f' = p f gives (n - 1) a_n = sum_{m=1}^{n-1} c_m a_{n-m}.
/// Requires p(0) = 1 and p.order() >= order - 1.
SchlichtFunction starlike_from_p(const TruncatedSeries& p, int order = kDefaultOrder);

/// Solves 1 + z f''(z) / f'(z) = p(z) for f, through `order`.
///
/// From z f'' = (p - 1) f': n (n - 1) a_n = sum_{m=1}^{n-1} c_m (n - m) a_{n-m}.
SchlichtFunction convex_from_p(const TruncatedSeries& p, int order = kDefaultOrder);

SchlichtFunction function_from_p(ClassTag tag, const TruncatedSeries& p, int order = kDefaultOrder);

/// Sample points z = r e^{i theta} for the membership check.
struct SampleGrid {
    int radii = 16;
    int angles = 64;
    double max_radius = 0.9;
};

/// Evaluates Re(z f'/f) (starlike) or Re(1 + z f''/f') (convex) on the grid
/// and reports whether every sample exceeds -1e-6. A generic function is
/// checked as starlike. Truncation makes this approximate near max_radius.
bool membership_check(const SchlichtFunction& f, const SampleGrid& grid = {});

} // namespace loghankel
