#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "koebe/complex_core.hpp"

namespace koebe {

/// Montel-normalized family: f(0) = 0, f'(0) = 1 and f(r0) = r0 for a fixed 0 < r0 < 1.
class MontelConfig {
public:
    MontelConfig(double r0, OrderParameter order) : r0_(r0), order_(order) {
        if (!(r0 > 0.0 && r0 < 1.0)) {
            throw DomainError("r0 must lie strictly between 0 and 1");
        }
    }

    double r0() const noexcept { return r0_; }
    const OrderParameter& order() const noexcept { return order_; }

private:
    double r0_;
    OrderParameter order_;
};

namespace detail {

// The two-point bound with v = r0 and u = r e^{i theta}; sign = +1 lower, -1 upper.
inline double montel_member(double r, const BoundaryPoint& theta, const MontelConfig& cfg,
                            double sign) {
    if (!(r > 0.0 && r < 1.0)) {
        throw DomainError("radius must lie in (0, 1)");
    }
    const double r0 = cfg.r0();
    const Complex z = std::polar(r, theta.theta());
    if (z == Complex{r0, 0.0}) {
        throw DegenerateInput("r e^{i theta} must differ from r0");
    }
    const Complex two_b = 2.0 * cfg.order().value();
    const double cross = std::abs(1.0 - r0 * z);
    const double gap = std::abs(z - r0);
    const double bracket = cross + sign * gap;
    const double numer = 2.0 * r * pos_power(1.0 - r0 * r0, two_b);
    const double denom =
        (1.0 + cfg.order().modulus()) * pos_power(cross, two_b - 2.0) * bracket * bracket;
    return numer / denom;
}

}  // namespace detail

/// Lower bound M(r, theta) for |f(r e^{i theta})| over the Montel-normalized class.
inline double montel_lower(double r, BoundaryPoint theta, const MontelConfig& cfg) {
    return detail::montel_member(r, theta, cfg, +1.0);
}

/// Matching upper bound; diverges as r e^{i theta} approaches r0.
inline double montel_upper(double r, BoundaryPoint theta, const MontelConfig& cfg) {
    return detail::montel_member(r, theta, cfg, -1.0);
}

/// Boundary radius of the Koebe domain in direction theta, the r -> 1 limit of
/// montel_lower:
///
///   R(theta) = (1 - r0^2)^(2b) / (2 (1+|b|) (1 - 2 r0 cos(theta) + r0^2)^b)
///
/// Exponents act in modulus. Since 1 - 2 r0 cos(theta) + r0^2 = |1 - r0 e^{i theta}|^2,
/// the exponent on that factor is b, not 2b.
inline double koebe_radius(BoundaryPoint theta, const MontelConfig& cfg) {
    const double r0 = cfg.r0();
    const Complex b = cfg.order().value();
    const double chord = 1.0 - 2.0 * r0 * std::cos(theta.theta()) + r0 * r0;
    return pos_power(1.0 - r0 * r0, 2.0 * b) /
           (2.0 * (1.0 + cfg.order().modulus()) * pos_power(chord, b));
}

struct LimitGap {
    double epsilon;
    double gap;
};

/// |M(1 - eps, theta) - R(theta)| for each eps.
inline std::vector<LimitGap> limit_check(BoundaryPoint theta, const MontelConfig& cfg,
                                         std::span<const double> epsilons) {
    const double radius = koebe_radius(theta, cfg);
    std::vector<LimitGap> gaps;
    gaps.reserve(epsilons.size());
    for (double eps : epsilons) {
        if (!(eps > 0.0 && eps < 1.0 - cfg.r0())) {
            throw DomainError("epsilon must lie in (0, 1 - r0)");
        }
        gaps.push_back({eps, std::abs(montel_lower(1.0 - eps, theta, cfg) - radius)});
    }
    return gaps;
}

enum class CaseId { I, II, III, IV };

/// One of the four named subfamilies:
///   I    b = 1                      (starlike)
///   II   b = 1 - alpha              (starlike of order alpha)
///   III  b = cos(l) e^{-il}         (spirallike)
///   IV   b = (1-alpha) cos(l) e^{-il}  (spirallike of order alpha)
class SpecialCase {
public:
    static SpecialCase starlike() { return SpecialCase{CaseId::I, 0.0, 0.0}; }
    static SpecialCase starlike_of_order(double alpha) { return SpecialCase{CaseId::II, alpha, 0.0}; }
    static SpecialCase spirallike(double lambda) { return SpecialCase{CaseId::III, 0.0, lambda}; }
    static SpecialCase spirallike_of_order(double alpha, double lambda) {
        return SpecialCase{CaseId::IV, alpha, lambda};
    }

    CaseId id() const noexcept { return id_; }
    double alpha() const noexcept { return alpha_; }
    double lambda() const noexcept { return lambda_; }

    OrderParameter order() const {
        const Complex spiral = std::cos(lambda_) * std::polar(1.0, -lambda_);
        switch (id_) {
            case CaseId::I: return OrderParameter{1.0, 0.0};
            case CaseId::II: return OrderParameter{1.0 - alpha_, 0.0};
            case CaseId::III: return OrderParameter{spiral};
            case CaseId::IV: return OrderParameter{(1.0 - alpha_) * spiral};
        }
        return OrderParameter{1.0, 0.0};
    }

private:
    SpecialCase(CaseId id, double alpha, double lambda) : id_(id), alpha_(alpha), lambda_(lambda) {
        if ((id == CaseId::II || id == CaseId::IV) && !(alpha >= 0.0 && alpha < 1.0)) {
            throw DomainError("alpha must lie in [0, 1)");
        }
        if ((id == CaseId::III || id == CaseId::IV) &&
            !(std::abs(lambda) < 0.5 * std::numbers::pi)) {
            throw DomainError("lambda must satisfy |lambda| < pi/2");
        }
    }

    CaseId id_;
    double alpha_;
    double lambda_;
};

inline double special_case_radius(const SpecialCase& c, BoundaryPoint theta, double r0) {
    return koebe_radius(theta, MontelConfig{r0, c.order()});
}

struct ProfileSample {
    double theta;
    double radius;
};

struct KoebeProfile {
    MontelConfig config;
    std::vector<ProfileSample> samples;
};

/// R(theta_i) at theta_i = 2 pi i / n, i = 0..n-1.
inline KoebeProfile boundary_profile(const MontelConfig& cfg, std::size_t n_samples) {
    if (n_samples < 2) {
        throw DomainError("boundary profile needs at least 2 samples");
    }
    KoebeProfile profile{cfg, {}};
    profile.samples.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double theta = kTwoPi * static_cast<double>(i) / static_cast<double>(n_samples);
        profile.samples.push_back({theta, koebe_radius(BoundaryPoint{theta}, cfg)});
    }
    return profile;
}

}  // namespace koebe
