#pragma once

#include <array>
#include <cmath>
#include <string_view>

#include "koebe/complex_core.hpp"

namespace koebe {

enum class CandidateKind { Identity, Extremal, RotatedExtremal };

inline std::string_view to_string(CandidateKind kind) {
    switch (kind) {
        case CandidateKind::Identity: return "identity";
        case CandidateKind::Extremal: return "extremal";
        case CandidateKind::RotatedExtremal: return "rotated";
    }
    return "unknown";
}

/// A member of the candidate family used to exercise the class S*(1-b):
///
///   Identity          f(z) = z
///   Extremal          f(z) = z / (1 - z)^(2b)
///   RotatedExtremal   f(z) = e^{ia} f_ext(e^{-ia} z)
///
/// Each satisfies f(0) = 0 and f'(0) = 1; the constructor checks this
/// numerically on a small circle.
class CandidateFunction {
public:
    static CandidateFunction identity(OrderParameter order = OrderParameter{1.0, 0.0}) {
        return CandidateFunction{CandidateKind::Identity, order, 0.0};
    }
    static CandidateFunction extremal(OrderParameter order) {
        return CandidateFunction{CandidateKind::Extremal, order, 0.0};
    }
    static CandidateFunction rotated(OrderParameter order, double rotation) {
        return CandidateFunction{CandidateKind::RotatedExtremal, order, rotation};
    }

    CandidateFunction(CandidateKind kind, OrderParameter order, double rotation)
        : kind_(kind),
          order_(order),
          rotation_(kind == CandidateKind::RotatedExtremal ? normalize_angle(rotation) : 0.0),
          unrotate_(std::polar(1.0, -rotation_)) {
        check_normalization();
    }

    CandidateKind kind() const noexcept { return kind_; }
    const OrderParameter& order() const noexcept { return order_; }
    double rotation() const noexcept { return rotation_; }

    /// f(z).
    Complex evaluate(DiskPoint z) const { return evaluate_raw(z.value()); }

    /// z f'(z) / f(z), with the removable value 1 at z = 0.
    Complex log_derivative(DiskPoint z) const { return 1.0 + z.value() * excess_log_derivative(z); }

    /// (z f'(z)/f(z) - 1) / z in closed form. Analytic at z = 0.
    Complex excess_log_derivative(DiskPoint z) const {
        const Complex b = order_.value();
        switch (kind_) {
            case CandidateKind::Identity:
                return Complex{0.0, 0.0};
            case CandidateKind::Extremal:
                return 2.0 * b / (1.0 - z.value());
            case CandidateKind::RotatedExtremal:
                return 2.0 * b * unrotate_ / (1.0 - unrotate_ * z.value());
        }
        return Complex{0.0, 0.0};
    }

    /// 1 + (1/b)(z f'/f - 1). Membership of f at z means the real part is positive.
    Complex starlikeness_functional(DiskPoint z) const {
        return 1.0 + z.value() * excess_log_derivative(z) / order_.value();
    }

private:
    Complex extremal_raw(Complex z) const {
        const Complex base = 1.0 - z;
        assert(base.real() > 0.0);
        return z * principal_power(base, -2.0 * order_.value());
    }

    Complex evaluate_raw(Complex z) const {
        switch (kind_) {
            case CandidateKind::Identity:
                return z;
            case CandidateKind::Extremal:
                return extremal_raw(z);
            case CandidateKind::RotatedExtremal:
                return std::conj(unrotate_) * extremal_raw(unrotate_ * z);
        }
        return z;
    }

    void check_normalization() const {
        constexpr double kProbe = 1e-7;
        constexpr std::array<double, 4> kAngles{0.0, 0.5 * std::numbers::pi, std::numbers::pi,
                                                1.5 * std::numbers::pi};
        for (double a : kAngles) {
            const Complex z = std::polar(kProbe, a);
            if (std::abs(evaluate_raw(z) / z - 1.0) > 1e-4) {
                throw DomainError("candidate function violates f'(0) = 1");
            }
        }
        if (std::abs(evaluate_raw(Complex{0.0, 0.0})) != 0.0) {
            throw DomainError("candidate function violates f(0) = 0");
        }
    }

    CandidateKind kind_;
    OrderParameter order_;
    double rotation_;
    Complex unrotate_;
};

}  // namespace koebe
