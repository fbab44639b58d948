#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace koebe {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised for coincident or otherwise degenerate inputs where a formula has a
/// removable singularity or a zero denominator.
class DegenerateInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Complex order parameter b of the class S*(1-b). Never zero.
class OrderParameter {
public:
    explicit OrderParameter(Complex b) : b_(b), modulus_(std::abs(b)) {
        if (b == Complex{0.0, 0.0}) {
            throw DomainError("order parameter must be nonzero");
        }
    }
    OrderParameter(double re, double im) : OrderParameter(Complex{re, im}) {}

    Complex value() const noexcept { return b_; }
    double modulus() const noexcept { return modulus_; }
    double real() const noexcept { return b_.real(); }
    double imag() const noexcept { return b_.imag(); }

    friend bool operator==(const OrderParameter&, const OrderParameter&) = default;

private:
    Complex b_;
    double modulus_;
};

/// A point of the open unit disk, |z| < 1 with no slack.
class DiskPoint {
public:
    explicit DiskPoint(Complex z) : z_(z) {
        if (!(std::abs(z) < 1.0)) {
            throw DomainError("point must lie in the open unit disk");
        }
    }
    DiskPoint(double re, double im) : DiskPoint(Complex{re, im}) {}

    Complex value() const noexcept { return z_; }
    double modulus() const noexcept { return std::abs(z_); }

    friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

private:
    Complex z_;
};

/// Normalizes an angle into [0, 2pi).
inline double normalize_angle(double theta) {
    if (!std::isfinite(theta)) {
        throw DomainError("angle must be finite");
    }
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) {
        t += kTwoPi;
    }
    // fmod of a tiny negative value can round up to exactly 2pi
    if (t >= kTwoPi) {
        t = 0.0;
    }
    return t;
}

/// An angle on the unit circle, stored in [0, 2pi).
class BoundaryPoint {
public:
    explicit BoundaryPoint(double theta) : theta_(normalize_angle(theta)) {}

    double theta() const noexcept { return theta_; }
    Complex on_circle() const { return std::polar(1.0, theta_); }

private:
    double theta_;
};

/// exp(c * Log w) on the principal branch, Im Log w in (-pi, pi].
///
/// For w = 0 the value is taken by continuity: 0 when Re c > 0, and a
/// DomainError otherwise.
inline Complex principal_power(Complex w, Complex c) {
    if (w == Complex{0.0, 0.0}) {
        if (c.real() > 0.0) {
            return Complex{0.0, 0.0};
        }
        throw DomainError("principal_power: zero base requires Re(exponent) > 0");
    }
    if (c == Complex{0.0, 0.0}) {
        return Complex{1.0, 0.0};
    }
    // std::log follows the principal branch; arg(-x + 0i) = +pi, and a negative
    // zero imaginary part is flushed so the result never depends on the sign of zero.
    if (w.imag() == 0.0) {
        w = Complex{w.real(), 0.0};
    }
    return std::exp(c * std::log(w));
}

/// x^c taken in modulus: |x^c| = x^(Re c) for real x > 0.
inline double pos_power(double x, Complex c) {
    if (!(x > 0.0)) {
        throw DomainError("pos_power: base must be a positive real");
    }
    return std::pow(x, c.real());
}

/// Disk automorphism u = (z + v) / (1 + conj(v) z).
inline DiskPoint mobius_from_disk(DiskPoint z, DiskPoint v) {
    const Complex zz = z.value();
    const Complex vv = v.value();
    const Complex u = (zz + vv) / (1.0 + std::conj(vv) * zz);
    // |u| can round to 1 only when both inputs sit within a few ulps of the circle.
    return DiskPoint{u};
}

/// Inverse automorphism z = (u - v) / (1 - u conj(v)).
inline DiskPoint mobius_to_disk(DiskPoint u, DiskPoint v) {
    const Complex uu = u.value();
    const Complex vv = v.value();
    return DiskPoint{(uu - vv) / (1.0 - uu * std::conj(vv))};
}

}  // namespace koebe
