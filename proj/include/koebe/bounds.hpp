#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <optional>

#include "koebe/complex_core.hpp"
#include "koebe/extremal.hpp"

namespace koebe {

/// Two-sided positive bound, optionally carrying the bounded quantity.
struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
    std::optional<double> middle;

    /// Smaller of the two log-slacks; negative means the middle escapes.
    double log_margin() const {
        const double m = middle.value();
        return std::min(std::log(m / lower), std::log(upper / m));
    }
};

/// 2|z| / ((1+|b|)(1 +- |z|)^2). Both members vanish at z = 0.
inline BoundPair growth_bounds(DiskPoint z, const OrderParameter& b) {
    const double r = z.modulus();
    const double scale = 2.0 * r / (1.0 + b.modulus());
    return BoundPair{scale / ((1.0 + r) * (1.0 + r)), scale / ((1.0 - r) * (1.0 - r)), std::nullopt};
}

/// F(z) = v (1 - u conj v)^(2b-1) (u - v) f(u) / (u (1 - |v|^2)^(2b) f(v)),
/// where u = (z + v)/(1 + conj(v) z). F is f conjugated by the disk
/// automorphism moving 0 to v, renormalized so that F(0) = 0, F'(0) = 1.
///
/// The order b is taken from f. Throws DegenerateInput for v = 0 or z = -v.
inline Complex auxiliary_F(const CandidateFunction& f, DiskPoint v, DiskPoint z) {
    const Complex vv = v.value();
    if (vv == Complex{0.0, 0.0}) {
        throw DegenerateInput("v must be nonzero");
    }
    const DiskPoint u = mobius_from_disk(z, v);
    const Complex uu = u.value();
    if (uu == Complex{0.0, 0.0}) {
        throw DegenerateInput("auxiliary function undefined at u = 0 (z = -v)");
    }
    const Complex b = f.order().value();
    const Complex cross = 1.0 - uu * std::conj(vv);
    assert(cross.real() > 0.0);
    const double radial = 1.0 - std::norm(vv);
    const Complex numer = vv * principal_power(cross, 2.0 * b - 1.0) * (uu - vv) * f.evaluate(u);
    const Complex denom = uu * principal_power(Complex{radial, 0.0}, 2.0 * b) * f.evaluate(v);
    return numer / denom;
}

/// z F'(z)/F(z) for the auxiliary function, in closed form. Equal to 1 at z = 0.
///
/// With u = u(z):
///   z F'/F = 1/(1 + conj(v) z)
///          + z u'(z) [ -(2b-1) conj(v)/(1 - u conj v) + (u f'(u)/f(u) - 1)/u ]
inline Complex auxiliary_log_derivative(const CandidateFunction& f, DiskPoint v, DiskPoint z) {
    const Complex vv = v.value();
    const Complex zz = z.value();
    const Complex vbar = std::conj(vv);
    const Complex b = f.order().value();
    const DiskPoint u = mobius_from_disk(z, v);
    const Complex uu = u.value();
    const Complex denom = 1.0 + vbar * zz;
    const Complex du = (1.0 - std::norm(vv)) / (denom * denom);
    const Complex bracket = -(2.0 * b - 1.0) * vbar / (1.0 - uu * vbar) + f.excess_log_derivative(u);
    return 1.0 / denom + zz * du * bracket;
}

/// Starlikeness functional of the auxiliary function, with the same order b as f.
inline Complex auxiliary_starlikeness_functional(const CandidateFunction& f, DiskPoint v,
                                                 DiskPoint z) {
    return 1.0 + (auxiliary_log_derivative(f, v, z) - 1.0) / f.order().value();
}

namespace detail {

inline void check_two_point_inputs(Complex u, Complex v) {
    if (u == v) {
        throw DegenerateInput("u must differ from v");
    }
    if (v == Complex{0.0, 0.0}) {
        throw DegenerateInput("v must be nonzero");
    }
    if (u == Complex{0.0, 0.0}) {
        throw DegenerateInput("u must be nonzero");
    }
}

// sign = +1 gives the lower member, -1 the upper.
inline double two_point_member(Complex u, Complex v, const OrderParameter& b, double sign) {
    const Complex two_b = 2.0 * b.value();
    const double cross = std::abs(1.0 - u * std::conj(v));
    const double gap = std::abs(u - v);
    const double bracket = cross + sign * gap;
    const double numer = 2.0 * std::abs(u) * pos_power(1.0 - std::norm(v), two_b);
    const double denom =
        (1.0 + b.modulus()) * std::abs(v) * pos_power(cross, two_b - 2.0) * bracket * bracket;
    return numer / denom;
}

}  // namespace detail

/// Two-point distortion bounds on |f(u)/f(v)| for f in S*(1-b):
///
///   2|u|(1-|v|^2)^(2b) / ((1+|b|)|v||1-u conj v|^(2b-2) [|1-u conj v| +- |u-v|]^2)
///
/// with "+" giving the lower and "-" the upper bound. Complex exponents on the
/// positive bases are taken in modulus.
inline BoundPair two_point_bounds(DiskPoint u, DiskPoint v, const OrderParameter& b) {
    detail::check_two_point_inputs(u.value(), v.value());
    return BoundPair{detail::two_point_member(u.value(), v.value(), b, +1.0),
                     detail::two_point_member(u.value(), v.value(), b, -1.0), std::nullopt};
}

/// Same bounds obtained the long way: apply growth_bounds at z = (u-v)/(1-u conj v)
/// to |F(z)| and divide out the conjugation factor relating F to f(u)/f(v).
inline BoundPair two_point_bounds_via_growth(DiskPoint u, DiskPoint v, const OrderParameter& b) {
    detail::check_two_point_inputs(u.value(), v.value());
    const Complex uu = u.value();
    const Complex vv = v.value();
    const DiskPoint z = mobius_to_disk(u, v);
    const BoundPair g = growth_bounds(z, b);
    const Complex two_b = 2.0 * b.value();
    // |f(u)/f(v)| = |F(z)| * |u| (1-|v|^2)^(2b) / (|v| |1-u conj v|^(2b-1) |u-v|)
    const double unwrap = std::abs(uu) * pos_power(1.0 - std::norm(vv), two_b) /
                          (std::abs(vv) * pos_power(std::abs(1.0 - uu * std::conj(vv)), two_b - 1.0) *
                           std::abs(uu - vv));
    return BoundPair{g.lower * unwrap, g.upper * unwrap, std::nullopt};
}

/// Two-point bounds for f's own order, with middle = |f(u)/f(v)|.
inline BoundPair two_point_check(const CandidateFunction& f, DiskPoint u, DiskPoint v) {
    BoundPair p = two_point_bounds(u, v, f.order());
    p.middle = std::abs(f.evaluate(u) / f.evaluate(v));
    return p;
}

/// Growth bounds at z with middle = |F(z)| for the auxiliary function built from f at v.
inline BoundPair growth_check(const CandidateFunction& f, DiskPoint v, DiskPoint z) {
    BoundPair p = growth_bounds(z, f.order());
    p.middle = std::abs(auxiliary_F(f, v, z));
    return p;
}

}  // namespace koebe
