#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "koebe/bounds.hpp"
#include "koebe/complex_core.hpp"
#include "koebe/extremal.hpp"
#include "koebe/koebe.hpp"

namespace koebe {

/// Named inputs at which a suite attained its worst margin.
struct Witness {
    std::vector<std::pair<std::string, double>> inputs;
};

/// Summary of a secondary panel that is recorded but does not decide pass/fail.
struct PanelStats {
    std::size_t n_checks = 0;
    std::size_t n_violations = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
};

struct VerificationReport {
    std::string suite_name;
    std::string candidate;
    Complex order{1.0, 0.0};
    std::optional<double> r0;
    std::size_t n_checks = 0;
    std::size_t n_violations = 0;
    std::size_t n_skipped = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    std::optional<Witness> witness;
    double tolerance = 0.0;
    std::uint64_t seed = 0;
    std::optional<PanelStats> auxiliary;

    bool passed() const noexcept { return n_violations == 0; }
};

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kSamplingRadius = 0.95;

/// Fixed panel of base points v for the auxiliary-function checks.
inline const std::array<Complex, 5>& auxiliary_panel() {
    static const std::array<Complex, 5> panel{Complex{0.5, 0.0}, Complex{-0.3, 0.4},
                                              Complex{0.0, 0.6}, Complex{-0.7, 0.0},
                                              Complex{0.2, -0.6}};
    return panel;
}

/// Seeded, platform-independent uniform sampling of the disk |z| < radius.
class DiskSampler {
public:
    explicit DiskSampler(std::uint64_t seed, double radius = kSamplingRadius)
        : engine_(seed), radius_(radius) {}

    // std::uniform_real_distribution is implementation-defined; build [0,1) from 53 bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Area-uniform: modulus sqrt(U) * radius.
    DiskPoint next() {
        const double r = std::sqrt(uniform()) * radius_;
        const double t = kTwoPi * uniform();
        return DiskPoint{std::polar(r, t)};
    }

private:
    std::mt19937_64 engine_;
    double radius_;
};

namespace detail {

// Tracks the minimum margin; ties go to the lexicographically smallest input tuple.
class MarginTracker {
public:
    explicit MarginTracker(double tolerance) : tolerance_(tolerance) {}

    void record(double margin, std::vector<std::pair<std::string, double>> inputs) {
        ++n_checks_;
        if (std::isnan(margin)) {
            margin = -std::numeric_limits<double>::infinity();
        }
        if (margin < -tolerance_) {
            ++n_violations_;
        }
        if (!witness_ || margin < worst_ || (margin == worst_ && less(inputs, witness_->inputs))) {
            worst_ = margin;
            witness_ = Witness{std::move(inputs)};
        }
    }

    void fill(VerificationReport& report) const {
        report.n_checks = n_checks_;
        report.n_violations = n_violations_;
        report.worst_margin = worst_;
        report.witness = witness_;
        report.tolerance = tolerance_;
    }

    PanelStats stats() const { return PanelStats{n_checks_, n_violations_, worst_}; }

private:
    static bool less(const std::vector<std::pair<std::string, double>>& a,
                     const std::vector<std::pair<std::string, double>>& b) {
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (a[i].second != b[i].second) {
                return a[i].second < b[i].second;
            }
        }
        return a.size() < b.size();
    }

    double tolerance_;
    std::size_t n_checks_ = 0;
    std::size_t n_violations_ = 0;
    double worst_ = std::numeric_limits<double>::infinity();
    std::optional<Witness> witness_;
};

inline VerificationReport make_report(std::string suite, const CandidateFunction& f) {
    VerificationReport report;
    report.suite_name = std::move(suite);
    report.candidate = std::string(to_string(f.kind()));
    report.order = f.order().value();
    return report;
}

}  // namespace detail

/// Re of the starlikeness functional over the polar grid
/// r_k = k/(n+1), k = 1..n and theta_j = 2 pi j/n, j = 0..n-1. Margin is Re(Phi),
/// absolute. The auxiliary function built at each v of auxiliary_panel() is run
/// over the same grid and reported separately.
inline VerificationReport verify_starlikeness(const CandidateFunction& f, int grid_n,
                                              double tolerance = kDefaultTolerance) {
    if (grid_n < 1) {
        throw DomainError("grid size must be at least 1");
    }
    VerificationReport report = detail::make_report("starlike", f);
    detail::MarginTracker main(tolerance);
    detail::MarginTracker aux(tolerance);
    for (int k = 1; k <= grid_n; ++k) {
        const double r = static_cast<double>(k) / static_cast<double>(grid_n + 1);
        for (int j = 0; j < grid_n; ++j) {
            const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(grid_n);
            const DiskPoint z{std::polar(r, theta)};
            main.record(f.starlikeness_functional(z).real(), {{"r", r}, {"theta", theta}});
            for (const Complex& v : auxiliary_panel()) {
                aux.record(auxiliary_starlikeness_functional(f, DiskPoint{v}, z).real(),
                           {{"v_re", v.real()}, {"v_im", v.imag()}, {"r", r}, {"theta", theta}});
            }
        }
    }
    main.fill(report);
    report.auxiliary = aux.stats();
    return report;
}

/// lower <= |f(u)/f(v)| <= upper on n_pairs area-uniform pairs from the
/// radius-0.95 disk. Margins are log-slacks, so the tolerance is relative.
inline VerificationReport verify_two_point(const CandidateFunction& f, int n_pairs,
                                           std::uint64_t seed,
                                           double tolerance = kDefaultTolerance) {
    if (n_pairs < 1) {
        throw DomainError("pair count must be at least 1");
    }
    VerificationReport report = detail::make_report("two-point", f);
    report.seed = seed;
    detail::MarginTracker tracker(tolerance);
    DiskSampler sampler(seed);
    for (int i = 0; i < n_pairs;) {
        const DiskPoint u = sampler.next();
        const DiskPoint v = sampler.next();
        const Complex zero{0.0, 0.0};
        if (u == v || u.value() == zero || v.value() == zero) {
            ++report.n_skipped;
            continue;
        }
        const BoundPair p = two_point_check(f, u, v);
        tracker.record(p.log_margin(), {{"u_re", u.value().real()},
                                        {"u_im", u.value().imag()},
                                        {"v_re", v.value().real()},
                                        {"v_im", v.value().imag()}});
        ++i;
    }
    tracker.fill(report);
    return report;
}

/// Growth sandwich on |F(z)| for the auxiliary function of f at each v of
/// auxiliary_panel(), along 16 rays at radii 0.999 k/n, k = 1..n.
inline VerificationReport verify_growth(const CandidateFunction& f, int n_radii,
                                        double tolerance = kDefaultTolerance) {
    if (n_radii < 1) {
        throw DomainError("radius count must be at least 1");
    }
    constexpr int kRays = 16;
    VerificationReport report = detail::make_report("growth", f);
    detail::MarginTracker tracker(tolerance);
    for (const Complex& vc : auxiliary_panel()) {
        const DiskPoint v{vc};
        for (int j = 0; j < kRays; ++j) {
            const double theta = kTwoPi * static_cast<double>(j) / kRays;
            for (int k = 1; k <= n_radii; ++k) {
                const double r = 0.999 * static_cast<double>(k) / static_cast<double>(n_radii);
                const DiskPoint z{std::polar(r, theta)};
                if (mobius_from_disk(z, v).value() == Complex{0.0, 0.0}) {
                    ++report.n_skipped;
                    continue;
                }
                tracker.record(growth_check(f, v, z).log_margin(),
                               {{"v_re", vc.real()}, {"v_im", vc.imag()}, {"r", r}, {"theta", theta}});
            }
        }
    }
    tracker.fill(report);
    return report;
}

/// Epsilon ladder used by verify_limit: four decades starting at
/// min(1e-2, (1 - r0)/10).
inline std::vector<double> limit_epsilons(double r0) {
    double eps = std::min(1e-2, (1.0 - r0) / 10.0);
    std::vector<double> out;
    for (int i = 0; i < 4; ++i) {
        out.push_back(eps);
        eps /= 10.0;
    }
    return out;
}

/// Convergence of M(1 - eps, theta) to R(theta) on theta_j = 2 pi j/n. Each
/// theta contributes one check per decade (gap must shrink by a factor >= 5)
/// and one for the final gap (must be below 1e-3 R(theta)). Margins are logs
/// of those ratios. A gap below the rounding floor 1000 ulp(R)/(1 - r0) counts
/// as converged; 1 - r0 r loses digits as r0 -> 1, and on the real axis the
/// gap is quadratic in eps so it reaches that floor early.
inline VerificationReport verify_limit(const MontelConfig& cfg, int theta_grid_n,
                                       double tolerance = kDefaultTolerance) {
    if (theta_grid_n < 1) {
        throw DomainError("theta grid size must be at least 1");
    }
    constexpr double kShrink = 5.0;
    constexpr double kFinalFraction = 1e-3;
    constexpr double kRoundingUlps = 1000.0;
    VerificationReport report;
    report.suite_name = "limit";
    report.order = cfg.order().value();
    report.r0 = cfg.r0();
    detail::MarginTracker tracker(tolerance);
    const std::vector<double> eps = limit_epsilons(cfg.r0());
    for (int j = 0; j < theta_grid_n; ++j) {
        const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(theta_grid_n);
        const BoundaryPoint bp{theta};
        const std::vector<LimitGap> gaps = limit_check(bp, cfg, eps);
        const double floor =
            kRoundingUlps * std::numeric_limits<double>::epsilon() * koebe_radius(bp, cfg) / (1.0 - cfg.r0());
        for (std::size_t k = 0; k + 1 < gaps.size(); ++k) {
            const double prev = gaps[k].gap;
            const double next = gaps[k + 1].gap;
            const double margin = next <= floor ? std::numeric_limits<double>::infinity()
                                              : std::log(prev / (kShrink * next));
            tracker.record(margin, {{"theta", theta}, {"epsilon", gaps[k + 1].epsilon}});
        }
        const double final_gap = gaps.back().gap;
        const double allowed = kFinalFraction * koebe_radius(bp, cfg);
        const double margin =
            final_gap == 0.0 ? std::numeric_limits<double>::infinity() : std::log(allowed / final_gap);
        tracker.record(margin, {{"theta", theta}, {"epsilon", gaps.back().epsilon}});
    }
    tracker.fill(report);
    return report;
}

}  // namespace koebe
