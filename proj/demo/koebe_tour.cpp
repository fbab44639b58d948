// Walks through the library: the extremal function, the two-point bound it
// attains, and how the Koebe-domain boundary bends as r0 moves off zero.

#include <cstdio>
#include <numbers>

#include "koebe/bounds.hpp"
#include "koebe/extremal.hpp"
#include "koebe/koebe.hpp"

int main() {
    using namespace koebe;

    const OrderParameter b{1.0, 0.0};
    const auto f = CandidateFunction::extremal(b);

    const DiskPoint u{0.25, 0.0};
    const DiskPoint v{0.5, 0.0};
    const BoundPair p = two_point_check(f, u, v);
    std::printf("two-point bound at u=0.25, v=0.5:  %.12g <= %.12g <= %.12g\n", p.lower, *p.middle,
                p.upper);

    for (double r0 : {0.1, 0.5, 0.9}) {
        const MontelConfig cfg{r0, b};
        std::printf("r0=%.1f  R(0)=%.6f  R(pi/2)=%.6f  R(pi)=%.6f\n", r0,
                    koebe_radius(BoundaryPoint{0.0}, cfg),
                    koebe_radius(BoundaryPoint{0.5 * std::numbers::pi}, cfg),
                    koebe_radius(BoundaryPoint{std::numbers::pi}, cfg));
    }

    const auto spiral = SpecialCase::spirallike(std::numbers::pi / 6.0);
    std::printf("spirallike, lambda=pi/6, r0=0.5: R(0)=%.6f\n",
                special_case_radius(spiral, BoundaryPoint{0.0}, 0.5));
    return 0;
}
