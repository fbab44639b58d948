// koebe: Koebe-domain radii, boundary profiles, two-point bounds and
// verification suites for starlike functions of complex order.
//
// Exit codes: 0 success/pass, 1 verification violations, 2 usage error,
// 3 output not writable.

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "koebe/bounds.hpp"
#include "koebe/complex_core.hpp"
#include "koebe/extremal.hpp"
#include "koebe/io.hpp"
#include "koebe/koebe.hpp"
#include "koebe/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnwritable = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrderFlags {
    double re = 1.0;
    double im = 0.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--b-re", re, "Real part of the order parameter b")->capture_default_str();
        cmd->add_option("--b-im", im, "Imaginary part of the order parameter b")->capture_default_str();
    }
    koebe::OrderParameter get() const { return koebe::OrderParameter{re, im}; }
};

koebe::io::OutputFormat parse_format(const std::string& s) {
    return s == "csv" ? koebe::io::OutputFormat::Csv : koebe::io::OutputFormat::Json;
}

koebe::MontelConfig montel(double r0, const OrderFlags& b) {
    return koebe::MontelConfig{r0, b.get()};
}

koebe::DiskPoint named_disk_point(const char* name, double re, double im) {
    const koebe::Complex z{re, im};
    if (!(std::abs(z) < 1.0)) {
        throw UsageError(std::string(name) + " must lie in the open unit disk");
    }
    return koebe::DiskPoint{z};
}

std::uint64_t default_seed() {
    const char* env = std::getenv("KOEBE_SEED");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0') {
        throw UsageError("KOEBE_SEED must be a nonnegative integer");
    }
    return v;
}

int write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return kExitPass;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "koebe: cannot open output file '" << path << "'\n";
        return kExitUnwritable;
    }
    out << text;
    out.close();
    if (!out) {
        std::cerr << "koebe: failed writing output file '" << path << "'\n";
        return kExitUnwritable;
    }
    return kExitPass;
}

koebe::CandidateFunction make_candidate(const std::string& name, const koebe::OrderParameter& b,
                                        double rotation) {
    if (name == "identity") {
        return koebe::CandidateFunction::identity(b);
    }
    if (name == "rotated") {
        return koebe::CandidateFunction::rotated(b, rotation);
    }
    return koebe::CandidateFunction::extremal(b);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Koebe domain of starlike functions of complex order with Montel normalization"};
    app.require_subcommand(1);

    // radius
    auto* radius_cmd = app.add_subcommand("radius", "Boundary radius R(theta) of the Koebe domain");
    double theta = 0.0;
    bool degrees = false;
    double r0 = 0.5;
    OrderFlags radius_b;
    radius_cmd->add_option("--theta", theta, "Direction angle (radians unless --degrees)")->required();
    radius_cmd->add_flag("--degrees", degrees, "Interpret --theta in degrees");
    radius_cmd->add_option("--r0", r0, "Montel fixed point, 0 < r0 < 1")->required();
    radius_b.attach(radius_cmd);

    // boundary
    auto* boundary_cmd = app.add_subcommand("boundary", "Sampled boundary profile of the Koebe domain");
    double boundary_r0 = 0.5;
    OrderFlags boundary_b;
    int samples = 360;
    std::string boundary_format = "csv";
    std::string boundary_out;
    boundary_cmd->add_option("--r0", boundary_r0, "Montel fixed point, 0 < r0 < 1")->required();
    boundary_b.attach(boundary_cmd);
    boundary_cmd->add_option("--samples", samples, "Number of uniformly spaced angles (>= 2)")
        ->capture_default_str();
    boundary_cmd->add_option("--format", boundary_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    boundary_cmd->add_option("--out", boundary_out, "Output path (default: standard output)");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Two-point bounds on |f(u)/f(v)| and the extremal ratio");
    double u_re = 0.0, u_im = 0.0, v_re = 0.0, v_im = 0.0;
    OrderFlags bounds_b;
    bounds_cmd->add_option("--u-re", u_re, "Real part of u")->required();
    bounds_cmd->add_option("--u-im", u_im, "Imaginary part of u");
    bounds_cmd->add_option("--v-re", v_re, "Real part of v")->required();
    bounds_cmd->add_option("--v-im", v_im, "Imaginary part of v");
    bounds_b.attach(bounds_cmd);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and print its report");
    std::string suite;
    std::string candidate = "extremal";
    double rotation = 0.0;
    OrderFlags verify_b;
    std::optional<int> n;
    std::optional<std::uint64_t> seed;
    double tol = koebe::kDefaultTolerance;
    double verify_r0 = 0.5;
    std::string verify_format = "json";
    verify_cmd->add_option("--suite", suite, "starlike, two-point, growth or limit")
        ->required()
        ->check(CLI::IsMember({"starlike", "two-point", "growth", "limit"}));
    verify_cmd->add_option("--candidate", candidate, "identity, extremal or rotated")
        ->check(CLI::IsMember({"identity", "extremal", "rotated"}))
        ->capture_default_str();
    verify_cmd->add_option("--rotation", rotation, "Rotation angle for the rotated candidate");
    verify_b.attach(verify_cmd);
    verify_cmd->add_option("--n", n, "Grid size, pair count, radius count or theta count");
    verify_cmd->add_option("--seed", seed, "Sampling seed (default: $KOEBE_SEED or 0)");
    verify_cmd->add_option("--tol", tol, "Violation tolerance")->capture_default_str();
    verify_cmd->add_option("--r0", verify_r0, "Montel fixed point for the limit suite")->capture_default_str();
    verify_cmd->add_option("--format", verify_format, "json or csv")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << "koebe: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*radius_cmd) {
            const double t = degrees ? theta * std::numbers::pi / 180.0 : theta;
            const koebe::MontelConfig cfg = montel(r0, radius_b);
            std::cout << koebe::io::format_number(koebe::koebe_radius(koebe::BoundaryPoint{t}, cfg))
                      << '\n';
            return kExitPass;
        }
        if (*boundary_cmd) {
            if (samples < 2) {
                throw UsageError("samples must be at least 2");
            }
            const koebe::MontelConfig cfg = montel(boundary_r0, boundary_b);
            const koebe::KoebeProfile profile =
                koebe::boundary_profile(cfg, static_cast<std::size_t>(samples));
            const std::string text = parse_format(boundary_format) == koebe::io::OutputFormat::Csv
                                         ? koebe::io::profile_csv(profile)
                                         : koebe::io::profile_json(profile).dump(2) + "\n";
            return write_output(text, boundary_out);
        }
        if (*bounds_cmd) {
            const koebe::OrderParameter b = bounds_b.get();
            const koebe::DiskPoint u = named_disk_point("u", u_re, u_im);
            const koebe::DiskPoint v = named_disk_point("v", v_re, v_im);
            const koebe::BoundPair p =
                koebe::two_point_check(koebe::CandidateFunction::extremal(b), u, v);
            std::cout << koebe::io::format_number(p.lower) << ' '
                      << koebe::io::format_number(*p.middle) << ' '
                      << koebe::io::format_number(p.upper) << '\n';
            return kExitPass;
        }
        if (*verify_cmd) {
            const koebe::OrderParameter b = verify_b.get();
            const std::uint64_t s = seed ? *seed : default_seed();
            const koebe::CandidateFunction f = make_candidate(candidate, b, rotation);
            koebe::VerificationReport report;
            if (suite == "starlike") {
                report = koebe::verify_starlikeness(f, n.value_or(64), tol);
            } else if (suite == "two-point") {
                report = koebe::verify_two_point(f, n.value_or(10000), s, tol);
            } else if (suite == "growth") {
                report = koebe::verify_growth(f, n.value_or(64), tol);
            } else {
                report = koebe::verify_limit(montel(verify_r0, verify_b), n.value_or(16), tol);
            }
            const std::string text = verify_format == "csv" ? koebe::io::report_csv(report)
                                                            : koebe::io::report_json(report).dump(2) + "\n";
            std::cout << text;
            return report.passed() ? kExitPass : kExitViolations;
        }
    } catch (const UsageError& e) {
        std::cerr << "koebe: " << e.what() << '\n';
        return kExitUsage;
    } catch (const koebe::DomainError& e) {
        std::cerr << "koebe: " << e.what() << '\n';
        return kExitUsage;
    } catch (const koebe::DegenerateInput& e) {
        std::cerr << "koebe: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "koebe: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
