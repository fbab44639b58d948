#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>

#include "json.hpp"
#include "koebe/koebe.hpp"
#include "koebe/verify.hpp"

namespace koebe::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "koebe/1";
inline constexpr int kSignificantDigits = 12;

enum class OutputFormat { Csv, Json };

/// Shortest %.12g-style rendering; independent of the global locale.
inline std::string format_number(double x) {
    std::array<char, 64> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general,
                      kSignificantDigits);
    return std::string(buf.data(), res.ptr);
}

/// x rounded to 12 significant digits, as a double; non-finite values become null.
inline Json rounded(double x) {
    if (!std::isfinite(x)) {
        return nullptr;
    }
    const std::string s = format_number(x);
    double out = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

inline Json complex_json(Complex c) { return Json{{"re", rounded(c.real())}, {"im", rounded(c.imag())}}; }

inline std::string profile_csv(const KoebeProfile& profile) {
    std::string out = "theta,radius\n";
    for (const ProfileSample& s : profile.samples) {
        out += format_number(s.theta);
        out += ',';
        out += format_number(s.radius);
        out += '\n';
    }
    return out;
}

inline Json profile_json(const KoebeProfile& profile) {
    Json samples = Json::array();
    for (const ProfileSample& s : profile.samples) {
        samples.push_back(Json{{"theta", rounded(s.theta)}, {"radius", rounded(s.radius)}});
    }
    return Json{{"schema", kSchema},
                {"r0", rounded(profile.config.r0())},
                {"b", complex_json(profile.config.order().value())},
                {"samples", std::move(samples)}};
}

inline Json report_json(const VerificationReport& report) {
    Json j{{"schema", kSchema}, {"suite", report.suite_name}};
    if (!report.candidate.empty()) {
        j["candidate"] = report.candidate;
    }
    j["b"] = complex_json(report.order);
    if (report.r0) {
        j["r0"] = rounded(*report.r0);
    }
    j["n_checks"] = report.n_checks;
    j["n_violations"] = report.n_violations;
    j["n_skipped"] = report.n_skipped;
    j["worst_margin"] = rounded(report.worst_margin);
    if (report.witness) {
        Json w = Json::object();
        for (const auto& [name, value] : report.witness->inputs) {
            w[name] = rounded(value);
        }
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["tolerance"] = rounded(report.tolerance);
    j["seed"] = report.seed;
    if (report.auxiliary) {
        j["auxiliary"] = Json{{"n_checks", report.auxiliary->n_checks},
                              {"n_violations", report.auxiliary->n_violations},
                              {"worst_margin", rounded(report.auxiliary->worst_margin)}};
    }
    j["passed"] = report.passed();
    return j;
}

inline std::string report_csv(const VerificationReport& report) {
    std::string out = "suite,candidate,n_checks,n_violations,n_skipped,worst_margin,tolerance,seed,passed\n";
    out += report.suite_name + ',' + report.candidate + ',' + std::to_string(report.n_checks) + ',' +
           std::to_string(report.n_violations) + ',' + std::to_string(report.n_skipped) + ',' +
           format_number(report.worst_margin) + ',' + format_number(report.tolerance) + ',' +
           std::to_string(report.seed) + ',' + (report.passed() ? "true" : "false") + '\n';
    return out;
}

}  // namespace koebe::io
