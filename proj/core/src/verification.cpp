#include "concavekit/verification.hpp"

#include <numbers>

#include "json.hpp"

namespace concavekit {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

void record_sample(VerificationReport& report, std::string label, double margin,
                   Complex location) {
    if (report.details.empty() || margin < report.margin) report.margin = margin;
    report.details.push_back(SampleRecord{std::move(label), margin, location});
    ++report.n_samples;
}

void finalize_status(VerificationReport& report) {
    if (report.status == Status::Inconclusive) return;  // sticky
    report.status = (report.margin >= 0.0) ? Status::Pass : Status::Fail;
}

std::vector<double> PolarGrid::radii() const {
    std::vector<double> r(n_radii);
    if (n_radii == 1) {
        r[0] = r_max;
        return r;
    }
    for (std::size_t i = 0; i < n_radii; ++i) {
        r[i] = r_min + (r_max - r_min) * static_cast<double>(i) /
                           static_cast<double>(n_radii - 1);
    }
    return r;
}

std::vector<double> PolarGrid::angles() const {
    std::vector<double> t(n_angles);
    for (std::size_t j = 0; j < n_angles; ++j) {
        t[j] = 2.0 * std::numbers::pi * static_cast<double>(j) /
               static_cast<double>(n_angles);
    }
    return t;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const VerificationReport& r : reports) {
        nlohmann::ordered_json jr;
        jr["suite_id"] = r.suite_id;
        jr["status"] = to_string(r.status);
        jr["margin"] = r.margin;
        jr["n_samples"] = r.n_samples;
        jr["seed"] = r.seed;
        nlohmann::ordered_json details = nlohmann::ordered_json::array();
        for (const SampleRecord& s : r.details) {
            nlohmann::ordered_json js;
            js["label"] = s.label;
            js["margin"] = s.margin;
            js["z"] = {s.location.real(), s.location.imag()};
            details.push_back(std::move(js));
        }
        jr["details"] = std::move(details);
        arr.push_back(std::move(jr));
    }
    return arr.dump(2) + "\n";
}

}  // namespace concavekit
