#include "alphaspec/json_io.hpp"

#include "alphaspec/graph.hpp"

namespace alphaspec {

using nlohmann::json;

json to_json(const SpectrumReport& report) {
    json clusters = json::array();
    for (const auto& c : report.clusters)
        clusters.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
    return json{{"alpha", report.alpha},
                {"eigenvalues", report.eigenvalues},
                {"clusters", clusters}};
}

json to_json(const InvariantReport& report, const Rational& alpha) {
    json out{{"alpha", rational_to_string(alpha)}, {"n", report.n}, {"m", report.m}};
    out["sum_sq_degrees"] =
        report.sum_sq_degrees ? json(*report.sum_sq_degrees) : json(nullptr);
    out["sum_pair_products"] =
        report.sum_pair_products ? json(*report.sum_pair_products) : json(nullptr);
    out["regular_r"] = report.regular_r ? json(*report.regular_r) : json(nullptr);
    return out;
}

json to_json(const CospectralClass& cls) {
    json out{{"mode", cls.fingerprint.mode},
             {"fingerprint", cls.fingerprint.key},
             {"members", cls.members},
             {"charpoly", cls.charpoly}};
    out["alpha"] = cls.fingerprint.alpha.empty() ? json(nullptr) : json(cls.fingerprint.alpha);
    return out;
}

json to_json(const VerificationReport& report) {
    json counterexamples = json::array();
    for (const auto& ce : report.counterexamples)
        counterexamples.push_back({{"left_g6", ce.left_g6},
                                   {"right_g6", ce.right_g6},
                                   {"alpha", ce.alpha},
                                   {"detail", ce.detail}});
    return json{{"suite", report.suite},
                {"parameters", report.parameters},
                {"status", report.pass ? "pass" : "fail"},
                {"counterexamples", counterexamples},
                {"notes", report.notes},
                {"elapsed_seconds", report.elapsed_seconds}};
}

json to_json(const CospectralCertificate& cert) {
    json out{{"mode", cert.mode == SpectralMode::Symbolic ? "symbolic-a" : "fixed-a"},
             {"left_g6", to_graph6(cert.left)},
             {"right_g6", to_graph6(cert.right)},
             {"coronal_left", cert.coronal_left},
             {"coronal_right", cert.coronal_right}};
    out["alpha"] = cert.alpha ? json(rational_to_string(*cert.alpha)) : json(nullptr);
    out["charpoly"] = cert.mode == SpectralMode::Symbolic ? cert.shared_charpoly.to_string()
                                                          : cert.shared_charpoly_at.to_string();
    return out;
}

} // namespace alphaspec
