// alphaspec: exact A_alpha spectra, coronal/join algebra, cospectral scans and
// theorem-verification suites for small graphs.

#include "alphaspec/canonical.hpp"
#include "alphaspec/charpoly.hpp"
#include "alphaspec/classes.hpp"
#include "alphaspec/eigensolve.hpp"
#include "alphaspec/enumerate.hpp"
#include "alphaspec/graph.hpp"
#include "alphaspec/invariants.hpp"
#include "alphaspec/joins.hpp"
#include "alphaspec/json_io.hpp"
#include "alphaspec/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

namespace {

using namespace alphaspec;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct OutputSink {
    std::string path;
    std::unique_ptr<std::ofstream> file;

    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file) {
            file = std::make_unique<std::ofstream>(path);
            if (!*file) throw std::runtime_error("cannot open output file " + path);
        }
        return *file;
    }
};

Rational parse_alpha_arg(const std::string& text) {
    if (text.find('.') != std::string::npos)
        std::cerr << "note: decimal alpha " << text
                  << " converted to an exact rational; prefer p/q form\n";
    Rational a = parse_rational(text);
    require_alpha_range(a);
    return a;
}

std::vector<Rational> parse_alpha_list(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    for (const auto& t : texts) out.push_back(parse_alpha_arg(t));
    return out;
}

Graph load_graph(const std::string& inline_g6, const std::string& input_path) {
    if (!inline_g6.empty() && !input_path.empty())
        throw std::invalid_argument("pass either -g or --input, not both");
    if (!inline_g6.empty()) return parse_graph6(inline_g6);
    if (!input_path.empty()) {
        auto graphs = read_graph6_file(input_path);
        if (graphs.empty()) throw std::invalid_argument("no graphs in " + input_path);
        if (graphs.size() > 1)
            throw std::invalid_argument("expected a single graph in " + input_path);
        return graphs.front();
    }
    throw std::invalid_argument("a graph is required (-g or --input)");
}

void emit(OutputSink& sink, const nlohmann::json& j, const std::string& format,
          const std::string& text_form) {
    if (format == "json") sink.stream() << j.dump() << '\n';
    else sink.stream() << text_form << '\n';
}

int run_verify(const std::string& suite, const std::string& family, int max_n,
               std::vector<Rational> alphas, const std::string& mode_name, double tol,
               unsigned jobs, const std::string& format, OutputSink& sink) {
    ScanContext ctx(jobs);
    std::vector<VerificationReport> reports;

    if (suite == "ds") {
        if (family.empty()) throw std::invalid_argument("--suite ds needs --family");
        const ModeSpec kind = mode_name == "symbolic" ? ModeSpec::symbolic()
                                                      : ModeSpec::fixed(Rational(0));
        if (kind.mode == SpectralMode::Fixed && alphas.empty())
            throw std::invalid_argument("--suite ds needs --alpha in fixed mode");
        reports.push_back(verify_ds(family, max_n, alphas, kind, ctx));
    } else if (suite == "le3.1" || suite == "le3.2") {
        if (alphas.empty()) alphas = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
        reports.push_back(verify_lemma(suite, 7, max_n, alphas, tol, ctx));
    } else if (suite == "lem2.1") {
        if (alphas.empty()) alphas = {Rational(3, 5), Rational(3, 4)};
        reports.push_back(verify_lemma(suite, 2, max_n, alphas, tol, ctx));
    } else if (suite == "thm3.1") {
        if (alphas.empty()) alphas = {Rational(3, 5), Rational(3, 4)};
        reports.push_back(verify_lemma("claim1", 4, max_n, alphas, tol, ctx));
        reports.push_back(verify_lemma("claim2", 4, max_n, alphas, tol, ctx));
        reports.push_back(verify_ds("km-pn", max_n, alphas, ModeSpec::fixed(alphas.front()), ctx));
    } else if (suite == "transfer") {
        if (alphas.empty()) alphas = {Rational(3, 5), Rational(3, 4)};
        reports.push_back(verify_regular_ds_transfer(std::min(max_n, 7), 3, alphas, ctx));
    } else if (suite == "corollary-regression") {
        reports.push_back(verify_corollary_regression(ctx));
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }

    bool all_pass = true;
    for (const auto& report : reports) {
        all_pass = all_pass && report.pass;
        if (format == "json") {
            sink.stream() << to_json(report).dump() << '\n';
        } else {
            sink.stream() << (report.pass ? "PASS " : "FAIL ") << report.suite;
            for (const auto& [k, v] : report.parameters) sink.stream() << ' ' << k << '=' << v;
            sink.stream() << '\n';
            for (const auto& note : report.notes) sink.stream() << "  " << note << '\n';
            for (const auto& ce : report.counterexamples)
                sink.stream() << "  counterexample: " << ce.left_g6 << " ~ " << ce.right_g6
                              << " alpha=" << ce.alpha << " (" << ce.detail << ")\n";
        }
    }
    return all_pass ? kExitPass : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"A_alpha spectra toolkit: exact characteristic polynomials, coronals, "
                 "cospectral scans and verification suites"};
    app.require_subcommand(1);

    std::string g6, g6_right, input_path, out_path, format = "text", mode_name = "fixed";
    std::string alpha_text, family, suite;
    std::vector<std::string> alpha_texts;
    std::string h1_text, h2_text, g2_text;
    int max_n = 8;
    unsigned jobs = 0;
    double tol = 1e-9;
    bool check_flag = false;

    auto add_common = [&](CLI::App* cmd, bool graph_input) {
        if (graph_input) {
            cmd->add_option("-g,--graph", g6, "graph6 record");
            cmd->add_option("--input", input_path, "file with one graph6 record");
        }
        cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", out_path, "output path (default stdout)");
        return cmd;
    };

    auto* cmd_charpoly = add_common(app.add_subcommand("charpoly",
        "exact characteristic polynomial (bivariate, or univariate with --alpha)"), true);
    cmd_charpoly->add_option("--alpha", alpha_text, "rational p/q or decimal");

    auto* cmd_spectrum = add_common(app.add_subcommand("spectrum",
        "numeric eigenvalues at a fixed alpha"), true);
    cmd_spectrum->add_option("--alpha", alpha_text)->required();

    auto* cmd_coronal = add_common(app.add_subcommand("coronal",
        "coronal Gamma(x) (bivariate, or at --alpha)"), true);
    cmd_coronal->add_option("--alpha", alpha_text);

    auto* cmd_invariants = add_common(app.add_subcommand("invariants",
        "spectrum-determined invariants at a fixed alpha"), true);
    cmd_invariants->add_option("--alpha", alpha_text)->required();

    auto* cmd_join = add_common(app.add_subcommand("join",
        "join two graphs; --check validates the join charpoly factorization"), true);
    cmd_join->add_option("--right", g6_right, "right factor graph6")->required();
    cmd_join->add_flag("--check", check_flag, "compare formula against direct determinant");

    auto* cmd_forge = add_common(app.add_subcommand("forge",
        "build a cospectral-pair certificate from join factors"), false);
    cmd_forge->add_option("-g,--graph", g6, "common (or left) outer factor")->required();
    cmd_forge->add_option("--g2", g2_text, "right outer factor (defaults to -g)");
    cmd_forge->add_option("--h1", h1_text, "first inner factor")->required();
    cmd_forge->add_option("--h2", h2_text, "second inner factor")->required();
    cmd_forge->add_option("--mode", mode_name, "symbolic|fixed")
        ->check(CLI::IsMember({"symbolic", "fixed"}));
    cmd_forge->add_option("--alpha", alpha_text, "required in fixed mode");

    auto* cmd_scan = add_common(app.add_subcommand("scan",
        "partition graphs into exact cospectral classes (JSON lines)"), false);
    cmd_scan->add_option("-n,--order", max_n, "enumerate all graphs on this many vertices");
    cmd_scan->add_option("--input", input_path, "scan a .g6 catalog instead");
    cmd_scan->add_option("--mode", mode_name, "symbolic|fixed")
        ->check(CLI::IsMember({"symbolic", "fixed"}));
    cmd_scan->add_option("--alpha", alpha_text, "fixed-mode alpha");
    cmd_scan->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    cmd_scan->add_flag("--nontrivial-only", check_flag,
                       "text mode: print only classes with more than one member");

    auto* cmd_verify = add_common(app.add_subcommand("verify",
        "run a theorem-verification suite (exit 1 on failure)"), false);
    cmd_verify->add_option("--suite", suite,
        "ds|le3.1|le3.2|lem2.1|thm3.1|transfer|corollary-regression")->required();
    cmd_verify->add_option("--family", family, "ds family name");
    cmd_verify->add_option("--max-n", max_n, "size bound");
    cmd_verify->add_option("--alpha", alpha_texts, "alpha sample (repeatable)");
    cmd_verify->add_option("--mode", mode_name, "symbolic|fixed")
        ->check(CLI::IsMember({"symbolic", "fixed"}));
    cmd_verify->add_option("--tol", tol, "numeric tolerance / margin");
    cmd_verify->add_option("--jobs", jobs, "worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    OutputSink sink{out_path, nullptr};
    try {
        if (cmd_charpoly->parsed()) {
            const Graph g = load_graph(g6, input_path);
            if (alpha_text.empty()) {
                const BivarPoly p = charpoly_exact(g);
                nlohmann::json j{{"n", g.order()}, {"charpoly", p.to_string()}};
                auto& terms = j["terms"] = nlohmann::json::array();
                for (const auto& [dx, da, c] : p.terms()) terms.push_back({dx, da, c});
                emit(sink, j, format, p.to_string());
            } else {
                const Rational alpha = parse_alpha_arg(alpha_text);
                const UnivarPoly p = charpoly_at(g, alpha);
                emit(sink,
                     {{"n", g.order()},
                      {"alpha", rational_to_string(alpha)},
                      {"charpoly", p.to_string()}},
                     format, p.to_string());
            }
        } else if (cmd_spectrum->parsed()) {
            const Graph g = load_graph(g6, input_path);
            const Rational alpha = parse_alpha_arg(alpha_text);
            const SpectrumReport report = eigenvalues(g, to_double(alpha));
            std::string text;
            for (size_t i = 0; i < report.eigenvalues.size(); ++i) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "lambda_%zu = %.12g", i + 1,
                              report.eigenvalues[i]);
                text += (i ? "\n" : "") + std::string(buf);
            }
            emit(sink, to_json(report), format, text);
        } else if (cmd_coronal->parsed()) {
            const Graph g = load_graph(g6, input_path);
            if (alpha_text.empty()) {
                const Coronal c = coronal(g);
                emit(sink,
                     {{"n", g.order()},
                      {"num", c.value.num().to_string()},
                      {"den", c.value.den().to_string()}},
                     format, c.value.to_string());
            } else {
                const Rational alpha = parse_alpha_arg(alpha_text);
                auto [num, den] = coronal_at(g, alpha);
                emit(sink,
                     {{"n", g.order()},
                      {"alpha", rational_to_string(alpha)},
                      {"num", num.to_string()},
                      {"den", den.to_string()}},
                     format, "(" + num.to_string() + ") / (" + den.to_string() + ")");
            }
        } else if (cmd_invariants->parsed()) {
            const Graph g = load_graph(g6, input_path);
            const Rational alpha = parse_alpha_arg(alpha_text);
            const InvariantReport inv = invariants_from_charpoly(charpoly_at(g, alpha), alpha);
            std::string text = "n=" + std::to_string(inv.n) + " m=" + std::to_string(inv.m);
            if (inv.sum_sq_degrees) text += " sum_sq_degrees=" + std::to_string(*inv.sum_sq_degrees);
            if (inv.sum_pair_products)
                text += " sum_pair_products=" + std::to_string(*inv.sum_pair_products);
            if (inv.regular_r) text += " regular_r=" + std::to_string(*inv.regular_r);
            emit(sink, to_json(inv, alpha), format, text);
        } else if (cmd_join->parsed()) {
            const Graph left = load_graph(g6, input_path);
            const Graph right = parse_graph6(g6_right);
            const Graph joined = join(left, right);
            if (check_flag) {
                const BivarPoly formula = join_charpoly(left, right);
                const BivarPoly direct = charpoly_exact(joined);
                const bool ok = formula == direct;
                emit(sink,
                     {{"join_g6", to_graph6(joined)},
                      {"charpoly", formula.to_string()},
                      {"check", ok ? "ok" : "mismatch"}},
                     format,
                     to_graph6(joined) + (ok ? "  [join formula == determinant]"
                                             : "  [MISMATCH]"));
                if (!ok) return kExitVerifyFail;
            } else {
                emit(sink, {{"join_g6", to_graph6(joined)}}, format, to_graph6(joined));
            }
        } else if (cmd_forge->parsed()) {
            const Graph g1 = parse_graph6(g6);
            const Graph g2 = g2_text.empty() ? g1 : parse_graph6(g2_text);
            const Graph h1 = parse_graph6(h1_text);
            const Graph h2 = parse_graph6(h2_text);
            const SpectralMode mode =
                mode_name == "symbolic" ? SpectralMode::Symbolic : SpectralMode::Fixed;
            std::optional<Rational> alpha;
            if (!alpha_text.empty()) alpha = parse_alpha_arg(alpha_text);
            const CospectralCertificate cert = forge_cospectral_pair(g1, g2, h1, h2, mode, alpha);
            emit(sink, to_json(cert), format,
                 to_graph6(cert.left) + " ~ " + to_graph6(cert.right) + "  (cospectral, " +
                     (mode == SpectralMode::Symbolic ? "symbolic alpha"
                                                     : "alpha=" + rational_to_string(*alpha)) +
                     ")");
        } else if (cmd_scan->parsed()) {
            ScanContext ctx(jobs);
            const ModeSpec mode = mode_name == "symbolic"
                                      ? ModeSpec::symbolic()
                                      : ModeSpec::fixed(parse_alpha_arg(
                                            alpha_text.empty() ? "0" : alpha_text));
            std::vector<Graph> graphs = input_path.empty()
                                            ? ctx.level(max_n)
                                            : canonicalize_catalog(
                                                  read_graph6_file(input_path), ctx.jobs());
            const auto classes = cospectral_classes(graphs, mode, ctx, true);
            long nontrivial = 0;
            for (const auto& cls : classes) {
                if (cls.members.size() > 1) ++nontrivial;
                if (format == "json") sink.stream() << to_json(cls).dump() << '\n';
                else if (cls.members.size() > 1 || !check_flag) {
                    sink.stream() << cls.fingerprint.key.substr(0, 16);
                    for (const auto& mbr : cls.members) sink.stream() << ' ' << mbr;
                    sink.stream() << '\n';
                }
            }
            std::cerr << "classes: " << classes.size() << " (" << nontrivial
                      << " with >1 member) over " << graphs.size() << " graphs\n";
        } else if (cmd_verify->parsed()) {
            return run_verify(suite, family, max_n, parse_alpha_list(alpha_texts), mode_name,
                              tol, jobs, format, sink);
        }
    } catch (const ForgeError& e) {
        std::cerr << "forge rejected: " << e.what() << '\n';
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitPass;
}
