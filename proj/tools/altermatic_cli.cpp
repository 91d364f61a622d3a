// altermatic: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error, 3 resource cap.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "altermatic/altermatic.hpp"
#include "altermatic/colorer.hpp"
#include "altermatic/errors.hpp"
#include "altermatic/io.hpp"
#include "altermatic/kneser.hpp"
#include "altermatic/proofengine.hpp"
#include "altermatic/report.hpp"
#include "altermatic/selftest.hpp"

using namespace altermatic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Input {
    std::string path;
    std::string bytes;
};

class Report {
public:
    Report(std::string command, bool json) : json_(json)
    {
        doc_["tool"] = "altermatic";
        doc_["version"] = kToolVersion;
        doc_["command"] = std::move(command);
        doc_["inputs"] = Json::array();
    }

    void input(const Input& in) { doc_["inputs"].push_back({{"path", in.path}, {"fnv1a64", digest_hex(in.bytes)}}); }
    Json& result() { return doc_["result"]; }
    void set(const std::string& key, Json value) { doc_[key] = std::move(value); }

    void emit(std::ostream& out, double elapsed_ms)
    {
        doc_["elapsed_ms"] = static_cast<long long>(elapsed_ms);
        if (json_) {
            out << doc_.dump(2) << "\n";
            return;
        }
        flatten(out, "", doc_);
    }

private:
    static void flatten(std::ostream& out, const std::string& prefix, const Json& j)
    {
        if (j.is_object()) {
            for (auto it = j.begin(); it != j.end(); ++it)
                flatten(out, prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
            return;
        }
        if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); })) {
            out << prefix << ":";
            for (const auto& e : j)
                out << " " << (e.is_string() ? e.get<std::string>() : e.dump());
            out << "\n";
            return;
        }
        if (j.is_array()) {
            for (std::size_t i = 0; i < j.size(); ++i)
                flatten(out, prefix + "[" + std::to_string(i) + "]", j[i]);
            return;
        }
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }

    bool json_;
    Json doc_;
};

Input load(const std::string& path)
{
    return Input{path, read_input(path)};
}

Hypergraph load_hypergraph(const Input& in, const Limits& limits)
{
    Hypergraph h = parse_hypergraph(in.bytes);
    if (h.vertex_count() > limits.n_cap)
        throw ResourceError("n = " + std::to_string(h.vertex_count()) + " exceeds the vertex cap " +
                            std::to_string(limits.n_cap) + " (ALTERMATIC_N_CAP)");
    return h;
}

LinearOrder ordering_or_identity(const std::string& text, int n)
{
    return text.empty() ? LinearOrder::identity(n) : LinearOrder::parse(text, n);
}

SizeRange parse_sizes(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int s = std::stoi(text);
            return {s, s};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ArgumentError("--sizes expects A..B, got '" + text + "'");
    }
}

std::string join_args(int argc, char** argv)
{
    std::string out;
    for (int i = 1; i < argc; ++i) {
        if (i > 1)
            out += ' ';
        out += argv[i];
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Altermatic lower bounds and coloring audits for general Kneser graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Emit a JSON report instead of text");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a hypergraph file on stdout");
    gen->require_subcommand(1);
    int gm = 0, gr = 0;
    auto* gen_kneser = gen->add_subcommand("kneser", "All r-subsets of [m]");
    gen_kneser->add_option("-m", gm, "Ground set size")->required();
    gen_kneser->add_option("-r", gr, "Subset size")->required();
    auto* gen_schrijver = gen->add_subcommand("schrijver", "Stable r-subsets of the m-cycle");
    gen_schrijver->add_option("-m", gm, "Ground set size")->required();
    gen_schrijver->add_option("-r", gr, "Subset size")->required();
    int rn = 0;
    std::size_t re = 0;
    std::string rsizes = "1..1";
    std::uint64_t rseed = 0;
    auto* gen_random = gen->add_subcommand("random", "Random hypergraph");
    gen_random->add_option("-n", rn, "Vertex count")->required();
    gen_random->add_option("-e", re, "Edge count")->required();
    gen_random->add_option("--sizes", rsizes, "Edge size range A..B")->required();
    gen_random->add_option("--seed", rseed, "RNG seed")->required();

    // shared analysis options
    std::string hpath, cpath, sigma_text, coloring_out;
    int k = 1;
    std::size_t samples = 32;
    std::uint64_t seed = 0;
    bool exhaustive = false;
    std::uint64_t step_cap = 0;

    auto* chromatic = app.add_subcommand("chromatic", "Exact chromatic number of KG(H) with a witness coloring");
    chromatic->add_option("-H", hpath, "Hypergraph file ('-' for stdin)")->required();
    chromatic->add_option("--coloring-out", coloring_out, "Write the witness coloring file here");

    auto* altsigma = app.add_subcommand("altsigma", "alt_sigma(H,k) for one ordering");
    altsigma->add_option("-H", hpath, "Hypergraph file ('-' for stdin)")->required();
    altsigma->add_option("-k", k, "k >= 1")->required();
    altsigma->add_option("--sigma", sigma_text, "Ordering as space-separated vertex ids (default: identity)");

    auto add_mode = [&](CLI::App* sub) {
        auto* ex = sub->add_flag("--exhaustive", exhaustive, "Minimize over all n! orderings");
        auto* sa = sub->add_option("--samples", samples, "Minimize over the identity plus this many random orderings");
        auto* se = sub->add_option("--seed", seed, "Seed for sampled orderings");
        ex->excludes(sa);
        ex->excludes(se);
    };

    auto* altbound = app.add_subcommand("altbound", "alt(H,k) and the lower bound n - alt(H,k) + k - 1");
    altbound->add_option("-H", hpath, "Hypergraph file ('-' for stdin)")->required();
    altbound->add_option("-k", k, "k >= 1")->required();
    add_mode(altbound);

    auto* verify = app.add_subcommand("verify", "Check chi(KG(H)) >= n - alt(H,k) + k - 1; exit 0 iff it holds");
    verify->add_option("-H", hpath, "Hypergraph file ('-' for stdin)")->required();
    verify->add_option("-k", k, "k >= 1")->required();
    add_mode(verify);

    auto* auditc = app.add_subcommand("audit", "Walk the sequence graph to find two disjoint same-colored edges");
    auditc->add_option("-H", hpath, "Hypergraph file ('-' for stdin)")->required();
    auditc->add_option("-k", k, "k >= 1")->required();
    auditc->add_option("-c", cpath, "Coloring file, one color per hyperedge ('-' for stdin)")->required();
    auditc->add_option("--sigma", sigma_text, "Ordering as space-separated vertex ids (default: identity)");
    auditc->add_option("--step-cap", step_cap, "Maximum walk length (default from ALTERMATIC_STEP_CAP)");

    auto* selftest = app.add_subcommand("selftest", "Run the built-in checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };

    try {
        const Limits limits = Limits::from_env();
        Report report(join_args(argc, argv), json);

        if (gen->parsed()) {
            Hypergraph h = gen_kneser->parsed()      ? complete_uniform(gm, gr)
                           : gen_schrijver->parsed() ? schrijver_hypergraph(gm, gr)
                                                     : random_hypergraph(rn, re, parse_sizes(rsizes), rseed);
            std::cout << "# altermatic " << join_args(argc, argv) << "\n" << serialize_hypergraph(h);
            return kExitOk;
        }

        if (selftest->parsed()) {
            bool all = true;
            Json cases = Json::array();
            for (const auto& c : run_selftest()) {
                all = all && c.passed;
                cases.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            }
            report.result()["cases"] = cases;
            report.result()["passed"] = all;
            report.emit(std::cout, elapsed());
            return all ? kExitOk : kExitFailed;
        }

        if (hpath == "-" && cpath == "-")
            throw ArgumentError("-H and -c cannot both read stdin");
        const Input hin = load(hpath);
        report.input(hin);
        const Hypergraph h = load_hypergraph(hin, limits);

        AltMinOptions mode;
        mode.factorial_cap = limits.factorial_cap;
        mode.samples = samples;
        mode.seed = seed;
        mode.mode = exhaustive || h.vertex_count() <= limits.factorial_cap ? SigmaMode::exhaustive
                                                                             : SigmaMode::sampled;
        if ((altbound->parsed() || verify->parsed()) &&
            ((altbound->parsed() ? altbound : verify)->count("--samples") > 0 ||
             (altbound->parsed() ? altbound : verify)->count("--seed") > 0))
            mode.mode = SigmaMode::sampled;

        if (chromatic->parsed()) {
            const auto chi = chromatic_number(kneser_graph(h));
            report.result()["chi"] = chi.chi;
            report.result()["coloring"] = chi.witness.assignment;
            if (!coloring_out.empty()) {
                std::ofstream f(coloring_out);
                if (!f)
                    throw ArgumentError("cannot write '" + coloring_out + "'");
                f << serialize_coloring(chi.witness);
            }
            report.emit(std::cout, elapsed());
            return kExitOk;
        }

        if (altsigma->parsed()) {
            const auto sigma = ordering_or_identity(sigma_text, h.vertex_count());
            report.result() = to_json(alt_sigma(h, sigma, k));
            report.emit(std::cout, elapsed());
            return kExitOk;
        }

        if (altbound->parsed()) {
            report.set("seed", mode.mode == SigmaMode::sampled ? Json(mode.seed) : Json(nullptr));
            report.result() = to_json(alt_min(h, k, mode));
            report.emit(std::cout, elapsed());
            return kExitOk;
        }

        if (verify->parsed()) {
            report.set("seed", mode.mode == SigmaMode::sampled ? Json(mode.seed) : Json(nullptr));
            const auto check = verify_theorem(h, k, mode);
            report.result() = to_json(check);
            if (!check.holds) {
                report.result()["reproduction"] = {
                    {"hypergraph", serialize_hypergraph(h)},
                    {"sigma", check.report.sigma.perm()},
                    {"witness_word", check.report.witness.to_word()},
                };
            }
            report.emit(std::cout, elapsed());
            return check.holds ? kExitOk : kExitFailed;
        }

        if (auditc->parsed()) {
            const Input cin_ = load(cpath);
            report.input(cin_);
            const Coloring c = parse_coloring(cin_.bytes, h.edge_count());
            const auto sigma = ordering_or_identity(sigma_text, h.vertex_count());
            const auto result = audit(h, c, k, sigma, step_cap == 0 ? limits.step_cap : step_cap);
            report.result() = to_json(h, result, sigma);
            if (result.witness)
                report.result()["summary"] = describe(h, *result.witness, sigma);
            report.emit(std::cout, elapsed());
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const AuditAnomaly& e) {
        std::cerr << "audit anomaly: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitUsage;
}
