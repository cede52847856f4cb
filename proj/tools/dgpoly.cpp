// dgpoly: command-line front end.

#include "dgpoly/cache.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace dgpoly;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCompute = 3;

struct Options {
    std::string t;
    std::size_t n = 0;
    BoundsConfig cfg;
    bool json = false;
    std::string cache_dir;
    std::string claims = "all";
    std::string method = "em";
    std::size_t count = 100;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

AlgebraSpec read_spec(const Options& o) {
    if (o.t.empty()) throw UsageError("--t is required");
    AlgebraSpec spec = AlgebraSpec::parse(o.t);
    if (o.n != 0 && o.n != spec.n()) {
        throw UsageError("--n " + std::to_string(o.n) + " does not match " + std::to_string(spec.n()) +
                         " entries in --t");
    }
    return spec;
}

std::vector<std::string> read_claims(const std::string& text) {
    if (text == "all") return {};
    std::vector<std::string> ids;
    std::stringstream in(text);
    std::string id;
    while (std::getline(in, id, ',')) {
        if (std::find(claim_ids().begin(), claim_ids().end(), id) == claim_ids().end()) {
            throw UsageError("unknown claim id: " + id);
        }
        ids.push_back(id);
    }
    if (ids.empty()) throw UsageError("--claims is empty");
    return ids;
}

std::string value_text(const Json& v) {
    if (v.is_null()) return "inf";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string interval_text(const Json& v) {
    if (!v["exact"].is_null()) return v["exact"].dump();
    return "[" + v["lower"].dump() + ", " + (v["upper"].is_null() ? "inf)" : v["upper"].dump() + "]");
}

std::string join(const Json& list, const char* sep = " ") {
    std::string out;
    for (std::size_t k = 0; k < list.size(); ++k) out += (k ? sep : "") + value_text(list[k]);
    return out;
}

void print_claims(std::ostream& out, const Json& claims) {
    out << std::left << std::setw(26) << "claim" << std::setw(16) << "verdict" << std::setw(28) << "predicted"
        << " computed\n";
    for (const auto& c : claims) {
        out << std::setw(26) << value_text(c["id"]) << std::setw(16) << value_text(c["verdict"]) << std::setw(28)
            << value_text(c["predicted_value"]) << " " << value_text(c["computed_value"]) << "\n";
        if (!c["witness"].get<std::string>().empty()) out << "    witness: " << value_text(c["witness"]) << "\n";
    }
}

// Human-readable views derived from the JSON documents.
void print_text(std::ostream& out, const std::string& command, const Json& doc) {
    if (command == "classify") {
        out << "class: " << value_text(doc["class"]) << "\n";
        out << "verified: " << (doc["verified"].get<bool>() ? "yes" : "no") << "\n";
        if (!doc["change_of_variables"].is_null()) {
            out << "change of variables: " << join(doc["change_of_variables"], ", ") << "\n";
        }
        for (const auto& line : doc["verification_log"]) out << "  " << value_text(line) << "\n";
    } else if (command == "cohomology") {
        const Json& c = doc["cohomology"];
        out << std::left << std::setw(8) << "degree" << std::setw(10) << "dim A" << std::setw(10) << "rank d"
            << "dim H\n";
        for (std::size_t d = 0; d < c["dims"].size(); ++d) {
            out << std::setw(8) << d << std::setw(10) << c["cochain_dims"][d].dump() << std::setw(10)
                << c["ranks"][d].dump() << c["dims"][d].dump() << "\n";
        }
        const Json& p = doc["presentation"];
        out << "generators:\n";
        for (const auto& g : p["generators"]) {
            out << "  " << value_text(g["symbol"]) << " (degree " << g["degree"].dump()
                << ") = " << value_text(g["representative"]) << "\n";
        }
        out << "relations:" << (p["relations"].empty() ? " none" : "") << "\n";
        for (const auto& r : p["relations"]) out << "  " << value_text(r) << "\n";
    } else if (command == "resolve") {
        const Json& r = doc["resolution"];
        out << "method: " << value_text(r["method"]) << ", truncation degree " << r["truncation_degree"].dump()
            << ", DG free class " << r["dg_free_class"].dump() << "\n";
        for (const auto& e : r["basis"]) {
            out << "  " << value_text(e["symbol"]) << " degree " << e["degree"].dump() << " level "
                << e["level"].dump() << ": d = ";
            if (e["differential"].empty()) out << "0";
            for (std::size_t k = 0; k < e["differential"].size(); ++k) {
                const auto& term = e["differential"][k];
                out << (k ? " + " : "") << "(" << value_text(term["coefficient"]) << ") "
                    << value_text(term["target"]);
            }
            out << "\n";
        }
        const Json& v = r["validation"];
        out << "square zero: " << v["square_zero"].dump() << ", semifree: " << v["semifree"].dump()
            << ", minimal: " << v["minimal"].dump() << ", quasi-isomorphism: " << v["quasi_isomorphism"].dump()
            << "\n";
    } else if (command == "invariants") {
        out << "cohomology dims: " << join(doc["cohomology_dims"]) << "\n";
        out << "Krull dimension of H(A): " << doc["krull_dimension"].dump() << "\n";
        out << "depth: [" << doc["depth"]["lower"].dump() << ", " << doc["depth"]["upper"].dump() << "]\n";
        if (!doc["betti"].is_null()) {
            out << "Betti numbers: " << join(doc["betti"]["betti"])
                << (doc["betti"]["terminated"].get<bool>() ? " (terminated)" : " (truncated)") << "\n";
        }
        out << "gl.dim H(A): " << interval_text(doc["gldim"]) << "  (predicted " << doc["predicted"]["gldim"].dump()
            << ")\n";
        out << "DGdim: chain of length " << doc["dgdim"]["length"].dump()
            << (doc["dgdim"]["valid"].get<bool>() ? " (valid)" : " (invalid)") << "\n";
        out << "cl(k): " << interval_text(doc["cl_k"]) << "\n";
        out << "level(k): " << interval_text(doc["level_k"]) << "\n";
        out << "gh.len(k): " << interval_text(doc["ghlen_k"]) << "\n";
        out << "Rouq.dim: " << interval_text(doc["rouqdim"]) << "  (predicted " << doc["predicted"]["rouqdim"].dump()
            << ")\n";
        print_claims(out, doc["verdicts"]);
    } else if (command == "verify") {
        print_claims(out, doc["claims"]);
    } else if (command == "sweep") {
        out << "specs: " << doc["count"].dump() << ", structural violations: "
            << doc["structural_violations"].dump() << "\n";
        out << std::left << std::setw(26) << "claim" << std::setw(8) << "PASS" << std::setw(8) << "FAIL"
            << std::setw(14) << "INCONCLUSIVE" << "NOT_APPLICABLE\n";
        for (const auto& [id, c] : doc["counts"].items()) {
            out << std::setw(26) << id << std::setw(8) << c["PASS"].dump() << std::setw(8) << c["FAIL"].dump()
                << std::setw(14) << c["INCONCLUSIVE"].dump() << c["NOT_APPLICABLE"].dump() << "\n";
        }
    }
}

Json compute(const std::string& command, const Options& o) {
    if (command == "sweep") {
        auto specs = sweep_specs(o.count, o.cfg.seed, o.n ? std::optional<std::size_t>(o.n) : std::nullopt);
        return sweep_document(sweep(specs, o.cfg), o.cfg, o.count);
    }
    const AlgebraSpec spec = read_spec(o);
    if (command == "classify") return classify_document(spec, o.cfg);
    if (command == "cohomology") return cohomology_document(spec, o.cfg);
    if (command == "resolve") return resolve_document(spec, o.cfg, o.method);
    const InvariantReport report = assemble_report(spec, o.cfg);
    if (command == "invariants") return invariants_document(report);
    return verify_document(report, verify_claims(report, read_claims(o.claims)));
}

Json request_of(const std::string& command, const Options& o) {
    Json req{{"command", command}, {"config", to_json(o.cfg)}};
    if (command == "sweep") {
        req["count"] = o.count;
        req["n"] = o.n;
    } else {
        req["spec"] = to_json(read_spec(o));
    }
    if (command == "resolve") req["method"] = o.method;
    if (command == "verify") req["claims"] = o.claims;
    return req;
}

int run(const std::string& command, const Options& o) {
    o.cfg.check();
    if (command == "sweep" && o.n > 4) throw UsageError("sweep supports --n up to 4");
    if (command == "verify") read_claims(o.claims);
    if (command == "resolve" && o.method != "em" && o.method != "killing") {
        throw UsageError("--method must be em or killing");
    }

    Json doc;
    if (!o.cache_dir.empty()) {
        const ResultCache cache(o.cache_dir);
        const Json req = request_of(command, o);
        const std::string key = ResultCache::key(req);
        if (auto hit = cache.load(key, std::cerr)) {
            doc = std::move(*hit);
        } else {
            doc = compute(command, o);
            cache.store(key, req, doc, std::cerr);
        }
    } else {
        doc = compute(command, o);
    }

    if (o.json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        print_text(std::cout, command, doc);
    }
    if (command == "verify" && doc["any_fail"].get<bool>()) return kExitFail;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of DG polynomial algebras A(t) over the rationals"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool needs_spec) {
        if (needs_spec) {
            sub->add_option("--t", o.t, "Comma-separated rational parameters, e.g. \"1,0,-3/2\"")->required();
        }
        sub->add_option("--n", o.n, "Number of variables (checked against --t; fixes n for sweep)")->check(CLI::Range(1, 64));
        sub->add_option("--max-degree", o.cfg.max_degree, "Cohomology and presentation degree bound");
        sub->add_option("--steps", o.cfg.steps, "Resolution steps (0: generators + 2)");
        sub->add_option("--internal-degree-bound", o.cfg.internal_degree_bound, "Betti computation degree bound");
        sub->add_option("--truncation-degree", o.cfg.truncation_degree, "Semifree resolution truncation");
        sub->add_option("--square-zero-degree", o.cfg.square_zero_degree, "Degree bound for d^2 = 0 checks");
        sub->add_option("--seed", o.cfg.seed, "RNG seed");
        sub->add_flag("--json", o.json, "Emit JSON instead of a table");
        sub->add_option("--cache-dir", o.cache_dir, "Result cache directory");
    };
    auto* classify_cmd = app.add_subcommand("classify", "Classify A(t) up to DG isomorphism");
    auto* cohomology_cmd = app.add_subcommand("cohomology", "Cohomology dimensions and presentation of H(A)");
    auto* resolve_cmd = app.add_subcommand("resolve", "Semifree resolution of k");
    auto* invariants_cmd = app.add_subcommand("invariants", "Full invariant report");
    auto* verify_cmd = app.add_subcommand("verify", "Claim table; exit status 1 if any claim fails");
    auto* sweep_cmd = app.add_subcommand("sweep", "Verdict counts over random specs");
    for (auto* sub : {classify_cmd, cohomology_cmd, resolve_cmd, invariants_cmd, verify_cmd}) common(sub, true);
    common(sweep_cmd, false);
    resolve_cmd->add_option("--method", o.method, "em or killing");
    verify_cmd->add_option("--claims", o.claims, "Comma-separated claim ids, or all");
    sweep_cmd->add_option("--count", o.count, "Number of random specs")->check(CLI::Range(1, 1000000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
}
