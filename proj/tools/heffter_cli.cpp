// heffter_cli: construct, verify, embed and census front end.
//
// Exit status: 0 success, 1 verification failure, 2 invalid parameters or
// input, 3 budget or guardrail.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "heffter/heffter.hpp"
#include "json.hpp"

using namespace heffter;
using nlohmann::json;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;
constexpr int kBudget = 3;

ArrayDocument load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_array(in);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write " + path);
    return out;
}

json certificate_json(const SurfaceCertificate& c) {
    json j{{"edge_cover_ok", c.edge_cover_ok},
           {"vertex_links_single_cycle", c.vertex_links_single_cycle},
           {"orientable", c.orientable},
           {"V", c.V},
           {"E", c.E},
           {"F", c.F},
           {"euler_characteristic", c.euler_characteristic()},
           {"genus", c.genus}};
    if (!c.problem.empty()) j["problem"] = c.problem;
    return j;
}

struct ConstructArgs {
    int n = 0, p = 0;
    std::optional<int> alpha, shift;
    std::vector<int> fi, fj;
    std::string out;
};

int run_construct(const ConstructArgs& a, bool fi_set, bool fj_set) {
    FullOptions opt;
    opt.alpha = a.alpha;
    opt.shift = a.shift;
    if (fi_set) opt.f_I = a.fi;
    if (fj_set) opt.f_J = a.fj;
    auto fc = construct_full(a.n, a.p, opt);
    ArrayDocument doc{a.n, fc.params.k(), fc.params.full_modulus(), fc.array, fc.provenance()};
    if (a.out.empty()) {
        write_array(std::cout, doc);
    } else {
        auto out = open_out(a.out);
        write_array(out, doc);
    }
    return 0;
}

int run_verify(const std::string& path, std::optional<Entry> modulus) {
    auto doc = load(path);
    const Entry M = modulus.value_or(doc.modulus);
    auto rep = verify_full(doc.array, doc.k, M, natural_orderings(doc.array));
    std::cout << rep.to_string();
    if (const auto* f = rep.first_failure()) {
        std::cerr << "verification failed: " << f->name << (f->detail.empty() ? "" : ": " + f->detail) << "\n";
        return kVerifyFailed;
    }
    return 0;
}

int run_embed(const std::string& path, const std::string& out_path, bool force) {
    auto doc = load(path);
    auto scheme = natural_orderings(doc.array);
    auto rep = verify_full(doc.array, doc.k, doc.modulus, scheme);
    if (const auto* f = rep.first_failure()) {
        std::cerr << "array failed " << f->name << (f->detail.empty() ? "" : ": " + f->detail) << "\n";
        return kVerifyFailed;
    }
    auto emb = develop(base_faces(doc.array, scheme, doc.modulus), doc.modulus, force);
    emb.provenance = doc.provenance;
    {
        auto out = open_out(out_path);
        write_faces(out, emb);
    }
    auto cert = verify_surface(emb);
    std::cout << certificate_json(cert).dump(2) << "\n";
    return cert.ok() ? 0 : kVerifyFailed;
}

int run_census_cmd(int n, int p, std::optional<std::size_t> max_pairs, const std::string& out_path) {
    CensusOptions opt;
    opt.max_pairs = max_pairs;
    auto rep = run_census(n, p, opt);
    if (out_path.empty()) {
        write_census_csv(std::cout, rep);
    } else {
        auto out = open_out(out_path);
        write_census_csv(out, rep);
    }
    json summary{{"n", rep.n},
                 {"p", rep.p},
                 {"alpha", rep.alpha},
                 {"generated", rep.generated},
                 {"distinct", rep.distinct},
                 {"valid_shifts", rep.valid_shifts},
                 {"bound_paper", rep.bound_paper},
                 {"embedding_bound", rep.embedding_bound.to_string()},
                 {"collisions", rep.collisions.size()}};
    std::cerr << summary.dump() << "\n";
    for (const auto& r : rep.rows)
        if (!r.verified) return kVerifyFailed;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heffter arrays H(n; 4p+3): construction, verification, embedding, census"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a globally simple integer H(n;4p+3)");
    construct->add_option("--n", ca.n, "side, n = 1 (mod 4) and n > 4p+3")->required();
    construct->add_option("--p", ca.p, "p >= 1")->required();
    construct->add_option("--alpha", ca.alpha, "override the least admissible alpha");
    construct->add_option("--shift", ca.shift, "shift of the three-diagonal array");
    auto* fi_opt = construct->add_option("--fi", ca.fi, "f_I images, e.g. 0,2,1")->delimiter(',');
    auto* fj_opt = construct->add_option("--fj", ca.fj, "f_J images, e.g. 1,0")->delimiter(',');
    construct->add_option("--out", ca.out, "write the document here instead of stdout");

    std::string verify_path;
    std::optional<Entry> verify_mod;
    auto* verify = app.add_subcommand("verify", "check an array document");
    verify->add_option("array-file", verify_path)->required();
    verify->add_option("--modulus", verify_mod, "override the document's modulus");

    std::string embed_path, embed_out;
    bool force_large = false;
    auto* embed = app.add_subcommand("embed", "develop the biembedding and certify the surface");
    embed->add_option("array-file", embed_path)->required();
    embed->add_option("--out", embed_out, "faces file")->required();
    embed->add_flag("--force-large", force_large, "allow moduli above the desk-scale limit");

    int cn = 0, cp = 0;
    std::optional<std::size_t> max_pairs;
    std::string census_out;
    auto* census = app.add_subcommand("census", "enumerate maps and shifts, count equivalence classes");
    census->add_option("--n", cn)->required();
    census->add_option("--p", cp)->required();
    census->add_option("--max-pairs", max_pairs, "use only the first N (f_I, f_J) pairs");
    census->add_option("--out", census_out, "write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*construct) return run_construct(ca, fi_opt->count() > 0, fj_opt->count() > 0);
        if (*verify) return run_verify(verify_path, verify_mod);
        if (*embed) return run_embed(embed_path, embed_out, force_large);
        if (*census) return run_census_cmd(cn, cp, max_pairs, census_out);
    } catch (const VerificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const ExclusionViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const GuardrailError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const SearchExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return 0;
}
