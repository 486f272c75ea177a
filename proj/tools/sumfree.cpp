// Command-line front end: factor catalogs, attainable-degree tables, witness
// construction and verification, and the per-(n,k) status classifier. All
// commands are batch-style and deterministic for a fixed set of flags.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sumfree/json_io.hpp"

using namespace sumfree;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArgs = 2;

struct OutputOpts {
    std::string format = "json";
    std::string path;
};

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
    cmd->add_option("--format", out.format, "Output format: json or table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    cmd->add_option("--output", out.path, "Write output to this file instead of stdout");
}

int emit(const OutputOpts& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream os(out.path, std::ios::binary);
    if (!os) {
        std::cerr << "cannot open output path: " << out.path << "\n";
        return kExitBadArgs;
    }
    os << text;
    return kExitOk;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

unsigned resolve_threads(unsigned flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("SUMFREE_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

json certificate_or_outcome(const FieldCtx& F, unsigned n, unsigned k, const std::string& method,
                            u64 seed, u64 budget, u64 cap, unsigned threads) {
    auto from_cert = [](const Certificate& c) { return certificate_to_json(c); };
    KnReport kn = compute_Kn(n);
    auto factor_route = [&]() -> std::optional<Certificate> {
        for (auto& real : kn.realizations) {
            if (real.k == k) return witness_from_factor(F, real.shaped);
        }
        return std::nullopt;
    };
    auto lift_route = [&]() -> std::optional<Certificate> {
        for (u64 l : divisors_of(n)) {
            if (l < 2 || l >= k) continue;
            unsigned r = k - static_cast<unsigned>(l);
            if (r < 2 || r >= n / l) continue;
            std::optional<Certificate> inner;
            if (r >= 2 && n % r == 0) inner = witness_subfield(F, r);
            if (!inner) {
                for (auto& real : kn.realizations) {
                    if (real.k == r) inner = witness_from_factor(F, real.shaped);
                }
            }
            if (!inner) continue;
            return witness_lift(F, *inner, static_cast<unsigned>(l));
        }
        return std::nullopt;
    };

    if (method == "subfield") return from_cert(witness_subfield(F, k));
    if (method == "factor") {
        if (auto c = factor_route()) return from_cert(*c);
        throw std::invalid_argument("no factor of X^n+1 realizes this dimension");
    }
    if (method == "lift") {
        if (auto c = lift_route()) return from_cert(*c);
        throw std::invalid_argument("no subfield/lift decomposition applies");
    }
    if (method == "random") {
        if (auto c = witness_search_random_parallel(F, k, seed, budget, threads))
            return from_cert(*c);
        return json{{"n", n}, {"k", k}, {"result", "unknown"}, {"budget", budget}};
    }
    if (method == "solve") {
        if (auto c = witness_solve_sweep(F, k, budget)) return from_cert(*c);
        return json{{"n", n}, {"k", k}, {"result", "unknown"}, {"budget", budget}};
    }
    if (method == "exhaustive") {
        auto r = witness_search_exhaustive(F, k, cap);
        if (r.status == ExhaustiveStatus::Found) return from_cert(*r.cert);
        if (r.status == ExhaustiveStatus::SumFree)
            return json{{"n", n}, {"k", k}, {"result", "sum-free"}, {"enumerated", r.enumerated}};
        return json{{"n", n},
                    {"k", k},
                    {"result", "unknown"},
                    {"note", "subspace count exceeds the exhaustive cap"}};
    }

    // auto: deterministic constructions first, then searches
    if (k >= 2 && n % k == 0) return from_cert(witness_subfield(F, k));
    if (auto c = factor_route()) return from_cert(*c);
    if (n % 2 == 0 && k >= 2 && k + 2 <= n) {
        if (auto c = witness_even_direct(F, k)) return from_cert(*c);
    }
    if (auto c = lift_route()) return from_cert(*c);
    if (auto c = witness_search_random_parallel(F, k, seed, budget, threads)) return from_cert(*c);
    auto r = witness_search_exhaustive(F, k, cap);
    if (r.status == ExhaustiveStatus::Found) return from_cert(*r.cert);
    if (r.status == ExhaustiveStatus::SumFree)
        return json{{"n", n}, {"k", k}, {"result", "sum-free"}, {"enumerated", r.enumerated}};
    StatusVerdict sv = classify(n, k, 0);
    if (sv.verdict == Verdict::NotSumFree && sv.dual_certificate) {
        return json{{"n", n},
                    {"k", k},
                    {"result", "not-sum-free-by-duality"},
                    {"reason", sv.reason},
                    {"dual_certificate", certificate_to_json(*sv.dual_certificate)}};
    }
    if (sv.verdict == Verdict::SumFree) {
        return json{{"n", n}, {"k", k}, {"result", "sum-free"}, {"reason", sv.reason}};
    }
    return json{{"n", n}, {"k", k}, {"result", "unknown"}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-inverse-sum subspace toolkit for GF(2^n)"};
    app.require_subcommand(1);

    unsigned n = 0, k = 0, d_max = 31, n_max = 16;
    u64 seed = 0, budget = 20000, cap = u64(1) << 28;
    unsigned threads = 0;
    std::string method = "auto";
    std::string verify_path;
    OutputOpts out;

    auto* c_factor = app.add_subcommand("factor", "Factor X^n+1 over GF(2)");
    c_factor->add_option("--n", n, "extension degree")->required();
    add_output_opts(c_factor, out);

    auto* c_table1 = app.add_subcommand("table1", "Cyclotomic index statistics (o_d(2), counts, zero-trace counts)");
    c_table1->add_option("--d-max", d_max, "largest odd index")->capture_default_str();
    add_output_opts(c_table1, out);

    auto* c_table2 = app.add_subcommand("table2", "Attainable factor degrees K_n for 1 <= n <= n-max");
    c_table2->add_option("--n-max", n_max, "largest n")->capture_default_str();
    add_output_opts(c_table2, out);

    auto* c_kset = app.add_subcommand("kset", "K_n with realizing factors");
    c_kset->add_option("--n", n)->required();
    add_output_opts(c_kset, out);

    auto* c_c2 = app.add_subcommand("c2", "Cyclotomic-selection enumeration");
    c_c2->add_option("--n", n)->required();
    add_output_opts(c_c2, out);

    auto* c_cc3 = app.add_subcommand("cc3", "Substituted-divisor enumeration");
    c_cc3->add_option("--n", n)->required();
    add_output_opts(c_cc3, out);

    auto* c_witness = app.add_subcommand("witness", "Construct a zero-inverse-sum subspace certificate");
    c_witness->add_option("--n", n)->required();
    c_witness->add_option("--k", k)->required();
    c_witness->add_option("--method", method, "auto|subfield|factor|lift|random|solve|exhaustive")
        ->check(CLI::IsMember({"auto", "subfield", "factor", "lift", "random", "solve", "exhaustive"}))
        ->capture_default_str();
    c_witness->add_option("--seed", seed)->capture_default_str();
    c_witness->add_option("--budget", budget)->capture_default_str();
    c_witness->add_option("--exhaustive-cap", cap)->capture_default_str();
    c_witness->add_option("--threads", threads, "search threads (or SUMFREE_THREADS)");
    add_output_opts(c_witness, out);

    auto* c_verify = app.add_subcommand("verify", "Re-verify a certificate file");
    c_verify->add_option("path", verify_path, "certificate JSON file")->required();

    auto* c_status = app.add_subcommand("status", "Classify one (n, k) pair");
    c_status->add_option("--n", n)->required();
    c_status->add_option("--k", k)->required();
    c_status->add_option("--budget", budget)->capture_default_str();
    c_status->add_option("--seed", seed)->capture_default_str();
    add_output_opts(c_status, out);

    auto* c_conj = app.add_subcommand("conjecture", "Sweep all (n, k) with n <= n-max");
    c_conj->add_option("--n-max", n_max)->capture_default_str();
    c_conj->add_option("--budget", budget)->capture_default_str();
    c_conj->add_option("--seed", seed)->capture_default_str();
    add_output_opts(c_conj, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadArgs;
    }

    try {
        if (c_factor->parsed()) {
            return emit(out, dump(factorization_to_json(factorize_xn_minus_1(n))));
        }
        if (c_table1->parsed()) {
            auto rows = table1(d_max);
            if (out.format == "table") return emit(out, table1_to_text(rows));
            return emit(out, dump(table1_to_json(rows)));
        }
        if (c_table2->parsed()) {
            std::vector<KnReport> reports;
            for (unsigned i = 1; i <= n_max; ++i) reports.push_back(compute_Kn(i));
            if (out.format == "table") return emit(out, table2_to_text(reports));
            json arr = json::array();
            for (auto& r : reports) {
                arr.push_back({{"n", r.n},
                               {"kset", std::vector<unsigned>(r.kset.begin(), r.kset.end())}});
            }
            return emit(out, dump(arr));
        }
        if (c_kset->parsed()) {
            return emit(out, dump(kn_report_to_json(compute_Kn(n))));
        }
        if (c_c2->parsed()) {
            auto triples = cor_c2_enumerate(n);
            if (out.format == "table") return emit(out, c2_to_text(n, triples));
            return emit(out, dump(c2_to_json(n, triples)));
        }
        if (c_cc3->parsed()) {
            return emit(out, dump(cc3_to_json(n, cor_cc3_enumerate(n))));
        }
        if (c_witness->parsed()) {
            FieldCtx F(n);
            json j = certificate_or_outcome(F, n, k, method, seed, budget, cap,
                                            resolve_threads(threads));
            return emit(out, dump(j));
        }
        if (c_verify->parsed()) {
            std::ifstream is(verify_path);
            if (!is) {
                std::cerr << "cannot open certificate file: " << verify_path << "\n";
                return kExitBadArgs;
            }
            json j = json::parse(is);
            Certificate cert = certificate_from_json(j);
            bool ok = verify_certificate(cert);
            std::cout << (ok ? "verified\n" : "verification FAILED\n");
            return ok ? kExitOk : kExitVerifyFailed;
        }
        if (c_status->parsed()) {
            return emit(out, dump(status_to_json(classify(n, k, budget, seed))));
        }
        if (c_conj->parsed()) {
            json sweep = json::array();
            bool consistent = true;
            for (unsigned nn = 2; nn <= n_max; ++nn) {
                for (unsigned kk = 2; kk + 2 <= nn; ++kk) {
                    StatusVerdict sv = classify(nn, kk, budget, seed);
                    bool conjectured_not_sum_free =
                        (nn % 2 == 0) ? (kk >= 2 && kk <= nn - 2) : (kk >= 3 && kk <= nn - 3);
                    json row{{"n", nn},
                             {"k", kk},
                             {"verdict", verdict_name(sv.verdict)},
                             {"reason", sv.reason},
                             {"conjectured_not_sum_free", conjectured_not_sum_free}};
                    if (conjectured_not_sum_free && sv.verdict == Verdict::SumFree) consistent = false;
                    if (!conjectured_not_sum_free && sv.verdict == Verdict::NotSumFree) consistent = false;
                    sweep.push_back(std::move(row));
                }
            }
            json j{{"n_max", n_max}, {"consistent_with_conjecture", consistent}, {"pairs", std::move(sweep)}};
            return emit(out, dump(j));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitBadArgs;
}
