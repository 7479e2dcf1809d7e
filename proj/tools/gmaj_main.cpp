// gmaj: decide simultaneous generalized majorization of integer partitions.
//
// Subcommands:
//   check   decide existence for an instance file, print a certificate
//   verify  re-check a supplied candidate witness against both pairs
//   oracle  brute-force search for a witness within value bounds
//   fuzz    differential-test the engine against the oracle on random input
//
// Exit codes: 0 exists / holds / all agree, 1 negative verdict,
// 2 malformed input or flags, 3 internal invariant violation (a bug).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gmaj/errors.hpp"
#include "gmaj/json_io.hpp"
#include "gmaj/random_instances.hpp"

namespace {

using namespace gmaj;

instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw precondition_violated("cannot open input file \"" + path + "\"");
    ojson j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw precondition_violated("input is not valid JSON: " + std::string(e.what()));
    }
    return instance_from_json(j);
}

// Compact single-line JSON: deterministic, grep-friendly, pipe to jq for
// pretty-printing.
void print_json(const ojson& j) { std::cout << j.dump() << "\n"; }

int run_check(const std::string& path, const std::string& mode_str,
              bool emit_witness, bool emit_trace) {
    const instance inst = load_instance(path);
    const run_mode mode = mode_str == "weak" ? run_mode::weak : run_mode::exact;
    const certificate cert =
        mode == run_mode::weak ? decide_weak(inst) : decide_exact(inst);
    print_json(document_to_json(make_document(cert, emit_witness, emit_trace)));
    return cert.exists ? 0 : 1;
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw precondition_violated("cannot parse integer \"" + item +
                                        "\" in --g list");
        }
    }
    return out;
}

int run_verify(const std::string& path, const std::string& mode_str,
               const std::string& g_text) {
    const instance inst = load_instance(path);
    partition g(parse_int_list(g_text), "g");
    if (g.size() != inst.witness_len())
        throw precondition_violated("g has length " + std::to_string(g.size()) +
                                    " but the instance needs " +
                                    std::to_string(inst.witness_len()));
    const bool weak = mode_str == "weak";
    verdict va = weak ? check_weak(g, inst.d, inst.a) : check_exact(g, inst.d, inst.a);
    verdict vb = weak ? check_weak(g, inst.c, inst.b) : check_exact(g, inst.c, inst.b);
    ojson j;
    j["mode"] = mode_str;
    j["g"] = ojson::array();
    for (long long v : g.values()) j["g"].push_back(int_to_json(v));
    j["against_d_a"] = verdict_to_json(va);
    j["against_c_b"] = verdict_to_json(vb);
    j["holds"] = va.holds && vb.holds;
    print_json(j);
    return (va.holds && vb.holds) ? 0 : 1;
}

int run_oracle(const std::string& path, const std::string& mode_str,
               std::optional<long long> lo, std::optional<long long> hi) {
    const instance inst = load_instance(path);
    search_bounds bounds = default_bounds(inst);
    if (lo) bounds.lo = *lo;
    if (hi) bounds.hi = *hi;
    if (bounds.lo > bounds.hi)
        throw precondition_violated("oracle bounds: --lo must not exceed --hi");
    const bool weak = mode_str == "weak";
    oracle_outcome out =
        weak ? enumerate_weak(inst, bounds) : enumerate_exact(inst, bounds);
    print_json(outcome_to_json(out, weak ? run_mode::weak : run_mode::exact, bounds));
    return out.found ? 0 : 1;
}

int run_fuzz(unsigned long long instances, long long max_len, long long max_val,
             unsigned long long seed) {
    if (max_len < 1) throw precondition_violated("--max-len must be at least 1");
    if (max_val < 1) throw precondition_violated("--max-val must be at least 1");
    instance_gen_params params;
    params.max_len = max_len;
    params.min_value = -max_val;
    params.max_value = max_val;
    std::mt19937_64 rng(seed);

    unsigned long long disagreements = 0, inconclusive = 0, q_nonpositive = 0;
    for (unsigned long long i = 0; i < instances; ++i) {
        const instance inst = random_instance(rng, params);
        const agreement_report rep = differential_check(inst, default_bounds(inst));
        for (const auto& entry : rep.weak_engine.sd.trace)
            if (entry.q <= ext_int(0)) ++q_nonpositive;
        if (!rep.weak_conclusive || !rep.exact_conclusive) ++inconclusive;
        if (!rep.all_agree()) {
            ++disagreements;
            const std::string dump_path =
                "fuzz_disagreement_" + std::to_string(i) + ".json";
            ojson dump;
            dump["instance"] = instance_to_json(inst);
            dump["weak"] = {{"engine_exists", rep.weak_engine.exists},
                            {"oracle", outcome_to_json(rep.weak_oracle, run_mode::weak,
                                                       default_bounds(inst))}};
            dump["exact"] = {{"engine_exists", rep.exact_engine.exists},
                             {"oracle", outcome_to_json(rep.exact_oracle, run_mode::exact,
                                                        default_bounds(inst))}};
            std::ofstream out(dump_path);
            out << dump.dump(2) << "\n";
            std::cerr << "disagreement on instance " << i << ", dump written to "
                      << dump_path << "\n";
        }
    }
    ojson summary;
    summary["instances"] = instances;
    summary["disagreements"] = disagreements;
    summary["inconclusive"] = inconclusive;
    summary["q_nonpositive_decisions"] = q_nonpositive;
    print_json(summary);
    return disagreements == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision engine for simultaneous generalized majorization "
                 "of integer partitions"};
    app.require_subcommand(1);

    std::string input, mode, g_text;
    bool emit_witness = false, emit_trace = false;

    auto* check = app.add_subcommand("check", "Decide existence and print a certificate");
    check->add_option("--mode", mode, "weak or exact")
        ->required()
        ->check(CLI::IsMember({"weak", "exact"}));
    check->add_option("--input", input, "instance JSON file")->required();
    check->add_flag("--emit-witness", emit_witness,
                    "include witness and its verification in the certificate");
    check->add_flag("--trace", emit_trace, "include the selection trace");

    auto* verify = app.add_subcommand("verify", "Re-check a supplied witness");
    verify->add_option("--mode", mode, "weak or exact")
        ->required()
        ->check(CLI::IsMember({"weak", "exact"}));
    verify->add_option("--input", input, "instance JSON file")->required();
    verify->add_option("--g", g_text, "comma-separated candidate, e.g. 3,2")->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force witness search");
    oracle->add_option("--mode", mode, "weak or exact")
        ->required()
        ->check(CLI::IsMember({"weak", "exact"}));
    oracle->add_option("--input", input, "instance JSON file")->required();
    std::optional<long long> lo, hi;
    oracle->add_option("--lo", lo, "lower value bound (default: min input - 1)");
    oracle->add_option("--hi", hi, "upper value bound (default: max input + 1)");

    auto* fuzz = app.add_subcommand("fuzz", "Differential-test engine vs oracle");
    unsigned long long fuzz_instances = 1000, fuzz_seed = 1;
    long long fuzz_max_len = 4, fuzz_max_val = 4;
    fuzz->add_option("--instances", fuzz_instances, "number of random instances");
    fuzz->add_option("--max-len", fuzz_max_len, "maximum partition length");
    fuzz->add_option("--max-val", fuzz_max_val, "values drawn from [-V, V]");
    fuzz->add_option("--seed", fuzz_seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) return run_check(input, mode, emit_witness, emit_trace);
        if (verify->parsed()) return run_verify(input, mode, g_text);
        if (oracle->parsed()) return run_oracle(input, mode, lo, hi);
        return run_fuzz(fuzz_instances, fuzz_max_len, fuzz_max_val, fuzz_seed);
    } catch (const internal_invariant_violated& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const negative_omega& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const infeasible_homogenization& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const mixed_infinities& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const arithmetic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
