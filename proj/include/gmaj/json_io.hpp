#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmaj/engine.hpp"
#include "gmaj/instance.hpp"
#include "gmaj/oracle.hpp"

namespace gmaj {

// Field order in emitted documents is fixed, so identical inputs produce
// byte-identical output.
using ojson = nlohmann::ordered_json;

/// Integers serialize as JSON numbers up to 2^53 in magnitude and as decimal
/// strings beyond, so consumers without 64-bit integers stay exact.
ojson int_to_json(long long v);
long long int_from_json(const ojson& j);

/// Sentinels serialize as the strings "+inf" / "-inf", never as numbers.
ojson ext_to_json(ext_int v);
ext_int ext_from_json(const ojson& j);

/// Input document: {"a": [...], "b": [...], "c": [...], "d": [...]}.
instance instance_from_json(const ojson& j);
ojson instance_to_json(const instance& inst);

ojson verdict_to_json(const verdict& v);
verdict verdict_from_json(const ojson& j);

/// Flat, JSON-shaped view of a certificate. `witness`/`verification` are
/// emitted as null unless filled; `trace` is omitted entirely when absent.
struct certificate_document {
    std::string mode;    // "weak" | "exact"
    std::string verdict; // "exists" | "not-exists"
    std::vector<long long> S, Delta;
    long long h = 0, h_prime = 0, t0 = 0;
    std::vector<long long> c_selected, d_selected;
    std::vector<long long> m, t, z, w, mp, tp, zp, wp;
    std::vector<condition_report> reports;
    std::optional<sum_check_result> sums;
    std::optional<partition> witness;
    std::optional<std::pair<gmaj::verdict, gmaj::verdict>> verification;
    std::optional<std::vector<decision_trace_entry>> trace;
};

certificate_document make_document(const certificate& cert, bool include_witness,
                                   bool include_trace);
ojson document_to_json(const certificate_document& doc);
certificate_document document_from_json(const ojson& j);

ojson outcome_to_json(const oracle_outcome& out, run_mode mode,
                      const search_bounds& bounds);

} // namespace gmaj
