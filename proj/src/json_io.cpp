#include "gmaj/json_io.hpp"

#include <cstdint>
#include <cstdlib>

#include "gmaj/errors.hpp"

namespace gmaj {

namespace {

constexpr long long json_exact_limit = 1LL << 53;

[[noreturn]] void bad_input(const std::string& what) {
    throw precondition_violated(what);
}

long long parse_decimal(const std::string& s) {
    if (s.empty()) bad_input("empty string where an integer was expected");
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size())
        bad_input("not a decimal integer in supported range: \"" + s + "\"");
    return v;
}

std::vector<long long> int_vector_from_json(const ojson& j, const std::string& name) {
    if (!j.is_array()) bad_input(name + " must be an array of integers");
    std::vector<long long> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(int_from_json(e));
    return out;
}

ojson int_vector_to_json(const std::vector<long long>& v) {
    ojson arr = ojson::array();
    for (long long x : v) arr.push_back(int_to_json(x));
    return arr;
}

const char* side_name(condition_side s) { return s == condition_side::i ? "i" : "ii"; }

condition_side side_from_name(const std::string& s) {
    if (s == "i") return condition_side::i;
    if (s == "ii") return condition_side::ii;
    bad_input("unknown condition side \"" + s + "\"");
}

const char* branch_name(decision_branch b) {
    switch (b) {
    case decision_branch::q_exceeds: return "q-exceeds";
    case decision_branch::part_a_accepted: return "part-a-accepted";
    case decision_branch::part_b_passed: return "part-b-passed";
    case decision_branch::part_b_failed: return "part-b-failed";
    }
    return "?";
}

decision_branch branch_from_name(const std::string& s) {
    if (s == "q-exceeds") return decision_branch::q_exceeds;
    if (s == "part-a-accepted") return decision_branch::part_a_accepted;
    if (s == "part-b-passed") return decision_branch::part_b_passed;
    if (s == "part-b-failed") return decision_branch::part_b_failed;
    bad_input("unknown decision branch \"" + s + "\"");
}

} // namespace

ojson int_to_json(long long v) {
    if (v > -json_exact_limit && v < json_exact_limit) return v;
    return std::to_string(v);
}

long long int_from_json(const ojson& j) {
    if (j.is_number_unsigned()) {
        const auto u = j.get<unsigned long long>();
        if (u > static_cast<unsigned long long>(INT64_MAX))
            bad_input("integer out of supported 64-bit range");
        return static_cast<long long>(u);
    }
    if (j.is_number_integer()) return j.get<long long>();
    if (j.is_string()) return parse_decimal(j.get<std::string>());
    bad_input("expected an integer (number or decimal string)");
}

ojson ext_to_json(ext_int v) {
    if (v.is_plus_infinity()) return "+inf";
    if (v.is_minus_infinity()) return "-inf";
    return int_to_json(v.value());
}

ext_int ext_from_json(const ojson& j) {
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s == "+inf") return ext_int::plus_infinity();
        if (s == "-inf") return ext_int::minus_infinity();
        return parse_decimal(s);
    }
    return int_from_json(j);
}

instance instance_from_json(const ojson& j) {
    if (!j.is_object()) bad_input("instance document must be a JSON object");
    for (const char* key : {"a", "b", "c", "d"})
        if (!j.contains(key)) bad_input(std::string("missing array \"") + key + "\"");
    return instance(partition(int_vector_from_json(j.at("a"), "a"), "a"),
                    partition(int_vector_from_json(j.at("b"), "b"), "b"),
                    partition(int_vector_from_json(j.at("c"), "c"), "c"),
                    partition(int_vector_from_json(j.at("d"), "d"), "d"));
}

ojson instance_to_json(const instance& inst) {
    ojson j;
    j["a"] = int_vector_to_json(inst.a.values());
    j["b"] = int_vector_to_json(inst.b.values());
    j["c"] = int_vector_to_json(inst.c.values());
    j["d"] = int_vector_to_json(inst.d.values());
    return j;
}

ojson verdict_to_json(const verdict& v) {
    ojson j;
    j["holds"] = v.holds;
    if (v.first_violation) {
        ojson f;
        f["condition"] = v.first_violation->condition;
        f["index"] = int_to_json(v.first_violation->index);
        f["lhs"] = ext_to_json(v.first_violation->lhs);
        f["rhs"] = ext_to_json(v.first_violation->rhs);
        j["first_violation"] = f;
    } else {
        j["first_violation"] = nullptr;
    }
    return j;
}

verdict verdict_from_json(const ojson& j) {
    verdict v;
    v.holds = j.at("holds").get<bool>();
    const auto& f = j.at("first_violation");
    if (!f.is_null()) {
        violation viol;
        viol.condition = f.at("condition").get<std::string>();
        viol.index = int_from_json(f.at("index"));
        viol.lhs = ext_from_json(f.at("lhs"));
        viol.rhs = ext_from_json(f.at("rhs"));
        v.first_violation = viol;
    }
    return v;
}

certificate_document make_document(const certificate& cert, bool include_witness,
                                   bool include_trace) {
    certificate_document doc;
    doc.mode = cert.mode == run_mode::weak ? "weak" : "exact";
    doc.verdict = cert.exists ? "exists" : "not-exists";
    doc.S = cert.sd.S;
    doc.Delta = cert.sd.Delta;
    doc.h = cert.tables.h;
    doc.h_prime = cert.tables.h_prime;
    doc.t0 = cert.tables.t0;
    doc.c_selected = cert.sd.c_sel;
    doc.d_selected = cert.sd.d_sel;
    doc.m = cert.tables.m;
    doc.t = cert.tables.t;
    doc.z = cert.tables.z;
    doc.w = cert.tables.w;
    doc.mp = cert.tables.mp;
    doc.tp = cert.tables.tp;
    doc.zp = cert.tables.zp;
    doc.wp = cert.tables.wp;
    doc.reports = cert.reports;
    doc.sums = cert.sums;
    if (include_witness) {
        doc.witness = cert.witness;
        doc.verification = cert.verification;
    }
    if (include_trace) doc.trace = cert.sd.trace;
    return doc;
}

ojson document_to_json(const certificate_document& doc) {
    ojson j;
    j["mode"] = doc.mode;
    j["verdict"] = doc.verdict;
    j["S"] = int_vector_to_json(doc.S);
    j["Delta"] = int_vector_to_json(doc.Delta);
    ojson tables;
    tables["h"] = int_to_json(doc.h);
    tables["h_prime"] = int_to_json(doc.h_prime);
    tables["t0"] = int_to_json(doc.t0);
    tables["c_selected"] = int_vector_to_json(doc.c_selected);
    tables["d_selected"] = int_vector_to_json(doc.d_selected);
    tables["m"] = int_vector_to_json(doc.m);
    tables["t"] = int_vector_to_json(doc.t);
    tables["z"] = int_vector_to_json(doc.z);
    tables["w"] = int_vector_to_json(doc.w);
    tables["m_prime"] = int_vector_to_json(doc.mp);
    tables["t_prime"] = int_vector_to_json(doc.tp);
    tables["z_prime"] = int_vector_to_json(doc.zp);
    tables["w_prime"] = int_vector_to_json(doc.wp);
    j["tables"] = tables;
    ojson reports = ojson::array();
    for (const auto& r : doc.reports) {
        ojson rep;
        rep["side"] = side_name(r.side);
        rep["index"] = int_to_json(r.index);
        rep["triggered"] = r.triggered;
        rep["lhs"] = ext_to_json(r.lhs);
        rep["rhs"] = ext_to_json(r.rhs);
        rep["satisfied"] = r.satisfied;
        reports.push_back(rep);
    }
    j["condition_reports"] = reports;
    if (doc.sums) {
        ojson sc;
        sc["lhs"] = int_to_json(doc.sums->lhs);
        sc["rhs"] = int_to_json(doc.sums->rhs);
        sc["equal"] = doc.sums->equal;
        j["sum_check"] = sc;
    } else {
        j["sum_check"] = nullptr;
    }
    j["witness"] = doc.witness ? int_vector_to_json(doc.witness->values())
                               : ojson(nullptr);
    if (doc.verification) {
        ojson ver;
        ver["against_d_a"] = verdict_to_json(doc.verification->first);
        ver["against_c_b"] = verdict_to_json(doc.verification->second);
        j["verification"] = ver;
    } else {
        j["verification"] = nullptr;
    }
    if (doc.trace) {
        ojson tr = ojson::array();
        for (const auto& entry : *doc.trace) {
            ojson t;
            t["origin"] = entry.origin == element_origin::c_list ? "c" : "d";
            t["index"] = int_to_json(entry.index);
            t["value"] = int_to_json(entry.value);
            t["q"] = ext_to_json(entry.q);
            t["branch"] = branch_name(entry.branch);
            t["member"] = entry.member;
            ojson snap;
            snap["in_set_below"] = int_to_json(entry.snapshot.in_set_below);
            snap["not_in_set_above"] = int_to_json(entry.snapshot.not_in_set_above);
            snap["window"] = entry.snapshot.window ? int_to_json(*entry.snapshot.window)
                                                   : ojson(nullptr);
            t["snapshot"] = snap;
            tr.push_back(t);
        }
        j["trace"] = tr;
    }
    return j;
}

certificate_document document_from_json(const ojson& j) {
    certificate_document doc;
    doc.mode = j.at("mode").get<std::string>();
    doc.verdict = j.at("verdict").get<std::string>();
    doc.S = int_vector_from_json(j.at("S"), "S");
    doc.Delta = int_vector_from_json(j.at("Delta"), "Delta");
    const auto& tables = j.at("tables");
    doc.h = int_from_json(tables.at("h"));
    doc.h_prime = int_from_json(tables.at("h_prime"));
    doc.t0 = int_from_json(tables.at("t0"));
    doc.c_selected = int_vector_from_json(tables.at("c_selected"), "c_selected");
    doc.d_selected = int_vector_from_json(tables.at("d_selected"), "d_selected");
    doc.m = int_vector_from_json(tables.at("m"), "m");
    doc.t = int_vector_from_json(tables.at("t"), "t");
    doc.z = int_vector_from_json(tables.at("z"), "z");
    doc.w = int_vector_from_json(tables.at("w"), "w");
    doc.mp = int_vector_from_json(tables.at("m_prime"), "m_prime");
    doc.tp = int_vector_from_json(tables.at("t_prime"), "t_prime");
    doc.zp = int_vector_from_json(tables.at("z_prime"), "z_prime");
    doc.wp = int_vector_from_json(tables.at("w_prime"), "w_prime");
    for (const auto& rep : j.at("condition_reports")) {
        condition_report r;
        r.side = side_from_name(rep.at("side").get<std::string>());
        r.index = int_from_json(rep.at("index"));
        r.triggered = rep.at("triggered").get<bool>();
        r.lhs = ext_from_json(rep.at("lhs"));
        r.rhs = ext_from_json(rep.at("rhs"));
        r.satisfied = rep.at("satisfied").get<bool>();
        doc.reports.push_back(r);
    }
    const auto& sc = j.at("sum_check");
    if (!sc.is_null()) {
        sum_check_result s;
        s.lhs = int_from_json(sc.at("lhs"));
        s.rhs = int_from_json(sc.at("rhs"));
        s.equal = sc.at("equal").get<bool>();
        doc.sums = s;
    }
    const auto& wit = j.at("witness");
    if (!wit.is_null()) doc.witness = partition(int_vector_from_json(wit, "witness"));
    const auto& ver = j.at("verification");
    if (!ver.is_null())
        doc.verification = std::make_pair(verdict_from_json(ver.at("against_d_a")),
                                          verdict_from_json(ver.at("against_c_b")));
    if (j.contains("trace")) {
        std::vector<decision_trace_entry> trace;
        for (const auto& t : j.at("trace")) {
            decision_trace_entry entry;
            entry.origin = t.at("origin").get<std::string>() == "c"
                               ? element_origin::c_list
                               : element_origin::d_list;
            entry.index = int_from_json(t.at("index"));
            entry.value = int_from_json(t.at("value"));
            entry.q = ext_from_json(t.at("q"));
            entry.branch = branch_from_name(t.at("branch").get<std::string>());
            entry.member = t.at("member").get<bool>();
            const auto& snap = t.at("snapshot");
            entry.snapshot.in_set_below = int_from_json(snap.at("in_set_below"));
            entry.snapshot.not_in_set_above = int_from_json(snap.at("not_in_set_above"));
            if (!snap.at("window").is_null())
                entry.snapshot.window = int_from_json(snap.at("window"));
            trace.push_back(entry);
        }
        doc.trace = std::move(trace);
    }
    return doc;
}

ojson outcome_to_json(const oracle_outcome& out, run_mode mode,
                      const search_bounds& bounds) {
    ojson j;
    j["mode"] = mode == run_mode::weak ? "weak" : "exact";
    j["lo"] = int_to_json(bounds.lo);
    j["hi"] = int_to_json(bounds.hi);
    j["found"] = out.found ? int_vector_to_json(out.found->values()) : ojson(nullptr);
    j["candidates_checked"] = out.candidates_checked;
    j["exhausted"] = out.exhausted;
    return j;
}

} // namespace gmaj
