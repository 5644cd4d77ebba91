#include "icx/report.hpp"

namespace icx {

Json rates_to_json(const RateVector& rates) {
    Json out = Json::array();
    for (const Rational& r : rates) out.push_back(to_string(r));
    return out;
}

Json report_to_json(const VerificationReport& r) {
    Json j;
    j["valid"] = r.valid;
    j["mode"] = r.mode == VerifyMode::decoders ? "decoders" : "rank";
    Json diags = Json::array();
    for (const Diagnostic& d : r.diagnostics) {
        Json dj;
        dj["kind"] = diagnostic_kind_name(d.kind);
        dj["m"] = d.m;
        dj["i"] = d.i;
        dj["k"] = d.k;
        dj["detail"] = d.detail;
        diags.push_back(std::move(dj));
    }
    j["diagnostics"] = std::move(diags);
    j["rates"] = rates_to_json(r.rates);
    return j;
}

Json simulation_to_json(const SimulationResult& r) {
    Json j;
    j["ok"] = r.ok;
    j["tuples"] = r.tuples;
    if (r.counterexample) {
        const Counterexample& c = *r.counterexample;
        Json cj;
        cj["destination"] = c.destination;
        cj["message"] = c.message;
        cj["tuple"] = c.tuple;
        if (c.other) cj["other"] = *c.other;
        j["counterexample"] = std::move(cj);
    }
    return j;
}

Json audit_to_json(const DimensionAudit& a) {
    Json j;
    j["alpha"] = a.alpha;
    Json checks = Json::array();
    for (const AuditCheck& c : a.checks) {
        Json cj;
        cj["check"] = c.name;
        cj["lhs"] = to_string(c.lhs);
        cj["rhs"] = to_string(c.rhs);
        cj["slack"] = to_string(c.slack);
        cj["holds"] = c.holds;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["holds"] = a.holds;
    return j;
}

Json partition_to_json(const AlignmentPartition& p) {
    Json j;
    j["L"] = p.L;
    j["Z"] = p.Z();
    j["subsets"] = p.subsets;
    Json edges = Json::array();
    for (const AlignmentEdge& e : p.edges) edges.push_back({e.i, e.j, e.k});
    j["edges"] = std::move(edges);
    return j;
}

Json feasibility_to_json(const FeasibilityVerdict& v) {
    Json j;
    j["feasible"] = v.feasible;
    if (v.witness) j["witness"] = {v.witness->i, v.witness->j, v.witness->k};
    j["partition"] = partition_to_json(v.partition);
    return j;
}

Json certificate_to_json(const BoundCertificate& c) {
    Json j;
    j["kind"] = bound_kind_name(c.kind);
    j["terms"] = c.terms;
    j["rhs"] = to_string(c.rhs);
    j["provenance"] = c.provenance;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

Json capacity_to_json(const SymmetricCapacity& c) {
    Json j;
    j["capacity"] = to_string(c.capacity);
    j["uncertified"] = c.uncertified;
    Json certs = Json::array();
    for (const BoundCertificate& b : c.certificates) certs.push_back(certificate_to_json(b));
    j["certificates"] = std::move(certs);
    return j;
}

Json oracle_to_json(const OracleResult& r) {
    Json j;
    j["query"] = r.query;
    j["found"] = r.found;
    j["value"] = r.value;
    j["search_space"] = r.search_space;
    if (r.witness_matrix) j["witness_matrix"] = matrix_to_json(*r.witness_matrix);
    if (r.witness_scheme) j["witness_scheme"] = scheme_to_json(*r.witness_scheme);
    return j;
}

Json unicast_map_to_json(const UnicastMap& m) {
    Json j;
    j["L"] = m.L;
    j["auxiliaries"] = m.auxiliaries;
    j["original"] = instance_to_json(m.original);
    j["transformed"] = instance_to_json(m.transformed);
    Json ids = Json::array();
    for (const auto& [key, id] : m.id_map) ids.push_back({{"i", key.first}, {"j", key.second}, {"id", id}});
    j["id_map"] = std::move(ids);
    return j;
}

Json chain_steps_to_json(const std::vector<ChainStep>& steps) {
    Json out = Json::array();
    for (const ChainStep& s : steps)
        out.push_back({{"message", s.message}, {"t", s.t}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"slack", s.slack()}});
    return out;
}

}  // namespace icx
