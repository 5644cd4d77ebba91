#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "icx/alignment.hpp"
#include "icx/bounds.hpp"
#include "icx/cli.hpp"
#include "icx/errors.hpp"
#include "icx/io.hpp"
#include "icx/oracle.hpp"
#include "icx/report.hpp"
#include "icx/symmetric.hpp"

namespace py = pybind11;
using namespace icx;

namespace {

Instance load_instance(const std::string& text) { return parse_instance(text); }
LinearScheme load_scheme(const std::string& text) { return parse_scheme(text); }

VerifyMode mode_from(const std::string& mode) {
    if (mode == "auto") return VerifyMode::automatic;
    if (mode == "decoders") return VerifyMode::decoders;
    if (mode == "rank") return VerifyMode::rank;
    throw BadParams("mode must be auto, decoders or rank");
}

std::string gen(const std::string& family, int K, int U, int D, int L) {
    switch (parse_family_kind(family)) {
        case FamilyKind::neighboring_antidotes: return serialize_instance(gen_neighboring_antidotes(K, U, D));
        case FamilyKind::neighboring_interference: return serialize_instance(gen_neighboring_interference(K, U, D));
        case FamilyKind::x_network: return serialize_instance(gen_x_network(K, L));
        case FamilyKind::custom: break;
    }
    throw BadParams("family '" + family + "' cannot be generated");
}

std::string family_scheme(const std::string& instance) {
    const Instance inst = load_instance(instance);
    if (!inst.family) throw UnsupportedFamily("instance carries no family tag");
    const FamilyTag& t = *inst.family;
    switch (t.kind) {
        case FamilyKind::neighboring_antidotes: return serialize_scheme(build_antidote_scheme(t.K, t.U, t.D));
        case FamilyKind::neighboring_interference: return serialize_scheme(build_interference_scheme(t.K, t.U, t.D));
        case FamilyKind::x_network: return serialize_scheme(build_x_scheme(t.K, t.L));
        case FamilyKind::custom: break;
    }
    throw UnsupportedFamily("no closed-form scheme for a custom instance");
}

std::string validate_json(const std::string& instance) {
    const Instance inst = instance_from_json(parse_json_text(instance), false);
    Json list = Json::array();
    for (const Violation& v : validate(inst))
        list.push_back({{"destination", v.destination}, {"message", v.message}, {"what", v.what}});
    return dump(list);
}

std::string bounds_json(const std::string& instance, int L, int maxN) {
    const Instance inst = load_instance(instance);
    Json certs = Json::array();
    for (const BoundCertificate& c : simple_bounds(inst)) certs.push_back(certificate_to_json(c));
    const int chain_L = L > 0 ? L : uniform_want_size(inst).value_or(1);
    const ChainBoundsResult chain = chain_bounds(inst, chain_L, maxN);
    for (const BoundCertificate& c : chain.certificates) certs.push_back(certificate_to_json(c));
    Json out;
    out["certificates"] = std::move(certs);
    out["partial"] = chain.partial;
    if (inst.family && inst.family->kind != FamilyKind::custom) out["capacity"] = capacity_to_json(symmetric_capacity(inst));
    return dump(out);
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_icx, m) {
    m.doc() = "Index coding toolkit bindings; instances and schemes travel as JSON text.";

    py::register_exception<Error>(m, "IcxError");

    m.def("gen", &gen, py::arg("family"), py::arg("K"), py::arg("U") = 0, py::arg("D") = 0, py::arg("L") = 1);
    m.def("validate", &validate_json, py::arg("instance"));
    m.def(
        "check_feasibility",
        [](const std::string& instance, int L) { return dump(feasibility_to_json(check_feasibility(load_instance(instance), L))); },
        py::arg("instance"), py::arg("L"));
    m.def(
        "scalar_scheme",
        [](const std::string& instance, int L) { return serialize_scheme(build_scalar_scheme(load_instance(instance), L)); },
        py::arg("instance"), py::arg("L"));
    m.def(
        "spread_scheme",
        [](const std::string& instance) { return serialize_scheme(build_rate_half_vector_scheme(load_instance(instance))); },
        py::arg("instance"));
    m.def("family_scheme", &family_scheme, py::arg("instance"));
    m.def(
        "verify",
        [](const std::string& instance, const std::string& scheme, const std::string& mode) {
            return dump(report_to_json(verify(load_instance(instance), load_scheme(scheme), mode_from(mode))));
        },
        py::arg("instance"), py::arg("scheme"), py::arg("mode") = "auto");
    m.def(
        "simulate",
        [](const std::string& instance, const std::string& scheme, std::uint64_t budget) {
            SimulationOptions opts;
            opts.budget = budget;
            SimulationResult r;
            {
                py::gil_scoped_release release;
                r = simulate_exhaustive(load_instance(instance), load_scheme(scheme), opts);
            }
            return dump(simulation_to_json(r));
        },
        py::arg("instance"), py::arg("scheme"), py::arg("budget") = std::uint64_t{1} << 24);
    m.def("bounds", &bounds_json, py::arg("instance"), py::arg("L") = 0, py::arg("maxN") = 4);
    m.def(
        "minrank",
        [](const std::string& instance) { return dump(oracle_to_json(minrank_gf2(load_instance(instance)))); },
        py::arg("instance"));
    m.def(
        "example",
        [](int id, std::uint64_t p) {
            const BuiltinExample ex = builtin_example(id, Field::prime(p));
            Json out;
            out["instance"] = instance_to_json(ex.instance);
            out["scheme"] = scheme_to_json(ex.scheme);
            out["claimed_rate"] = to_string(ex.claimed_rate);
            return dump(out);
        },
        py::arg("id"), py::arg("p") = 2);
    m.def("run", &run_cli, py::arg("args"), "Run the command line tool; returns (exit code, stdout, stderr).");
}
