#include "icx/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "icx/alignment.hpp"
#include "icx/bounds.hpp"
#include "icx/errors.hpp"
#include "icx/io.hpp"
#include "icx/oracle.hpp"
#include "icx/report.hpp"
#include "icx/symmetric.hpp"
#include "icx/unicast.hpp"

namespace icx::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

VerifyMode parse_mode(const std::string& text) {
    if (text == "auto") return VerifyMode::automatic;
    if (text == "decoders") return VerifyMode::decoders;
    if (text == "rank") return VerifyMode::rank;
    throw UsageError("unknown verify mode '" + text + "'");
}

Instance generate(const std::string& family, int K, int U, int D, int L) {
    FamilyKind kind;
    try {
        kind = parse_family_kind(family);
    } catch (const ParseError&) {
        throw UsageError("unknown family '" + family + "'");
    }
    switch (kind) {
        case FamilyKind::neighboring_antidotes: return gen_neighboring_antidotes(K, U, D);
        case FamilyKind::neighboring_interference: return gen_neighboring_interference(K, U, D);
        case FamilyKind::x_network: return gen_x_network(K, L);
        case FamilyKind::custom: break;
    }
    throw UsageError("family '" + family + "' cannot be generated");
}

LinearScheme family_scheme(const Instance& inst) {
    const FamilyTag& t = *inst.family;
    switch (t.kind) {
        case FamilyKind::neighboring_antidotes: return build_antidote_scheme(t.K, t.U, t.D);
        case FamilyKind::neighboring_interference: return build_interference_scheme(t.K, t.U, t.D);
        case FamilyKind::x_network: return build_x_scheme(t.K, t.L);
        case FamilyKind::custom: break;
    }
    throw UnsupportedFamily("no closed-form scheme for a custom instance");
}

Rational min_rate(const RateVector& rates) {
    if (rates.empty()) return Rational(0);
    return *std::min_element(rates.begin(), rates.end());
}

struct Settings {
    std::string field;
    std::uint64_t budget = std::uint64_t{1} << 24;
    int maxN = 4;
    std::uint64_t samples = 4096;
    std::string out_path;
};

// Exhaustive when the tuple space fits the budget, seeded sampling otherwise.
Json simulate_json(const Instance& inst, const LinearScheme& s, const Settings& cfg, bool& good) {
    SimulationResult r;
    std::string method = "exhaustive";
    if (tuple_space_size(inst, s) <= cfg.budget) {
        SimulationOptions opts;
        opts.budget = cfg.budget;
        r = simulate_exhaustive(inst, s, opts);
    } else {
        method = "sampled";
        r = simulate_sampled(inst, s, cfg.samples);
    }
    Json j = simulation_to_json(r);
    j["method"] = method;
    good = good && r.ok;
    return j;
}

// Verification and optional simulation of a scheme; returns false on any failure.
bool check_scheme(Json& j, const Instance& inst, const LinearScheme& s, bool do_verify, bool do_simulate,
                  VerifyMode mode, const Settings& cfg) {
    bool good = true;
    if (do_verify) {
        const VerificationReport r = verify(inst, s, mode);
        j["verification"] = report_to_json(r);
        good = good && r.valid;
    }
    if (do_simulate) j["simulation"] = simulate_json(inst, s, cfg, good);
    return good;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Index coding toolkit: linear schemes, alignment feasibility and outer bounds.", "icx"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Settings cfg;
    app.add_option("--field", cfg.field, "Field as p=<prime> or gf2m=<m>");
    app.add_option("--budget", cfg.budget, "Search and simulation budget")->check(CLI::PositiveNumber);
    app.add_option("--maxN", cfg.maxN, "Longest alignment chain for chain bounds")->check(CLI::PositiveNumber);
    app.add_option("--samples", cfg.samples, "Sampled tuples when the space exceeds the budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out_path, "Write JSON here instead of stdout");

    std::string family, instance_path, scheme_path, mode_text = "auto";
    int K = 0, U = 0, D = 0, L = 0, example_id = 0;
    bool do_verify = false, do_simulate = false, do_audit = false, spread = false, no_aux = false;
    bool minrank = false, scalar_search = false;
    std::uint64_t q = 2;
    int nmax = 3;

    auto add_family_params = [&](CLI::App* sub) {
        sub->add_option("--K", K, "Destinations")->check(CLI::PositiveNumber);
        sub->add_option("--U", U, "Antidotes above")->check(CLI::NonNegativeNumber);
        sub->add_option("--D", D, "Antidotes below")->check(CLI::NonNegativeNumber);
        sub->add_option("--L", L, "Messages per destination")->check(CLI::PositiveNumber);
    };

    CLI::App* gen = app.add_subcommand("gen", "Generate a family instance");
    gen->add_option("family", family, "antidotes | interference | x")->required();
    add_family_params(gen);

    CLI::App* validate_cmd = app.add_subcommand("validate", "Check an instance for consistency");
    validate_cmd->add_option("instance", instance_path)->required();

    CLI::App* feas = app.add_subcommand("check-feasibility", "Decide rate-1/(L+1) alignment feasibility");
    feas->add_option("instance", instance_path)->required();
    feas->add_option("--L", L)->required()->check(CLI::PositiveNumber);

    CLI::App* scheme_cmd = app.add_subcommand("scheme", "Build a linear scheme");
    scheme_cmd->add_option("instance", instance_path);
    scheme_cmd->add_option("--family", family, "antidotes | interference | x");
    add_family_params(scheme_cmd);
    scheme_cmd->add_flag("--spread", spread, "GF(2) spread scheme instead of the scalar one");
    scheme_cmd->add_flag("--verify", do_verify);
    scheme_cmd->add_flag("--simulate", do_simulate);
    scheme_cmd->add_flag("--audit", do_audit, "Dimension audit (neighboring antidotes only)");
    scheme_cmd->add_option("--mode", mode_text, "auto | decoders | rank");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Verify a scheme against an instance");
    verify_cmd->add_option("instance", instance_path)->required();
    verify_cmd->add_option("scheme", scheme_path)->required();
    verify_cmd->add_option("--mode", mode_text, "auto | decoders | rank");

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "Exhaustive zero-error simulation");
    simulate_cmd->add_option("instance", instance_path)->required();
    simulate_cmd->add_option("scheme", scheme_path)->required();

    CLI::App* transform = app.add_subcommand("transform", "Groupcast to multiple unicast");
    transform->add_option("instance", instance_path)->required();
    transform->add_option("--L", L)->required()->check(CLI::PositiveNumber);
    transform->add_flag("--no-aux", no_aux, "Leave out the auxiliary messages");
    transform->add_option("--scheme", scheme_path, "Groupcast scheme to translate and back");

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "Outer-bound certificates");
    bounds_cmd->add_option("instance", instance_path)->required();
    bounds_cmd->add_option("--L", L)->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--scheme", scheme_path, "Check every certificate against this scheme's rates");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth");
    oracle_cmd->add_option("instance", instance_path)->required();
    auto* minrank_flag = oracle_cmd->add_flag("--minrank", minrank);
    auto* scalar_flag = oracle_cmd->add_flag("--scalar-search", scalar_search);
    minrank_flag->excludes(scalar_flag);
    oracle_cmd->add_option("--q", q)->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--nmax", nmax)->check(CLI::PositiveNumber);

    CLI::App* example = app.add_subcommand("example", "Built-in worked example");
    example->add_option("id", example_id)->required()->check(CLI::Range(1, 3));
    example->add_flag("--verify", do_verify);
    example->add_flag("--simulate", do_simulate);
    example->add_option("--mode", mode_text, "auto | decoders | rank");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out, help_err;
        const int code = app.exit(e, help_out, help_err);
        out << help_out.str();
        err << help_err.str();
        return code == 0 ? ok : usage;
    }

    Json result;
    int code = ok;
    try {
        const VerifyMode mode = parse_mode(mode_text);
        auto load_instance = [&] { return parse_instance(read_file(instance_path)); };
        auto load_scheme = [&] { return parse_scheme(read_file(scheme_path)); };

        if (gen->parsed()) {
            result = instance_to_json(generate(family, K, U, D, L));
        } else if (validate_cmd->parsed()) {
            const Instance inst = instance_from_json(parse_json_text(read_file(instance_path)), false);
            const auto violations = validate(inst);
            result["valid"] = violations.empty();
            Json list = Json::array();
            for (const Violation& v : violations)
                list.push_back({{"destination", v.destination}, {"message", v.message}, {"what", v.what}});
            result["violations"] = std::move(list);
            if (!violations.empty()) code = verdict;
        } else if (feas->parsed()) {
            const FeasibilityVerdict v = check_feasibility(load_instance(), L);
            result = feasibility_to_json(v);
            if (!v.feasible) code = verdict;
        } else if (scheme_cmd->parsed()) {
            Instance inst;
            std::optional<LinearScheme> s;
            if (!family.empty()) {
                if (!instance_path.empty()) throw UsageError("give either --family or an instance, not both");
                inst = generate(family, K, U, D, L);
                s = family_scheme(inst);
            } else {
                if (instance_path.empty()) throw UsageError("scheme needs --family or an instance file");
                inst = load_instance();
                if (spread) {
                    s = build_rate_half_vector_scheme(inst);
                } else {
                    if (L == 0) throw UsageError("scheme on an instance file needs --L");
                    const FeasibilityVerdict v = check_feasibility(inst, L);
                    if (!v.feasible) {
                        result["feasibility"] = feasibility_to_json(v);
                        code = verdict;
                    } else {
                        s = build_scalar_scheme(inst, L);
                    }
                }
            }
            if (s) {
                result["scheme"] = scheme_to_json(*s);
                const RateVector rates = s->rates(inst.num_messages);
                result["rate"] = to_string(min_rate(rates));
                result["rates"] = rates_to_json(rates);
                if (!check_scheme(result, inst, *s, do_verify, do_simulate, mode, cfg)) code = verdict;
                if (do_audit) {
                    const DimensionAudit a = dimension_audit(inst, *s);
                    result["audit"] = audit_to_json(a);
                    if (!a.holds) code = verdict;
                }
            }
        } else if (verify_cmd->parsed()) {
            const VerificationReport r = verify(load_instance(), load_scheme(), mode);
            result = report_to_json(r);
            if (!r.valid) code = verdict;
        } else if (simulate_cmd->parsed()) {
            bool good = true;
            result = simulate_json(load_instance(), load_scheme(), cfg, good);
            if (!good) code = verdict;
        } else if (transform->parsed()) {
            const UnicastMap map = to_unicast(load_instance(), L, !no_aux);
            result = unicast_map_to_json(map);
            if (!scheme_path.empty()) {
                if (no_aux) throw UsageError("scheme translation needs the auxiliary messages");
                const LinearScheme sbar = scheme_to_unicast(map, load_scheme());
                result["unicast_scheme"] = scheme_to_json(sbar);
                const VerificationReport rbar = verify(map.transformed, sbar, VerifyMode::rank);
                result["unicast_verification"] = report_to_json(rbar);
                const GroupcastTranslation back = scheme_to_groupcast(map, sbar);
                result["groupcast_scheme"] = scheme_to_json(back.scheme);
                result["chain"] = chain_steps_to_json(back.chain);
                result["totals"] = chain_steps_to_json(back.totals);
                if (!rbar.valid) code = verdict;
            }
        } else if (bounds_cmd->parsed()) {
            const Instance inst = load_instance();
            Json certs = Json::array();
            std::vector<BoundCertificate> all = simple_bounds(inst);
            const int chain_L = L > 0 ? L : uniform_want_size(inst).value_or(1);
            const ChainBoundsResult chain = chain_bounds(inst, chain_L, cfg.maxN, cfg.budget);
            all.insert(all.end(), chain.certificates.begin(), chain.certificates.end());
            if (inst.family && inst.family->kind != FamilyKind::custom) {
                const SymmetricCapacity cap = symmetric_capacity(inst);
                result["capacity"] = capacity_to_json(cap);
                all.insert(all.end(), cap.certificates.begin(), cap.certificates.end());
            }
            std::optional<RateVector> rates;
            if (!scheme_path.empty()) rates = load_scheme().rates(inst.num_messages);
            for (const BoundCertificate& c : all) {
                Json cj = certificate_to_json(c);
                if (rates) {
                    cj["lhs"] = to_string(c.lhs(*rates));
                    cj["violated"] = c.violated_by(*rates);
                    if (c.violated_by(*rates)) code = verdict;
                }
                certs.push_back(std::move(cj));
            }
            result["certificates"] = std::move(certs);
            result["chain_L"] = chain_L;
            result["partial"] = chain.partial;
            result["nodes"] = chain.nodes;
            if (chain.partial && code == ok) code = budget;
        } else if (oracle_cmd->parsed()) {
            if (!minrank && !scalar_search) throw UsageError("oracle needs --minrank or --scalar-search");
            const Instance inst = load_instance();
            const OracleResult r = minrank ? minrank_gf2(inst, cfg.budget) : best_scalar_scheme(inst, q, nmax, cfg.budget);
            result = oracle_to_json(r);
            if (!r.found) code = verdict;
        } else if (example->parsed()) {
            const Field f = cfg.field.empty() ? Field::prime(2) : parse_field_flag(cfg.field);
            const BuiltinExample ex = builtin_example(example_id, f);
            result["id"] = ex.id;
            result["claimed_rate"] = to_string(ex.claimed_rate);
            result["instance"] = instance_to_json(ex.instance);
            result["scheme"] = scheme_to_json(ex.scheme);
            const RateVector rates = ex.scheme.rates(ex.instance.num_messages);
            result["rate"] = to_string(min_rate(rates));
            result["rates"] = rates_to_json(rates);
            if (!check_scheme(result, ex.instance, ex.scheme, do_verify, do_simulate, mode, cfg)) code = verdict;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const BadParams& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const InvalidField& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return budget;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return verdict;
    }

    const std::string text = dump(result);
    if (cfg.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << cfg.out_path << "'\n";
            return usage;
        }
        file << text;
    }
    return code;
}

}  // namespace icx::cli
