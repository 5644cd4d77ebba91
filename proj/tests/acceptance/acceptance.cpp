// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "icx/alignment.hpp"
#include "icx/bounds.hpp"
#include "icx/errors.hpp"
#include "icx/oracle.hpp"
#include "icx/symmetric.hpp"
#include "icx/unicast.hpp"
#include "../support/convert.hpp"
#include "../support/fixtures.hpp"

using namespace icx;
namespace ref = icx::oracle_ref;

namespace {

struct Check {
    std::vector<std::string> failures;
    std::size_t count = 0;

    void expect(bool ok, const std::string& what) {
        ++count;
        if (!ok && failures.size() < 5) failures.push_back(what);
        else if (!ok) failures.push_back("");
    }
};

RateVector uniform(int M, Rational r) { return RateVector(static_cast<std::size_t>(M), r); }

std::string label(const char* family, std::initializer_list<int> params) {
    std::ostringstream os;
    os << family << '(';
    bool first = true;
    for (int p : params) {
        os << (first ? "" : ",") << p;
        first = false;
    }
    os << ')';
    return os.str();
}

// Every simple and chain certificate, plus the family certificates when tagged.
void check_certificates(Check& c, const Instance& inst, const LinearScheme& s, int L, const std::string& what) {
    const RateVector rates = s.rates(inst.num_messages);
    for (const BoundCertificate& b : simple_bounds(inst))
        c.expect(!b.violated_by(rates), what + ": simple certificate violated");
    const int chain_L = uniform_want_size(inst).value_or(L);
    for (const BoundCertificate& b : chain_bounds(inst, chain_L, 3).certificates)
        c.expect(!b.violated_by(rates), what + ": chain certificate violated");
    if (inst.family && inst.family->kind != FamilyKind::custom)
        for (const BoundCertificate& b : symmetric_capacity(inst).certificates)
            c.expect(!b.violated_by(rates), what + ": family certificate violated");
}

Check criterion1() {
    Check c;
    const Rational rates[] = {Rational(1, 2), Rational(2, 5), Rational(1, 6)};
    for (int id = 1; id <= 3; ++id)
        for (std::uint64_t p : {2u, 3u}) {
            const BuiltinExample ex = builtin_example(id, Field::prime(p));
            const std::string what = "example " + std::to_string(id) + " over GF(" + std::to_string(p) + ")";
            c.expect(verify(ex.instance, ex.scheme, VerifyMode::decoders).valid, what + ": decoder verify");
            c.expect(verify(ex.instance, ex.scheme, VerifyMode::rank).valid, what + ": rank verify");
            c.expect(simulate_exhaustive(ex.instance, ex.scheme).ok, what + ": simulation");
            for (const Rational& r : ex.scheme.rates(ex.instance.num_messages))
                c.expect(r == rates[id - 1], what + ": rate");
        }
    return c;
}

Check criterion2() {
    Check c;
    for (int K = 4; K <= 12; ++K)
        for (int U = 0; U <= K; ++U)
            for (int D = U; U + D <= K - 3; ++D) {
                const std::string what = label("antidotes", {K, U, D});
                const Instance inst = gen_neighboring_antidotes(K, U, D);
                const LinearScheme s = build_antidote_scheme(K, U, D);
                c.expect(verify(inst, s).valid, what + ": verify");
                const Rational target(U + 1, K - U - D + 2 * U);
                for (const Rational& r : s.rates(K)) c.expect(r == target, what + ": rate");
                c.expect(dimension_audit(inst, s).holds, what + ": dimension audit");
            }
    return c;
}

Check criterion3() {
    Check c;
    for (int D = 0; D <= 4; ++D)
        for (int U = 0; U <= D; ++U)
            for (int K = D + 1; K <= 24; K += D + 1) {
                if (K < U + D + 1) continue;
                const std::string what = label("interference", {K, U, D});
                const Instance inst = gen_neighboring_interference(K, U, D);
                const LinearScheme s = build_interference_scheme(K, U, D);
                c.expect(verify(inst, s).valid, what + ": verify");
                for (const Rational& r : s.rates(K)) c.expect(r == Rational(1, D + 1), what + ": rate");
                const SymmetricCapacity cap = symmetric_capacity(inst);
                c.expect(cap.capacity == Rational(1, D + 1), what + ": capacity");
                c.expect(!cap.certificates.empty(), what + ": window certificates");
                const RateVector at = uniform(K, Rational(1, D + 1));
                for (const BoundCertificate& b : cap.certificates)
                    c.expect(b.lhs(at) == b.rhs, what + ": window certificate not saturated");
            }
    return c;
}

Check criterion4() {
    Check c;
    for (int L = 1; L <= 4; ++L)
        for (int K = L + 1; K <= 20; K += L + 1) {
            if (K < 2 * L) continue;
            const std::string what = label("x", {K, L});
            const Instance inst = gen_x_network(K, L);
            const LinearScheme s = build_x_scheme(K, L);
            c.expect(verify(inst, s).valid, what + ": verify");
            const Rational target(2, L * (L + 1));
            for (const Rational& r : s.rates(inst.num_messages)) c.expect(r == target, what + ": rate");
            c.expect(symmetric_capacity(inst).capacity == target, what + ": capacity");
        }
    return c;
}

Check criterion5() {
    Check c;
    const Instance aligned = fixtures::aligned_pairs();
    c.expect(check_feasibility(aligned, 2).feasible, "aligned pairs feasible");
    const LinearScheme s_aligned = build_scalar_scheme(aligned, 2);
    c.expect(simulate_exhaustive(aligned, s_aligned).ok, "aligned pairs simulation");
    for (const Rational& r : s_aligned.rates(4)) c.expect(r == Rational(1, 3), "aligned pairs rate");

    const FeasibilityVerdict conflicting = check_feasibility(fixtures::conflicting_pairs(), 2);
    c.expect(!conflicting.feasible, "conflicting pairs infeasible");
    c.expect(conflicting.witness && *conflicting.witness == Conflict{1, 4, 3}, "conflicting pairs witness");
    bool violated = false;
    for (const BoundCertificate& b : chain_bounds(fixtures::conflicting_pairs(), 2).certificates)
        violated = violated || b.violated_by(uniform(4, Rational(1, 3)));
    c.expect(violated, "conflicting pairs chain certificate");

    std::mt19937_64 rng(2024);
    int feasible = 0, infeasible = 0;
    for (int t = 0; t < 300; ++t) {
        const int L = 1 + static_cast<int>(rng() % 2);
        const Instance inst = fixtures::random_instance(rng, 6, 6, L);
        const std::string what = "random instance " + std::to_string(t);
        const FeasibilityVerdict v = check_feasibility(inst, L);
        c.expect(v.feasible == ref::alignment_feasible(v.normalized), what + ": verdict disagrees with the definition");
        if (v.feasible) {
            ++feasible;
            const LinearScheme s = build_scalar_scheme(inst, L);
            c.expect(verify(inst, s, VerifyMode::rank).valid, what + ": scheme fails rank check");
            c.expect(ref::zero_error(inst, s), what + ": scheme fails brute decoding");
        } else {
            ++infeasible;
            bool any = false;
            for (const BoundCertificate& b : chain_bounds(inst, L, inst.num_messages).certificates)
                any = any || b.violated_by(uniform(inst.num_messages, Rational(1, L + 1)));
            c.expect(any, what + ": no chain certificate excludes the symmetric rate");
        }
    }
    c.expect(feasible > 20 && infeasible > 20, "random suite covers both verdicts");
    return c;
}

Check criterion6() {
    Check c;
    std::mt19937_64 rng(6);
    int built = 0;
    for (int t = 0; t < 400; ++t) {
        const Instance inst = fixtures::random_instance(rng, 8, 6, 1);
        if (!check_feasibility(inst, 1).feasible) continue;
        ++built;
        const std::string what = "random L=1 instance " + std::to_string(t);
        c.expect(verify(inst, build_scalar_scheme(inst, 1)).valid, what + ": scalar scheme");
        const LinearScheme sp = build_rate_half_vector_scheme(inst);
        c.expect(verify(inst, sp).valid, what + ": spread scheme");
        c.expect(sp.field == Field::prime(2), what + ": spread scheme field");
    }
    c.expect(built >= 50, "enough feasible instances");
    for (unsigned n : {2u, 4u, 6u, 8u}) {
        const auto family = spread_family(n);
        c.expect(family.size() == (std::size_t{1} << (n / 2)) + 1, "spread family size n=" + std::to_string(n));
    }
    return c;
}

Check criterion7() {
    Check c;
    const Instance p = fixtures::pentagon();
    const OracleResult r = minrank_gf2(p);
    c.expect(r.found && r.value == 3, "pentagon minrank 3");
    if (r.witness_matrix) {
        const Matrix& w = *r.witness_matrix;
        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j <= 5; ++j) {
                const Element e = w(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
                if (i == j) c.expect(e == 1, "witness diagonal");
                else if (!p.destination(i).has.count(j)) c.expect(e == 0, "witness off-support entry");
            }
        c.expect(ref::rank_mod(w.to_rows(), 2) == 3, "witness rank by reference elimination");
    } else {
        c.expect(false, "witness missing");
    }
    if (r.witness_scheme) c.expect(ref::zero_error(p, *r.witness_scheme), "witness scheme decodes");
    c.expect(Rational(1, 3) < Rational(2, 5), "scalar rate below vector rate");
    return c;
}

Check criterion8() {
    Check c;
    const UnicastMap map = to_unicast(fixtures::shared_groupcast(), 2);
    c.expect(map.transformed.num_messages == 6, "shared_groupcast message count");
    c.expect(map.transformed.K() == map.original.K() + map.original.num_messages, "shared_groupcast destination count");
    for (const auto& [key, pairs] : ref::construction1_antidotes(map.original, 2)) {
        MessageSet ids;
        for (const auto& [i, j] : pairs) ids.insert(map.id(i, j));
        c.expect(map.transformed.destination(map.id(key.first, key.second)).has == ids, "shared_groupcast antidotes");
    }

    std::vector<std::tuple<std::string, Instance, int, LinearScheme>> schemes;
    for (int id = 1; id <= 3; ++id) {
        const BuiltinExample ex = builtin_example(id, Field::prime(3));
        schemes.emplace_back("example " + std::to_string(id), ex.instance, 1, ex.scheme);
    }
    {
        LinearScheme s(Field::prime(2), 2);
        s.V.emplace(1, Matrix::from_rows(s.field, {{1}, {0}}));
        s.V.emplace(2, Matrix::from_rows(s.field, {{0}, {1}}));
        schemes.emplace_back("shared_groupcast", fixtures::shared_groupcast(), 2, s);
    }
    schemes.emplace_back("aligned_pairs", fixtures::aligned_pairs(), 2, build_scalar_scheme(fixtures::aligned_pairs(), 2));
    schemes.emplace_back("antidotes(8,1,2)", gen_neighboring_antidotes(8, 1, 2), 1, build_antidote_scheme(8, 1, 2));
    schemes.emplace_back("interference(9,1,2)", gen_neighboring_interference(9, 1, 2), 1,
                         build_interference_scheme(9, 1, 2));
    schemes.emplace_back("x(6,2)", gen_x_network(6, 2), 1, build_x_scheme(6, 2));

    for (const auto& [name, inst, L, s] : schemes) {
        const UnicastMap m = to_unicast(inst, L);
        const LinearScheme sbar = scheme_to_unicast(m, s);
        c.expect(verify(m.transformed, sbar, VerifyMode::rank).valid, name + ": unicast scheme");
        const GroupcastTranslation back = scheme_to_groupcast(m, sbar);
        c.expect(verify(m.original, back.scheme, VerifyMode::rank).valid, name + ": translated scheme");
        for (int i = 1; i <= m.original.num_messages; ++i)
            c.expect(back.scheme.rate(i) >= s.rate(i), name + ": rate dropped");
        for (const ChainStep& step : back.chain) c.expect(step.slack() >= 0, name + ": chain slack");
        for (const ChainStep& step : back.totals) c.expect(step.slack() >= 0, name + ": total slack");
    }
    return c;
}

Check criterion9() {
    Check c;
    for (int id = 1; id <= 3; ++id) {
        const BuiltinExample ex = builtin_example(id, Field::prime(3));
        check_certificates(c, ex.instance, ex.scheme, 1, "example " + std::to_string(id));
    }
    for (int K = 4; K <= 9; ++K)
        for (int U = 0; U <= K; ++U)
            for (int D = U; U + D <= K - 3; ++D)
                check_certificates(c, gen_neighboring_antidotes(K, U, D), build_antidote_scheme(K, U, D), 1,
                                   label("antidotes", {K, U, D}));
    for (const auto& [K, U, D] : std::vector<std::tuple<int, int, int>>{{6, 0, 1}, {9, 1, 2}, {8, 1, 3}, {12, 2, 3}})
        check_certificates(c, gen_neighboring_interference(K, U, D), build_interference_scheme(K, U, D), 1,
                           label("interference", {K, U, D}));
    for (const auto& [K, L] : std::vector<std::pair<int, int>>{{4, 1}, {6, 2}, {8, 3}})
        check_certificates(c, gen_x_network(K, L), build_x_scheme(K, L), L, label("x", {K, L}));

    std::mt19937_64 rng(9);
    for (int t = 0; t < 150; ++t) {
        const int L = 1 + static_cast<int>(rng() % 2);
        const Instance inst = fixtures::random_instance(rng, 6, 5, L);
        if (!check_feasibility(inst, L).feasible) continue;
        check_certificates(c, inst, build_scalar_scheme(inst, L), L, "random instance " + std::to_string(t));
        if (L == 1) check_certificates(c, inst, build_rate_half_vector_scheme(inst), 1, "random spread " + std::to_string(t));
    }
    return c;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        std::function<Check()> run;
        double limit_seconds;
    };
    const std::vector<Entry> entries{
        {1, "worked examples verify and simulate", criterion1, 5},
        {2, "neighboring antidotes sweep", criterion2, 60},
        {3, "neighboring interference sweep", criterion3, 0},
        {4, "x-network sweep", criterion4, 0},
        {5, "alignment feasibility", criterion5, 0},
        {6, "scalar and spread schemes", criterion6, 0},
        {7, "pentagon minrank", criterion7, 0},
        {8, "unicast transformation", criterion8, 0},
        {9, "no certificate violated", criterion9, 0},
    };
    int failed = 0;
    for (const Entry& e : entries) {
        const auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = e.run();
        } catch (const std::exception& ex) {
            c.failures.push_back(std::string("exception: ") + ex.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (e.limit_seconds > 0 && secs > e.limit_seconds)
            c.failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(e.limit_seconds) + " s");
        const bool pass = c.failures.empty();
        if (!pass) ++failed;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "Criterion " << e.id << ": " << (pass ? "PASS" : "FAIL") << " " << e.title << " (" << c.count
             << " checks, " << secs << " s)";
        std::cout << line.str() << "\n";
        for (const std::string& f : c.failures)
            if (!f.empty()) std::cout << "  " << f << "\n";
        if (c.failures.size() > 5) std::cout << "  ... " << c.failures.size() - 5 << " more\n";
    }
    return failed == 0 ? 0 : 1;
}
