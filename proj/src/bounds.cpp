#include "icx/bounds.hpp"

#include <algorithm>
#include <set>

#include "icx/errors.hpp"

namespace icx {

std::string bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::simple: return "simple";
        case BoundKind::chain: return "chain";
        case BoundKind::family_formula: return "family-formula";
        case BoundKind::genie_chain: return "genie-chain";
    }
    return "unknown";
}

Rational BoundCertificate::lhs(const RateVector& rates) const {
    Rational sum(0);
    for (int m : terms) sum += rates.at(static_cast<std::size_t>(m - 1));
    return sum;
}

std::vector<BoundCertificate> simple_bounds(const Instance& inst) {
    require_valid(inst);
    std::vector<BoundCertificate> out;
    std::set<std::vector<int>> seen;
    auto emit = [&](std::vector<int> terms, int k, int j) {
        std::sort(terms.begin(), terms.end());
        if (!seen.insert(terms).second) return;
        out.push_back({BoundKind::simple, std::move(terms), Rational(1), {k, j}, ""});
    };
    for (const Destination& dk : inst.destinations) {
        emit(std::vector<int>(dk.wants.begin(), dk.wants.end()), dk.id, dk.id);
        for (const Destination& dj : inst.destinations) {
            if (dj.id == dk.id) continue;
            std::vector<int> terms(dk.wants.begin(), dk.wants.end());
            bool extra = false;
            for (int m : dj.wants)
                if (!dk.wants.count(m) && !dk.has.count(m)) {
                    terms.push_back(m);
                    extra = true;
                }
            if (extra) emit(std::move(terms), dk.id, dj.id);
        }
    }
    return out;
}

namespace {

struct ChainSearch {
    const Instance& inst;
    int maxN;
    std::uint64_t budget;
    // neighbors[a] = (destination, b) with a, b both interfering there.
    std::vector<std::vector<std::pair<int, int>>> neighbors;
    ChainBoundsResult result;
    std::set<std::vector<int>> seen;
    std::vector<int> path;   // i_0, i_1, ...
    std::vector<int> links;  // j^1, j^2, ...

    void emit() {
        const int i0 = path.front();
        const int iN = path.back();
        int terminal = 0;
        for (const Destination& d : inst.destinations)
            if (d.wants.count(iN) && !d.has.count(i0)) {
                terminal = d.id;
                break;
            }
        if (terminal == 0) return;
        std::vector<int> terms(path.begin(), path.end());
        for (int j : links) {
            const Destination& d = inst.destination(j);
            terms.insert(terms.end(), d.wants.begin(), d.wants.end());
        }
        std::sort(terms.begin(), terms.end());
        const int N = static_cast<int>(links.size());
        std::vector<int> key = terms;
        key.push_back(-N);
        if (!seen.insert(key).second) return;
        std::vector<int> prov;
        for (std::size_t t = 0; t < path.size(); ++t) {
            prov.push_back(path[t]);
            if (t < links.size()) prov.push_back(links[t]);
        }
        prov.push_back(terminal);
        result.certificates.push_back({BoundKind::chain, std::move(terms), Rational(N), std::move(prov), ""});
    }

    bool dfs() {
        if (++result.nodes > budget) {
            result.partial = true;
            return false;
        }
        if (!links.empty()) emit();
        if (static_cast<int>(links.size()) == maxN) return true;
        for (const auto& [j, b] : neighbors[static_cast<std::size_t>(path.back())]) {
            if (std::find(path.begin(), path.end(), b) != path.end()) continue;
            path.push_back(b);
            links.push_back(j);
            const bool go_on = dfs();
            path.pop_back();
            links.pop_back();
            if (!go_on) return false;
        }
        return true;
    }
};

}  // namespace

ChainBoundsResult chain_bounds(const Instance& inst, int L, int maxN, std::uint64_t budget) {
    if (maxN < 1) throw BadParams("maxN must be >= 1");
    const Instance norm = normalize(inst, L, NormalizeMode::split);
    ChainSearch search{norm, maxN, budget, {}, {}, {}, {}, {}};
    const int M = norm.num_messages;
    search.neighbors.resize(static_cast<std::size_t>(M) + 1);
    for (const Destination& d : norm.destinations) {
        std::vector<int> interferers;
        for (int m = 1; m <= M; ++m)
            if (!d.wants.count(m) && !d.has.count(m)) interferers.push_back(m);
        for (int a : interferers)
            for (int b : interferers)
                if (a != b) search.neighbors[static_cast<std::size_t>(a)].push_back({d.id, b});
    }
    for (int i0 = 1; i0 <= M; ++i0) {
        search.path = {i0};
        search.links.clear();
        if (!search.dfs()) break;
    }
    std::stable_sort(search.result.certificates.begin(), search.result.certificates.end(),
                     [](const BoundCertificate& a, const BoundCertificate& b) {
                         if (a.rhs != b.rhs) return a.rhs < b.rhs;
                         return a.terms < b.terms;
                     });
    return search.result;
}

std::vector<int> x_network_decoded_set(int K, int L, int s0) {
    std::vector<int> out;
    for (int r = 0; r < L; ++r) {
        const int s = wrap(s0 + r, K);
        for (int p = L - r; p <= L; ++p) out.push_back(x_message_id(s, p, L));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SymmetricCapacity symmetric_capacity(const Instance& inst) {
    if (!inst.family || inst.family->kind == FamilyKind::custom)
        throw UnsupportedFamily("symmetric capacity needs a family tag");
    const FamilyTag& t = *inst.family;
    SymmetricCapacity out;
    switch (t.kind) {
        case FamilyKind::neighboring_antidotes: {
            out.capacity = t.A() == t.K - 1 ? Rational(1) : Rational(t.U + 1, t.K - t.A() + 2 * t.U);
            std::vector<int> all;
            for (int m = 1; m <= t.K; ++m) all.push_back(m);
            out.certificates.push_back({BoundKind::family_formula, std::move(all), out.capacity * t.K, {},
                                        "neighboring antidotes K=" + std::to_string(t.K) + " U=" + std::to_string(t.U) +
                                            " D=" + std::to_string(t.D)});
            break;
        }
        case FamilyKind::neighboring_interference: {
            out.capacity = Rational(1, t.D + 1);
            for (int i = 1; i <= t.K; ++i) {
                std::vector<int> window;
                for (int s = 0; s <= t.D; ++s) window.push_back(wrap(i + s, t.K));
                std::sort(window.begin(), window.end());
                out.certificates.push_back({BoundKind::genie_chain, std::move(window), Rational(1), {i},
                                            "window of D+1 consecutive messages"});
            }
            break;
        }
        case FamilyKind::x_network: {
            out.capacity = Rational(2, t.L * (t.L + 1));
            if (t.K % (t.L + 1) != 0 || t.K < 2 * t.L) {
                out.uncertified = true;
                break;
            }
            for (int s0 = 1; s0 <= t.K; ++s0)
                out.certificates.push_back({BoundKind::genie_chain, x_network_decoded_set(t.K, t.L, s0), Rational(1),
                                            {s0}, "destination decodes W_O starting at source " + std::to_string(s0)});
            break;
        }
        case FamilyKind::custom: break;
    }
    return out;
}

}  // namespace icx
