#include "icx/alignment.hpp"

#include <algorithm>
#include <numeric>

#include "icx/errors.hpp"

namespace icx {

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

std::size_t UnionFind::find(std::size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
}

AlignmentPartition partition(const Instance& inst) {
    require_valid(inst);
    const auto L = uniform_want_size(inst);
    if (!L) throw NotNormalized("destinations desire different numbers of messages");

    AlignmentPartition out;
    out.L = *L;
    const int M = inst.num_messages;
    UnionFind uf(static_cast<std::size_t>(M) + 1);
    for (const Destination& d : inst.destinations) {
        std::vector<int> interferers;
        for (int m = 1; m <= M; ++m)
            if (!d.wants.count(m) && !d.has.count(m)) interferers.push_back(m);
        for (std::size_t a = 0; a < interferers.size(); ++a)
            for (std::size_t b = a + 1; b < interferers.size(); ++b) {
                out.edges.push_back({interferers[a], interferers[b], d.id});
                uf.unite(static_cast<std::size_t>(interferers[a]), static_cast<std::size_t>(interferers[b]));
            }
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());

    // Message ids ascend, so each root is first met at its smallest member.
    std::vector<int> index_of_root(static_cast<std::size_t>(M) + 1, 0);
    out.subset_of.assign(static_cast<std::size_t>(M) + 1, 0);
    for (int m = 1; m <= M; ++m) {
        const std::size_t root = uf.find(static_cast<std::size_t>(m));
        if (index_of_root[root] == 0) {
            out.subsets.emplace_back();
            index_of_root[root] = out.Z();
        }
        out.subsets[static_cast<std::size_t>(index_of_root[root] - 1)].push_back(m);
        out.subset_of[static_cast<std::size_t>(m)] = index_of_root[root];
    }
    return out;
}

FeasibilityVerdict check_feasibility(const Instance& inst, int L) {
    FeasibilityVerdict verdict;
    verdict.normalized = normalize(inst, L, NormalizeMode::split);
    verdict.partition = partition(verdict.normalized);
    const AlignmentPartition& p = verdict.partition;

    for (const std::vector<int>& subset : p.subsets) {
        for (int i : subset)
            for (int j : subset) {
                if (i == j) continue;
                for (const Destination& d : verdict.normalized.destinations)
                    if (d.wants.count(j) && !d.has.count(i)) {
                        verdict.witness = Conflict{i, j, d.id};
                        verdict.feasible = false;
                        return verdict;
                    }
            }
    }
    verdict.feasible = true;
    return verdict;
}

namespace {

AlignmentPartition require_feasible(const Instance& inst, int L) {
    FeasibilityVerdict v = check_feasibility(inst, L);
    if (!v.feasible) {
        const Conflict& c = *v.witness;
        throw Infeasible("messages " + std::to_string(c.i) + " and " + std::to_string(c.j) +
                         " must align but destination " + std::to_string(c.k) + " desires " + std::to_string(c.j) +
                         " without holding " + std::to_string(c.i));
    }
    return v.partition;
}

}  // namespace

LinearScheme build_scalar_scheme(const Instance& inst, int L) {
    const AlignmentPartition p = require_feasible(inst, L);
    const Field f = Field::prime(smallest_prime_at_least(static_cast<std::uint64_t>(std::max(p.Z(), 2))));
    const auto n = static_cast<std::size_t>(L) + 1;
    const Matrix family = mds_vector_family(static_cast<std::size_t>(p.Z()), n, f);
    LinearScheme s(f, n);
    for (int m = 1; m <= inst.num_messages; ++m)
        s.V.emplace(m, family.column(static_cast<std::size_t>(p.subset_of[static_cast<std::size_t>(m)] - 1)));
    return s;
}

unsigned spread_length_for(int Z) {
    unsigned n = 2;
    while ((std::uint64_t{1} << (n / 2)) + 1 < static_cast<std::uint64_t>(Z)) n += 2;
    return n;
}

LinearScheme build_rate_half_vector_scheme(const Instance& inst) {
    const auto L = uniform_want_size(inst);
    if (L && *L != 1) throw UnsupportedL("the spread construction is for rate 1/2 only");
    const AlignmentPartition p = require_feasible(inst, 1);
    const unsigned n = spread_length_for(p.Z());
    const std::vector<Subspace> spread = spread_family(n, static_cast<std::size_t>(p.Z()));
    LinearScheme s(Field::prime(2), n);
    for (int m = 1; m <= inst.num_messages; ++m)
        s.V.emplace(m, spread[static_cast<std::size_t>(p.subset_of[static_cast<std::size_t>(m)] - 1)].basis());
    return s;
}

}  // namespace icx
