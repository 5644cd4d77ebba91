#pragma once

// Alignment relation, alignment subsets and rate-1/(L+1) feasibility.

#include <optional>
#include <vector>

#include "icx/model.hpp"
#include "icx/scheme.hpp"

namespace icx {

/// W_i and W_j both interfere at destination k (i < j).
struct AlignmentEdge {
    int i = 0;
    int j = 0;
    int k = 0;

    friend bool operator==(const AlignmentEdge&, const AlignmentEdge&) = default;
    friend auto operator<=>(const AlignmentEdge&, const AlignmentEdge&) = default;
};

struct AlignmentPartition {
    int L = 0;
    std::vector<AlignmentEdge> edges;
    /// Subsets sorted by smallest member; members ascending.
    std::vector<std::vector<int>> subsets;
    /// subset_of[m] is the 1-based subset index of message m; index 0 unused.
    std::vector<int> subset_of;

    int Z() const noexcept { return static_cast<int>(subsets.size()); }
};

/// W_i and W_j share a subset, W_j is desired at k and W_i is not held there.
struct Conflict {
    int i = 0;
    int j = 0;
    int k = 0;

    friend bool operator==(const Conflict&, const Conflict&) = default;
};

struct FeasibilityVerdict {
    bool feasible = false;
    std::optional<Conflict> witness;
    /// Instance after splitting to |W_k| = L; witness ids refer to it.
    Instance normalized;
    AlignmentPartition partition;
};

class UnionFind {
public:
    explicit UnionFind(std::size_t n);
    std::size_t find(std::size_t x);
    bool unite(std::size_t a, std::size_t b);

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

/// Requires every destination to desire the same number of messages.
AlignmentPartition partition(const Instance& inst);

FeasibilityVerdict check_feasibility(const Instance& inst, int L);

/// n = L+1 over the smallest prime >= Z, one MDS vector per subset.
LinearScheme build_scalar_scheme(const Instance& inst, int L);

/// GF(2), n/2 bits per message, one spread subspace per subset.
LinearScheme build_rate_half_vector_scheme(const Instance& inst);

/// Smallest even n with 2^{n/2} + 1 >= Z.
unsigned spread_length_for(int Z);

}  // namespace icx
