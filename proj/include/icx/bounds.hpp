#pragma once

// Outer-bound certificates: sum of R_m over a multiset of messages <= rhs.

#include <cstdint>
#include <string>
#include <vector>

#include "icx/model.hpp"
#include "icx/rational.hpp"

namespace icx {

enum class BoundKind { simple, chain, family_formula, genie_chain };

std::string bound_kind_name(BoundKind kind);

struct BoundCertificate {
    BoundKind kind = BoundKind::simple;
    /// Message ids, sorted, repeated by multiplicity.
    std::vector<int> terms;
    Rational rhs;
    /// simple: (k, j). chain: i_0, j^1, i_1, ..., j^N, i_N, k. genie-chain: window or
    /// decoded set start. family-formula: empty (see note).
    std::vector<int> provenance;
    std::string note;

    /// Sum of rates over terms.
    Rational lhs(const RateVector& rates) const;
    bool violated_by(const RateVector& rates) const { return lhs(rates) > rhs; }
};

/// One bound per ordered destination pair (k, j) plus single-destination
/// bounds, deduplicated by term multiset.
std::vector<BoundCertificate> simple_bounds(const Instance& inst);

struct ChainBoundsResult {
    std::vector<BoundCertificate> certificates;
    /// Search stopped at the node budget; the list is incomplete.
    bool partial = false;
    std::uint64_t nodes = 0;
};

/// Alignment chains of length 1..maxN on the instance split to |W_k| = L.
ChainBoundsResult chain_bounds(const Instance& inst, int L, int maxN = 4, std::uint64_t budget = 1u << 22);

struct SymmetricCapacity {
    Rational capacity;
    std::vector<BoundCertificate> certificates;
    /// Value taken from the closed form without a certificate on this instance.
    bool uncertified = false;
};

/// Closed-form per-message capacity of a tagged family.
SymmetricCapacity symmetric_capacity(const Instance& inst);

/// Messages W_O of the x-network decode chain starting at source s0.
std::vector<int> x_network_decoded_set(int K, int L, int s0);

}  // namespace icx
