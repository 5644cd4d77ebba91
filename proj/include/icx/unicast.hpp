#pragma once

// Groupcast to multiple unicast transformation with auxiliary messages, and
// the linear scheme translations in both directions.

#include <map>
#include <utility>
#include <vector>

#include "icx/model.hpp"
#include "icx/scheme.hpp"

namespace icx {

struct UnicastMap {
    int L = 0;
    bool auxiliaries = true;
    /// Groupcast form: destination (i-1)L + j is the jth one desiring W_i.
    Instance original;
    Instance transformed;
    /// (i, j) -> id of message bar W_{i,j}; destination bar D_{i,j} has the same id.
    std::map<std::pair<int, int>, int> id_map;

    int id(int i, int j) const { return id_map.at({i, j}); }
};

/// Without auxiliaries the j = 0 messages and destinations are left out;
/// that variant carries no equivalence guarantee.
UnicastMap to_unicast(const Instance& inst, int L, bool auxiliaries = true);

/// bar V_{i,j} = V_i for j != 0; bar V_{i,0} completes colspan(V_i) with unit columns.
LinearScheme scheme_to_unicast(const UnicastMap& map, const LinearScheme& s);

/// One inequality of the rank chain for message i:
/// dim(cap_{l<=t}) >= dim(cap_{l<t}) + rank(bar V_{i,t}) - (n - rank(bar V_{i,0})).
struct ChainStep {
    int message = 0;
    int t = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    std::int64_t slack() const noexcept { return lhs - rhs; }
};

struct GroupcastTranslation {
    LinearScheme scheme;
    std::vector<ChainStep> chain;
    /// rank(V_i) >= sum_l rank(bar V_{i,l}) - (L-1)(n - rank(bar V_{i,0})), one per message.
    std::vector<ChainStep> totals;
};

/// V_i spans the intersection of colspan(bar V_{i,j}) over j = 1..L.
GroupcastTranslation scheme_to_groupcast(const UnicastMap& map, const LinearScheme& sbar);

}  // namespace icx
