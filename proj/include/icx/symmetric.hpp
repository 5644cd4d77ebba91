#pragma once

// Capacity-achieving constructions for the symmetric families and the three
// worked examples.

#include "icx/model.hpp"
#include "icx/rational.hpp"
#include "icx/scheme.hpp"

namespace icx {

/// Neighboring antidotes: rate (U+1)/(K-A+2U), or 1 when A = K-1.
LinearScheme build_antidote_scheme(int K, int U, int D);

/// Neighboring interference: GF(2), n = D+1, V_i = e_{i mod (D+1)}.
LinearScheme build_interference_scheme(int K, int U, int D);

/// X network: GF(2), n = L(L+1)/2, one identity column per message.
LinearScheme build_x_scheme(int K, int L);

/// 1-based column assigned to message (s, p) by the periodic x-network pattern.
int x_column(int s, int p, int L);

/// Instance of the x-network formula without the divisibility checks.
Instance x_network_instance_unchecked(int K, int L);

struct BuiltinExample {
    int id = 0;
    Instance instance;
    LinearScheme scheme;
    Rational claimed_rate;
};

/// Worked examples 1..3 with their listed precoders and decoders.
BuiltinExample builtin_example(int id, const Field& field);
BuiltinExample builtin_example(int id);

}  // namespace icx
