#pragma once

// Brute-force ground truth on small instances.

#include <cstdint>
#include <optional>
#include <string>

#include "icx/galois.hpp"
#include "icx/model.hpp"
#include "icx/scheme.hpp"

namespace icx {

struct OracleResult {
    std::string query;
    bool found = false;
    /// minrank, or the smallest block length found.
    std::int64_t value = 0;
    std::optional<Matrix> witness_matrix;
    std::optional<LinearScheme> witness_scheme;
    std::uint64_t search_space = 0;
};

/// Minimum GF(2) rank of a K x K matrix with unit diagonal whose off-diagonal
/// (i, j) entry may be nonzero only if destination i holds the message of
/// destination j. Needs one message per destination and M = K.
OracleResult minrank_gf2(const Instance& inst, std::uint64_t budget = std::uint64_t{1} << 24);

/// Scalar scheme over GF(q) with the fitting matrix's row space as codebook.
LinearScheme scheme_from_fitting_matrix(const Instance& inst, const Matrix& fitting);

/// Smallest n <= n_max admitting a scalar linear scheme over GF(q).
OracleResult best_scalar_scheme(const Instance& inst, std::uint64_t q, int n_max,
                                std::uint64_t budget = std::uint64_t{1} << 24);

}  // namespace icx
