#pragma once

// Vector-linear index codes: representation, verification, decoder
// synthesis, exhaustive zero-error simulation and the dimension audit.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icx/galois.hpp"
#include "icx/model.hpp"
#include "icx/rational.hpp"

namespace icx {

/// Precoders V_m (n x L_m) and optional combiners U_{m,k} (L_m x n).
struct LinearScheme {
    LinearScheme(const Field& f, std::size_t n) : field(f), n(n) {}

    Field field;
    std::size_t n;
    std::map<int, Matrix> V;
    std::map<std::pair<int, int>, Matrix> U;  // key (m, k)

    std::size_t L(int m) const;
    Rational rate(int m) const;
    /// L_m / n for m = 1..M.
    RateVector rates(int num_messages) const;
    bool has_decoders() const noexcept { return !U.empty(); }
};

enum class VerifyMode {
    /// Zero-forcing and invertibility checks when U is present, rank checks otherwise.
    automatic,
    decoders,
    rank,
};

enum class DiagnosticKind {
    missing_decoder,
    property1,      // U_{m,k} V_i != 0
    property2,      // U_{m,k} V_m singular
    desired_rank,   // desired columns dependent
    resolvability,  // desired and interference spans meet
};

std::string diagnostic_kind_name(DiagnosticKind kind);

struct Diagnostic {
    DiagnosticKind kind;
    int m = 0;
    int i = 0;
    int k = 0;
    std::string detail;
};

struct VerificationReport {
    bool valid = false;
    VerifyMode mode = VerifyMode::rank;
    std::vector<Diagnostic> diagnostics;
    RateVector rates;
};

/// Throws SchemeMalformed if V is missing a message, has the wrong row count,
/// or any matrix is over another field or misshapen.
void check_well_formed(const Instance& inst, const LinearScheme& s);

VerificationReport verify(const Instance& inst, const LinearScheme& s, VerifyMode mode = VerifyMode::automatic);

/// Same V with a zero-forcing U_{m,k} for every desired (m, k).
/// Throws NoDecoderExists when rank verification fails.
LinearScheme synthesize_decoders(const Instance& inst, const LinearScheme& s);

struct SimulationOptions {
    std::uint64_t budget = std::uint64_t{1} << 24;
    /// 0 reads ICX_THREADS, defaulting to 1.
    unsigned threads = 0;
};

struct Counterexample {
    /// Symbols of every message, x[m-1] of length L_m.
    std::vector<std::vector<Element>> tuple;
    /// A second tuple with the same codeword and antidotes, when the failure
    /// is a collision rather than a wrong decoder output.
    std::optional<std::vector<std::vector<Element>>> other;
    int destination = 0;
    int message = 0;
};

struct SimulationResult {
    bool ok = false;
    std::uint64_t tuples = 0;
    std::optional<Counterexample> counterexample;
};

/// Number of message tuples |F|^(sum L_m), saturating at UINT64_MAX.
std::uint64_t tuple_space_size(const Instance& inst, const LinearScheme& s);

/// Encodes every message tuple and decodes each desired message at each
/// destination. Throws BudgetExceeded when the tuple space is too large.
SimulationResult simulate_exhaustive(const Instance& inst, const LinearScheme& s, const SimulationOptions& opts = {});

/// Decodes `samples` pseudo-random tuples drawn from a fixed-seed generator.
/// Used when the tuple space is beyond the exhaustive budget. Decoders are
/// synthesized when absent; a scheme without decoders fails at once.
SimulationResult simulate_sampled(const Instance& inst, const LinearScheme& s, std::uint64_t samples,
                                  std::uint64_t seed = 1);

struct AuditCheck {
    std::string name;
    Rational lhs;
    Rational rhs;
    Rational slack;  // lhs - rhs
    bool holds = false;
};

struct DimensionAudit {
    /// alpha[j-1] = alpha_j.
    std::vector<std::int64_t> alpha;
    std::vector<AuditCheck> checks;
    bool holds = false;
};

/// alpha_j = sum_i dim(V_i + ... + V_{i+j-1}) on a neighboring-antidotes instance.
DimensionAudit dimension_audit(const Instance& inst, const LinearScheme& s);

unsigned default_threads();

}  // namespace icx
