#pragma once

// Index coding instances: destinations with desired and antidote sets,
// validation, normalization and the symmetric family generators.

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace icx {

using MessageSet = std::set<int>;

struct Destination {
    int id = 0;
    MessageSet wants;
    MessageSet has;

    friend bool operator==(const Destination&, const Destination&) = default;
};

enum class FamilyKind { neighboring_antidotes, neighboring_interference, x_network, custom };

/// Parameters of a generated family. A = U + D is derived.
struct FamilyTag {
    FamilyKind kind = FamilyKind::custom;
    int K = 0;
    int U = 0;
    int D = 0;
    int L = 0;

    int A() const noexcept { return U + D; }

    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

std::string family_kind_name(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& name);

struct Instance {
    int num_messages = 0;
    std::vector<Destination> destinations;
    std::optional<FamilyTag> family;

    int K() const noexcept { return static_cast<int>(destinations.size()); }
    /// Ids of destinations desiring message m, in destination order.
    std::vector<int> desired_by(int m) const;
    /// Destination with the given id. Throws InvalidInstance if absent.
    const Destination& destination(int id) const;
    /// Every message is desired by at most one destination.
    bool is_multiple_unicast() const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

struct Violation {
    int destination = 0;
    int message = 0;
    std::string what;
};

std::vector<Violation> validate(const Instance& inst);
/// Throws InvalidInstance naming the first violation.
void require_valid(const Instance& inst);

enum class NormalizeMode {
    /// Every destination ends up desiring exactly L messages.
    split,
    /// Every destination desires one message and every message is desired by
    /// exactly L destinations; destination (m-1)L + j is the jth one for m.
    groupcast,
};

Instance normalize(const Instance& inst, int L, NormalizeMode mode = NormalizeMode::split);

/// Common |W_k| if all destinations agree, otherwise nullopt.
std::optional<int> uniform_want_size(const Instance& inst);

Instance gen_neighboring_antidotes(int K, int U, int D);
Instance gen_neighboring_interference(int K, int U, int D);
Instance gen_x_network(int K, int L);

/// Message id of the stream from source s (1-based) at position p in 1..L.
int x_message_id(int s, int p, int L);

/// 1-based circular index.
inline int wrap(int i, int K) { return ((i - 1) % K + K) % K + 1; }

}  // namespace icx
