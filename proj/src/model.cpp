#include "icx/model.hpp"

#include <algorithm>
#include <map>

#include "icx/errors.hpp"

namespace icx {

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::neighboring_antidotes: return "neighboring-antidotes";
        case FamilyKind::neighboring_interference: return "neighboring-interference";
        case FamilyKind::x_network: return "x-network";
        case FamilyKind::custom: return "custom";
    }
    return "custom";
}

FamilyKind parse_family_kind(const std::string& name) {
    if (name == "neighboring-antidotes" || name == "antidotes") return FamilyKind::neighboring_antidotes;
    if (name == "neighboring-interference" || name == "interference") return FamilyKind::neighboring_interference;
    if (name == "x-network" || name == "x") return FamilyKind::x_network;
    if (name == "custom") return FamilyKind::custom;
    throw ParseError("family.kind", "unknown family kind '" + name + "'");
}

std::vector<int> Instance::desired_by(int m) const {
    std::vector<int> out;
    for (const Destination& d : destinations)
        if (d.wants.count(m)) out.push_back(d.id);
    return out;
}

const Destination& Instance::destination(int id) const {
    for (const Destination& d : destinations)
        if (d.id == id) return d;
    throw InvalidInstance("no destination with id " + std::to_string(id));
}

bool Instance::is_multiple_unicast() const {
    std::vector<int> count(static_cast<std::size_t>(std::max(num_messages, 0)) + 1, 0);
    for (const Destination& d : destinations)
        for (int m : d.wants) {
            if (m < 1 || m > num_messages) continue;
            if (++count[static_cast<std::size_t>(m)] > 1) return false;
        }
    return true;
}

std::vector<Violation> validate(const Instance& inst) {
    std::vector<Violation> out;
    if (inst.num_messages < 1) out.push_back({0, 0, "instance needs at least one message"});
    if (inst.destinations.empty()) out.push_back({0, 0, "instance has no destinations"});
    std::set<int> seen;
    for (const Destination& d : inst.destinations) {
        if (d.id < 1) out.push_back({d.id, 0, "destination id must be positive"});
        if (!seen.insert(d.id).second) out.push_back({d.id, 0, "duplicate destination id"});
        if (d.wants.empty()) out.push_back({d.id, 0, "destination desires no message"});
        for (const MessageSet* set : {&d.wants, &d.has})
            for (int m : *set)
                if (m < 1 || m > inst.num_messages)
                    out.push_back({d.id, m, "unknown message id " + std::to_string(m)});
        for (int m : d.wants)
            if (d.has.count(m)) out.push_back({d.id, m, "message " + std::to_string(m) + " both desired and held"});
    }
    return out;
}

void require_valid(const Instance& inst) {
    const auto v = validate(inst);
    if (!v.empty())
        throw InvalidInstance("destination " + std::to_string(v.front().destination) + ": " + v.front().what);
}

std::optional<int> uniform_want_size(const Instance& inst) {
    if (inst.destinations.empty()) return std::nullopt;
    const auto size = static_cast<int>(inst.destinations.front().wants.size());
    for (const Destination& d : inst.destinations)
        if (static_cast<int>(d.wants.size()) != size) return std::nullopt;
    return size;
}

namespace {

Instance normalize_split(const Instance& inst, int L) {
    Instance out;
    out.num_messages = inst.num_messages;
    bool changed = false;
    for (const Destination& d : inst.destinations) {
        const std::vector<int> wants(d.wants.begin(), d.wants.end());
        const int size = static_cast<int>(wants.size());
        if (size < L)
            throw CannotNormalize("destination " + std::to_string(d.id) + " desires " + std::to_string(size) +
                                  " < " + std::to_string(L) + " messages");
        if (size == L) {
            out.destinations.push_back(d);
            continue;
        }
        changed = true;
        for (int start = 0; start + L <= size; ++start) {
            Destination piece;
            piece.wants.insert(wants.begin() + start, wants.begin() + start + L);
            piece.has = d.has;
            out.destinations.push_back(std::move(piece));
        }
    }
    for (std::size_t i = 0; i < out.destinations.size(); ++i) out.destinations[i].id = static_cast<int>(i) + 1;
    if (!changed) {
        out.destinations = inst.destinations;
        out.family = inst.family;
    }
    return out;
}

Instance normalize_groupcast(const Instance& inst, int L) {
    std::map<int, std::vector<MessageSet>> holders;  // message -> antidote sets of its destinations
    for (const Destination& d : inst.destinations)
        for (int m : d.wants) holders[m].push_back(d.has);

    Instance out;
    out.num_messages = inst.num_messages;
    for (int m = 1; m <= inst.num_messages; ++m) {
        auto it = holders.find(m);
        if (it == holders.end())
            throw CannotNormalize("message " + std::to_string(m) + " is desired by no destination");
        std::vector<MessageSet>& sets = it->second;
        if (static_cast<int>(sets.size()) > L)
            throw CannotNormalize("message " + std::to_string(m) + " is desired by " + std::to_string(sets.size()) +
                                  " > " + std::to_string(L) + " destinations");
        while (static_cast<int>(sets.size()) < L) sets.push_back(sets.front());
        for (const MessageSet& has : sets) {
            Destination d;
            d.id = static_cast<int>(out.destinations.size()) + 1;
            d.wants = {m};
            d.has = has;
            out.destinations.push_back(std::move(d));
        }
    }
    if (out.destinations == inst.destinations) out.family = inst.family;
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw BadParams(what);
}

}  // namespace

Instance normalize(const Instance& inst, int L, NormalizeMode mode) {
    if (L < 1) throw CannotNormalize("L must be >= 1");
    require_valid(inst);
    return mode == NormalizeMode::split ? normalize_split(inst, L) : normalize_groupcast(inst, L);
}

Instance gen_neighboring_antidotes(int K, int U, int D) {
    require(K >= 1, "K must be >= 1");
    require(0 <= U && U <= D, "need 0 <= U <= D");
    require(U + D < K, "need A = U + D < K");
    Instance inst;
    inst.num_messages = K;
    for (int k = 1; k <= K; ++k) {
        Destination d;
        d.id = k;
        d.wants = {k};
        for (int t = 1; t <= U; ++t) d.has.insert(wrap(k - t, K));
        for (int t = 1; t <= D; ++t) d.has.insert(wrap(k + t, K));
        inst.destinations.push_back(std::move(d));
    }
    inst.family = FamilyTag{FamilyKind::neighboring_antidotes, K, U, D, 1};
    return inst;
}

Instance gen_neighboring_interference(int K, int U, int D) {
    require(0 <= U && U <= D, "need 0 <= U <= D");
    require(K >= U + D + 1, "need K >= U + D + 1");
    require(K % (D + 1) == 0, "D + 1 must divide K");
    Instance inst;
    inst.num_messages = K;
    for (int k = 1; k <= K; ++k) {
        Destination d;
        d.id = k;
        d.wants = {k};
        MessageSet window;
        for (int t = -U; t <= D; ++t) window.insert(wrap(k + t, K));
        for (int m = 1; m <= K; ++m)
            if (!window.count(m)) d.has.insert(m);
        inst.destinations.push_back(std::move(d));
    }
    inst.family = FamilyTag{FamilyKind::neighboring_interference, K, U, D, 1};
    return inst;
}

int x_message_id(int s, int p, int L) { return (s - 1) * L + p; }

Instance gen_x_network(int K, int L) {
    require(L >= 1, "L must be >= 1");
    require(K % (L + 1) == 0, "L + 1 must divide K");
    require(K >= 2 * L, "need K >= 2L");
    Instance inst;
    inst.num_messages = K * L;
    for (int k = 1; k <= K; ++k) {
        Destination d;
        d.id = k;
        MessageSet connected;
        // Source k+i carries the message at position L-i for destination k.
        for (int i = 0; i < L; ++i) {
            const int s = wrap(k + i, K);
            d.wants.insert(x_message_id(s, L - i, L));
            for (int p = 1; p <= L; ++p) connected.insert(x_message_id(s, p, L));
        }
        for (int m = 1; m <= inst.num_messages; ++m)
            if (!connected.count(m)) d.has.insert(m);
        inst.destinations.push_back(std::move(d));
    }
    inst.family = FamilyTag{FamilyKind::x_network, K, 0, 0, L};
    return inst;
}

}  // namespace icx
