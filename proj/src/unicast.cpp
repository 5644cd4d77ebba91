#include "icx/unicast.hpp"

#include "icx/errors.hpp"

namespace icx {

UnicastMap to_unicast(const Instance& inst, int L, bool auxiliaries) {
    UnicastMap map;
    map.L = L;
    map.auxiliaries = auxiliaries;
    map.original = normalize(inst, L, NormalizeMode::groupcast);
    const int M = map.original.num_messages;
    const int first_j = auxiliaries ? 0 : 1;
    const int per_message = L + 1 - first_j;

    for (int i = 1; i <= M; ++i)
        for (int j = first_j; j <= L; ++j) map.id_map[{i, j}] = (i - 1) * per_message + (j - first_j) + 1;

    Instance& out = map.transformed;
    out.num_messages = M * per_message;
    for (int i = 1; i <= M; ++i) {
        for (int j = first_j; j <= L; ++j) {
            Destination d;
            d.id = map.id(i, j);
            d.wants = {d.id};
            if (j == 0) {
                for (int m = 1; m <= M; ++m)
                    if (m != i)
                        for (int l = 0; l <= L; ++l) d.has.insert(map.id(m, l));
            } else {
                const Destination& orig = map.original.destination((i - 1) * L + j);
                for (int m : orig.has)
                    for (int l = first_j; l <= L; ++l) d.has.insert(map.id(m, l));
                if (auxiliaries)
                    for (int m = 1; m <= M; ++m) d.has.insert(map.id(m, 0));
                for (int l = 1; l <= L; ++l)
                    if (l != j) d.has.insert(map.id(i, l));
            }
            out.destinations.push_back(std::move(d));
        }
    }
    return map;
}

LinearScheme scheme_to_unicast(const UnicastMap& map, const LinearScheme& s) {
    const VerificationReport report = verify(map.original, s, VerifyMode::rank);
    if (!report.valid) throw SchemeInvalid("groupcast scheme does not verify on the normalized instance");
    LinearScheme out(s.field, s.n);
    for (int i = 1; i <= map.original.num_messages; ++i) {
        const Matrix& vi = s.V.at(i);
        for (int j = 1; j <= map.L; ++j) out.V.emplace(map.id(i, j), vi);
        if (map.auxiliaries) out.V.emplace(map.id(i, 0), complement_columns(vi));
    }
    return out;
}

GroupcastTranslation scheme_to_groupcast(const UnicastMap& map, const LinearScheme& sbar) {
    if (!map.auxiliaries) throw BadParams("translation back needs the auxiliary messages");
    const VerificationReport report = verify(map.transformed, sbar, VerifyMode::rank);
    if (!report.valid) throw SchemeInvalid("unicast scheme does not verify on the transformed instance");

    GroupcastTranslation out{LinearScheme(sbar.field, sbar.n), {}, {}};
    const auto n = static_cast<std::int64_t>(sbar.n);
    for (int i = 1; i <= map.original.num_messages; ++i) {
        const auto aux = static_cast<std::int64_t>(rank(sbar.V.at(map.id(i, 0))));
        Subspace acc = Subspace::span(sbar.V.at(map.id(i, 1)));
        std::int64_t rank_sum = static_cast<std::int64_t>(acc.dim());
        for (int t = 2; t <= map.L; ++t) {
            const Matrix& vt = sbar.V.at(map.id(i, t));
            const auto rt = static_cast<std::int64_t>(rank(vt));
            const auto before = static_cast<std::int64_t>(acc.dim());
            acc = subspace_intersect(acc, Subspace::span(vt));
            out.chain.push_back({i, t, static_cast<std::int64_t>(acc.dim()), before + rt - (n - aux)});
            rank_sum += rt;
        }
        out.totals.push_back(
            {i, map.L, static_cast<std::int64_t>(acc.dim()), rank_sum - (map.L - 1) * (n - aux)});
        out.scheme.V.emplace(i, acc.basis());
    }
    return out;
}

}  // namespace icx
