#include "icx/oracle.hpp"

#include <algorithm>

#include "icx/errors.hpp"

namespace icx {

namespace {

struct UnicastOrder {
    std::vector<int> want;  // want[i] = message of the ith destination
};

UnicastOrder require_one_to_one(const Instance& inst) {
    require_valid(inst);
    if (inst.K() != inst.num_messages || !inst.is_multiple_unicast())
        throw NotMultipleUnicast("minrank needs M = K with each message desired exactly once");
    UnicastOrder order;
    for (const Destination& d : inst.destinations) {
        if (d.wants.size() != 1) throw NotMultipleUnicast("each destination must desire exactly one message");
        order.want.push_back(*d.wants.begin());
    }
    return order;
}

int gf2_rank(std::vector<std::uint64_t> rows) {
    int r = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] == 0) continue;
        const std::uint64_t pivot = rows[i] & (~rows[i] + 1);
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j] & pivot) rows[j] ^= rows[i];
        ++r;
    }
    return r;
}

// Rank of integer vectors mod a prime q, by plain elimination.
int rank_mod(std::vector<std::vector<std::int64_t>> rows, std::int64_t q) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    auto inv = [q](std::int64_t a) {
        std::int64_t result = 1;
        std::int64_t e = q - 2;
        a %= q;
        while (e) {
            if (e & 1) result = result * a % q;
            a = a * a % q;
            e >>= 1;
        }
        return result;
    };
    int r = 0;
    for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        std::size_t sel = static_cast<std::size_t>(r);
        while (sel < rows.size() && rows[sel][c] % q == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[static_cast<std::size_t>(r)]);
        auto& pr = rows[static_cast<std::size_t>(r)];
        const std::int64_t s = inv(pr[c]);
        for (auto& e : pr) e = e * s % q;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == static_cast<std::size_t>(r) || rows[i][c] % q == 0) continue;
            const std::int64_t factor = rows[i][c];
            for (std::size_t k = 0; k < cols; ++k) rows[i][k] = ((rows[i][k] - factor * pr[k]) % q + q) % q;
        }
        ++r;
    }
    return r;
}

}  // namespace

OracleResult minrank_gf2(const Instance& inst, std::uint64_t budget) {
    const UnicastOrder order = require_one_to_one(inst);
    const int K = inst.K();
    if (K > 63) throw BudgetExceeded("too many destinations for minrank search");

    std::vector<std::pair<int, int>> free_entries;
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j)
            if (i != j && inst.destinations[static_cast<std::size_t>(i)].has.count(order.want[static_cast<std::size_t>(j)]))
                free_entries.push_back({i, j});

    OracleResult out;
    out.query = "minrank over GF(2)";
    if (free_entries.size() >= 64 || (std::uint64_t{1} << free_entries.size()) > budget)
        throw BudgetExceeded(std::to_string(free_entries.size()) + " free entries exceed the search budget");
    out.search_space = std::uint64_t{1} << free_entries.size();

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i) rows[static_cast<std::size_t>(i)] = std::uint64_t{1} << i;
    int best = gf2_rank(rows);
    std::vector<std::uint64_t> best_rows = rows;
    // Gray order: step g flips the entry at the lowest set bit of g.
    for (std::uint64_t g = 1; g < out.search_space && best > 1; ++g) {
        const auto bit = static_cast<std::size_t>(__builtin_ctzll(g));
        const auto [i, j] = free_entries[bit];
        rows[static_cast<std::size_t>(i)] ^= std::uint64_t{1} << j;
        const int r = gf2_rank(rows);
        if (r < best) {
            best = r;
            best_rows = rows;
        }
    }

    const Field f = Field::prime(2);
    Matrix witness(f, static_cast<std::size_t>(K), static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j)
            witness(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                static_cast<Element>((best_rows[static_cast<std::size_t>(i)] >> j) & 1u);
    out.found = true;
    out.value = best;
    out.witness_matrix = witness;
    out.witness_scheme = scheme_from_fitting_matrix(inst, witness);
    return out;
}

LinearScheme scheme_from_fitting_matrix(const Instance& inst, const Matrix& fitting) {
    const UnicastOrder order = require_one_to_one(inst);
    std::vector<std::size_t> pivots;
    const Matrix reduced = rref(fitting, &pivots);
    const std::size_t r = std::max<std::size_t>(pivots.size(), 1);
    LinearScheme s(fitting.field(), r);
    for (std::size_t j = 0; j < fitting.cols(); ++j) {
        Matrix v(fitting.field(), r, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v(i, 0) = reduced(i, j);
        s.V.emplace(order.want[j], std::move(v));
    }
    return s;
}

OracleResult best_scalar_scheme(const Instance& inst, std::uint64_t q, int n_max, std::uint64_t budget) {
    require_valid(inst);
    if (!is_prime(q)) throw BadParams("q must be prime");
    if (n_max < 1) throw BadParams("n_max must be >= 1");
    const Field f = Field::prime(q);
    const int M = inst.num_messages;
    const auto qq = static_cast<std::int64_t>(q);

    std::vector<int> desired;
    for (int m = 1; m <= M; ++m)
        if (!inst.desired_by(m).empty()) desired.push_back(m);

    OracleResult out;
    out.query = "scalar scheme over GF(" + std::to_string(q) + ") with n <= " + std::to_string(n_max);
    for (int n = 1; n <= n_max; ++n) {
        // Nonzero vectors whose first nonzero entry is 1.
        std::vector<std::vector<std::int64_t>> vecs;
        std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
        std::uint64_t total = 1;
        for (int t = 0; t < n; ++t) total *= q;
        for (std::uint64_t code = 1; code < total; ++code) {
            std::uint64_t c = code;
            for (int t = n - 1; t >= 0; --t) {
                v[static_cast<std::size_t>(t)] = static_cast<std::int64_t>(c % q);
                c /= q;
            }
            const auto first = std::find_if(v.begin(), v.end(), [](std::int64_t e) { return e != 0; });
            if (*first == 1) vecs.push_back(v);
        }

        const std::size_t free = desired.empty() ? 0 : desired.size() - 1;
        std::uint64_t space = 1;
        for (std::size_t t = 0; t < free; ++t) {
            if (space > budget / vecs.size() + 1) throw BudgetExceeded("scalar search space exceeds the budget");
            space *= vecs.size();
        }
        out.search_space += space;
        if (out.search_space > budget) throw BudgetExceeded("scalar search space exceeds the budget");

        // choice[m] indexes vecs; -1 means the zero vector.
        std::vector<int> choice(static_cast<std::size_t>(M) + 1, -1);
        std::vector<std::int64_t> e1(static_cast<std::size_t>(n), 0);
        e1[0] = 1;
        const int e1_index = static_cast<int>(std::find(vecs.begin(), vecs.end(), e1) - vecs.begin());
        if (!desired.empty()) choice[static_cast<std::size_t>(desired.front())] = e1_index;
        std::vector<std::size_t> odometer(free, 0);

        auto valid = [&] {
            for (const Destination& d : inst.destinations) {
                std::vector<std::vector<std::int64_t>> want_rows, int_rows;
                for (int m : d.wants) want_rows.push_back(vecs[static_cast<std::size_t>(choice[static_cast<std::size_t>(m)])]);
                for (int m = 1; m <= M; ++m)
                    if (!d.wants.count(m) && !d.has.count(m) && choice[static_cast<std::size_t>(m)] >= 0)
                        int_rows.push_back(vecs[static_cast<std::size_t>(choice[static_cast<std::size_t>(m)])]);
                const int rd = rank_mod(want_rows, qq);
                if (rd != static_cast<int>(want_rows.size())) return false;
                const int ri = rank_mod(int_rows, qq);
                std::vector<std::vector<std::int64_t>> both = want_rows;
                both.insert(both.end(), int_rows.begin(), int_rows.end());
                if (rank_mod(both, qq) != rd + ri) return false;
            }
            return true;
        };

        for (std::uint64_t step = 0; step < space; ++step) {
            for (std::size_t t = 0; t < free; ++t)
                choice[static_cast<std::size_t>(desired[t + 1])] = static_cast<int>(odometer[t]);
            if (valid()) {
                LinearScheme s(f, static_cast<std::size_t>(n));
                for (int m = 1; m <= M; ++m) {
                    Matrix col(f, static_cast<std::size_t>(n), 1);
                    if (choice[static_cast<std::size_t>(m)] >= 0)
                        for (int t = 0; t < n; ++t)
                            col(static_cast<std::size_t>(t), 0) = static_cast<Element>(
                                vecs[static_cast<std::size_t>(choice[static_cast<std::size_t>(m)])][static_cast<std::size_t>(t)]);
                    s.V.emplace(m, std::move(col));
                }
                out.found = true;
                out.value = n;
                out.witness_scheme = std::move(s);
                return out;
            }
            for (std::size_t t = 0; t < free; ++t) {
                if (++odometer[t] < vecs.size()) break;
                odometer[t] = 0;
            }
        }
    }
    return out;
}

}  // namespace icx
