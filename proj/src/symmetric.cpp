#include "icx/symmetric.hpp"

#include "icx/alignment.hpp"
#include "icx/errors.hpp"

namespace icx {

LinearScheme build_antidote_scheme(int K, int U, int D) {
    const Instance inst = gen_neighboring_antidotes(K, U, D);
    const int A = U + D;
    if (A == K - 1) {
        // Every destination holds everything else: send the sum.
        LinearScheme s(Field::prime(2), 1);
        for (int m = 1; m <= K; ++m) s.V.emplace(m, Matrix::identity(s.field, 1));
        return s;
    }
    if (A == K - 2) return build_scalar_scheme(inst, 1);

    const auto n = static_cast<std::size_t>(K - A + 2 * U);
    const Field f = Field::prime(smallest_prime_at_least(static_cast<std::uint64_t>(K)));
    const Matrix z = mds_vector_family(static_cast<std::size_t>(K), n, f);
    LinearScheme s(f, n);
    for (int i = 1; i <= K; ++i) {
        std::vector<std::size_t> cols;
        for (int t = 0; t <= U; ++t) cols.push_back(static_cast<std::size_t>(wrap(i + t, K) - 1));
        s.V.emplace(i, z.select_columns(cols));
    }
    return s;
}

LinearScheme build_interference_scheme(int K, int U, int D) {
    gen_neighboring_interference(K, U, D);  // parameter checks
    const auto n = static_cast<std::size_t>(D + 1);
    LinearScheme s(Field::prime(2), n);
    for (int i = 1; i <= K; ++i) {
        const std::size_t col[] = {static_cast<std::size_t>((i - 1) % (D + 1))};
        s.V.emplace(i, Matrix::unit_columns(s.field, n, col));
    }
    return s;
}

namespace {

// First column of block j; block j holds L - j columns.
int block_start(int j, int L) {
    int start = 1;
    for (int u = 0; u < j; ++u) start += L - u;
    return start;
}

}  // namespace

int x_column(int s, int p, int L) {
    const int r = (s - 1) % (L + 1);
    if (r == L) return p;
    if (r + p >= L) {
        const int j = r + p - L;
        return block_start(j, L) + (r - j);
    }
    return block_start(r + 1, L) + (p - 1);
}

LinearScheme build_x_scheme(int K, int L) {
    gen_x_network(K, L);  // parameter checks
    const auto n = static_cast<std::size_t>(L * (L + 1) / 2);
    LinearScheme s(Field::prime(2), n);
    for (int src = 1; src <= K; ++src)
        for (int p = 1; p <= L; ++p) {
            const std::size_t col[] = {static_cast<std::size_t>(x_column(src, p, L) - 1)};
            s.V.emplace(x_message_id(src, p, L), Matrix::unit_columns(s.field, n, col));
        }
    return s;
}

Instance x_network_instance_unchecked(int K, int L) {
    Instance inst;
    inst.num_messages = K * L;
    for (int k = 1; k <= K; ++k) {
        Destination d;
        d.id = k;
        MessageSet connected;
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

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

Destination dest(int id, MessageSet wants, MessageSet has) { return Destination{id, std::move(wants), std::move(has)}; }

BuiltinExample example1(const Field& f) {
    BuiltinExample ex{1, {}, LinearScheme(f, 2), Rational(1, 2)};
    ex.instance.num_messages = 3;
    ex.instance.destinations = {dest(1, {1}, {}), dest(2, {2}, {3}), dest(3, {3}, {2})};
    LinearScheme& s = ex.scheme;
    s.V.emplace(1, Matrix::from_rows(f, {{0}, {1}}));
    s.V.emplace(2, Matrix::from_rows(f, {{1}, {0}}));
    s.V.emplace(3, Matrix::from_rows(f, {{1}, {0}}));
    s.U.emplace(std::make_pair(1, 1), Matrix::from_rows(f, {{0, 1}}));
    s.U.emplace(std::make_pair(2, 2), Matrix::from_rows(f, {{1, 0}}));
    s.U.emplace(std::make_pair(3, 3), Matrix::from_rows(f, {{1, 0}}));
    return ex;
}

BuiltinExample example2(const Field& f) {
    BuiltinExample ex{2, {}, LinearScheme(f, 5), Rational(2, 5)};
    ex.instance.num_messages = 5;
    for (int k = 1; k <= 5; ++k) ex.instance.destinations.push_back(dest(k, {k}, {wrap(k + 2, 5), wrap(k + 3, 5)}));

    const Matrix T = Matrix::identity(f, 5);
    // Streams (i,1), (i,2) on T_a, T_b.
    const int pairs[5][2] = {{3, 4}, {5, 1}, {2, 3}, {4, 5}, {1, 2}};
    for (int i = 1; i <= 5; ++i) {
        const std::size_t cols[] = {static_cast<std::size_t>(pairs[i - 1][0] - 1),
                                    static_cast<std::size_t>(pairs[i - 1][1] - 1)};
        ex.scheme.V.emplace(i, T.select_columns(cols));
        ex.scheme.U.emplace(std::make_pair(i, i), T.select_columns(cols).transpose());
    }
    return ex;
}

BuiltinExample example3(const Field& f) {
    BuiltinExample ex{3, x_network_instance_unchecked(5, 3), LinearScheme(f, 6), Rational(1, 6)};
    auto col = [&](std::vector<std::int64_t> v) {
        Rows rows;
        for (std::int64_t e : v) rows.push_back({e});
        return Matrix::from_rows(f, rows);
    };
    const std::vector<std::int64_t> T1{1, 0, 0, 0, 0, 0}, T2{0, 1, 0, 0, 0, 0}, T3{0, 0, 1, 0, 0, 0},
        T4{0, 0, 0, 1, 0, 0}, T5{0, 0, 0, 0, 1, 0}, T6{0, 0, 0, 0, 0, 1};
    const std::vector<std::int64_t> V8{0, 0, 0, 1, 1, 1}, V11{0, 1, 1, 0, -1, 0}, V14{1, 1, 0, 0, 0, 1},
        V10{1, 1, 1, -1, -1, 0};
    const std::vector<std::pair<int, std::vector<std::int64_t>>> vs = {
        {1, T6}, {2, T4},  {3, T1},   {4, T5},  {5, T2},   {6, T6},  {7, T3},  {8, V8},
        {9, T5}, {10, V10}, {11, V11}, {12, T3}, {13, T1}, {14, V14}, {15, V10}};
    for (const auto& [m, v] : vs) ex.scheme.V.emplace(m, col(v));

    const std::vector<std::tuple<int, int, std::vector<std::int64_t>>> us = {
        {3, 1, {1, 0, 0, 0, 0, 0}},   {5, 1, {0, 1, 0, 0, 0, 0}},   {7, 1, {0, 0, 1, 0, 0, 0}},
        {6, 2, {-1, 0, 0, -1, 0, 1}}, {8, 2, {1, 0, 0, 1, 0, 0}},   {10, 2, {1, 0, 0, 0, 0, 0}},
        {9, 3, {0, 1, 0, 0, 1, -1}},  {11, 3, {0, 1, 0, 1, 0, -1}}, {13, 3, {1, 0, 0, 1, 0, -1}},
        {12, 4, {0, 0, 1, 0, 1, 0}},  {14, 4, {0, 1, 0, 0, 1, 0}},  {1, 4, {0, -1, 0, 0, -1, 1}},
        {15, 5, {0, 0, 1, 0, 0, 0}},  {2, 5, {0, 0, 1, 1, 0, 0}},   {4, 5, {0, 0, 1, 0, 1, 0}}};
    for (const auto& [m, k, row] : us) ex.scheme.U.emplace(std::make_pair(m, k), Matrix::from_rows(f, {row}));
    return ex;
}

}  // namespace

BuiltinExample builtin_example(int id, const Field& field) {
    switch (id) {
        case 1: return example1(field);
        case 2: return example2(field);
        case 3: return example3(field);
        default: throw BadParams("built-in examples are numbered 1 to 3");
    }
}

BuiltinExample builtin_example(int id) { return builtin_example(id, Field::prime(2)); }

}  // namespace icx
