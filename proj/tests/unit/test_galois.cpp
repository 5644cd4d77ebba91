#include <doctest.h>

#include <random>
#include <set>

#include "icx/errors.hpp"
#include "icx/galois.hpp"
#include "../support/oracles.hpp"

using namespace icx;
namespace ref = icx::oracle_ref;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Element>(pick(rng));
    return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    const Field f5 = Field::prime(5);
    CHECK(field_arith(f5, 3, 0, ArithOp::inv) == 2);
    CHECK(field_arith(f5, 4, 3, ArithOp::add) == 2);
    CHECK(field_arith(f5, 4, 3, ArithOp::mul) == 2);
    CHECK(field_arith(Field::prime(7), 0, 0, ArithOp::neg) == 0);
    CHECK(field_arith(Field::prime(7), 3, 0, ArithOp::neg) == 4);
    CHECK_THROWS_AS(f5.inv(0), DivisionByZero);
    CHECK_THROWS_AS(Field::prime(9), InvalidField);
    CHECK_THROWS_AS(Field::prime(1), InvalidField);
    CHECK(f5.from_int(-1) == 4);
}

TEST_CASE("binary extension arithmetic") {
    const Field f = Field::gf2m(3, 0b1011);  // x^3 + x + 1
    CHECK(f.mul(0b010, 0b100) == 0b011);
    CHECK(f.add(0b110, 0b011) == 0b101);
    CHECK(f.neg(5) == 5);
    CHECK_THROWS_AS(Field::gf2m(3, 0b1001), InvalidField);  // x^3 + 1 = (x+1)(x^2+x+1)
    CHECK(Field::gf2m(8).poly() == 0x11b);
    CHECK(default_gf2_poly(1) == 0b10);
    CHECK(default_gf2_poly(4) == 0b10011);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    for (const Field& f : {Field::prime(2), Field::prime(3), Field::prime(13), Field::prime(2147483647),
                           Field::gf2m(1), Field::gf2m(4), Field::gf2m(13), Field::gf2m(32)}) {
        std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
        for (int t = 0; t < 200; ++t) {
            const auto a = static_cast<Element>(pick(rng));
            const auto b = static_cast<Element>(pick(rng));
            const auto c = static_cast<Element>(pick(rng));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("mixed fields are rejected") {
    const Matrix a = Matrix::identity(Field::prime(3), 2);
    const Matrix b = Matrix::identity(Field::prime(5), 2);
    CHECK_THROWS_AS(multiply(a, b), FieldMismatch);
    CHECK_THROWS_AS(multiply(a, Matrix::identity(Field::prime(3), 3)), DimensionMismatch);
}

TEST_CASE("rank and nullspace") {
    const Field f3 = Field::prime(3);
    const RankNullspace id = rank_and_nullspace(Matrix::identity(f3, 2));
    CHECK(id.rank == 2);
    CHECK(id.nullspace.cols() == 0);

    const Field f2 = Field::prime(2);
    const RankNullspace ones = rank_and_nullspace(Matrix::from_rows(f2, {{1, 1}, {1, 1}}));
    CHECK(ones.rank == 1);
    REQUIRE(ones.nullspace.cols() == 1);
    CHECK(ones.nullspace.to_rows() == std::vector<std::vector<std::int64_t>>{{1}, {1}});

    const std::vector<std::size_t> cols{2, 3};
    CHECK(rank(Matrix::unit_columns(f2, 5, cols)) == 2);
}

TEST_CASE("rank agrees with determinant expansion up to 4x4") {
    std::mt19937_64 rng(5);
    for (const std::uint64_t p : {2u, 3u, 5u, 7u}) {
        const Field f = Field::prime(p);
        for (int t = 0; t < 150; ++t) {
            const std::size_t r = 1 + rng() % 4;
            const std::size_t c = 1 + rng() % 4;
            Matrix m = random_matrix(f, r, c, rng);
            if (t % 3 == 0 && r > 1)  // force a dependent row
                for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = f.add(m(0, j), m(0, j));
            CHECK(rank(m) == ref::rank_by_minors(m.to_rows(), static_cast<std::int64_t>(p)));
            const RankNullspace rn = rank_and_nullspace(m);
            CHECK(rn.rank + rn.nullspace.cols() == c);
            CHECK(multiply(m, rn.nullspace).is_zero());
        }
    }
}

TEST_CASE("left nullspace, solve and inverse") {
    std::mt19937_64 rng(17);
    const Field f = Field::prime(7);
    for (int t = 0; t < 50; ++t) {
        const Matrix m = random_matrix(f, 4, 3, rng);
        const Matrix left = left_nullspace(m);
        CHECK(left.rows() == 4 - rank(m));
        CHECK(multiply(left, m).is_zero());
        const Matrix x = random_matrix(f, 3, 1, rng);
        const auto solved = solve(m, multiply(m, x));
        REQUIRE(solved);
        CHECK(multiply(m, *solved) == multiply(m, x));
        const Matrix sq = random_matrix(f, 3, 3, rng);
        const auto inv = inverse(sq);
        CHECK(inv.has_value() == (rank(sq) == 3));
        if (inv) CHECK(multiply(sq, *inv) == Matrix::identity(f, 3));
    }
    const Matrix a = Matrix::from_rows(Field::prime(2), {{1, 0}, {1, 0}});
    CHECK_FALSE(solve(a, Matrix::from_rows(Field::prime(2), {{1}, {0}})).has_value());
}

TEST_CASE("subspace intersection") {
    const Field f2 = Field::prime(2);
    const std::vector<std::size_t> c12{0, 1}, c23{1, 2}, c2{1};
    const Subspace a = Subspace::span(Matrix::unit_columns(f2, 3, c12));
    const Subspace b = Subspace::span(Matrix::unit_columns(f2, 3, c23));
    CHECK(subspace_intersect(a, b) == Subspace::span(Matrix::unit_columns(f2, 3, c2)));
    CHECK(subspace_intersect(a, a) == a);
    CHECK(subspace_sum(a, b) == Subspace::whole(f2, 3));
    CHECK_THROWS_AS(subspace_intersect(a, Subspace::whole(f2, 4)), DimensionMismatch);
}

TEST_CASE("subspace intersection matches span enumeration") {
    std::mt19937_64 rng(23);
    const Field f5 = Field::prime(5);
    for (int t = 0; t < 25; ++t) {
        const Matrix ma = random_matrix(f5, 4, 3, rng);
        const Matrix mb = random_matrix(f5, 4, 3, rng);
        const Subspace a = Subspace::span(ma);
        const Subspace b = Subspace::span(mb);
        const Subspace both = subspace_intersect(a, b);
        const auto sa = ref::span_set(ma.to_rows(), 4, 5);
        const auto sb = ref::span_set(mb.to_rows(), 4, 5);
        std::size_t common = 0;
        for (const auto& v : sa) common += sb.count(v);
        const auto sboth = ref::span_set(both.basis().to_rows(), 4, 5);
        CHECK(sboth.size() == common);
        for (const auto& v : sboth) CHECK((sa.count(v) && sb.count(v)));
        CHECK(both.dim() + 4 >= a.dim() + b.dim());
        if (a.dim() == 3 && b.dim() == 3) CHECK(both.dim() >= 2);
    }
}

TEST_CASE("canonical subspace bases") {
    const Field f3 = Field::prime(3);
    const Matrix m = Matrix::from_rows(f3, {{1, 2}, {0, 1}, {2, 0}});
    const Matrix shuffled = Matrix::from_rows(f3, {{0, 2}, {1, 1}, {2, 0}});  // columns c1+c2, c2
    CHECK(Subspace::span(m) == Subspace::span(shuffled));
    CHECK(Subspace::span(m).contains(m.column(0)));
    CHECK_FALSE(Subspace::span(m.column(0)).contains(m.column(1)));
}

TEST_CASE("dimension bound for a common complement") {
    // (colspan A + colspan B) meets colspan C trivially, so
    // dim(A cap B) >= rank A + rank B + rank C - n.
    std::mt19937_64 rng(31);
    const Field f = Field::prime(3);
    int tested = 0;
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 3 + rng() % 3;
        const Matrix A = random_matrix(f, n, 1 + rng() % (n - 1), rng);
        const Matrix B = random_matrix(f, n, 1 + rng() % (n - 1), rng);
        const Matrix C = random_matrix(f, n, 1 + rng() % (n - 1), rng);
        const Subspace a = Subspace::span(A), b = Subspace::span(B), c = Subspace::span(C);
        if (subspace_intersect(subspace_sum(a, b), c).dim() != 0) continue;
        ++tested;
        CHECK(subspace_intersect(a, b).dim() + n >= a.dim() + b.dim() + c.dim());
    }
    CHECK(tested > 20);
}

TEST_CASE("pairwise trivial intersection alone does not give the bound") {
    const Field f2 = Field::prime(2);
    const std::vector<std::size_t> c12{0, 1}, c34{2, 3};
    const Subspace a = Subspace::span(Matrix::unit_columns(f2, 4, c12));
    const Subspace b = Subspace::span(Matrix::unit_columns(f2, 4, c34));
    const Subspace c = Subspace::span(Matrix::from_rows(f2, {{1}, {0}, {1}, {0}}));
    CHECK(subspace_intersect(a, c).dim() == 0);
    CHECK(subspace_intersect(b, c).dim() == 0);
    CHECK(subspace_intersect(a, b).dim() == 0);
    CHECK(a.dim() + b.dim() + c.dim() == 5);  // 5 - 4 = 1 > 0
}

TEST_CASE("complement columns") {
    const Field f = Field::prime(5);
    const Matrix v = Matrix::from_rows(f, {{1}, {2}, {3}});
    const Matrix c = complement_columns(v);
    CHECK(c.cols() == 2);
    CHECK(rank(hconcat(v, c)) == 3);
    CHECK(complement_columns(Matrix::identity(f, 3)).cols() == 0);
}

TEST_CASE("mds vector family") {
    const Field f3 = Field::prime(3);
    CHECK(mds_vector_family(3, 2, f3).to_rows() == std::vector<std::vector<std::int64_t>>{{1, 1, 1}, {0, 1, 2}});
    CHECK(mds_vector_family(5, 5, Field::prime(2)) == Matrix::identity(Field::prime(2), 5));
    CHECK_THROWS_AS(mds_vector_family(4, 2, f3), FieldTooSmall);

    const Field f11 = Field::prime(11);
    const Matrix z = mds_vector_family(8, 7, f11);
    for (std::size_t drop = 0; drop < 8; ++drop) {
        std::vector<std::size_t> keep;
        for (std::size_t c = 0; c < 8; ++c)
            if (c != drop) keep.push_back(c);
        CHECK(ref::rank_mod(z.select_columns(keep).to_rows(), 11) == 7);
    }

    std::mt19937_64 rng(3);
    const Field f13 = Field::prime(13);
    const Matrix w = mds_vector_family(13, 4, f13);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::size_t> cols(13);
        for (std::size_t c = 0; c < 13; ++c) cols[c] = c;
        std::shuffle(cols.begin(), cols.end(), rng);
        cols.resize(4);
        CHECK(ref::rank_mod(w.select_columns(cols).to_rows(), 13) == 4);
    }
}

TEST_CASE("spread family") {
    CHECK_THROWS_AS(spread_family(3), OddDimension);
    const auto two = spread_family(2);
    REQUIRE(two.size() == 3);
    std::set<std::vector<std::vector<std::int64_t>>> lines;
    for (const Subspace& s : two) lines.insert(s.basis().to_rows());
    CHECK(lines == std::set<std::vector<std::vector<std::int64_t>>>{{{1}, {0}}, {{0}, {1}}, {{1}, {1}}});
    for (const unsigned n : {4u, 6u, 8u}) {
        const auto family = spread_family(n);
        CHECK(family.size() == (std::size_t{1} << (n / 2)) + 1);
        for (std::size_t i = 0; i < family.size(); ++i) {
            CHECK(family[i].dim() == n / 2);
            for (std::size_t j = i + 1; j < family.size(); ++j)
                CHECK(ref::rank_mod(hconcat(family[i].basis(), family[j].basis()).to_rows(), 2) == n);
        }
    }
    CHECK(spread_family(6).size() == (64 - 1) / (8 - 1));
    CHECK(spread_family(8, 5).size() == 5);
}
