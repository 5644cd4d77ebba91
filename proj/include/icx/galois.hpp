#pragma once

// Finite fields GF(p) and GF(2^m), dense matrices over them, column-space
// subspaces and the structured vector families used by the constructions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace icx {

/// Canonical field element. GF(p): residue in [0, p). GF(2^m): polynomial
/// coefficients packed into bits, bit t holding the coefficient of x^t.
using Element = std::uint32_t;

enum class FieldKind { prime, binary_extension };

enum class ArithOp { add, mul, inv, neg };

class Field {
public:
    /// GF(p), 2 <= p < 2^31. Throws InvalidField if p is not prime.
    static Field prime(std::uint64_t p);
    /// GF(2^m) with the default (smallest) irreducible reduction polynomial.
    static Field gf2m(unsigned m);
    /// GF(2^m) with an explicit reduction polynomial, bit m set.
    static Field gf2m(unsigned m, std::uint64_t poly);

    FieldKind kind() const noexcept { return kind_; }
    std::uint32_t characteristic() const noexcept { return kind_ == FieldKind::prime ? p_ : 2; }
    unsigned degree() const noexcept { return m_; }
    std::uint64_t poly() const noexcept { return poly_; }
    /// Number of elements.
    std::uint64_t order() const noexcept { return order_; }

    bool is_canonical(Element a) const noexcept { return a < order_; }

    Element add(Element a, Element b) const noexcept {
        if (kind_ == FieldKind::binary_extension) return a ^ b;
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element neg(Element a) const noexcept {
        if (kind_ == FieldKind::binary_extension || a == 0) return a;
        return p_ - a;
    }
    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
    Element mul(Element a, Element b) const noexcept {
        if (kind_ == FieldKind::prime)
            return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
        return gf2m_mul(a, b);
    }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t e) const noexcept;

    /// Maps an integer into the field: residue mod p, or for GF(2^m) the
    /// bit pattern of |v| with a negative sign applied through neg().
    Element from_int(std::int64_t v) const;

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.kind_ == b.kind_ && a.p_ == b.p_ && a.m_ == b.m_ && a.poly_ == b.poly_;
    }

private:
    Field() = default;
    Element gf2m_mul(Element a, Element b) const noexcept;

    FieldKind kind_ = FieldKind::prime;
    std::uint32_t p_ = 2;
    unsigned m_ = 1;
    std::uint64_t poly_ = 0;
    std::uint64_t order_ = 2;
};

/// Exact arithmetic entry point. `b` is ignored for the unary ops.
Element field_arith(const Field& f, Element a, Element b, ArithOp op);

bool is_prime(std::uint64_t n);
std::uint64_t smallest_prime_at_least(std::uint64_t n);

/// Rabin irreducibility test over GF(2). `poly` has degree = highest set bit.
bool is_irreducible_gf2(std::uint64_t poly);
/// Lexicographically smallest irreducible polynomial of degree m, 1 <= m <= 32.
std::uint64_t default_gf2_poly(unsigned m);

class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    /// Entries go through Field::from_int, so -1 maps to the field's -1.
    static Matrix from_rows(const Field& f, const std::vector<std::vector<std::int64_t>>& rows);
    /// Columns j in `cols` of the n x n identity, in order.
    static Matrix unit_columns(const Field& f, std::size_t n, std::span<const std::size_t> cols);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Element operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Element& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    /// Bounds- and canonical-checked write.
    void set(std::size_t r, std::size_t c, Element v);

    Matrix transpose() const;
    Matrix column(std::size_t c) const;
    Matrix select_columns(std::span<const std::size_t> cols) const;
    bool is_zero() const noexcept;

    std::vector<std::vector<std::int64_t>> to_rows() const;

    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, Element s);
/// Horizontal concatenation. All blocks must share field and row count;
/// `rows` fixes the row count when the list is empty.
Matrix hconcat(const Field& f, std::size_t rows, std::span<const Matrix> blocks);
Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);

/// Reduced row echelon form; pivot column indices are appended to `pivots`.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);

struct RankNullspace {
    std::size_t rank;
    /// cols x nullity, columns span {x : m x = 0}.
    Matrix nullspace;
};
RankNullspace rank_and_nullspace(const Matrix& m);

/// Rows span {u : u m = 0}; (rows(m) - rank) x rows(m).
Matrix left_nullspace(const Matrix& m);
/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Column span of a matrix, kept as a basis in reduced column echelon form
/// so that equal subspaces have identical bases.
class Subspace {
public:
    static Subspace span(const Matrix& columns);
    static Subspace zero(const Field& f, std::size_t ambient_dim);
    static Subspace whole(const Field& f, std::size_t ambient_dim);

    const Field& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.rows(); }
    std::size_t dim() const noexcept { return basis_.cols(); }
    const Matrix& basis() const noexcept { return basis_; }

    bool contains(const Matrix& columns) const;

    friend bool operator==(const Subspace& a, const Subspace& b) noexcept { return a.basis_ == b.basis_; }

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

Subspace subspace_intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Columns completing colspan(m) to the whole space: unit vectors picked
/// greedily in index order. Result is n x (n - rank(m)).
Matrix complement_columns(const Matrix& m);

/// d x T matrix whose every min(d, T) columns are independent. Uses the
/// first T unit vectors when T <= d, otherwise Vandermonde columns
/// (1, x, x^2, ...) at x = 0, 1, ..., T-1.
Matrix mds_vector_family(std::size_t count, std::size_t dim, const Field& f);

/// The 2^{n/2}+1 subspaces of GF(2)^n of dimension n/2 that meet pairwise in
/// {0}: the GF(2^{n/2})-lines of GF(2^n). `limit` truncates the list.
std::vector<Subspace> spread_family(unsigned n, std::optional<std::size_t> limit = std::nullopt);

}  // namespace icx
