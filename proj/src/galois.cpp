#include "icx/galois.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "icx/errors.hpp"

namespace icx {

namespace {

// Smallest irreducible polynomial of each degree 1..32 over GF(2).
constexpr std::array<std::uint64_t, 32> kDefaultPolys = {
    0x2,        0x7,        0xb,        0x13,       0x25,        0x43,       0x83,       0x11b,
    0x203,      0x409,      0x805,      0x1009,     0x201b,      0x4021,     0x8003,     0x1002b,
    0x20009,    0x40009,    0x80027,    0x100009,   0x200005,    0x400003,   0x800021,   0x100001b,
    0x2000009,  0x400001b,  0x8000027,  0x10000003, 0x20000005,  0x40000003, 0x80000009, 0x10000008d,
};

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    const int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) a ^= b << (da - db);
    return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
    const int df = poly_degree(f);
    const std::uint64_t top = std::uint64_t{1} << df;
    a = poly_mod(a, f);
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= f;
    }
    return r;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        const std::uint64_t r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t smallest_prime_at_least(std::uint64_t n) {
    if (n <= 2) return 2;
    while (!is_prime(n)) ++n;
    return n;
}

bool is_irreducible_gf2(std::uint64_t poly) {
    const int m = poly_degree(poly);
    if (m < 1 || m > 32) return false;
    const std::uint64_t x = poly_mod(2, poly);
    // x^(2^k) mod poly
    auto frobenius = [&](int k) {
        std::uint64_t r = x;
        for (int i = 0; i < k; ++i) r = poly_mulmod(r, r, poly);
        return r;
    };
    if (frobenius(m) != x) return false;
    for (std::uint64_t q : prime_factors(static_cast<std::uint64_t>(m))) {
        if (poly_gcd(poly, frobenius(m / static_cast<int>(q)) ^ x) != 1) return false;
    }
    return true;
}

std::uint64_t default_gf2_poly(unsigned m) {
    if (m < 1 || m > 32) throw InvalidField("GF(2^m) requires 1 <= m <= 32");
    return kDefaultPolys[m - 1];
}

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw InvalidField("GF(p) requires a prime 2 <= p < 2^31, got " + std::to_string(p));
    Field f;
    f.kind_ = FieldKind::prime;
    f.p_ = static_cast<std::uint32_t>(p);
    f.m_ = 1;
    f.poly_ = 0;
    f.order_ = p;
    return f;
}

Field Field::gf2m(unsigned m) { return gf2m(m, default_gf2_poly(m)); }

Field Field::gf2m(unsigned m, std::uint64_t poly) {
    if (m < 1 || m > 32) throw InvalidField("GF(2^m) requires 1 <= m <= 32");
    if (poly_degree(poly) != static_cast<int>(m))
        throw InvalidField("reduction polynomial must have degree " + std::to_string(m));
    if (!is_irreducible_gf2(poly)) throw InvalidField("reduction polynomial is reducible");
    Field f;
    f.kind_ = FieldKind::binary_extension;
    f.p_ = 2;
    f.m_ = m;
    f.poly_ = poly;
    f.order_ = std::uint64_t{1} << m;
    return f;
}

Element Field::gf2m_mul(Element a, Element b) const noexcept {
    std::uint64_t prod = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1) prod ^= aa;
        b >>= 1;
        aa <<= 1;
    }
    for (int d = poly_degree(prod); d >= static_cast<int>(m_); d = poly_degree(prod)) prod ^= poly_ << (d - m_);
    return static_cast<Element>(prod);
}

Element Field::pow(Element a, std::uint64_t e) const noexcept {
    Element result = 1;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Element Field::inv(Element a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in " + name());
    // a^(q-2) = a^-1 in the multiplicative group of order q-1.
    return pow(a, order_ - 2);
}

Element Field::from_int(std::int64_t v) const {
    if (kind_ == FieldKind::prime) {
        const std::int64_t p = p_;
        std::int64_t r = v % p;
        if (r < 0) r += p;
        return static_cast<Element>(r);
    }
    const std::uint64_t mag = v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
    if (mag >= order_) throw FieldMismatch("integer " + std::to_string(v) + " is not an element of " + name());
    const auto e = static_cast<Element>(mag);
    return v < 0 ? neg(e) : e;
}

std::string Field::name() const {
    if (kind_ == FieldKind::prime) return "GF(" + std::to_string(p_) + ")";
    return "GF(2^" + std::to_string(m_) + ")";
}

Element field_arith(const Field& f, Element a, Element b, ArithOp op) {
    const bool binary = op == ArithOp::add || op == ArithOp::mul;
    if (!f.is_canonical(a) || (binary && !f.is_canonical(b)))
        throw FieldMismatch("operand is not a canonical element of " + f.name());
    switch (op) {
        case ArithOp::add: return f.add(a, b);
        case ArithOp::mul: return f.mul(a, b);
        case ArithOp::inv: return f.inv(a);
        case ArithOp::neg: return f.neg(a);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
    }
    return m;
}

Matrix Matrix::unit_columns(const Field& f, std::size_t n, std::span<const std::size_t> cols) {
    Matrix m(f, n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= n) throw DimensionMismatch("unit column index out of range");
        m(cols[j], j) = 1;
    }
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, Element v) {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    if (!field_.is_canonical(v)) throw FieldMismatch("entry is not a canonical element of " + field_.name());
    (*this)(r, c) = v;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::column(std::size_t c) const {
    const std::size_t idx[] = {c};
    return select_columns(idx);
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
    Matrix out(field_, rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw DimensionMismatch("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, cols[j]);
    }
    return out;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Element e) { return e == 0; });
}

std::vector<std::vector<std::int64_t>> Matrix::to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field()))
        throw FieldMismatch("matrices over " + a.field().name() + " and " + b.field().name());
}

}  // namespace

Matrix multiply(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw DimensionMismatch("multiply: inner dimensions differ");
    const Field& f = a.field();
    Matrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Element aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
        }
    return c;
}

Matrix add(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("add: shapes differ");
    Matrix c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
    return c;
}

Matrix scale(const Matrix& a, Element s) {
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().mul(a(i, j), s);
    return c;
}

Matrix hconcat(const Field& f, std::size_t rows, std::span<const Matrix> blocks) {
    std::size_t total = 0;
    for (const Matrix& b : blocks) {
        if (!(b.field() == f)) throw FieldMismatch("hconcat: mixed fields");
        if (b.rows() != rows) throw DimensionMismatch("hconcat: row counts differ");
        total += b.cols();
    }
    Matrix out(f, rows, total);
    std::size_t off = 0;
    for (const Matrix& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, off + j) = b(i, j);
        off += b.cols();
    }
    return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    const Matrix blocks[] = {a, b};
    return hconcat(a.field(), a.rows(), blocks);
}

Matrix vconcat(const Matrix& a, const Matrix& b) { return hconcat(a.transpose(), b.transpose()).transpose(); }

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
    const Field& f = m.field();
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        const Element scale_by = f.inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), scale_by);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Element factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return m;
}

std::size_t rank(const Matrix& m) {
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    return pivots.size();
}

RankNullspace rank_and_nullspace(const Matrix& m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    const Matrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix ns(f, m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        ns(fc, k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) ns(pivots[i], k) = f.neg(r(i, fc));
    }
    return {pivots.size(), std::move(ns)};
}

Matrix left_nullspace(const Matrix& m) { return rank_and_nullspace(m.transpose()).nullspace.transpose(); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
    const Field& f = a.field();
    std::vector<std::size_t> pivots;
    const Matrix r = rref(hconcat(a, b), &pivots);
    Matrix x(f, a.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = r(i, a.cols() + j);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, Matrix::identity(m.field(), m.rows()));
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(const Matrix& columns) {
    std::vector<std::size_t> pivots;
    const Matrix r = rref(columns.transpose(), &pivots);
    Matrix basis(columns.field(), columns.rows(), pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < columns.rows(); ++i) basis(i, j) = r(j, i);
    return Subspace(std::move(basis));
}

Subspace Subspace::zero(const Field& f, std::size_t ambient_dim) { return Subspace(Matrix(f, ambient_dim, 0)); }

Subspace Subspace::whole(const Field& f, std::size_t ambient_dim) {
    return Subspace(Matrix::identity(f, ambient_dim));
}

bool Subspace::contains(const Matrix& columns) const {
    if (columns.rows() != ambient_dim()) throw DimensionMismatch("contains: ambient dimension differs");
    return rank(hconcat(basis_, columns)) == dim();
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("subspace_intersect: mixed fields");
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace_intersect: ambient dimensions differ");
    const Field& f = a.field();
    const std::size_t n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(f, n);
    // [A | -B] (y; z) = 0  <=>  A y = B z, which lies in both spans.
    const Matrix kernel = rank_and_nullspace(hconcat(a.basis(), scale(b.basis(), f.neg(1)))).nullspace;
    Matrix y(f, a.dim(), kernel.cols());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < kernel.cols(); ++j) y(i, j) = kernel(i, j);
    return Subspace::span(multiply(a.basis(), y));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace_sum: ambient dimensions differ");
    return Subspace::span(hconcat(a.basis(), b.basis()));
}

Matrix complement_columns(const Matrix& m) {
    const Field& f = m.field();
    const std::size_t n = m.rows();
    Matrix current = Subspace::span(m).basis();
    std::vector<std::size_t> picked;
    for (std::size_t e = 0; e < n && current.cols() < n; ++e) {
        const std::size_t idx[] = {e};
        Matrix extended = hconcat(current, Matrix::unit_columns(f, n, idx));
        if (rank(extended) > current.cols()) {
            current = std::move(extended);
            picked.push_back(e);
        }
    }
    return Matrix::unit_columns(f, n, picked);
}

// ---------------------------------------------------------------------------
// Structured families

Matrix mds_vector_family(std::size_t count, std::size_t dim, const Field& f) {
    if (dim < 1) throw DimensionMismatch("mds_vector_family: dim must be >= 1");
    if (count <= dim) {
        std::vector<std::size_t> idx(count);
        for (std::size_t i = 0; i < count; ++i) idx[i] = i;
        return Matrix::unit_columns(f, dim, idx);
    }
    if (f.order() < count)
        throw FieldTooSmall(f.name() + " has fewer than " + std::to_string(count) + " distinct evaluation points");
    Matrix m(f, dim, count);
    for (std::size_t t = 0; t < count; ++t) {
        const Element x = static_cast<Element>(t);
        Element power = 1;
        for (std::size_t r = 0; r < dim; ++r) {
            m(r, t) = power;
            power = f.mul(power, x);
        }
    }
    return m;
}

std::vector<Subspace> spread_family(unsigned n, std::optional<std::size_t> limit) {
    if (n % 2 != 0) throw OddDimension("spread_family needs an even dimension, got " + std::to_string(n));
    if (n < 2 || n > 32) throw DimensionMismatch("spread_family supports 2 <= n <= 32");
    const Field big = Field::gf2m(n);
    const Field gf2 = Field::prime(2);
    const unsigned h = n / 2;
    const std::uint64_t group = big.order() - 1;

    // Smallest primitive element of GF(2^n).
    const auto factors = prime_factors(group);
    Element g = 1;
    for (std::uint64_t cand = 2; cand < big.order(); ++cand) {
        const auto c = static_cast<Element>(cand);
        const bool primitive =
            std::all_of(factors.begin(), factors.end(), [&](std::uint64_t q) { return big.pow(c, group / q) != 1; });
        if (primitive) {
            g = c;
            break;
        }
    }
    if (n == 2) g = 2;  // GF(4)* has order 3; x generates it

    // beta generates GF(2^h)*, so 1, beta, ..., beta^{h-1} is a GF(2)-basis of the subfield.
    const std::uint64_t cosets = (std::uint64_t{1} << h) + 1;
    const Element beta = big.pow(g, cosets);
    std::vector<Element> sub_basis(h);
    sub_basis[0] = 1;
    for (unsigned t = 1; t < h; ++t) sub_basis[t] = big.mul(sub_basis[t - 1], beta);

    const std::size_t total = static_cast<std::size_t>(cosets);
    const std::size_t count = limit ? std::min(*limit, total) : total;
    std::vector<Subspace> out;
    out.reserve(count);
    Element rep = 1;
    for (std::size_t i = 0; i < count; ++i) {
        Matrix cols(gf2, n, h);
        for (unsigned t = 0; t < h; ++t) {
            const Element v = big.mul(sub_basis[t], rep);
            for (unsigned bit = 0; bit < n; ++bit) cols(bit, t) = (v >> bit) & 1u;
        }
        out.push_back(Subspace::span(cols));
        rep = big.mul(rep, g);
    }
    return out;
}

}  // namespace icx
