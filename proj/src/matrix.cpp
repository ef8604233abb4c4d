#include "idem/matrix.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace idem {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows_ == 0 || cols_ == 0) throw dimension_error("matrix dimensions must be positive");
    entries_.reserve(rows_ * cols_);
    for (std::size_t k = 0; k < rows_ * cols_; ++k) entries_.push_back(ring_.zero());
}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
}

Matrix Matrix::zero(const Ring& ring, std::size_t rows, std::size_t cols) {
    return Matrix(ring, rows, cols);
}

Matrix Matrix::from_rows(const Ring& ring,
                         const std::vector<std::vector<RingElement>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw dimension_error("matrix dimensions must be positive");
    Matrix m(ring, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw dimension_error("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) {
            if (rows[i][j].ring() != ring)
                throw ring_mismatch_error("matrix entry from a different ring");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::from_strings(const Ring& ring,
                            const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw dimension_error("matrix dimensions must be positive");
    Matrix m(ring, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw dimension_error("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = ring.parse(rows[i][j]);
    }
    return m;
}

const RingElement& Matrix::operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
}

RingElement& Matrix::operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
}

bool Matrix::operator==(const Matrix& other) const {
    if (ring_ != other.ring_ || rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != other.entries_[k]) return false;
    return true;
}

std::vector<RingElement> Matrix::row(std::size_t i) const {
    std::vector<RingElement> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back((*this)(i, j));
    return out;
}

std::vector<RingElement> Matrix::col(std::size_t j) const {
    std::vector<RingElement> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
}

bool Matrix::row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) return false;
    return true;
}

bool Matrix::col_is_zero(std::size_t j) const {
    for (std::size_t i = 0; i < rows_; ++i)
        if (!(*this)(i, j).is_zero()) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
        }
    return true;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.ring() != b.ring()) throw ring_mismatch_error("matrix product over different rings");
    if (a.cols() != b.rows()) throw dimension_error("matrix product dimension mismatch");
    Matrix out(a.ring(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j).is_zero()) continue;
                out(i, j) = out(i, j) + a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.ring() != b.ring()) throw ring_mismatch_error("matrix sum over different rings");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("matrix sum dimension mismatch");
    Matrix out(a.ring(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator-(const Matrix& a) {
    Matrix out(a.ring(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = -a(i, j);
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.ring(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

bool is_idempotent(const Matrix& e) {
    if (!e.is_square()) throw dimension_error("idempotency is defined for square matrices");
    return e * e == e;
}

namespace {

// Fraction-free (Bareiss) elimination; valid over integral domains.
RingElement bareiss_determinant(const Matrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::vector<RingElement>> m;
    m.reserve(n);
    for (std::size_t i = 0; i < n; ++i) m.push_back(a.row(i));

    const Ring& ring = a.ring();
    RingElement prev = ring.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return ring.zero();
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = ring.zero();
        }
        prev = m[k][k];
    }
    RingElement det = m[n - 1][n - 1];
    return negate ? -det : det;
}

// Laplace expansion with memoization over column masks; division-free, so it
// is correct over rings with zero divisors.
RingElement cofactor_determinant(const Matrix& a) {
    const std::size_t n = a.rows();
    std::map<unsigned long, RingElement> memo;
    // dp over the set of still-available columns, expanding along row
    // (n - popcount(mask)).
    std::function<RingElement(unsigned long)> det = [&](unsigned long mask) -> RingElement {
        if (mask == 0) return a.ring().one();
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::size_t row = n - static_cast<std::size_t>(__builtin_popcountl(mask));
        RingElement acc = a.ring().zero();
        bool positive = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (1ul << j))) continue;
            if (!a(row, j).is_zero()) {
                RingElement sub = det(mask & ~(1ul << j));
                RingElement term = a(row, j) * sub;
                acc = positive ? acc + term : acc - term;
            }
            positive = !positive;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return det((1ul << n) - 1);
}

}  // namespace

RingElement determinant(const Matrix& a) {
    if (!a.is_square()) throw dimension_error("determinant of a non-square matrix");
    if (a.ring().is_integral_domain()) return bareiss_determinant(a);
    return cofactor_determinant(a);
}

Matrix elementary(std::size_t n, std::size_t i, std::size_t j, const RingElement& a) {
    if (i == j) throw dimension_error("elementary matrix requires i != j");
    if (i < 1 || i > n || j < 1 || j > n) throw dimension_error("elementary index out of range");
    Matrix m = Matrix::identity(a.ring(), n);
    m(i - 1, j - 1) = a;
    return m;
}

Matrix permutation_matrix(const Ring& ring, const Permutation& images) {
    const std::size_t n = images.size();
    std::vector<bool> hit(n, false);
    for (std::size_t v : images) {
        if (v < 1 || v > n || hit[v - 1])
            throw dimension_error("permutation images must be a bijection on {1..n}");
        hit[v - 1] = true;
    }
    Matrix m(ring, n, n);
    for (std::size_t k = 0; k < n; ++k) m(images[k] - 1, k) = ring.one();
    return m;
}

Permutation transposition(std::size_t n, std::size_t i, std::size_t j) {
    Permutation p = identity_permutation(n);
    std::swap(p[i - 1], p[j - 1]);
    return p;
}

Permutation identity_permutation(std::size_t n) {
    Permutation p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = k + 1;
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) out[k] = a[b[k] - 1];
    return out;
}

Permutation inverse_permutation(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) out[p[k] - 1] = k + 1;
    return out;
}

std::vector<Matrix> transposition_as_elementary_diagonal(const Ring& ring, std::size_t n,
                                                         std::size_t i, std::size_t j) {
    if (i == j) throw dimension_error("transposition requires i != j");
    Matrix d = Matrix::identity(ring, n);
    d(i - 1, i - 1) = -ring.one();
    return {elementary(n, i, j, ring.one()), elementary(n, j, i, -ring.one()),
            elementary(n, i, j, ring.one()), d};
}

Matrix block_pad(const Matrix& b, std::size_t r) {
    if (!b.is_square()) throw dimension_error("block_pad requires a square matrix");
    if (r == 0) throw dimension_error("block_pad requires r >= 1");
    Matrix out(b.ring(), b.rows() + r, b.cols() + r);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = b(i, j);
    return out;
}

Matrix from_blocks(const Matrix& tl, const Matrix& tr, const Matrix& bl, const Matrix& br) {
    if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() ||
        tr.cols() != br.cols())
        throw dimension_error("block sizes do not line up");
    Matrix out(tl.ring(), tl.rows() + bl.rows(), tl.cols() + tr.cols());
    for (std::size_t i = 0; i < tl.rows(); ++i) {
        for (std::size_t j = 0; j < tl.cols(); ++j) out(i, j) = tl(i, j);
        for (std::size_t j = 0; j < tr.cols(); ++j) out(i, tl.cols() + j) = tr(i, j);
    }
    for (std::size_t i = 0; i < bl.rows(); ++i) {
        for (std::size_t j = 0; j < bl.cols(); ++j) out(tl.rows() + i, j) = bl(i, j);
        for (std::size_t j = 0; j < br.cols(); ++j) out(tl.rows() + i, tl.cols() + j) = br(i, j);
    }
    return out;
}

Matrix diag_join_identity(const Matrix& b, std::size_t r) {
    if (!b.is_square()) throw dimension_error("diag_join_identity requires a square matrix");
    Matrix out(b.ring(), b.rows() + r, b.cols() + r);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = b(i, j);
    for (std::size_t k = 0; k < r; ++k) out(b.rows() + k, b.cols() + k) = b.ring().one();
    return out;
}

Matrix submatrix(const Matrix& a, const std::vector<std::size_t>& row_idx,
                 const std::vector<std::size_t>& col_idx) {
    Matrix out(a.ring(), row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = a(row_idx[i], col_idx[j]);
    return out;
}

Matrix with_zeroed_row(const Matrix& a, std::size_t i) {
    Matrix out(a);
    for (std::size_t j = 0; j < a.cols(); ++j) out(i - 1, j) = a.ring().zero();
    return out;
}

Matrix with_zeroed_col(const Matrix& a, std::size_t j) {
    Matrix out(a);
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j - 1) = a.ring().zero();
    return out;
}

bool is_upper_triangular(const Matrix& a) {
    if (!a.is_square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!a(i, j).is_zero()) return false;
    return true;
}

bool is_lower_triangular(const Matrix& a) {
    if (!a.is_square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) return false;
    return true;
}

bool is_diagonal(const Matrix& a) { return is_upper_triangular(a) && is_lower_triangular(a); }

std::optional<ElementaryWitness> as_elementary(const Matrix& m) {
    if (!m.is_square()) return std::nullopt;
    const std::size_t n = m.rows();
    if (n < 2) return std::nullopt;
    std::optional<ElementaryWitness> witness;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                if (!m(i, i).is_one()) return std::nullopt;
            } else if (!m(i, j).is_zero()) {
                if (witness) return std::nullopt;  // more than one off-diagonal entry
                witness = ElementaryWitness{i + 1, j + 1, m(i, j)};
            }
        }
    }
    if (!witness) witness = ElementaryWitness{1, 2, m.ring().zero()};
    return witness;
}

std::optional<Permutation> as_permutation(const Matrix& m) {
    if (!m.is_square()) return std::nullopt;
    const std::size_t n = m.rows();
    Permutation images(n, 0);
    std::vector<bool> row_used(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t count = 0, where = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (m(i, j).is_zero()) continue;
            if (!m(i, j).is_one()) return std::nullopt;
            ++count;
            where = i;
        }
        if (count != 1 || row_used[where]) return std::nullopt;
        row_used[where] = true;
        images[j] = where + 1;
    }
    return images;
}

namespace {

// Gauss-Jordan inverse; fields only.
std::optional<Matrix> field_inverse(const Matrix& a) {
    const std::size_t n = a.rows();
    const Ring& ring = a.ring();
    Matrix m(a);
    Matrix inv = Matrix::identity(ring, n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        }
        RingElement s = ring_inv(m(k, k));
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) = s * m(k, j);
            inv(k, j) = s * inv(k, j);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k).is_zero()) continue;
            RingElement f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = m(i, j) - f * m(k, j);
                inv(i, j) = inv(i, j) - f * inv(k, j);
            }
        }
    }
    return inv;
}

// Adjugate-based inverse; any commutative ring with unit determinant.
std::optional<Matrix> adjugate_inverse(const Matrix& a) {
    const std::size_t n = a.rows();
    RingElement det = determinant(a);
    if (!is_unit(det)) return std::nullopt;
    RingElement det_inv = ring_inv(det);
    if (n == 1) {
        Matrix out(a.ring(), 1, 1);
        out(0, 0) = det_inv;
        return out;
    }
    Matrix adj(a.ring(), n, n);
    std::vector<std::size_t> all(n);
    for (std::size_t k = 0; k < n; ++k) all[k] = k;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> rows;
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) rows.push_back(k);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> cols;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) cols.push_back(k);
            RingElement minor = determinant(submatrix(a, rows, cols));
            // adj = transpose of the cofactor matrix
            adj(j, i) = ((i + j) % 2 == 0) ? minor : -minor;
        }
    }
    Matrix out(a.ring(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = det_inv * adj(i, j);
    return out;
}

}  // namespace

std::optional<Matrix> try_inverse(const Matrix& a) {
    if (!a.is_square()) throw dimension_error("inverse of a non-square matrix");
    if (a.ring().is_field()) return field_inverse(a);
    return adjugate_inverse(a);
}

Matrix inverse(const Matrix& a) {
    auto inv = try_inverse(a);
    if (!inv) throw not_a_unit_error("matrix is not invertible");
    return *inv;
}

std::string to_string(QuasiVariant v) {
    switch (v) {
        case QuasiVariant::PermutationLeft: return "quasi-permutation-left";
        case QuasiVariant::PermutationRight: return "quasi-permutation-right";
        case QuasiVariant::ElementaryLeft: return "quasi-elementary-left";
        case QuasiVariant::ElementaryRight: return "quasi-elementary-right";
        case QuasiVariant::None: return "none";
    }
    return "?";
}

namespace {

// A = (1-e_ii)P with P a permutation: rows other than i must be distinct
// standard basis rows; the missing basis row completes the permutation.
std::optional<Matrix> permutation_core_left(const Matrix& a, std::size_t i0) {
    const std::size_t n = a.rows();
    std::vector<bool> used(n, false);
    Matrix core(a);
    for (std::size_t r = 0; r < n; ++r) {
        if (r == i0) continue;
        std::size_t count = 0, where = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (a(r, c).is_zero()) continue;
            if (!a(r, c).is_one()) return std::nullopt;
            ++count;
            where = c;
        }
        if (count != 1 || used[where]) return std::nullopt;
        used[where] = true;
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (!used[c]) {
            core(i0, c) = a.ring().one();
            return core;
        }
    }
    return std::nullopt;
}

// A = (1-e_ii)Q with Q = I + b e_kl elementary: restoring the diagonal 1 in
// row i must leave the identity plus at most one off-diagonal entry.
std::optional<Matrix> elementary_core_left(const Matrix& a, std::size_t i0) {
    const std::size_t n = a.rows();
    Matrix core(a);
    core(i0, i0) = a.ring().one();
    std::size_t off_diag = 0;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (r == c) {
                if (!core(r, c).is_one()) return std::nullopt;
            } else if (!core(r, c).is_zero()) {
                if (++off_diag > 1) return std::nullopt;
            }
        }
    }
    return core;
}

}  // namespace

QuasiKind classify_quasi(const Matrix& a) {
    if (!a.is_square()) throw dimension_error("quasi classification needs a square matrix");
    const std::size_t n = a.rows();
    Matrix at = transpose(a);
    for (std::size_t i = 0; i < n; ++i) {
        if (!a.row_is_zero(i)) continue;
        if (auto core = permutation_core_left(a, i))
            return {QuasiVariant::PermutationLeft, i + 1, std::move(core)};
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!a.col_is_zero(j)) continue;
        if (auto core = permutation_core_left(at, j))
            return {QuasiVariant::PermutationRight, j + 1, transpose(*core)};
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!a.row_is_zero(i)) continue;
        if (auto core = elementary_core_left(a, i))
            return {QuasiVariant::ElementaryLeft, i + 1, std::move(core)};
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!a.col_is_zero(j)) continue;
        if (auto core = elementary_core_left(at, j))
            return {QuasiVariant::ElementaryRight, j + 1, transpose(*core)};
    }
    return {};
}

Matrix reconstruct_quasi(const QuasiKind& kind) {
    if (kind.variant == QuasiVariant::None || !kind.core)
        throw dimension_error("cannot reconstruct from a None classification");
    switch (kind.variant) {
        case QuasiVariant::PermutationLeft:
        case QuasiVariant::ElementaryLeft:
            return with_zeroed_row(*kind.core, kind.zeroed_index);
        case QuasiVariant::PermutationRight:
        case QuasiVariant::ElementaryRight:
            return with_zeroed_col(*kind.core, kind.zeroed_index);
        default: throw dimension_error("cannot reconstruct from a None classification");
    }
}

}  // namespace idem
