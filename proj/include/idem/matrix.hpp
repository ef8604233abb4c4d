#pragma once

#include <optional>
#include <vector>

#include "idem/ring.hpp"

namespace idem {

/// Dense rectangular matrix over one ring, exact entries, row-major storage.
/// Value semantics: operations return new matrices.  Entry access is 0-based;
/// the spec-level constructors and witnesses below (elementary, permutations,
/// zeroed indices) are 1-based, matching the e_ij convention of the domain.
class Matrix {
  public:
    Matrix(Ring ring, std::size_t rows, std::size_t cols);

    static Matrix identity(const Ring& ring, std::size_t n);
    static Matrix zero(const Ring& ring, std::size_t rows, std::size_t cols);
    static Matrix from_rows(const Ring& ring,
                            const std::vector<std::vector<RingElement>>& rows);
    /// Rows of entry strings in the ring's element syntax.
    static Matrix from_strings(const Ring& ring,
                               const std::vector<std::vector<std::string>>& rows);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const RingElement& operator()(std::size_t i, std::size_t j) const;
    RingElement& operator()(std::size_t i, std::size_t j);

    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    std::vector<RingElement> row(std::size_t i) const;
    std::vector<RingElement> col(std::size_t j) const;
    bool row_is_zero(std::size_t i) const;
    bool col_is_zero(std::size_t j) const;
    bool is_zero() const;
    bool is_identity() const;

    std::string str() const;

  private:
    Ring ring_;
    std::size_t rows_, cols_;
    std::vector<RingElement> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);

Matrix transpose(const Matrix& a);

/// True iff E is square and E*E == E exactly.
bool is_idempotent(const Matrix& e);

/// Exact determinant: fraction-free elimination over integral domains,
/// cofactor expansion over rings with zero divisors.
RingElement determinant(const Matrix& a);

/// I_n + a*e_ij with i != j (1-based).  Always invertible.
Matrix elementary(std::size_t n, std::size_t i, std::size_t j, const RingElement& a);

/// 1-based permutation: images[k-1] = sigma(k); the matrix sends e_k to
/// e_sigma(k), i.e. has a 1 in row sigma(k) of column k.
using Permutation = std::vector<std::size_t>;
Matrix permutation_matrix(const Ring& ring, const Permutation& images);

Permutation transposition(std::size_t n, std::size_t i, std::size_t j);
Permutation identity_permutation(std::size_t n);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse_permutation(const Permutation& p);

/// [E1, E2, E3, D] with the E's elementary and D diagonal carrying a single
/// -1, whose ordered product is the (i j) transposition matrix:
/// T_ij = E(i,j,1) * E(j,i,-1) * E(i,j,1) * diag(..., -1 at i, ...).
std::vector<Matrix> transposition_as_elementary_diagonal(const Ring& ring, std::size_t n,
                                                         std::size_t i, std::size_t j);

/// (n+r)x(n+r) matrix with B in the top-left corner and zeros elsewhere.
Matrix block_pad(const Matrix& b, std::size_t r);

/// Block assembly [[tl, tr], [bl, br]] with matching edge sizes.
Matrix from_blocks(const Matrix& tl, const Matrix& tr, const Matrix& bl, const Matrix& br);

/// B ⊕ I_r.
Matrix diag_join_identity(const Matrix& b, std::size_t r);

Matrix submatrix(const Matrix& a, const std::vector<std::size_t>& row_idx,
                 const std::vector<std::size_t>& col_idx);  // 0-based index lists

Matrix with_zeroed_row(const Matrix& a, std::size_t i);     // 1-based
Matrix with_zeroed_col(const Matrix& a, std::size_t j);     // 1-based

bool is_upper_triangular(const Matrix& a);
bool is_lower_triangular(const Matrix& a);
bool is_diagonal(const Matrix& a);

/// Witness (i, j, a) with M == I + a*e_ij, i != j; nullopt when M is not of
/// that shape.  The identity is reported with a == 0 and (i, j) = (1, 2).
struct ElementaryWitness {
    std::size_t i, j;  // 1-based
    RingElement a;
};
std::optional<ElementaryWitness> as_elementary(const Matrix& m);

std::optional<Permutation> as_permutation(const Matrix& m);

std::optional<Matrix> try_inverse(const Matrix& a);
Matrix inverse(const Matrix& a);  // throws not_a_unit_error when singular

enum class QuasiVariant {
    PermutationLeft,   // (1 - e_ii) P
    PermutationRight,  // P (1 - e_ii)
    ElementaryLeft,    // (1 - e_ii) Q
    ElementaryRight,   // Q (1 - e_ii)
    None,
};

std::string to_string(QuasiVariant v);

/// Classification of a quasi permutation / quasi elementary matrix together
/// with the witness that reconstructs it exactly.
struct QuasiKind {
    QuasiVariant variant = QuasiVariant::None;
    std::size_t zeroed_index = 0;  // 1-based; row for left variants, column for right
    std::optional<Matrix> core;    // the permutation or elementary matrix
};

/// Detects A = (1-e_ii)P, P(1-e_ii), (1-e_ii)Q or Q(1-e_ii) with P a
/// permutation and Q an elementary matrix.  Candidates are tried in that
/// order, smallest zeroed index first; reconstruction from the witness
/// reproduces A exactly.
QuasiKind classify_quasi(const Matrix& a);

/// Rebuild the matrix described by a non-None classification.
Matrix reconstruct_quasi(const QuasiKind& kind);

}  // namespace idem
