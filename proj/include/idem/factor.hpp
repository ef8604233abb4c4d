#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idem/matrix.hpp"

namespace idem {

enum class RouteTag {
    QuasiElementary,
    QuasiPermutation,
    TransferLeft,
    TransferRight,
    LiftBlockRow,
    ColumnCombination,
    RankShift,
    RowRelation,
    TriangularPadded,
    GePadded,
    DoublePadded,
    Manual,
};

std::string to_string(RouteTag tag);
RouteTag route_tag_from_string(const std::string& s);

/// Provenance of a factorization: which construction produced it, plus the
/// construction's witness data.
struct Route {
    RouteTag tag = RouteTag::Manual;
    std::map<std::string, std::string> parameters;
};

/// An ordered list of square idempotent matrices whose product equals the
/// target.  The empty list represents the identity target; identity factors
/// are dropped on construction, so routes never emit them.
class Factorization {
  public:
    Factorization(Matrix target, std::vector<Matrix> factors, Route route);

    const Matrix& target() const { return target_; }
    const std::vector<Matrix>& factors() const { return factors_; }
    const Route& route() const { return route_; }

    Factorization with_route(Route route) const;

  private:
    Matrix target_;
    std::vector<Matrix> factors_;
    Route route_;
};

struct VerificationReport {
    bool ok = false;
    std::string detail;
};

/// Checks both certificate invariants: every factor is idempotent and the
/// ordered product equals the target, exactly.  Never throws on mathematical
/// failure; the report carries the first failing factor or the mismatch.
VerificationReport verify_factorization_report(const Factorization& f);
bool verify_factorization(const Factorization& f);

/// Transpose duality: factors reversed and transposed, target transposed.
Factorization transpose_factorization(const Factorization& f);

/// {P F_k P^-1} certifies P A P^-1.
Factorization conjugate_factorization(const Factorization& f, const Matrix& p,
                                      const Matrix& p_inv);

/// Factor a quasi elementary matrix (1-e_ii)Q or Q(1-e_ii).  Idempotent
/// inputs give a single factor; otherwise the three-factor block display,
/// conjugated so the zero row sits last and conjugated back afterwards.
Factorization factor_quasi_elementary(const Matrix& a);

/// Factor a quasi permutation matrix (1-e_ii)P or P(1-e_ii) by peeling one
/// transposition at a time:
///   (1-e_ii)P_sigma = [(I-e_ii)(I+e_si-e_ss)] * [(1-e_ss)P_{(i s)sigma}]
/// with s = sigma(i), until sigma fixes the zeroed index; the remaining
/// permutation block is expanded into elementary and +-1-diagonal factors.
Factorization factor_quasi_permutation(const Matrix& a);

/// Factorization of Q * F.target() when row i of the target is zero and Q is
/// elementary or a permutation: prepend the factorization of the quasi matrix
/// Q(1-e_ii).  When Q*target == target, F is returned unchanged.
Factorization transfer_left(const Matrix& q, const Factorization& f, std::size_t i);

/// Column-side analogue (target column i zero): factorization of
/// F.target() * Q via transpose duality.
Factorization transfer_right(const Matrix& q, const Factorization& f, std::size_t i);

/// [B C; 0 0] = [I C; 0 0] * (E_1 (+) I_r) ... (E_l (+) I_r) for
/// B = E_1...E_l certified by F and any n x r block C.
Factorization lift_block_row(const Factorization& f, const Matrix& c);

/// Conjugating pair ([I -B^-1 C; 0 I], [I B^-1 C; 0 I]) with
/// conjugator * block_pad(B, r) * conjugator_inverse == [B C; 0 0],
/// verified exactly.  Requires B invertible.
std::pair<Matrix, Matrix> similarity_reduce(const Matrix& b, const Matrix& c);

/// [B BQ; 0 0] = block_pad(B, r) * [I Q; 0 0] appended to a certificate of
/// the padded target.
Factorization lift_column_combination(const Factorization& f, const Matrix& q);

/// From a certificate of B+A with A = C*D (C is n x r, D is r x n), build
///   block_pad(B, r) = [I -C; 0 0] * (E_k (+) I_r)... * [I 0; D 0].
Factorization shift_rank_r(const Factorization& f, const Matrix& c, const Matrix& d);

/// Factor A whose row i equals sum_{j != i} coeffs[j] * row_j(A), given a
/// certificate of A_i = (1-e_ii)A: prepend the idempotent
/// I - e_ii + sum_j coeffs[j] e_ij.  `coeffs` has length n with entry i
/// (1-based) required to be zero.  When all coefficients are zero, F_i is
/// returned unchanged.
Factorization row_relation_reduce(const Matrix& a, std::size_t i,
                                  const std::vector<RingElement>& coeffs,
                                  const Factorization& f_i);

/// Certified factorization of block_pad(B, r) for triangular B.  Base case:
/// [b 0; 0 0] = [1 b; 0 0][0 0; 1 1][1 0; 0 0]; induction strips the last
/// column through shift_rank_r; lower triangular via transpose duality.
Factorization factor_triangular_padded(const Matrix& b, std::size_t r);

struct GaussianDecomposition {
    std::vector<Matrix> left;   // elementary
    Matrix diagonal;
    std::vector<Matrix> right;  // elementary
};

/// B = (prod left) * diagonal * (prod right) over a field, exactly; row/column
/// swaps are realized as three elementary operations whose -1 lands in the
/// diagonal.  Invertible B yields a unit diagonal; singular B leaves zeros.
GaussianDecomposition gaussian_diagonalize(const Matrix& b);

/// Optional witness for dispatcher route (e): `row` (1-based) such that
/// (1-e_row,row)B is factorable by the quasi/zero toolkit; with `coeffs`
/// additionally asserting row_row(B) = sum_j coeffs[j] row_j(B).
struct ZeroRowHint {
    std::size_t row = 0;
    std::optional<std::vector<RingElement>> coeffs;
};

/// Route dispatcher for block_pad(B, r), first applicable route wins:
/// (a) triangular, (b) permutation, (c) field Gaussian route, (d) r >= n
/// double padding, (e) caller-supplied zero-row reduction.  Throws
/// route_not_found_error when nothing applies.
Factorization factor_padded(const Matrix& b, std::size_t r,
                            const std::optional<ZeroRowHint>& hint = std::nullopt);

/// Certified factorization of the l x l matrix block_pad(B, l-n) for
/// l >= 2n, built from [0 B; 0 0] = [I B; 0 0][0 0; 0 I] and a block-swap
/// column transfer.
Factorization factor_double_padded(const Matrix& b, std::size_t l);

/// For idempotent E over a field: invertible P with
/// P E P^-1 = diag(1,...,1,0,...,0) (rank many ones).  Returns (P, P^-1).
std::pair<Matrix, Matrix> diagonalize_idempotent(const Matrix& e);

/// The worked factorizations over Q[X,Y] shipped as a regression demo:
/// a four-factor certificate for [X 0 Y; 0 0 0; 0 0 0], a two-factor
/// certificate for [1 0 0; 0 0 0; 0 1 0], and their composition certifying
/// [X Y 0; 0 0 0; 0 0 0] = block_pad([X Y; 0 0], 1).
struct PolynomialDemo {
    Factorization wide;
    Factorization projector;
    Factorization composed;
};
PolynomialDemo polynomial_demo_certificates();

}  // namespace idem
