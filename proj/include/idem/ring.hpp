#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "idem/errors.hpp"

namespace idem {

class RingElement;

enum class RingKind {
    Rationals,
    IntegersModN,
    PolynomialOverRationals,
};

std::string to_string(RingKind kind);

/// Exponent vector of a monomial, ordered graded-lexicographically.
class Monomial {
  public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0u) {}
    explicit Monomial(std::vector<unsigned> exps);

    std::size_t nvars() const { return exps_.size(); }
    unsigned exponent(std::size_t k) const { return exps_[k]; }
    unsigned total_degree() const { return degree_; }
    bool is_constant() const { return degree_ == 0; }

    Monomial operator*(const Monomial& other) const;
    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }
    bool operator<(const Monomial& other) const;

    bool divides(const Monomial& other) const;
    /// Quotient this / other; requires other.divides(*this) componentwise... the
    /// caller passes the divisor, i.e. requires divisor.divides(*this).
    Monomial divided_by(const Monomial& divisor) const;

  private:
    std::vector<unsigned> exps_;
    unsigned degree_ = 0;
};

/// Multivariate polynomial over the rationals in canonical form: a sorted term
/// map with no zero coefficients.
class Polynomial {
  public:
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const mpq_class& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial term(Monomial m, const mpq_class& c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant coefficient; the whole value when is_constant().
    mpq_class constant_value() const;
    const std::map<Monomial, mpq_class>& terms() const { return terms_; }

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    /// Leading (grlex-greatest) term.  Requires a nonzero polynomial.
    std::pair<Monomial, mpq_class> leading_term() const;

    /// Exact quotient this / divisor.  Throws invariant_error when the
    /// division leaves a remainder.
    Polynomial exact_divided_by(const Polynomial& divisor) const;

    std::string str(const std::vector<std::string>& variable_names) const;

  private:
    void add_term(const Monomial& m, const mpq_class& c);

    std::size_t nvars_;
    std::map<Monomial, mpq_class> terms_;
};

/// Descriptor of one of the supported exact commutative coefficient rings.
/// Cheap to copy; structural equality.
class Ring {
  public:
    static Ring rationals();
    static Ring integers_mod(const mpz_class& modulus);
    static Ring polynomials(std::vector<std::string> variables);

    RingKind kind() const;
    /// Modulus; IntegersModN only.
    const mpz_class& modulus() const;
    /// Ordered variable names; PolynomialOverRationals only.
    const std::vector<std::string>& variables() const;

    bool is_field() const;
    bool is_integral_domain() const;

    RingElement zero() const;
    RingElement one() const;
    RingElement integer(long value) const;
    RingElement integer(const mpz_class& value) const;
    /// Parse an element from its text form ("p/q", "k mod n", "3*X^2*Y - 1/2").
    RingElement parse(const std::string& text) const;

    bool operator==(const Ring& other) const;
    bool operator!=(const Ring& other) const { return !(*this == other); }

    /// Short human-readable description, e.g. "Q", "Z/7", "Q[X,Y]".
    std::string description() const;

  private:
    struct Impl;
    explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
    friend class RingElement;
};

/// Immutable element of a Ring, stored canonically so that equality of
/// elements is representation equality.
class RingElement {
  public:
    const Ring& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;
    /// Canonical text form per the ring's element syntax.
    std::string str() const;

    RingElement operator-() const;
    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);

    bool operator==(const RingElement& other) const;
    bool operator!=(const RingElement& other) const { return !(*this == other); }

    const mpq_class& rational_value() const;
    const mpz_class& residue_value() const;
    const Polynomial& polynomial_value() const;

  private:
    friend class Ring;
    friend bool is_unit(const RingElement&);
    friend RingElement ring_inv(const RingElement&);
    friend RingElement exact_div(const RingElement&, const RingElement&);

    using Value = std::variant<mpq_class, mpz_class, Polynomial>;
    RingElement(Ring ring, Value value) : ring_(std::move(ring)), value_(std::move(value)) {}

    Ring ring_;
    Value value_;
};

/// True iff `a` has a two-sided multiplicative inverse in its ring.
bool is_unit(const RingElement& a);

/// Multiplicative inverse; throws not_a_unit_error otherwise.
RingElement ring_inv(const RingElement& a);

/// Exact quotient a / b, defined when b divides a in the ring (always, for
/// fields).  Used by fraction-free elimination; throws invariant_error when
/// the division is not exact and not_a_unit_error over rings with zero
/// divisors when b is not a unit.
RingElement exact_div(const RingElement& a, const RingElement& b);

void require_same_ring(const RingElement& a, const RingElement& b);

}  // namespace idem
