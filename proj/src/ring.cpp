#include "idem/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace idem {

std::string to_string(RingKind kind) {
    switch (kind) {
        case RingKind::Rationals: return "rationals";
        case RingKind::IntegersModN: return "integers-mod-n";
        case RingKind::PolynomialOverRationals: return "polynomial-over-rationals";
    }
    throw error("unknown ring kind");
}

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {
    for (unsigned e : exps_) degree_ += e;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<unsigned> e(exps_);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += other.exps_[k];
    return Monomial(std::move(e));
}

bool Monomial::operator<(const Monomial& other) const {
    if (degree_ != other.degree_) return degree_ < other.degree_;
    // Same total degree: lexicographic by the descriptor's variable order.
    for (std::size_t k = 0; k < exps_.size(); ++k) {
        if (exps_[k] != other.exps_[k]) return exps_[k] < other.exps_[k];
    }
    return false;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t k = 0; k < exps_.size(); ++k) {
        if (exps_[k] > other.exps_[k]) return false;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
    std::vector<unsigned> e(exps_);
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (divisor.exps_[k] > e[k]) throw invariant_error("monomial division is not exact");
        e[k] -= divisor.exps_[k];
    }
    return Monomial(std::move(e));
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t nvars, const mpq_class& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    std::vector<unsigned> e(nvars, 0u);
    e[index] = 1;
    Polynomial p(nvars);
    p.add_term(Monomial(std::move(e)), 1);
    return p;
}

Polynomial Polynomial::term(Monomial m, const mpq_class& c) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_constant();
}

mpq_class Polynomial::constant_value() const {
    auto it = terms_.find(Monomial(nvars_));
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out(*this);
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out(*this);
    for (const auto& [m, c] : other.terms_) out.add_term(m, mpq_class(-c));
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, mpq_class(-c));
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out(nvars_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : other.terms_) {
            out.add_term(m1 * m2, mpq_class(c1 * c2));
        }
    }
    return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
}

std::pair<Monomial, mpq_class> Polynomial::leading_term() const {
    if (terms_.empty()) throw invariant_error("leading term of the zero polynomial");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

Polynomial Polynomial::exact_divided_by(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw invariant_error("polynomial division by zero");
    Polynomial remainder(*this);
    Polynomial quotient(nvars_);
    auto [lm, lc] = divisor.leading_term();
    while (!remainder.is_zero()) {
        auto [rm, rc] = remainder.leading_term();
        if (!lm.divides(rm)) throw invariant_error("polynomial division is not exact");
        Monomial qm = rm.divided_by(lm);
        mpq_class qc = rc / lc;
        Polynomial t = Polynomial::term(qm, qc);
        quotient = quotient + t;
        remainder = remainder - t * divisor;
    }
    return quotient;
}

namespace {

std::string rational_str(const mpq_class& q) {
    std::ostringstream os;
    os << q;  // GMP prints "p" or "p/q" with canonical sign
    return os.str();
}

std::string monomial_str(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t k = 0; k < m.nvars(); ++k) {
        unsigned e = m.exponent(k);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += names[k];
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace

std::string Polynomial::str(const std::vector<std::string>& variable_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    // Terms printed in descending graded-lex order, leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        mpq_class c = it->second;
        bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        mpq_class a = negative ? mpq_class(-c) : c;
        std::string mono = monomial_str(m, variable_names);
        if (mono.empty()) {
            out += rational_str(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += rational_str(a) + "*" + mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Ring
// ---------------------------------------------------------------------------

struct Ring::Impl {
    RingKind kind;
    mpz_class modulus;                    // IntegersModN
    bool modulus_is_prime = false;        // cached
    std::vector<std::string> variables;   // PolynomialOverRationals
};

Ring Ring::rationals() {
    auto impl = std::make_shared<Impl>();
    impl->kind = RingKind::Rationals;
    return Ring(std::move(impl));
}

Ring Ring::integers_mod(const mpz_class& modulus) {
    if (modulus < 2) throw error("modulus must be at least 2");
    auto impl = std::make_shared<Impl>();
    impl->kind = RingKind::IntegersModN;
    impl->modulus = modulus;
    impl->modulus_is_prime =
        mpz_probab_prime_p(modulus.get_mpz_t(), 40) > 0;
    return Ring(std::move(impl));
}

Ring Ring::polynomials(std::vector<std::string> variables) {
    if (variables.empty()) throw error("polynomial ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty()) throw error("empty variable name");
        if (!(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
            throw error("variable name must start with a letter: " + v);
        for (char ch : v) {
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
                throw error("invalid character in variable name: " + v);
        }
        if (!seen.insert(v).second) throw error("duplicate variable name: " + v);
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = RingKind::PolynomialOverRationals;
    impl->variables = std::move(variables);
    return Ring(std::move(impl));
}

RingKind Ring::kind() const { return impl_->kind; }

const mpz_class& Ring::modulus() const {
    if (impl_->kind != RingKind::IntegersModN)
        throw unsupported_ring_error("modulus is only defined for integers-mod-n");
    return impl_->modulus;
}

const std::vector<std::string>& Ring::variables() const {
    if (impl_->kind != RingKind::PolynomialOverRationals)
        throw unsupported_ring_error("variables are only defined for polynomial rings");
    return impl_->variables;
}

bool Ring::is_field() const {
    switch (impl_->kind) {
        case RingKind::Rationals: return true;
        case RingKind::IntegersModN: return impl_->modulus_is_prime;
        case RingKind::PolynomialOverRationals: return false;
    }
    return false;
}

bool Ring::is_integral_domain() const {
    switch (impl_->kind) {
        case RingKind::Rationals: return true;
        case RingKind::IntegersModN: return impl_->modulus_is_prime;
        case RingKind::PolynomialOverRationals: return true;
    }
    return false;
}

bool Ring::operator==(const Ring& other) const {
    if (impl_ == other.impl_) return true;
    if (impl_->kind != other.impl_->kind) return false;
    switch (impl_->kind) {
        case RingKind::Rationals: return true;
        case RingKind::IntegersModN: return impl_->modulus == other.impl_->modulus;
        case RingKind::PolynomialOverRationals: return impl_->variables == other.impl_->variables;
    }
    return false;
}

std::string Ring::description() const {
    switch (impl_->kind) {
        case RingKind::Rationals: return "Q";
        case RingKind::IntegersModN: return "Z/" + impl_->modulus.get_str();
        case RingKind::PolynomialOverRationals: {
            std::string out = "Q[";
            for (std::size_t k = 0; k < impl_->variables.size(); ++k) {
                if (k) out += ",";
                out += impl_->variables[k];
            }
            return out + "]";
        }
    }
    return "?";
}

namespace {

mpz_class reduce_mod(const mpz_class& v, const mpz_class& n) {
    mpz_class out;
    mpz_mod(out.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    return out;
}

}  // namespace

RingElement Ring::zero() const { return integer(0); }
RingElement Ring::one() const { return integer(1); }

RingElement Ring::integer(long value) const { return integer(mpz_class(value)); }

RingElement Ring::integer(const mpz_class& value) const {
    switch (impl_->kind) {
        case RingKind::Rationals:
            return RingElement(*this, mpq_class(value));
        case RingKind::IntegersModN:
            return RingElement(*this, reduce_mod(value, impl_->modulus));
        case RingKind::PolynomialOverRationals:
            return RingElement(*this,
                               Polynomial::constant(impl_->variables.size(), mpq_class(value)));
    }
    throw error("unknown ring kind");
}

// ---------------------------------------------------------------------------
// Element text parsing
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string take_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("expected digits in '" + s + "'");
        return s.substr(start, pos - start);
    }
    std::string take_identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
        }
        if (pos == start) throw parse_error("expected identifier in '" + s + "'");
        return s.substr(start, pos - start);
    }
};

mpq_class parse_unsigned_rational(Cursor& cur) {
    std::string num = cur.take_digits();
    std::string den;
    std::size_t save = cur.pos;
    if (cur.accept('/')) {
        // A '/' must be followed by digits to be part of the number.
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            den = cur.take_digits();
        } else {
            cur.pos = save;
        }
    }
    mpq_class q;
    if (den.empty()) {
        q = mpq_class(mpz_class(num));
    } else {
        mpz_class d(den);
        if (d == 0) throw parse_error("zero denominator");
        q = mpq_class(mpz_class(num), d);
    }
    q.canonicalize();
    return q;
}

mpq_class parse_rational_text(const std::string& text) {
    Cursor cur{text};
    bool neg = false;
    if (cur.accept('-')) neg = true;
    else cur.accept('+');
    mpq_class q = parse_unsigned_rational(cur);
    if (!cur.done()) throw parse_error("trailing characters in rational '" + text + "'");
    return neg ? mpq_class(-q) : q;
}

// term := factor ('*' factor)* ; factor := rational | var('^' digits)?
Polynomial parse_poly_term(Cursor& cur, const std::vector<std::string>& names) {
    const std::size_t nvars = names.size();
    Polynomial acc = Polynomial::constant(nvars, 1);
    bool first = true;
    for (;;) {
        char c = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            acc = acc * Polynomial::constant(nvars, parse_unsigned_rational(cur));
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = cur.take_identifier();
            auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) throw parse_error("unknown variable '" + name + "'");
            std::size_t index = static_cast<std::size_t>(it - names.begin());
            unsigned exp = 1;
            if (cur.accept('^')) exp = static_cast<unsigned>(std::stoul(cur.take_digits()));
            std::vector<unsigned> e(nvars, 0u);
            e[index] = exp;
            acc = acc * Polynomial::term(Monomial(std::move(e)), 1);
        } else if (first) {
            throw parse_error("expected a coefficient or variable");
        }
        first = false;
        if (!cur.accept('*')) break;
    }
    return acc;
}

Polynomial parse_polynomial_text(const std::string& text,
                                 const std::vector<std::string>& names) {
    Cursor cur{text};
    Polynomial out(names.size());
    bool neg = cur.accept('-');
    if (!neg) cur.accept('+');
    for (;;) {
        Polynomial term = parse_poly_term(cur, names);
        out = neg ? out - term : out + term;
        if (cur.done()) break;
        if (cur.accept('+')) neg = false;
        else if (cur.accept('-')) neg = true;
        else throw parse_error("unexpected character in polynomial '" + text + "'");
    }
    return out;
}

}  // namespace

RingElement Ring::parse(const std::string& text) const {
    switch (impl_->kind) {
        case RingKind::Rationals:
            return RingElement(*this, parse_rational_text(text));
        case RingKind::IntegersModN: {
            // "k mod n" with n matching the descriptor, or a bare integer.
            auto pos = text.find("mod");
            std::string head = text.substr(0, pos);
            Cursor cur{head};
            bool neg = cur.accept('-');
            mpz_class k(cur.take_digits());
            if (!cur.done()) throw parse_error("trailing characters in residue '" + text + "'");
            if (neg) k = -k;
            if (pos != std::string::npos) {
                std::string tail = text.substr(pos + 3);
                Cursor tcur{tail};
                mpz_class n(tcur.take_digits());
                if (!tcur.done() || n != impl_->modulus)
                    throw parse_error("residue modulus does not match the ring: '" + text + "'");
            }
            return integer(k);
        }
        case RingKind::PolynomialOverRationals:
            return RingElement(*this, parse_polynomial_text(text, impl_->variables));
    }
    throw error("unknown ring kind");
}

// ---------------------------------------------------------------------------
// RingElement
// ---------------------------------------------------------------------------

void require_same_ring(const RingElement& a, const RingElement& b) {
    if (a.ring() != b.ring())
        throw ring_mismatch_error("elements of " + a.ring().description() + " and " +
                                  b.ring().description() + " cannot be combined");
}

bool RingElement::is_zero() const {
    switch (ring_.kind()) {
        case RingKind::Rationals: return std::get<mpq_class>(value_) == 0;
        case RingKind::IntegersModN: return std::get<mpz_class>(value_) == 0;
        case RingKind::PolynomialOverRationals: return std::get<Polynomial>(value_).is_zero();
    }
    return false;
}

bool RingElement::is_one() const {
    switch (ring_.kind()) {
        case RingKind::Rationals: return std::get<mpq_class>(value_) == 1;
        case RingKind::IntegersModN:
            return std::get<mpz_class>(value_) == 1;
        case RingKind::PolynomialOverRationals: {
            const auto& p = std::get<Polynomial>(value_);
            return p.is_constant() && p.constant_value() == 1;
        }
    }
    return false;
}

std::string RingElement::str() const {
    switch (ring_.kind()) {
        case RingKind::Rationals: return rational_str(std::get<mpq_class>(value_));
        case RingKind::IntegersModN:
            return std::get<mpz_class>(value_).get_str() + " mod " + ring_.modulus().get_str();
        case RingKind::PolynomialOverRationals:
            return std::get<Polynomial>(value_).str(ring_.variables());
    }
    return "?";
}

RingElement RingElement::operator-() const {
    switch (ring_.kind()) {
        case RingKind::Rationals:
            return RingElement(ring_, mpq_class(-std::get<mpq_class>(value_)));
        case RingKind::IntegersModN:
            return RingElement(ring_,
                               reduce_mod(mpz_class(-std::get<mpz_class>(value_)), ring_.modulus()));
        case RingKind::PolynomialOverRationals:
            return RingElement(ring_, -std::get<Polynomial>(value_));
    }
    throw error("unknown ring kind");
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    switch (a.ring_.kind()) {
        case RingKind::Rationals:
            return RingElement(a.ring_, mpq_class(std::get<mpq_class>(a.value_) +
                                                  std::get<mpq_class>(b.value_)));
        case RingKind::IntegersModN:
            return RingElement(a.ring_, reduce_mod(std::get<mpz_class>(a.value_) +
                                                       std::get<mpz_class>(b.value_),
                                                   a.ring_.modulus()));
        case RingKind::PolynomialOverRationals:
            return RingElement(a.ring_,
                               std::get<Polynomial>(a.value_) + std::get<Polynomial>(b.value_));
    }
    throw error("unknown ring kind");
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    switch (a.ring_.kind()) {
        case RingKind::Rationals:
            return RingElement(a.ring_, mpq_class(std::get<mpq_class>(a.value_) *
                                                  std::get<mpq_class>(b.value_)));
        case RingKind::IntegersModN:
            return RingElement(a.ring_, reduce_mod(std::get<mpz_class>(a.value_) *
                                                       std::get<mpz_class>(b.value_),
                                                   a.ring_.modulus()));
        case RingKind::PolynomialOverRationals:
            return RingElement(a.ring_,
                               std::get<Polynomial>(a.value_) * std::get<Polynomial>(b.value_));
    }
    throw error("unknown ring kind");
}

bool RingElement::operator==(const RingElement& other) const {
    require_same_ring(*this, other);
    return value_ == other.value_;
}

const mpq_class& RingElement::rational_value() const {
    if (ring_.kind() != RingKind::Rationals)
        throw unsupported_ring_error("not a rational element");
    return std::get<mpq_class>(value_);
}

const mpz_class& RingElement::residue_value() const {
    if (ring_.kind() != RingKind::IntegersModN)
        throw unsupported_ring_error("not a residue element");
    return std::get<mpz_class>(value_);
}

const Polynomial& RingElement::polynomial_value() const {
    if (ring_.kind() != RingKind::PolynomialOverRationals)
        throw unsupported_ring_error("not a polynomial element");
    return std::get<Polynomial>(value_);
}

bool is_unit(const RingElement& a) {
    switch (a.ring().kind()) {
        case RingKind::Rationals: return !a.is_zero();
        case RingKind::IntegersModN: {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), std::get<mpz_class>(a.value_).get_mpz_t(),
                    a.ring().modulus().get_mpz_t());
            return g == 1;
        }
        case RingKind::PolynomialOverRationals: {
            const auto& p = std::get<Polynomial>(a.value_);
            return p.is_constant() && !p.is_zero();
        }
    }
    return false;
}

RingElement ring_inv(const RingElement& a) {
    if (!is_unit(a))
        throw not_a_unit_error("element " + a.str() + " is not a unit in " +
                               a.ring().description());
    const Ring& ring = a.ring();
    switch (ring.kind()) {
        case RingKind::Rationals:
            return RingElement(ring, mpq_class(1 / std::get<mpq_class>(a.value_)));
        case RingKind::IntegersModN: {
            mpz_class inv;
            if (!mpz_invert(inv.get_mpz_t(), std::get<mpz_class>(a.value_).get_mpz_t(),
                            ring.modulus().get_mpz_t()))
                throw not_a_unit_error("element is not invertible");
            return RingElement(ring, inv);
        }
        case RingKind::PolynomialOverRationals: {
            mpq_class c = std::get<Polynomial>(a.value_).constant_value();
            return RingElement(ring, Polynomial::constant(ring.variables().size(),
                                                          mpq_class(1 / c)));
        }
    }
    throw error("unknown ring kind");
}

RingElement exact_div(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    const Ring& ring = a.ring();
    switch (ring.kind()) {
        case RingKind::Rationals:
        case RingKind::IntegersModN:
            return a * ring_inv(b);
        case RingKind::PolynomialOverRationals:
            return RingElement(ring, std::get<Polynomial>(a.value_).exact_divided_by(
                                         std::get<Polynomial>(b.value_)));
    }
    throw error("unknown ring kind");
}

}  // namespace idem
