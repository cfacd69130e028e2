#ifndef BLOWUP_POLYNOMIAL_HPP
#define BLOWUP_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "blowup/monomial.hpp"
#include "blowup/ring.hpp"

namespace blowup {

/// Exact rational coefficient. Always canonical: gcd(|num|, den) = 1, den > 0.
using Rational = mpq_class;

struct Term {
    Monomial mono;
    Rational coeff; // never zero when stored in a Polynomial
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted descending in
/// the ring's monomial order with no zero coefficients, so equal polynomials
/// have identical representations and identical printed form.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, std::size_t index, std::uint32_t power = 1);
    static Polynomial from_term(RingPtr ring, Monomial m, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_one() const;

    /// Leading term under the ring order; polynomial must be nonzero.
    const Term& leading() const { return terms_.front(); }

    /// Total degree; nullopt for the zero polynomial.
    std::optional<unsigned> degree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Divide by the leading coefficient (nonzero polynomials only).
    Polynomial monic() const;

    /// Clear denominators and content: primitive integer multiple with
    /// positive leading coefficient. Canonical representative up to scaling.
    Polynomial primitive() const;

    Rational evaluate(const std::vector<Rational>& point) const;

    std::string str() const;

    /// Re-homes the polynomial in `target`, variable i of this ring becoming
    /// variable var_map[i] of the target.
    Polynomial map_to(const RingPtr& target, const std::vector<std::size_t>& var_map) const;

    /// Injects into a ring whose leading variables are exactly this ring's
    /// variables (by name), e.g. a chart ring extending the ambient.
    Polynomial extend_to(const RingPtr& target) const;

private:
    RingPtr ring_;
    std::vector<Term> terms_; // descending under ring order, nonzero coeffs

    void normalize(); // sort + merge + drop zeros
    friend Polynomial mul_impl(const Polynomial&, const Polynomial&);
};

/// Formal partial derivative with respect to variable `var_index`.
Polynomial partial_derivative(const Polynomial& f, std::size_t var_index);

/// Ring homomorphism: variable i of f's ring maps to images[i]. All images
/// must share one target ring.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

/// Order (multiplicity) of f at the point p: the minimal total degree of a
/// term after translating p to the origin. nullopt means +infinity (f = 0).
std::optional<unsigned> order_at_point(const Polynomial& f, const std::vector<Rational>& p);

void require_same_ring(const Polynomial& a, const Polynomial& b);

} // namespace blowup

#endif
