#ifndef BLOWUP_SMOOTHNESS_HPP
#define BLOWUP_SMOOTHNESS_HPP

#include "blowup/ideal_ops.hpp"

namespace blowup {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Partial-derivative matrix of a presentation: row i holds the derivatives
/// of relation i by every ring variable.
struct JacobianData {
    QuotientPresentation presentation;
    PolyMatrix matrix; // (#nonzero relations) x (ring arity)
};

JacobianData jacobian_data(const QuotientPresentation& P);

/// Ideal of all r x r minors of M using exactly the rows in `rows` (so r must
/// equal rows.size()) and every choice of r columns. The empty minor is 1.
Ideal minors_ideal(const PolyMatrix& M, const RingPtr& ring, unsigned r,
                   const std::vector<std::size_t>& rows);

/// The Jacobian ideal of the presentation: sum over row subsets L of
/// (J_L : J) · H_L, with H_L the |L|-minors on rows L, returned with the
/// presentation's relations adjoined. Not radicalized: consumers decide
/// radical questions with radical_membership, and unit-ideal verdicts are
/// insensitive to the radical.
Ideal jacobian_ideal(const QuotientPresentation& P);

struct SmoothnessVerdict {
    bool smooth = false;
    Ideal witness;       // unit certificate, or the singular-locus ideal
    std::string summary; // human-readable cause
};

/// Geometric smoothness over Q: the Jacobian ideal contains 1.
SmoothnessVerdict is_smooth(const QuotientPresentation& P);

/// Ideal cutting out the non-smooth points of the presentation.
Ideal singular_locus_ideal(const QuotientPresentation& P);

/// Non-smooth locus by the rank criterion: relations plus all codim-sized
/// minors of the Jacobian. Agrees with singular_locus_ideal up to radical
/// when the presented scheme is equidimensional (complete intersections on a
/// smooth ambient, integral schemes); the blow-up drivers use it because it
/// avoids the colon-ideal sum entirely.
Ideal rank_singular_locus(const QuotientPresentation& P);

/// Maximal multiplicity mu of the hypersurface f = 0 over all points, and the
/// ideal of the locus where it is attained (radical when zero-dimensional).
/// f must be nonconstant. For mu >= 2 the locus is cut out by f and all
/// partials of order < mu.
std::pair<unsigned, Ideal> max_order_locus(const Polynomial& f);

/// Same question for a curve h = 0 on a presented smooth surface; reduces to
/// max_order_locus when the presentation has no relations. For mu >= 2 the
/// returned locus is reduced and zero-dimensional.
std::pair<unsigned, Ideal> max_order_locus_on(const QuotientPresentation& P, const Polynomial& h);

} // namespace blowup

#endif
