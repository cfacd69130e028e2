#ifndef BLOWUP_DIVISOR_HPP
#define BLOWUP_DIVISOR_HPP

#include "blowup/chart_tree.hpp"
#include "blowup/smoothness.hpp"

namespace blowup {

struct DivisorFactor {
    Polynomial factor;
    unsigned multiplicity = 1;
    std::string name; // used in traces; empty is fine for ad-hoc divisors
};

/// A divisor presented by its components: an ordered list of (equation,
/// multiplicity) pairs on a smooth presented ambient.
struct FactoredDivisor {
    QuotientPresentation ambient;
    std::vector<DivisorFactor> factors;

    FactoredDivisor reduction() const {
        FactoredDivisor red{ambient, factors};
        for (auto& f : red.factors) f.multiplicity = 1;
        return red;
    }
};

/// Validating constructor: the ambient must be smooth; factors must be
/// nonzero non-units modulo the relations, pairwise non-associate, and meet
/// properly (neither factor vanishes on the other's zero set).
FactoredDivisor make_divisor(QuotientPresentation ambient, std::vector<DivisorFactor> factors);

enum class SncFailureReason { component_singular, non_transversal, excess_intersection };

const char* to_string(SncFailureReason r);

struct SncFailure {
    std::vector<std::size_t> subset; // factor indices
    SncFailureReason reason;
};

struct SncVerdict {
    bool snc = true;
    std::vector<SncFailure> failures;
};

/// Strict-normal-crossing test for the reduced divisor: every subset S of
/// components (|S| <= ambient dimension d) has empty intersection or a smooth
/// scheme-theoretic intersection of codimension |S|; subsets larger than d
/// must have empty intersection.
SncVerdict snc_check_global(const FactoredDivisor& D);

/// The same conditions at one rational point, restricted to the factors
/// vanishing there; smoothness and transversality become Jacobian rank
/// conditions at the point.
SncVerdict snc_check_at_point(const FactoredDivisor& D, const std::vector<Rational>& p);

/// Monomiality: with factored input on a smooth affine ambient the Cartier
/// condition is automatic, so the divisor is monomial iff its reduction is
/// strictly normal crossing. Insensitive to multiplicities.
bool monomial_check(const FactoredDivisor& D);

/// Blows up along I1 + I2 and reports whether the strict transforms are
/// disjoint in every chart. Neither ideal may contain the other.
std::pair<BlowupStep, bool> separate_components(const QuotientPresentation& ambient,
                                                const Ideal& I1, const Ideal& I2);

struct SncLeaf {
    TreeSlot slot;
    SncVerdict verdict;
    std::vector<DivisorFactor> divisor;
};

struct SncNormalizationResult {
    ChartTree tree;
    std::vector<SncLeaf> leaves;
    unsigned steps = 0;
};

/// Iteratively blows up the reduced zero-dimensional snc-failure locus of a
/// divisor on a smooth surface, tracking strict transforms of all factors
/// plus the new exceptional component per step, until every leaf is snc.
SncNormalizationResult strnorm_surface(const FactoredDivisor& D, unsigned max_steps);

/// The same loop starting at a slot of an existing tree; used by the curve
/// resolution driver. `exceptional_counter` numbers new exceptional factors
/// E<k> across the whole tree; `budget` is decremented per blow up.
std::vector<SncLeaf> snc_normalize(ChartTree& tree, const TreeSlot& start,
                                   std::vector<DivisorFactor> factors, unsigned& budget,
                                   unsigned& exceptional_counter,
                                   std::vector<std::pair<int, Ideal>>* centers_out = nullptr);

} // namespace blowup

#endif
