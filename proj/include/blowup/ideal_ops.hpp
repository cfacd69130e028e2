#ifndef BLOWUP_IDEAL_OPS_HPP
#define BLOWUP_IDEAL_OPS_HPP

#include <set>
#include <utility>

#include "blowup/groebner.hpp"

namespace blowup {

/// Generator concatenation; exact duplicates and zeros are dropped.
Ideal ideal_sum(const Ideal& I, const Ideal& J);

/// Pairwise products of generators.
Ideal ideal_product(const Ideal& I, const Ideal& J);

/// n-fold product, n >= 1; generators are all degree-n monomials in the
/// generators of I, in lexicographic index order.
Ideal ideal_power(const Ideal& I, unsigned n);

/// I ∩ J, by eliminating t from t·I + (1−t)·J. Result generators form the
/// reduced basis of the intersection.
Ideal intersection(const Ideal& I, const Ideal& J);

/// Colon ideal (I : J) = { f : f·J ⊆ I }. J must be nonzero.
Ideal quotient(const Ideal& I, const Ideal& J);

/// Saturation (I : J^∞) together with the smallest k such that
/// (I : J^k) = (I : J^{k+1}). Capped by limits().saturation_cap.
std::pair<Ideal, unsigned> saturation(const Ideal& I, const Ideal& J);

/// I ∩ Q[kept variables], computed with a block order. `drop` must be a
/// proper subset of the variable indices. Generators use no dropped variable
/// but still live in the original ring.
Ideal eliminate(const Ideal& I, const std::set<std::size_t>& drop);

/// f ∈ √I, decided by the Rabinowitsch trick (no radical is computed).
bool radical_membership(const Polynomial& f, const Ideal& I);

/// Krull dimension of the quotient ring, −1 for the unit ideal. Computed as
/// the largest variable set independent modulo the leading term ideal.
int dimension(const Ideal& I);

/// Radical of a zero-dimensional ideal: adjoin the squarefree part of each
/// univariate eliminant.
Ideal radical_zero_dim(const Ideal& I);

/// Exact division f / g in the polynomial ring; f must be a multiple of g.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// The same ideal presented by its reduced basis under the ring order.
Ideal interreduced(const Ideal& I);

/// A subset of the reduced basis of I that still generates I modulo
/// `relations` (greedy, deterministic). Blow-up drivers use this to keep
/// chart rings small: every surviving generator contributes a chart.
Ideal minimal_generators(const Ideal& I, const Ideal& relations);

/// A ring extending `ring` by `count` fresh variables built from `base`
/// (appended when `prepend` is false). Names are made collision-free.
RingPtr extended_ring(const RingPtr& ring, const std::string& base, std::size_t count,
                      bool prepend, std::vector<std::string>* created = nullptr);

} // namespace blowup

#endif
