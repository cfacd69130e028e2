#ifndef BLOWUP_GROEBNER_HPP
#define BLOWUP_GROEBNER_HPP

#include "blowup/ideal.hpp"

namespace blowup {

/// The unique reduced Groebner basis of an ideal for a monomial order.
/// Basis elements are monic and sorted ascending by leading monomial; the
/// unit ideal has basis {1}, the zero ideal the empty basis.
struct GroebnerBasis {
    Ideal ideal;
    MonomialOrder order;
    std::vector<Polynomial> basis;

    bool is_unit() const { return basis.size() == 1 && basis[0].is_one(); }
};

/// Buchberger with the normal selection strategy. Deterministic: fixed input
/// and order give a bit-identical basis. Throws resource_error when the
/// configured pair or degree cap is exceeded.
GroebnerBasis groebner_basis(const Ideal& I, const MonomialOrder& order);
GroebnerBasis groebner_basis(const Ideal& I); // ring's own order

/// Unique remainder of f modulo G; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// true iff 1 is in I, i.e. V(I) is empty over the algebraic closure.
bool contains_one(const Ideal& I);

/// Ideal equality via reduced bases under the ring order.
bool equal_ideals(const Ideal& A, const Ideal& B);

/// Membership of f in I (normal form vanishes).
bool ideal_member(const Polynomial& f, const Ideal& I);

} // namespace blowup

#endif
