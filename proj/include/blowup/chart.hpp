#ifndef BLOWUP_CHART_HPP
#define BLOWUP_CHART_HPP

#include <optional>

#include "blowup/ideal_ops.hpp"

namespace blowup {

/// A blow-up center: an ideal on a presented affine scheme.
struct Center {
    QuotientPresentation ambient;
    Ideal ideal;

    Center() = default;
    Center(QuotientPresentation amb, Ideal ide) : ambient(std::move(amb)), ideal(std::move(ide)) {
        if (!ideal.ring()->same_as(*ambient.ring))
            throw argument_error("center ideal lives outside the ambient ring");
        if (ideal.is_zero()) throw argument_error("cannot blow up the zero ideal");
    }
};

/// One affine chart of a blow up: for the selected center generator g, the
/// ambient ring gains a variable T per non-selected generator f with relation
/// g·T − f, and the relation ideal is saturated by g (no g-torsion). The
/// exceptional ideal is (g), principal by construction. Ambient variables map
/// to themselves.
struct Chart {
    std::size_t selected = 0;            // index of g in the center's generator list
    RingPtr ring;                        // ambient variables + fresh T<depth>_<j>
    Ideal relations;                     // reduced basis, saturated by g
    Ideal exceptional;                   // principal (g), in the chart ring
    std::vector<std::string> new_vars;   // fresh names, one per non-selected generator

    const Polynomial& exceptional_generator() const { return exceptional.gens().front(); }
    QuotientPresentation presentation() const { return {ring, relations}; }
};

/// All charts of the blow up along a center, one per center generator.
struct BlowupStep {
    Center center;
    std::vector<Chart> charts;
};

/// Builds the charts of Bl_I(ambient). Generators must be literally nonzero.
BlowupStep blowup_charts(const Center& center);

/// Image of I's generators in the chart ring (the chart relations are the
/// implicit context; they are not adjoined here).
Ideal total_transform(const Chart& chart, const Ideal& I);

/// Saturation of (total transform + chart relations) by the exceptional
/// ideal: the schematic closure of the preimage away from the exceptional
/// divisor. The result contains the chart relations.
Ideal strict_transform(const Chart& chart, const Ideal& I);

/// Total transform with every generator divided by g^c modulo the chart
/// relations. Fails when some generator is not divisible, i.e. c exceeds the
/// order of I along the center. c = 0 returns the total transform; c = that
/// order gives the weak transform.
Ideal controlled_transform(const Chart& chart, const Ideal& I, unsigned c);

/// true iff the pushforward of J equals the exceptional ideal: reduced bases
/// of (total_transform(J) + relations) and ((g) + relations) coincide.
bool verify_principal_on_chart(const Chart& chart, const Ideal& J);

/// q with q·g^c ≡ h modulo `relations` (which must be saturated by g), or
/// nullopt when no such q exists. Division happens on the chart, where g is
/// invertible off the exceptional divisor.
std::optional<Polynomial> divide_on_chart(const Polynomial& h, const Polynomial& g, unsigned c,
                                          const Ideal& relations);

/// The strict transform of the principal ideal (f) as a single equation on
/// the chart: the image of f divided by the largest power of g it admits
/// modulo the relations, primitive-normalized. nullopt when the result is a
/// unit (the strict transform misses the chart) or f vanishes on the chart.
/// Also reports the exponent used.
std::optional<std::pair<Polynomial, unsigned>> strict_factor(const Chart& chart,
                                                             const Polynomial& f);

} // namespace blowup

#endif
