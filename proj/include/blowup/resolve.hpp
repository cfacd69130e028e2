#ifndef BLOWUP_RESOLVE_HPP
#define BLOWUP_RESOLVE_HPP

#include "blowup/divisor.hpp"

namespace blowup {

/// An ideal with a multiplicity bound, the unit of work of the
/// order-reduction loop.
struct MarkedIdeal {
    QuotientPresentation ambient;
    Ideal ideal;
    unsigned control = 1; // order of the ideal at every point is <= control
};

struct ResolutionStep {
    int node = -1; // tree node created by this step
    TreeSlot attached_at;
    Ideal center;
    unsigned mu_before = 0;
    unsigned mu_after = 0; // max multiplicity over the step's charts
    int phase = 1;         // 1 = order reduction, 2 = snc normalization
};

struct LeafVerdict {
    TreeSlot slot;
    bool strict_smooth = false;
    bool total_snc = false;
};

/// Full record of an embedded resolution run: the chart tree with per-chart
/// factor records ("Y" for the strict transform, "E<k>" for exceptional
/// components), the steps taken, and the per-leaf verdicts.
struct ResolutionTrace {
    ChartTree tree;
    Polynomial curve;
    Ideal initial_singular_locus;
    std::vector<ResolutionStep> steps;
    std::vector<LeafVerdict> verdicts;
};

/// The result of a principalization search: the smallest exponent n such
/// that blowing up I + J^n makes every strict transform principal, the step
/// itself, and the per-chart principal generators.
struct PrincipalizationResult {
    unsigned n = 0;
    BlowupStep step;
    std::vector<std::vector<Polynomial>> chart_generators;
};

/// Searches n = 1.. n_max for the blow up of I + J^n whose every chart has
/// principal strict transform of I, verified as reduced-basis equality with
/// the exceptional-division witness. I must be principal with its generator
/// in J.
PrincipalizationResult principalize_strict_transform(const QuotientPresentation& ambient,
                                                     const Ideal& I, const Ideal& J,
                                                     unsigned n_max);

/// The two-component variant: blows up (f1·f2) + (I1 + I2)^n until both
/// strict transforms are principal and disjoint in every chart.
PrincipalizationResult separate_and_principalize(const QuotientPresentation& ambient,
                                                 const Ideal& I1, const Ideal& I2,
                                                 unsigned n_max);

/// Embedded resolution of the reduced plane curve f = 0: phase 1 blows up
/// the reduced maximal-multiplicity locus of the strict transform until it
/// is smooth on every chart, phase 2 normalizes the accumulated divisor
/// (strict transform + exceptional components) to strict normal crossings.
ResolutionTrace resolve_plane_curve(const Polynomial& f, unsigned max_steps);

/// Re-checks a trace from scratch: leaf smoothness, snc of the accumulated
/// divisor, consistency of the recorded strict transforms with the
/// saturation definition, and the support condition of every center over the
/// initial singular locus. A failure report is appended to `report`.
bool verify_resolution(const ResolutionTrace& trace, std::string* report = nullptr);

} // namespace blowup

#endif
