#include "blowup/divisor.hpp"

#include <algorithm>

namespace blowup {

const char* to_string(SncFailureReason r) {
    switch (r) {
        case SncFailureReason::component_singular: return "component-singular";
        case SncFailureReason::non_transversal: return "non-transversal";
        case SncFailureReason::excess_intersection: return "excess-intersection";
    }
    return "?";
}

namespace {

bool associates(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.primitive() == b.primitive();
}

Ideal with_factor(const QuotientPresentation& amb, const Polynomial& f) {
    return ideal_sum(amb.relations, Ideal::principal(f));
}

} // namespace

FactoredDivisor make_divisor(QuotientPresentation ambient, std::vector<DivisorFactor> factors) {
    auto smooth = is_smooth(ambient);
    if (!smooth.smooth) throw argument_error("divisor ambient is not smooth");
    auto relGB = groebner_basis(ambient.relations);
    for (auto& df : factors) {
        if (df.multiplicity == 0) throw argument_error("factor multiplicity must be positive");
        if (normal_form(df.factor, relGB).is_zero())
            throw argument_error("divisor factor vanishes on the ambient");
        if (contains_one(with_factor(ambient, df.factor)))
            throw argument_error("divisor factor is a unit on the ambient");
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            if (associates(factors[i].factor, factors[j].factor))
                throw argument_error("divisor factors " + std::to_string(i) + " and " +
                                     std::to_string(j) + " are associate");
            if (radical_membership(factors[j].factor, with_factor(ambient, factors[i].factor)) ||
                radical_membership(factors[i].factor, with_factor(ambient, factors[j].factor)))
                throw argument_error("divisor factors " + std::to_string(i) + " and " +
                                     std::to_string(j) + " do not meet properly");
        }
    return FactoredDivisor{std::move(ambient), std::move(factors)};
}

namespace {

std::vector<std::vector<std::size_t>> subsets_by_size(std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1ull << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

Ideal subset_ideal(const FactoredDivisor& D, const std::vector<std::size_t>& subset) {
    Ideal I = D.ambient.relations;
    for (auto i : subset) I = ideal_sum(I, Ideal::principal(D.factors[i].factor));
    return I;
}

} // namespace

SncVerdict snc_check_global(const FactoredDivisor& D) {
    if (!is_smooth(D.ambient).smooth) throw argument_error("snc check: ambient is not smooth");
    const int d = dimension(D.ambient.relations);
    SncVerdict verdict;
    if (D.factors.size() > 62) throw resource_error("snc check: too many factors");
    for (const auto& subset : subsets_by_size(D.factors.size())) {
        Ideal I_S = subset_ideal(D, subset);
        if (contains_one(I_S)) continue; // empty intersection
        bool ok;
        SncFailureReason reason;
        if (static_cast<int>(subset.size()) > d) {
            ok = false;
            reason = SncFailureReason::excess_intersection;
        } else {
            const int expected = d - static_cast<int>(subset.size());
            bool dim_ok = dimension(I_S) == expected;
            // with the codimension pinned, the subset scheme is a complete
            // intersection on the smooth ambient, where smoothness is the
            // rank criterion; in dimension zero it degenerates to
            // reducedness. Both agree with is_smooth (property-tested)
            // without its colon sums.
            bool smooth_ok = false;
            if (dim_ok && expected == 0) {
                Ideal reduced = interreduced(I_S);
                smooth_ok = equal_ideals(reduced, radical_zero_dim(reduced));
            } else if (dim_ok) {
                smooth_ok = contains_one(rank_singular_locus({D.ambient.ring, I_S}));
            }
            ok = dim_ok && smooth_ok;
            reason = subset.size() == 1 ? SncFailureReason::component_singular
                                        : SncFailureReason::non_transversal;
        }
        if (!ok) {
            verdict.snc = false;
            verdict.failures.push_back({subset, reason});
        }
    }
    return verdict;
}

namespace {

using QMatrix = std::vector<std::vector<Rational>>;

std::size_t rank_of(QMatrix M) {
    std::size_t rank = 0;
    const std::size_t rows = M.size();
    if (rows == 0) return 0;
    const std::size_t cols = M[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && M[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(M[pivot], M[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (M[r][c] == 0) continue;
            Rational q = M[r][c] / M[rank][c];
            for (std::size_t k = c; k < cols; ++k) M[r][k] -= q * M[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::vector<Rational> gradient_at(const Polynomial& f, const std::vector<Rational>& p) {
    std::vector<Rational> row;
    row.reserve(f.ring()->arity());
    for (std::size_t v = 0; v < f.ring()->arity(); ++v)
        row.push_back(partial_derivative(f, v).evaluate(p));
    return row;
}

} // namespace

SncVerdict snc_check_at_point(const FactoredDivisor& D, const std::vector<Rational>& p) {
    const auto& amb = D.ambient;
    if (p.size() != amb.ring->arity()) throw argument_error("point arity mismatch");
    for (const auto& r : amb.relations.nonzero_gens())
        if (r.evaluate(p) != 0) throw argument_error("point does not lie on the ambient");
    const std::size_t n = amb.ring->arity();
    const int d = dimension(amb.relations);

    QMatrix rel_rows;
    for (const auto& r : amb.relations.nonzero_gens()) rel_rows.push_back(gradient_at(r, p));
    if (rank_of(rel_rows) != n - static_cast<std::size_t>(d))
        throw argument_error("snc check: ambient is not smooth at the point");

    std::vector<std::size_t> vanishing;
    for (std::size_t i = 0; i < D.factors.size(); ++i)
        if (D.factors[i].factor.evaluate(p) == 0) vanishing.push_back(i);

    SncVerdict verdict;
    for (const auto& subset_local : subsets_by_size(vanishing.size())) {
        std::vector<std::size_t> subset;
        for (auto k : subset_local) subset.push_back(vanishing[k]);
        bool ok;
        SncFailureReason reason;
        if (static_cast<int>(subset.size()) > d) {
            ok = false;
            reason = SncFailureReason::excess_intersection;
        } else {
            QMatrix rows = rel_rows;
            for (auto i : subset) rows.push_back(gradient_at(D.factors[i].factor, p));
            ok = rank_of(rows) == (n - static_cast<std::size_t>(d)) + subset.size();
            reason = subset.size() == 1 ? SncFailureReason::component_singular
                                        : SncFailureReason::non_transversal;
        }
        if (!ok) {
            verdict.snc = false;
            verdict.failures.push_back({subset, reason});
        }
    }
    return verdict;
}

bool monomial_check(const FactoredDivisor& D) { return snc_check_global(D.reduction()).snc; }

std::pair<BlowupStep, bool> separate_components(const QuotientPresentation& ambient,
                                                const Ideal& I1, const Ideal& I2) {
    if (!I1.ring()->same_as(*ambient.ring) || !I2.ring()->same_as(*ambient.ring))
        throw argument_error("separate: ideals live outside the ambient ring");
    Ideal full1 = ideal_sum(I1, ambient.relations);
    Ideal full2 = ideal_sum(I2, ambient.relations);
    if (contains_one(full1) || contains_one(full2))
        throw argument_error("separate: components must be proper");
    auto contained = [](const Ideal& A, const Ideal& B) {
        auto gb = groebner_basis(B);
        for (const auto& g : A.nonzero_gens())
            if (!normal_form(g, gb).is_zero()) return false;
        return true;
    };
    if (contained(full1, full2) || contained(full2, full1))
        throw argument_error("separate: one component contains the other");

    Center center{ambient, ideal_sum(I1, I2)};
    BlowupStep step = blowup_charts(center);
    bool separated = true;
    for (const auto& chart : step.charts) {
        Ideal s1 = strict_transform(chart, I1);
        Ideal s2 = strict_transform(chart, I2);
        if (!contains_one(ideal_sum(s1, s2))) separated = false;
    }
    return {std::move(step), separated};
}

namespace {

// reduced 0-dimensional locus where the snc conditions actually fail
Ideal failure_locus(const QuotientPresentation& amb, const FactoredDivisor& D,
                    const SncFailure& failure) {
    Ideal I_S = amb.relations;
    for (auto i : failure.subset) I_S = ideal_sum(I_S, Ideal::principal(D.factors[i].factor));
    Ideal raw = [&] {
        switch (failure.reason) {
            case SncFailureReason::non_transversal: {
                // the subset scheme is a fat zero-dimensional scheme exactly
                // at its tangency points: the colon by the radical is proper
                // there and nowhere else
                Ideal reduced = interreduced(I_S);
                if (dimension(reduced) == 0) {
                    Ideal radical = radical_zero_dim(reduced);
                    return quotient(reduced, radical);
                }
                return rank_singular_locus({amb.ring, I_S});
            }
            case SncFailureReason::component_singular:
                // singular points of one component; transversal crossings
                // with the others stay out
                return rank_singular_locus({amb.ring, I_S});
            case SncFailureReason::excess_intersection:
                return interreduced(I_S); // every common point is a failure
        }
        throw argument_error("unknown snc failure reason");
    }();
    if (dimension(raw) != 0)
        throw argument_error("snc failure locus is positive-dimensional on a surface");
    return radical_zero_dim(raw);
}

} // namespace

std::vector<SncLeaf> snc_normalize(ChartTree& tree, const TreeSlot& start,
                                   std::vector<DivisorFactor> factors, unsigned& budget,
                                   unsigned& exceptional_counter,
                                   std::vector<std::pair<int, Ideal>>* centers_out) {
    std::vector<SncLeaf> done;
    std::vector<std::pair<TreeSlot, std::vector<DivisorFactor>>> work;
    work.emplace_back(start, std::move(factors));

    while (!work.empty()) {
        auto [slot, divisor_factors] = std::move(work.back());
        work.pop_back();
        QuotientPresentation pres = tree.presentation_at(slot);
        FactoredDivisor D{pres, divisor_factors};
        SncVerdict verdict = snc_check_global(D);
        if (verdict.snc) {
            done.push_back({slot, std::move(verdict), std::move(divisor_factors)});
            continue;
        }
        if (budget == 0) throw resource_error("snc normalization: step budget exhausted");
        --budget;

        Ideal center_ideal = failure_locus(pres, D, verdict.failures.front());
        for (std::size_t k = 1; k < verdict.failures.size(); ++k)
            center_ideal = intersection(center_ideal, failure_locus(pres, D, verdict.failures[k]));
        center_ideal = minimal_generators(center_ideal, pres.relations);

        int node = tree.attach(slot, Center{pres, center_ideal}, /*propagate_records=*/false);
        if (centers_out) centers_out->emplace_back(node, center_ideal);
        std::string exc_name = "E" + std::to_string(++exceptional_counter);

        const TreeNode& tree_node = tree.nodes()[node];
        for (std::size_t ci = 0; ci < tree_node.step.charts.size(); ++ci) {
            const Chart& chart = tree_node.step.charts[ci];
            std::vector<DivisorFactor> next;
            for (const auto& df : divisor_factors) {
                auto sf = strict_factor(chart, df.factor);
                if (sf) next.push_back({sf->first, df.multiplicity, df.name});
            }
            Polynomial g = chart.exceptional_generator();
            if (!contains_one(ideal_sum(Ideal::principal(g), chart.relations)))
                next.push_back({g.primitive(), 1, exc_name});
            auto& records = tree.records_at(TreeSlot{node, static_cast<int>(ci)});
            for (const auto& df : next)
                records[df.name] =
                    TrackedIdeal{Ideal::principal(df.factor), TransformRule::strict()};
            work.emplace_back(TreeSlot{node, static_cast<int>(ci)}, std::move(next));
        }
    }
    std::sort(done.begin(), done.end(),
              [](const SncLeaf& a, const SncLeaf& b) { return a.slot < b.slot; });
    return done;
}

SncNormalizationResult strnorm_surface(const FactoredDivisor& D, unsigned max_steps) {
    FactoredDivisor validated = make_divisor(D.ambient, D.factors);
    if (dimension(D.ambient.relations) != 2)
        throw argument_error("strnorm: ambient must be a surface");
    for (auto& df : validated.factors)
        if (df.multiplicity != 1)
            throw argument_error("strnorm: divisor must be reduced (all multiplicities 1)");
    std::size_t unnamed = 0;
    for (auto& df : validated.factors)
        if (df.name.empty()) df.name = "Z" + std::to_string(++unnamed);

    SncNormalizationResult result;
    result.tree = ChartTree{validated.ambient};
    for (const auto& df : validated.factors)
        result.tree.records_at(TreeSlot{})
            .emplace(df.name, TrackedIdeal{Ideal::principal(df.factor), TransformRule::strict()});
    unsigned budget = max_steps;
    unsigned exc_counter = 0;
    result.leaves =
        snc_normalize(result.tree, TreeSlot{}, validated.factors, budget, exc_counter);
    result.steps = max_steps - budget;
    return result;
}

} // namespace blowup
