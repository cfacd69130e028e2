#include "blowup/chart.hpp"

#include <algorithm>

#include "blowup/config.hpp"

namespace blowup {

namespace {

// Chart variables are named T<depth>_<j>; the depth is one past the largest
// depth already present in the ambient ring, so iterated blow ups stay
// collision-free and readable.
unsigned next_depth(const PolyRing& ring) {
    unsigned depth = 0;
    for (const auto& v : ring.vars()) {
        if (v.size() < 3 || v[0] != 'T') continue;
        std::size_t us = v.find('_');
        if (us == std::string::npos || us < 2) continue;
        bool digits = true;
        for (std::size_t i = 1; i < us && digits; ++i)
            digits = std::isdigit(static_cast<unsigned char>(v[i]));
        for (std::size_t i = us + 1; i < v.size() && digits; ++i)
            digits = std::isdigit(static_cast<unsigned char>(v[i]));
        if (digits && us + 1 < v.size())
            depth = std::max(depth, static_cast<unsigned>(std::stoul(v.substr(1, us - 1))));
    }
    return depth + 1;
}

} // namespace

BlowupStep blowup_charts(const Center& center) {
    const auto& gens = center.ideal.gens();
    for (const auto& g : gens)
        if (g.is_zero()) throw argument_error("blow-up center has a zero generator");

    const RingPtr& amb = center.ambient.ring;
    unsigned depth = next_depth(*amb);

    BlowupStep step{center, {}};
    step.charts.reserve(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        Chart chart;
        chart.selected = k;
        std::vector<std::string> vars = amb->vars();
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (j == k) continue;
            std::string name = "T" + std::to_string(depth) + "_" + std::to_string(j);
            while (amb->index_of(name) != PolyRing::npos) name += "_";
            chart.new_vars.push_back(name);
            vars.push_back(name);
        }
        chart.ring = vars.size() == amb->arity() ? amb : make_ring(vars, amb->order());

        Polynomial g = gens[k].extend_to(chart.ring);
        std::vector<Polynomial> raw;
        for (const auto& r : center.ambient.relations.nonzero_gens())
            raw.push_back(r.extend_to(chart.ring));
        std::size_t fresh = amb->arity();
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (j == k) continue;
            Polynomial tj = Polynomial::variable(chart.ring, fresh++);
            raw.push_back(g * tj - gens[j].extend_to(chart.ring));
        }
        Ideal raw_ideal = raw.empty() ? Ideal::zero(chart.ring) : Ideal(chart.ring, std::move(raw));
        chart.exceptional = Ideal::principal(g);
        chart.relations = saturation(raw_ideal, chart.exceptional).first;
        step.charts.push_back(std::move(chart));
    }
    return step;
}

Ideal total_transform(const Chart& chart, const Ideal& I) {
    std::vector<Polynomial> gens;
    gens.reserve(I.size());
    for (const auto& f : I.gens()) gens.push_back(f.extend_to(chart.ring));
    return Ideal(chart.ring, std::move(gens));
}

Ideal strict_transform(const Chart& chart, const Ideal& I) {
    Ideal tot = ideal_sum(total_transform(chart, I), chart.relations);
    return saturation(tot, chart.exceptional).first;
}

std::optional<Polynomial> divide_on_chart(const Polynomial& h, const Polynomial& g, unsigned c,
                                          const Ideal& relations) {
    const RingPtr& ring = relations.ring();
    if (c == 0) return h;
    Polynomial d = g.pow(c);

    // fast path: plain exact division of the normal form
    auto relGB = groebner_basis(relations);
    Polynomial hred = normal_form(h, relGB);
    if (hred.is_zero()) return Polynomial::zero(ring);
    try {
        Polynomial q = divide_exact(hred, d);
        return normal_form(q, relGB);
    } catch (const argument_error&) {
        // fall through to the chart-level division
    }

    // On the chart, q = h/g^c is regular whenever the divisibility holds
    // modulo the relations: W - q lies in (relations + (g^c W - h)) : g^c, so
    // one colon exposes it and the final membership check certifies it.
    RingPtr ext = extended_ring(ring, "W@", 1, /*prepend=*/true);
    std::vector<std::size_t> fwd(ring->arity());
    for (std::size_t i = 0; i < ring->arity(); ++i) fwd[i] = i + 1;
    std::vector<Polynomial> gens;
    for (const auto& r : relations.nonzero_gens()) gens.push_back(r.map_to(ext, fwd));
    Polynomial w = Polynomial::variable(ext, 0);
    gens.push_back(d.map_to(ext, fwd) * w - h.map_to(ext, fwd));
    Ideal graph(ext, std::move(gens));
    Ideal colon = quotient(graph, Ideal::principal(d.map_to(ext, fwd)));
    auto gb = groebner_basis(colon, MonomialOrder::block(1));
    Polynomial q_ext = normal_form(w, gb);
    for (const auto& t : q_ext.terms())
        if (t.mono.exp[0]) return std::nullopt; // W survives: not divisible
    std::vector<std::size_t> back(ext->arity(), 0);
    for (std::size_t i = 0; i < ring->arity(); ++i) back[i + 1] = i;
    back[0] = 0; // W never occurs below
    Polynomial q = normal_form(q_ext.map_to(ring, back), relGB);
    if (!ideal_member(q * d - h, relations)) return std::nullopt;
    return q;
}

Ideal controlled_transform(const Chart& chart, const Ideal& I, unsigned c) {
    Ideal tot = total_transform(chart, I);
    if (c == 0) return tot;
    const Polynomial& g = chart.exceptional_generator();
    std::vector<Polynomial> gens;
    for (const auto& h : tot.gens()) {
        if (h.is_zero()) continue;
        auto q = divide_on_chart(h, g, c, chart.relations);
        if (!q)
            throw argument_error(
                "controlled transform: generator '" + h.str() +
                "' is not divisible by the exceptional power " + std::to_string(c));
        gens.push_back(std::move(*q));
    }
    if (gens.empty()) return Ideal::zero(chart.ring);
    return Ideal(chart.ring, std::move(gens));
}

bool verify_principal_on_chart(const Chart& chart, const Ideal& J) {
    Ideal lhs = ideal_sum(total_transform(chart, J), chart.relations);
    Ideal rhs = ideal_sum(chart.exceptional, chart.relations);
    return equal_ideals(lhs, rhs);
}

std::optional<std::pair<Polynomial, unsigned>> strict_factor(const Chart& chart,
                                                             const Polynomial& f) {
    auto relGB = groebner_basis(chart.relations);
    Polynomial q = normal_form(f.extend_to(chart.ring), relGB);
    if (q.is_zero()) return std::nullopt; // vanishes identically on the chart
    const Polynomial& g = chart.exceptional_generator();
    unsigned c = 0;
    // when g is a unit on the chart the exceptional divisor misses it and
    // there is nothing to divide out
    if (!contains_one(ideal_sum(chart.exceptional, chart.relations))) {
        while (true) {
            if (c > limits().saturation_cap)
                throw resource_error("strict factor: exceptional division does not stabilize");
            auto next = divide_on_chart(q, g, 1, chart.relations);
            if (!next || next->is_zero()) break;
            q = std::move(*next);
            ++c;
        }
    }
    if (contains_one(ideal_sum(Ideal::principal(q), chart.relations)))
        return std::nullopt; // unit: the strict transform misses this chart
    return std::make_pair(q.primitive(), c);
}

} // namespace blowup
