#include "blowup/json_io.hpp"

#include <sstream>

#include "blowup/parse.hpp"

namespace blowup {

Json ring_to_json(const PolyRing& ring) {
    Json j;
    j["vars"] = ring.vars();
    j["order"] = ring.order().name();
    return j;
}

RingPtr ring_from_json(const Json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    MonomialOrder ord = MonomialOrder::from_name(j.at("order").get<std::string>());
    return make_ring(std::move(vars), ord);
}

Json ideal_to_json(const Ideal& I) {
    Json arr = Json::array();
    for (const auto& g : I.gens()) arr.push_back(g.str());
    return arr;
}

Ideal ideal_from_json(const Json& j, const RingPtr& ring) {
    std::vector<Polynomial> gens;
    for (const auto& s : j) gens.push_back(parse_polynomial(ring, s.get<std::string>()));
    if (gens.empty()) return Ideal::zero(ring);
    return Ideal(ring, std::move(gens));
}

namespace {

Json chart_to_json(const Chart& chart) {
    Json j;
    j["selected"] = chart.selected;
    j["ring"] = ring_to_json(*chart.ring);
    j["new_vars"] = chart.new_vars;
    j["relations"] = ideal_to_json(chart.relations);
    j["exceptional"] = chart.exceptional_generator().str();
    return j;
}

Chart chart_from_json(const Json& j, const RingPtr& parent_ring) {
    Chart chart;
    chart.selected = j.at("selected").get<std::size_t>();
    chart.ring = ring_from_json(j.at("ring"));
    chart.new_vars = j.at("new_vars").get<std::vector<std::string>>();
    chart.relations = ideal_from_json(j.at("relations"), chart.ring);
    chart.exceptional =
        Ideal::principal(parse_polynomial(chart.ring, j.at("exceptional").get<std::string>()));
    (void)parent_ring;
    return chart;
}

const char* rule_name(TransformRule::Kind k) {
    switch (k) {
        case TransformRule::Kind::total: return "total";
        case TransformRule::Kind::strict: return "strict";
        case TransformRule::Kind::controlled: return "controlled";
    }
    return "?";
}

TransformRule rule_from_json(const Json& j) {
    std::string kind = j.at("rule").get<std::string>();
    if (kind == "total") return TransformRule::total();
    if (kind == "strict") return TransformRule::strict();
    if (kind == "controlled") return TransformRule::controlled(j.at("control").get<unsigned>());
    throw argument_error("unknown transform rule '" + kind + "'");
}

Json records_to_json(const std::map<std::string, TrackedIdeal>& records) {
    Json j = Json::object();
    for (const auto& [name, tracked] : records) {
        Json r;
        r["rule"] = rule_name(tracked.rule.kind);
        if (tracked.rule.kind == TransformRule::Kind::controlled)
            r["control"] = tracked.rule.control;
        r["generators"] = ideal_to_json(tracked.ideal);
        j[name] = std::move(r);
    }
    return j;
}

std::map<std::string, TrackedIdeal> records_from_json(const Json& j, const RingPtr& ring) {
    std::map<std::string, TrackedIdeal> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        TrackedIdeal t{ideal_from_json(it.value().at("generators"), ring),
                       rule_from_json(it.value())};
        out.emplace(it.key(), std::move(t));
    }
    return out;
}

} // namespace

Json step_to_json(const BlowupStep& step) {
    Json j;
    j["center"] = ideal_to_json(step.center.ideal);
    Json charts = Json::array();
    for (const auto& c : step.charts) charts.push_back(chart_to_json(c));
    j["charts"] = std::move(charts);
    return j;
}

Json tree_to_json(const ChartTree& tree) {
    Json j;
    j["format"] = "chart-tree";
    Json root;
    root["ring"] = ring_to_json(*tree.root().ring);
    root["relations"] = ideal_to_json(tree.root().relations);
    root["records"] = records_to_json(tree.records_at(TreeSlot{}));
    j["root"] = std::move(root);
    Json nodes = Json::array();
    for (const auto& node : tree.nodes()) {
        Json n;
        n["parent"] = node.attached_at.node;
        n["parent_chart"] = node.attached_at.chart;
        n["step"] = step_to_json(node.step);
        Json recs = Json::array();
        for (const auto& r : node.chart_records) recs.push_back(records_to_json(r));
        n["records"] = std::move(recs);
        nodes.push_back(std::move(n));
    }
    j["nodes"] = std::move(nodes);
    return j;
}

ChartTree tree_from_json(const Json& j) {
    if (j.at("format").get<std::string>() != "chart-tree")
        throw argument_error("not a chart-tree document");
    RingPtr root_ring = ring_from_json(j.at("root").at("ring"));
    QuotientPresentation root{root_ring, ideal_from_json(j.at("root").at("relations"), root_ring)};
    ChartTree tree{root};
    tree.records_at(TreeSlot{}) = records_from_json(j.at("root").at("records"), root_ring);
    for (const auto& n : j.at("nodes")) {
        TreeSlot at{n.at("parent").get<int>(), n.at("parent_chart").get<int>()};
        QuotientPresentation amb = tree.presentation_at(at);
        Ideal center = ideal_from_json(n.at("step").at("center"), amb.ring);
        TreeNode node;
        node.attached_at = at;
        node.step = BlowupStep{Center{amb, center}, {}};
        for (const auto& cj : n.at("step").at("charts"))
            node.step.charts.push_back(chart_from_json(cj, amb.ring));
        for (std::size_t ci = 0; ci < node.step.charts.size(); ++ci)
            node.chart_records.push_back(
                records_from_json(n.at("records").at(ci), node.step.charts[ci].ring));
        tree.adopt_node(std::move(node));
    }
    return tree;
}

Json snc_verdict_to_json(const SncVerdict& v) {
    Json j;
    j["snc"] = v.snc;
    Json fails = Json::array();
    for (const auto& f : v.failures) {
        Json fj;
        Json subset = Json::array();
        for (auto i : f.subset) subset.push_back(i + 1); // 1-based factor numbers
        fj["subset"] = std::move(subset);
        fj["reason"] = to_string(f.reason);
        fails.push_back(std::move(fj));
    }
    j["failures"] = std::move(fails);
    return j;
}

Json smoothness_to_json(const SmoothnessVerdict& v) {
    Json j;
    j["smooth"] = v.smooth;
    j["summary"] = v.summary;
    j["witness"] = ideal_to_json(v.witness);
    return j;
}

Json principalization_to_json(const PrincipalizationResult& r) {
    Json j;
    j["n"] = r.n;
    j["step"] = step_to_json(r.step);
    Json gens = Json::array();
    for (const auto& per_chart : r.chart_generators) {
        Json arr = Json::array();
        for (const auto& g : per_chart) arr.push_back(g.str());
        gens.push_back(std::move(arr));
    }
    j["chart_generators"] = std::move(gens);
    return j;
}

Json strnorm_to_json(const SncNormalizationResult& r) {
    Json j;
    j["format"] = "strnorm";
    j["steps"] = r.steps;
    j["tree"] = tree_to_json(r.tree);
    Json leaves = Json::array();
    for (const auto& leaf : r.leaves) {
        Json lj;
        lj["path"] = r.tree.path_of(leaf.slot);
        lj["snc"] = leaf.verdict.snc;
        Json div = Json::array();
        for (const auto& df : leaf.divisor) {
            Json dj;
            dj["name"] = df.name;
            dj["factor"] = df.factor.str();
            dj["mult"] = df.multiplicity;
            div.push_back(std::move(dj));
        }
        lj["divisor"] = std::move(div);
        leaves.push_back(std::move(lj));
    }
    j["leaves"] = std::move(leaves);
    return j;
}

Json trace_to_json(const ResolutionTrace& trace) {
    Json j;
    j["format"] = "resolution-trace";
    j["ring"] = ring_to_json(*trace.curve.ring());
    j["curve"] = trace.curve.str();
    j["initial_singular_locus"] = ideal_to_json(trace.initial_singular_locus);
    j["tree"] = tree_to_json(trace.tree);
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
        Json sj;
        sj["node"] = s.node;
        sj["path"] = trace.tree.path_of(s.attached_at);
        sj["phase"] = s.phase;
        sj["center"] = ideal_to_json(s.center);
        sj["mu_before"] = s.mu_before;
        sj["mu_after"] = s.mu_after;
        steps.push_back(std::move(sj));
    }
    j["steps"] = std::move(steps);
    Json verdicts = Json::array();
    for (const auto& v : trace.verdicts) {
        Json vj;
        vj["node"] = v.slot.node;
        vj["chart"] = v.slot.chart;
        vj["path"] = trace.tree.path_of(v.slot);
        vj["strict_smooth"] = v.strict_smooth;
        vj["total_snc"] = v.total_snc;
        verdicts.push_back(std::move(vj));
    }
    j["verdicts"] = std::move(verdicts);
    return j;
}

ResolutionTrace trace_from_json(const Json& j) {
    if (j.at("format").get<std::string>() != "resolution-trace")
        throw argument_error("not a resolution-trace document");
    ResolutionTrace trace;
    trace.tree = tree_from_json(j.at("tree"));
    const RingPtr& ring = trace.tree.root().ring;
    trace.curve = parse_polynomial(ring, j.at("curve").get<std::string>());
    trace.initial_singular_locus = ideal_from_json(j.at("initial_singular_locus"), ring);
    for (const auto& sj : j.at("steps")) {
        ResolutionStep s;
        s.node = sj.at("node").get<int>();
        s.attached_at = trace.tree.nodes().at(s.node).attached_at;
        s.phase = sj.at("phase").get<int>();
        s.center = ideal_from_json(
            sj.at("center"), trace.tree.nodes().at(s.node).step.center.ambient.ring);
        s.mu_before = sj.at("mu_before").get<unsigned>();
        s.mu_after = sj.at("mu_after").get<unsigned>();
        trace.steps.push_back(std::move(s));
    }
    for (const auto& vj : j.at("verdicts")) {
        LeafVerdict v;
        v.slot = TreeSlot{vj.at("node").get<int>(), vj.at("chart").get<int>()};
        v.strict_smooth = vj.at("strict_smooth").get<bool>();
        v.total_snc = vj.at("total_snc").get<bool>();
        trace.verdicts.push_back(std::move(v));
    }
    return trace;
}

std::string trace_summary(const ResolutionTrace& trace) {
    std::ostringstream os;
    if (trace.steps.empty()) os << "no blow ups required\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        os << "step " << (i + 1) << ": phase " << s.phase << "  depth "
           << (trace.tree.depth_of(s.attached_at) + 1) << "  at " << trace.tree.path_of(s.attached_at)
           << "  center (";
        const auto& gens = s.center.gens();
        for (std::size_t k = 0; k < gens.size(); ++k)
            os << (k ? ", " : "") << gens[k].str();
        os << ")  mu " << s.mu_before << " -> " << s.mu_after << "\n";
    }
    for (const auto& v : trace.verdicts)
        os << "leaf " << trace.tree.path_of(v.slot)
           << ": strict transform smooth = " << (v.strict_smooth ? "true" : "false")
           << ", total transform snc = " << (v.total_snc ? "true" : "false") << "\n";
    return os.str();
}

} // namespace blowup
