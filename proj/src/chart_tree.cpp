#include "blowup/chart_tree.hpp"

namespace blowup {

std::map<std::string, TrackedIdeal>& ChartTree::records_at(const TreeSlot& slot) {
    if (slot.is_root()) return root_records_;
    return nodes_.at(slot.node).chart_records.at(slot.chart);
}

const std::map<std::string, TrackedIdeal>& ChartTree::records_at(const TreeSlot& slot) const {
    if (slot.is_root()) return root_records_;
    return nodes_.at(slot.node).chart_records.at(slot.chart);
}

QuotientPresentation ChartTree::presentation_at(const TreeSlot& slot) const {
    if (slot.is_root()) return root_;
    return chart_at(slot).presentation();
}

const Chart& ChartTree::chart_at(const TreeSlot& slot) const {
    return nodes_.at(slot.node).step.charts.at(slot.chart);
}

bool ChartTree::has_child(const TreeSlot& slot) const {
    for (const auto& n : nodes_)
        if (n.attached_at == slot) return true;
    return false;
}

std::vector<TreeSlot> ChartTree::leaves() const {
    std::vector<TreeSlot> out;
    if (nodes_.empty()) {
        out.push_back(TreeSlot{});
        return out;
    }
    // the root counts as a leaf only when nothing is attached to it
    if (!has_child(TreeSlot{})) out.push_back(TreeSlot{});
    for (int ni = 0; ni < static_cast<int>(nodes_.size()); ++ni)
        for (int ci = 0; ci < static_cast<int>(nodes_[ni].step.charts.size()); ++ci) {
            TreeSlot slot{ni, ci};
            if (!has_child(slot)) out.push_back(slot);
        }
    return out;
}

unsigned ChartTree::depth_of(const TreeSlot& slot) const {
    unsigned d = 0;
    TreeSlot cur = slot;
    while (!cur.is_root()) {
        ++d;
        cur = nodes_.at(cur.node).attached_at;
    }
    return d;
}

std::string ChartTree::path_of(const TreeSlot& slot) const {
    if (slot.is_root()) return "/";
    std::string tail = "/" + std::to_string(slot.chart);
    return (nodes_.at(slot.node).attached_at.is_root()
                ? std::string()
                : path_of(nodes_.at(slot.node).attached_at)) +
           tail;
}

int ChartTree::attach(const TreeSlot& slot, const Center& center, bool propagate_records) {
    QuotientPresentation here = presentation_at(slot);
    if (!center.ambient.ring->same_as(*here.ring) ||
        !equal_ideals(center.ambient.relations, here.relations))
        throw argument_error("blow-up center ambient does not match the chart presentation");
    if (has_child(slot)) throw argument_error("a blow up is already attached to this chart");

    TreeNode node;
    node.attached_at = slot;
    node.step = blowup_charts(center);
    node.chart_records.resize(node.step.charts.size());

    static const std::map<std::string, TrackedIdeal> kNoRecords;
    const auto& records = propagate_records ? records_at(slot) : kNoRecords;
    for (std::size_t ci = 0; ci < node.step.charts.size(); ++ci) {
        const Chart& chart = node.step.charts[ci];
        for (const auto& [name, tracked] : records) {
            Ideal moved = [&] {
                switch (tracked.rule.kind) {
                    case TransformRule::Kind::total: return total_transform(chart, tracked.ideal);
                    case TransformRule::Kind::strict: return strict_transform(chart, tracked.ideal);
                    case TransformRule::Kind::controlled:
                        return controlled_transform(chart, tracked.ideal, tracked.rule.control);
                }
                throw argument_error("unknown transform rule");
            }();
            node.chart_records[ci].emplace(name, TrackedIdeal{std::move(moved), tracked.rule});
        }
    }
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
}

int ChartTree::adopt_node(TreeNode node) {
    const TreeSlot& at = node.attached_at;
    if (!at.is_root()) {
        if (at.node < 0 || at.node >= static_cast<int>(nodes_.size()))
            throw argument_error("adopt: parent node out of range");
        if (at.chart < 0 ||
            at.chart >= static_cast<int>(nodes_[at.node].step.charts.size()))
            throw argument_error("adopt: parent chart out of range");
    }
    if (has_child(at)) throw argument_error("adopt: parent chart already has a blow up");
    if (node.chart_records.size() != node.step.charts.size())
        throw argument_error("adopt: records do not match charts");
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
}

ChartTree extend_tree(const ChartTree& tree, const TreeSlot& slot, const Center& center) {
    ChartTree copy = tree;
    copy.attach(slot, center);
    return copy;
}

} // namespace blowup
