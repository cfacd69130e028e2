#ifndef BLOWUP_CHART_TREE_HPP
#define BLOWUP_CHART_TREE_HPP

#include <map>
#include <string>

#include "blowup/chart.hpp"

namespace blowup {

/// How a named ideal record propagates through a blow up.
struct TransformRule {
    enum class Kind { total, strict, controlled };
    Kind kind = Kind::strict;
    unsigned control = 0; // for controlled transforms

    static TransformRule total() { return {Kind::total, 0}; }
    static TransformRule strict() { return {Kind::strict, 0}; }
    static TransformRule controlled(unsigned c) { return {Kind::controlled, c}; }
};

struct TrackedIdeal {
    Ideal ideal;
    TransformRule rule;
};

/// Attachment point inside a tree: node −1 designates the root presentation.
struct TreeSlot {
    int node = -1;
    int chart = -1;

    bool is_root() const { return node < 0; }
    auto operator<=>(const TreeSlot&) const = default;
};

/// One blow up applied in one chart of its parent.
struct TreeNode {
    TreeSlot attached_at;
    BlowupStep step;
    std::vector<std::map<std::string, TrackedIdeal>> chart_records; // per chart
};

/// Rooted record of a succession of blow ups with per-chart transform ideals.
class ChartTree {
public:
    ChartTree() = default;
    explicit ChartTree(QuotientPresentation root) : root_(std::move(root)) {}

    const QuotientPresentation& root() const { return root_; }
    const std::vector<TreeNode>& nodes() const { return nodes_; }

    std::map<std::string, TrackedIdeal>& records_at(const TreeSlot& slot);
    const std::map<std::string, TrackedIdeal>& records_at(const TreeSlot& slot) const;

    QuotientPresentation presentation_at(const TreeSlot& slot) const;
    const Chart& chart_at(const TreeSlot& slot) const; // slot must not be root

    bool has_child(const TreeSlot& slot) const;

    /// Slots with no blow up below them, depth-first, charts in order.
    std::vector<TreeSlot> leaves() const;

    unsigned depth_of(const TreeSlot& slot) const;

    /// Chart-index path from the root, e.g. "/0/2"; "/" for the root itself.
    std::string path_of(const TreeSlot& slot) const;

    /// Attaches a blow up at `slot` and propagates every record by its rule
    /// (drivers that compute their own records pass propagate = false).
    /// Returns the index of the new node. The center's ambient must equal the
    /// slot's presentation.
    int attach(const TreeSlot& slot, const Center& center, bool propagate_records = true);

    /// Appends an already-built node (deserialization); the parent slot must
    /// exist and carry no other child.
    int adopt_node(TreeNode node);

private:
    QuotientPresentation root_;
    std::map<std::string, TrackedIdeal> root_records_;
    std::vector<TreeNode> nodes_;
};

/// Functional variant: a copy of the tree with the blow up attached.
ChartTree extend_tree(const ChartTree& tree, const TreeSlot& slot, const Center& center);

} // namespace blowup

#endif
