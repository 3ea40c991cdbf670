#ifndef CHEMTREE_TREE_HPP
#define CHEMTREE_TREE_HPP

#include <utility>
#include <vector>

namespace chemtree {

/// An unrooted tree with bounded vertex degrees over dense vertex ids
/// 0..n-1. The default degree bound of 4 models a hydrogen-suppressed
/// saturated carbon skeleton. Immutable after construction; construction
/// verifies connectivity, the edge count and the degree bound.
class ChemicalTree {
public:
    ChemicalTree(int order, std::vector<std::pair<int, int>> edges, int max_degree = 4);

    int order() const { return static_cast<int>(adjacency_.size()); }
    int max_degree() const { return max_degree_; }
    int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    int max_degree_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// A chemical tree with a distinguished pendent vertex (the root).
/// Models an alcohol molecule: the root is the hydroxyl oxygen and the
/// remaining vertices form the carbon skeleton.
class PendentRootedTree {
public:
    PendentRootedTree(ChemicalTree tree, int root);

    const ChemicalTree& tree() const { return tree_; }
    int order() const { return tree_.order(); }
    int root() const { return root_; }
    /// The unique neighbor of the root.
    int sub_root() const { return tree_.neighbors(root_).front(); }

private:
    ChemicalTree tree_;
    int root_;
};

/// A tree whose vertices carry non-negative real weights. The degree
/// bound of the underlying tree may exceed 4.
class VertexWeightedTree {
public:
    VertexWeightedTree(ChemicalTree tree, std::vector<double> weights);

    const ChemicalTree& tree() const { return tree_; }
    int order() const { return tree_.order(); }
    double weight(int v) const { return weights_.at(v); }
    const std::vector<double>& weights() const { return weights_; }
    double total_weight() const { return total_weight_; }

private:
    ChemicalTree tree_;
    std::vector<double> weights_;
    double total_weight_;
};

/// A weighted tree whose edges are oriented toward a single terminal
/// vertex: every non-terminal vertex has exactly one outbound arc
/// (`parent`), the terminal has none.
class DirectedTree {
public:
    /// `parent[v]` is the head of v's outbound arc; -1 exactly at the terminal.
    DirectedTree(std::vector<int> parent, std::vector<double> weights);

    int order() const { return static_cast<int>(parent_.size()); }
    int terminal() const { return terminal_; }
    /// -1 for the terminal vertex.
    int parent(int v) const { return parent_.at(v); }
    const std::vector<int>& parents() const { return parent_; }
    double weight(int v) const { return weights_.at(v); }
    const std::vector<double>& weights() const { return weights_; }
    double total_weight() const { return total_weight_; }
    /// Children lists (tails of inbound arcs), built once at construction.
    const std::vector<int>& children(int v) const { return children_.at(v); }
    /// The underlying undirected tree, degree bound relaxed as needed.
    ChemicalTree undirected() const;

private:
    std::vector<int> parent_;
    std::vector<double> weights_;
    std::vector<std::vector<int>> children_;
    int terminal_;
    double total_weight_;
};

/// Breadth-first distances from `source`; d(source) = 0.
std::vector<int> distances_from(const ChemicalTree& tree, int source);

/// Orient all edges toward `terminal`. The terminal must be an internal
/// vertex (degree >= 2).
DirectedTree to_directed(const VertexWeightedTree& tree, int terminal);

}  // namespace chemtree

#endif
