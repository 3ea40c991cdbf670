#include "chemtree/tree.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "chemtree/errors.hpp"

namespace chemtree {

ChemicalTree::ChemicalTree(int order, std::vector<std::pair<int, int>> edges, int max_degree)
    : max_degree_(max_degree), edges_(std::move(edges)) {
    if (order < 1) throw PreconditionError("tree order must be positive");
    if (max_degree_ < 1) throw PreconditionError("max degree must be positive");
    if (static_cast<int>(edges_.size()) != order - 1)
        throw PreconditionError("a tree of order " + std::to_string(order) + " needs exactly " +
                                std::to_string(order - 1) + " edges, got " +
                                std::to_string(edges_.size()));
    adjacency_.assign(order, {});
    for (const auto& [u, v] : edges_) {
        if (u < 0 || u >= order || v < 0 || v >= order || u == v)
            throw PreconditionError("edge endpoints out of range");
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (int v = 0; v < order; ++v) {
        if (degree(v) > max_degree_)
            throw PreconditionError("vertex " + std::to_string(v) + " has degree " +
                                    std::to_string(degree(v)) + " > " +
                                    std::to_string(max_degree_));
    }
    // n-1 edges + connectivity = acyclic.
    std::vector<char> seen(order, 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        for (int u : adjacency_[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                frontier.push(u);
            }
        }
    }
    if (reached != order) throw PreconditionError("edge list does not describe a connected graph");
}

PendentRootedTree::PendentRootedTree(ChemicalTree tree, int root)
    : tree_(std::move(tree)), root_(root) {
    if (root_ < 0 || root_ >= tree_.order()) throw PreconditionError("root id out of range");
    if (tree_.order() < 2) throw PreconditionError("a pendent-rooted tree needs order >= 2");
    if (tree_.degree(root_) != 1)
        throw PreconditionError("root must be a pendent vertex, got degree " +
                                std::to_string(tree_.degree(root_)));
}

VertexWeightedTree::VertexWeightedTree(ChemicalTree tree, std::vector<double> weights)
    : tree_(std::move(tree)), weights_(std::move(weights)), total_weight_(0.0) {
    if (static_cast<int>(weights_.size()) != tree_.order())
        throw PreconditionError("weight vector length must equal tree order");
    for (double w : weights_) {
        if (!(w >= 0.0) || !std::isfinite(w))
            throw PreconditionError("vertex weights must be finite and non-negative");
        total_weight_ += w;
    }
}

DirectedTree::DirectedTree(std::vector<int> parent, std::vector<double> weights)
    : parent_(std::move(parent)), weights_(std::move(weights)), terminal_(-1), total_weight_(0.0) {
    const int n = static_cast<int>(parent_.size());
    if (n < 1) throw PreconditionError("directed tree must have at least one vertex");
    if (static_cast<int>(weights_.size()) != n)
        throw PreconditionError("weight vector length must equal vertex count");
    children_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        if (parent_[v] == -1) {
            if (terminal_ != -1) throw PreconditionError("more than one terminal vertex");
            terminal_ = v;
        } else if (parent_[v] < 0 || parent_[v] >= n || parent_[v] == v) {
            throw PreconditionError("parent id out of range");
        } else {
            children_[parent_[v]].push_back(v);
        }
    }
    if (terminal_ == -1) throw PreconditionError("no terminal vertex (one parent entry must be -1)");
    for (double w : weights_) {
        if (!(w >= 0.0) || !std::isfinite(w))
            throw PreconditionError("vertex weights must be finite and non-negative");
        total_weight_ += w;
    }
    // Every parent chain must reach the terminal without revisiting.
    std::vector<char> state(n, 0);  // 0 unvisited, 1 on current chain, 2 done
    for (int v = 0; v < n; ++v) {
        int u = v;
        std::vector<int> chain;
        while (state[u] == 0 && u != terminal_) {
            state[u] = 1;
            chain.push_back(u);
            u = parent_[u];
        }
        if (state[u] == 1) throw PreconditionError("parent pointers contain a cycle");
        for (int c : chain) state[c] = 2;
    }
}

ChemicalTree DirectedTree::undirected() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(order() - 1);
    int degree_bound = 1;
    std::vector<int> degree(order(), 0);
    for (int v = 0; v < order(); ++v) {
        if (parent_[v] != -1) {
            edges.emplace_back(v, parent_[v]);
            ++degree[v];
            ++degree[parent_[v]];
        }
    }
    for (int d : degree) degree_bound = std::max(degree_bound, d);
    return ChemicalTree(order(), std::move(edges), std::max(4, degree_bound));
}

std::vector<int> distances_from(const ChemicalTree& tree, int source) {
    if (source < 0 || source >= tree.order()) throw PreconditionError("unknown vertex id");
    std::vector<int> dist(tree.order(), -1);
    std::queue<int> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        for (int u : tree.neighbors(v)) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                frontier.push(u);
            }
        }
    }
    return dist;
}

DirectedTree to_directed(const VertexWeightedTree& tree, int terminal) {
    if (terminal < 0 || terminal >= tree.order()) throw PreconditionError("unknown vertex id");
    if (tree.tree().degree(terminal) < 2)
        throw PreconditionError("terminal must be an internal vertex (degree >= 2)");
    std::vector<int> parent(tree.order(), -1);
    std::vector<int> dist = distances_from(tree.tree(), terminal);
    for (int v = 0; v < tree.order(); ++v) {
        if (v == terminal) continue;
        for (int u : tree.tree().neighbors(v)) {
            if (dist[u] == dist[v] - 1) {
                parent[v] = u;
                break;
            }
        }
    }
    return DirectedTree(std::move(parent), tree.weights());
}

}  // namespace chemtree
