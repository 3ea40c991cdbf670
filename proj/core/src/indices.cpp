#include "chemtree/indices.hpp"

#include <string>

#include "chemtree/errors.hpp"

namespace chemtree {

namespace {

// Subtree weights below each edge, oriented away from vertex 0, via an
// iterative post-order pass.
std::vector<double> subtree_weights(const VertexWeightedTree& tree, std::vector<int>& parent) {
    const int n = tree.order();
    parent.assign(n, -2);
    std::vector<int> order_stack;
    order_stack.reserve(n);
    order_stack.push_back(0);
    parent[0] = -1;
    for (std::size_t i = 0; i < order_stack.size(); ++i) {
        int v = order_stack[i];
        for (int u : tree.tree().neighbors(v)) {
            if (parent[u] == -2) {
                parent[u] = v;
                order_stack.push_back(u);
            }
        }
    }
    std::vector<double> below(n);
    for (int v = 0; v < n; ++v) below[v] = tree.weight(v);
    for (auto it = order_stack.rbegin(); it != order_stack.rend(); ++it) {
        if (parent[*it] >= 0) below[parent[*it]] += below[*it];
    }
    return below;
}

}  // namespace

DegreeCounts degree_counts(const ChemicalTree& tree) {
    DegreeCounts counts;
    for (int v = 0; v < tree.order(); ++v) {
        switch (tree.degree(v)) {
            case 1: ++counts.n1; break;
            case 2: ++counts.n2; break;
            case 3: ++counts.n3; break;
            case 4: ++counts.n4; break;
            default:
                throw PreconditionError("degree counts are defined for degrees 1..4, vertex " +
                                        std::to_string(v) + " has degree " +
                                        std::to_string(tree.degree(v)));
        }
    }
    return counts;
}

DegreeCounts degree_counts(const PendentRootedTree& tree) { return degree_counts(tree.tree()); }

long long first_zagreb(const ChemicalTree& tree) {
    long long total = 0;
    for (int v = 0; v < tree.order(); ++v) {
        long long d = tree.degree(v);
        total += d * d;
    }
    return total;
}

long long second_zagreb(const ChemicalTree& tree) {
    long long total = 0;
    for (const auto& [u, v] : tree.edges())
        total += static_cast<long long>(tree.degree(u)) * tree.degree(v);
    return total;
}

double generalized_first_zagreb(const ChemicalTree& tree, const DegreeCostVector& costs) {
    DegreeCounts n = degree_counts(tree);
    return costs.c1 * n.n1 + costs.c2 * n.n2 + costs.c3 * n.n3 + costs.c4 * n.n4;
}

double ad_hoc_index(const ChemicalTree& tree, const DegreeCostVector& costs, double b3) {
    return generalized_first_zagreb(tree, costs) + b3 * static_cast<double>(second_zagreb(tree));
}

long long wiener(const ChemicalTree& tree) {
    // Each edge separates the tree into parts of size s and n-s and
    // contributes s*(n-s) pairs at distance crossing it.
    const int n = tree.order();
    std::vector<double> ones(n, 1.0);
    VertexWeightedTree unit(tree, std::move(ones));
    std::vector<int> parent;
    std::vector<double> below = subtree_weights(unit, parent);
    long long total = 0;
    for (int v = 0; v < n; ++v) {
        if (parent[v] >= 0) {
            long long s = static_cast<long long>(below[v] + 0.5);
            total += s * (n - s);
        }
    }
    return total;
}

double pair_weighted_wiener(const ChemicalTree& tree,
                            const std::vector<std::vector<double>>& pair_weights) {
    const int n = tree.order();
    if (static_cast<int>(pair_weights.size()) != n)
        throw PreconditionError("pair weight matrix must be order x order");
    for (int u = 0; u < n; ++u) {
        if (static_cast<int>(pair_weights[u].size()) != n)
            throw PreconditionError("pair weight matrix must be order x order");
        for (int v = 0; v < n; ++v) {
            if (!(pair_weights[u][v] >= 0.0))
                throw PreconditionError("pair weights must be non-negative");
            if (pair_weights[u][v] != pair_weights[v][u])
                throw PreconditionError("pair weights must be symmetric");
        }
    }
    double total = 0.0;
    for (int u = 0; u < n; ++u) {
        std::vector<int> dist = distances_from(tree, u);
        for (int v = u + 1; v < n; ++v) total += pair_weights[u][v] * dist[v];
    }
    return total;
}

double vertex_weighted_wiener(const VertexWeightedTree& tree) {
    std::vector<int> parent;
    std::vector<double> below = subtree_weights(tree, parent);
    const double total_weight = tree.total_weight();
    double total = 0.0;
    for (int v = 0; v < tree.order(); ++v) {
        if (parent[v] >= 0) total += below[v] * (total_weight - below[v]);
    }
    return total;
}

double vertex_weighted_wiener_pairwise(const VertexWeightedTree& tree) {
    double total = 0.0;
    for (int u = 0; u < tree.order(); ++u) {
        std::vector<int> dist = distances_from(tree.tree(), u);
        for (int v = u + 1; v < tree.order(); ++v)
            total += tree.weight(u) * tree.weight(v) * dist[v];
    }
    return total;
}

long long oxygen_distance(const PendentRootedTree& tree) {
    std::vector<int> dist = distances_from(tree.tree(), tree.root());
    long long total = 0;
    for (int d : dist) total += d;
    return total;
}

int subroot_indicator(const PendentRootedTree& tree, int i) {
    if (i < 2 || i > 4) throw PreconditionError("sub-root indicator index must be in 2..4");
    if (tree.order() < 3) throw PreconditionError("sub-root indicator needs order >= 3");
    return tree.tree().degree(tree.sub_root()) == i ? 1 : 0;
}

}  // namespace chemtree
