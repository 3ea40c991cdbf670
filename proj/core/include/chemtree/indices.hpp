#ifndef CHEMTREE_INDICES_HPP
#define CHEMTREE_INDICES_HPP

#include <vector>

#include "chemtree/tree.hpp"

namespace chemtree {

/// Vertex counts by degree. On any tree both identities hold:
/// n1+n2+n3+n4 = order and n1+2*n2+3*n3+4*n4 = 2*(order-1).
struct DegreeCounts {
    int n1 = 0;
    int n2 = 0;
    int n3 = 0;
    int n4 = 0;

    int order() const { return n1 + n2 + n3 + n4; }
    bool operator==(const DegreeCounts&) const = default;
};

/// Per-degree costs c(1)..c(4) of the generalized first Zagreb index.
/// Coefficients reported as insignificant by a model are exactly 0.
struct DegreeCostVector {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;
};

/// Counts over all vertices; the root of a rooted tree contributes to n1.
/// Requires every degree <= 4.
DegreeCounts degree_counts(const ChemicalTree& tree);
DegreeCounts degree_counts(const PendentRootedTree& tree);

/// Sum of squared degrees.
long long first_zagreb(const ChemicalTree& tree);

/// Sum over edges of deg(u)*deg(v); for rooted trees the root edge is included.
long long second_zagreb(const ChemicalTree& tree);

/// c(1)*n1 + c(2)*n2 + c(3)*n3 + c(4)*n4.
double generalized_first_zagreb(const ChemicalTree& tree, const DegreeCostVector& costs);

/// generalized_first_zagreb + b3 * second_zagreb.
double ad_hoc_index(const ChemicalTree& tree, const DegreeCostVector& costs, double b3);

/// Sum of pairwise distances (all pair weights 1).
long long wiener(const ChemicalTree& tree);

/// Half-sum over ordered pairs of mu(u,v) * d(u,v). `pair_weights` is a
/// full order x order matrix, symmetric with non-negative entries.
double pair_weighted_wiener(const ChemicalTree& tree,
                            const std::vector<std::vector<double>>& pair_weights);

/// Pair-weighted Wiener index with mu(u,v) = mu(u)*mu(v), computed in
/// O(n) by the edge-contribution decomposition f*(total-f).
double vertex_weighted_wiener(const VertexWeightedTree& tree);

/// O(n^2) pairwise evaluation of the same quantity; kept as an
/// independent route for cross-checking.
double vertex_weighted_wiener_pairwise(const VertexWeightedTree& tree);

/// Sum of the distances of all vertices to the root.
long long oxygen_distance(const PendentRootedTree& tree);

/// 1 iff the sub-root has degree i, for i in 2..4. Order must be >= 3.
int subroot_indicator(const PendentRootedTree& tree, int i);

}  // namespace chemtree

#endif
