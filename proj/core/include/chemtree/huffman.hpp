#ifndef CHEMTREE_HUFFMAN_HPP
#define CHEMTREE_HUFFMAN_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chemtree/tree.hpp"

namespace chemtree {

/// A vertex set (dense ids 0..n-1) with prescribed non-negative weights
/// and positive degrees satisfying sum d(v) = 2(n-1), so that at least
/// one tree realizes the degrees. W = pendants (d = 1), M = the rest.
class GeneratingTuple {
public:
    GeneratingTuple(std::vector<double> weights, std::vector<int> degrees);

    int size() const { return static_cast<int>(weights_.size()); }
    double weight(int v) const { return weights_.at(v); }
    int degree(int v) const { return degrees_.at(v); }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<int>& degrees() const { return degrees_; }
    double total_weight() const;
    std::vector<int> pendant_vertices() const;
    std::vector<int> internal_vertices() const;

private:
    std::vector<double> weights_;
    std::vector<int> degrees_;
};

/// Internal-vertex weights non-decreasing in prescribed degree, and all
/// pendant weights strictly positive.
bool is_degree_monotone(const GeneratingTuple& tuple);

struct HuffmanStep {
    int merged_vertex;
    std::vector<int> attached_pendants;
    double updated_weight;
};

/// One record per processed internal vertex (the final entry is the
/// terminal); step count equals |M|.
struct HuffmanTrace {
    std::vector<HuffmanStep> steps;
    int terminal = -1;
};

struct HuffmanResult {
    VertexWeightedTree tree;
    DirectedTree directed;
    HuffmanTrace trace;
};

/// Greedy merge: repeatedly attach the lightest pendants to the
/// internal vertex of least weight (least degree among equal weights,
/// then lowest id), reweighting it to the merged total. The output
/// realizes the tuple's degrees and weights exactly. The order-2 tuple
/// (no internal vertices) yields the single edge. Weight comparisons
/// are exact for integral weights and use a 1e-9 relative tolerance
/// otherwise.
HuffmanResult generalized_huffman(const GeneratingTuple& tuple);

/// Every output reachable by some resolution of the weight ties, one
/// entry per distinct labeled tree.
std::vector<HuffmanResult> generalized_huffman_all_ties(const GeneratingTuple& tuple);

/// Tie closure collapsed by vertex interchangeability (equal weight and
/// isomorphic weighted attached subtrees): at least one representative
/// per weighted-isomorphism class of outputs, far fewer labeled trees
/// than the full closure on heavily tied tuples.
std::vector<HuffmanResult> generalized_huffman_tie_representatives(const GeneratingTuple& tuple);

/// f(v): total weight of the vertices with a directed path to v
/// (including v itself); f(terminal) = total weight.
std::vector<double> subordinate_weights(const DirectedTree& tree);

/// Sum over non-terminal vertices of f(v) * (total - f(v)); equals the
/// vertex-weighted Wiener index of the underlying undirected tree.
double vwwi_directed(const DirectedTree& tree);

/// True iff f(m) <= total/2 for every internal non-terminal vertex m.
bool is_proper(const DirectedTree& tree);

/// The generating tuple whose internal set consists of the
/// ceil((n-2)/(max_degree-1)) heaviest vertices outside the forced
/// pendant set, all of maximal degree except at most one vertex (the
/// lightest internal) whose degree is fixed by the degree identity.
/// Ties are broken by ascending vertex id.
GeneratingTuple extremal_tuple(const std::vector<double>& weights,
                               const std::vector<int>& forced_pendants, int max_degree = 4);

/// All extremal tuples reachable by resolving weight ties, deduplicated
/// by degree function.
std::vector<GeneratingTuple> extremal_tuple_variants(const std::vector<double>& weights,
                                                     const std::vector<int>& forced_pendants,
                                                     int max_degree = 4);

/// Every labeled tree realizing the given degree prescription, as
/// normalized edge lists, via permutations of the degree multiset
/// written as Prufer sequences. Independent of the Huffman path.
std::vector<std::vector<std::pair<int, int>>> all_trees_with_degrees(
    const std::vector<int>& degrees);

/// A random generating tuple with degree-monotone integer weights.
GeneratingTuple random_degree_monotone_tuple(std::mt19937_64& rng, int min_order, int max_order);

struct HuffmanOptimalityReport {
    int trials = 0;
    int failures = 0;
    std::string first_witness;
};

/// For `trials` random degree-monotone tuples (orders 4..max_order):
/// the Huffman output attains the exhaustive minimum of the
/// vertex-weighted Wiener index over all trees realizing the tuple, and
/// the set of minimizers equals the set of tie-resolution outputs.
HuffmanOptimalityReport verify_huffman_optimality(std::uint64_t seed, int trials, int max_order);

struct PropertyCheck {
    std::string name;
    int trials = 0;
    int failures = 0;
    std::string first_witness;
};

struct PropertySuiteReport {
    std::vector<PropertyCheck> checks;
    bool all_passed() const;
};

/// Randomized checks of the majorization machinery: the prefix-shift
/// construction yields strict weak majorization, concatenation
/// preserves it, concave sums order consistently on [0, total/2], and
/// subordinate weights of Huffman trees are monotone across arcs with
/// distinct heads. Deterministic for a fixed seed.
PropertySuiteReport majorization_property_suite(std::uint64_t seed, int trials);

}  // namespace chemtree

#endif
