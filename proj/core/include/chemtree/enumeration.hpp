#ifndef CHEMTREE_ENUMERATION_HPP
#define CHEMTREE_ENUMERATION_HPP

#include <functional>
#include <vector>

#include "chemtree/tree.hpp"

namespace chemtree {

struct EnumerationRequest {
    int order = 2;
    bool rooted = false;
    bool extremely_branched_only = false;
    int max_degree = 4;
};

/// Streaming, duplicate-free generation of all chemical trees of the
/// given order, one representative per isomorphism class, by canonical
/// augmentation (a new leaf is kept only when it is the canonical
/// deletion leaf of the grown tree). Visit order is deterministic but
/// unspecified; the enumerate_* functions sort canonically.
void for_each_chemical_tree(int order, int max_degree,
                            const std::function<void(const ChemicalTree&)>& visit);

/// One representative per root-preserving isomorphism class: every leaf
/// orbit of every free tree yields one pendent-rooted tree.
void for_each_pendent_rooted(int order, int max_degree,
                             const std::function<void(const PendentRootedTree&)>& visit);

/// All chemical trees of order req.order in ascending canonical-string
/// order (req.rooted must be false).
std::vector<ChemicalTree> enumerate_chemical_trees(const EnumerationRequest& req);

/// All pendent-rooted chemical trees of order req.order (>= 3) in
/// ascending canonical-string order.
std::vector<PendentRootedTree> enumerate_pendent_rooted(const EnumerationRequest& req);

/// The extremely branched subsequence of the corresponding enumeration;
/// for rooted requests, all pendant rootings of each extremely branched
/// free tree, deduplicated. Requires order >= 4.
std::vector<ChemicalTree> enumerate_extremely_branched_free(const EnumerationRequest& req);
std::vector<PendentRootedTree> enumerate_extremely_branched_rooted(const EnumerationRequest& req);

/// Independent test oracle: the number of isomorphism classes among all
/// labeled trees on `order` vertices (generated from every Prufer
/// sequence) with maximum degree <= max_degree. Guarded to order <= 10;
/// uses its own canonicalization, sharing nothing with canonical_form.
long long prufer_oracle_count(int order, int max_degree);

}  // namespace chemtree

#endif
