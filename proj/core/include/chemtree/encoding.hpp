#ifndef CHEMTREE_ENCODING_HPP
#define CHEMTREE_ENCODING_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chemtree/tree.hpp"

namespace chemtree {

// Textual tree form, nested parentheses with comma-separated children:
//
//   Node     := Label Children?
//   Children := '(' Node (',' Node)* ')'
//   Label    := 'O' | 'C'
//
// At most one 'O' is permitted and it must be the outermost node; a tree
// whose outermost label is 'O' is pendent-rooted at that vertex. Vertex
// ids are assigned in pre-order. A JSON alternate form is accepted on
// input: {"parent":[...], "root":k} with exactly one null (or -1) parent
// entry and an optional pendent root index.

struct ParsedTree {
    ChemicalTree tree;
    std::optional<int> root;

    bool rooted() const { return root.has_value(); }
    PendentRootedTree rooted_tree() const { return PendentRootedTree(tree, root.value()); }
};

ParsedTree parse_tree(std::string_view text, int max_degree = 4);
/// Like parse_tree but requires the rooted form.
PendentRootedTree parse_rooted_tree(std::string_view text, int max_degree = 4);
/// Like parse_tree but requires the unrooted form.
ChemicalTree parse_free_tree(std::string_view text, int max_degree = 4);

/// AHU-style canonical encoding. Free trees are encoded from the
/// centroid (lexicographic minimum of the two rootings when the centroid
/// is an edge), rooted trees from their root; children are sorted by
/// their canonical substrings. Two trees are isomorphic (root-preserving
/// for rooted trees) iff their canonical forms are equal.
std::string canonical_form(const ChemicalTree& tree);
std::string canonical_form(const PendentRootedTree& tree);

/// Canonical encoding of `tree` rooted at an arbitrary vertex, with all
/// labels 'C'. Vertices u, v lie in the same automorphism orbit iff
/// rooted_encoding(t, u) == rooted_encoding(t, v).
std::string rooted_encoding(const ChemicalTree& tree, int root);

/// The one or two centroid vertices of a tree.
std::vector<int> centroids(const ChemicalTree& tree);

}  // namespace chemtree

#endif
