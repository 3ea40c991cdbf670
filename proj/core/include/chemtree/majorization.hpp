#ifndef CHEMTREE_MAJORIZATION_HPP
#define CHEMTREE_MAJORIZATION_HPP

#include <vector>

namespace chemtree {

enum class MajorizationRelation {
    strict,             // x weakly majorizes y and the sorted vectors differ
    weak_equal_sorted,  // x weakly majorizes y with identical sorted vectors
    incomparable,       // x does not weakly majorize y
};

struct MajorizationVerdict {
    MajorizationRelation relation;
    /// 1-based first k at which the ascending prefix-sum inequality
    /// fails; 0 unless relation == incomparable.
    int prefix_gap = 0;
};

/// Tests whether x weakly majorizes y: with both vectors sorted
/// ascending, every prefix sum of x is <= the corresponding prefix sum
/// of y. Vectors must have equal length and non-negative entries.
MajorizationVerdict weak_majorize(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace chemtree

#endif
