#include "chemtree/majorization.hpp"

#include <algorithm>

#include "chemtree/errors.hpp"

namespace chemtree {

MajorizationVerdict weak_majorize(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw PreconditionError("vectors must have equal length");
    for (double v : x)
        if (!(v >= 0.0)) throw PreconditionError("entries must be non-negative");
    for (double v : y)
        if (!(v >= 0.0)) throw PreconditionError("entries must be non-negative");

    std::vector<double> xs = x, ys = y;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());

    double px = 0.0, py = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        px += xs[k];
        py += ys[k];
        if (px > py) return {MajorizationRelation::incomparable, static_cast<int>(k) + 1};
    }
    return {xs == ys ? MajorizationRelation::weak_equal_sorted : MajorizationRelation::strict, 0};
}

}  // namespace chemtree
