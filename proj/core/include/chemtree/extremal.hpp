#ifndef CHEMTREE_EXTREMAL_HPP
#define CHEMTREE_EXTREMAL_HPP

#include <string>
#include <vector>

#include "chemtree/indices.hpp"
#include "chemtree/qspr.hpp"
#include "chemtree/tree.hpp"

namespace chemtree {

/// Strict-inequality conditions on a degree-cost vector and the edge
/// coefficient b3 under which minimizers of the composite index
/// C1 + b3*M2 are extremely branched; the *_n_le_17 variant uses the
/// weakened first inequality valid for orders up to 17.
struct ConditionReport {
    bool cond_23 = false;     // c1 + c4 + 18*b3 < c2 + c3
    bool cond_22 = false;     // c1 + c3 +  8*b3 < 2*c2
    bool cond_33 = false;     // c2 + c4 +  8*b3 < 2*c3
    bool cond_23bis = false;  // c1 + c4 + 17*b3 < c2 + c3
    bool theorem_applies = false;
    bool theorem_applies_n_le_17 = false;
};

ConditionReport check_C_conditions(const DegreeCostVector& costs, double b3);

/// Every internal vertex has degree 4, except exactly one of degree 2
/// when order = 0 (mod 3) or exactly one of degree 3 when order = 1
/// (mod 3). Requires order >= 4.
bool is_extremely_branched(const ChemicalTree& tree);
bool is_extremely_branched(const PendentRootedTree& tree);

/// A minimization objective over chemical or pendent-rooted trees.
class Objective {
public:
    enum class Kind {
        first_zagreb,
        second_zagreb,
        generalized_first_zagreb,
        ad_hoc,  // C1 + b3*M2
        wiener,
        oxygen_distance,
        regression,
    };

    static Objective first_zagreb();
    static Objective second_zagreb();
    static Objective wiener_index();
    static Objective generalized_first_zagreb(const DegreeCostVector& costs);
    static Objective ad_hoc(const DegreeCostVector& costs, double b3);
    static Objective oxygen_distance();
    static Objective regression(const RegressionModel& model, const std::string& id);

    Kind kind() const { return kind_; }
    const std::string& id() const { return id_; }
    bool requires_root() const;
    bool integer_valued() const;
    const DegreeCostVector& costs() const { return costs_; }
    double b3() const { return b3_; }
    const RegressionModel& model() const { return model_; }

    double evaluate(const ChemicalTree& tree) const;
    double evaluate(const PendentRootedTree& tree) const;

private:
    Objective(Kind kind, std::string id) : kind_(kind), id_(std::move(id)) {}

    Kind kind_;
    std::string id_;
    DegreeCostVector costs_{};
    double b3_ = 0.0;
    RegressionModel model_{};
};

/// The exact set of minimizers of one objective at one order, stored as
/// sorted canonical encodings. Two real values tie iff
/// |a-b| <= 1e-9*max(1,|a|,|b|); integer-valued objectives tie exactly.
struct MinimizerSet {
    int order = 0;
    std::string objective;
    bool rooted = false;
    std::vector<std::string> members;
    double value = 0.0;
    std::string method;

    bool same_members(const MinimizerSet& other) const { return members == other.members; }
};

/// Exhaustive fold over the enumeration stream.
MinimizerSet minimize_brute(int order, const Objective& objective, bool rooted,
                            int max_degree = 4);

/// Structure-guided construction, available for the ad-hoc composite
/// (argmin over the extremely branched class, valid when the condition
/// report allows it at this order) and for the oxygen-distance index
/// (tie closure of the generalized Huffman algorithm on the extremal
/// tuple with a dominant root weight).
MinimizerSet minimize_theory(int order, const Objective& objective);

/// Canonical-form set intersection; orders and rootedness must match.
MinimizerSet intersect_minimizers(const MinimizerSet& a, const MinimizerSet& b);

struct ConjectureOrderReport {
    int order = 0;
    MinimizerSet unrestricted;           // boiling-point argmin over all rooted trees
    bool all_extremely_branched = false;
    MinimizerSet restricted;             // argmin over extremely branched rooted trees
    bool restricted_matches = false;
};

/// Brute-force audit of the basic-regression boiling-point argmin for
/// each order in [min_order, max_order] (bounded by 14, the regression's
/// validity range): is every minimizer extremely branched, and does the
/// argmin restricted to extremely branched trees agree?
std::vector<ConjectureOrderReport> audit_conjecture_bp0(int min_order, int max_order);

}  // namespace chemtree

#endif
