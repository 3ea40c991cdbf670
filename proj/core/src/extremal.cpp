#include "chemtree/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "chemtree/encoding.hpp"
#include "chemtree/enumeration.hpp"
#include "chemtree/errors.hpp"
#include "chemtree/huffman.hpp"

namespace chemtree {

ConditionReport check_C_conditions(const DegreeCostVector& costs, double b3) {
    for (double v : {costs.c1, costs.c2, costs.c3, costs.c4, b3}) {
        if (!std::isfinite(v)) throw PreconditionError("condition inputs must be finite");
    }
    ConditionReport r;
    r.cond_23 = costs.c1 + costs.c4 + 18.0 * b3 < costs.c2 + costs.c3;
    r.cond_22 = costs.c1 + costs.c3 + 8.0 * b3 < 2.0 * costs.c2;
    r.cond_33 = costs.c2 + costs.c4 + 8.0 * b3 < 2.0 * costs.c3;
    r.cond_23bis = costs.c1 + costs.c4 + 17.0 * b3 < costs.c2 + costs.c3;
    r.theorem_applies = r.cond_23 && r.cond_22 && r.cond_33;
    r.theorem_applies_n_le_17 = r.cond_23bis && r.cond_22 && r.cond_33;
    return r;
}

bool is_extremely_branched(const ChemicalTree& tree) {
    if (tree.order() < 4) throw PreconditionError("extremely branched is defined for order >= 4");
    int deg2 = 0, deg3 = 0, other = 0;
    for (int v = 0; v < tree.order(); ++v) {
        int d = tree.degree(v);
        if (d == 1 || d == 4) continue;
        if (d == 2)
            ++deg2;
        else if (d == 3)
            ++deg3;
        else
            ++other;
    }
    if (other > 0) return false;
    switch (tree.order() % 3) {
        case 0: return deg2 == 1 && deg3 == 0;
        case 1: return deg2 == 0 && deg3 == 1;
        default: return deg2 == 0 && deg3 == 0;
    }
}

bool is_extremely_branched(const PendentRootedTree& tree) {
    return is_extremely_branched(tree.tree());
}

Objective Objective::first_zagreb() { return Objective(Kind::first_zagreb, "m1"); }
Objective Objective::second_zagreb() { return Objective(Kind::second_zagreb, "m2"); }
Objective Objective::wiener_index() { return Objective(Kind::wiener, "wiener"); }

Objective Objective::generalized_first_zagreb(const DegreeCostVector& costs) {
    Objective o(Kind::generalized_first_zagreb, "c1");
    o.costs_ = costs;
    return o;
}

Objective Objective::ad_hoc(const DegreeCostVector& costs, double b3) {
    Objective o(Kind::ad_hoc, "c");
    o.costs_ = costs;
    o.b3_ = b3;
    return o;
}

Objective Objective::oxygen_distance() { return Objective(Kind::oxygen_distance, "wio"); }

Objective Objective::regression(const RegressionModel& model, const std::string& id) {
    model.validate();
    Objective o(Kind::regression, id);
    o.model_ = model;
    return o;
}

bool Objective::requires_root() const {
    return kind_ == Kind::oxygen_distance || kind_ == Kind::regression;
}

bool Objective::integer_valued() const {
    return kind_ == Kind::first_zagreb || kind_ == Kind::second_zagreb ||
           kind_ == Kind::wiener || kind_ == Kind::oxygen_distance;
}

double Objective::evaluate(const ChemicalTree& tree) const {
    switch (kind_) {
        case Kind::first_zagreb: return static_cast<double>(chemtree::first_zagreb(tree));
        case Kind::second_zagreb: return static_cast<double>(chemtree::second_zagreb(tree));
        case Kind::generalized_first_zagreb: return chemtree::generalized_first_zagreb(tree, costs_);
        case Kind::ad_hoc: return ad_hoc_index(tree, costs_, b3_);
        case Kind::wiener: return static_cast<double>(chemtree::wiener(tree));
        default:
            throw PreconditionError("objective '" + id_ + "' needs a rooted tree");
    }
}

double Objective::evaluate(const PendentRootedTree& tree) const {
    switch (kind_) {
        case Kind::oxygen_distance: return static_cast<double>(chemtree::oxygen_distance(tree));
        case Kind::regression: return predict(model_, tree);
        default: return evaluate(tree.tree());
    }
}

namespace {

bool values_tie(double a, double b, bool integer_valued) {
    if (integer_valued) return a == b;
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

MinimizerSet select_argmin(int order, const Objective& objective, bool rooted,
                           std::vector<std::pair<double, std::string>> values,
                           const std::string& method) {
    if (values.empty()) throw PreconditionError("no trees to minimize over");
    double best = values.front().first;
    for (const auto& [v, key] : values) best = std::min(best, v);
    MinimizerSet out;
    out.order = order;
    out.objective = objective.id();
    out.rooted = rooted;
    out.value = best;
    out.method = method;
    for (auto& [v, key] : values) {
        if (values_tie(v, best, objective.integer_valued())) out.members.push_back(std::move(key));
    }
    std::sort(out.members.begin(), out.members.end());
    out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
    return out;
}

}  // namespace

MinimizerSet minimize_brute(int order, const Objective& objective, bool rooted, int max_degree) {
    if (order < 2 || order > 20)
        throw PreconditionError("brute-force minimization is guarded to 2 <= order <= 20");
    if (objective.requires_root() && !rooted)
        throw PreconditionError("objective '" + objective.id() + "' needs a rooted enumeration");
    std::vector<std::pair<double, std::string>> values;
    if (rooted) {
        if (order < 3) throw PreconditionError("rooted enumeration needs order >= 3");
        for_each_pendent_rooted(order, max_degree, [&](const PendentRootedTree& t) {
            values.emplace_back(objective.evaluate(t), canonical_form(t));
        });
    } else {
        for_each_chemical_tree(order, max_degree, [&](const ChemicalTree& t) {
            values.emplace_back(objective.evaluate(t), canonical_form(t));
        });
    }
    return select_argmin(order, objective, rooted, std::move(values), "brute");
}

namespace {

MinimizerSet theory_ad_hoc(int order, const Objective& objective) {
    ConditionReport report = check_C_conditions(objective.costs(), objective.b3());
    bool applies = report.theorem_applies || (order <= 17 && report.theorem_applies_n_le_17);
    if (!applies)
        throw PreconditionError(
            "the extremely-branched characterization does not apply to these coefficients");
    EnumerationRequest req;
    req.order = order;
    req.extremely_branched_only = true;
    std::vector<std::pair<double, std::string>> values;
    for (const ChemicalTree& t : enumerate_extremely_branched_free(req))
        values.emplace_back(objective.evaluate(t), canonical_form(t));
    return select_argmin(order, objective, false, std::move(values), "theory");
}

MinimizerSet theory_oxygen_distance(int order) {
    // Dominant-root weighting: heavy enough that no split of the
    // carbon-carbon distance sum can trade against one unit of the
    // root-distance sum, so the Huffman closure minimizes the
    // root-distance sum first. Integer weights keep comparisons exact.
    std::vector<double> weights(order, 1.0);
    weights[0] = static_cast<double>(order) * order * order;
    GeneratingTuple tuple = extremal_tuple(weights, {0}, 4);

    std::set<std::string> members;
    long long best = -1;
    for (const HuffmanResult& r : generalized_huffman_tie_representatives(tuple)) {
        PendentRootedTree rooted(r.tree.tree(), 0);
        long long value = oxygen_distance(rooted);
        if (best == -1 || value < best) best = value;
        members.insert(canonical_form(rooted));
    }
    MinimizerSet out;
    out.order = order;
    out.objective = "wio";
    out.rooted = true;
    out.value = static_cast<double>(best);
    out.method = "theory";
    out.members.assign(members.begin(), members.end());
    return out;
}

}  // namespace

MinimizerSet minimize_theory(int order, const Objective& objective) {
    if (order < 4 || order > 20)
        throw PreconditionError("theory construction is guarded to 4 <= order <= 20");
    switch (objective.kind()) {
        case Objective::Kind::ad_hoc:
        case Objective::Kind::generalized_first_zagreb:
            return theory_ad_hoc(order, objective);
        case Objective::Kind::oxygen_distance:
            return theory_oxygen_distance(order);
        default:
            throw PreconditionError("no theory construction for objective '" + objective.id() +
                                    "'");
    }
}

MinimizerSet intersect_minimizers(const MinimizerSet& a, const MinimizerSet& b) {
    if (a.order != b.order) throw PreconditionError("orders differ");
    if (a.rooted != b.rooted) throw PreconditionError("rootedness differs");
    MinimizerSet out;
    out.order = a.order;
    out.rooted = a.rooted;
    out.objective = a.objective == b.objective ? a.objective : a.objective + "&" + b.objective;
    out.method = "intersection";
    out.value = a.objective == b.objective ? a.value : std::nan("");
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::back_inserter(out.members));
    return out;
}

std::vector<ConjectureOrderReport> audit_conjecture_bp0(int min_order, int max_order) {
    if (min_order < 4) throw PreconditionError("audit orders start at 4");
    if (max_order > 14)
        throw PreconditionError("the basic regression is validated for orders up to 14");
    Objective bp0 = Objective::regression(RegressionModel::basic(), "bp0");
    std::vector<ConjectureOrderReport> reports;
    for (int n = min_order; n <= max_order; ++n) {
        ConjectureOrderReport report;
        report.order = n;
        report.unrestricted = minimize_brute(n, bp0, true);

        report.all_extremely_branched = true;
        for (const std::string& member : report.unrestricted.members) {
            PendentRootedTree t = parse_rooted_tree(member);
            if (!is_extremely_branched(t.tree())) report.all_extremely_branched = false;
        }

        EnumerationRequest req;
        req.order = n;
        req.rooted = true;
        req.extremely_branched_only = true;
        std::vector<std::pair<double, std::string>> values;
        for (const PendentRootedTree& t : enumerate_extremely_branched_rooted(req))
            values.emplace_back(bp0.evaluate(t), canonical_form(t));
        report.restricted = select_argmin(n, bp0, true, std::move(values), "brute-restricted");
        report.restricted_matches = report.restricted.same_members(report.unrestricted);
        reports.push_back(std::move(report));
    }
    return reports;
}

}  // namespace chemtree
