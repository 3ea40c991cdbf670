// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code = number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chemtree/encoding.hpp"
#include "chemtree/enumeration.hpp"
#include "chemtree/extremal.hpp"
#include "chemtree/huffman.hpp"
#include "chemtree/indices.hpp"
#include "chemtree/qspr.hpp"
#include "chemtree/tree.hpp"

using namespace chemtree;

namespace {

struct Outcome {
    bool passed = true;
    std::vector<std::string> notes;

    void fail(const std::string& note) {
        passed = false;
        notes.push_back(note);
    }
    void require(bool condition, const std::string& note) {
        if (!condition) fail(note);
    }
};

using CriterionFn = std::function<void(Outcome&)>;

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

const DegreeCostVector kRegOneCosts{0.0, 14.534, 20.172, 17.015};
const DegreeCostVector kRegTwoCosts{0.0, 17.727, 29.673, 36.470};
const DegreeCostVector kBasicCosts{0.0, 9.514, 9.380, 0.0};

// 1. Condition arithmetic for the three regression presets.
void criterion_conditions(Outcome& o) {
    auto start = std::chrono::steady_clock::now();
    ConditionReport one = check_C_conditions(kRegOneCosts, 1.000);
    ConditionReport two = check_C_conditions(kRegTwoCosts, 0.0);
    ConditionReport basic = check_C_conditions(kBasicCosts, 1.486);
    double elapsed = ms_since(start);

    o.require(!one.cond_23 && one.cond_22 && one.cond_33 && one.cond_23bis,
              "regression I: expected (false,true,true,true)");
    o.require(two.cond_23 && two.cond_22 && two.cond_33,
              "regression II: expected (true,true,true)");
    o.require(!basic.cond_23 && !basic.cond_22 && !basic.cond_33 && !basic.cond_23bis,
              "basic: expected all false");
    o.require(elapsed < 1.0, "condition arithmetic took " + std::to_string(elapsed) + " ms");
}

// 2. Composite-index minimizer structure over free trees.
void criterion_composite_structure(Outcome& o) {
    auto start = std::chrono::steady_clock::now();
    Objective composite = Objective::ad_hoc(kRegOneCosts, 1.000);
    for (int n = 4; n <= 14; ++n) {
        MinimizerSet set = minimize_brute(n, composite, false);
        std::size_t expected = n == 14 ? 2 : 1;
        o.require(set.members.size() == expected,
                  "order " + std::to_string(n) + ": " + std::to_string(set.members.size()) +
                      " minimizers, expected " + std::to_string(expected));
        DegreeCounts first{};
        for (std::size_t i = 0; i < set.members.size(); ++i) {
            ChemicalTree t = parse_free_tree(set.members[i]);
            o.require(is_extremely_branched(t),
                      "order " + std::to_string(n) + ": minimizer not extremely branched: " +
                          set.members[i]);
            DegreeCounts counts = degree_counts(t);
            if (i == 0) first = counts;
            else
                o.require(counts == first,
                          "order " + std::to_string(n) + ": degree counts differ among minimizers");
        }
    }
    double elapsed = ms_since(start);
    o.require(elapsed < 10000.0, "sweep took " + std::to_string(elapsed) + " ms (limit 10 s)");
}

// 3. Theory construction equals brute force for both objectives.
void criterion_theory_equals_brute(Outcome& o) {
    Objective composite = Objective::ad_hoc(kRegOneCosts, 1.000);
    for (int n = 4; n <= 14; ++n) {
        MinimizerSet brute = minimize_brute(n, composite, false);
        MinimizerSet theory = minimize_theory(n, composite);
        if (!(brute.members == theory.members))
            o.fail("composite, order " + std::to_string(n) + ": theory != brute");
    }
    for (int n = 4; n <= 14; ++n) {
        MinimizerSet brute = minimize_brute(n, Objective::oxygen_distance(), true);
        MinimizerSet theory = minimize_theory(n, Objective::oxygen_distance());
        if (!(brute.members == theory.members)) {
            std::ostringstream note;
            note << "root-distance, order " << n << ": theory has " << theory.members.size()
                 << " member(s), brute " << brute.members.size() << "; extra in brute:";
            for (const std::string& m : brute.members) {
                if (!std::binary_search(theory.members.begin(), theory.members.end(), m))
                    note << " " << m;
            }
            o.fail(note.str());
        }
    }
}

// 4. Merge-algorithm optimality over random degree-monotone tuples.
void criterion_huffman_optimality(Outcome& o) {
    auto start = std::chrono::steady_clock::now();
    HuffmanOptimalityReport report = verify_huffman_optimality(/*seed=*/0, /*trials=*/500,
                                                               /*max_order=*/9);
    double elapsed = ms_since(start);
    o.require(report.trials == 500, "trial count mismatch");
    o.require(report.failures == 0,
              std::to_string(report.failures) + " failures; first: " + report.first_witness);
    o.require(elapsed < 60000.0, "took " + std::to_string(elapsed) + " ms (limit 60 s)");
}

// 5. Directed-tree evaluation identity for every tree of order <= 8 and
//    every internal terminal.
void criterion_directed_identity(Outcome& o) {
    std::mt19937_64 rng(2026);
    for (int n = 2; n <= 8; ++n) {
        for_each_chemical_tree(n, /*max_degree=*/n < 3 ? 2 : n - 1, [&](const ChemicalTree& t) {
            std::vector<double> integer_weights(n), real_weights(n);
            for (int v = 0; v < n; ++v) {
                integer_weights[v] = static_cast<double>(1 + rng() % 9);
                real_weights[v] = (1 + rng() % 1000) / 997.0;
            }
            VertexWeightedTree wi(t, integer_weights);
            VertexWeightedTree wr(t, real_weights);
            double pairwise_int = vertex_weighted_wiener_pairwise(wi);
            double pairwise_real = vertex_weighted_wiener_pairwise(wr);
            for (int v = 0; v < n; ++v) {
                if (t.degree(v) < 2) continue;
                if (vwwi_directed(to_directed(wi, v)) != pairwise_int)
                    o.fail("integer identity failed at order " + std::to_string(n));
                double d = vwwi_directed(to_directed(wr, v));
                if (std::abs(d - pairwise_real) > 1e-12 * std::max(1.0, std::abs(pairwise_real)))
                    o.fail("real identity failed at order " + std::to_string(n));
            }
        });
    }
}

// 6. Randomized majorization / monotonicity properties, seed-pinned.
void criterion_majorization_suite(Outcome& o) {
    PropertySuiteReport report = majorization_property_suite(/*seed=*/0, /*trials=*/1000);
    for (const PropertyCheck& check : report.checks) {
        o.require(check.trials == 1000, check.name + ": trial count mismatch");
        o.require(check.failures == 0,
                  check.name + ": " + std::to_string(check.failures) +
                      " counterexamples; first: " + check.first_witness);
    }
}

// 7. Dominant-root weighting: argmin sets coincide with the
//    root-distance argmin for eps = 1e-3.
void criterion_eps_reduction(Outcome& o) {
    const double eps = 1e-3;
    for (int n = 4; n <= 10; ++n) {
        MinimizerSet wio = minimize_brute(n, Objective::oxygen_distance(), true);
        std::vector<std::pair<double, std::string>> values;
        EnumerationRequest req;
        req.order = n;
        req.rooted = true;
        for (const PendentRootedTree& t : enumerate_pendent_rooted(req)) {
            std::vector<double> w(t.order(), eps);
            w[t.root()] = 1.0 / eps;
            values.emplace_back(vertex_weighted_wiener(VertexWeightedTree(t.tree(), w)),
                                canonical_form(t));
        }
        double best = values.front().first;
        for (const auto& [v, k] : values) best = std::min(best, v);
        std::vector<std::string> vwwi_argmin;
        for (const auto& [v, k] : values)
            if (std::abs(v - best) <= 1e-9 * std::max(1.0, std::abs(best)))
                vwwi_argmin.push_back(k);
        std::sort(vwwi_argmin.begin(), vwwi_argmin.end());
        if (!(vwwi_argmin == wio.members)) {
            std::ostringstream note;
            note << "order " << n << ": weighted argmin " << vwwi_argmin.size()
                 << " member(s), root-distance argmin " << wio.members.size() << "; only in root-distance:";
            for (const std::string& m : wio.members)
                if (!std::binary_search(vwwi_argmin.begin(), vwwi_argmin.end(), m))
                    note << " " << m;
            o.fail(note.str());
        }
    }
}

// 8. Enumerator vs labeled-tree oracle, plus the rooted census.
void criterion_enumeration_counts(Outcome& o) {
    for (int delta = 2; delta <= 4; ++delta) {
        for (int n = 2; n <= 10; ++n) {
            EnumerationRequest req;
            req.order = n;
            req.max_degree = delta;
            long long enumerated =
                static_cast<long long>(enumerate_chemical_trees(req).size());
            long long oracle = prufer_oracle_count(n, delta);
            if (enumerated != oracle)
                o.fail("order " + std::to_string(n) + " degree bound " + std::to_string(delta) +
                       ": enumerator " + std::to_string(enumerated) + " != oracle " +
                       std::to_string(oracle));
        }
    }
    const int expected[3] = {4, 8, 17};
    for (int n = 5; n <= 7; ++n) {
        EnumerationRequest req;
        req.order = n;
        req.rooted = true;
        long long count = static_cast<long long>(enumerate_pendent_rooted(req).size());
        if (count != expected[n - 5])
            o.fail("rooted count at order " + std::to_string(n) + ": " + std::to_string(count) +
                   " != " + std::to_string(expected[n - 5]));
    }
}

// 9. Basic-preset predictions against the closed-form values and the
//    experimental extremes.
void criterion_predictions(Outcome& o) {
    RegressionModel basic = RegressionModel::basic();
    struct Row {
        const char* skeleton;
        double expected;   // closed-form evaluation of the preset
        double reference;  // experimental extreme
    };
    const Row rows[] = {
        {"O(C(C))", 35.245 + 12.233 * std::cbrt(3.0) + 9.514 + 9.170 + 1.486 * 4.0, 78.0},
        {"O(C(C,C,C))", 35.245 + 12.233 * std::cbrt(7.0) + 1.486 * 16.0, 82.4},
        {"O(C(C(C)))", 35.245 + 12.233 * std::cbrt(6.0) + 2.0 * 9.514 + 9.170 + 1.486 * 8.0,
         97.0},
    };
    for (const Row& row : rows) {
        double predicted = predict(basic, parse_rooted_tree(row.skeleton));
        if (std::abs(predicted - row.expected) > 1e-6)
            o.fail(std::string(row.skeleton) + ": pipeline " + std::to_string(predicted) +
                   " differs from closed form " + std::to_string(row.expected));
        if (std::abs(predicted - row.reference) > 7.0)
            o.fail(std::string(row.skeleton) + ": prediction " + std::to_string(predicted) +
                   " not within 7 C of " + std::to_string(row.reference));
    }
}

// 10. Boiling-point argmin audit and the minimizer-intersection logic.
//     The audit *reports* the extremely-branched status per order; the
//     assertion applies to the intersection argument at the listed orders.
void criterion_conjecture_audit(Outcome& o) {
    auto start = std::chrono::steady_clock::now();
    std::vector<ConjectureOrderReport> reports = audit_conjecture_bp0(4, 14);
    double elapsed = ms_since(start);
    o.require(elapsed < 30000.0, "audit took " + std::to_string(elapsed) + " ms (limit 30 s)");
    for (const auto& r : reports) {
        if (!r.all_extremely_branched || !r.restricted_matches) {
            o.notes.push_back("order " + std::to_string(r.order) + " report: " +
                              (r.all_extremely_branched ? "extremely branched"
                                                        : "NOT extremely branched") +
                              ", restricted argmin " +
                              (r.restricted_matches ? "matches" : "differs") + " (" +
                              r.unrestricted.members.front() + ")");
        }
    }
    // For the orders where the intersection argument applies, the argmin
    // equals (root-distance argmin) intersected with (composite argmin over
    // extremely branched rooted trees) for the basic coefficients.
    Objective basic_composite = Objective::ad_hoc(kBasicCosts, 1.486);
    for (int n : {4, 5, 6, 7, 8, 11, 14}) {
        const ConjectureOrderReport& report = reports[n - 4];
        MinimizerSet wio = minimize_brute(n, Objective::oxygen_distance(), true);

        EnumerationRequest req;
        req.order = n;
        req.rooted = true;
        req.extremely_branched_only = true;
        std::vector<std::pair<double, std::string>> values;
        for (const PendentRootedTree& t : enumerate_extremely_branched_rooted(req))
            values.emplace_back(basic_composite.evaluate(t), canonical_form(t));
        double best = values.front().first;
        for (const auto& [v, k] : values) best = std::min(best, v);
        std::vector<std::string> composite_eb;
        for (const auto& [v, k] : values)
            if (std::abs(v - best) <= 1e-9 * std::max(1.0, std::abs(best)))
                composite_eb.push_back(k);
        std::sort(composite_eb.begin(), composite_eb.end());

        std::vector<std::string> expected;
        std::set_intersection(wio.members.begin(), wio.members.end(), composite_eb.begin(),
                              composite_eb.end(), std::back_inserter(expected));
        if (!(report.unrestricted.members == expected))
            o.fail("order " + std::to_string(n) +
                   ": argmin does not match the intersection prediction");
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        CriterionFn fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "condition arithmetic for the three presets", criterion_conditions},
        {2, "composite-index minimizer structure, orders 4..14", criterion_composite_structure},
        {3, "theory = brute force for composite and root-distance objectives",
         criterion_theory_equals_brute},
        {4, "merge-algorithm optimality on 500 random tuples", criterion_huffman_optimality},
        {5, "directed evaluation identity, all trees of order <= 8", criterion_directed_identity},
        {6, "randomized majorization and monotonicity suite (1000 trials)",
         criterion_majorization_suite},
        {7, "dominant-root weighting argmin coincidence, orders 4..10", criterion_eps_reduction},
        {8, "enumeration counts vs oracle and rooted census", criterion_enumeration_counts},
        {9, "basic-preset prediction values", criterion_predictions},
        {10, "boiling-point argmin audit, orders 4..14", criterion_conjecture_audit},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Outcome outcome;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.fn(outcome);
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        double elapsed = ms_since(start);
        std::printf("[%2d] %s  (%.0f ms)  %s\n", criterion.id,
                    outcome.passed ? "PASS" : "FAIL", elapsed, criterion.title);
        for (const std::string& note : outcome.notes) std::printf("     - %s\n", note.c_str());
        if (!outcome.passed) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
