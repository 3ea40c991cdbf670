#include "cli_app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chemtree/encoding.hpp"
#include "chemtree/enumeration.hpp"
#include "chemtree/errors.hpp"
#include "chemtree/extremal.hpp"
#include "chemtree/huffman.hpp"
#include "chemtree/indices.hpp"
#include "chemtree/majorization.hpp"
#include "chemtree/qspr.hpp"
#include "chemtree/tree.hpp"

namespace chemtree::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

ordered_json envelope(const std::string& command) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    return doc;
}

DegreeCostVector parse_costs(const std::vector<double>& raw) {
    if (raw.size() != 4) throw PreconditionError("--coeffs needs exactly 4 values c1,c2,c3,c4");
    return DegreeCostVector{raw[0], raw[1], raw[2], raw[3]};
}

std::pair<int, int> parse_order_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw PreconditionError("bad order range '" + text + "' (expected A..B)");
    }
}

RegressionModel model_from_flag(const std::string& name_or_path) {
    if (name_or_path == "basic" || name_or_path == "reg1" || name_or_path == "reg2")
        return RegressionModel::preset(name_or_path);
    std::ifstream in(name_or_path);
    if (!in) throw PreconditionError("no such preset or model file '" + name_or_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return model_from_json(buffer.str());
}

RegressionModel::ActiveTerms parse_active_list(const std::string& list) {
    RegressionModel::ActiveTerms active;
    std::stringstream stream(list);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token == "wio3") active.wio_cuberoot = true;
        else if (token == "n1") active.n1 = true;
        else if (token == "n2") active.n2 = true;
        else if (token == "n3") active.n3 = true;
        else if (token == "n4") active.n4 = true;
        else if (token == "s2") active.s2 = true;
        else if (token == "m2") active.m2 = true;
        else throw PreconditionError("unknown active term '" + token +
                                     "' (wio3,n1,n2,n3,n4,s2,m2)");
    }
    if (active.count() == 0) throw PreconditionError("--active selected no terms");
    return active;
}

Objective objective_from_flag(const std::string& name, const DegreeCostVector& costs, double b3) {
    if (name == "c") return Objective::ad_hoc(costs, b3);
    if (name == "wio") return Objective::oxygen_distance();
    if (name == "bp0") return Objective::regression(RegressionModel::basic(), "bp0");
    if (name == "bp1") return Objective::regression(RegressionModel::regression1(), "bp1");
    if (name == "bp2") return Objective::regression(RegressionModel::regression2(), "bp2");
    if (name == "m1") return Objective::first_zagreb();
    if (name == "m2") return Objective::second_zagreb();
    if (name == "wiener") return Objective::wiener_index();
    if (name == "c1") return Objective::generalized_first_zagreb(costs);
    throw PreconditionError("unknown objective '" + name + "'");
}

void print_minimizer_set(const MinimizerSet& set, bool json, std::ostream& out) {
    if (json) {
        ordered_json doc = envelope("minimize");
        doc["order"] = set.order;
        doc["objective"] = set.objective;
        doc["method"] = set.method;
        doc["rooted"] = set.rooted;
        doc["value"] = set.value;
        doc["members"] = set.members;
        out << doc.dump() << "\n";
        return;
    }
    out << "value " << fmt(set.value) << "\n";
    for (const std::string& m : set.members) out << m << "\n";
}

// ----------------------------------------------------------------- enumerate

int cmd_enumerate(int order, bool rooted, bool extremely_branched, int max_degree,
                  bool count_only, bool json, std::ostream& out) {
    EnumerationRequest req;
    req.order = order;
    req.rooted = rooted;
    req.extremely_branched_only = extremely_branched;
    req.max_degree = max_degree;

    std::vector<std::string> encodings;
    if (rooted) {
        auto trees = extremely_branched ? enumerate_extremely_branched_rooted(req)
                                        : enumerate_pendent_rooted(req);
        for (const auto& t : trees) encodings.push_back(canonical_form(t));
    } else {
        auto trees = extremely_branched ? enumerate_extremely_branched_free(req)
                                        : enumerate_chemical_trees(req);
        for (const auto& t : trees) encodings.push_back(canonical_form(t));
    }

    if (json) {
        ordered_json doc = envelope("enumerate");
        doc["order"] = order;
        doc["rooted"] = rooted;
        doc["extremely_branched"] = extremely_branched;
        doc["max_degree"] = max_degree;
        doc["count"] = encodings.size();
        if (!count_only) doc["trees"] = encodings;
        out << doc.dump() << "\n";
    } else if (count_only) {
        out << encodings.size() << "\n";
    } else {
        for (const std::string& e : encodings) out << e << "\n";
    }
    return 0;
}

// --------------------------------------------------------------------- index

int cmd_index(const std::string& tree_text, const std::string& index_name,
              const DegreeCostVector& costs, double b3, bool json, std::ostream& out) {
    ParsedTree parsed = parse_tree(tree_text);
    bool integer_valued = true;
    double value = 0.0;

    auto need_rooted = [&]() -> PendentRootedTree {
        if (!parsed.rooted())
            throw PreconditionError("index '" + index_name + "' needs a rooted tree");
        return parsed.rooted_tree();
    };

    if (index_name == "m1") value = static_cast<double>(first_zagreb(parsed.tree));
    else if (index_name == "m2") value = static_cast<double>(second_zagreb(parsed.tree));
    else if (index_name == "wiener") value = static_cast<double>(wiener(parsed.tree));
    else if (index_name == "wio") value = static_cast<double>(oxygen_distance(need_rooted()));
    else if (index_name == "s2") value = subroot_indicator(need_rooted(), 2);
    else if (index_name == "s3") value = subroot_indicator(need_rooted(), 3);
    else if (index_name == "s4") value = subroot_indicator(need_rooted(), 4);
    else if (index_name == "c1") {
        value = generalized_first_zagreb(parsed.tree, costs);
        integer_valued = false;
    } else if (index_name == "c") {
        value = ad_hoc_index(parsed.tree, costs, b3);
        integer_valued = false;
    } else {
        throw PreconditionError("unknown index '" + index_name + "'");
    }

    if (json) {
        ordered_json doc = envelope("index");
        doc["index"] = index_name;
        doc["tree"] = parsed.rooted() ? canonical_form(parsed.rooted_tree())
                                      : canonical_form(parsed.tree);
        if (integer_valued) doc["value"] = static_cast<long long>(value);
        else doc["value"] = value;
        out << doc.dump() << "\n";
    } else {
        out << (integer_valued ? std::to_string(static_cast<long long>(value)) : fmt(value))
            << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- descriptors

int cmd_descriptors(const std::string& tree_text, bool json, std::ostream& out) {
    PendentRootedTree tree = parse_rooted_tree(tree_text);
    DescriptorVector d = descriptors(tree);
    if (json) {
        ordered_json doc = envelope("descriptors");
        doc["tree"] = canonical_form(tree);
        doc["wio"] = d.wio;
        doc["wio_cuberoot"] = d.wio_cuberoot;
        doc["n1"] = d.n1;
        doc["n2"] = d.n2;
        doc["n3"] = d.n3;
        doc["n4"] = d.n4;
        doc["s2"] = d.s2;
        doc["m2"] = d.m2;
        out << doc.dump() << "\n";
    } else {
        out << "wio " << d.wio << "\n";
        out << "wio_cuberoot " << fmt(d.wio_cuberoot) << "\n";
        out << "n1 " << d.n1 << "\nn2 " << d.n2 << "\nn3 " << d.n3 << "\nn4 " << d.n4 << "\n";
        out << "s2 " << d.s2 << "\n";
        out << "m2 " << d.m2 << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------- predict

int cmd_predict(const std::string& model_name, const std::string& tree_text, bool json,
                std::ostream& out) {
    RegressionModel model = model_from_flag(model_name);
    PendentRootedTree tree = parse_rooted_tree(tree_text);
    double bp = predict(model, tree);
    if (json) {
        ordered_json doc = envelope("predict");
        doc["model"] = model_name;
        doc["tree"] = canonical_form(tree);
        doc["bp_celsius"] = bp;
        out << doc.dump() << "\n";
    } else {
        out << fmt(bp) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ minimize

int cmd_minimize(int order, const std::string& objective_name, const std::string& method,
                 bool rooted, const DegreeCostVector& costs, double b3, int max_degree, bool json,
                 std::ostream& out) {
    Objective objective = objective_from_flag(objective_name, costs, b3);
    bool effective_rooted = rooted || objective.requires_root();
    MinimizerSet set;
    if (method == "brute") {
        set = minimize_brute(order, objective, effective_rooted, max_degree);
    } else if (method == "theory") {
        set = minimize_theory(order, objective);
    } else {
        throw PreconditionError("unknown method '" + method + "' (brute|theory)");
    }
    print_minimizer_set(set, json, out);
    return 0;
}

// ------------------------------------------------------------------- huffman

int cmd_huffman(const std::vector<double>& weights, const std::vector<int>& degrees,
                bool with_trace, bool json, std::ostream& out) {
    GeneratingTuple tuple(weights, degrees);
    HuffmanResult result = generalized_huffman(tuple);
    double value = vwwi_directed(result.directed);
    if (json) {
        ordered_json doc = envelope("huffman");
        ordered_json edge_list = ordered_json::array();
        for (const auto& [u, v] : result.tree.tree().edges()) edge_list.push_back({u, v});
        doc["edges"] = edge_list;
        doc["terminal"] = result.trace.terminal;
        doc["vwwi"] = value;
        doc["degree_monotone"] = is_degree_monotone(tuple);
        if (with_trace) {
            ordered_json steps = ordered_json::array();
            for (const HuffmanStep& s : result.trace.steps) {
                ordered_json step;
                step["merge"] = s.merged_vertex;
                step["attach"] = s.attached_pendants;
                step["weight"] = s.updated_weight;
                steps.push_back(step);
            }
            doc["trace"] = steps;
        }
        out << doc.dump() << "\n";
    } else {
        out << "edges";
        for (const auto& [u, v] : result.tree.tree().edges()) out << " " << u << "-" << v;
        out << "\nterminal " << result.trace.terminal << "\n";
        out << "vwwi " << fmt(value) << "\n";
        if (with_trace) {
            int i = 0;
            for (const HuffmanStep& s : result.trace.steps) {
                out << "step " << ++i << ": merge " << s.merged_vertex << " attach";
                for (int p : s.attached_pendants) out << " " << p;
                out << " weight " << fmt(s.updated_weight) << "\n";
            }
        }
    }
    return 0;
}

// -------------------------------------------------------------------- verify

int verify_c_conditions(const std::string& model_name, bool json, std::ostream& out) {
    RegressionModel model = model_from_flag(model_name);
    ConditionReport r = check_C_conditions(model.c, model.b3);
    if (json) {
        ordered_json doc = envelope("verify");
        doc["check"] = "c-conditions";
        doc["model"] = model_name;
        doc["cond_23"] = r.cond_23;
        doc["cond_22"] = r.cond_22;
        doc["cond_33"] = r.cond_33;
        doc["cond_23bis"] = r.cond_23bis;
        doc["applies"] = r.theorem_applies;
        doc["applies_n_le_17"] = r.theorem_applies_n_le_17;
        out << doc.dump() << "\n";
    } else {
        auto word = [](bool b) { return b ? "true" : "false"; };
        out << "cond_23 (c1+c4+18*b3 < c2+c3): " << word(r.cond_23) << "\n";
        out << "cond_22 (c1+c3+8*b3 < 2*c2): " << word(r.cond_22) << "\n";
        out << "cond_33 (c2+c4+8*b3 < 2*c3): " << word(r.cond_33) << "\n";
        out << "cond_23bis (c1+c4+17*b3 < c2+c3): " << word(r.cond_23bis) << "\n";
        out << "applies: " << word(r.theorem_applies) << "\n";
        out << "applies_n_le_17: " << word(r.theorem_applies_n_le_17) << "\n";
    }
    return 0;  // reporting is success regardless of the booleans
}

int verify_huffman(std::uint64_t seed, int trials, int max_order, bool json, std::ostream& out) {
    HuffmanOptimalityReport report = verify_huffman_optimality(seed, trials, max_order);
    bool passed = report.failures == 0;
    if (json) {
        ordered_json doc = envelope("verify");
        doc["check"] = "huffman-optimality";
        doc["seed"] = seed;
        doc["trials"] = report.trials;
        doc["failures"] = report.failures;
        doc["passed"] = passed;
        if (!passed) doc["witness"] = report.first_witness;
        out << doc.dump() << "\n";
    } else {
        out << "huffman-optimality: trials " << report.trials << " seed " << seed << " failures "
            << report.failures << (passed ? " PASS" : " FAIL") << "\n";
        if (!passed) out << "witness: " << report.first_witness << "\n";
    }
    return passed ? 0 : 4;
}

int verify_majorization_suite(std::uint64_t seed, int trials, bool json, std::ostream& out) {
    PropertySuiteReport report = majorization_property_suite(seed, trials);
    bool passed = report.all_passed();
    if (json) {
        ordered_json doc = envelope("verify");
        doc["check"] = "majorization-suite";
        doc["seed"] = seed;
        doc["passed"] = passed;
        ordered_json checks = ordered_json::array();
        for (const PropertyCheck& c : report.checks) {
            ordered_json item;
            item["name"] = c.name;
            item["trials"] = c.trials;
            item["failures"] = c.failures;
            if (c.failures > 0) item["witness"] = c.first_witness;
            checks.push_back(item);
        }
        doc["checks"] = checks;
        out << doc.dump() << "\n";
    } else {
        for (const PropertyCheck& c : report.checks) {
            out << c.name << ": trials " << c.trials << " failures " << c.failures
                << (c.failures == 0 ? " PASS" : " FAIL") << "\n";
            if (c.failures > 0) out << "  witness: " << c.first_witness << "\n";
        }
        out << "majorization-suite seed " << seed << (passed ? " PASS" : " FAIL") << "\n";
    }
    return passed ? 0 : 4;
}

int verify_conjecture(int lo, int hi, bool json, std::ostream& out) {
    std::vector<ConjectureOrderReport> reports = audit_conjecture_bp0(lo, hi);
    bool passed = true;
    for (const auto& r : reports)
        if (!r.all_extremely_branched) passed = false;
    if (json) {
        ordered_json doc = envelope("verify");
        doc["check"] = "conjecture-bp0";
        doc["passed"] = passed;
        ordered_json orders = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json item;
            item["order"] = r.order;
            item["value"] = r.unrestricted.value;
            item["argmin"] = r.unrestricted.members;
            item["extremely_branched"] = r.all_extremely_branched;
            item["restricted_argmin"] = r.restricted.members;
            item["restricted_matches"] = r.restricted_matches;
            orders.push_back(item);
        }
        doc["orders"] = orders;
        out << doc.dump() << "\n";
    } else {
        for (const auto& r : reports) {
            out << "order " << r.order << ": value " << fmt(r.unrestricted.value) << " argmin "
                << r.unrestricted.members.size()
                << (r.all_extremely_branched ? " extremely-branched" : " NOT-extremely-branched")
                << (r.restricted_matches ? " restricted-matches" : " restricted-differs") << "\n";
            for (const std::string& m : r.unrestricted.members) out << "  " << m << "\n";
        }
        out << "conjecture-bp0 " << (passed ? "PASS" : "FAIL (counterexample above)") << "\n";
    }
    return passed ? 0 : 4;
}

int verify_enumeration_counts(int max_order, bool json, std::ostream& out) {
    if (max_order < 2 || max_order > 10)
        throw PreconditionError("enumeration-counts check is guarded to max order 10");
    bool passed = true;
    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    for (int delta = 2; delta <= 4; ++delta) {
        for (int n = 2; n <= max_order; ++n) {
            EnumerationRequest req;
            req.order = n;
            req.max_degree = delta;
            long long enumerated = static_cast<long long>(enumerate_chemical_trees(req).size());
            long long oracle = prufer_oracle_count(n, delta);
            bool ok = enumerated == oracle;
            passed = passed && ok;
            ordered_json row;
            row["order"] = n;
            row["max_degree"] = delta;
            row["enumerator"] = enumerated;
            row["oracle"] = oracle;
            row["ok"] = ok;
            rows.push_back(row);
            text << "n=" << n << " delta=" << delta << ": enumerator=" << enumerated
                 << " oracle=" << oracle << (ok ? " ok" : " MISMATCH") << "\n";
        }
    }
    if (json) {
        ordered_json doc = envelope("verify");
        doc["check"] = "enumeration-counts";
        doc["passed"] = passed;
        doc["rows"] = rows;
        out << doc.dump() << "\n";
    } else {
        out << text.str() << "enumeration-counts " << (passed ? "PASS" : "FAIL") << "\n";
    }
    return passed ? 0 : 4;
}

int verify_eps_reduction(int lo, int hi, double epsilon, bool json, std::ostream& out) {
    if (lo < 4 || hi > 10 || lo > hi)
        throw PreconditionError("eps-reduction check is guarded to orders within 4..10");
    bool passed = true;
    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    for (int n = lo; n <= hi; ++n) {
        MinimizerSet wio = minimize_brute(n, Objective::oxygen_distance(), true);
        // VWWI argmin with weights 1/eps at the root, eps elsewhere.
        std::vector<std::pair<double, std::string>> values;
        EnumerationRequest req;
        req.order = n;
        req.rooted = true;
        for (const PendentRootedTree& t : enumerate_pendent_rooted(req)) {
            std::vector<double> w(t.order(), epsilon);
            w[t.root()] = 1.0 / epsilon;
            values.emplace_back(vertex_weighted_wiener(VertexWeightedTree(t.tree(), w)),
                                canonical_form(t));
        }
        double best = values.front().first;
        for (const auto& [v, k] : values) best = std::min(best, v);
        std::vector<std::string> vwwi_members;
        for (const auto& [v, k] : values)
            if (std::abs(v - best) <= 1e-9 * std::max(1.0, std::abs(best)))
                vwwi_members.push_back(k);
        std::sort(vwwi_members.begin(), vwwi_members.end());

        bool ok = vwwi_members == wio.members;
        passed = passed && ok;
        ordered_json row;
        row["order"] = n;
        row["wio_argmin"] = wio.members;
        row["vwwi_argmin"] = vwwi_members;
        row["coincide"] = ok;
        rows.push_back(row);
        text << "order " << n << ": wio_argmin=" << wio.members.size()
             << " vwwi_argmin=" << vwwi_members.size() << (ok ? " coincide" : " DIFFER") << "\n";
        if (!ok) {
            for (const std::string& m : wio.members) {
                bool in_vwwi = std::binary_search(vwwi_members.begin(), vwwi_members.end(), m);
                if (!in_vwwi) text << "  only in wio argmin: " << m << "\n";
            }
        }
    }
    if (json) {
        ordered_json doc = envelope("verify");
        doc["check"] = "eps-reduction";
        doc["epsilon"] = epsilon;
        doc["passed"] = passed;
        doc["orders"] = rows;
        out << doc.dump() << "\n";
    } else {
        out << text.str() << "eps-reduction " << (passed ? "PASS" : "FAIL") << "\n";
    }
    return passed ? 0 : 4;
}

// ----------------------------------------------------------------------- fit

int cmd_fit(const std::string& data_path, const std::string& active_list,
            const std::string& out_path, bool json, std::ostream& out, std::ostream& err) {
    DatasetLoadResult dataset = load_dataset(data_path);
    for (const std::string& w : dataset.warnings) err << "warning: " << w << "\n";
    RegressionModel model = fit(dataset.records, parse_active_list(active_list));
    std::string model_json = model_to_json(model);
    if (!out_path.empty()) {
        // The file carries the bare model schema so `stats --model FILE`
        // and model_from_json can read it back.
        std::ofstream file(out_path);
        if (!file) throw PreconditionError("cannot write model file '" + out_path + "'");
        file << model_json << "\n";
    }
    if (json) {
        ordered_json doc = envelope("fit");
        doc["records"] = dataset.records.size();
        doc["model"] = ordered_json::parse(model_json);
        if (!out_path.empty()) doc["written"] = out_path;
        out << doc.dump() << "\n";
    } else {
        out << "b0 " << fmt(model.b0) << "\nb1 " << fmt(model.b1) << "\nb2 " << fmt(model.b2)
            << "\nb3 " << fmt(model.b3) << "\nc " << fmt(model.c.c1) << "," << fmt(model.c.c2)
            << "," << fmt(model.c.c3) << "," << fmt(model.c.c4) << "\n";
        if (!out_path.empty()) out << "written " << out_path << "\n";
    }
    return 0;
}

// --------------------------------------------------------------------- stats

int cmd_stats(const std::string& model_name, const std::string& data_path, bool json,
              std::ostream& out, std::ostream& err) {
    RegressionModel model = model_from_flag(model_name);
    DatasetLoadResult dataset = load_dataset(data_path);
    for (const std::string& w : dataset.warnings) err << "warning: " << w << "\n";
    PrecisionStats stats = precision(model, dataset.records);
    if (json) {
        ordered_json doc = envelope("stats");
        doc["model"] = model_name;
        doc["records"] = dataset.records.size();
        doc["correlation"] = stats.correlation;
        doc["sd"] = stats.sd;
        out << doc.dump() << "\n";
    } else {
        out << "records " << dataset.records.size() << "\n";
        out << "correlation " << fmt(stats.correlation) << "\n";
        out << "sd " << fmt(stats.sd) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"chemical-tree topological indices, enumeration and extremal search"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list chemical trees of a given order");
    int order = 0;
    bool rooted = false, extremely_branched = false, count_only = false, json = false;
    int max_degree = 4;
    enumerate->add_option("--order", order, "tree order (vertex count)")->required();
    enumerate->add_flag("--rooted", rooted, "pendent-rooted trees");
    enumerate->add_flag("--extremely-branched", extremely_branched,
                        "only extremely branched trees");
    enumerate->add_option("--max-degree", max_degree, "degree bound (default 4)");
    enumerate->add_flag("--count-only", count_only, "print only the count");
    enumerate->add_flag("--json", json, "JSON output");

    // index
    auto* index = app.add_subcommand("index", "evaluate a topological index on one tree");
    std::string tree_text, index_name;
    std::vector<double> coeffs{0.0, 0.0, 0.0, 0.0};
    double b3 = 0.0;
    index->add_option("--tree", tree_text, "tree encoding")->required();
    index->add_option("--index", index_name, "m1|m2|c1|c|wiener|wio|s2|s3|s4")->required();
    index->add_option("--coeffs", coeffs, "degree costs c1,c2,c3,c4")->delimiter(',');
    index->add_option("--b3", b3, "edge-term coefficient for index c");
    index->add_flag("--json", json, "JSON output");

    // descriptors
    auto* descriptors_cmd = app.add_subcommand("descriptors", "regression descriptors of a molecule");
    descriptors_cmd->add_option("--tree", tree_text, "rooted tree encoding")->required();
    descriptors_cmd->add_flag("--json", json, "JSON output");

    // predict
    auto* predict_cmd = app.add_subcommand("predict", "predict a boiling point");
    std::string model_name = "basic";
    predict_cmd->add_option("--model", model_name, "basic|reg1|reg2 or a model JSON file")
        ->required();
    predict_cmd->add_option("--tree", tree_text, "rooted tree encoding")->required();
    predict_cmd->add_flag("--json", json, "JSON output");

    // minimize
    auto* minimize = app.add_subcommand("minimize", "find index-minimal trees of a given order");
    std::string objective_name, method = "brute";
    std::vector<double> min_coeffs{0.0, 14.534, 20.172, 17.015};
    double min_b3 = 1.0;
    minimize->add_option("--order", order, "tree order")->required();
    minimize->add_option("--objective", objective_name, "c|wio|bp0|bp1|bp2 (also m1|m2|wiener|c1)")
        ->required();
    minimize->add_option("--method", method, "brute|theory (default brute)");
    minimize->add_flag("--rooted", rooted, "minimize over pendent-rooted trees");
    minimize->add_option("--coeffs", min_coeffs, "degree costs for objective c")->delimiter(',');
    minimize->add_option("--b3", min_b3, "edge-term coefficient for objective c");
    minimize->add_option("--max-degree", max_degree, "degree bound (default 4)");
    minimize->add_flag("--json", json, "JSON output");

    // huffman
    auto* huffman_cmd = app.add_subcommand("huffman", "run the weighted-tree merge algorithm");
    std::vector<double> weights;
    std::vector<int> degrees;
    bool with_trace = false;
    huffman_cmd->add_option("--weights", weights, "vertex weights")->required()->delimiter(',');
    huffman_cmd->add_option("--degrees", degrees, "prescribed degrees")->required()->delimiter(',');
    huffman_cmd->add_flag("--trace", with_trace, "print merge steps");
    huffman_cmd->add_flag("--json", json, "JSON output");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification check");
    std::string check_name, orders_range;
    std::uint64_t seed = 0;
    int trials = 500, verify_max_order = 9;
    double epsilon = 1e-3;
    verify
        ->add_option("--check", check_name,
                     "c-conditions|huffman-optimality|majorization-suite|conjecture-bp0|"
                     "enumeration-counts|eps-reduction")
        ->required();
    verify->add_option("--model", model_name, "model preset or file (c-conditions)");
    verify->add_option("--seed", seed, "RNG seed (default 0)");
    verify->add_option("--trials", trials, "randomized trial count");
    verify->add_option("--max-order", verify_max_order, "largest order to test");
    verify->add_option("--orders", orders_range,
                       "order range A..B (default 4..14, eps-reduction 4..10)");
    verify->add_option("--epsilon", epsilon, "root weighting 1/eps, others eps");
    verify->add_flag("--json", json, "JSON output");

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "least-squares fit of a boiling-point model");
    std::string data_path, active_list = "wio3,n2,n3,s2,m2", out_path;
    fit_cmd->add_option("--data", data_path, "CSV dataset (name,skeleton,bp_celsius)")->required();
    fit_cmd->add_option("--active", active_list, "active terms, e.g. wio3,n2,n3,n4,s2,m2");
    fit_cmd->add_option("--out", out_path, "write the model JSON here");
    fit_cmd->add_flag("--json", json, "print the model JSON to stdout");

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "precision of a model on a dataset");
    stats_cmd->add_option("--model", model_name, "basic|reg1|reg2 or a model JSON file")
        ->required();
    stats_cmd->add_option("--data", data_path, "CSV dataset")->required();
    stats_cmd->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (enumerate->parsed())
            return cmd_enumerate(order, rooted, extremely_branched, max_degree, count_only, json,
                                 out);
        if (index->parsed())
            return cmd_index(tree_text, index_name, parse_costs(coeffs), b3, json, out);
        if (descriptors_cmd->parsed()) return cmd_descriptors(tree_text, json, out);
        if (predict_cmd->parsed()) return cmd_predict(model_name, tree_text, json, out);
        if (minimize->parsed())
            return cmd_minimize(order, objective_name, method, rooted, parse_costs(min_coeffs),
                                min_b3, max_degree, json, out);
        if (huffman_cmd->parsed()) return cmd_huffman(weights, degrees, with_trace, json, out);
        if (verify->parsed()) {
            if (check_name == "c-conditions") {
                if (model_name.empty()) throw PreconditionError("--model is required");
                return verify_c_conditions(model_name, json, out);
            }
            if (check_name == "huffman-optimality")
                return verify_huffman(seed, trials, verify_max_order, json, out);
            if (check_name == "majorization-suite") return verify_majorization_suite(seed, trials, json, out);
            if (check_name == "conjecture-bp0") {
                auto [lo, hi] = parse_order_range(orders_range.empty() ? "4..14" : orders_range);
                return verify_conjecture(lo, hi, json, out);
            }
            if (check_name == "enumeration-counts")
                return verify_enumeration_counts(std::min(verify_max_order, 10), json, out);
            if (check_name == "eps-reduction") {
                auto [lo, hi] = parse_order_range(orders_range.empty() ? "4..10" : orders_range);
                return verify_eps_reduction(lo, hi, epsilon, json, out);
            }
            throw PreconditionError("unknown check '" + check_name + "'");
        }
        if (fit_cmd->parsed()) return cmd_fit(data_path, active_list, out_path, json, out, err);
        if (stats_cmd->parsed()) return cmd_stats(model_name, data_path, json, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace chemtree::cli
