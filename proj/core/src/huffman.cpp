#include "chemtree/huffman.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "chemtree/errors.hpp"
#include "chemtree/indices.hpp"
#include "chemtree/majorization.hpp"

namespace chemtree {

namespace {

// Exact comparisons for integral weights (their sums stay exact in
// binary64 at these magnitudes), 1e-9 relative tolerance otherwise.
struct WeightCompare {
    double tol;

    static WeightCompare for_weights(const std::vector<double>& weights) {
        for (double w : weights) {
            if (std::floor(w) != w || std::abs(w) > 1e12) return {1e-9};
        }
        return {0.0};
    }

    double scaled(double a, double b) const {
        return tol == 0.0 ? 0.0 : tol * std::max({1.0, std::abs(a), std::abs(b)});
    }
    bool less(double a, double b) const { return a < b - scaled(a, b); }
    bool equal(double a, double b) const { return std::abs(a - b) <= scaled(a, b); }
};

struct HuffmanState {
    const GeneratingTuple* tuple;
    WeightCompare cmp;
    std::vector<double> weight;     // current (merged) weights
    std::vector<char> in_internal;  // awaiting its merge step
    std::vector<char> in_pendant;   // available for attachment
    int internal_left;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> parent;
    HuffmanTrace trace;

    explicit HuffmanState(const GeneratingTuple& t)
        : tuple(&t),
          cmp(WeightCompare::for_weights(t.weights())),
          weight(t.weights()),
          in_internal(t.size(), 0),
          in_pendant(t.size(), 0),
          internal_left(0),
          parent(t.size(), -1) {
        for (int v = 0; v < t.size(); ++v) {
            if (t.degree(v) == 1) {
                in_pendant[v] = 1;
            } else {
                in_internal[v] = 1;
                ++internal_left;
            }
        }
    }

    // All internal vertices of least weight and, among those, least degree.
    std::vector<int> merge_candidates() const {
        int best = -1;
        for (int v = 0; v < tuple->size(); ++v) {
            if (!in_internal[v]) continue;
            if (best == -1 || cmp.less(weight[v], weight[best]) ||
                (cmp.equal(weight[v], weight[best]) && tuple->degree(v) < tuple->degree(best)))
                best = v;
        }
        std::vector<int> out;
        for (int v = 0; v < tuple->size(); ++v) {
            if (in_internal[v] && cmp.equal(weight[v], weight[best]) &&
                tuple->degree(v) == tuple->degree(best))
                out.push_back(v);
        }
        return out;
    }

    std::vector<int> pendants_by_weight() const {
        std::vector<int> w;
        for (int v = 0; v < tuple->size(); ++v)
            if (in_pendant[v]) w.push_back(v);
        std::stable_sort(w.begin(), w.end(), [&](int a, int b) {
            if (cmp.less(weight[a], weight[b])) return true;
            if (cmp.less(weight[b], weight[a])) return false;
            return a < b;
        });
        return w;
    }

    void attach(int m, const std::vector<int>& pendants) {
        double merged = weight[m];
        for (int w : pendants) {
            edges.emplace_back(w, m);
            parent[w] = m;
            in_pendant[w] = 0;
            merged += weight[w];
        }
        weight[m] = merged;
        in_internal[m] = 0;
        --internal_left;
        in_pendant[m] = 1;
        trace.steps.push_back({m, pendants, merged});
    }

    // Final step: the sole remaining internal vertex collects every
    // remaining pendant and becomes the terminal.
    void finish() {
        int m = -1;
        for (int v = 0; v < tuple->size(); ++v)
            if (in_internal[v]) m = v;
        std::vector<int> rest;
        for (int v = 0; v < tuple->size(); ++v)
            if (in_pendant[v]) rest.push_back(v);
        if (m == -1 || static_cast<int>(rest.size()) != tuple->degree(m))
            throw std::logic_error("degree identity violated during Huffman construction");
        for (int w : rest) {
            edges.emplace_back(w, m);
            parent[w] = m;
            in_pendant[w] = 0;
        }
        in_internal[m] = 0;
        --internal_left;
        trace.steps.push_back({m, rest, tuple->total_weight()});
        trace.terminal = m;
    }

    std::vector<std::pair<int, int>> normalized_edges() const {
        std::vector<std::pair<int, int>> key = edges;
        for (auto& [a, b] : key)
            if (a > b) std::swap(a, b);
        std::sort(key.begin(), key.end());
        return key;
    }

    HuffmanResult result() const {
        int max_deg = 4;
        for (int v = 0; v < tuple->size(); ++v) max_deg = std::max(max_deg, tuple->degree(v));
        ChemicalTree tree(tuple->size(), edges, max_deg);
        for (int v = 0; v < tuple->size(); ++v) {
            if (tree.degree(v) != tuple->degree(v))
                throw std::logic_error("Huffman output violates the prescribed degrees");
        }
        return HuffmanResult{VertexWeightedTree(tree, tuple->weights()),
                             DirectedTree(parent, tuple->weights()), trace};
    }
};

// Mandatory prefix and equal-weight pool for picking `need` lightest pendants.
struct PendantSelection {
    std::vector<int> mandatory;
    std::vector<int> pool;
    int from_pool = 0;
};

PendantSelection split_selection(const HuffmanState& state, int need) {
    PendantSelection sel;
    std::vector<int> sorted = state.pendants_by_weight();
    if (static_cast<int>(sorted.size()) < need)
        throw std::logic_error("not enough pendants during Huffman construction");
    double pivot = state.weight[sorted[need - 1]];
    for (int v : sorted) {
        if (state.cmp.less(state.weight[v], pivot))
            sel.mandatory.push_back(v);
        else if (state.cmp.equal(state.weight[v], pivot))
            sel.pool.push_back(v);
    }
    sel.from_pool = need - static_cast<int>(sel.mandatory.size());
    return sel;
}

void run_default(HuffmanState& state) {
    while (state.internal_left > 1) {
        int m = state.merge_candidates().front();
        PendantSelection sel = split_selection(state, state.tuple->degree(m) - 1);
        std::vector<int> chosen = sel.mandatory;
        chosen.insert(chosen.end(), sel.pool.begin(), sel.pool.begin() + sel.from_pool);
        std::sort(chosen.begin(), chosen.end());
        state.attach(m, chosen);
    }
    state.finish();
}

void combinations(const std::vector<int>& pool, int r,
                  const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(chosen.size()) == r) {
            visit(chosen);
            return;
        }
        std::size_t still_needed = static_cast<std::size_t>(r) - chosen.size();
        for (std::size_t i = start; i + still_needed <= pool.size(); ++i) {
            chosen.push_back(pool[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

void run_all_ties(const HuffmanState& state, std::vector<HuffmanResult>& results,
                  std::set<std::vector<std::pair<int, int>>>& seen) {
    if (state.internal_left <= 1) {
        HuffmanState final_state = state;
        final_state.finish();
        if (seen.insert(final_state.normalized_edges()).second)
            results.push_back(final_state.result());
        return;
    }
    for (int m : state.merge_candidates()) {
        PendantSelection sel = split_selection(state, state.tuple->degree(m) - 1);
        combinations(sel.pool, sel.from_pool, [&](const std::vector<int>& extra) {
            HuffmanState next = state;
            std::vector<int> chosen = sel.mandatory;
            chosen.insert(chosen.end(), extra.begin(), extra.end());
            std::sort(chosen.begin(), chosen.end());
            next.attach(m, chosen);
            run_all_ties(next, results, seen);
        });
    }
}

std::string format_weight(double w) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    return buf;
}

// Tie closure collapsed by interchangeability: pendants with equal
// current weight and identical weighted-subtree keys need not be
// distinguished, and tied bare internals are symmetric.
struct GroupedClosure {
    std::vector<HuffmanResult> results;
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<std::string> shape;

    void run(const HuffmanState& state) {
        if (state.internal_left <= 1) {
            HuffmanState final_state = state;
            final_state.finish();
            if (seen.insert(final_state.normalized_edges()).second)
                results.push_back(final_state.result());
            return;
        }
        int m = state.merge_candidates().front();
        PendantSelection sel = split_selection(state, state.tuple->degree(m) - 1);
        std::map<std::string, std::vector<int>> groups;
        for (int v : sel.pool) groups[shape[v]].push_back(v);
        std::vector<const std::vector<int>*> group_list;
        for (auto& [key, members] : groups) group_list.push_back(&members);

        std::vector<int> take(group_list.size(), 0);
        std::function<void(std::size_t, int)> assign = [&](std::size_t g, int left) {
            if (g == group_list.size()) {
                if (left != 0) return;
                HuffmanState next = state;
                std::vector<int> chosen = sel.mandatory;
                for (std::size_t i = 0; i < group_list.size(); ++i)
                    chosen.insert(chosen.end(), group_list[i]->begin(),
                                  group_list[i]->begin() + take[i]);
                std::sort(chosen.begin(), chosen.end());
                next.attach(m, chosen);
                std::vector<std::string> parts;
                for (int v : chosen) parts.push_back(shape[v]);
                std::sort(parts.begin(), parts.end());
                std::string merged = format_weight(state.tuple->weight(m)) + "(";
                for (const std::string& p : parts) merged += p;
                merged += ")";
                std::string saved = shape[m];
                shape[m] = std::move(merged);
                run(next);
                shape[m] = std::move(saved);
                return;
            }
            int cap = std::min<int>(left, static_cast<int>(group_list[g]->size()));
            for (int c = 0; c <= cap; ++c) {
                take[g] = c;
                assign(g + 1, left - c);
            }
        };
        assign(0, sel.from_pool);
    }
};

}  // namespace

GeneratingTuple::GeneratingTuple(std::vector<double> weights, std::vector<int> degrees)
    : weights_(std::move(weights)), degrees_(std::move(degrees)) {
    if (weights_.size() != degrees_.size())
        throw PreconditionError("weights and degrees must have equal length");
    if (weights_.size() < 2)
        throw PreconditionError("a generating tuple needs at least 2 vertices");
    long long degree_sum = 0;
    for (int d : degrees_) {
        if (d < 1) throw PreconditionError("degrees must be positive");
        degree_sum += d;
    }
    for (double w : weights_) {
        if (!(w >= 0.0) || !std::isfinite(w))
            throw PreconditionError("weights must be finite and non-negative");
    }
    if (degree_sum != 2 * (static_cast<long long>(weights_.size()) - 1))
        throw PreconditionError("degrees must satisfy sum d(v) = 2(|V|-1)");
}

double GeneratingTuple::total_weight() const {
    double t = 0.0;
    for (double w : weights_) t += w;
    return t;
}

std::vector<int> GeneratingTuple::pendant_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (degrees_[v] == 1) out.push_back(v);
    return out;
}

std::vector<int> GeneratingTuple::internal_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (degrees_[v] > 1) out.push_back(v);
    return out;
}

bool is_degree_monotone(const GeneratingTuple& tuple) {
    for (int w : tuple.pendant_vertices()) {
        if (!(tuple.weight(w) > 0.0)) return false;
    }
    std::vector<int> internal = tuple.internal_vertices();
    for (int m : internal) {
        for (int m2 : internal) {
            if (tuple.degree(m) < tuple.degree(m2) && tuple.weight(m) > tuple.weight(m2))
                return false;
        }
    }
    return true;
}

HuffmanResult generalized_huffman(const GeneratingTuple& tuple) {
    HuffmanState state(tuple);
    if (state.internal_left == 0) {
        // Order-2 tuple: the single edge.
        state.edges.emplace_back(0, 1);
        state.parent[0] = 1;
        state.trace.terminal = 1;
        return state.result();
    }
    run_default(state);
    return state.result();
}

std::vector<HuffmanResult> generalized_huffman_all_ties(const GeneratingTuple& tuple) {
    if (tuple.internal_vertices().empty()) return {generalized_huffman(tuple)};
    std::vector<HuffmanResult> results;
    std::set<std::vector<std::pair<int, int>>> seen;
    run_all_ties(HuffmanState(tuple), results, seen);
    return results;
}

std::vector<HuffmanResult> generalized_huffman_tie_representatives(const GeneratingTuple& tuple) {
    if (tuple.internal_vertices().empty()) return {generalized_huffman(tuple)};
    GroupedClosure closure;
    closure.shape.resize(tuple.size());
    for (int v = 0; v < tuple.size(); ++v)
        closure.shape[v] = format_weight(tuple.weight(v)) + "()";
    closure.run(HuffmanState(tuple));
    return std::move(closure.results);
}

std::vector<double> subordinate_weights(const DirectedTree& tree) {
    const int n = tree.order();
    std::vector<double> f(n);
    std::vector<int> order_stack;
    order_stack.reserve(n);
    order_stack.push_back(tree.terminal());
    for (std::size_t i = 0; i < order_stack.size(); ++i) {
        for (int c : tree.children(order_stack[i])) order_stack.push_back(c);
    }
    for (int v = 0; v < n; ++v) f[v] = tree.weight(v);
    for (auto it = order_stack.rbegin(); it != order_stack.rend(); ++it) {
        if (tree.parent(*it) != -1) f[tree.parent(*it)] += f[*it];
    }
    return f;
}

double vwwi_directed(const DirectedTree& tree) {
    std::vector<double> f = subordinate_weights(tree);
    const double total = tree.total_weight();
    double sum = 0.0;
    for (int v = 0; v < tree.order(); ++v) {
        if (v != tree.terminal()) sum += f[v] * (total - f[v]);
    }
    return sum;
}

bool is_proper(const DirectedTree& tree) {
    std::vector<double> f = subordinate_weights(tree);
    const double half = tree.total_weight() / 2.0;
    for (int v = 0; v < tree.order(); ++v) {
        if (v == tree.terminal()) continue;
        int degree = static_cast<int>(tree.children(v).size()) + 1;
        if (degree >= 2 && f[v] > half) return false;
    }
    return true;
}

namespace {

struct ExtremalLayout {
    int internal_count;
    int exceptional_degree;  // equals max_degree when no exception is needed
};

ExtremalLayout extremal_layout(int n, int max_degree) {
    if (n < 2) throw PreconditionError("extremal tuple needs at least 2 vertices");
    if (max_degree < 3) throw PreconditionError("extremal tuple needs max degree >= 3");
    if (n == 2) return {0, max_degree};
    int q = (n - 2 + max_degree - 2) / (max_degree - 1);  // ceil((n-2)/(max_degree-1))
    int deficit = q * (max_degree - 1) - (n - 2);
    return {q, max_degree - deficit};
}

std::vector<int> eligible_by_weight(const std::vector<double>& weights,
                                    const std::vector<int>& forced_pendants) {
    const int n = static_cast<int>(weights.size());
    std::vector<char> forced(n, 0);
    for (int v : forced_pendants) {
        if (v < 0 || v >= n) throw PreconditionError("forced pendant id out of range");
        forced[v] = 1;
    }
    std::vector<int> eligible;
    for (int v = 0; v < n; ++v)
        if (!forced[v]) eligible.push_back(v);
    std::stable_sort(eligible.begin(), eligible.end(), [&](int a, int b) {
        if (weights[a] != weights[b]) return weights[a] > weights[b];
        return a < b;
    });
    return eligible;
}

}  // namespace

GeneratingTuple extremal_tuple(const std::vector<double>& weights,
                               const std::vector<int>& forced_pendants, int max_degree) {
    ExtremalLayout layout = extremal_layout(static_cast<int>(weights.size()), max_degree);
    std::vector<int> eligible = eligible_by_weight(weights, forced_pendants);
    if (static_cast<int>(eligible.size()) < layout.internal_count)
        throw PreconditionError("not enough eligible vertices for the internal set");

    std::vector<int> degrees(weights.size(), 1);
    int exceptional = -1;
    for (int i = 0; i < layout.internal_count; ++i) {
        int m = eligible[i];
        degrees[m] = max_degree;
        if (exceptional == -1 || weights[m] < weights[exceptional]) exceptional = m;
    }
    if (layout.exceptional_degree != max_degree && exceptional != -1)
        degrees[exceptional] = layout.exceptional_degree;
    return GeneratingTuple(weights, std::move(degrees));
}

std::vector<GeneratingTuple> extremal_tuple_variants(const std::vector<double>& weights,
                                                     const std::vector<int>& forced_pendants,
                                                     int max_degree) {
    ExtremalLayout layout = extremal_layout(static_cast<int>(weights.size()), max_degree);
    std::vector<int> eligible = eligible_by_weight(weights, forced_pendants);
    const int q = layout.internal_count;
    if (static_cast<int>(eligible.size()) < q)
        throw PreconditionError("not enough eligible vertices for the internal set");
    if (q == 0) return {extremal_tuple(weights, forced_pendants, max_degree)};

    double pivot = weights[eligible[q - 1]];
    std::vector<int> mandatory, pool;
    for (int v : eligible) {
        if (weights[v] > pivot)
            mandatory.push_back(v);
        else if (weights[v] == pivot)
            pool.push_back(v);
    }
    int from_pool = q - static_cast<int>(mandatory.size());

    std::vector<GeneratingTuple> variants;
    std::set<std::vector<int>> seen;
    combinations(pool, from_pool, [&](const std::vector<int>& extra) {
        std::vector<int> internals = mandatory;
        internals.insert(internals.end(), extra.begin(), extra.end());
        double min_w = weights[internals.front()];
        for (int m : internals) min_w = std::min(min_w, weights[m]);
        // Any minimal-weight internal may carry the exceptional degree.
        for (int m : internals) {
            if (weights[m] != min_w) continue;
            std::vector<int> degrees(weights.size(), 1);
            for (int u : internals) degrees[u] = max_degree;
            if (layout.exceptional_degree != max_degree) degrees[m] = layout.exceptional_degree;
            if (seen.insert(degrees).second)
                variants.emplace_back(weights, std::move(degrees));
            if (layout.exceptional_degree == max_degree) break;
        }
    });
    return variants;
}

std::vector<std::vector<std::pair<int, int>>> all_trees_with_degrees(
    const std::vector<int>& degrees) {
    const int n = static_cast<int>(degrees.size());
    if (n < 2) throw PreconditionError("need at least 2 vertices");
    long long degree_sum = 0;
    for (int d : degrees) {
        if (d < 1) throw PreconditionError("degrees must be positive");
        degree_sum += d;
    }
    if (degree_sum != 2LL * (n - 1))
        throw PreconditionError("degrees must satisfy sum d(v) = 2(|V|-1)");

    std::vector<std::vector<std::pair<int, int>>> out;
    if (n == 2) {
        out.push_back({{0, 1}});
        return out;
    }
    // Vertex v appears degree(v)-1 times in the Prufer sequence.
    std::vector<int> seq;
    for (int v = 0; v < n; ++v)
        for (int i = 1; i < degrees[v]; ++i) seq.push_back(v);
    do {
        std::vector<int> deg(n, 1);
        for (int v : seq) ++deg[v];
        std::vector<std::pair<int, int>> edges;
        edges.reserve(n - 1);
        int ptr = 0;
        while (deg[ptr] != 1) ++ptr;
        int leaf = ptr;
        for (int s : seq) {
            edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
            if (--deg[s] == 1 && s < ptr) {
                leaf = s;
            } else {
                ++ptr;
                while (ptr < n && deg[ptr] != 1) ++ptr;
                leaf = ptr;
            }
        }
        edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
        std::sort(edges.begin(), edges.end());
        out.push_back(std::move(edges));
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

GeneratingTuple random_degree_monotone_tuple(std::mt19937_64& rng, int min_order, int max_order) {
    auto uniform = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    int n = uniform(std::max(3, min_order), max_order);
    int q = std::clamp(uniform(1, std::max(1, (n - 1) / 2)), 1, n - 2);
    std::vector<int> internal_degrees(q, 2);
    int spare = (n + q - 2) - 2 * q;
    for (int i = 0; i < spare; ++i) ++internal_degrees[uniform(0, q - 1)];
    std::sort(internal_degrees.begin(), internal_degrees.end());
    std::vector<int> internal_weights(q);
    for (int& w : internal_weights) w = uniform(0, 9);
    std::sort(internal_weights.begin(), internal_weights.end());

    std::vector<double> weights(n);
    std::vector<int> degrees(n, 1);
    for (int i = 0; i < q; ++i) {
        degrees[i] = internal_degrees[i];
        weights[i] = internal_weights[i];
    }
    for (int v = q; v < n; ++v) weights[v] = uniform(1, 10);
    return GeneratingTuple(std::move(weights), std::move(degrees));
}

HuffmanOptimalityReport verify_huffman_optimality(std::uint64_t seed, int trials, int max_order) {
    if (max_order < 4 || max_order > 9)
        throw PreconditionError("optimality check is guarded to 4 <= max order <= 9");
    if (trials < 1) throw PreconditionError("trials must be positive");
    HuffmanOptimalityReport report;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        GeneratingTuple tuple = random_degree_monotone_tuple(rng, 4, max_order);
        ++report.trials;

        // Exhaustive minimum over every tree realizing the degrees,
        // evaluated by the pairwise-distance route.
        double best = 0.0;
        bool first = true;
        std::set<std::vector<std::pair<int, int>>> argmin;
        int max_deg = 4;
        for (int v = 0; v < tuple.size(); ++v) max_deg = std::max(max_deg, tuple.degree(v));
        for (const auto& edges : all_trees_with_degrees(tuple.degrees())) {
            VertexWeightedTree wt(ChemicalTree(tuple.size(), edges, max_deg), tuple.weights());
            double value = vertex_weighted_wiener_pairwise(wt);
            double tol = 1e-9 * std::max(1.0, std::abs(value));
            if (first || value < best - tol) {
                best = value;
                argmin.clear();
                first = false;
            }
            if (std::abs(value - best) <= tol) argmin.insert(edges);
        }

        HuffmanResult h = generalized_huffman(tuple);
        double huffman_value = vertex_weighted_wiener_pairwise(h.tree);
        std::set<std::vector<std::pair<int, int>>> closure;
        for (const HuffmanResult& r : generalized_huffman_all_ties(tuple)) {
            std::vector<std::pair<int, int>> key = r.tree.tree().edges();
            for (auto& [a, b] : key)
                if (a > b) std::swap(a, b);
            std::sort(key.begin(), key.end());
            closure.insert(std::move(key));
        }

        bool value_ok = std::abs(huffman_value - best) <= 1e-9 * std::max(1.0, std::abs(best));
        bool sets_ok = closure == argmin;
        if (!value_ok || !sets_ok) {
            ++report.failures;
            if (report.first_witness.empty()) {
                std::ostringstream witness;
                witness << "weights=(";
                for (int v = 0; v < tuple.size(); ++v)
                    witness << (v ? "," : "") << tuple.weight(v);
                witness << ") degrees=(";
                for (int v = 0; v < tuple.size(); ++v)
                    witness << (v ? "," : "") << tuple.degree(v);
                witness << ") huffman=" << huffman_value << " brute=" << best
                        << " closure=" << closure.size() << " argmin=" << argmin.size();
                report.first_witness = witness.str();
            }
        }
    }
    return report;
}

bool PropertySuiteReport::all_passed() const {
    for (const PropertyCheck& c : checks)
        if (c.failures > 0) return false;
    return true;
}

namespace {

std::string format_vector(const std::vector<double>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i];
    }
    out << ")";
    return out.str();
}

}  // namespace

PropertySuiteReport majorization_property_suite(std::uint64_t seed, int trials) {
    if (trials < 1) throw PreconditionError("trials must be positive");
    PropertySuiteReport report;

    auto record = [&](PropertyCheck& check, bool ok, const std::string& witness) {
        ++check.trials;
        if (!ok) {
            if (check.failures == 0) check.first_witness = witness;
            ++check.failures;
        }
    };

    // Moving mass b from a dominated tail onto a dominating head yields
    // strict weak majorization of the original by the shifted vector.
    {
        PropertyCheck check{"majorization_prefix_shift"};
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
        auto uniform = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
        for (int t = 0; t < trials; ++t) {
            int k = uniform(0, 4);
            int l = uniform(std::max(k, 1), k + 4);
            int b = uniform(1, 5);
            std::vector<double> tail(l);
            for (double& y : tail) y = uniform(b, b + 9);
            std::vector<double> head(k);
            for (int i = 0; i < k; ++i) head[i] = tail[i] + uniform(0, 5);
            std::vector<double> x(head), y;
            x.insert(x.end(), tail.begin(), tail.end());
            for (int i = 0; i < k; ++i) y.push_back(head[i] + b);
            for (int i = 0; i < l; ++i) y.push_back(tail[i] - b);
            bool ok = weak_majorize(y, x).relation == MajorizationRelation::strict;
            record(check, ok, "x=" + format_vector(x) + " y=" + format_vector(y));
        }
        report.checks.push_back(std::move(check));
    }

    // Concatenating a weakly dominated pair with a strictly dominated
    // pair stays strictly dominated.
    {
        PropertyCheck check{"majorization_concatenation"};
        std::mt19937_64 rng(seed ^ 0xbf58476d1ce4e5b9ull);
        auto uniform = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
        // Returns (x, y) with y weakly majorizing x; strict when forced.
        auto dominated_pair = [&](int len, bool force_strict) {
            std::vector<double> x(len);
            for (double& v : x) v = uniform(force_strict ? 1 : 0, 12);
            std::vector<double> y = x;
            int decreases = uniform(0, len);
            bool changed = false;
            for (int i = 0; i < decreases; ++i) {
                int at = uniform(0, len - 1);
                int amount = uniform(0, static_cast<int>(y[at]));
                y[at] -= amount;
                changed |= amount > 0;
            }
            if (force_strict && !changed) {
                int at = uniform(0, len - 1);
                if (y[at] < 1.0) {
                    x[at] += 1.0;
                    y[at] = x[at] - 1.0;
                } else {
                    y[at] -= 1.0;
                }
            }
            return std::make_pair(x, y);
        };
        for (int t = 0; t < trials; ++t) {
            auto [x1, y1] = dominated_pair(uniform(0, 5), false);
            auto [x2, y2] = dominated_pair(uniform(1, 5), true);
            std::vector<double> x(x1), y(y1);
            x.insert(x.end(), x2.begin(), x2.end());
            y.insert(y.end(), y2.begin(), y2.end());
            bool ok = weak_majorize(y, x).relation == MajorizationRelation::strict;
            record(check, ok, "x=" + format_vector(x) + " y=" + format_vector(y));
        }
        report.checks.push_back(std::move(check));
    }

    // chi(v) = v*(total - v) restricted to [0, total/2] is increasing
    // and concave, so weak majorization orders the chi-sums, with
    // equality exactly for equal sorted vectors.
    {
        PropertyCheck check{"concave_sum_order"};
        std::mt19937_64 rng(seed ^ 0x94d049bb133111ebull);
        auto uniform = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
        for (int t = 0; t < trials; ++t) {
            int len = uniform(1, 6);
            std::vector<double> y(len);
            for (double& v : y) v = uniform(0, 20);
            std::vector<double> x = y;
            int decreases = uniform(0, len);
            for (int i = 0; i < decreases; ++i) {
                int at = uniform(0, len - 1);
                x[at] -= uniform(0, static_cast<int>(x[at]));
            }
            double max_entry = 0.0;
            for (double v : y) max_entry = std::max(max_entry, v);
            double total = 2.0 * (max_entry + uniform(0, 5));
            auto chi = [&](double v) { return v * (total - v); };
            double sum_x = 0.0, sum_y = 0.0;
            for (double v : x) sum_x += chi(v);
            for (double v : y) sum_y += chi(v);
            MajorizationVerdict verdict = weak_majorize(x, y);
            bool ok = true;
            if (verdict.relation == MajorizationRelation::strict)
                ok = sum_x < sum_y;
            else if (verdict.relation == MajorizationRelation::weak_equal_sorted)
                ok = sum_x == sum_y;
            record(check, ok, "x=" + format_vector(x) + " y=" + format_vector(y));
        }
        report.checks.push_back(std::move(check));
    }

    // Subordinate-weight monotonicity across arcs with distinct heads
    // in Huffman trees.
    {
        PropertyCheck check{"huffman_subordinate_monotonicity"};
        std::mt19937_64 rng(seed ^ 0xd6e8feb86659fd93ull);
        for (int t = 0; t < trials; ++t) {
            GeneratingTuple tuple = random_degree_monotone_tuple(rng, 4, 9);
            HuffmanResult result = generalized_huffman(tuple);
            std::vector<double> f = subordinate_weights(result.directed);
            bool ok = true;
            const int n = tuple.size();
            for (int v = 0; v < n && ok; ++v) {
                int m = result.directed.parent(v);
                if (m == -1) continue;
                for (int v2 = 0; v2 < n && ok; ++v2) {
                    int m2 = result.directed.parent(v2);
                    if (m2 == -1 || m2 == m) continue;
                    if (f[v] < f[v2] && !(f[m] < f[m2])) ok = false;
                }
            }
            record(check, ok,
                   "weights=" + format_vector(tuple.weights()) + " f=" + format_vector(f));
        }
        report.checks.push_back(std::move(check));
    }

    return report;
}

}  // namespace chemtree
