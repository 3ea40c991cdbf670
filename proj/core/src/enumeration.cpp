#include "chemtree/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>

#include "chemtree/encoding.hpp"
#include "chemtree/errors.hpp"
#include "chemtree/extremal.hpp"

namespace chemtree {

namespace {

constexpr int kMaxEnumerationOrder = 20;

// Lightweight adjacency used while growing partial trees.
using Adjacency = std::vector<std::vector<int>>;

std::string encode_partial(const Adjacency& adj, int v, int parent) {
    std::string out = "C";
    std::vector<std::string> parts;
    for (int u : adj[v]) {
        if (u != parent) parts.push_back(encode_partial(adj, u, v));
    }
    if (!parts.empty()) {
        std::sort(parts.begin(), parts.end());
        out += '(';
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ',';
            out += parts[i];
        }
        out += ')';
    }
    return out;
}

ChemicalTree materialize(const Adjacency& adj, int max_degree) {
    std::vector<std::pair<int, int>> edges;
    const int n = static_cast<int>(adj.size());
    edges.reserve(n - 1);
    for (int v = 0; v < n; ++v) {
        for (int u : adj[v]) {
            if (v < u) edges.emplace_back(v, u);
        }
    }
    return ChemicalTree(n, std::move(edges), max_degree);
}

// Canonical augmentation: the leaf just added must belong to the
// canonical deletion orbit (minimal rooted encoding among all leaves),
// and we only extend one representative per vertex orbit of the parent.
void grow(Adjacency& adj, int target, int max_degree,
          const std::function<void(const ChemicalTree&)>& visit) {
    const int k = static_cast<int>(adj.size());
    if (k == target) {
        visit(materialize(adj, max_degree));
        return;
    }
    std::vector<std::string> orbit_keys;
    for (int v = 0; v < k; ++v) {
        if (static_cast<int>(adj[v].size()) >= max_degree) continue;
        std::string key = encode_partial(adj, v, -1);
        if (std::find(orbit_keys.begin(), orbit_keys.end(), key) != orbit_keys.end()) continue;
        orbit_keys.push_back(std::move(key));

        adj[v].push_back(k);
        adj.push_back({v});
        bool accept = true;
        std::string added_key = encode_partial(adj, k, -1);
        for (int u = 0; u < k && accept; ++u) {
            if (adj[u].size() == 1 && encode_partial(adj, u, -1) < added_key) accept = false;
        }
        if (accept) grow(adj, target, max_degree, visit);
        adj.pop_back();
        adj[v].pop_back();
    }
}

std::vector<int> leaf_orbit_representatives(const ChemicalTree& tree) {
    std::vector<int> reps;
    std::vector<std::string> seen;
    for (int v = 0; v < tree.order(); ++v) {
        if (tree.degree(v) != 1) continue;
        std::string key = rooted_encoding(tree, v);
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            seen.push_back(std::move(key));
            reps.push_back(v);
        }
    }
    return reps;
}

void check_request(const EnumerationRequest& req, int min_order) {
    if (req.max_degree < 2) throw PreconditionError("max degree must be at least 2");
    if (req.order < min_order)
        throw PreconditionError("order must be at least " + std::to_string(min_order));
    if (req.order > kMaxEnumerationOrder)
        throw PreconditionError("enumeration is guarded to order <= " +
                                std::to_string(kMaxEnumerationOrder));
}

// ---------------------------------------------------------------------
// Prufer-sequence oracle. Self-contained on purpose: it must stay
// independent of the canonical_form implementation it cross-checks.
// Orders are capped at 10, so fixed-size scratch arrays avoid heap
// traffic in the innermost loop.

constexpr int kOracleMaxOrder = 10;
static_assert(2 * kOracleMaxOrder <= 31, "encodings must fit one machine word");

// A rooted parenthesization over the capped order fits 2n <= 20 bits,
// one bit per character with '(' = 0 and ')' = 1 packed most significant
// first, so bitstring comparison coincides with string comparison.
struct OracleCode {
    std::uint32_t bits;
    int length;
};

bool oracle_code_less(OracleCode a, OracleCode b) {
    int common = std::min(a.length, b.length);
    std::uint32_t pa = a.bits >> (a.length - common);
    std::uint32_t pb = b.bits >> (b.length - common);
    return pa < pb || (pa == pb && a.length < b.length);
}

struct OracleScratch {
    int n;
    int adj[kOracleMaxOrder][kOracleMaxOrder];
    int adj_len[kOracleMaxOrder];
    int deg[kOracleMaxOrder];

    OracleCode encode(int v, int parent) const {
        OracleCode children[kOracleMaxOrder];
        int count = 0;
        for (int i = 0; i < adj_len[v]; ++i) {
            int u = adj[v][i];
            if (u == parent) continue;
            OracleCode sub = encode(u, v);
            int at = count++;
            while (at > 0 && oracle_code_less(sub, children[at - 1])) {
                children[at] = children[at - 1];
                --at;
            }
            children[at] = sub;
        }
        OracleCode out{0, 1};  // '('
        for (int i = 0; i < count; ++i) {
            out.bits = (out.bits << children[i].length) | children[i].bits;
            out.length += children[i].length;
        }
        out.bits = (out.bits << 1) | 1;  // ')'
        ++out.length;
        return out;
    }

    // Centroid by repeated leaf stripping, then the lexicographically
    // least rooted encoding over the one or two central vertices.
    std::uint32_t canonical() const {
        int strip_deg[kOracleMaxOrder];
        int layer[kOracleMaxOrder], next[kOracleMaxOrder];
        bool removed[kOracleMaxOrder] = {};
        int layer_len = 0;
        for (int v = 0; v < n; ++v) {
            strip_deg[v] = adj_len[v];
            if (strip_deg[v] <= 1) layer[layer_len++] = v;
        }
        int remaining = n;
        while (remaining > 2) {
            remaining -= layer_len;
            int next_len = 0;
            for (int i = 0; i < layer_len; ++i) {
                int v = layer[i];
                removed[v] = true;
                for (int j = 0; j < adj_len[v]; ++j) {
                    int u = adj[v][j];
                    if (!removed[u] && --strip_deg[u] == 1) next[next_len++] = u;
                }
            }
            std::copy(next, next + next_len, layer);
            layer_len = next_len;
        }
        OracleCode best = encode(layer[0], -1);
        for (int i = 1; i < layer_len; ++i) {
            OracleCode candidate = encode(layer[i], -1);
            if (oracle_code_less(candidate, best)) best = candidate;
        }
        return best.bits;
    }
};

void oracle_decode_and_insert(const int* seq, int seq_len, int n,
                              std::unordered_set<std::uint32_t>& classes) {
    OracleScratch scratch;
    scratch.n = n;
    std::fill(scratch.adj_len, scratch.adj_len + n, 0);
    std::fill(scratch.deg, scratch.deg + n, 1);
    for (int i = 0; i < seq_len; ++i) ++scratch.deg[seq[i]];
    auto add_edge = [&](int a, int b) {
        scratch.adj[a][scratch.adj_len[a]++] = b;
        scratch.adj[b][scratch.adj_len[b]++] = a;
    };
    int ptr = 0;
    while (scratch.deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int i = 0; i < seq_len; ++i) {
        int s = seq[i];
        add_edge(leaf, s);
        if (--scratch.deg[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (ptr < n && scratch.deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    add_edge(leaf, n - 1);
    classes.insert(scratch.canonical());
}

void oracle_scan(int* seq, int seq_len, int* occur, int pos, int n, int max_occurrence,
                 std::unordered_set<std::uint32_t>& classes) {
    if (pos == seq_len) {
        oracle_decode_and_insert(seq, seq_len, n, classes);
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (occur[v] == max_occurrence) continue;
        seq[pos] = v;
        ++occur[v];
        oracle_scan(seq, seq_len, occur, pos + 1, n, max_occurrence, classes);
        --occur[v];
    }
}

}  // namespace

void for_each_chemical_tree(int order, int max_degree,
                            const std::function<void(const ChemicalTree&)>& visit) {
    if (order < 1) throw PreconditionError("order must be positive");
    if (order > kMaxEnumerationOrder)
        throw PreconditionError("enumeration is guarded to order <= " +
                                std::to_string(kMaxEnumerationOrder));
    Adjacency adj(1);
    grow(adj, order, max_degree, visit);
}

void for_each_pendent_rooted(int order, int max_degree,
                             const std::function<void(const PendentRootedTree&)>& visit) {
    for_each_chemical_tree(order, max_degree, [&](const ChemicalTree& tree) {
        for (int leaf : leaf_orbit_representatives(tree)) {
            visit(PendentRootedTree(tree, leaf));
        }
    });
}

std::vector<ChemicalTree> enumerate_chemical_trees(const EnumerationRequest& req) {
    check_request(req, 2);
    if (req.rooted) throw PreconditionError("free-tree enumeration needs rooted=false");
    std::vector<std::pair<std::string, ChemicalTree>> collected;
    for_each_chemical_tree(req.order, req.max_degree, [&](const ChemicalTree& t) {
        collected.emplace_back(canonical_form(t), t);
    });
    std::sort(collected.begin(), collected.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ChemicalTree> out;
    out.reserve(collected.size());
    for (auto& [key, tree] : collected) out.push_back(std::move(tree));
    return out;
}

std::vector<PendentRootedTree> enumerate_pendent_rooted(const EnumerationRequest& req) {
    check_request(req, 3);
    if (!req.rooted) throw PreconditionError("rooted enumeration needs rooted=true");
    std::vector<std::pair<std::string, PendentRootedTree>> collected;
    for_each_pendent_rooted(req.order, req.max_degree, [&](const PendentRootedTree& t) {
        collected.emplace_back(canonical_form(t), t);
    });
    std::sort(collected.begin(), collected.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<PendentRootedTree> out;
    out.reserve(collected.size());
    for (auto& [key, tree] : collected) out.push_back(std::move(tree));
    return out;
}

std::vector<ChemicalTree> enumerate_extremely_branched_free(const EnumerationRequest& req) {
    check_request(req, 4);
    EnumerationRequest full = req;
    full.extremely_branched_only = false;
    full.rooted = false;
    std::vector<ChemicalTree> out;
    for (ChemicalTree& t : enumerate_chemical_trees(full)) {
        if (is_extremely_branched(t)) out.push_back(std::move(t));
    }
    return out;
}

std::vector<PendentRootedTree> enumerate_extremely_branched_rooted(const EnumerationRequest& req) {
    check_request(req, 4);
    EnumerationRequest full = req;
    full.extremely_branched_only = false;
    full.rooted = true;
    std::vector<PendentRootedTree> out;
    for (PendentRootedTree& t : enumerate_pendent_rooted(full)) {
        if (is_extremely_branched(t.tree())) out.push_back(std::move(t));
    }
    return out;
}

long long prufer_oracle_count(int order, int max_degree) {
    if (order < 2 || order > 10)
        throw PreconditionError("the Prufer oracle is guarded to 2 <= order <= 10");
    if (max_degree < 1) throw PreconditionError("max degree must be positive");
    if (order == 2) return 1;

    const int positions = order - 2;
    const int max_occurrence = max_degree - 1;
    if (max_occurrence == 0) return 0;  // no internal vertices possible beyond order 2

    // Partition the search by the first sequence symbol and scan the
    // remainder concurrently; class sets are merged afterwards, so the
    // count is independent of scheduling.
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<std::unordered_set<std::uint32_t>>> futures;
    for (int first = 0; first < order; ++first) {
        auto task = [=]() {
            std::unordered_set<std::uint32_t> classes;
            int seq[kOracleMaxOrder] = {};
            int occur[kOracleMaxOrder] = {};
            seq[0] = first;
            occur[first] = 1;
            oracle_scan(seq, positions, occur, 1, order, max_occurrence, classes);
            return classes;
        };
        if (workers > 1) {
            futures.push_back(std::async(std::launch::async, task));
        } else {
            futures.push_back(std::async(std::launch::deferred, task));
        }
    }
    std::unordered_set<std::uint32_t> all;
    for (auto& f : futures) {
        for (std::uint32_t key : f.get()) all.insert(key);
    }
    return static_cast<long long>(all.size());
}

}  // namespace chemtree
