#include "chemtree/encoding.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>

#include "chemtree/errors.hpp"

namespace chemtree {

namespace {

struct GrammarParser {
    std::string_view text;
    std::size_t pos = 0;
    int o_count = 0;
    std::vector<std::pair<int, int>> edges;
    int next_id = 0;

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos); }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    // Parses one Node, returns its pre-order id.
    int parse_node(int depth) {
        char label = peek();
        if (label != 'O' && label != 'C') fail("expected label 'O' or 'C'");
        if (label == 'O') {
            if (depth > 0) fail("'O' is only allowed as the outermost node");
            if (++o_count > 1) fail("more than one 'O' label");
        }
        int id = next_id++;
        ++pos;
        if (peek() == '(') {
            ++pos;
            while (true) {
                int child = parse_node(depth + 1);
                edges.emplace_back(id, child);
                if (peek() == ',') {
                    ++pos;
                    continue;
                }
                if (peek() == ')') {
                    ++pos;
                    break;
                }
                fail("expected ',' or ')'");
            }
        }
        return id;
    }
};

ParsedTree parse_json_form(std::string_view text, int max_degree) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!doc.is_object() || !doc.contains("parent") || !doc["parent"].is_array())
        throw ParseError("JSON form needs a \"parent\" array", 0);
    const auto& parr = doc["parent"];
    const int n = static_cast<int>(parr.size());
    if (n < 1) throw ParseError("\"parent\" array must be non-empty", 0);
    std::vector<std::pair<int, int>> edges;
    int top_count = 0;
    for (int v = 0; v < n; ++v) {
        const auto& entry = parr[v];
        if (entry.is_null() || (entry.is_number_integer() && entry.get<int>() == -1)) {
            ++top_count;
            continue;
        }
        if (!entry.is_number_integer())
            throw ParseError("parent entries must be integers or null", 0);
        edges.emplace_back(v, entry.get<int>());
    }
    if (top_count != 1) throw ParseError("exactly one parent entry must be null or -1", 0);
    ChemicalTree tree(n, std::move(edges), max_degree);
    std::optional<int> root;
    if (doc.contains("root") && !doc["root"].is_null()) {
        if (!doc["root"].is_number_integer()) throw ParseError("\"root\" must be an integer", 0);
        root = doc["root"].get<int>();
        if (*root < 0 || *root >= n) throw ParseError("\"root\" out of range", 0);
    }
    return ParsedTree{std::move(tree), root};
}

// Canonical rooted encoding with an explicit root label.
std::string encode_from(const ChemicalTree& tree, int root, char root_label) {
    std::function<std::string(int, int)> encode = [&](int v, int parent) {
        std::string out(1, v == root ? root_label : 'C');
        std::vector<std::string> parts;
        for (int u : tree.neighbors(v)) {
            if (u != parent) parts.push_back(encode(u, v));
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
    };
    return encode(root, -1);
}

}  // namespace

ParsedTree parse_tree(std::string_view text, int max_degree) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty input", 0);
    if (text[first] == '{') return parse_json_form(text, max_degree);

    GrammarParser parser{text, first};
    int top = parser.parse_node(0);
    if (parser.pos != text.size()) {
        std::size_t rest = text.find_first_not_of(" \t\r\n", parser.pos);
        if (rest != std::string_view::npos) {
            parser.pos = rest;
            parser.fail("unexpected trailing input");
        }
    }
    bool rooted = text[first] == 'O';
    ChemicalTree tree(parser.next_id, std::move(parser.edges), max_degree);
    if (rooted && tree.order() >= 2 && tree.degree(top) != 1)
        throw ParseError("'O' root must be pendent (it has more than one child)", first);
    if (rooted && tree.order() < 2) throw ParseError("a rooted tree needs at least two vertices", first);
    return ParsedTree{std::move(tree), rooted ? std::optional<int>(top) : std::nullopt};
}

PendentRootedTree parse_rooted_tree(std::string_view text, int max_degree) {
    ParsedTree parsed = parse_tree(text, max_degree);
    if (!parsed.rooted()) throw ParseError("expected a rooted tree (outermost label 'O')", 0);
    return parsed.rooted_tree();
}

ChemicalTree parse_free_tree(std::string_view text, int max_degree) {
    ParsedTree parsed = parse_tree(text, max_degree);
    if (parsed.rooted()) throw ParseError("expected an unrooted tree (no 'O' label)", 0);
    return parsed.tree;
}

std::vector<int> centroids(const ChemicalTree& tree) {
    const int n = tree.order();
    if (n == 1) return {0};
    std::vector<int> subtree(n, 1);
    std::vector<int> order_stack;
    std::vector<int> parent(n, -2);
    order_stack.reserve(n);
    order_stack.push_back(0);
    parent[0] = -1;
    for (std::size_t i = 0; i < order_stack.size(); ++i) {
        int v = order_stack[i];
        for (int u : tree.neighbors(v)) {
            if (parent[u] == -2) {
                parent[u] = v;
                order_stack.push_back(u);
            }
        }
    }
    for (auto it = order_stack.rbegin(); it != order_stack.rend(); ++it) {
        if (parent[*it] >= 0) subtree[parent[*it]] += subtree[*it];
    }
    std::vector<int> result;
    int best = n;
    for (int v = 0; v < n; ++v) {
        int heaviest = n - subtree[v];
        for (int u : tree.neighbors(v)) {
            if (u != parent[v]) heaviest = std::max(heaviest, subtree[u]);
        }
        if (heaviest < best) {
            best = heaviest;
            result.clear();
        }
        if (heaviest == best) result.push_back(v);
    }
    return result;
}

std::string canonical_form(const ChemicalTree& tree) {
    std::vector<int> centers = centroids(tree);
    std::string best = encode_from(tree, centers[0], 'C');
    for (std::size_t i = 1; i < centers.size(); ++i)
        best = std::min(best, encode_from(tree, centers[i], 'C'));
    return best;
}

std::string canonical_form(const PendentRootedTree& tree) {
    return encode_from(tree.tree(), tree.root(), 'O');
}

std::string rooted_encoding(const ChemicalTree& tree, int root) {
    return encode_from(tree, root, 'C');
}

}  // namespace chemtree
