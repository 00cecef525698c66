#include "kpath/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace kpath {

namespace {

std::uint64_t arc_key(int u, int v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

bool blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

// Splits a line into whitespace-separated tokens.
std::vector<std::string_view> tokens_of(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, int line, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected an integer for ") + what + ", got \"" +
                                   std::string(tok) + "\"");
    return value;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Graph Graph::build(int n, bool directed, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.directed_ = directed;
    g.out_.assign(n, {});
    g.in_.assign(n, {});

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        const int a = directed ? u : std::min(u, v);
        const int b = directed ? v : std::max(u, v);
        if (!seen.insert(arc_key(a, b)).second)
            throw std::invalid_argument("duplicate edge");
        g.arcs_.emplace_back(u, v);
        if (!directed) g.arcs_.emplace_back(v, u);
    }

    // Canonical arc order keeps witnesses and random assignments independent
    // of the input edge order.
    std::sort(g.arcs_.begin(), g.arcs_.end());
    g.arc_pos_.reserve(g.arcs_.size());
    for (int i = 0; i < static_cast<int>(g.arcs_.size()); ++i) {
        auto [u, v] = g.arcs_[i];
        g.arc_pos_.emplace(arc_key(u, v), i);
        g.out_[u].push_back(v);
        g.in_[v].push_back(u);
    }
    return g;
}

Graph Graph::parse(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> bool {
        ++line_no;
        return static_cast<bool>(std::getline(in, line));
    };

    if (!next_line() || blank(line)) throw ParseError(1, "missing header \"n m directed|undirected\"");
    auto head = tokens_of(line);
    if (head.size() != 3)
        throw ParseError(1, "header must be \"n m directed|undirected\"");
    const long long n = parse_int(head[0], 1, "vertex count");
    const long long m = parse_int(head[1], 1, "edge count");
    if (n < 0) throw ParseError(1, "vertex count must be non-negative");
    if (m < 0) throw ParseError(1, "edge count must be non-negative");
    bool directed;
    if (head[2] == "directed") directed = true;
    else if (head[2] == "undirected") directed = false;
    else throw ParseError(1, "graph kind must be \"directed\" or \"undirected\", got \"" +
                                 std::string(head[2]) + "\"");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(m) * 2);
    for (long long e = 0; e < m; ++e) {
        if (!next_line())
            throw ParseError(line_no, "expected " + std::to_string(m) + " edges, input ended after " +
                                          std::to_string(e));
        auto toks = tokens_of(line);
        if (toks.size() != 2) throw ParseError(line_no, "edge line must be \"u v\"");
        const long long u = parse_int(toks[0], line_no, "edge endpoint");
        const long long v = parse_int(toks[1], line_no, "edge endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "edge endpoint out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(line_no, "self-loop is not allowed");
        const int a = static_cast<int>(directed ? u : std::min(u, v));
        const int b = static_cast<int>(directed ? v : std::max(u, v));
        if (!seen.insert(arc_key(a, b)).second)
            throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    while (next_line()) {
        if (!blank(line)) throw ParseError(line_no, "unexpected data after the last edge");
    }
    return build(static_cast<int>(n), directed, edges);
}

Graph Graph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
}

bool Graph::has_arc(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return arc_pos_.contains(arc_key(u, v));
}

int Graph::arc_index(int u, int v) const {
    auto it = arc_pos_.find(arc_key(u, v));
    return it == arc_pos_.end() ? -1 : it->second;
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    out << n_ << ' ' << edge_count() << ' ' << (directed_ ? "directed" : "undirected") << '\n';
    for (auto [u, v] : arcs_) {
        if (!directed_ && u > v) continue;  // one line per undirected edge
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

bool witness_ok(const Graph& g, const PathWitness& w, int k) {
    if (k < 1 || static_cast<int>(w.vertices.size()) != k) return false;
    std::unordered_set<int> seen;
    for (int v : w.vertices) {
        if (v < 0 || v >= g.vertex_count()) return false;
        if (!seen.insert(v).second) return false;
    }
    for (std::size_t i = 1; i < w.vertices.size(); ++i)
        if (!g.has_arc(w.vertices[i - 1], w.vertices[i])) return false;
    return true;
}

VertexDeletion induced_delete(const Graph& g, const std::vector<int>& removed) {
    const int n = g.vertex_count();
    std::vector<char> gone(n, 0);
    for (int v : removed) {
        if (v < 0 || v >= n) throw std::invalid_argument("deleted vertex out of range");
        gone[v] = 1;
    }

    VertexDeletion result;
    result.new_id.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (gone[v]) continue;
        result.new_id[v] = static_cast<int>(result.old_id.size());
        result.old_id.push_back(v);
    }

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.arcs()) {
        if (gone[u] || gone[v]) continue;
        if (!g.directed() && u > v) continue;
        edges.emplace_back(result.new_id[u], result.new_id[v]);
    }
    result.graph = Graph::build(static_cast<int>(result.old_id.size()), g.directed(), edges);
    return result;
}

namespace {

// Shared DFS skeleton: extends a partial path over unused vertices; visit()
// sees each complete k-vertex sequence and may stop the search.
bool dfs_paths(const Graph& g, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    const int n = g.vertex_count();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    path.reserve(k);

    std::function<bool(int)> extend = [&](int v) -> bool {
        path.push_back(v);
        used[v] = 1;
        bool stop = false;
        if (static_cast<int>(path.size()) == k) {
            stop = visit(path);
        } else {
            for (int w : g.neighbors_out(v)) {
                if (!used[w] && extend(w)) {
                    stop = true;
                    break;
                }
            }
        }
        used[v] = 0;
        path.pop_back();
        return stop;
    };

    for (int v = 0; v < n; ++v)
        if (extend(v)) return true;
    return false;
}

}  // namespace

PathEnumeration enumerate_k_paths(const Graph& g, int k, std::optional<std::size_t> witness_cap) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    PathEnumeration result;
    result.count = 0;
    if (k > g.vertex_count()) return result;

    dfs_paths(g, k, [&](const std::vector<int>& path) {
        // An undirected path is one object but two sequences; keep the
        // lexicographically smaller endpoint first so each path counts once.
        if (!g.directed() && k > 1 && path.front() > path.back()) return false;
        ++result.count;
        if (!witness_cap || result.witnesses.size() < *witness_cap)
            result.witnesses.push_back(PathWitness{path});
        return false;
    });
    return result;
}

std::optional<PathWitness> find_k_path(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (k > g.vertex_count()) return std::nullopt;
    std::optional<PathWitness> found;
    dfs_paths(g, k, [&](const std::vector<int>& path) {
        found = PathWitness{path};
        return true;
    });
    return found;
}

}  // namespace kpath
