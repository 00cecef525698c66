#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kpath/bigint.hpp"

namespace kpath {

// Raised on malformed edge-list input. line() is 1-based; the header is line 1.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Immutable vertex/arc structure with 0-based vertex ids. An undirected edge
// is stored as both arc orientations, so traversal code follows out-arcs
// uniformly; edge_count() still reports the undirected number.
class Graph {
public:
    Graph() = default;

    // Validates endpoints, rejects self-loops and duplicate edges.
    static Graph build(int n, bool directed, const std::vector<std::pair<int, int>>& edges);

    // Edge-list text: header "n m directed|undirected", then m lines "u v".
    // Blank lines are not allowed between edges; trailing blank lines are.
    static Graph parse(std::istream& in);
    static Graph parse(std::string_view text);

    int vertex_count() const noexcept { return n_; }
    bool directed() const noexcept { return directed_; }

    // Stored arcs (ordered pairs); twice edge_count() for undirected graphs.
    int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
    int edge_count() const noexcept {
        return directed_ ? arc_count() : arc_count() / 2;
    }

    const std::vector<int>& neighbors_out(int v) const { return out_.at(v); }
    const std::vector<int>& neighbors_in(int v) const { return in_.at(v); }
    bool has_arc(int u, int v) const;

    // All arcs in lexicographic order; arc_index inverts the list (-1 if absent).
    const std::vector<std::pair<int, int>>& arcs() const noexcept { return arcs_; }
    int arc_index(int u, int v) const;

    // Re-serializes in the edge-list text format accepted by parse().
    std::string to_edge_list() const;

private:
    int n_ = 0;
    bool directed_ = false;
    std::vector<std::vector<int>> out_, in_;
    std::vector<std::pair<int, int>> arcs_;
    std::unordered_map<std::uint64_t, int> arc_pos_;
};

// Simple path given as its ordered vertex sequence.
struct PathWitness {
    std::vector<int> vertices;
};

// True iff the witness has exactly k pairwise-distinct vertices of g and every
// consecutive pair is an arc.
bool witness_ok(const Graph& g, const PathWitness& w, int k);

// Result of deleting a vertex set: the remaining induced graph under dense
// ids, plus both directions of the relabeling.
struct VertexDeletion {
    Graph graph;
    std::vector<int> old_id;  // old_id[new] = original id
    std::vector<int> new_id;  // new_id[old] = dense id, -1 if deleted
};

VertexDeletion induced_delete(const Graph& g, const std::vector<int>& removed);

struct PathEnumeration {
    BigInt count;
    std::vector<PathWitness> witnesses;
};

// Exhaustive DFS baseline. Counts simple paths on exactly k vertices: one per
// unordered path for undirected graphs, one per directed sequence otherwise.
// witness_cap bounds stored witnesses only; the count is always exact.
PathEnumeration enumerate_k_paths(const Graph& g, int k,
                                  std::optional<std::size_t> witness_cap = std::nullopt);

// First k-vertex path in DFS order, or nullopt. Early-exit variant for
// decision use; the orientation of an undirected witness is not canonicalized.
std::optional<PathWitness> find_k_path(const Graph& g, int k);

}  // namespace kpath
