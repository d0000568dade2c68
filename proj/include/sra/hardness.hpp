#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sra/automata.hpp"

namespace sra {

/// Undirected graph with named vertices; edges are unordered pairs, stored
/// with the smaller vertex id first.
class Graph {
public:
    std::uint32_t add_vertex(std::string name);
    /// Throws on self-loops and duplicate edges.
    void add_edge(std::uint32_t u, std::uint32_t v);

    std::size_t num_vertices() const { return names_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    const std::string& vertex_name(std::uint32_t v) const;
    const std::vector<std::string>& vertex_names() const { return names_; }
    std::optional<std::uint32_t> find_vertex(std::string_view name) const;
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }
    /// Deterministic edge symbol: "e_{u,v}" with endpoint names sorted.
    std::string edge_symbol(std::size_t edge_index) const;

private:
    std::vector<std::string> names_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
};

/// Connected, no self-loops or multi-edges (structural), at least three
/// vertices. Violations come back as messages.
std::vector<std::string> validate(const Graph& g);

/// The padding the construction defaults to: (|V| + |E|)^4.
std::size_t default_padding(const Graph& g);

/// The reduction DFA over V + E + {$} + {d1..dDelta}: from the initial state a
/// vertex letter enters that vertex, edge letters walk between their
/// endpoints, '$' accepts from any vertex, and everything else feeds an
/// absorbing sink. Complete by construction; accepted words are exactly
/// vertex-rooted edge walks terminated by '$'.
Dfa build_vc_dfa(const Graph& g, std::size_t delta);

struct VertexCover {
    std::size_t size;
    std::set<std::uint32_t> vertices;  // one witness of minimum size
};

/// Exact minimum by subset enumeration; refuses graphs over 16 vertices.
VertexCover min_vertex_cover(const Graph& g);

/// k = (k' + 2) * 2*Delta + (2*Delta - 1), the derived-DSA size budget
/// matching a vertex cover of size k'.
std::size_t size_budget(std::size_t k_prime, std::size_t delta);

struct VcCorrespondence {
    /// Every vertex cover C makes C + {q_init, q_sink, q_acc} suffix-tracking.
    bool covers_induce_tracking = false;
    std::vector<std::set<std::uint32_t>> cover_failures;
    /// Every suffix-tracking set projects onto V as a vertex cover.
    bool tracking_sets_project_to_covers = false;
    std::vector<std::set<State>> tracking_failures;

    std::size_t min_cover_size = 0;
    std::size_t min_tracking_vertex_part = 0;

    bool ok() const { return covers_induce_tracking && tracking_sets_project_to_covers; }
};

/// Exhaustively cross-checks vertex covers of g against suffix-tracking sets
/// of build_vc_dfa(g, delta). Feasible only for small graphs and paddings.
VcCorrespondence check_vc_correspondence(const Graph& g, std::size_t delta);

}  // namespace sra
