#include "sra/hardness.hpp"

#include <algorithm>
#include <deque>

#include "sra/derivation.hpp"
#include "sra/errors.hpp"

namespace sra {

std::uint32_t Graph::add_vertex(std::string name) {
    if (name.empty())
        throw Error("vertex name must be non-empty");
    for (char c : name)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == ':')
            throw Error("vertex name '" + name + "' contains a reserved character");
    if (find_vertex(name))
        throw Error("duplicate vertex '" + name + "'");
    names_.push_back(std::move(name));
    return static_cast<std::uint32_t>(names_.size() - 1);
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
    if (u >= names_.size() || v >= names_.size())
        throw Error("edge endpoint out of range");
    if (u == v)
        throw Error("self-loop edge on '" + names_[u] + "'");
    auto edge = std::minmax(u, v);
    if (std::find(edges_.begin(), edges_.end(), std::make_pair(edge.first, edge.second)) != edges_.end())
        throw Error("duplicate edge between '" + names_[u] + "' and '" + names_[v] + "'");
    edges_.emplace_back(edge.first, edge.second);
}

const std::string& Graph::vertex_name(std::uint32_t v) const {
    if (v >= names_.size())
        throw Error("vertex id out of range");
    return names_[v];
}

std::optional<std::uint32_t> Graph::find_vertex(std::string_view name) const {
    for (std::uint32_t v = 0; v < names_.size(); ++v)
        if (names_[v] == name)
            return v;
    return std::nullopt;
}

std::string Graph::edge_symbol(std::size_t edge_index) const {
    const auto& [u, v] = edges_.at(edge_index);
    const std::string& a = names_[u];
    const std::string& b = names_[v];
    return "e_{" + std::min(a, b) + "," + std::max(a, b) + "}";
}

std::vector<std::string> validate(const Graph& g) {
    std::vector<std::string> violations;
    if (g.num_vertices() < 3)
        violations.push_back("graph needs at least 3 vertices, has " +
                             std::to_string(g.num_vertices()));
    if (g.num_vertices() > 0) {
        std::vector<std::vector<std::uint32_t>> adjacent(g.num_vertices());
        for (const auto& [u, v] : g.edges()) {
            adjacent[u].push_back(v);
            adjacent[v].push_back(u);
        }
        std::vector<bool> seen(g.num_vertices(), false);
        std::deque<std::uint32_t> queue{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto w : adjacent[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    queue.push_back(w);
                }
        }
        if (count != g.num_vertices())
            violations.push_back("graph is not connected");
    }
    return violations;
}

std::size_t default_padding(const Graph& g) {
    std::size_t base = g.num_vertices() + g.num_edges();
    return base * base * base * base;
}

Dfa build_vc_dfa(const Graph& g, std::size_t delta) {
    auto violations = validate(g);
    if (!violations.empty())
        throw PreconditionError("invalid graph: " + violations.front());
    if (delta < 1)
        throw PreconditionError("padding must be at least 1");

    auto alphabet = std::make_shared<Alphabet>();
    std::vector<Symbol> vertex_symbol(g.num_vertices());
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
        vertex_symbol[v] = alphabet->intern(g.vertex_name(v));
    std::vector<Symbol> edge_symbol(g.num_edges());
    for (std::size_t e = 0; e < g.num_edges(); ++e)
        edge_symbol[e] = alphabet->intern(g.edge_symbol(e));
    Symbol dollar = alphabet->intern("$");
    for (std::size_t d = 1; d <= delta; ++d)
        alphabet->intern("d" + std::to_string(d));

    Dfa m(alphabet);
    std::vector<State> vertex_state(g.num_vertices());
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
        if (g.vertex_name(v) == "q_init" || g.vertex_name(v) == "q_sink" || g.vertex_name(v) == "q_acc")
            throw PreconditionError("vertex name '" + g.vertex_name(v) + "' collides with a reserved state");
        vertex_state[v] = m.add_state(g.vertex_name(v));
    }
    State init = m.add_state("q_init");
    State sink = m.add_state("q_sink");
    State acc = m.add_state("q_acc");

    for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
        m.add_transition(init, vertex_symbol[v], vertex_state[v]);
        m.add_transition(vertex_state[v], dollar, acc);
    }
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto& [u, v] = g.edges()[e];
        m.add_transition(vertex_state[u], edge_symbol[e], vertex_state[v]);
        m.add_transition(vertex_state[v], edge_symbol[e], vertex_state[u]);
    }
    for (State q = 0; q < m.num_states(); ++q)
        for (Symbol a = 0; a < alphabet->size(); ++a)
            if (!m.step(q, a))
                m.add_transition(q, a, sink);

    m.set_initial(init);
    m.add_accepting(acc);
    return m;
}

VertexCover min_vertex_cover(const Graph& g) {
    if (g.num_vertices() > 16)
        throw StateLimitError(g.num_vertices(), 16);
    const std::uint32_t n = static_cast<std::uint32_t>(g.num_vertices());
    std::uint32_t best_mask = 0;
    std::size_t best_size = n + 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size >= best_size)
            continue;
        bool covers = true;
        for (const auto& [u, v] : g.edges())
            if (!(mask & (1u << u)) && !(mask & (1u << v))) {
                covers = false;
                break;
            }
        if (covers) {
            best_size = size;
            best_mask = mask;
        }
    }
    VertexCover cover;
    cover.size = best_size;
    for (std::uint32_t v = 0; v < n; ++v)
        if (best_mask & (1u << v))
            cover.vertices.insert(v);
    return cover;
}

std::size_t size_budget(std::size_t k_prime, std::size_t delta) {
    return (k_prime + 2) * 2 * delta + (2 * delta - 1);
}

VcCorrespondence check_vc_correspondence(const Graph& g, std::size_t delta) {
    if (g.num_vertices() > 5)
        throw StateLimitError(g.num_vertices(), 5);
    if (delta > 8)
        throw Error("correspondence check limited to padding <= 8");

    Dfa m = build_vc_dfa(g, delta);
    std::set<State> specials;
    for (const char* name : {"q_init", "q_sink", "q_acc"})
        specials.insert(*m.find_state(name));

    VcCorrespondence result;
    result.covers_induce_tracking = true;
    const std::uint32_t n = static_cast<std::uint32_t>(g.num_vertices());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::set<std::uint32_t> subset;
        for (std::uint32_t v = 0; v < n; ++v)
            if (mask & (1u << v))
                subset.insert(v);
        bool covers = true;
        for (const auto& [u, v] : g.edges())
            if (!subset.count(u) && !subset.count(v))
                covers = false;
        if (!covers)
            continue;
        std::set<State> candidate = specials;
        for (std::uint32_t v : subset)
            candidate.insert(*m.find_state(g.vertex_name(v)));
        if (!is_suffix_tracking(m, candidate)) {
            result.covers_induce_tracking = false;
            result.cover_failures.push_back(subset);
        }
    }

    auto tracking_sets = enumerate_suffix_tracking_sets(m);
    result.tracking_sets_project_to_covers = true;
    result.min_tracking_vertex_part = g.num_vertices();
    for (const auto& s : tracking_sets) {
        std::set<std::uint32_t> vertex_part;
        for (State q : s)
            if (auto v = g.find_vertex(m.state_name(q)))
                vertex_part.insert(*v);
        bool covers = true;
        for (const auto& [u, v] : g.edges())
            if (!vertex_part.count(u) && !vertex_part.count(v))
                covers = false;
        if (!covers) {
            result.tracking_sets_project_to_covers = false;
            result.tracking_failures.push_back(s);
        } else {
            result.min_tracking_vertex_part = std::min(result.min_tracking_vertex_part,
                                                       vertex_part.size());
        }
    }

    result.min_cover_size = min_vertex_cover(g).size;
    return result;
}

}  // namespace sra
