#include "ohg/hypergraph.hpp"

#include <algorithm>
#include <unordered_map>

namespace ohg {

int OrientedHypergraph::vertex_index(std::string_view name) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vertex_names_[v] == name) return v;
    throw UnknownElement("unknown vertex: " + std::string(name));
}

int OrientedHypergraph::edge_index(std::string_view name) const {
    for (int e = 0; e < edge_count(); ++e)
        if (edge_names_[e] == name) return e;
    throw UnknownElement("unknown edge: " + std::string(name));
}

std::span<const int> OrientedHypergraph::incidences_at(int v) const {
    check_vertex(v);
    return at_vertex_[v];
}

std::span<const int> OrientedHypergraph::incidences_on(int e) const {
    check_edge(e);
    return on_edge_[e];
}

int OrientedHypergraph::degree(int v) const {
    return static_cast<int>(incidences_at(v).size());
}

int OrientedHypergraph::edge_size(int e) const {
    return static_cast<int>(incidences_on(e).size());
}

bool OrientedHypergraph::has_isolated_vertex() const {
    return std::any_of(at_vertex_.begin(), at_vertex_.end(),
                       [](const auto& ids) { return ids.empty(); });
}

bool OrientedHypergraph::has_empty_edge() const {
    return std::any_of(on_edge_.begin(), on_edge_.end(),
                       [](const auto& ids) { return ids.empty(); });
}

std::vector<DirectedAdjacency> OrientedHypergraph::adjacencies(int v) const {
    check_vertex(v);
    std::vector<DirectedAdjacency> out;
    for (int i : at_vertex_[v]) {
        int e = incidences_[i].edge;
        for (int j : on_edge_[e]) {
            if (j == i) continue;
            out.push_back({v, i, e, j, incidences_[j].vertex});
        }
    }
    return out;
}

int OrientedHypergraph::adjacency_sign(const DirectedAdjacency& adj) const {
    const Incidence& i = incidence(adj.tail_incidence);
    const Incidence& j = incidence(adj.head_incidence);
    if (adj.tail_incidence == adj.head_incidence || i.edge != j.edge || i.edge != adj.edge ||
        i.vertex != adj.tail_vertex || j.vertex != adj.head_vertex)
        throw PreconditionViolated("directed adjacency does not exist in this hypergraph");
    return -i.sign * j.sign;
}

OrientationClass OrientedHypergraph::orientation_class() const {
    bool all_pos = std::all_of(incidences_.begin(), incidences_.end(),
                               [](const Incidence& i) { return i.sign == +1; });
    if (all_pos) return OrientationClass::extroverted;
    bool all_neg = std::all_of(incidences_.begin(), incidences_.end(),
                               [](const Incidence& i) { return i.sign == -1; });
    if (all_neg) return OrientationClass::introverted;
    return OrientationClass::neither;
}

OrientedHypergraph OrientedHypergraph::with_signs(std::span<const int> signs) const {
    if (static_cast<int>(signs.size()) != incidence_count())
        throw PreconditionViolated("sign list length does not match incidence count");
    OrientedHypergraph copy = *this;
    for (int i = 0; i < incidence_count(); ++i) {
        if (signs[i] != +1 && signs[i] != -1)
            throw InvalidSign("incidence sign must be +1 or -1");
        copy.incidences_[i].sign = signs[i];
    }
    return copy;
}

void OrientedHypergraph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) throw UnknownElement("vertex index out of range");
}

void OrientedHypergraph::check_edge(int e) const {
    if (e < 0 || e >= edge_count()) throw UnknownElement("edge index out of range");
}

void OrientedHypergraph::index_incidences() {
    at_vertex_.assign(vertex_names_.size(), {});
    on_edge_.assign(edge_names_.size(), {});
    for (int i = 0; i < incidence_count(); ++i) {
        at_vertex_[incidences_[i].vertex].push_back(i);
        on_edge_[incidences_[i].edge].push_back(i);
    }
}

HypergraphBuilder& HypergraphBuilder::vertex(std::string name) {
    vertices_.push_back(std::move(name));
    return *this;
}

HypergraphBuilder& HypergraphBuilder::edge(std::string name) {
    edges_.push_back(std::move(name));
    return *this;
}

HypergraphBuilder& HypergraphBuilder::incidence(std::string vertex, std::string edge, int sign) {
    incidences_.push_back({std::move(vertex), std::move(edge), sign});
    return *this;
}

namespace {

// names must survive the line-oriented text serialization
void check_name(const std::string& name) {
    if (name.empty()) throw ValidationError("element names must be non-empty");
    for (char c : name)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#')
            throw ValidationError("element name contains whitespace or '#': " + name);
}

} // namespace

OrientedHypergraph HypergraphBuilder::build() const {
    OrientedHypergraph g;
    std::unordered_map<std::string, int> vid, eid;
    for (const std::string& name : vertices_) {
        check_name(name);
        if (!vid.emplace(name, static_cast<int>(g.vertex_names_.size())).second)
            throw DuplicateName("duplicate vertex name: " + name);
        g.vertex_names_.push_back(name);
    }
    for (const std::string& name : edges_) {
        check_name(name);
        if (!eid.emplace(name, static_cast<int>(g.edge_names_.size())).second)
            throw DuplicateName("duplicate edge name: " + name);
        g.edge_names_.push_back(name);
    }
    for (const RawIncidence& raw : incidences_) {
        auto v = vid.find(raw.vertex);
        if (v == vid.end()) throw DanglingReference("incidence names unknown vertex: " + raw.vertex);
        auto e = eid.find(raw.edge);
        if (e == eid.end()) throw DanglingReference("incidence names unknown edge: " + raw.edge);
        if (raw.sign != +1 && raw.sign != -1)
            throw InvalidSign("incidence sign must be +1 or -1");
        g.incidences_.push_back({v->second, e->second, raw.sign});
    }
    g.index_incidences();
    return g;
}

OrientedHypergraph weak_delete(const OrientedHypergraph& g, std::span<const int> drop,
                               bool drop_empty_edges) {
    std::vector<bool> dropped(g.vertex_count(), false);
    for (int v : drop) {
        if (v < 0 || v >= g.vertex_count()) throw UnknownElement("vertex index out of range");
        dropped[v] = true;
    }
    std::vector<int> edge_size_after(g.edge_count(), 0);
    for (const Incidence& inc : g.incidences())
        if (!dropped[inc.vertex]) ++edge_size_after[inc.edge];

    HypergraphBuilder b;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!dropped[v]) b.vertex(g.vertex_name(v));
    std::vector<bool> edge_kept(g.edge_count(), false);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (drop_empty_edges && edge_size_after[e] == 0) continue;
        edge_kept[e] = true;
        b.edge(g.edge_name(e));
    }
    for (const Incidence& inc : g.incidences())
        if (!dropped[inc.vertex] && edge_kept[inc.edge])
            b.incidence(g.vertex_name(inc.vertex), g.edge_name(inc.edge), inc.sign);
    return b.build();
}

bool is_balanced_signed_graph(const OrientedHypergraph& g) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge_size(e) >= 3)
            throw NotASignedGraph("edge " + g.edge_name(e) + " has size >= 3");

    // mark[v] in {0, +1, -1}; every 2-edge must satisfy
    // sign(e) = mark(endpoint) * mark(endpoint).
    std::vector<int> mark(g.vertex_count(), 0);
    std::vector<std::vector<std::pair<int, int>>> links(g.vertex_count()); // vertex -> (other, sign)
    for (int e = 0; e < g.edge_count(); ++e) {
        auto ids = g.incidences_on(e);
        if (ids.size() != 2) continue; // 0- and 1-edges form no circles
        const Incidence& i = g.incidence(ids[0]);
        const Incidence& j = g.incidence(ids[1]);
        int sign = -i.sign * j.sign;
        if (i.vertex == j.vertex) {
            if (sign == -1) return false; // negative loop
            continue;
        }
        links[i.vertex].emplace_back(j.vertex, sign);
        links[j.vertex].emplace_back(i.vertex, sign);
    }
    std::vector<int> stack;
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (mark[root] != 0) continue;
        mark[root] = +1;
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, sign] : links[v]) {
                int want = mark[v] * sign;
                if (mark[w] == 0) {
                    mark[w] = want;
                    stack.push_back(w);
                } else if (mark[w] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace ohg
