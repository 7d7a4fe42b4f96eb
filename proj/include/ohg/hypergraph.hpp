#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ohg/errors.hpp"

namespace ohg {

// One incidence atom: a vertex sitting on an edge with a sign. Its id is its
// position in the incidence list; parallel incidences (same vertex and edge)
// are distinct atoms told apart by id only.
struct Incidence {
    int vertex = -1;
    int edge = -1;
    int sign = +1; // in {+1, -1}
};

// A directed adjacency (tail, i, e, j, head) with i != j. Loops are the
// head == tail case through two distinct incidences; a backstep (i == j)
// is not an adjacency.
struct DirectedAdjacency {
    int tail_vertex;
    int tail_incidence;
    int edge;
    int head_incidence;
    int head_vertex;
};

enum class OrientationClass { extroverted, introverted, neither };

// Immutable oriented hypergraph. Vertex, edge and incidence orderings are
// fixed at construction and define every matrix row/column order downstream.
class OrientedHypergraph {
public:
    OrientedHypergraph() = default;

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int edge_count() const { return static_cast<int>(edge_names_.size()); }
    int incidence_count() const { return static_cast<int>(incidences_.size()); }

    const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
    const std::string& edge_name(int e) const { return edge_names_.at(e); }
    const Incidence& incidence(int i) const { return incidences_.at(i); }
    const std::vector<Incidence>& incidences() const { return incidences_; }

    // Throw UnknownElement for names absent from the structure.
    int vertex_index(std::string_view name) const;
    int edge_index(std::string_view name) const;

    // Incidence ids at a vertex / on an edge, ascending.
    std::span<const int> incidences_at(int v) const;
    std::span<const int> incidences_on(int e) const;

    // Counts parallel incidences with multiplicity.
    int degree(int v) const;
    int edge_size(int e) const;

    bool has_isolated_vertex() const;
    bool has_empty_edge() const;

    // All directed adjacencies with tail v, ordered by (tail incidence id,
    // head incidence id). Includes loops, excludes backsteps.
    std::vector<DirectedAdjacency> adjacencies(int v) const;

    // sgn(v,i,e,j,w) = -sigma(i) * sigma(j)
    int adjacency_sign(const DirectedAdjacency& adj) const;

    OrientationClass orientation_class() const;

    // Same underlying structure with replacement incidence signs.
    OrientedHypergraph with_signs(std::span<const int> signs) const;

    friend class HypergraphBuilder;

private:
    void check_vertex(int v) const;
    void check_edge(int e) const;
    void index_incidences();

    std::vector<std::string> vertex_names_;
    std::vector<std::string> edge_names_;
    std::vector<Incidence> incidences_;
    std::vector<std::vector<int>> at_vertex_;
    std::vector<std::vector<int>> on_edge_;
};

// Accumulates raw element lists in input order, then validates. Errors:
// DuplicateName, DanglingReference, InvalidSign.
class HypergraphBuilder {
public:
    HypergraphBuilder& vertex(std::string name);
    HypergraphBuilder& edge(std::string name);
    HypergraphBuilder& incidence(std::string vertex, std::string edge, int sign);

    OrientedHypergraph build() const;

private:
    std::vector<std::string> vertices_;
    std::vector<std::string> edges_;
    struct RawIncidence {
        std::string vertex;
        std::string edge;
        int sign;
    };
    std::vector<RawIncidence> incidences_;
};

// Remove the vertices in `drop` together with all their incidences. Edges
// survive; with drop_empty_edges set, edges whose resulting size is 0 are
// removed as well. Remaining element order is inherited.
OrientedHypergraph weak_delete(const OrientedHypergraph& g, std::span<const int> drop,
                               bool drop_empty_edges = false);

// True iff every circle of the size-<=2-edge structure is positive, by
// spanning-forest marking. Size-1 edges take part in no circle and are
// ignored. Throws NotASignedGraph when some edge has size >= 3.
bool is_balanced_signed_graph(const OrientedHypergraph& g);

} // namespace ohg
