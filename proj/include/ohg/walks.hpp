#pragma once

#include <cstdint>
#include <vector>

#include "ohg/hypergraph.hpp"

namespace ohg {

// A directed weak walk of length k: 2k incidences, repetition allowed.
// Vertices and edges along the way are implied: the walk starts at
// start_vertex, incidence 2t leads into an edge and incidence 2t+1 leads
// back out to the next vertex.
struct WeakWalk {
    int start_vertex = -1;
    std::vector<int> incidences;

    int length() const { return static_cast<int>(incidences.size()) / 2; }
};

int walk_end_vertex(const OrientedHypergraph& g, const WeakWalk& w);

// sgn(W) = (-1)^(n/2) * prod sigma(i_h) with n = number of incidences.
int walk_sign(const OrientedHypergraph& g, const WeakWalk& w);

// All directed weak walks of length k from v to w, depth-first over
// incidence ids, so the listing order is canonical. k = 0 yields the empty
// walk exactly when v == w.
std::vector<WeakWalk> enumerate_weak_walks(const OrientedHypergraph& g, int v, int w, int k,
                                           const Limits& limits = {});

// Positive walks minus negative walks of length k from v to w.
std::int64_t signed_walk_count(const OrientedHypergraph& g, int v, int w, int k,
                               const Limits& limits = {});

} // namespace ohg
