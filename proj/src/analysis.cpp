#include "ohg/analysis.hpp"

#include <algorithm>

#include "ohg/checked.hpp"

namespace ohg {

bool is_bouquet_family(const OrientedHypergraph& g) {
    for (int e = 0; e < g.edge_count(); ++e) {
        auto ids = g.incidences_on(e);
        for (std::size_t t = 1; t < ids.size(); ++t) {
            const Incidence& first = g.incidence(ids[0]);
            const Incidence& cur = g.incidence(ids[t]);
            if (cur.vertex != first.vertex || cur.sign != first.sign) return false;
        }
    }
    return true;
}

BoundsReport bounds_report(const OrientedHypergraph& g, const Limits& limits) {
    if (g.has_isolated_vertex())
        throw PreconditionViolated("bounds require a hypergraph without isolated vertices");
    if (g.has_empty_edge())
        throw PreconditionViolated("bounds require a hypergraph without 0-edges");

    ContributorSums sums = contributor_sums(g, limits);
    BoundsReport report;
    report.contributor_count = sums.contributor_count;
    report.perm_laplacian = sums.perm_laplacian;
    report.det_laplacian = sums.det_laplacian;

    const auto count = static_cast<std::int64_t>(sums.contributor_count);
    report.bounds_hold = sums.perm_laplacian > -count && sums.perm_laplacian <= count &&
                         sums.det_laplacian > -count && sums.det_laplacian <= count;
    report.lower_strict_ok = sums.perm_laplacian > -count && sums.det_laplacian > -count;
    report.upper_perm_attained = sums.perm_laplacian == count;
    report.upper_det_attained = sums.det_laplacian == count;
    report.bouquet = is_bouquet_family(g);
    report.det_sharpness_consistent = report.bouquet == report.upper_det_attained;

    report.notes = "perm upper bound ";
    report.notes += report.upper_perm_attained ? "attained" : "strict";
    report.notes += "; det upper bound ";
    report.notes += report.upper_det_attained ? "attained (bouquet family)" : "strict";
    return report;
}

const char* objective_name(SweepObjective o) {
    switch (o) {
    case SweepObjective::perm_L: return "perm_L";
    case SweepObjective::det_L: return "det_L";
    case SweepObjective::perm_A: return "perm_A";
    case SweepObjective::det_A: return "det_A";
    }
    return "?";
}

SweepObjective objective_from_name(const std::string& name) {
    if (name == "perm_L") return SweepObjective::perm_L;
    if (name == "det_L") return SweepObjective::det_L;
    if (name == "perm_A") return SweepObjective::perm_A;
    if (name == "det_A") return SweepObjective::det_A;
    throw ValidationError("unknown sweep objective: " + name);
}

OrientedHypergraph with_orientation_mask(const OrientedHypergraph& g, std::uint32_t mask) {
    std::vector<int> signs(g.incidence_count());
    for (int i = 0; i < g.incidence_count(); ++i) signs[i] = (mask >> i & 1) ? -1 : +1;
    return g.with_signs(signs);
}

OrientationSweepResult orientation_sweep(const OrientedHypergraph& g, SweepObjective objective,
                                         const Limits& limits) {
    if (g.has_isolated_vertex())
        throw PreconditionViolated("sweep requires a hypergraph without isolated vertices");
    if (g.has_empty_edge())
        throw PreconditionViolated("sweep requires a hypergraph without 0-edges");
    const int n = g.incidence_count();
    if (n > limits.max_sweep_incidences || n > 24)
        throw ResourceGuard("incidence count exceeds the sweep cap");

    OrientationSweepResult result;
    result.objective = objective;
    result.incidence_count = n;
    result.contributor_count = contributor_sums(g, limits).contributor_count;
    result.values.reserve(std::uint64_t{1} << n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        OrientedHypergraph oriented = with_orientation_mask(g, mask);
        std::int64_t value = 0;
        switch (objective) {
        case SweepObjective::perm_L: value = perm_exact(laplacian(oriented)); break;
        case SweepObjective::det_L: value = det_exact(laplacian(oriented)); break;
        case SweepObjective::perm_A: value = perm_exact(adjacency_matrix(oriented)); break;
        case SweepObjective::det_A: value = det_exact(adjacency_matrix(oriented)); break;
        }
        result.values.push_back(value);
    }
    result.max_value = *std::max_element(result.values.begin(), result.values.end());
    for (std::uint32_t mask = 0; mask < result.values.size(); ++mask)
        if (result.values[mask] == result.max_value) result.argmax.push_back(mask);
    return result;
}

bool balanced_perm_A_check(const OrientedHypergraph& g, const Limits& limits) {
    bool balanced = is_balanced_signed_graph(g); // throws NotASignedGraph on 3+-edges
    ContributorSums sums = contributor_sums(g, limits);
    std::int64_t perm = perm_exact(adjacency_matrix(g));
    bool equal = perm == static_cast<std::int64_t>(sums.backstep_free_count);
    if (balanced && !equal)
        throw InternalError("balanced signed graph with perm(A) != backstep-free count");
    return equal;
}

namespace {

struct Figure {
    std::uint32_t vertex_mask;
    int covered;
    int circuits; // 0 for a link, 1 for a cycle
};

// Vertex-simple cycles of length >= 3, starting at their smallest vertex,
// direction fixed by second < last. Parallel edge choices give distinct
// figures.
void collect_cycles(const std::vector<std::vector<std::pair<int, int>>>& neighbors, int start,
                    int current, std::uint32_t mask, int length, int second,
                    std::vector<Figure>& out) {
    for (auto [next, edge] : neighbors[current]) {
        if (next == start) {
            if (length >= 3 && second < current) out.push_back({mask, length, 1});
            continue;
        }
        if (next < start || (mask >> next & 1)) continue;
        collect_cycles(neighbors, start, next, mask | (std::uint32_t{1} << next), length + 1,
                       length == 1 ? next : second, out);
    }
}

} // namespace

IntPolynomial sachs_coefficients(const OrientedHypergraph& g) {
    const int n = g.vertex_count();
    if (n > 30) throw ResourceGuard("plain graph too large for basic-figure enumeration");
    std::vector<std::pair<int, int>> endpoints(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto ids = g.incidences_on(e);
        if (ids.size() != 2)
            throw NotAPlainGraph("edge " + g.edge_name(e) + " does not have size 2");
        const Incidence& i = g.incidence(ids[0]);
        const Incidence& j = g.incidence(ids[1]);
        if (i.vertex == j.vertex)
            throw NotAPlainGraph("edge " + g.edge_name(e) + " is a loop");
        if (-i.sign * j.sign != +1)
            throw NotAPlainGraph("edge " + g.edge_name(e) + " has a negative adjacency sign");
        endpoints[e] = {std::min(i.vertex, j.vertex), std::max(i.vertex, j.vertex)};
    }

    std::vector<Figure> figures;
    // links
    for (auto [a, b] : endpoints)
        figures.push_back({(std::uint32_t{1} << a) | (std::uint32_t{1} << b), 2, 0});
    // parallel pairs as 2-cycles
    for (int e = 0; e < g.edge_count(); ++e)
        for (int f = e + 1; f < g.edge_count(); ++f)
            if (endpoints[e] == endpoints[f]) {
                auto [a, b] = endpoints[e];
                figures.push_back({(std::uint32_t{1} << a) | (std::uint32_t{1} << b), 2, 1});
            }
    // longer cycles
    std::vector<std::vector<std::pair<int, int>>> neighbors(n);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = endpoints[e];
        neighbors[a].emplace_back(b, e);
        neighbors[b].emplace_back(a, e);
    }
    for (int start = 0; start < n; ++start)
        collect_cycles(neighbors, start, start, std::uint32_t{1} << start, 1, n, figures);

    std::vector<std::int64_t> coeffs(n + 1, 0);
    // backtrack over disjoint unions; every node of the search tree is a
    // basic figure, the empty union included
    auto descend = [&](auto&& self, std::size_t idx, std::uint32_t mask, int covered, int p,
                       int c) -> void {
        std::int64_t weight = (p % 2 == 0 ? 1 : -1) * (std::int64_t{1} << c);
        coeffs[n - covered] = checked_add(coeffs[n - covered], weight);
        for (std::size_t t = idx; t < figures.size(); ++t) {
            if (figures[t].vertex_mask & mask) continue;
            self(self, t + 1, mask | figures[t].vertex_mask, covered + figures[t].covered, p + 1,
                 c + figures[t].circuits);
        }
    };
    descend(descend, 0, 0, 0, 0, 0);
    return IntPolynomial(std::move(coeffs));
}

OrientedHypergraph plain_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    HypergraphBuilder b;
    for (int v = 0; v < vertex_count; ++v) b.vertex("v" + std::to_string(v + 1));
    for (std::size_t t = 0; t < edges.size(); ++t) b.edge("e" + std::to_string(t + 1));
    for (std::size_t t = 0; t < edges.size(); ++t) {
        auto [a, z] = edges[t];
        b.incidence("v" + std::to_string(a + 1), "e" + std::to_string(t + 1), +1);
        b.incidence("v" + std::to_string(z + 1), "e" + std::to_string(t + 1), -1);
    }
    return b.build();
}

} // namespace ohg
