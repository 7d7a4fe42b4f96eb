#include "ohg/contributors.hpp"

#include <algorithm>
#include <set>

namespace ohg {

std::vector<int> SubContributor::isolated_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(choice.size()); ++v)
        if (is_isolated(v)) out.push_back(v);
    return out;
}

SubContributor to_sub_contributor(const Contributor& c) {
    return SubContributor{c.choice};
}

namespace {

struct Walker {
    const OrientedHypergraph& g;
    const std::function<void(const Contributor&)>& visit;
    std::uint64_t budget;
    std::vector<bool> head_used;
    Contributor scratch;

    void run() {
        const int n = g.vertex_count();
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 0)
                throw IsolatedVertex("vertex " + g.vertex_name(v) + " has no incidences");
        head_used.assign(n, false);
        scratch.choice.assign(n, {-1, -1});
        descend(0);
    }

    void descend(int v) {
        if (v == g.vertex_count()) {
            if (budget == 0) throw ResourceGuard("contributor enumeration exceeded cap");
            --budget;
            visit(scratch);
            return;
        }
        for (int i : g.incidences_at(v)) {
            for (int j : g.incidences_on(g.incidence(i).edge)) {
                int head_vertex = g.incidence(j).vertex;
                if (head_used[head_vertex]) continue;
                head_used[head_vertex] = true;
                scratch.choice[v] = {i, j};
                descend(v + 1);
                head_used[head_vertex] = false;
            }
        }
        scratch.choice[v] = {-1, -1};
    }
};

} // namespace

void for_each_contributor(const OrientedHypergraph& g,
                          const std::function<void(const Contributor&)>& visit,
                          const Limits& limits) {
    Walker walker{g, visit, limits.max_enumeration, {}, {}};
    walker.run();
}

std::vector<Contributor> enumerate_contributors(const OrientedHypergraph& g, const Limits& limits) {
    std::vector<Contributor> out;
    for_each_contributor(g, [&](const Contributor& c) { out.push_back(c); }, limits);
    return out;
}

namespace {

// Decompose the head map of the non-isolated vertices; assignments must
// already have been validated.
ContributorStats stats_of_assignment(const OrientedHypergraph& g,
                                     const std::vector<std::pair<int, int>>& choice) {
    const int n = static_cast<int>(choice.size());
    ContributorStats stats;
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start] || choice[start] == SubContributor::isolated) continue;
        std::vector<int> cycle;
        int v = start;
        do {
            seen[v] = true;
            cycle.push_back(v);
            v = g.incidence(choice[v].second).vertex;
        } while (v != start);
        stats.permutation.push_back(cycle);

        if (cycle.size() == 1 && choice[start].first == choice[start].second) {
            ++stats.backsteps; // a backstep is not a circle
            continue;
        }
        Circle circle;
        circle.length = static_cast<int>(cycle.size());
        circle.sign = 1;
        for (int u : cycle) {
            const Incidence& tail = g.incidence(choice[u].first);
            const Incidence& head = g.incidence(choice[u].second);
            circle.sign *= -tail.sign * head.sign;
        }
        circle.degenerate2 =
            cycle.size() == 2 && choice[cycle[1]].first == choice[cycle[0]].second &&
            choice[cycle[1]].second == choice[cycle[0]].first;
        stats.circles.push_back(circle);
        (circle.length % 2 == 0 ? stats.even_circles : stats.odd_circles) += 1;
        (circle.sign > 0 ? stats.positive_circles : stats.negative_circles) += 1;
    }
    return stats;
}

void validate_assignment(const OrientedHypergraph& g,
                         const std::vector<std::pair<int, int>>& choice) {
    if (static_cast<int>(choice.size()) != g.vertex_count())
        throw InvalidContributor("assignment length does not match vertex count");
    std::vector<bool> head_hit(g.vertex_count(), false);
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto [tail, head] = choice[v];
        if (choice[v] == SubContributor::isolated) continue;
        if (tail < 0 || tail >= g.incidence_count() || head < 0 || head >= g.incidence_count())
            throw InvalidContributor("incidence id out of range");
        if (g.incidence(tail).vertex != v)
            throw InvalidContributor("tail incidence does not sit at its vertex");
        if (g.incidence(tail).edge != g.incidence(head).edge)
            throw InvalidContributor("head incidence lies on a different edge");
        int head_vertex = g.incidence(head).vertex;
        if (choice[head_vertex] == SubContributor::isolated)
            throw InvalidContributor("head map leaves the restricted vertex set");
        if (head_hit[head_vertex])
            throw InvalidContributor("head map is not a bijection");
        head_hit[head_vertex] = true;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (choice[v] != SubContributor::isolated && !head_hit[v])
            throw InvalidContributor("head map is not onto the restricted vertex set");
}

} // namespace

ContributorStats contributor_stats(const OrientedHypergraph& g, const Contributor& c) {
    validate_assignment(g, c.choice);
    for (const auto& pair : c.choice)
        if (pair == SubContributor::isolated)
            throw InvalidContributor("contributor may not have isolated vertices");
    return stats_of_assignment(g, c.choice);
}

ContributorStats sub_contributor_stats(const OrientedHypergraph& g, const SubContributor& s) {
    validate_assignment(g, s.choice);
    return stats_of_assignment(g, s.choice);
}

std::map<std::vector<int>, std::vector<Contributor>>
group_by_permutomorphism(const OrientedHypergraph& g,
                         const std::vector<Contributor>& contributors) {
    std::map<std::vector<int>, std::vector<Contributor>> classes;
    for (const Contributor& c : contributors) {
        std::vector<int> image(c.choice.size());
        for (int v = 0; v < static_cast<int>(c.choice.size()); ++v)
            image[v] = g.incidence(c.choice[v].second).vertex;
        classes[image].push_back(c);
    }
    return classes;
}

namespace {

std::vector<int> backstep_vertices(const Contributor& c) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(c.choice.size()); ++v)
        if (c.is_backstep(v)) out.push_back(v);
    return out;
}

std::vector<SubContributor> collect(std::set<SubContributor>&& dedup) {
    return {std::make_move_iterator(dedup.begin()), std::make_move_iterator(dedup.end())};
}

void check_k(const OrientedHypergraph& g, int k) {
    if (k < 0 || k > g.vertex_count())
        throw PreconditionViolated("backstep count k must lie in [0, |V|]");
}

} // namespace

std::vector<SubContributor> enumerate_hat_eq(const OrientedHypergraph& g, int k,
                                             const Limits& limits) {
    check_k(g, k);
    std::set<SubContributor> dedup;
    for_each_contributor(
        g,
        [&](const Contributor& c) {
            std::vector<int> backsteps = backstep_vertices(c);
            if (static_cast<int>(backsteps.size()) != k) return;
            SubContributor sub{c.choice};
            for (int v : backsteps) sub.choice[v] = SubContributor::isolated;
            dedup.insert(std::move(sub));
        },
        limits);
    return collect(std::move(dedup));
}

std::vector<SubContributor> enumerate_hat_geq(const OrientedHypergraph& g, int k,
                                              const Limits& limits) {
    check_k(g, k);
    std::set<SubContributor> dedup;
    for_each_contributor(
        g,
        [&](const Contributor& c) {
            std::vector<int> backsteps = backstep_vertices(c);
            const int m = static_cast<int>(backsteps.size());
            if (m < k) return;
            // every k-subset of the backsteps, in lexicographic order
            std::vector<int> pick(k);
            for (int t = 0; t < k; ++t) pick[t] = t;
            while (true) {
                SubContributor sub{c.choice};
                for (int t = 0; t < k; ++t) sub.choice[backsteps[pick[t]]] = SubContributor::isolated;
                dedup.insert(std::move(sub));
                int t = k - 1;
                while (t >= 0 && pick[t] == m - k + t) --t;
                if (t < 0) break;
                ++pick[t];
                for (int u = t + 1; u < k; ++u) pick[u] = pick[u - 1] + 1;
            }
        },
        limits);
    return collect(std::move(dedup));
}

} // namespace ohg
