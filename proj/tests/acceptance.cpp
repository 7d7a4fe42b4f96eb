// Acceptance suite: one pass/fail line per criterion.
// usage: acceptance <path-to-cli-binary> <fixtures-dir>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ohg/analysis.hpp"
#include "ohg/coefficients.hpp"
#include "ohg/contributors.hpp"
#include "ohg/io.hpp"
#include "ohg/matrices.hpp"
#include "ohg/walks.hpp"
#include "testutil.hpp"

using namespace ohg;
using namespace ohg::test;

namespace {

int failures_in_criterion = 0;

void expect(bool ok, const std::string& detail) {
    if (!ok) {
        ++failures_in_criterion;
        std::cerr << "  mismatch: " << detail << "\n";
    }
}

bool finish(int number, const std::string& label) {
    bool ok = failures_in_criterion == 0;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label << "\n";
    failures_in_criterion = 0;
    return ok;
}

// Instances are kept only when their contributor count (computed with the
// independent multiplicity-matrix permanent, not the enumerator) stays at
// desk scale; the shape bounds themselves admit a few monster cases.
std::vector<OrientedHypergraph> random_pool(std::uint64_t seed, int count, int max_vertices,
                                            int max_edges, int max_incidences,
                                            std::int64_t max_contributors = 20'000) {
    std::mt19937_64 rng(seed);
    std::vector<OrientedHypergraph> pool;
    pool.reserve(count);
    while (static_cast<int>(pool.size()) < count) {
        OrientedHypergraph g = random_hypergraph(rng, max_vertices, max_edges, max_incidences);
        if (contributor_count_oracle(g) <= max_contributors) pool.push_back(std::move(g));
    }
    return pool;
}

bool criterion1() {
    OrientedHypergraph t3 = make_t3();
    IntMatrix a = adjacency_matrix(t3);
    IntMatrix expected_a(a.row_labels(), a.col_labels());
    const std::array<std::array<int, 3>, 3> a_rows{{{0, 1, 1}, {1, 0, -1}, {1, -1, 0}}};
    const std::array<std::array<int, 3>, 3> l_rows{{{2, -1, -1}, {-1, 2, 1}, {-1, 1, 2}}};
    IntMatrix l = laplacian(t3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            expect(a.at(r, c) == a_rows[r][c], "A entry");
            expect(l.at(r, c) == l_rows[r][c], "L entry");
        }

    IntPolynomial chi_a({2, -3, 0, 1});
    IntPolynomial chi_l({-4, 9, -6, 1});
    expect(charpoly_det_A(t3) == chi_a, "chi_det(A) contributor path");
    expect(charpoly_det_oracle(a) == chi_a, "chi_det(A) oracle path");
    expect(charpoly_det_L(t3) == chi_l, "chi_det(L) contributor path");
    expect(charpoly_det_oracle(l) == chi_l, "chi_det(L) oracle path");

    auto eq1 = enumerate_hat_eq(t3, 1);
    expect(eq1.size() == 3, "|hat-eq 1| = 3");
    expect(charpoly_det_A(t3).coefficient(1) == -3, "A coefficient of x^1 is -3");

    auto geq1 = enumerate_hat_geq(t3, 1);
    expect(geq1.size() == 15, "|hat-geq 1| = 15");
    expect(charpoly_det_L(t3).coefficient(1) == 9, "L coefficient of x^1 is +9");
    return finish(1, "oriented 3-circuit fixture, exact matrices and coefficients");
}

bool criterion2() {
    OrientedHypergraph x3 = make_x3();
    IntPolynomial chi_a({2, -3, 0, 1});
    IntPolynomial chi_l({0, 0, -3, 1});
    expect(charpoly_det_A(x3) == chi_a, "chi_det(A) contributor path");
    expect(charpoly_det_oracle(adjacency_matrix(x3)) == chi_a, "chi_det(A) oracle path");
    expect(charpoly_det_L(x3) == chi_l, "chi_det(L) contributor path");
    expect(charpoly_det_oracle(laplacian(x3)) == chi_l, "chi_det(L) oracle path");

    ContributorSums sums = contributor_sums(x3);
    expect(sums.perm_laplacian == 6, "perm(L) contributor path");
    expect(perm_exact(laplacian(x3)) == 6, "perm(L) oracle path");
    expect(sums.contributor_count == 6, "contributor count");
    return finish(2, "extroverted 3-edge fixture, exact coefficients and perm(L) = |C|");
}

bool criterion3(const std::vector<OrientedHypergraph>& pool) {
    for (const OrientedHypergraph& g : pool) {
        ContributorSums sums = contributor_sums(g);
        IntMatrix l = laplacian(g);
        IntMatrix a = adjacency_matrix(g);
        expect(sums.perm_laplacian == perm_exact(l), "perm(L)");
        expect(sums.det_laplacian == det_exact(l), "det(L)");
        expect(sums.perm_adjacency == perm_exact(a), "perm(A)");
        expect(sums.det_adjacency == det_exact(a), "det(A)");
        expect(charpoly_det_A(g) == charpoly_det_oracle(a), "chi_det(A)");
        expect(charpoly_perm_A(g) == charpoly_perm_oracle(a), "chi_perm(A)");
        expect(charpoly_det_L(g) == charpoly_det_oracle(l), "chi_det(L)");
        expect(charpoly_perm_L(g) == charpoly_perm_oracle(l), "chi_perm(L)");
    }
    return finish(3, "contributor sums equal exact linear algebra on 500 random instances");
}

bool criterion4(const std::vector<OrientedHypergraph>& pool,
                const std::vector<OrientedHypergraph>& walk_pool) {
    std::vector<OrientedHypergraph> structural = {make_t3(), make_x3(), make_parallel_vertex(),
                                                  make_bouquet()};
    structural.insert(structural.end(), pool.begin(), pool.end());
    for (const OrientedHypergraph& g : structural) {
        IntMatrix h = incidence_matrix(g);
        IntMatrix l = degree_matrix(g) - adjacency_matrix(g);
        expect(l == h * h.transposed(), "L = H H^T = D - A");
    }
    std::vector<OrientedHypergraph> walkers = {make_t3(), make_x3(), make_parallel_vertex(),
                                               make_bouquet()};
    walkers.insert(walkers.end(), walk_pool.begin(), walk_pool.end());
    for (const OrientedHypergraph& g : walkers) {
        IntMatrix neg_l = laplacian(g).negated();
        IntMatrix power = IntMatrix::identity(neg_l.row_labels());
        Limits generous;
        generous.max_enumeration = 200'000'000;
        for (int k = 0; k <= 3; ++k) {
            expect(weak_walk_matrix(g, k, generous) == power, "walk matrix = (-L)^k");
            power = power * neg_l;
        }
    }
    return finish(4, "structural identities: L = HH^T = D - A and walk matrices = (-L)^k");
}

bool criterion5(const std::vector<OrientedHypergraph>& pool) {
    for (const OrientedHypergraph& g : pool) {
        for_each_contributor(g, [&](const Contributor& c) {
            ContributorStats s = contributor_stats(g, c);
            expect((s.backsteps - (s.odd_circles + g.vertex_count())) % 2 == 0, "parity law");
        });
    }
    return finish(5, "parity law bs = oc + |V| (mod 2) for every contributor");
}

bool criterion6() {
    std::mt19937_64 rng(606060);
    int bouquet_instances = 0;
    for (int t = 0; t < 50; ++t) {
        OrientedHypergraph underlying = random_sweep_underlying(rng, 12);
        OrientationSweepResult perm_sweep = orientation_sweep(underlying, SweepObjective::perm_L);
        OrientationSweepResult det_sweep = orientation_sweep(underlying, SweepObjective::det_L);
        const auto count = static_cast<std::int64_t>(perm_sweep.contributor_count);
        const std::uint32_t all_negative =
            static_cast<std::uint32_t>(perm_sweep.values.size() - 1);
        expect(perm_sweep.values[0] == count, "perm(L) = |C| at the extroverted orientation");
        expect(perm_sweep.values[all_negative] == count,
               "perm(L) = |C| at the introverted orientation");
        for (std::uint32_t mask = 0; mask < perm_sweep.values.size(); ++mask) {
            std::int64_t perm_value = perm_sweep.values[mask];
            std::int64_t det_value = det_sweep.values[mask];
            expect(perm_value > -count && perm_value <= count, "perm bound");
            expect(det_value > -count && det_value <= count, "det bound");
            bool bouquet = is_bouquet_family(with_orientation_mask(underlying, mask));
            if (bouquet) ++bouquet_instances;
            expect((det_value == count) == bouquet, "det sharpness iff bouquet family");
        }
    }
    expect(bouquet_instances > 0, "sweep pool exercised bouquet orientations");
    return finish(6, "bounds over full orientation sweeps of 50 underlying hypergraphs");
}

bool criterion7() {
    std::mt19937_64 rng(707070);
    for (int t = 0; t < 100; ++t) {
        OrientedHypergraph g = random_balanced_signed_graph(rng, 7);
        expect(is_balanced_signed_graph(g), "generator produced a balanced graph");
        ContributorSums sums = contributor_sums(g);
        expect(perm_exact(adjacency_matrix(g)) ==
                   static_cast<std::int64_t>(sums.backstep_free_count),
               "perm(A) = |C_=0|");
    }
    return finish(7, "perm(A) = backstep-free count on 100 random balanced signed graphs");
}

bool criterion8() {
    std::mt19937_64 rng(808080);
    for (int t = 0; t < 50; ++t) {
        PlainGraphCase g = random_plain_graph(rng, 6);
        expect(sachs_coefficients(g.encoded) == charpoly_det_A(g.encoded),
               "basic-figure coefficients = chi_det(A)");
    }
    return finish(8, "basic-figure coefficients match chi_det(A) on 50 random plain graphs");
}

// criterion 9 helpers: run the CLI twice per command and compare bytes

struct RunResult {
    int exit_code;
    std::string output; // stdout + stderr interleaved through the shell
};

RunResult run_command(const std::string& command) {
    std::string wrapped = command + " 2>&1";
    FILE* pipe = popen(wrapped.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

bool criterion9(const std::string& cli, const std::string& data_dir) {
    const std::vector<std::string> fixtures = {"t3.oh",      "x3.oh",       "k3_plain.oh",
                                               "bouquet.oh", "parallel.oh", "t3.json"};
    const std::vector<std::string> commands = {
        "validate {}",
        "matrices {}",
        "matrices {} --which L --walk 2",
        "charpoly {} --matrix A --kind det --method both",
        "charpoly {} --matrix L --kind det --method both",
        "charpoly {} --matrix L --kind perm --method both",
        "contributors {} --mode count",
        "contributors {} --mode census",
        "contributors {} --mode classes",
        "contributors {} --filter eq:1 --mode census",
        "contributors {} --filter geq:1 --mode count",
        "walks {} v1 v1 1",
        "bounds {}",
        "sweep {} --objective perm_L",
        "sweep {} --objective det_A",
        "sachs {}",
    };
    for (const std::string& fixture : fixtures) {
        for (const std::string& pattern : commands) {
            std::string args = pattern;
            args.replace(args.find("{}"), 2, data_dir + "/" + fixture);
            std::string command = cli + " " + args;
            RunResult first = run_command(command);
            RunResult second = run_command(command);
            expect(first.exit_code == second.exit_code, "exit codes differ: " + command);
            expect(first.output == second.output, "output differs: " + command);
            expect(first.exit_code != 3, "self-verification failed: " + command);
        }
    }
    // charpoly in both-mode prints the polynomial twice and exits 0
    RunResult both =
        run_command(cli + " charpoly " + data_dir + "/t3.oh --matrix L --kind det --method both");
    expect(both.exit_code == 0, "both-mode exit code");
    expect(both.output == "[-4, 9, -6, 1]\n[-4, 9, -6, 1]\n", "both-mode payload");

    // both-mode stays self-consistent on randomized instances fed via stdin
    std::mt19937_64 rng(909090);
    for (int t = 0; t < 8; ++t) {
        OrientedHypergraph g = random_hypergraph(rng, 5, 4, 10);
        std::string text = serialize_hypergraph(g);
        for (const char* flags : {"--matrix A --kind det", "--matrix A --kind perm",
                                  "--matrix L --kind det", "--matrix L --kind perm"}) {
            std::string command = "printf '%s' \"" + text + "\" | " + cli + " charpoly - " +
                                  flags + " --method both";
            RunResult run = run_command(command);
            expect(run.exit_code == 0, "random both-mode run: " + command);
        }
    }
    RunResult count = run_command(cli + " contributors " + data_dir + "/x3.oh --mode count");
    expect(count.output == "6\n", "contributor count payload");
    RunResult fifteen =
        run_command(cli + " contributors " + data_dir + "/t3.oh --filter geq:1 --mode count");
    expect(fifteen.output == "15\n", "hat-geq count payload");
    return finish(9, "CLI runs are byte-identical and self-verification never trips");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli-binary> <fixtures-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string data_dir = argv[2];

    // shared pools: criterion 3's instances are reused for 4 and 5
    std::vector<OrientedHypergraph> pool = random_pool(30303, 500, 6, 5, 14);
    std::vector<OrientedHypergraph> walk_pool = random_pool(40404, 100, 6, 5, 10);

    bool ok = true;
    ok &= criterion1();
    ok &= criterion2();
    ok &= criterion3(pool);
    ok &= criterion4(pool, walk_pool);
    ok &= criterion5(pool);
    ok &= criterion6();
    ok &= criterion7();
    ok &= criterion8();
    ok &= criterion9(cli, data_dir);
    return ok ? 0 : 1;
}
