#include <doctest.h>

#include <random>

#include "ohg/matrices.hpp"
#include "testutil.hpp"

using namespace ohg;
using namespace ohg::test;

namespace {

IntMatrix square(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<std::string> labels(rows.size(), "");
    IntMatrix m(labels, labels);
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (std::int64_t x : row) m.at(r, c++) = x;
        ++r;
    }
    return m;
}

IntMatrix random_square(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> entry(-3, 3);
    std::vector<std::string> labels(n, "");
    IntMatrix m(labels, labels);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = entry(rng);
    return m;
}

} // namespace

TEST_CASE("incidence matrix") {
    IntMatrix hx = incidence_matrix(make_x3());
    REQUIRE(hx.rows() == 3);
    REQUIRE(hx.cols() == 1);
    for (int v = 0; v < 3; ++v) CHECK(hx.at(v, 0) == 1);

    // parallel incidences with opposite signs cancel
    IntMatrix hp = incidence_matrix(make_parallel_vertex());
    CHECK(hp.at(0, 0) == 0);

    IntMatrix ht = incidence_matrix(make_t3());
    CHECK(ht == square({{1, 1, 0}, {-1, 0, 1}, {0, -1, 1}}));
}

TEST_CASE("adjacency, degree and Laplacian matrices of the 3-circuit") {
    OrientedHypergraph t3 = make_t3();
    CHECK(adjacency_matrix(t3) == square({{0, 1, 1}, {1, 0, -1}, {1, -1, 0}}));
    CHECK(degree_matrix(t3) == square({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
    CHECK(laplacian(t3) == square({{2, -1, -1}, {-1, 2, 1}, {-1, 1, 2}}));
}

TEST_CASE("matrices of the extroverted 3-edge") {
    OrientedHypergraph x3 = make_x3();
    CHECK(adjacency_matrix(x3) == square({{0, -1, -1}, {-1, 0, -1}, {-1, -1, 0}}));
    CHECK(laplacian(x3) == square({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
}

TEST_CASE("loops count once per direction on the diagonal") {
    OrientedHypergraph par = make_parallel_vertex();
    CHECK(degree_matrix(par).at(0, 0) == 2);
    CHECK(adjacency_matrix(par).at(0, 0) == 2); // two loop directions, each +1
    CHECK(laplacian(par).at(0, 0) == 0);        // matches (H H^T)_11 = 0
}

TEST_CASE("L equals H H^T on random instances") {
    std::mt19937_64 rng(421);
    for (int t = 0; t < 40; ++t) {
        OrientedHypergraph g = random_hypergraph(rng);
        IntMatrix h = incidence_matrix(g);
        IntMatrix l = laplacian(g); // verifies internally as well
        CHECK(l == h * h.transposed());
        CHECK(l == degree_matrix(g) - adjacency_matrix(g));
    }
}

TEST_CASE("A and L are symmetric, D is a non-negative diagonal") {
    std::mt19937_64 rng(422);
    for (int t = 0; t < 25; ++t) {
        OrientedHypergraph g = random_hypergraph(rng);
        IntMatrix a = adjacency_matrix(g);
        IntMatrix d = degree_matrix(g);
        IntMatrix l = laplacian(g);
        CHECK(a == a.transposed());
        CHECK(l == l.transposed());
        for (int r = 0; r < d.rows(); ++r)
            for (int c = 0; c < d.cols(); ++c) {
                if (r == c)
                    CHECK(d.at(r, c) >= 0);
                else
                    CHECK(d.at(r, c) == 0);
            }
    }
}

TEST_CASE("weak walk matrix equals powers of -L") {
    OrientedHypergraph t3 = make_t3();
    IntMatrix labels_only = weak_walk_matrix(t3, 0);
    CHECK(labels_only == IntMatrix::identity(labels_only.row_labels()));

    CHECK(weak_walk_matrix(t3, 1) == square({{-2, 1, 1}, {1, -2, -1}, {1, -1, -2}}));

    IntMatrix neg_l = laplacian(t3).negated();
    CHECK(weak_walk_matrix(t3, 2) == neg_l * neg_l);
    CHECK(weak_walk_matrix(t3, 3) == neg_l * neg_l * neg_l);

    CHECK_THROWS_AS(weak_walk_matrix(t3, 5), ResourceGuard);
}

TEST_CASE("determinant by fraction-free elimination") {
    CHECK(det_exact(laplacian(make_t3())) == 4);
    CHECK(det_exact(square({})) == 1);
    CHECK(det_exact(square({{7}})) == 7);
    CHECK(det_exact(square({{0, 1}, {1, 0}})) == -1); // needs a row swap
    CHECK(det_exact(square({{0, 0}, {0, 1}})) == 0);

    IntMatrix rect(std::vector<std::string>{"a", "b"}, std::vector<std::string>{"c"});
    CHECK_THROWS_AS(det_exact(rect), NotSquare);
}

TEST_CASE("permanent by inclusion-exclusion") {
    CHECK(perm_exact(adjacency_matrix(make_t3())) == -2);
    CHECK(perm_exact(square({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})) == 6);
    CHECK(perm_exact(square({})) == 1);
    CHECK(perm_exact(square({{5}})) == 5);

    CHECK_THROWS_AS(perm_exact(square({{1, 0}, {0, 1}}), 1), ResourceGuard);
    IntMatrix rect(std::vector<std::string>{"a"}, std::vector<std::string>{"b", "c"});
    CHECK_THROWS_AS(perm_exact(rect), NotSquare);
}

TEST_CASE("det and perm agree with Leibniz brute force up to size 5") {
    std::mt19937_64 rng(77);
    for (int n = 0; n <= 5; ++n) {
        for (int t = 0; t < 12; ++t) {
            IntMatrix m = random_square(rng, n);
            CHECK(det_exact(m) == leibniz_det(m));
            CHECK(perm_exact(m) == leibniz_perm(m));
        }
    }
}

TEST_CASE("characteristic polynomial oracles on the worked fixtures") {
    OrientedHypergraph t3 = make_t3();
    CHECK(charpoly_det_oracle(adjacency_matrix(t3)) ==
          IntPolynomial({2, -3, 0, 1})); // x^3 - 3x + 2
    CHECK(charpoly_det_oracle(laplacian(t3)) ==
          IntPolynomial({-4, 9, -6, 1})); // x^3 - 6x^2 + 9x - 4
    CHECK(charpoly_det_oracle(laplacian(make_x3())) ==
          IntPolynomial({0, 0, -3, 1})); // x^3 - 3x^2

    CHECK(charpoly_perm_oracle(laplacian(t3)) == IntPolynomial({-16, 15, -6, 1}));
    CHECK(charpoly_perm_oracle(adjacency_matrix(t3)) == IntPolynomial({2, 3, 0, 1}));
}

TEST_CASE("characteristic polynomial evaluation consistency") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 15; ++t) {
        int n = 1 + static_cast<int>(t % 5);
        IntMatrix m = random_square(rng, n);
        IntPolynomial pd = charpoly_det_oracle(m);
        IntPolynomial pp = charpoly_perm_oracle(m);
        CHECK(pd.degree() == n);
        CHECK(pd.coefficient(n) == 1);
        CHECK(pp.coefficient(n) == 1);
        int sign = n % 2 == 0 ? 1 : -1;
        CHECK(pd.eval(0) == sign * det_exact(m));
        CHECK(pp.eval(0) == sign * perm_exact(m));
        // spot-check an evaluation node not used for interpolation
        IntMatrix shifted = m.negated();
        for (int d = 0; d < n; ++d) shifted.at(d, d) += n + 3;
        CHECK(pd.eval(n + 3) == det_exact(shifted));
    }
}

TEST_CASE("overflow throws instead of wrapping") {
    const std::int64_t big = std::int64_t{1} << 62;
    IntMatrix m = square({{big, big}, {big, -big}});
    CHECK_THROWS_AS(det_exact(m), OverflowError);
    CHECK_THROWS_AS(perm_exact(m), OverflowError);
    // OverflowError is a resource guard: callers map it to the cap exit code
    CHECK_THROWS_AS(det_exact(m), ResourceGuard);
}

TEST_CASE("polynomial rendering is ascending with bracket-comma format") {
    CHECK(IntPolynomial({-4, 9, -6, 1}).to_string() == "[-4, 9, -6, 1]");
    CHECK(IntPolynomial({5}).to_string() == "[5]");
    CHECK(IntPolynomial(std::vector<std::int64_t>{}).to_string() == "[]");
    CHECK(IntPolynomial({2, 0, 1}).eval(3) == 11);
}
