#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ohg/io.hpp"
#include "testutil.hpp"

using namespace ohg;
using namespace ohg::test;

namespace {

const char* kT3Text = R"(# oriented 3-circuit
v v1
v v2
v v3
e e12
e e13
e e23
i v1 e12 +
i v2 e12 -
i v1 e13 +
i v3 e13 -
i v2 e23 +
i v3 e23 +
)";

} // namespace

TEST_CASE("text parsing matches the builder fixture") {
    OrientedHypergraph parsed = parse_hypergraph_text(kT3Text);
    CHECK(serialize_hypergraph(parsed) == serialize_hypergraph(make_t3()));
}

TEST_CASE("parse accepts numeric signs, comments, and blank lines") {
    OrientedHypergraph g = parse_hypergraph_text(
        "v a # trailing comment\n\n  \ne e\ni a e +1\ni a e -1\n");
    CHECK(g.vertex_count() == 1);
    CHECK(g.incidence_count() == 2);
    CHECK(g.incidence(0).sign == +1);
    CHECK(g.incidence(1).sign == -1);
}

TEST_CASE("parse-then-serialize is a fixed point") {
    std::string canonical = serialize_hypergraph(parse_hypergraph_text(kT3Text));
    CHECK(serialize_hypergraph(parse_hypergraph_text(canonical)) == canonical);
}

TEST_CASE("parse errors carry the offending line") {
    CHECK_THROWS_AS(parse_hypergraph_text("q what\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph_text("v\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph_text("v a b\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph_text("v a\ne e\ni a e *\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph_text("v a\ni a missing +\n"), DanglingReference);
    CHECK_THROWS_AS(parse_hypergraph_text("v a\nv a\n"), DuplicateName);
}

TEST_CASE("json documents parse to the same structure") {
    const char* object_form = R"({
      "vertices": ["v1", "v2", "v3"],
      "edges": ["e12", "e13", "e23"],
      "incidences": [
        {"vertex": "v1", "edge": "e12", "sign": 1},
        {"vertex": "v2", "edge": "e12", "sign": -1},
        {"vertex": "v1", "edge": "e13", "sign": "+"},
        {"vertex": "v3", "edge": "e13", "sign": "-"},
        ["v2", "e23", 1],
        ["v3", "e23", "+"]
      ]
    })";
    OrientedHypergraph parsed = parse_hypergraph_json(object_form);
    CHECK(serialize_hypergraph(parsed) == serialize_hypergraph(make_t3()));

    CHECK_THROWS_AS(parse_hypergraph_json("{"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph_json(R"({"incidences": [["a","b"]]})"), ParseError);
}

TEST_CASE("load dispatches on the file extension") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path();
    fs::path text_path = dir / "ohg_io_test.oh";
    fs::path json_path = dir / "ohg_io_test.json";
    {
        std::ofstream out(text_path);
        out << kT3Text;
    }
    {
        std::ofstream out(json_path);
        out << R"({"vertices":["a"],"edges":["e"],"incidences":[["a","e","-"]]})";
    }
    CHECK(serialize_hypergraph(load_hypergraph(text_path.string())) ==
          serialize_hypergraph(make_t3()));
    OrientedHypergraph j = load_hypergraph(json_path.string());
    CHECK(j.incidence(0).sign == -1);
    CHECK_THROWS_AS(load_hypergraph((dir / "definitely_missing.oh").string()), ParseError);
    fs::remove(text_path);
    fs::remove(json_path);
}
