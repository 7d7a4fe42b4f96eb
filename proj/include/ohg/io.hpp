#pragma once

#include <iosfwd>
#include <string>

#include "ohg/hypergraph.hpp"

namespace ohg {

// Line-oriented text format:
//   # comment
//   v <name>
//   e <name>
//   i <vertex> <edge> <+|->
// Document order defines all element orderings. Signs also accept +1/-1.
OrientedHypergraph parse_hypergraph_text(std::istream& in);
OrientedHypergraph parse_hypergraph_text(const std::string& text);

// Structured equivalent:
//   {"vertices": [...], "edges": [...],
//    "incidences": [{"vertex": v, "edge": e, "sign": s} | [v, e, s], ...]}
// with s an integer +-1 or the string "+"/"-".
OrientedHypergraph parse_hypergraph_json(std::istream& in);
OrientedHypergraph parse_hypergraph_json(const std::string& text);

// Canonical text serialization; parse-then-serialize is a fixed point.
std::string serialize_hypergraph(const OrientedHypergraph& g);

// Dispatch on extension (.json vs text); "-" reads stdin and sniffs the
// format from the first non-space byte.
OrientedHypergraph load_hypergraph(const std::string& path);

} // namespace ohg
