#include "ohg/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace ohg {

namespace {

int parse_sign_token(const std::string& token, int line_no) {
    if (token == "+" || token == "+1") return +1;
    if (token == "-" || token == "-1") return -1;
    throw ParseError("line " + std::to_string(line_no) + ": sign must be + or -, got '" + token +
                     "'");
}

} // namespace

OrientedHypergraph parse_hypergraph_text(std::istream& in) {
    HypergraphBuilder b;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string kind;
        if (!(tokens >> kind)) continue;
        std::string a, c, extra;
        if (kind == "v") {
            if (!(tokens >> a) || tokens >> extra)
                throw ParseError("line " + std::to_string(line_no) + ": expected 'v <name>'");
            b.vertex(a);
        } else if (kind == "e") {
            if (!(tokens >> a) || tokens >> extra)
                throw ParseError("line " + std::to_string(line_no) + ": expected 'e <name>'");
            b.edge(a);
        } else if (kind == "i") {
            std::string sign;
            if (!(tokens >> a >> c >> sign) || tokens >> extra)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'i <vertex> <edge> <+|->'");
            b.incidence(a, c, parse_sign_token(sign, line_no));
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" + kind +
                             "'");
        }
    }
    return b.build();
}

OrientedHypergraph parse_hypergraph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph_text(in);
}

OrientedHypergraph parse_hypergraph_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        HypergraphBuilder b;
        for (const auto& v : doc.value("vertices", nlohmann::json::array()))
            b.vertex(v.get<std::string>());
        for (const auto& e : doc.value("edges", nlohmann::json::array()))
            b.edge(e.get<std::string>());
        for (const auto& inc : doc.value("incidences", nlohmann::json::array())) {
            std::string vertex, edge;
            nlohmann::json sign;
            if (inc.is_array()) {
                if (inc.size() != 3) throw ParseError("incidence array must have 3 entries");
                vertex = inc[0].get<std::string>();
                edge = inc[1].get<std::string>();
                sign = inc[2];
            } else {
                vertex = inc.at("vertex").get<std::string>();
                edge = inc.at("edge").get<std::string>();
                sign = inc.at("sign");
            }
            int s;
            if (sign.is_string())
                s = parse_sign_token(sign.get<std::string>(), 0);
            else
                s = sign.get<int>();
            b.incidence(vertex, edge, s);
        }
        return b.build();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed hypergraph object: ") + e.what());
    }
}

OrientedHypergraph parse_hypergraph_json(const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph_json(in);
}

std::string serialize_hypergraph(const OrientedHypergraph& g) {
    std::string out;
    for (int v = 0; v < g.vertex_count(); ++v) out += "v " + g.vertex_name(v) + "\n";
    for (int e = 0; e < g.edge_count(); ++e) out += "e " + g.edge_name(e) + "\n";
    for (const Incidence& inc : g.incidences()) {
        out += "i " + g.vertex_name(inc.vertex) + " " + g.edge_name(inc.edge) + " ";
        out += inc.sign > 0 ? "+" : "-";
        out += "\n";
    }
    return out;
}

OrientedHypergraph load_hypergraph(const std::string& path) {
    if (path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        std::string text = buffer.str();
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') return parse_hypergraph_json(text);
        return parse_hypergraph_text(text);
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return parse_hypergraph_json(in);
    return parse_hypergraph_text(in);
}

} // namespace ohg
