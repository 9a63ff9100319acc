#include "ctf/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace ctf {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long long read_count(std::istringstream& fields, std::size_t line_no, const char* what) {
    long long value = 0;
    if (!(fields >> value)) throw ParseError("line " + std::to_string(line_no) + ": expected " + what);
    if (value < 0) throw ParseError("line " + std::to_string(line_no) + ": negative " + what);
    return value;
}

} // namespace

MultiGraph parse_graph(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    long long vertex_count = -1;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "v") {
            if (vertex_count >= 0) throw ParseError("line " + std::to_string(line_no) + ": duplicate 'v' line");
            vertex_count = read_count(fields, line_no, "vertex count");
        } else if (tag == "e") {
            if (vertex_count < 0) throw ParseError("line " + std::to_string(line_no) + ": 'e' before 'v'");
            auto u = read_count(fields, line_no, "endpoint");
            auto v = read_count(fields, line_no, "endpoint");
            if (u >= vertex_count || v >= vertex_count)
                throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range");
            pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
        }
        std::string extra;
        if (fields >> extra) throw ParseError("line " + std::to_string(line_no) + ": trailing input '" + extra + "'");
    }
    if (vertex_count < 0) throw ParseError("missing 'v <count>' line");
    if (pairs.size() > kMaxEdges) throw ParseError("too many edges (limit 64)");
    return MultiGraph(static_cast<std::size_t>(vertex_count), pairs);
}

MultiGraph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

MultiGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_graph(in);
}

std::string format_graph(const MultiGraph& g) {
    std::ostringstream out;
    out << "v " << g.vertex_count() << "\n";
    for (const auto& e : g.edges()) out << "e " << e.tail << " " << e.head << "\n";
    return out.str();
}

} // namespace ctf
