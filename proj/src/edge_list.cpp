#include "burn/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "burn/errors.hpp"

namespace burn {

namespace {

constexpr std::int64_t kMaxVertices = 10'000'000;

// Advances to the next line that still has content once comments are stripped.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw InputError("edge list line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

ExplicitGraph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no)) throw InputError("edge list: missing 'n m' header");

    std::istringstream header(line);
    std::int64_t n = -1;
    std::int64_t m = -1;
    std::string extra;
    if (!(header >> n >> m) || n < 0 || m < 0) fail(line_no, "header must be 'n m'");
    if (header >> extra) fail(line_no, "unexpected token '" + extra + "' after header");
    if (n > kMaxVertices) throw ResourceError("edge list declares " + std::to_string(n) + " vertices, above the tool cap");

    ExplicitGraph g(static_cast<int>(n));
    for (std::int64_t i = 0; i < m; ++i) {
        if (!next_content_line(in, line, line_no))
            throw InputError("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        std::istringstream row(line);
        std::int64_t u = -1;
        std::int64_t v = -1;
        if (!(row >> u >> v)) fail(line_no, "expected 'u v'");
        if (row >> extra) fail(line_no, "unexpected token '" + extra + "' after edge");
        if (u < 0 || u >= n || v < 0 || v >= n) fail(line_no, "endpoint out of range");
        if (u == v) fail(line_no, "self-loop");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_content_line(in, line, line_no)) fail(line_no, "more lines than declared edges");
    return g;
}

ExplicitGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const ExplicitGraph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (v > u) out << u << ' ' << v << '\n';
}

}  // namespace burn
