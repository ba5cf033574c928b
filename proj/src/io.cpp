#include "bes/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace bes {

namespace {

std::vector<long long> parse_ints(std::string_view line, int line_no) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        long long v = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
        if (ec != std::errc() || v < 0)
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(line_no) + ": expected a non-negative integer");
        i = static_cast<std::size_t>(ptr - line.data());
        if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(line_no) + ": unexpected character");
        out.push_back(v);
    }
    return out;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long long r = 0, n = 0, m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '#') continue;
        auto ints = parse_ints(line, line_no);
        if (ints.empty()) continue;
        if (!have_header) {
            if (ints.size() != 3)
                throw Error(ErrorCode::ParseError, "header must be 'r n m'");
            r = ints[0];
            n = ints[1];
            m = ints[2];
            if (r < 2 || n < r || n > static_cast<long long>(kMaxVertices))
                throw Error(ErrorCode::ParseError, "header values out of range");
            have_header = true;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw Error(ErrorCode::ParseError, "more edge lines than announced");
        if (static_cast<long long>(ints.size()) != r)
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(line_no) + ": expected " + std::to_string(r) +
                            " vertex ids");
        Edge e;
        for (std::size_t j = 0; j < ints.size(); ++j) {
            if (j > 0 && ints[j] <= ints[j - 1])
                throw Error(ErrorCode::ParseError,
                            "line " + std::to_string(line_no) + ": ids must be strictly increasing");
            if (ints[j] >= n)
                throw Error(ErrorCode::VertexOutOfRange,
                            "line " + std::to_string(line_no) + ": vertex id >= n");
            e.push_back(static_cast<Vertex>(ints[j]));
        }
        edges.push_back(std::move(e));
    }
    if (!have_header) throw Error(ErrorCode::ParseError, "missing header line");
    if (static_cast<long long>(edges.size()) != m)
        throw Error(ErrorCode::ParseError, "fewer edge lines than announced");
    return Hypergraph::build(static_cast<int>(r), static_cast<int>(n), std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_hypergraph(in);
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return parse_hypergraph(in);
}

std::string serialize(const Hypergraph& F) {
    std::string out = std::to_string(F.r()) + " " + std::to_string(F.n()) + " " +
                      std::to_string(F.size()) + "\n";
    for (const auto& e : F.edges()) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(e[j]);
        }
        out += '\n';
    }
    return out;
}

void write_hypergraph_file(const Hypergraph& F, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << serialize(F);
}

}  // namespace bes
