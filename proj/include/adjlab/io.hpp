#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "adjlab/errors.hpp"
#include "adjlab/graph.hpp"
#include "adjlab/labeling.hpp"
#include "adjlab/set_system.hpp"

namespace adjlab {

namespace detail {

// Lines with '#' comments stripped and blanks skipped.
inline bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) return true;
    }
    return false;
}

} // namespace detail

// Edge-list text format: `n m` on the first data line, then m lines `u v`.
inline Graph read_graph(std::istream& in) {
    std::string line;
    if (!detail::next_data_line(in, line)) throw input_error("graph file: missing header line");
    std::istringstream head(line);
    long long n, m;
    if (!(head >> n >> m)) throw input_error("graph file: header must be 'n m'");
    if (n < 0 || m < 0) throw input_error("graph file: negative counts");
    Graph g{int(n)};
    for (long long i = 0; i < m; ++i) {
        if (!detail::next_data_line(in, line))
            throw input_error("graph file: expected " + std::to_string(m) + " edges, got " +
                              std::to_string(i));
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) throw input_error("graph file: bad edge line '" + line + "'");
        g.add_edge(int(u), int(v));
    }
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
    auto es = g.edges();
    out << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

// Incidence-matrix text format: `rows cols`, then rows of 0/1 characters.
// Rows are the sets, columns the ground elements.
inline SetSystem read_set_system(std::istream& in) {
    std::string line;
    if (!detail::next_data_line(in, line)) throw input_error("matrix file: missing header line");
    std::istringstream head(line);
    int rows, cols;
    if (!(head >> rows >> cols) || rows < 0 || cols < 0)
        throw input_error("matrix file: header must be 'rows cols'");
    std::vector<Bitset> sets;
    for (int r = 0; r < rows; ++r) {
        if (!detail::next_data_line(in, line))
            throw input_error("matrix file: expected " + std::to_string(rows) + " rows");
        std::istringstream rs(line);
        std::string bits;
        rs >> bits;
        if (int(bits.size()) != cols)
            throw input_error("matrix file: row " + std::to_string(r) + " has " +
                              std::to_string(bits.size()) + " entries, expected " +
                              std::to_string(cols));
        Bitset b(cols);
        for (int c = 0; c < cols; ++c) {
            if (bits[c] == '1')
                b.set(c);
            else if (bits[c] != '0')
                throw input_error("matrix file: entries must be 0 or 1");
        }
        sets.push_back(std::move(b));
    }
    return SetSystem(cols, std::move(sets));
}

// Label files are JSON lines: one header object, then one object per vertex.
inline void write_labels(std::ostream& out, const LabelSet& ls) {
    nlohmann::json header{{"n", ls.n}, {"scheme", scheme_name(ls.scheme)}};
    out << header.dump() << '\n';
    for (int v = 0; v < ls.n; ++v) {
        nlohmann::json rec{{"v", v}, {"bits", ls.labels[v].to_hex()}, {"len", ls.labels[v].bit_len}};
        out << rec.dump() << '\n';
    }
}

struct LabelFile {
    int n = 0;
    Scheme scheme = Scheme::interval;
    std::map<int, Label> by_vertex;
};

inline LabelFile read_labels(std::istream& in) {
    LabelFile f;
    std::string line;
    if (!std::getline(in, line)) throw input_error("label file: empty");
    try {
        nlohmann::json header = nlohmann::json::parse(line);
        f.n = header.at("n").get<int>();
        f.scheme = scheme_from_name(header.at("scheme").get<std::string>());
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            nlohmann::json rec = nlohmann::json::parse(line);
            int v = rec.at("v").get<int>();
            f.by_vertex[v] =
                Label::from_hex(rec.at("bits").get<std::string>(), rec.at("len").get<int>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("label file: ") + e.what());
    }
    return f;
}

} // namespace adjlab
