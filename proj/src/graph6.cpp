#include "ramseylab/graph6.hpp"

#include <sstream>

namespace ramseylab {

namespace {
constexpr int kBias = 63;
constexpr int kMaxShort = 62;
constexpr long kMaxLong = 258047;  // largest order of the 3-byte form
}  // namespace

Graph parse_graph6(const std::string& input) {
    std::string s = input;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw Graph6Error("empty graph6 string", 0);

    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > s.size()) throw Graph6Error("truncated graph6 string", s.size());
    };
    auto byte_at = [&](size_t i) -> int {
        unsigned char c = s[i];
        if (c < 63 || c > 126) throw Graph6Error("byte out of range", i);
        return c - kBias;
    };

    long n;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw Graph6Error("orders above 258047 are not supported", 0);
        need(4);
        n = ((long)byte_at(1) << 12) | ((long)byte_at(2) << 6) | byte_at(3);
        if (n <= kMaxShort) throw Graph6Error("non-canonical long order encoding", 0);
        pos = 4;
    } else {
        n = byte_at(0);
        pos = 1;
    }

    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    need(nbytes);
    if (pos + (size_t)nbytes != s.size())
        throw Graph6Error("trailing garbage after graph body", pos + nbytes);

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit) {
            int val = byte_at(pos + bit / 6);
            if ((val >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
        }
    // padding bits must be zero
    if (nbits % 6 != 0) {
        int last = byte_at(s.size() - 1);
        int pad = 6 - (int)(nbits % 6);
        if (last & ((1 << pad) - 1))
            throw Graph6Error("nonzero padding bits", s.size() - 1);
    }
    return Graph::from_edges((int)n, edges);
}

std::string write_graph6(const Graph& g) {
    long n = g.order();
    if (n > kMaxLong) throw std::domain_error("graph too large for graph6");
    std::string out;
    if (n <= kMaxShort) {
        out.push_back((char)(n + kBias));
    } else {
        out.push_back('~');
        out.push_back((char)(((n >> 12) & 63) + kBias));
        out.push_back((char)(((n >> 6) & 63) + kBias));
        out.push_back((char)((n & 63) + kBias));
    }
    int acc = 0, nb = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nb == 6) {
                out.push_back((char)(acc + kBias));
                acc = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back((char)((acc << (6 - nb)) + kBias));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long n;
    if (!(in >> n) || n < 0) throw std::runtime_error("edge list: bad or missing order header");
    std::vector<std::pair<int, int>> edges;
    long u, v;
    while (in >> u) {
        if (!(in >> v)) throw std::runtime_error("edge list: dangling endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::runtime_error("edge list: endpoint out of range");
        if (u == v) throw std::runtime_error("edge list: loops are not allowed");
        edges.emplace_back((int)u, (int)v);
    }
    return Graph::from_edges((int)n, edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << "\n";
    for (int u = 0; u < g.order(); ++u)
        for (int v = g.row(u).next(u + 1); v >= 0; v = g.row(u).next(v + 1))
            out << u << " " << v << "\n";
    return out.str();
}

}  // namespace ramseylab
