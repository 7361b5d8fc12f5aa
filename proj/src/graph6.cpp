#include "hamcert/graph6.hpp"

#include <istream>
#include <sstream>

namespace hamcert {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::size_t payload_bits(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }
std::size_t payload_bytes(int n) { return (payload_bits(n) + 5) / 6; }

}  // namespace

const char* to_string(Graph6ErrorCode code) {
    switch (code) {
        case Graph6ErrorCode::kMalformedHeader: return "malformed header";
        case Graph6ErrorCode::kLengthMismatch: return "payload length mismatch";
        case Graph6ErrorCode::kByteOutOfRange: return "byte out of range";
        case Graph6ErrorCode::kNonzeroPadding: return "nonzero padding bits";
        case Graph6ErrorCode::kUnsupportedSize: return "unsupported size";
    }
    return "unknown";
}

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view kPrefix = ">>graph6<<";
    if (text.starts_with(kPrefix)) text.remove_prefix(kPrefix.size());
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);

    if (text.empty()) throw Graph6Error(Graph6ErrorCode::kMalformedHeader, "graph6: empty record");
    const int head = static_cast<unsigned char>(text[0]);
    if (head == kMaxByte) {
        throw Graph6Error(Graph6ErrorCode::kMalformedHeader, "graph6: long-form header (n > 62) is not supported");
    }
    if (head < kBias || head > kMaxByte) {
        throw Graph6Error(Graph6ErrorCode::kMalformedHeader, "graph6: header byte " + std::to_string(head) + " out of range");
    }
    const int n = head - kBias;
    const std::string_view payload = text.substr(1);
    if (payload.size() != payload_bytes(n)) {
        throw Graph6Error(Graph6ErrorCode::kLengthMismatch,
                          "graph6: expected " + std::to_string(payload_bytes(n)) + " payload bytes for n=" + std::to_string(n) +
                              ", got " + std::to_string(payload.size()));
    }
    for (char c : payload) {
        const int b = static_cast<unsigned char>(c);
        if (b < kBias || b > kMaxByte) {
            throw Graph6Error(Graph6ErrorCode::kByteOutOfRange, "graph6: payload byte " + std::to_string(b) + " out of range");
        }
    }

    Graph g(n);
    std::size_t k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            const int chunk = static_cast<unsigned char>(payload[k / 6]) - kBias;
            if ((chunk >> (5 - k % 6)) & 1) g.add_edge(u, v);
        }
    }
    if (k % 6 != 0) {
        const int chunk = static_cast<unsigned char>(payload.back()) - kBias;
        if (chunk & ((1 << (6 - k % 6)) - 1)) {
            throw Graph6Error(Graph6ErrorCode::kNonzeroPadding, "graph6: nonzero padding bits in final byte");
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6ShortFormMax) {
        throw Graph6Error(Graph6ErrorCode::kUnsupportedSize,
                          "graph6: n=" + std::to_string(n) + " needs a long-form header (max 62)");
    }
    std::string out(1 + payload_bytes(n), '\0');
    out[0] = static_cast<char>(n);
    std::size_t k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            if (g.adjacent(u, v)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] | (1 << (5 - k % 6)));
        }
    }
    for (char& c : out) c = static_cast<char>(c + kBias);
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const Graph6Error& e) {
            throw Graph6Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

std::string write_dot(const Graph& g, VertexSet highlight) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  " << v;
        if (highlight.contains(v)) os << " [style=filled, fillcolor=lightcoral]";
        os << ";\n";
    }
    for (auto [u, v] : g.edges()) {
        os << "  " << u << " -- " << v;
        if (highlight.contains(u) && highlight.contains(v)) os << " [color=red, penwidth=2]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace hamcert
