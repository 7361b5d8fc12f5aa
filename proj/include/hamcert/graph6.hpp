#ifndef HAMCERT_GRAPH6_HPP
#define HAMCERT_GRAPH6_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hamcert/graph.hpp"
#include "hamcert/vertex_set.hpp"

namespace hamcert {

enum class Graph6ErrorCode {
    kMalformedHeader,   // empty record, header byte out of range, or long-form header
    kLengthMismatch,    // payload shorter or longer than the header implies
    kByteOutOfRange,    // payload byte outside 63..126
    kNonzeroPadding,    // unused low bits of the last payload byte are set
    kUnsupportedSize,   // writer: n > 62
};

const char* to_string(Graph6ErrorCode code);

class Graph6Error : public std::runtime_error {
  public:
    Graph6Error(Graph6ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Graph6ErrorCode code() const { return code_; }

  private:
    Graph6ErrorCode code_;
};

/// Largest order representable with a one-byte graph6 header.
inline constexpr int kGraph6ShortFormMax = 62;

/// Decodes one graph6 record (no trailing newline). An optional ">>graph6<<"
/// prefix is accepted.
Graph parse_graph6(std::string_view text);

/// Encodes g as a graph6 record without a trailing newline.
std::string write_graph6(const Graph& g);

/// Reads newline-delimited graph6 records, skipping blank lines. Parse errors
/// are rethrown with the 1-based line number in the message.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Graphviz export, vertex labels are the indices. Vertices in `highlight`
/// are filled, as are edges with both ends highlighted.
std::string write_dot(const Graph& g, VertexSet highlight = {});

}  // namespace hamcert

#endif  // HAMCERT_GRAPH6_HPP
