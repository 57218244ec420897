#pragma once

#include <stdexcept>
#include <string>

namespace relkit {

// Every failure the library reports carries one of these codes. The CLI maps
// code categories onto process exit codes; tests match on codes, not text.
enum class Errc {
    parse_error,
    loop_edge,
    duplicate_edge,
    vertex_out_of_range,
    index_out_of_range,
    not_connected,
    empty_edge_set,
    attach_vertex_missing,
    chord_endpoints_equal,
    chord_endpoints_adjacent,
    same_vertex,
    adjacent_endpoints,
    too_many_edges,
    bad_k,
    negative_count,
    size_mismatch,
    negative_time,
    invalid_parameter,
    invalid_probability,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::parse_error:              return "ParseError";
        case Errc::loop_edge:                return "LoopEdge";
        case Errc::duplicate_edge:           return "DuplicateEdge";
        case Errc::vertex_out_of_range:      return "VertexOutOfRange";
        case Errc::index_out_of_range:       return "IndexOutOfRange";
        case Errc::not_connected:            return "NotConnected";
        case Errc::empty_edge_set:           return "EmptyEdgeSet";
        case Errc::attach_vertex_missing:    return "AttachVertexMissing";
        case Errc::chord_endpoints_equal:    return "ChordEndpointsEqual";
        case Errc::chord_endpoints_adjacent: return "ChordEndpointsAdjacent";
        case Errc::same_vertex:              return "SameVertex";
        case Errc::adjacent_endpoints:       return "AdjacentEndpoints";
        case Errc::too_many_edges:           return "TooManyEdges";
        case Errc::bad_k:                    return "BadK";
        case Errc::negative_count:           return "NegativeCount";
        case Errc::size_mismatch:            return "SizeMismatch";
        case Errc::negative_time:            return "NegativeTime";
        case Errc::invalid_parameter:        return "InvalidParameter";
        case Errc::invalid_probability:      return "InvalidProbability";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(detail), code_(code) {}

    Errc code() const noexcept { return code_; }
    const char* name() const noexcept { return errc_name(code_); }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& detail) {
    throw Error(code, detail);
}

} // namespace relkit
