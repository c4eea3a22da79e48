// literals.hpp — text formats for specs and vertices: `theta:1,2,3` for a
// graph spec (lengths in user order), `c1` / `c2` / `v:i:j` for vertices.
// Vertex literals use the caller's original path labels; parsing maps them
// onto the canonical (sorted) representation and formatting maps back.
#pragma once

#include <charconv>
#include <string>
#include <string_view>

#include "thetadim/theta_graph.hpp"

namespace thetadim {

namespace detail {

inline int parse_int(std::string_view s, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument(what + ": '" + std::string(s) + "' is not an integer");
    return value;
}

}  // namespace detail

inline GraphSpec parse_spec_literal(std::string_view text) {
    constexpr std::string_view prefix = "theta:";
    if (!text.starts_with(prefix))
        throw std::invalid_argument("spec literal must start with 'theta:' (got '" +
                                    std::string(text) + "')");
    std::string_view body = text.substr(prefix.size());
    if (body.empty())
        throw std::invalid_argument("spec literal has no lengths: '" + std::string(text) + "'");
    std::vector<int> lengths;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string_view tok = body.substr(
            start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        lengths.push_back(detail::parse_int(
            tok, "spec length at index " + std::to_string(lengths.size() + 1)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return GraphSpec(std::move(lengths));
}

// Parses `c1`, `c2`, or `v:i:j` with i the ORIGINAL (pre-sort) path label.
inline VertexId parse_vertex_literal(std::string_view text, const GraphSpec& spec) {
    if (text == "c1") return VertexId::c1();
    if (text == "c2") return VertexId::c2();
    if (!text.starts_with("v:"))
        throw std::invalid_argument("vertex literal must be c1, c2, or v:i:j (got '" +
                                    std::string(text) + "')");
    std::string_view body = text.substr(2);
    std::size_t colon = body.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("vertex literal must be v:i:j (got '" +
                                    std::string(text) + "')");
    int path = detail::parse_int(body.substr(0, colon), "vertex path index");
    int pos = detail::parse_int(body.substr(colon + 1), "vertex position");
    if (path < 1 || path > spec.multiplicity())
        throw std::invalid_argument("vertex path index " + std::to_string(path) +
                                    " out of range (m=" + std::to_string(spec.multiplicity()) +
                                    ")");
    VertexId v = VertexId::internal(spec.canonical_path(path), pos);
    if (!spec.valid(v))
        throw std::invalid_argument("vertex position " + std::to_string(pos) +
                                    " out of range on path " + std::to_string(path) + " (s=" +
                                    std::to_string(spec.length(spec.canonical_path(path))) +
                                    ")");
    return v;
}

// Formats a canonical vertex back in the caller's original path labels.
inline std::string format_vertex(VertexId v, const GraphSpec& spec) {
    switch (v.kind) {
        case VertexId::Kind::Center1: return "c1";
        case VertexId::Kind::Center2: return "c2";
        default:
            return "v:" + std::to_string(spec.original_path(v.path)) + ":" +
                   std::to_string(v.pos);
    }
}

}  // namespace thetadim
