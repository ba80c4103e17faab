#pragma once

#include <string>
#include <string_view>

#include "dkern/digraph.hpp"

namespace dkern {

struct DigraphDocument {
  std::string name;
  std::string source;
  Digraph digraph;
};

/// Text grammar, '#' starting a comment that runs to end of line and blank
/// lines ignored:
///
///     digraph <n>
///     <u> <v>          one arc per line, 0-indexed
///
/// or a single line `circulant <m> : j1,j2,...` with residues reduced mod m
/// (negative values allowed). Duplicate arcs collapse. Errors carry the
/// line and column.
DigraphDocument parse_digraph(std::string_view text, std::string name = {}, int cap = kMaskCap);

/// `digraph n` followed by the sorted arc list; parses back to the input.
std::string render_edge_list(const Digraph& d);
/// Graphviz; a symmetric pair is drawn as two arcs.
std::string render_dot(const Digraph& d, std::string_view name = "D");

}  // namespace dkern
