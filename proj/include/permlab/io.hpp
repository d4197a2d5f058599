#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "permlab/search.hpp"

namespace permlab {

/// Code file format: optional '#' comment lines, then "n <degree>", then one
/// permutation per line in vector notation. The writer records provenance in
/// a header comment; a "# group: 1" hint lets the reader skip re-deriving
/// group status for large codes (it is still verified when affordable).
void write_code_file(std::ostream& out, const PermutationCode& code,
                     std::string_view provenance = {});
void write_code_file(const std::filesystem::path& path,
                     const PermutationCode& code,
                     std::string_view provenance = {});
PermutationCode read_code_file(std::istream& in);
PermutationCode read_code_file(const std::filesystem::path& path);

/// Graph file format: optional '#' comments, "n <vertices> m <edges>", then
/// one "u v" line per edge, 1-indexed, undirected, no duplicates.
void write_graph_file(std::ostream& out, const Graph& graph,
                      std::string_view provenance = {});
void write_graph_file(const std::filesystem::path& path, const Graph& graph,
                      std::string_view provenance = {});
Graph read_graph_file(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);

}  // namespace permlab
