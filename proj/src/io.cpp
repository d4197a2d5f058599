#include "permlab/io.hpp"

#include <fstream>
#include <sstream>

namespace permlab {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  return out;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string() + " for reading");
  }
  return in;
}

// Yields non-comment, non-blank lines; understands the "# group: 1" hint.
struct LineReader {
  std::istream& in;
  bool group_hint = false;

  bool next(std::string& line) {
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      if (line[first] == '#') {
        if (line.find("group: 1") != std::string::npos) group_hint = true;
        continue;
      }
      if (first > 0 || line.back() == '\r') {
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
      }
      return true;
    }
    return false;
  }
};

}  // namespace

void write_code_file(std::ostream& out, const PermutationCode& code,
                     std::string_view provenance) {
  if (!provenance.empty()) out << "# " << provenance << "\n";
  if (code.is_group()) out << "# group: 1\n";
  out << "n " << code.degree() << "\n";
  for (const auto& f : code.elements()) {
    out << format_vector(f) << "\n";
  }
}

void write_code_file(const std::filesystem::path& path,
                     const PermutationCode& code, std::string_view provenance) {
  auto out = open_output(path);
  write_code_file(out, code, provenance);
}

PermutationCode read_code_file(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) {
    throw std::runtime_error("code file is empty");
  }
  std::istringstream header(line);
  std::string tag;
  int degree = 0;
  if (!(header >> tag >> degree) || tag != "n" || degree < 1) {
    throw std::runtime_error("code file must start with 'n <degree>'");
  }
  std::vector<Permutation> elements;
  while (reader.next(line)) {
    elements.push_back(parse_permutation(line, degree));
  }
  if (elements.empty()) {
    throw std::runtime_error("code file has no permutations");
  }
  return code_from_file_elements(std::move(elements), reader.group_hint);
}

PermutationCode read_code_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_code_file(in);
}

void write_graph_file(std::ostream& out, const Graph& graph,
                      std::string_view provenance) {
  if (!provenance.empty()) out << "# " << provenance << "\n";
  out << "n " << graph.vertex_count() << " m " << graph.edge_count() << "\n";
  for (const auto& [u, v] : graph.edges()) {
    out << u << " " << v << "\n";
  }
}

void write_graph_file(const std::filesystem::path& path, const Graph& graph,
                      std::string_view provenance) {
  auto out = open_output(path);
  write_graph_file(out, graph, provenance);
}

Graph read_graph_file(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) {
    throw std::runtime_error("graph file is empty");
  }
  std::istringstream header(line);
  std::string tag_n;
  std::string tag_m;
  int n = 0;
  long long m = 0;
  if (!(header >> tag_n >> n >> tag_m >> m) || tag_n != "n" || tag_m != "m" ||
      n < 1 || m < 0) {
    throw std::runtime_error("graph file must start with 'n <vertices> m <edges>'");
  }
  Graph graph(n);
  while (reader.next(line)) {
    std::istringstream edge(line);
    int u = 0;
    int v = 0;
    if (!(edge >> u >> v)) {
      throw std::runtime_error("cannot parse edge line '" + line + "'");
    }
    graph.add_edge(u, v);
  }
  if (static_cast<long long>(graph.edge_count()) != m) {
    throw std::runtime_error("graph edge count does not match the header");
  }
  return graph;
}

Graph read_graph_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_graph_file(in);
}

}  // namespace permlab
