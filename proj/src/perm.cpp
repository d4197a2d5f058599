#include "permlab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace permlab {

namespace {

void require_same_degree(const Permutation& f, const Permutation& g,
                         const char* op) {
  if (f.degree() != g.degree()) {
    throw std::invalid_argument(std::string(op) + ": degree mismatch (" +
                                std::to_string(f.degree()) + " vs " +
                                std::to_string(g.degree()) + ")");
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) {
    throw std::invalid_argument("permutation degree must be at least 1");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("permutation image " + std::to_string(v) +
                                  " outside {1.." + std::to_string(n) + "}");
    }
    if (seen[static_cast<std::size_t>(v) - 1]) {
      throw std::invalid_argument("permutation image " + std::to_string(v) +
                                  " repeated");
    }
    seen[static_cast<std::size_t>(v) - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i) - 1] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i) - 1] = n + 1 - i;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int u, int v) {
  if (u < 1 || u > n || v < 1 || v > n || u == v) {
    throw std::invalid_argument("transposition needs two distinct points in {1..n}");
  }
  Permutation result = identity(n);
  std::swap(result.images_[static_cast<std::size_t>(u) - 1],
            result.images_[static_cast<std::size_t>(v) - 1]);
  return result;
}

Permutation Permutation::from_cycles(int n,
                                     const std::vector<std::vector<int>>& cycles) {
  if (n < 1) throw std::invalid_argument("degree must be at least 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i) - 1] = i;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& cycle : cycles) {
    for (int v : cycle) {
      if (v < 1 || v > n) {
        throw std::invalid_argument("cycle entry " + std::to_string(v) +
                                    " outside {1.." + std::to_string(n) + "}");
      }
      if (seen[static_cast<std::size_t>(v) - 1]) {
        throw std::invalid_argument("cycle entry " + std::to_string(v) +
                                    " repeated");
      }
      seen[static_cast<std::size_t>(v) - 1] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      images[static_cast<std::size_t>(from) - 1] = to;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

std::strong_ordering Permutation::operator<=>(const Permutation& other) const {
  return std::lexicographical_compare_three_way(
      images_.begin(), images_.end(), other.images_.begin(), other.images_.end());
}

int CycleType::degree() const {
  int sum = 0;
  for (int len : lengths) sum += len;
  return sum;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  require_same_degree(f, g, "compose");
  const int n = f.degree();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i) - 1] = f(g(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& f) {
  const int n = f.degree();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(f(i)) - 1] = i;
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& l, const Permutation& f) {
  require_same_degree(l, f, "conjugate");
  const int n = f.degree();
  // (l f l^{-1})(l(i)) = l(f(i)), so fill the image of l(i) directly.
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    images[static_cast<std::size_t>(l(i)) - 1] = l(f(i));
  }
  return Permutation(std::move(images));
}

int linf_distance(const Permutation& f, const Permutation& g) {
  require_same_degree(f, g, "linf_distance");
  int best = 0;
  for (int i = 1; i <= f.degree(); ++i) {
    best = std::max(best, std::abs(f(i) - g(i)));
  }
  return best;
}

int weight(const Permutation& f) {
  int best = 0;
  for (int i = 1; i <= f.degree(); ++i) {
    best = std::max(best, std::abs(f(i) - i));
  }
  return best;
}

std::vector<std::vector<int>> cycle_decomposition(const Permutation& f) {
  const int n = f.degree();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start) - 1]) continue;
    std::vector<int> cycle;
    int cur = start;
    do {
      visited[static_cast<std::size_t>(cur) - 1] = 1;
      cycle.push_back(cur);
      cur = f(cur);
    } while (cur != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

CycleType cycle_type(const Permutation& f) {
  CycleType type;
  for (const auto& cycle : cycle_decomposition(f)) {
    type.lengths.push_back(static_cast<int>(cycle.size()));
  }
  std::sort(type.lengths.begin(), type.lengths.end(), std::greater<int>());
  return type;
}

int cycle_count(const Permutation& f) {
  return static_cast<int>(cycle_decomposition(f).size());
}

bool is_involution(const Permutation& f) {
  bool moved = false;
  for (int i = 1; i <= f.degree(); ++i) {
    if (f(i) != i) {
      moved = true;
      if (f(f(i)) != i) return false;
    }
  }
  return moved;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, std::size_t& pos,
                                char terminator) {
  std::vector<int> values;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    try {
      values.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw ParseError(ParseError::Kind::malformed,
                       "cannot parse integer '" + token + "'");
    }
    token.clear();
  };
  while (pos < text.size()) {
    char c = text[pos];
    if (c == terminator) {
      flush();
      return values;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && token.empty())) {
      token.push_back(c);
    } else {
      throw ParseError(ParseError::Kind::malformed,
                       std::string("unexpected character '") + c + "'");
    }
    ++pos;
  }
  flush();
  return values;
}

Permutation parse_cycle_notation(std::string_view text, int degree_hint) {
  std::vector<std::vector<int>> cycles;
  int max_point = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(') {
      throw ParseError(ParseError::Kind::malformed,
                       "expected '(' in cycle notation");
    }
    ++pos;
    std::vector<int> cycle = parse_int_list(text, pos, ')');
    if (pos >= text.size() || text[pos] != ')') {
      throw ParseError(ParseError::Kind::malformed, "unbalanced parenthesis");
    }
    ++pos;
    if (cycle.empty()) {
      throw ParseError(ParseError::Kind::malformed, "empty cycle");
    }
    for (int v : cycle) max_point = std::max(max_point, v);
    cycles.push_back(std::move(cycle));
  }
  if (cycles.empty()) {
    throw ParseError(ParseError::Kind::malformed, "no cycles found");
  }
  const int n = degree_hint > 0 ? degree_hint : max_point;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& cycle : cycles) {
    for (int v : cycle) {
      if (v < 1 || v > n) {
        throw ParseError(ParseError::Kind::out_of_range,
                         "cycle entry " + std::to_string(v) + " outside {1.." +
                             std::to_string(n) + "}");
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw ParseError(ParseError::Kind::duplicate_value,
                         "value " + std::to_string(v) + " repeated");
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  return Permutation::from_cycles(n, cycles);
}

Permutation parse_vector_notation(std::string_view text, int degree_hint) {
  std::size_t pos = 0;
  std::vector<int> values = parse_int_list(text, pos, '\0');
  if (values.empty()) {
    throw ParseError(ParseError::Kind::malformed, "empty permutation text");
  }
  const int n = static_cast<int>(values.size());
  if (degree_hint > 0 && degree_hint != n) {
    throw ParseError(ParseError::Kind::degree_mismatch,
                     "expected degree " + std::to_string(degree_hint) +
                         ", found " + std::to_string(n) + " entries");
  }
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n) {
      throw ParseError(ParseError::Kind::out_of_range,
                       "value " + std::to_string(v) + " outside {1.." +
                           std::to_string(n) + "}");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw ParseError(ParseError::Kind::duplicate_value,
                       "value " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (int v = 1; v <= n; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw ParseError(ParseError::Kind::missing_value,
                       "value " + std::to_string(v) + " missing");
    }
  }
  return Permutation(std::move(values));
}

}  // namespace

Permutation parse_permutation(std::string_view text, int degree_hint) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    throw ParseError(ParseError::Kind::malformed, "empty permutation text");
  }
  if (text[first] == '(') {
    return parse_cycle_notation(text.substr(first), degree_hint);
  }
  return parse_vector_notation(text, degree_hint);
}

std::string format_vector(const Permutation& f) {
  std::ostringstream out;
  for (int i = 1; i <= f.degree(); ++i) {
    if (i > 1) out << ' ';
    out << f(i);
  }
  return out.str();
}

std::string format_cycles(const Permutation& f) {
  std::ostringstream out;
  for (const auto& cycle : cycle_decomposition(f)) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

std::size_t hash_value(const Permutation& f) {
  std::size_t h = 1469598103934665603ull;
  for (int v : f.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace permlab
