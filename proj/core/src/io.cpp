#include "lpcd/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lpcd {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                              : what),
      line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
std::optional<T> parse_number(std::string_view tok) {
  T value{};
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

Graph load_matrix_market(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) throw ParseError(1, "empty input");
  ++lineno;
  auto header = split_ws(line);
  if (header.size() != 5 || lower(header[0]) != "%%matrixmarket" ||
      lower(header[1]) != "matrix" || lower(header[2]) != "coordinate") {
    throw ParseError(lineno, "expected '%%MatrixMarket matrix coordinate ...'");
  }
  const std::string field = lower(header[3]);
  const std::string symmetry = lower(header[4]);
  const bool pattern = field == "pattern";
  if (!pattern && field != "real" && field != "integer") {
    throw ParseError(lineno, "unsupported field '" + field + "'");
  }
  const bool symmetric = symmetry == "symmetric";
  if (!symmetric && symmetry != "general") {
    throw ParseError(lineno, "unsupported symmetry '" + symmetry + "'");
  }

  std::optional<std::size_t> rows, cols, entries;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '%') continue;
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok.size() != 3) throw ParseError(lineno, "expected 'rows cols entries'");
    rows = parse_number<std::size_t>(tok[0]);
    cols = parse_number<std::size_t>(tok[1]);
    entries = parse_number<std::size_t>(tok[2]);
    if (!rows || !cols || !entries) throw ParseError(lineno, "bad size line");
    break;
  }
  if (!rows) throw ParseError(lineno, "missing size line");

  const std::size_t n = std::max(*rows, *cols);
  std::vector<Arc> arcs;
  arcs.reserve(symmetric ? 2 * *entries : *entries);
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '%') continue;
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok.size() < (pattern ? 2u : 3u)) {
      throw ParseError(lineno, "too few fields in entry");
    }
    auto i = parse_number<std::size_t>(tok[0]);
    auto j = parse_number<std::size_t>(tok[1]);
    if (!i || !j) throw ParseError(lineno, "non-numeric index");
    if (*i < 1 || *i > *rows || *j < 1 || *j > *cols) {
      throw ParseError(lineno, "index out of declared bounds");
    }
    double w = 1.0;
    if (!pattern) {
      auto parsed = parse_number<double>(tok[2]);
      if (!parsed) throw ParseError(lineno, "non-numeric value");
      w = *parsed;
      if (!(w > 0.0)) throw ParseError(lineno, "non-positive weight");
    }
    const auto u = static_cast<VertexId>(*i - 1);
    const auto v = static_cast<VertexId>(*j - 1);
    arcs.push_back({u, v, w});
    if (symmetric && u != v) arcs.push_back({v, u, w});
    ++seen;
  }
  if (seen != *entries) {
    throw ParseError(lineno, "expected " + std::to_string(*entries) +
                                 " entries, found " + std::to_string(seen));
  }
  return Graph::from_arcs(n, std::move(arcs));
}

Graph load_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<Arc> arcs;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (tok.size() < 2 || tok.size() > 3) {
      throw ParseError(lineno, "expected 'u v [w]'");
    }
    if (tok[0].front() == '-' || tok[1].front() == '-') {
      throw ParseError(lineno, "negative vertex index");
    }
    auto u = parse_number<std::uint64_t>(tok[0]);
    auto v = parse_number<std::uint64_t>(tok[1]);
    if (!u || !v) throw ParseError(lineno, "non-numeric vertex index");
    if (*u >= UINT32_MAX || *v >= UINT32_MAX) {
      throw ParseError(lineno, "vertex index too large");
    }
    double w = 1.0;
    if (tok.size() == 3) {
      auto parsed = parse_number<double>(tok[2]);
      if (!parsed) throw ParseError(lineno, "non-numeric weight");
      w = *parsed;
      if (!(w > 0.0)) throw ParseError(lineno, "non-positive weight");
    }
    arcs.push_back({static_cast<VertexId>(*u), static_cast<VertexId>(*v), w});
    n = std::max<std::size_t>(n, std::max(*u, *v) + 1);
  }
  return Graph::from_arcs(n, std::move(arcs));
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  if (lower(path.extension().string()) == ".mtx") return load_matrix_market(in);
  return load_edge_list(in);
}

void write_assignment_tsv(std::ostream& out, const CommunityAssignment& a) {
  std::string buf;
  for (std::size_t v = 0; v < a.size(); ++v) {
    buf.clear();
    buf += std::to_string(v);
    buf += '\t';
    buf += std::to_string(a[v]);
    buf += '\n';
    out << buf;
  }
}

CommunityAssignment read_assignment_tsv(std::istream& in,
                                        std::size_t vertex_count) {
  constexpr VertexId kUnset = UINT32_MAX;
  CommunityAssignment a{std::vector<VertexId>(vertex_count, kUnset)};
  std::unordered_map<std::uint64_t, VertexId> dense;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (tok.size() != 2) throw ParseError(lineno, "expected 'vertex community'");
    auto v = parse_number<std::uint64_t>(tok[0]);
    auto c = parse_number<std::uint64_t>(tok[1]);
    if (!v || !c) throw ParseError(lineno, "non-numeric field");
    if (*v >= vertex_count) {
      throw ParseError(lineno, "vertex " + std::to_string(*v) + " out of range");
    }
    if (a.labels[*v] != kUnset) {
      throw ParseError(lineno, "duplicate vertex " + std::to_string(*v));
    }
    auto [it, inserted] =
        dense.try_emplace(*c, static_cast<VertexId>(dense.size()));
    a.labels[*v] = it->second;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (a.labels[v] == kUnset) {
      throw ParseError(0, "missing vertex " + std::to_string(v));
    }
  }
  return a;
}

}  // namespace lpcd
