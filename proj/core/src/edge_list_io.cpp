#include "idim/edge_list_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "idim/error.hpp"

namespace idim {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected non-negative integer ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

void parse_comment(std::string_view body, std::size_t line, EdgeListMetadata& meta,
                   std::vector<std::pair<std::size_t, std::string>>& labels) {
  body = trim(body);
  if (body.starts_with("family:")) {
    auto spec = parse_family_spec(trim(body.substr(7)));
    if (!spec) throw ParseError(line, "unrecognized family comment");
    meta.family = std::move(spec);
  } else if (body.starts_with("label ")) {
    auto parts = split_ws(body.substr(6));
    if (parts.size() != 2) throw ParseError(line, "label comment needs '<vertex> <name>'");
    labels.emplace_back(parse_count(parts[0], line, "vertex"), std::string(parts[1]));
  }
}

}  // namespace

EdgeListDocument parse_edge_list(std::string_view text) {
  EdgeListMetadata meta;
  std::vector<std::pair<std::size_t, std::string>> labels;
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::vector<Edge> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;

    if (line.empty()) {
      if (nl == std::string_view::npos) break;
      continue;
    }
    if (line.front() == '#') {
      parse_comment(line.substr(1), line_no, meta, labels);
    } else {
      const auto tokens = split_ws(line);
      if (tokens.size() != 2) throw ParseError(line_no, "expected two integers");
      if (!n) {
        n = parse_count(tokens[0], line_no, "vertex count");
        declared_m = parse_count(tokens[1], line_no, "edge count");
      } else {
        if (edges.size() == declared_m) throw ParseError(line_no, "more edges than declared");
        const std::size_t u = parse_count(tokens[0], line_no, "endpoint");
        const std::size_t v = parse_count(tokens[1], line_no, "endpoint");
        if (u >= *n || v >= *n) throw ParseError(line_no, "vertex out of range");
        if (u == v) throw ParseError(line_no, "self-loop");
        edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
      }
    }
    if (nl == std::string_view::npos) break;
  }

  if (!n) throw ParseError(line_no, "missing 'n m' header");
  if (edges.size() != declared_m) {
    throw ParseError(line_no, "expected " + std::to_string(declared_m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  if (!labels.empty()) {
    meta.labels.assign(*n, std::string());
    for (auto& [v, name] : labels) {
      if (v >= *n) throw ParseError(0, "label for vertex out of range");
      meta.labels[v] = std::move(name);
    }
  }
  return EdgeListDocument{Graph::build(*n, edges), std::move(meta)};
}

EdgeListDocument read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list(std::ostream& out, const Graph& g, const EdgeListMetadata& meta) {
  if (meta.family) out << "# family: " << to_string(*meta.family) << '\n';
  for (std::size_t v = 0; v < meta.labels.size(); ++v) {
    if (!meta.labels[v].empty()) out << "# label " << v << ' ' << meta.labels[v] << '\n';
  }
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g, const EdgeListMetadata& meta) {
  std::ostringstream out;
  write_edge_list(out, g, meta);
  return out.str();
}

void write_edge_list_file(const std::string& path, const Graph& g, const EdgeListMetadata& meta) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_edge_list(out, g, meta);
}

}  // namespace idim
