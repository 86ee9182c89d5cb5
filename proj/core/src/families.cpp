#include "idim/families.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "idim/error.hpp"

namespace idim {

namespace {

struct NameEntry {
  std::string_view name;
  Family family;
};

constexpr std::array kNames{
    NameEntry{"path", Family::path},
    NameEntry{"cycle", Family::cycle},
    NameEntry{"complete", Family::complete},
    NameEntry{"complete_bipartite", Family::complete_bipartite},
    NameEntry{"kbip", Family::complete_bipartite},
    NameEntry{"grn", Family::g_rn},
    NameEntry{"G_rn", Family::g_rn},
    NameEntry{"gprime", Family::gprime_rn},
    NameEntry{"Gprime_rn", Family::gprime_rn},
};

[[noreturn]] void invalid() { throw Error("family parameters invalid"); }

Vertex vx(std::size_t i) { return static_cast<Vertex>(i); }

void add_clique(std::vector<Edge>& edges, std::size_t first, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) edges.push_back(Edge{vx(first + i), vx(first + j)});
  }
}

std::vector<std::string> numbered(std::string_view prefix, std::size_t from, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::string(prefix) + std::to_string(from + i));
  return out;
}

}  // namespace

std::optional<Family> parse_family_name(std::string_view name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.family;
  }
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::g_rn: return "grn";
    case Family::gprime_rn: return "gprime";
  }
  return "?";
}

std::size_t family_arity(Family f) {
  switch (f) {
    case Family::path:
    case Family::cycle:
    case Family::complete: return 1;
    case Family::complete_bipartite:
    case Family::g_rn:
    case Family::gprime_rn: return 2;
  }
  return 0;
}

std::string to_string(const FamilySpec& spec) {
  std::string out(family_name(spec.family));
  for (std::size_t p : spec.params) out += " " + std::to_string(p);
  return out;
}

std::optional<FamilySpec> parse_family_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string name;
  if (!(in >> name)) return std::nullopt;
  auto family = parse_family_name(name);
  if (!family) return std::nullopt;
  FamilySpec spec{*family, {}};
  std::string token;
  while (in >> token) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    spec.params.push_back(value);
  }
  if (spec.params.size() != family_arity(*family)) return std::nullopt;
  return spec;
}

FamilyGraph generate_family(const FamilySpec& spec) {
  if (spec.params.size() != family_arity(spec.family)) invalid();
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::size_t n = 0;

  switch (spec.family) {
    case Family::path: {
      n = spec.params[0];
      if (n < 1) invalid();
      for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back(Edge{vx(i), vx(i + 1)});
      labels = numbered("v", 0, n);
      break;
    }
    case Family::cycle: {
      n = spec.params[0];
      if (n < 3) invalid();
      for (std::size_t i = 0; i < n; ++i) edges.push_back(make_edge(vx(i), vx((i + 1) % n)));
      labels = numbered("v", 0, n);
      break;
    }
    case Family::complete: {
      n = spec.params[0];
      if (n < 1) invalid();
      add_clique(edges, 0, n);
      labels = numbered("v", 0, n);
      break;
    }
    case Family::complete_bipartite: {
      const std::size_t r = spec.params[0];
      const std::size_t t = spec.params[1];
      if (r < 1 || t < 1) invalid();
      n = r + t;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < t; ++j) edges.push_back(Edge{vx(i), vx(r + j)});
      }
      labels = numbered("a", 1, r);
      for (auto& l : numbered("b", 1, t)) labels.push_back(std::move(l));
      break;
    }
    case Family::g_rn: {
      // u_1..u_r -> 0..r-1, v_1..v_r -> r..2r-1, w -> 2r
      const std::size_t r = spec.params[0];
      n = spec.params[1];
      if (n % 2 == 0 || r != n / 2 || r < 3) invalid();
      add_clique(edges, 0, r);
      for (std::size_t i = 0; i < r; ++i) edges.push_back(Edge{vx(i), vx(r + i)});
      edges.push_back(Edge{vx(r), vx(2 * r)});
      labels = numbered("u", 1, r);
      for (auto& l : numbered("v", 1, r)) labels.push_back(std::move(l));
      labels.emplace_back("w");
      break;
    }
    case Family::gprime_rn: {
      // u_1..u_r -> 0..r-1, v_1..v_{n-r} -> r..n-1
      const std::size_t r = spec.params[0];
      n = spec.params[1];
      if (r < 3 || 2 * r < n || r + 1 >= n) invalid();
      const std::size_t pendants = n - r - 1;
      const auto u = [](std::size_t i) { return vx(i - 1); };
      const auto v = [r](std::size_t i) { return vx(r + i - 1); };
      add_clique(edges, 0, r);
      for (std::size_t i = 1; i <= pendants; ++i) edges.push_back(Edge{u(i), v(i)});
      for (std::size_t i = n - r; i <= r; ++i) edges.push_back(Edge{u(i), v(n - r)});
      edges.push_back(Edge{v(1), v(2)});
      labels = numbered("u", 1, r);
      for (auto& l : numbered("v", 1, n - r)) labels.push_back(std::move(l));
      break;
    }
  }
  return FamilyGraph{spec, Graph::build(n, edges), std::move(labels)};
}

}  // namespace idim
