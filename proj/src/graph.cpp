#include "gaugecount/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "gaugecount/errors.hpp"

namespace gaugecount {

Multigraph::Multigraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), slots_(n) {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto& [u, v] = edges_[e];
    if (u >= n_ || v >= n_)
      throw InputError("edge " + std::to_string(e) + " (" + std::to_string(u) + "," +
                       std::to_string(v) + ") has an endpoint outside [0," +
                       std::to_string(n_) + ")");
    slots_[u].push_back(e);
    slots_[v].push_back(e);
  }
}

bool Multigraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

DegreeSequence degree_sequence(const Multigraph& g) {
  DegreeSequence d(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  return d;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(tok) + "'");
  return value;
}

}  // namespace

Multigraph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw InputError("line " + std::to_string(line_no) + ": expected two integers, got " +
                       std::to_string(toks.size()) + " fields");
    std::size_t a = parse_index(toks[0], line_no);
    std::size_t b = parse_index(toks[1], line_no);
    if (!header) {
      header.emplace(a, b);
      continue;
    }
    if (edges.size() == header->second)
      throw InputError("line " + std::to_string(line_no) + ": more edges than the declared " +
                       std::to_string(header->second));
    if (a >= header->first || b >= header->first)
      throw InputError("line " + std::to_string(line_no) + ": vertex index out of range [0," +
                       std::to_string(header->first) + ")");
    edges.push_back({a, b});
  }
  if (!header) throw InputError("line 1: missing 'n m' header");
  if (edges.size() != header->second)
    throw InputError("line " + std::to_string(line_no) + ": declared " +
                     std::to_string(header->second) + " edges but found " +
                     std::to_string(edges.size()));
  return Multigraph(header->first, std::move(edges));
}

std::string serialize(const Multigraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Multigraph parse_graph6(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.starts_with(">>")) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (!s.starts_with(kHeader)) throw InputError("graph6: unsupported header");
    s.remove_prefix(kHeader.size());
  }
  std::size_t i = 0;
  auto next = [&]() -> unsigned {
    if (i >= s.size()) throw InputError("graph6: truncated input");
    unsigned c = static_cast<unsigned char>(s[i++]);
    if (c < 63 || c > 126) throw InputError("graph6: byte out of range at offset " + std::to_string(i - 1));
    return c - 63;
  };
  std::size_t n = next();
  if (n == 63) {
    std::size_t bytes = 3;
    if (i < s.size() && s[i] == '~') {
      ++i;
      bytes = 6;
    }
    n = 0;
    for (std::size_t k = 0; k < bytes; ++k) n = (n << 6) | next();
  }
  std::vector<Edge> edges;
  unsigned chunk = 0;
  int remaining = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t a = 0; a < j; ++a) {
      if (remaining == 0) {
        chunk = next();
        remaining = 6;
      }
      --remaining;
      if ((chunk >> remaining) & 1u) edges.push_back({a, j});
    }
  }
  if (i != s.size()) throw InputError("graph6: trailing bytes");
  return Multigraph(n, std::move(edges));
}

Multigraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Multigraph(n, std::move(edges));
}

Multigraph cycle_graph(std::size_t n) {
  if (n == 0) throw InputError("cycle needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
  return Multigraph(n, std::move(edges));
}

Multigraph complete_bipartite(std::size_t a, std::size_t b) { return complete_multipartite({a, b}); }

Multigraph complete_multipartite(const std::vector<std::size_t>& parts) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < part_of.size(); ++u)
    for (Vertex v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) edges.push_back({u, v});
  return Multigraph(part_of.size(), std::move(edges));
}

Multigraph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (Vertex i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  for (Vertex i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  return Multigraph(10, std::move(edges));
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  std::vector<Edge> edges = a.edges();
  const std::size_t shift = a.vertex_count();
  for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Multigraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::size_t> parse_params(std::string_view text, std::string_view spec) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw InputError("invalid parameter in family '" + std::string(spec) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Multigraph generate_one(std::string_view spec) {
  const std::string name = lower(spec);
  if (name == "petersen") return petersen_graph();
  if (name == "octahedron") return complete_multipartite({2, 2, 2});

  std::string family;
  std::vector<std::size_t> params;
  if (auto colon = name.find(':'); colon != std::string::npos) {
    family = name.substr(0, colon);
    params = parse_params(std::string_view(name).substr(colon + 1), spec);
  } else if (name.size() > 1 && (name[0] == 'k' || name[0] == 'c')) {
    params = parse_params(std::string_view(name).substr(1), spec);
    if (name[0] == 'c')
      family = "cycle";
    else
      family = params.size() == 1 ? "complete" : "multipartite";
  } else {
    throw InputError("unknown graph family '" + std::string(spec) + "'");
  }

  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw InputError("family '" + std::string(spec) + "' expects " + std::to_string(count) +
                       " parameter(s)");
  };
  if (family == "complete") {
    need(1);
    if (params[0] == 0) throw InputError("complete graph needs n >= 1");
    return complete_graph(params[0]);
  }
  if (family == "cycle") {
    need(1);
    if (params[0] == 0) throw InputError("cycle needs n >= 1");
    return cycle_graph(params[0]);
  }
  if (family == "bipartite") {
    need(2);
    if (params[0] == 0 || params[1] == 0) throw InputError("bipartite parts must be non-empty");
    return complete_bipartite(params[0], params[1]);
  }
  if (family == "multipartite") {
    if (params.size() < 2) throw InputError("multipartite needs at least two parts");
    if (std::find(params.begin(), params.end(), 0u) != params.end())
      throw InputError("multipartite parts must be non-empty");
    return complete_multipartite(params);
  }
  throw InputError("unknown graph family '" + std::string(spec) + "'");
}

}  // namespace

Multigraph generate(std::string_view spec) {
  if (spec.empty()) throw InputError("empty family spec");
  Multigraph result;
  bool first = true;
  std::size_t pos = 0;
  while (true) {
    std::size_t plus = spec.find('+', pos);
    auto part = spec.substr(pos, plus == std::string_view::npos ? plus : plus - pos);
    Multigraph g = generate_one(part);
    result = first ? std::move(g) : disjoint_union(result, g);
    first = false;
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return result;
}

std::optional<unsigned> regular_degree(const Multigraph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  unsigned d = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

bool is_eulerian(const Multigraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

bool is_connected(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& e : g.edges()) {
    Vertex a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

bool is_closed_walk(const Multigraph& g, const ClosedWalk& walk) {
  if (walk.start >= g.vertex_count() || walk.edges.empty()) return false;
  Vertex at = walk.start;
  for (EdgeId e : walk.edges) {
    if (e >= g.edge_count()) return false;
    const Edge& edge = g.edge(e);
    if (edge.u == at)
      at = edge.v;
    else if (edge.v == at)
      at = edge.u;
    else
      return false;
  }
  return at == walk.start;
}

BipartiteCheck check_bipartite(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  BipartiteCheck result;
  result.side.assign(n, -1);
  std::vector<EdgeId> via(n, static_cast<EdgeId>(-1));  // BFS tree edge into v
  std::vector<Vertex> root_of(n, 0);

  // Path of tree edges from v up to its BFS root, listed from v upward.
  auto climb = [&](Vertex v) {
    std::vector<EdgeId> path;
    while (via[v] != static_cast<EdgeId>(-1)) {
      EdgeId e = via[v];
      path.push_back(e);
      const Edge& edge = g.edge(e);
      v = edge.u == v ? edge.v : edge.u;
    }
    return path;
  };

  for (Vertex s = 0; s < n; ++s) {
    if (result.side[s] != -1) continue;
    result.side[s] = 0;
    root_of[s] = s;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (EdgeId e : g.slots(x)) {
        const Edge& edge = g.edge(e);
        Vertex y = edge.u == x ? edge.v : edge.u;
        if (result.side[y] == -1) {
          result.side[y] = 1 - result.side[x];
          via[y] = e;
          root_of[y] = s;
          q.push(y);
        } else if (result.side[y] == result.side[x]) {
          // root -> x, edge e, y -> root is a closed walk of odd length.
          ClosedWalk walk;
          walk.start = s;
          auto up_x = climb(x);
          walk.edges.assign(up_x.rbegin(), up_x.rend());
          walk.edges.push_back(e);
          auto up_y = climb(y);
          walk.edges.insert(walk.edges.end(), up_y.begin(), up_y.end());
          result.bipartite = false;
          result.side.clear();
          result.odd_walk = std::move(walk);
          return result;
        }
      }
    }
  }
  return result;
}

std::string describe(const Multigraph& g) {
  std::map<unsigned, std::size_t> hist;
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++hist[g.degree(v)];
  std::ostringstream os;
  os << "n=" << g.vertex_count() << " m=" << g.edge_count() << " degrees=";
  bool first = true;
  for (const auto& [d, count] : hist) {
    if (!first) os << ',';
    os << d << '^' << count;
    first = false;
  }
  return os.str();
}

}  // namespace gaugecount
