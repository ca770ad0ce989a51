#include "omega6/plumbing.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace omega6 {

namespace {

[[noreturn]] void syntax_error(int line, const std::string& what) {
  fail(Errc::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

bool parse_int(const std::string& token, Int& out) {
  if (token.empty()) return false;
  std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  out = Int(token);
  return true;
}

}  // namespace

PlumbingGraph parse_plumbing(std::string_view text) {
  PlumbingGraph g;
  std::map<std::string, int> index;
  std::set<std::pair<int, int>> seen_edges;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string kind;
    if (!(line >> kind)) continue;

    if (kind == "v") {
      std::string id, weight_token, extra;
      if (!(line >> id >> weight_token) || (line >> extra))
        syntax_error(lineno, "expected 'v <id> <integer-weight>'");
      Int weight;
      if (!parse_int(weight_token, weight))
        syntax_error(lineno, "'" + weight_token + "' is not an integer weight");
      if (index.contains(id))
        fail(Errc::DuplicateVertex, "line " + std::to_string(lineno) + ": vertex '" + id +
                                        "' already declared");
      index.emplace(id, static_cast<int>(g.vertices.size()));
      g.vertices.push_back({id, std::move(weight)});
    } else if (kind == "e") {
      std::string a, b, extra;
      if (!(line >> a >> b) || (line >> extra)) syntax_error(lineno, "expected 'e <id> <id>'");
      auto ia = index.find(a);
      auto ib = index.find(b);
      if (ia == index.end() || ib == index.end())
        fail(Errc::UnknownVertex, "line " + std::to_string(lineno) + ": edge references '" +
                                      (ia == index.end() ? a : b) + "' before declaration");
      if (ia->second == ib->second)
        fail(Errc::SelfLoop, "line " + std::to_string(lineno) + ": self-loop on '" + a + "'");
      auto edge = std::minmax(ia->second, ib->second);
      if (!seen_edges.insert(edge).second)
        fail(Errc::DuplicateEdge, "line " + std::to_string(lineno) + ": duplicate edge '" + a +
                                      "' -- '" + b + "'");
      g.edges.emplace_back(edge.first, edge.second);
    } else {
      syntax_error(lineno, "unknown directive '" + kind + "'");
    }
  }
  return g;
}

IntMatrix form_from_plumbing(const PlumbingGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = g.vertices[i].weight;
  for (const auto& [a, b] : g.edges) {
    if (a < 0 || b >= n) fail(Errc::UnknownVertex, "edge index out of range");
    if (a == b) fail(Errc::SelfLoop, "self-loop in graph");
    m(a, b) = 1;
    m(b, a) = 1;
  }
  return m;
}

namespace {

// Star tree: center vertex "c", arms a/b/d with the given edge counts.
PlumbingGraph star_tree(const std::vector<int>& arms, const Int& weight) {
  PlumbingGraph g;
  g.vertices.push_back({"c", weight});
  const char* arm_names[] = {"a", "b", "d", "e"};
  for (std::size_t arm = 0; arm < arms.size(); ++arm) {
    int prev = 0;
    for (int k = 1; k <= arms[arm]; ++k) {
      const int cur = static_cast<int>(g.vertices.size());
      g.vertices.push_back({std::string(arm_names[arm]) + std::to_string(k), weight});
      g.edges.emplace_back(std::min(prev, cur), std::max(prev, cur));
      prev = cur;
    }
  }
  return g;
}

}  // namespace

PlumbingGraph e8_graph() { return star_tree({1, 2, 4}, 2); }

PlumbingGraph sigma237_graph() { return star_tree({1, 2, 6}, -2); }

}  // namespace omega6
