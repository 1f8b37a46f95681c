#include "qmom/quiver.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "qmom/error.hpp"

namespace qmom {

namespace {

std::unordered_map<std::string, int> index_of(const std::vector<std::string>& ids) {
  std::unordered_map<std::string, int> m;
  m.reserve(ids.size());
  for (int i = 0; i < static_cast<int>(ids.size()); ++i)
    m.emplace(ids[i], i);
  return m;
}

} // namespace

std::vector<std::string> validate(const Quiver& q, const DimensionVector& d) {
  std::vector<std::string> out;

  if (q.vertices.empty())
    out.push_back("quiver has no vertices");

  std::set<std::string> seen;
  for (const auto& v : q.vertices)
    if (!seen.insert(v).second)
      out.push_back("duplicate vertex id \"" + v + "\"");

  std::set<std::string> arrow_seen;
  for (const auto& a : q.arrows) {
    if (!arrow_seen.insert(a.id).second)
      out.push_back("duplicate arrow id \"" + a.id + "\"");
    if (seen.count(a.id))
      out.push_back("arrow id \"" + a.id + "\" collides with a vertex id");
    if (!seen.count(a.src))
      out.push_back("arrow \"" + a.id + "\": source vertex \"" + a.src +
                    "\" is not declared");
    if (!seen.count(a.tgt))
      out.push_back("arrow \"" + a.id + "\": target vertex \"" + a.tgt +
                    "\" is not declared");
  }

  bool any_positive = false;
  for (const auto& v : q.vertices) {
    auto it = d.dims.find(v);
    if (it == d.dims.end()) {
      out.push_back("dimension vector has no entry for vertex \"" + v + "\"");
      continue;
    }
    if (it->second < 0)
      out.push_back("dimension at vertex \"" + v + "\" is negative");
    if (it->second > 0)
      any_positive = true;
  }
  for (const auto& [k, unused] : d.dims)
    if (!seen.count(k))
      out.push_back("dimension vector has an entry for unknown vertex \"" + k + "\"");
  if (!q.vertices.empty() && !any_positive)
    out.push_back("dimension vector is zero");

  return out;
}

std::vector<std::string> validate(const Quiver& q, const DimensionVector& d,
                                  const Weight& theta) {
  std::vector<std::string> out = validate(q, d);

  std::set<std::string> seen(q.vertices.begin(), q.vertices.end());
  for (const auto& v : q.vertices)
    if (!theta.theta.count(v))
      out.push_back("weight has no entry for vertex \"" + v + "\"");
  for (const auto& [k, unused] : theta.theta)
    if (!seen.count(k))
      out.push_back("weight has an entry for unknown vertex \"" + k + "\"");

  return out;
}

std::optional<Path> find_cycle(const Quiver& q) {
  const auto vidx = index_of(q.vertices);
  const int nv = static_cast<int>(q.vertices.size());

  // Out-arrows per vertex, in declaration order.
  std::vector<std::vector<int>> out(nv);
  for (int ai = 0; ai < static_cast<int>(q.arrows.size()); ++ai)
    out[vidx.at(q.arrows[ai].src)].push_back(ai);

  enum class Color { white, grey, black };
  std::vector<Color> color(nv, Color::white);

  // Iterative DFS keeping the arrow path to the current vertex. The DFS path
  // is vertex-simple, so a back edge closes a simple cycle.
  struct Frame {
    int vertex;
    std::size_t next = 0;
  };

  for (int start = 0; start < nv; ++start) {
    if (color[start] != Color::white)
      continue;
    std::vector<Frame> stack{{start}};
    std::vector<int> path_arrows;
    color[start] = Color::grey;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next < out[top.vertex].size()) {
        const int ai = out[top.vertex][top.next++];
        const int w = vidx.at(q.arrows[ai].tgt);
        if (color[w] == Color::grey) {
          // Cycle: the part of the path from w onward, plus this arrow.
          Path cyc;
          std::size_t k = 0;
          while (k < stack.size() && stack[k].vertex != w)
            ++k;
          for (std::size_t j = k; j + 1 < stack.size(); ++j)
            cyc.arrows.push_back(q.arrows[path_arrows[j]].id);
          cyc.arrows.push_back(q.arrows[ai].id);
          return cyc;
        }
        if (color[w] == Color::white) {
          color[w] = Color::grey;
          path_arrows.resize(stack.size() - 1);
          path_arrows.push_back(ai);
          stack.push_back({w});
        }
      } else {
        color[top.vertex] = Color::black;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

bool is_acyclic(const Quiver& q) { return !find_cycle(q).has_value(); }

Quiver support_subquiver(const Quiver& q, const DimensionVector& d) {
  Quiver sub;
  std::set<std::string> alive;
  for (const auto& v : q.vertices) {
    auto it = d.dims.find(v);
    if (it != d.dims.end() && it->second > 0) {
      sub.vertices.push_back(v);
      alive.insert(v);
    }
  }
  for (const auto& a : q.arrows)
    if (alive.count(a.src) && alive.count(a.tgt))
      sub.arrows.push_back(a);
  return sub;
}

DimensionVector restrict_dims(const DimensionVector& d, const Quiver& sub) {
  DimensionVector out;
  for (const auto& v : sub.vertices)
    out.dims[v] = d.dims.at(v);
  return out;
}

Weight restrict_weight(const Weight& theta, const Quiver& sub) {
  Weight out;
  for (const auto& v : sub.vertices)
    out.theta[v] = theta.theta.at(v);
  return out;
}

std::string find_source_arrow(const Quiver& q) {
  if (q.arrows.empty())
    throw Error(Error::Kind::domain, "quiver has no arrows");
  if (!is_acyclic(q))
    throw Error(Error::Kind::domain, "quiver has a cycle");

  std::set<std::string> targets;
  for (const auto& a : q.arrows)
    targets.insert(a.tgt);
  for (const auto& a : q.arrows)
    if (!targets.count(a.src))
      return a.id;
  // Unreachable for acyclic arrow-finite quivers (Kahn's argument).
  throw Error(Error::Kind::internal, "no source arrow found in acyclic quiver");
}

std::vector<std::string> path_vertices(const Quiver& q, const Path& path) {
  std::unordered_map<std::string, const Arrow*> by_id;
  for (const auto& a : q.arrows)
    by_id.emplace(a.id, &a);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < path.arrows.size(); ++i) {
    auto it = by_id.find(path.arrows[i]);
    if (it == by_id.end())
      throw Error(Error::Kind::domain,
                  "path arrow \"" + path.arrows[i] + "\" is not in the quiver");
    if (i == 0)
      out.push_back(it->second->src);
    else if (it->second->src != out.back())
      throw Error(Error::Kind::domain, "path arrows are not composable at \"" +
                                           path.arrows[i] + "\"");
    out.push_back(it->second->tgt);
  }
  return out;
}

} // namespace qmom
