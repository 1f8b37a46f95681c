#ifndef QMOM_QUIVER_HPP
#define QMOM_QUIVER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmom/rational.hpp"

namespace qmom {

struct Arrow {
  std::string id;
  std::string src;
  std::string tgt;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Finite directed multigraph. Loops and parallel arrows are allowed.
// Declaration order of vertices and arrows is significant: every tie in the
// algorithms below is broken by it, so results are reproducible.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

struct DimensionVector {
  std::map<std::string, int> dims;
};

struct Weight {
  std::map<std::string, Rational> theta;
};

// Non-empty arrow sequence with t(arrow[k]) == s(arrow[k+1]).
struct Path {
  std::vector<std::string> arrows;
};

// Checks every structural invariant of the triple and returns one
// human-readable line per violation. Valid input yields an empty list.
std::vector<std::string> validate(const Quiver& q, const DimensionVector& d,
                                  const Weight& theta);

// Quiver + dimension vector only (weight checks skipped).
std::vector<std::string> validate(const Quiver& q, const DimensionVector& d);

// DFS in declaration order. Returns a simple cycle (no repeated intermediate
// vertex, start vertex == end vertex) if one exists.
std::optional<Path> find_cycle(const Quiver& q);

bool is_acyclic(const Quiver& q);

// Full subquiver on the vertices with d_a > 0. Arrows survive iff both
// endpoints do. Idempotent.
Quiver support_subquiver(const Quiver& q, const DimensionVector& d);

DimensionVector restrict_dims(const DimensionVector& d, const Quiver& sub);
Weight restrict_weight(const Weight& theta, const Quiver& sub);

// First arrow in declaration order whose source vertex is the target of no
// arrow. Such an arrow exists in every acyclic quiver with at least one arrow;
// throws Kind::domain when the quiver is cyclic or has no arrows.
std::string find_source_arrow(const Quiver& q);

// Source vertex of path.arrows.front() and the vertex sequence it visits.
std::vector<std::string> path_vertices(const Quiver& q, const Path& path);

} // namespace qmom

#endif
