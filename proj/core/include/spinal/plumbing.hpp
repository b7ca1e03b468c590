#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinal/abelian_group.hpp"
#include "spinal/int_matrix.hpp"

namespace spinal {

struct PlumbingEdge {
  std::size_t a = 0;  ///< vertex index
  std::size_t b = 0;  ///< vertex index
  int sign = 1;       ///< +1 or -1

  friend bool operator==(const PlumbingEdge&, const PlumbingEdge&) = default;
};

/// Plumbing of disk cotangent bundles T*S^n. Each vertex is a Lagrangian
/// sphere; each edge is one plumbing point (multi-edges allowed).
///
/// Vertex declaration order fixes the basis of H_n used by every matrix
/// downstream.
struct PlumbingGraph {
  int dimension = 2;
  std::vector<std::string> vertices;
  std::vector<PlumbingEdge> edges;
  /// Only meaningful for dimension 1: user-supplied action of the twist
  /// along each listed vertex on H_1 (basis as chosen by the supplier).
  std::map<std::string, IntMatrix> h1_action;

  std::optional<std::size_t> index_of(std::string_view label) const;
  std::size_t vertex_count() const noexcept { return vertices.size(); }
  std::size_t edge_count() const noexcept { return edges.size(); }

  /// "n=3 V=2 E=3"
  std::string summary() const;

  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;
};

/// Every violated invariant, one message each; empty when the graph is valid.
std::vector<std::string> validate(const PlumbingGraph& graph);

/// Throws InputError listing every violation.
void require_valid(const PlumbingGraph& graph);

/// Intersection pairing on H_n in the vertex basis, oriented so that
/// <L_i, L_j> = (-1)^{n(n+1)/2} * (signed edge count) for i < j and
/// Q^T = (-1)^n Q. Self-intersection is (-1)^{n(n+1)/2} (1 + (-1)^n).
/// Rejects n = 1 (no middle-dimensional form is modelled there).
IntMatrix intersection_form(const PlumbingGraph& graph);

/// Homology of the plumbing, which is homotopic to a wedge of V n-spheres
/// and E - V + 1 circles (for n = 1: a graph with E + 1 independent loops).
GradedGroup base_homology(const PlumbingGraph& graph);

/// Euler characteristic V (1 + (-1)^n) - E of spheres glued at E points.
long plumbing_euler_characteristic(const PlumbingGraph& graph);

/// Graph file reader and writer. Format:
///   {"dimension": 3, "vertices": ["L1","L2"],
///    "edges": [{"between": ["L1","L2"], "sign": 1}, ...],
///    "h1_action": {"L1": [[...], ...]}}      (optional, n = 1 only)
/// Unknown keys are rejected; sign defaults to 1.
PlumbingGraph parse_graph(std::string_view json_text);
PlumbingGraph load_graph_file(const std::string& path);
std::string emit_graph(const PlumbingGraph& graph);

}  // namespace spinal
