#include "spinal/plumbing.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "spinal/errors.hpp"
#include "spinal/normal_form.hpp"

namespace spinal {
namespace {

int sign_power(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::optional<std::size_t> PlumbingGraph::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return i;
  return std::nullopt;
}

std::string PlumbingGraph::summary() const {
  std::ostringstream os;
  os << "n=" << dimension << " V=" << vertices.size() << " E=" << edges.size();
  return os.str();
}

std::vector<std::string> validate(const PlumbingGraph& graph) {
  std::vector<std::string> errors;
  if (graph.dimension < 1) errors.push_back("dimension must be at least 1");
  if (graph.vertices.empty()) errors.push_back("empty vertex list");

  std::set<std::string> seen;
  for (const auto& v : graph.vertices) {
    if (v.empty()) errors.push_back("empty vertex label");
    if (!seen.insert(v).second) errors.push_back("duplicate vertex label '" + v + "'");
  }

  const std::size_t n = graph.vertices.size();
  bool endpoints_ok = true;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto& edge = graph.edges[e];
    if (edge.a >= n || edge.b >= n) {
      errors.push_back("edge " + std::to_string(e) + " references an unknown vertex");
      endpoints_ok = false;
      continue;
    }
    if (edge.a == edge.b)
      errors.push_back("self-loop at vertex '" + graph.vertices[edge.a] + "'");
    if (edge.sign != 1 && edge.sign != -1)
      errors.push_back("edge " + std::to_string(e) + " has sign other than 1 or -1");
  }

  if (n > 0 && endpoints_ok) {
    DisjointSets sets(n);
    for (const auto& edge : graph.edges) sets.unite(edge.a, edge.b);
    const std::size_t root = sets.find(0);
    for (std::size_t i = 1; i < n; ++i) {
      if (sets.find(i) != root) {
        errors.push_back("disconnected: vertex '" + graph.vertices[i] +
                         "' is not reachable from '" + graph.vertices[0] + "'");
        break;
      }
    }
  }

  if (!graph.h1_action.empty()) {
    if (graph.dimension != 1) {
      errors.push_back("h1_action is only supported for dimension 1");
    } else {
      const std::size_t h1 = graph.edges.size() + 1;
      for (const auto& [label, m] : graph.h1_action) {
        if (!graph.index_of(label)) {
          errors.push_back("h1_action names unknown vertex '" + label + "'");
        } else if (m.rows() != h1 || m.cols() != h1) {
          errors.push_back("h1_action for '" + label + "' must be " + std::to_string(h1) +
                           "x" + std::to_string(h1));
        } else if (!is_unimodular(m)) {
          errors.push_back("h1_action for '" + label + "' is not unimodular");
        }
      }
    }
  }
  return errors;
}

void require_valid(const PlumbingGraph& graph) {
  const auto errors = validate(graph);
  if (errors.empty()) return;
  std::string msg = "invalid plumbing graph:";
  for (const auto& e : errors) msg += "\n  " + e;
  throw InputError(msg);
}

IntMatrix intersection_form(const PlumbingGraph& graph) {
  require_valid(graph);
  const long n = graph.dimension;
  if (n == 1) {
    throw InputError(
        "intersection form is not modelled for n = 1; use a preset or an h1_action graph");
  }
  const int orient = sign_power(n * (n + 1) / 2);
  const int symmetry = sign_power(n);
  const std::size_t v = graph.vertices.size();
  IntMatrix q(v, v);
  for (const auto& edge : graph.edges) {
    const std::size_t i = std::min(edge.a, edge.b);
    const std::size_t j = std::max(edge.a, edge.b);
    q(i, j) += orient * edge.sign;
  }
  for (std::size_t i = 0; i < v; ++i) {
    q(i, i) = orient * (1 + symmetry);
    for (std::size_t j = i + 1; j < v; ++j) q(j, i) = symmetry * q(i, j);
  }
  return q;
}

GradedGroup base_homology(const PlumbingGraph& graph) {
  require_valid(graph);
  const std::size_t v = graph.vertices.size();
  const std::size_t e = graph.edges.size();
  GradedGroup h;
  h.set(0, AbelianGroup::free(1));
  if (graph.dimension == 1) {
    h.set(1, AbelianGroup::free(e + 1));
    return h;
  }
  // Connected, so E >= V - 1.
  h.set(1, AbelianGroup::free(e + 1 - v));
  h.set(graph.dimension, AbelianGroup::free(v));
  return h;
}

long plumbing_euler_characteristic(const PlumbingGraph& graph) {
  const long v = static_cast<long>(graph.vertices.size());
  const long e = static_cast<long>(graph.edges.size());
  return v * (1 + sign_power(graph.dimension)) - e;
}

}  // namespace spinal
