#include <string>

#include "spinal/errors.hpp"
#include "spinal/twist.hpp"

namespace spinal {
namespace {

PlumbingGraph two_spheres(int dimension, int points) {
  PlumbingGraph g;
  g.dimension = dimension;
  g.vertices = {"L1", "L2"};
  for (int i = 0; i < points; ++i) g.edges.push_back({0, 1, 1});
  return g;
}

// Twist along L1 on H_1 = Z^4 in the basis [L1], [L2] and the two arc cycles.
IntMatrix n1_twist_l1() {
  return IntMatrix{{1, -3, -1, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"a2-3pt-n3", "a2-3pt-n2", "a2-3pt-n1",
                                                 "a2-1pt-n3", "a2-1pt-n5"};
  return names;
}

PlumbingGraph preset_graph(std::string_view name) {
  if (name == "a2-3pt-n3") return two_spheres(3, 3);
  if (name == "a2-3pt-n2") return two_spheres(2, 3);
  if (name == "a2-3pt-n1") {
    PlumbingGraph g = two_spheres(1, 3);
    g.h1_action.emplace("L1", n1_twist_l1());
    return g;
  }
  if (name == "a2-1pt-n3") return two_spheres(3, 1);
  if (name == "a2-1pt-n5") return two_spheres(5, 1);
  throw InputError("unknown preset '" + std::string(name) + "'");
}

std::pair<PlumbingGraph, GradedAction> preset_action(std::string_view name) {
  if (name == "a2-3pt-n1-t1") {
    PlumbingGraph g = preset_graph("a2-3pt-n1");
    GradedAction action;
    action.set(1, n1_twist_l1());
    return {std::move(g), std::move(action)};
  }
  throw InputError("unknown preset action '" + std::string(name) + "'");
}

}  // namespace spinal
