#include "spinal/distinguisher.hpp"

#include <algorithm>
#include <utility>

#include "spinal/bundle.hpp"
#include "spinal/errors.hpp"
#include "spinal/normal_form.hpp"

namespace spinal {

FillingReport filling_family(const PlumbingGraph& graph, const GradedAction& phi,
                             std::string word_label, std::uint64_t k_max) {
  if (k_max == 0) throw InputError("filling_family: k_max must be at least 1");
  const GradedGroup base = base_homology(graph);
  const int degree = twist_degree(graph);
  const std::size_t rank = base.rank(degree);

  FillingReport report;
  report.graph_summary = graph.summary();
  report.word = std::move(word_label);
  report.k_max = k_max;
  report.distinguished_degree = degree;

  std::vector<GradedGroup> homologies;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const GradedAction action = power(phi, static_cast<long>(k));
    const IntMatrix phi_k = action.matrix(degree, rank);

    Representation rep{1, {action, GradedAction{}}};
    if (!boundary_check(rep).ok)
      throw InvariantViolation("boundary check failed for (phi^k, Id)");

    FillingEntry entry;
    entry.k = k;
    entry.homology = surface_bundle_homology(base, rep);
    const AbelianGroup distinguished = entry.homology.at(degree);
    entry.torsion_factors = distinguished.invariant_factors();
    entry.torsion_order = distinguished.torsion_order();
    entry.cokernel_torsion_bound =
        cokernel_group(phi_k - IntMatrix::identity(rank)).torsion_order();
    entry.trivial_torsion = entry.torsion_factors.empty();
    homologies.push_back(entry.homology);
    report.entries.push_back(std::move(entry));
  }

  const auto classes = classify_distinct(homologies);
  for (std::size_t i = 0; i < classes.size(); ++i) report.entries[i].class_id = classes[i];
  report.distinct_classes = classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end());
  return report;
}

FillingReport filling_family(const PlumbingGraph& graph, const TwistWord& word,
                             std::uint64_t k_max) {
  return filling_family(graph, word_action(graph, word), word.to_string(), k_max);
}

Integer torsion_closed_form(const IntMatrix& action, std::uint64_t k) {
  if (action.rows() != 2 || action.cols() != 2)
    throw InputError("torsion_closed_form: expected a 2x2 matrix");
  if (det(action) != 1) throw InputError("torsion_closed_form: determinant must be 1");
  const Integer trace = action(0, 0) + action(1, 1);
  Integer prev = 2;      // t_0
  Integer cur = trace;   // t_1
  if (k == 0) cur = prev;
  for (std::uint64_t i = 2; i <= k; ++i) {
    Integer next = trace * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return abs(Integer(2 - cur));
}

std::vector<std::size_t> classify_distinct(std::span<const GradedGroup> groups) {
  std::vector<std::size_t> ids(groups.size());
  std::vector<std::size_t> representatives;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::size_t id = 0;
    for (std::size_t c = 0; c < representatives.size(); ++c) {
      if (groups[representatives[c]] == groups[i]) {
        id = c + 1;
        break;
      }
    }
    if (id == 0) {
      representatives.push_back(i);
      id = representatives.size();
    }
    ids[i] = id;
  }
  return ids;
}

}  // namespace spinal
