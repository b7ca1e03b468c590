#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spinal/abelian_group.hpp"
#include "spinal/plumbing.hpp"
#include "spinal/twist.hpp"

namespace spinal {

/// One member E_k of the filling family: the V-bundle over Sigma_{1,1}
/// with monodromy (phi^k, Id).
struct FillingEntry {
  std::uint64_t k = 0;
  GradedGroup homology;
  /// Invariant factors of the torsion of H_d(E_k), d the distinguished degree.
  std::vector<Integer> torsion_factors;
  /// |torsion of H_d(E_k)|.
  Integer torsion_order = 1;
  /// |torsion of coker(phi^k_* - Id) on H_d(V)|, the lower bound available
  /// without resolving the extension.
  Integer cokernel_torsion_bound = 1;
  bool trivial_torsion = true;
  std::size_t class_id = 0;  ///< 1-based, numbered by first occurrence
};

struct FillingReport {
  std::string graph_summary;
  std::string word;
  std::uint64_t k_max = 0;
  /// Degree of V's homology carrying the twist action; its cokernel
  /// torsion lands in this degree of E_k (cone orientation). Indexing that
  /// puts the kernel first shifts the same torsion to degree d + 1.
  int distinguished_degree = 0;
  std::vector<FillingEntry> entries;
  std::size_t distinct_classes = 0;
};

/// Builds E_k for k = 1..k_max and classifies them by graded homology.
/// Throws InputError for k_max = 0; throws InvariantViolation if a
/// representation fails its boundary check.
FillingReport filling_family(const PlumbingGraph& graph, const GradedAction& phi,
                             std::string word_label, std::uint64_t k_max);
FillingReport filling_family(const PlumbingGraph& graph, const TwistWord& word,
                             std::uint64_t k_max);

/// |det(M^k - I)| = |2 - tr(M^k)| for a 2x2 matrix of determinant 1, with
/// tr(M^k) from t_k = tr(M) t_{k-1} - t_{k-2}, t_0 = 2, t_1 = tr(M).
Integer torsion_closed_form(const IntMatrix& action, std::uint64_t k);

/// Class ids (1-based, by first occurrence) under exact graded equality.
std::vector<std::size_t> classify_distinct(std::span<const GradedGroup> groups);

}  // namespace spinal
