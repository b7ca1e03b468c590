#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "spinal/int_matrix.hpp"

namespace spinal {

/// Finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_m with
/// d_1 | d_2 | ... | d_m and every d_i >= 2.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Throws InputError if the factors are not a divisibility chain of
  /// integers >= 2.
  AbelianGroup(std::size_t free_rank, std::vector<Integer> invariant_factors);

  static AbelianGroup free(std::size_t rank) { return AbelianGroup(rank, {}); }
  /// Builds the group presented by a Smith diagonal: 0 entries count as free
  /// summands, 1 entries are dropped. `extra_free` adds more free rank.
  static AbelianGroup from_smith_diagonal(const std::vector<Integer>& diagonal,
                                          std::size_t extra_free = 0);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const noexcept {
    return factors_;
  }
  bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
  bool is_free() const noexcept { return factors_.empty(); }
  /// Order of the torsion subgroup (1 when torsion-free).
  Integer torsion_order() const;

  AbelianGroup with_extra_free(std::size_t r) const;

  /// "Z^2+Z/3+Z/15", "Z", "0".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
};

/// Degree-indexed family of abelian groups; trivial degrees are not stored.
class GradedGroup {
 public:
  void set(int degree, AbelianGroup g);
  /// Trivial group for degrees that are not stored.
  AbelianGroup at(int degree) const;
  std::size_t rank(int degree) const { return at(degree).free_rank(); }
  const std::map<int, AbelianGroup>& degrees() const noexcept { return groups_; }
  bool empty() const noexcept { return groups_.empty(); }
  bool is_free() const;

  /// Alternating sum of free ranks.
  long euler_characteristic() const;

  /// "H0=Z H1=Z^2 H3=Z+Z/3"
  std::string to_string() const;

  friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

 private:
  std::map<int, AbelianGroup> groups_;
};

}  // namespace spinal
