#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "spinal/abelian_group.hpp"
#include "spinal/twist.hpp"

namespace spinal {

/// Degree-wise square matrices with no invertibility requirement. The cone
/// construction is defined for any self-map, e.g. a degree-d map of a circle.
class GradedEndomorphism {
 public:
  GradedEndomorphism() = default;
  GradedEndomorphism(const GradedAction& action);  // NOLINT(google-explicit-constructor)

  /// Throws InputError unless `m` is square.
  void set(int degree, IntMatrix m);
  const std::map<int, IntMatrix>& degrees() const noexcept { return maps_; }
  /// Identity of the given rank when unset; InputError on a size mismatch.
  IntMatrix matrix(int degree, std::size_t rank) const;

 private:
  std::map<int, IntMatrix> maps_;
};

/// Homology-level monodromy of a V-bundle over the genus-g surface with one
/// boundary component: actions for the free generators a_1, b_1, ..., a_g, b_g.
struct Representation {
  int genus = 1;
  std::vector<GradedAction> assignments;
};

struct WangDegree {
  AbelianGroup cokernel;
  std::size_t kernel_rank = 0;

  friend bool operator==(const WangDegree&, const WangDegree&) = default;
};

/// Cokernel and kernel of D_k = [phi^1_k - Id | ... | phi^m_k - Id] in every
/// degree where the base is nontrivial.
struct WangPieces {
  std::map<int, WangDegree> degrees;

  friend bool operator==(const WangPieces&, const WangPieces&) = default;
};

/// Pieces of the cone of  C(V)^m --(phi^i - Id)--> C(V). Requires a free base
/// and at least one monodromy.
WangPieces wang_pieces(const GradedGroup& base, std::span<const GradedEndomorphism> monodromies);
WangPieces wang_pieces(const GradedGroup& base, std::span<const GradedAction> monodromies);

/// H_k = coker_k + Z^{ker_{k-1}}. The sequence
///   0 -> coker_k -> H_k(E) -> ker_{k-1} -> 0
/// splits because the kernel of a map between free groups is free.
GradedGroup assemble_homology(const WangPieces& pieces);

/// Homology of the mapping torus V_phi.
GradedGroup mapping_torus_homology(const GradedGroup& base, const GradedEndomorphism& phi);

/// Homology of the V-bundle over Sigma_{g,1}, computed over the homotopy
/// equivalent wedge of 2g circles.
GradedGroup surface_bundle_homology(const GradedGroup& base, const Representation& rep);

struct BoundaryCheck {
  bool ok = true;
  /// prod_i [A_i, B_i] with [A, B] = A B A^{-1} B^{-1}.
  GradedAction product;
};

/// Checks that the boundary loop acts trivially on homology. This is a
/// necessary condition only; it says nothing about the symplectic isotopy
/// class of the boundary monodromy.
BoundaryCheck boundary_check(const Representation& rep);

}  // namespace spinal
