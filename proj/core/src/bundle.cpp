#include "spinal/bundle.hpp"

#include <string>

#include "spinal/errors.hpp"
#include "spinal/normal_form.hpp"

namespace spinal {
namespace {

void require_compatible(const GradedGroup& base, const GradedEndomorphism& action) {
  for (const auto& [deg, m] : action.degrees()) {
    if (m.rows() != base.rank(deg))
      throw InputError("monodromy degree " + std::to_string(deg) + " matrix is " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                       " but the base has rank " + std::to_string(base.rank(deg)));
  }
}

void require_representation_shape(const Representation& rep) {
  if (rep.genus < 1) throw InputError("representation: genus must be at least 1");
  if (rep.assignments.size() != 2 * static_cast<std::size_t>(rep.genus))
    throw InputError("representation: expected " + std::to_string(2 * rep.genus) +
                     " assignments, got " + std::to_string(rep.assignments.size()));
}

}  // namespace

GradedEndomorphism::GradedEndomorphism(const GradedAction& action) : maps_(action.degrees()) {}

void GradedEndomorphism::set(int degree, IntMatrix m) {
  if (degree < 0) throw InputError("GradedEndomorphism: negative degree");
  if (!m.is_square()) throw InputError("GradedEndomorphism: matrix is not square");
  maps_[degree] = std::move(m);
}

IntMatrix GradedEndomorphism::matrix(int degree, std::size_t rank) const {
  auto it = maps_.find(degree);
  if (it == maps_.end()) return IntMatrix::identity(rank);
  if (it->second.rows() != rank)
    throw InputError("degree " + std::to_string(degree) + " matrix does not match base rank " +
                     std::to_string(rank));
  return it->second;
}

WangPieces wang_pieces(const GradedGroup& base, std::span<const GradedAction> monodromies) {
  const std::vector<GradedEndomorphism> maps(monodromies.begin(), monodromies.end());
  return wang_pieces(base, std::span<const GradedEndomorphism>(maps));
}

WangPieces wang_pieces(const GradedGroup& base,
                       std::span<const GradedEndomorphism> monodromies) {
  if (monodromies.empty()) throw InputError("wang_pieces: at least one monodromy required");
  if (!base.is_free()) throw InputError("wang_pieces: base homology must be free");
  for (const auto& phi : monodromies) require_compatible(base, phi);

  WangPieces pieces;
  for (const auto& [deg, group] : base.degrees()) {
    const std::size_t r = group.free_rank();
    const IntMatrix id = IntMatrix::identity(r);
    std::vector<IntMatrix> blocks;
    blocks.reserve(monodromies.size());
    for (const auto& phi : monodromies) blocks.push_back(phi.matrix(deg, r) - id);
    const IntMatrix d = hconcat(blocks);
    pieces.degrees[deg] = WangDegree{cokernel_group(d), kernel_rank(d)};
  }

  // Monodromies preserve the basepoint component.
  if (auto it = pieces.degrees.find(0); it != pieces.degrees.end()) {
    if (!(it->second.cokernel == base.at(0)))
      throw InvariantViolation("monodromy acts nontrivially on H_0");
  }
  return pieces;
}

GradedGroup assemble_homology(const WangPieces& pieces) {
  std::map<int, AbelianGroup> out;
  for (const auto& [deg, piece] : pieces.degrees) {
    out[deg] = piece.cokernel.with_extra_free(out[deg].free_rank());
    out[deg + 1] = out[deg + 1].with_extra_free(piece.kernel_rank);
  }
  GradedGroup h;
  for (auto& [deg, g] : out) h.set(deg, std::move(g));
  return h;
}

GradedGroup mapping_torus_homology(const GradedGroup& base, const GradedEndomorphism& phi) {
  return assemble_homology(wang_pieces(base, std::span<const GradedEndomorphism>(&phi, 1)));
}

GradedGroup surface_bundle_homology(const GradedGroup& base, const Representation& rep) {
  require_representation_shape(rep);
  return assemble_homology(wang_pieces(base, std::span<const GradedAction>(rep.assignments)));
}

BoundaryCheck boundary_check(const Representation& rep) {
  require_representation_shape(rep);
  GradedAction product;
  for (int i = 0; i < rep.genus; ++i) {
    const GradedAction& a = rep.assignments[2 * i];
    const GradedAction& b = rep.assignments[2 * i + 1];
    const GradedAction commutator = compose(compose(a, b), compose(inverse(a), inverse(b)));
    product = compose(product, commutator);
  }
  BoundaryCheck check;
  check.ok = product.is_identity();
  check.product = std::move(product);
  return check;
}

}  // namespace spinal
