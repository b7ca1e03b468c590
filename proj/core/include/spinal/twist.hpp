#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinal/int_matrix.hpp"
#include "spinal/plumbing.hpp"

namespace spinal {

/// Homology action of a mapping class, one unimodular matrix per degree.
/// Degrees that are not stored act as the identity.
class GradedAction {
 public:
  GradedAction() = default;

  /// Throws InputError unless `m` is square and unimodular.
  void set(int degree, IntMatrix m);

  const std::map<int, IntMatrix>& degrees() const noexcept { return maps_; }

  /// Matrix in `degree` for a base of the given rank; identity if unset.
  /// Throws InputError when a stored matrix has the wrong size.
  IntMatrix matrix(int degree, std::size_t rank) const;

  /// True when every stored matrix is an identity.
  bool is_identity() const;

  friend bool operator==(const GradedAction&, const GradedAction&) = default;

 private:
  std::map<int, IntMatrix> maps_;
};

/// outer ∘ inner, degree by degree.
GradedAction compose(const GradedAction& outer, const GradedAction& inner);
GradedAction inverse(const GradedAction& a);
/// a^k for any integer k (negative powers via the exact inverse).
GradedAction power(const GradedAction& a, long k);
/// Equality as actions: unset degrees compare as identities.
bool same_action(const GradedAction& a, const GradedAction& b);

struct TwistLetter {
  std::string vertex;
  long exponent = 1;

  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

/// Word in Dehn-Seidel twists. Composition reads like function notation:
/// "t1 t2" is tau_1 ∘ tau_2, so the rightmost letter acts first.
struct TwistWord {
  std::vector<TwistLetter> letters;

  bool empty() const noexcept { return letters.empty(); }
  std::string to_string() const;

  friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

/// Whitespace-separated tokens `label` or `label^e` (e a nonzero integer).
/// A token matches a vertex label exactly, or `t<i>` names the i-th vertex
/// (1-based) when no label equals the token.
TwistWord parse_word(std::string_view text, const PlumbingGraph& graph);

/// Picard-Lefschetz action of the twist along `vertex`:
///   c -> c + (-1)^{(n+1)(n+2)/2} <c, L> L   on H_n, identity elsewhere.
/// For n = 1 the matrix is taken from graph.h1_action.
GradedAction twist_matrix(const PlumbingGraph& graph, std::string_view vertex);

/// Product of the letters' actions; the result always stores the degree
/// carrying the twist action (n, or 1 when n = 1).
GradedAction word_action(const PlumbingGraph& graph, const TwistWord& word);

/// Degree in which twists act nontrivially.
int twist_degree(const PlumbingGraph& graph);

// Built-in objects.

/// Names accepted by preset_graph, in a fixed order.
const std::vector<std::string>& preset_names();

/// a2-3pt-n3, a2-3pt-n2, a2-3pt-n1, a2-1pt-n3, a2-1pt-n5: two spheres L1, L2
/// plumbed at three points (or one point) in the given dimension. The n = 1
/// preset carries the twist along L1 on H_1 = Z^4 as h1_action.
PlumbingGraph preset_graph(std::string_view name);

/// Named (graph, action) pairs. Currently only "a2-3pt-n1-t1".
std::pair<PlumbingGraph, GradedAction> preset_action(std::string_view name);

}  // namespace spinal
