#include "spinal/twist.hpp"

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <sstream>

#include "spinal/errors.hpp"
#include "spinal/normal_form.hpp"

namespace spinal {

void GradedAction::set(int degree, IntMatrix m) {
  if (degree < 0) throw InputError("GradedAction: negative degree");
  if (!m.is_square()) throw InputError("GradedAction: matrix is not square");
  if (!is_unimodular(m))
    throw InputError("GradedAction: degree " + std::to_string(degree) +
                     " matrix is not unimodular");
  maps_[degree] = std::move(m);
}

IntMatrix GradedAction::matrix(int degree, std::size_t rank) const {
  auto it = maps_.find(degree);
  if (it == maps_.end()) return IntMatrix::identity(rank);
  if (it->second.rows() != rank)
    throw InputError("GradedAction: degree " + std::to_string(degree) + " matrix is " +
                     std::to_string(it->second.rows()) + "x" +
                     std::to_string(it->second.rows()) + " but the base has rank " +
                     std::to_string(rank));
  return it->second;
}

bool GradedAction::is_identity() const {
  for (const auto& [deg, m] : maps_)
    if (!m.is_identity()) return false;
  return true;
}

GradedAction compose(const GradedAction& outer, const GradedAction& inner) {
  GradedAction out = inner;
  for (const auto& [deg, m] : outer.degrees()) {
    auto it = inner.degrees().find(deg);
    out.set(deg, it == inner.degrees().end() ? m : mat_mul(m, it->second));
  }
  return out;
}

GradedAction inverse(const GradedAction& a) {
  GradedAction out;
  for (const auto& [deg, m] : a.degrees()) out.set(deg, unimodular_inverse(m));
  return out;
}

GradedAction power(const GradedAction& a, long k) {
  const GradedAction base = k < 0 ? inverse(a) : a;
  const auto exponent = static_cast<std::uint64_t>(k < 0 ? -k : k);
  GradedAction out;
  for (const auto& [deg, m] : base.degrees()) out.set(deg, mat_pow(m, exponent));
  return out;
}

bool same_action(const GradedAction& a, const GradedAction& b) {
  for (const auto& [deg, m] : a.degrees()) {
    auto it = b.degrees().find(deg);
    if (it == b.degrees().end() ? !m.is_identity() : !(m == it->second)) return false;
  }
  for (const auto& [deg, m] : b.degrees())
    if (!a.degrees().contains(deg) && !m.is_identity()) return false;
  return true;
}

std::string TwistWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ' ';
    os << letters[i].vertex;
    if (letters[i].exponent != 1) os << '^' << letters[i].exponent;
  }
  return os.str();
}

namespace {

std::string resolve_label(std::string_view token, const PlumbingGraph& graph) {
  if (graph.index_of(token)) return std::string(token);
  if (token.size() >= 2 && token[0] == 't') {
    std::size_t idx = 0;
    auto digits = token.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && idx >= 1 &&
        idx <= graph.vertices.size())
      return graph.vertices[idx - 1];
  }
  throw InputError("twist word: unknown vertex '" + std::string(token) + "'");
}

}  // namespace

TwistWord parse_word(std::string_view text, const PlumbingGraph& graph) {
  TwistWord word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    TwistLetter letter;
    std::string_view label = token;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      label = std::string_view(token).substr(0, caret);
      std::string_view exp = std::string_view(token).substr(caret + 1);
      if (!exp.empty() && exp.front() == '+') exp.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), letter.exponent);
      if (exp.empty() || ec != std::errc{} || ptr != exp.data() + exp.size())
        throw InputError("twist word: bad exponent in '" + token + "'");
      if (letter.exponent == 0) throw InputError("twist word: zero exponent in '" + token + "'");
    }
    if (label.empty()) throw InputError("twist word: missing label in '" + token + "'");
    letter.vertex = resolve_label(label, graph);
    word.letters.push_back(std::move(letter));
  }
  return word;
}

int twist_degree(const PlumbingGraph& graph) { return graph.dimension; }

GradedAction twist_matrix(const PlumbingGraph& graph, std::string_view vertex) {
  require_valid(graph);
  const auto target = graph.index_of(vertex);
  if (!target) throw InputError("twist: unknown vertex '" + std::string(vertex) + "'");

  GradedAction action;
  const long n = graph.dimension;
  if (n == 1) {
    auto it = graph.h1_action.find(std::string(vertex));
    if (it == graph.h1_action.end())
      throw InputError("twist: n = 1 actions come from a preset or the graph's h1_action; none for '" +
                       std::string(vertex) + "'");
    action.set(1, it->second);
    return action;
  }

  const IntMatrix q = intersection_form(graph);
  const int sign = ((n + 1) * (n + 2) / 2) % 2 == 0 ? 1 : -1;
  const std::size_t v = graph.vertices.size();
  IntMatrix t = IntMatrix::identity(v);
  for (std::size_t i = 0; i < v; ++i) t(*target, i) += sign * q(i, *target);
  action.set(static_cast<int>(n), std::move(t));
  return action;
}

GradedAction word_action(const PlumbingGraph& graph, const TwistWord& word) {
  require_valid(graph);
  const int degree = twist_degree(graph);
  const std::size_t rank = base_homology(graph).rank(degree);
  IntMatrix product = IntMatrix::identity(rank);
  for (const auto& letter : word.letters) {
    const GradedAction twist = power(twist_matrix(graph, letter.vertex), letter.exponent);
    product = mat_mul(product, twist.matrix(degree, rank));
  }
  GradedAction out;
  out.set(degree, std::move(product));
  return out;
}

}  // namespace spinal
