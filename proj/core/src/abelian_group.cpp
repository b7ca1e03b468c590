#include "spinal/abelian_group.hpp"

#include <sstream>
#include <utility>

#include "spinal/errors.hpp"

namespace spinal {

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<Integer> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw InputError("AbelianGroup: invariant factor below 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw InputError("AbelianGroup: invariant factors do not form a divisibility chain");
  }
}

AbelianGroup AbelianGroup::from_smith_diagonal(const std::vector<Integer>& diagonal,
                                               std::size_t extra_free) {
  std::size_t rank = extra_free;
  std::vector<Integer> factors;
  for (const auto& d : diagonal) {
    if (d == 0) {
      ++rank;
    } else if (abs(d) >= 2) {
      factors.push_back(abs(d));
    }
  }
  return AbelianGroup(rank, std::move(factors));
}

Integer AbelianGroup::torsion_order() const {
  Integer order = 1;
  for (const auto& d : factors_) order *= d;
  return order;
}

AbelianGroup AbelianGroup::with_extra_free(std::size_t r) const {
  AbelianGroup g = *this;
  g.free_rank_ += r;
  return g;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ == 1) {
    os << 'Z';
    first = false;
  } else if (free_rank_ > 1) {
    os << "Z^" << free_rank_;
    first = false;
  }
  for (const auto& d : factors_) {
    if (!first) os << '+';
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

void GradedGroup::set(int degree, AbelianGroup g) {
  if (degree < 0) throw InputError("GradedGroup: negative degree");
  if (g.is_trivial()) {
    groups_.erase(degree);
  } else {
    groups_[degree] = std::move(g);
  }
}

AbelianGroup GradedGroup::at(int degree) const {
  auto it = groups_.find(degree);
  return it == groups_.end() ? AbelianGroup{} : it->second;
}

bool GradedGroup::is_free() const {
  for (const auto& [deg, g] : groups_)
    if (!g.is_free()) return false;
  return true;
}

long GradedGroup::euler_characteristic() const {
  long chi = 0;
  for (const auto& [deg, g] : groups_) {
    const long r = static_cast<long>(g.free_rank());
    chi += (deg % 2 == 0) ? r : -r;
  }
  return chi;
}

std::string GradedGroup::to_string() const {
  if (groups_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, g] : groups_) {
    if (!first) os << ' ';
    os << 'H' << deg << '=' << g.to_string();
    first = false;
  }
  return os.str();
}

}  // namespace spinal
