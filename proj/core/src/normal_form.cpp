#include "spinal/normal_form.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "spinal/errors.hpp"

namespace spinal {
namespace {

int compare_abs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

struct Position {
  std::size_t row;
  std::size_t col;
};

// Least |entry| over the submatrix starting at (t, t); row-major scan keeps
// the lowest (row, col) among ties.
std::optional<Position> find_pivot(const IntMatrix& s, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t r = t; r < s.rows(); ++r) {
    for (std::size_t c = t; c < s.cols(); ++c) {
      const Integer& v = s(r, c);
      if (v == 0) continue;
      if (!best || compare_abs(v, s(best->row, best->col)) < 0) best = Position{r, c};
    }
  }
  return best;
}

// Clears row t and column t beyond the pivot using Euclidean steps. Returns
// false if a nonzero remainder was left behind.
bool eliminate_cross(IntMatrix& s, IntMatrix& u, IntMatrix& v, std::size_t t) {
  bool clean = true;
  const Integer pivot = s(t, t);
  for (std::size_t r = t + 1; r < s.rows(); ++r) {
    if (s(r, t) == 0) continue;
    Integer q = s(r, t) / pivot;
    if (q != 0) {
      Integer neg = -q;
      s.add_row_multiple(r, t, neg);
      u.add_row_multiple(r, t, neg);
    }
    if (s(r, t) != 0) clean = false;
  }
  for (std::size_t c = t + 1; c < s.cols(); ++c) {
    if (s(t, c) == 0) continue;
    Integer q = s(t, c) / pivot;
    if (q != 0) {
      Integer neg = -q;
      s.add_col_multiple(c, t, neg);
      v.add_col_multiple(c, t, neg);
    }
    if (s(t, c) != 0) clean = false;
  }
  return clean;
}

std::optional<std::size_t> row_with_nondivisible_entry(const IntMatrix& s, std::size_t t) {
  const Integer& pivot = s(t, t);
  for (std::size_t r = t + 1; r < s.rows(); ++r)
    for (std::size_t c = t + 1; c < s.cols(); ++c)
      if (s(r, c) % pivot != 0) return r;
  return std::nullopt;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t diag = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    bool done = false;
    while (!done) {
      auto pivot = find_pivot(s, t);
      if (!pivot) return {std::move(u), std::move(s), std::move(v)};
      s.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      s.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      if (!eliminate_cross(s, u, v, t)) continue;
      if (auto r = row_with_nondivisible_entry(s, t)) {
        s.add_row_multiple(t, *r, 1);
        u.add_row_multiple(t, *r, 1);
        continue;
      }
      done = true;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(s), std::move(v)};
}

std::vector<Integer> snf_diagonal(const SnfResult& r) {
  const std::size_t n = std::min(r.S.rows(), r.S.cols());
  std::vector<Integer> d;
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) d.push_back(r.S(i, i));
  return d;
}

Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw InputError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Integer result = a(n - 1, n - 1);
  return sign < 0 ? Integer(-result) : result;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        Integer num = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

AbelianGroup cokernel_group(const IntMatrix& m) {
  const auto diagonal = snf_diagonal(snf(m));
  // Rows past the diagonal are free summands of the cokernel.
  return AbelianGroup::from_smith_diagonal(diagonal, m.rows() - diagonal.size());
}

std::size_t kernel_rank(const IntMatrix& m) { return m.cols() - rank(m); }

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  return abs(det(m)) == 1;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw InputError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  IntMatrix inv = IntMatrix::identity(n);
  // Gauss-Jordan over Z with Euclidean column clearing; for a unimodular
  // matrix every pivot ends up a unit.
  for (std::size_t c = 0; c < n; ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t r = c; r < n; ++r)
        if (a(r, c) != 0 && (!best || compare_abs(a(r, c), a(*best, c)) < 0)) best = r;
      if (!best) throw InputError("inverse: matrix is singular");
      a.swap_rows(c, *best);
      inv.swap_rows(c, *best);
      bool cleared = true;
      for (std::size_t r = c + 1; r < n; ++r) {
        if (a(r, c) == 0) continue;
        Integer q = -(a(r, c) / a(c, c));
        a.add_row_multiple(r, c, q);
        inv.add_row_multiple(r, c, q);
        if (a(r, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (abs(a(c, c)) != 1) throw InputError("inverse: matrix is not unimodular");
    if (a(c, c) < 0) {
      a.negate_row(c);
      inv.negate_row(c);
    }
  }
  for (std::size_t c = n; c-- > 0;) {
    for (std::size_t r = 0; r < c; ++r) {
      if (a(r, c) == 0) continue;
      Integer q = -a(r, c);
      a.add_row_multiple(r, c, q);
      inv.add_row_multiple(r, c, q);
    }
  }
  return inv;
}

}  // namespace spinal
