#include "ordertype/linsolve.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "ordertype/error.hpp"

namespace otype {

std::size_t SparseRationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

std::vector<Rational> SparseRationalMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols()) throw SystemError("multiply: vector length does not match columns");
  std::vector<Rational> out(rows(), 0);
  for (std::size_t c = 0; c < cols(); ++c) {
    if (x[c] == 0) continue;
    for (const auto& [r, v] : columns[c]) out[r] += v * x[c];
  }
  return out;
}

std::vector<Rational> SparseRationalMatrix::left_multiply(std::span<const Rational> y) const {
  if (y.size() != rows()) throw SystemError("left_multiply: vector length does not match rows");
  std::vector<Rational> out(cols(), 0);
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : columns[c]) out[c] += y[r] * v;
  return out;
}

CsrMatrix SparseRationalMatrix::to_csr() const {
  std::vector<std::tuple<std::size_t, std::size_t, double>> t;
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : columns[c]) t.emplace_back(r, c, v.get_d());
  return CsrMatrix::from_triplets(rows(), cols(), std::move(t));
}

LinearSystem build_system(std::span<const CorpusColumn> corpus, GroupId target_id,
                          const ValuationVector& target, std::uint64_t target_multiplicity) {
  if (corpus.empty()) throw SystemError("corpus is empty");
  if (target_multiplicity == 0) throw SystemError("target multiplicity must be positive");
  std::set<GroupId> ids;
  std::set<ValuationKey> keys;
  for (const auto& col : corpus) {
    if (!ids.insert(col.id).second) throw SystemError("duplicate corpus id " + col.id.to_string());
    for (const auto& [key, k] : col.vector.entries()) keys.insert(key);
  }
  for (const auto& [key, k] : target.entries()) keys.insert(key);

  LinearSystem sys;
  sys.target = target_id;
  sys.target_multiplicity = target_multiplicity;
  auto& m = sys.matrix;
  m.row_index.assign(keys.begin(), keys.end());
  auto row_of = [&](const ValuationKey& key) {
    return static_cast<std::size_t>(std::lower_bound(m.row_index.begin(), m.row_index.end(), key) -
                                    m.row_index.begin());
  };
  for (const auto& col : corpus) {
    m.col_index.push_back(col.id);
    auto& column = m.columns.emplace_back();
    for (const auto& [key, k] : col.vector.entries()) column.emplace(row_of(key), Rational(k));
  }
  sys.rhs.assign(m.rows(), 0);
  const mpz_class t(std::to_string(target_multiplicity));
  for (const auto& [key, k] : target.entries()) sys.rhs[row_of(key)] = Rational(mpz_class(k) * t);
  return sys;
}

ScreenResult least_squares_screen(const LinearSystem& system, ScreenOptions options) {
  const CsrMatrix a = system.matrix.to_csr();
  const CsrMatrix at = a.transposed();
  const std::size_t m = a.rows, n = a.cols;
  const std::size_t budget = options.max_iterations ? options.max_iterations : 10 * (m + n);

  std::vector<double> b(m);
  for (std::size_t i = 0; i < m; ++i) b[i] = system.rhs[i].get_d();

  std::vector<double> x(n, 0.0), r = b, s(n), p(n), q(m);
  spmv(at, r, s);
  p = s;
  double gamma = dot(s, s);
  const double threshold = options.tolerance * std::max(std::sqrt(gamma), 1.0);

  ScreenResult result;
  result.converged = std::sqrt(gamma) <= threshold;
  while (!result.converged && result.iterations < budget) {
    spmv(a, p, q);
    const double delta = dot(q, q);
    if (delta == 0.0) break;
    const double alpha = gamma / delta;
    for (std::size_t j = 0; j < n; ++j) x[j] += alpha * p[j];
    for (std::size_t i = 0; i < m; ++i) r[i] -= alpha * q[i];
    spmv(at, r, s);
    const double next = dot(s, s);
    ++result.iterations;
    if (std::sqrt(next) <= threshold) {
      result.converged = true;
      break;
    }
    const double beta = next / gamma;
    for (std::size_t j = 0; j < n; ++j) p[j] = s[j] + beta * p[j];
    gamma = next;
  }

  // Recompute instead of trusting the recurrence.
  spmv(a, x, q);
  for (std::size_t i = 0; i < m; ++i) q[i] = b[i] - q[i];
  result.residual = norm2(q);
  return result;
}

namespace {

using SparseRow = std::map<std::size_t, Rational>;

struct WorkRow {
  SparseRow coeffs;
  Rational rhs;
  SparseRow combination;  // this row as a combination of the original rows
};

void axpy(SparseRow& dst, const SparseRow& src, const Rational& factor) {
  for (const auto& [k, v] : src) {
    auto [it, inserted] = dst.try_emplace(k, 0);
    it->second -= factor * v;
    if (it->second == 0) dst.erase(it);
  }
}

}  // namespace

ExactResult solve_exact(const LinearSystem& system) {
  const auto& mat = system.matrix;
  const std::size_t m = mat.rows(), n = mat.cols();

  std::vector<WorkRow> rows(m);
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& [r, v] : mat.columns[c]) rows[r].coeffs.emplace(c, v);
  for (std::size_t r = 0; r < m; ++r) {
    rows[r].rhs = system.rhs[r];
    rows[r].combination.emplace(r, 1);
  }

  std::vector<bool> used_row(m, false), used_col(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)

  for (;;) {
    std::vector<std::size_t> count(n, 0);
    for (std::size_t r = 0; r < m; ++r)
      if (!used_row[r])
        for (const auto& [c, v] : rows[r].coeffs) ++count[c];
    std::size_t col = n;
    for (std::size_t c = 0; c < n; ++c)
      if (!used_col[c] && count[c] > 0 && (col == n || count[c] < count[col])) col = c;
    if (col == n) break;

    std::size_t row = m;
    for (std::size_t r = 0; r < m && row == m; ++r)
      if (!used_row[r] && rows[r].coeffs.contains(col)) row = r;

    WorkRow& piv = rows[row];
    const Rational inv = 1 / piv.coeffs.at(col);
    for (auto& [c, v] : piv.coeffs) v *= inv;
    piv.rhs *= inv;
    for (auto& [k, v] : piv.combination) v *= inv;

    for (std::size_t r = 0; r < m; ++r) {
      if (r == row) continue;
      auto it = rows[r].coeffs.find(col);
      if (it == rows[r].coeffs.end()) continue;
      const Rational factor = it->second;
      axpy(rows[r].coeffs, piv.coeffs, factor);
      rows[r].rhs -= factor * piv.rhs;
      axpy(rows[r].combination, piv.combination, factor);
    }
    used_row[row] = used_col[col] = true;
    pivots.emplace_back(row, col);
  }

  for (std::size_t r = 0; r < m; ++r) {
    if (used_row[r] || rows[r].rhs == 0) continue;
    Infeasibility inf;
    inf.rank = pivots.size();
    inf.row_combination.assign(m, 0);
    for (const auto& [k, v] : rows[r].combination) inf.row_combination[k] = v;
    if (!proves_infeasible(system, inf.row_combination))
      throw SystemError("internal: infeasibility witness failed re-multiplication");
    return inf;
  }

  SolutionSpace space;
  space.rank = pivots.size();
  space.particular.assign(n, 0);
  for (const auto& [r, c] : pivots) space.particular[c] = rows[r].rhs;
  for (std::size_t f = 0; f < n; ++f) {
    if (used_col[f]) continue;
    std::vector<Rational> b(n, 0);
    b[f] = 1;
    for (const auto& [r, c] : pivots) {
      auto it = rows[r].coeffs.find(f);
      if (it != rows[r].coeffs.end()) b[c] = -it->second;
    }
    space.nullspace_basis.push_back(std::move(b));
  }

  if (!satisfies(system, space.particular))
    throw SystemError("internal: particular solution failed re-multiplication");
  for (const auto& b : space.nullspace_basis)
    if (!in_nullspace(mat, b)) throw SystemError("internal: nullspace vector failed re-multiplication");
  return space;
}

bool satisfies(const LinearSystem& system, std::span<const Rational> x) {
  return system.matrix.multiply(x) == system.rhs;
}

bool in_nullspace(const SparseRationalMatrix& matrix, std::span<const Rational> x) {
  const auto y = matrix.multiply(x);
  return std::all_of(y.begin(), y.end(), [](const Rational& v) { return v == 0; });
}

bool proves_infeasible(const LinearSystem& system, std::span<const Rational> y) {
  const auto yv = system.matrix.left_multiply(y);
  if (!std::all_of(yv.begin(), yv.end(), [](const Rational& v) { return v == 0; })) return false;
  Rational yb = 0;
  for (std::size_t r = 0; r < y.size(); ++r) yb += y[r] * system.rhs[r];
  return yb != 0;
}

}  // namespace otype
