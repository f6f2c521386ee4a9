#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ordertype/group_id.hpp"
#include "ordertype/revolved.hpp"
#include "ordertype/sparse_kernels.hpp"

namespace otype {

using Rational = mpq_class;

/// Exact sparse matrix, stored column by column. Rows are (n, p) keys in
/// lexicographic order; columns are group ids in corpus order.
struct SparseRationalMatrix {
  std::vector<ValuationKey> row_index;
  std::vector<GroupId> col_index;
  std::vector<std::map<std::size_t, Rational>> columns;

  std::size_t rows() const { return row_index.size(); }
  std::size_t cols() const { return col_index.size(); }
  std::size_t nonzeros() const;

  std::vector<Rational> multiply(std::span<const Rational> x) const;
  /// y^T A
  std::vector<Rational> left_multiply(std::span<const Rational> y) const;
  CsrMatrix to_csr() const;
};

/// V x = t v_N, with V built from a corpus of valuation vectors.
struct LinearSystem {
  SparseRationalMatrix matrix;
  std::vector<Rational> rhs;
  GroupId target;
  std::uint64_t target_multiplicity = 1;
};

struct CorpusColumn {
  GroupId id;
  ValuationVector vector;
};

/// Rows cover the union of all supports. Throws SystemError on an empty
/// corpus, a duplicate id, or a zero multiplicity.
LinearSystem build_system(std::span<const CorpusColumn> corpus, GroupId target_id,
                          const ValuationVector& target, std::uint64_t target_multiplicity = 1);

struct ScreenOptions {
  double tolerance = 1e-10;        // on ||A^T r|| relative to ||A^T b||
  std::size_t max_iterations = 0;  // 0 means 10 * (rows + cols)
};

struct ScreenResult {
  double residual = 0.0;  // ||b - A x|| at the returned iterate
  std::size_t iterations = 0;
  bool converged = false;  // false: residual is only an upper bound
};

/// Conjugate gradients on the normal equations (CGLS) in double precision.
ScreenResult least_squares_screen(const LinearSystem& system, ScreenOptions options = {});

struct SolutionSpace {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> nullspace_basis;
  std::size_t rank = 0;
};

/// Row combination y with y^T V = 0 and y^T rhs != 0.
struct Infeasibility {
  std::vector<Rational> row_combination;
  std::size_t rank = 0;
};

using ExactResult = std::variant<SolutionSpace, Infeasibility>;

/// Gauss-Jordan elimination over the rationals. Pivot column: fewest
/// nonzeros among remaining rows, ties to the earlier column; pivot row: the
/// lexicographically first remaining row with a nonzero there. Free
/// variables are set to zero in the particular solution. The result is
/// re-multiplied against the system before it is returned.
ExactResult solve_exact(const LinearSystem& system);

bool satisfies(const LinearSystem& system, std::span<const Rational> x);
bool in_nullspace(const SparseRationalMatrix& matrix, std::span<const Rational> x);
bool proves_infeasible(const LinearSystem& system, std::span<const Rational> y);

}  // namespace otype
