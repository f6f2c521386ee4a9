#pragma once

#include <cstddef>
#include <span>
#include <tuple>
#include <vector>

namespace otype {

/// Compressed sparse row matrix of doubles.
struct CsrMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> row_ptr{0};
  std::vector<std::size_t> col_idx;
  std::vector<double> values;

  /// Triplets (row, col, value) in any order; duplicates are summed.
  static CsrMatrix from_triplets(std::size_t rows, std::size_t cols,
                                 std::vector<std::tuple<std::size_t, std::size_t, double>> triplets);
  CsrMatrix transposed() const;
  std::size_t nonzeros() const { return values.size(); }
};

/// y = A x, rows split across OpenMP threads. Each row sum is accumulated in
/// a fixed order, so results do not depend on the thread count.
void spmv(const CsrMatrix& a, std::span<const double> x, std::span<double> y);
void spmv_serial(const CsrMatrix& a, std::span<const double> x, std::span<double> y);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

}  // namespace otype
