#include <gtest/gtest.h>

#include <omp.h>

#include <random>

#include "oracles.hpp"
#include "ordertype/sparse_kernels.hpp"
#include "ordertype/spectra.hpp"

using namespace otype;

TEST(Parallel, OrderSpectrumMatchesSerial) {
  const auto& cat = oracle::bundled_catalog();
  for (const auto& g : cat.groups()) EXPECT_EQ(order_spectrum(g), order_spectrum_serial(g));
  const auto big = direct_product(cat.group(cat.resolve("GL(3,2)")), cat.group(cat.resolve("D_7")), 5000);
  EXPECT_EQ(order_spectrum(big), order_spectrum_serial(big));
}

TEST(Parallel, ExponentSpectraMatchSerialInOrder) {
  const auto& groups = oracle::bundled_catalog().groups();
  const auto par = exponent_spectra(groups);
  const auto ser = exponent_spectra_serial(groups);
  ASSERT_EQ(par.size(), groups.size());
  EXPECT_EQ(par, ser);
  for (std::size_t i = 0; i < groups.size(); ++i) EXPECT_EQ(par[i].group_order(), groups[i].order());
}

TEST(Parallel, SpmvMatchesSerialBitForBit) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> idx(0, 499);
  std::uniform_real_distribution<double> val(-1, 1);
  std::vector<std::tuple<std::size_t, std::size_t, double>> t;
  for (int k = 0; k < 5000; ++k) t.emplace_back(idx(rng), idx(rng), val(rng));
  const auto a = CsrMatrix::from_triplets(500, 500, t);
  std::vector<double> x(500);
  for (auto& v : x) v = val(rng);
  std::vector<double> y1(500), y2(500);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    spmv(a, x, y1);
    spmv_serial(a, x, y2);
    EXPECT_EQ(y1, y2) << threads << " threads";
  }
}

TEST(SparseKernels, FromTripletsSumsDuplicatesAndTransposes) {
  const auto a = CsrMatrix::from_triplets(2, 3, {{1, 2, 1.0}, {0, 0, 2.0}, {1, 2, 3.0}, {0, 1, -1.0}});
  EXPECT_EQ(a.nonzeros(), 3u);
  EXPECT_EQ(a.row_ptr, (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_EQ(a.col_idx, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(a.values, (std::vector<double>{2.0, -1.0, 4.0}));
  const auto at = a.transposed();
  EXPECT_EQ(at.rows, 3u);
  std::vector<double> y(3);
  spmv_serial(at, std::vector<double>{1.0, 1.0}, y);
  EXPECT_EQ(y, (std::vector<double>{2.0, -1.0, 4.0}));
  EXPECT_DOUBLE_EQ(norm2(std::vector<double>{3.0, 4.0}), 5.0);
  EXPECT_DOUBLE_EQ(dot(std::vector<double>{1.0, 2.0}, std::vector<double>{3.0, 4.0}), 11.0);
}
