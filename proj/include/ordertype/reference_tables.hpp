#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>

#include "ordertype/factored_value.hpp"
#include "ordertype/group_id.hpp"

/// Published exponent-type tables for the two multiplicity lists: one row per
/// factor group, and the factored exponent type of the full direct products.
namespace otype::reference {

/// Column labels of the per-group tables (the divisors of 168).
inline constexpr std::array<std::uint64_t, 16> kTableDivisors = {
    1, 2, 3, 4, 6, 7, 8, 12, 14, 21, 24, 28, 42, 56, 84, 168};

struct TableRow {
  int row;  // 1-based position within its side
  GroupId id;
  std::string_view name;
  Side side;
  std::uint64_t multiplicity;
  std::uint64_t exponent;
  std::array<std::uint64_t, 16> values;
};

/// All 36 rows, G side first, each side in table order.
std::span<const TableRow> table_rows();
const TableRow* find_row(GroupId id);

/// Factored exponent type of prod G_i^{m_i} (equivalently prod H_i^{n_i})
/// at each column divisor.
const std::map<std::uint64_t, FactoredValue>& product_table();

/// The unique group on the H side that is not solvable.
inline constexpr GroupId kNonSolvableId{168, 42};

}  // namespace otype::reference
