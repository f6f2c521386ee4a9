#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace otype {

/// Small-Groups style (order, index) identifier.
struct GroupId {
  std::uint64_t order = 0;
  std::uint64_t index = 0;

  /// "(168,42)"
  std::string to_string() const;
  /// Accepts "(168,42)", "(168, 42)" or "168,42".
  static std::optional<GroupId> parse(std::string_view text);

  friend auto operator<=>(const GroupId&, const GroupId&) = default;
};

enum class Side { G, H, Aux };

std::string_view to_string(Side side);
std::optional<Side> parse_side(std::string_view text);

}  // namespace otype
