#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordertype/finite_group.hpp"
#include "ordertype/group_id.hpp"

namespace otype {

/// One catalog entry: a concrete permutation realization of a small group.
struct GroupDescriptor {
  GroupId id;
  std::string name;
  std::size_t degree = 0;
  std::vector<std::vector<Point>> generators;
  bool solvable = true;
  Side side = Side::Aux;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Throws CatalogError on malformed or missing fields.
GroupDescriptor descriptor_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GroupDescriptor& d);

/// Enumerates the group a descriptor generates.
FiniteGroup build_group(const GroupDescriptor& d, std::size_t cap = kDefaultEnumerationCap);

/// Validated, immutable list of descriptors with their enumerated groups.
class Catalog {
 public:
  const std::vector<GroupDescriptor>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const GroupDescriptor& entry(std::size_t i) const { return entries_.at(i); }
  const FiniteGroup& group(std::size_t i) const { return groups_.at(i); }
  const std::vector<FiniteGroup>& groups() const { return groups_; }

  std::optional<std::size_t> find(GroupId id) const;
  /// Name match ignores case, spaces and underscores ("A_5" == "a5").
  std::optional<std::size_t> find_name(std::string_view name) const;
  /// An id such as "(168,42)" or a name; throws ResolutionError.
  std::size_t resolve(std::string_view selector) const;
  std::size_t require(GroupId id) const;

  /// Indices of the Table-1 entries of one side, in table-row order. Throws
  /// ResolutionError naming the first missing id.
  std::vector<std::size_t> table_side(Side side) const;

 private:
  friend Catalog validate_catalog(std::vector<GroupDescriptor>, std::size_t);
  std::vector<GroupDescriptor> entries_;
  std::vector<FiniteGroup> groups_;
};

/// Checks every entry: unique ids and names, well-formed generators, group
/// order equal to id.order, solvability flag, and for Table-1 ids the side
/// and multiplicity. Throws CatalogError naming the entry and the failed check.
Catalog validate_catalog(std::vector<GroupDescriptor> entries,
                         std::size_t cap = kDefaultEnumerationCap);

Catalog parse_catalog(const nlohmann::json& j, std::size_t cap = kDefaultEnumerationCap);
Catalog load_catalog(const std::filesystem::path& path,
                     std::size_t cap = kDefaultEnumerationCap);

nlohmann::json to_json(const Catalog& catalog);

std::string normalize_name(std::string_view name);

}  // namespace otype
