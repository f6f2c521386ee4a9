#include "ordertype/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>

#include "ordertype/error.hpp"
#include "ordertype/reference_tables.hpp"

namespace otype {

std::string GroupId::to_string() const {
  return "(" + std::to_string(order) + "," + std::to_string(index) + ")";
}

std::optional<GroupId> GroupId::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  const auto comma = s.find(',');
  if (comma == std::string::npos) return std::nullopt;
  GroupId id;
  auto parse_part = [](std::string_view part, std::uint64_t& out) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    return ec == std::errc{} && ptr == part.data() + part.size() && !part.empty();
  };
  std::string_view sv(s);
  if (!parse_part(sv.substr(0, comma), id.order) || !parse_part(sv.substr(comma + 1), id.index))
    return std::nullopt;
  if (id.order == 0 || id.index == 0) return std::nullopt;
  return id;
}

std::string_view to_string(Side side) {
  switch (side) {
    case Side::G: return "G";
    case Side::H: return "H";
    case Side::Aux: return "aux";
  }
  return "aux";
}

std::optional<Side> parse_side(std::string_view text) {
  if (text == "G") return Side::G;
  if (text == "H") return Side::H;
  if (text == "aux") return Side::Aux;
  return std::nullopt;
}

std::string normalize_name(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '_' || std::isspace(static_cast<unsigned char>(c))) continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

GroupDescriptor descriptor_from_json(const nlohmann::json& j) {
  try {
    GroupDescriptor d;
    const auto& id = j.at("id");
    if (!id.is_array() || id.size() != 2) throw CatalogError("\"id\" must be [order, index]");
    d.id = {id.at(0).get<std::uint64_t>(), id.at(1).get<std::uint64_t>()};
    d.name = j.at("name").get<std::string>();
    d.degree = j.at("degree").get<std::size_t>();
    d.generators = j.at("generators").get<std::vector<std::vector<Point>>>();
    d.solvable = j.at("solvable").get<bool>();
    auto side = parse_side(j.at("side").get<std::string>());
    if (!side) throw CatalogError("\"side\" must be one of G, H, aux");
    d.side = *side;
    d.multiplicity = j.at("multiplicity").get<std::uint64_t>();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(std::string("catalog parse error: ") + e.what());
  }
}

nlohmann::json to_json(const GroupDescriptor& d) {
  return {{"id", {d.id.order, d.id.index}},
          {"name", d.name},
          {"degree", d.degree},
          {"generators", d.generators},
          {"solvable", d.solvable},
          {"side", std::string(to_string(d.side))},
          {"multiplicity", d.multiplicity}};
}

FiniteGroup build_group(const GroupDescriptor& d, std::size_t cap) {
  std::vector<Permutation> gens;
  for (const auto& images : d.generators) {
    if (images.size() != d.degree)
      throw PermutationError("generator has " + std::to_string(images.size()) +
                             " images, degree is " + std::to_string(d.degree));
    gens.emplace_back(images);
  }
  return enumerate(std::move(gens), cap);
}

std::optional<std::size_t> Catalog::find(GroupId id) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].id == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> Catalog::find_name(std::string_view name) const {
  const std::string key = normalize_name(name);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (normalize_name(entries_[i].name) == key) return i;
  return std::nullopt;
}

std::size_t Catalog::resolve(std::string_view selector) const {
  if (auto i = find_name(selector)) return *i;
  if (auto id = GroupId::parse(selector)) {
    if (auto i = find(*id)) return *i;
  }
  throw ResolutionError("no catalog entry matches '" + std::string(selector) + "'");
}

std::size_t Catalog::require(GroupId id) const {
  if (auto i = find(id)) return *i;
  throw ResolutionError("catalog has no entry with id " + id.to_string());
}

std::vector<std::size_t> Catalog::table_side(Side side) const {
  std::vector<std::size_t> out;
  for (const auto& row : reference::table_rows())
    if (row.side == side) out.push_back(require(row.id));
  return out;
}

namespace {

std::string describe(const GroupDescriptor& d) {
  return "entry " + d.id.to_string() + " '" + d.name + "'";
}

// Checks that need the enumerated group. Returns an error message or "".
std::string check_entry(const GroupDescriptor& d, std::size_t cap, std::optional<FiniteGroup>& out) {
  try {
    if (d.degree == 0) return describe(d) + ": degree must be positive";
    if (d.generators.empty()) return describe(d) + ": no generators";
    FiniteGroup g = build_group(d, cap);
    if (g.order() != d.id.order)
      return describe(d) + ": generators give order " + std::to_string(g.order()) +
             ", id requires " + std::to_string(d.id.order);
    if (is_solvable(g) != d.solvable)
      return describe(d) + ": marked " + (d.solvable ? "solvable" : "non-solvable") +
             " but the derived series says otherwise";
    out = std::move(g);
    return {};
  } catch (const Error& e) {
    return describe(d) + ": " + e.what();
  }
}

}  // namespace

Catalog validate_catalog(std::vector<GroupDescriptor> entries, std::size_t cap) {
  std::set<GroupId> ids;
  std::set<std::string> names;
  for (const auto& d : entries) {
    if (!ids.insert(d.id).second) throw CatalogError("duplicate id " + d.id.to_string());
    if (!names.insert(normalize_name(d.name)).second)
      throw CatalogError("duplicate name '" + d.name + "'");
    if (const auto* row = reference::find_row(d.id)) {
      if (row->side != d.side)
        throw CatalogError(describe(d) + ": side must be " + std::string(to_string(row->side)));
      if (row->multiplicity != d.multiplicity)
        throw CatalogError(describe(d) + ": multiplicity must be " +
                           std::to_string(row->multiplicity));
    }
  }

  std::vector<std::optional<FiniteGroup>> groups(entries.size());
  std::vector<std::string> errors(entries.size());
  const auto n = static_cast<std::int64_t>(entries.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) errors[i] = check_entry(entries[i], cap, groups[i]);
  for (const auto& e : errors)
    if (!e.empty()) throw CatalogError(e);

  Catalog c;
  c.entries_ = std::move(entries);
  c.groups_.reserve(groups.size());
  for (auto& g : groups) c.groups_.push_back(std::move(*g));
  return c;
}

Catalog parse_catalog(const nlohmann::json& j, std::size_t cap) {
  if (!j.is_array()) throw CatalogError("catalog must be a JSON array of entries");
  std::vector<GroupDescriptor> entries;
  for (const auto& item : j) entries.push_back(descriptor_from_json(item));
  return validate_catalog(std::move(entries), cap);
}

Catalog load_catalog(const std::filesystem::path& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError("catalog parse error in " + path.string() + ": " + e.what());
  }
  return parse_catalog(j, cap);
}

nlohmann::json to_json(const Catalog& catalog) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& d : catalog.entries()) out.push_back(to_json(d));
  return out;
}

}  // namespace otype
