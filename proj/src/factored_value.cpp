#include "ordertype/factored_value.hpp"

#include <sstream>
#include <stdexcept>

#include "ordertype/number_theory.hpp"

namespace otype {

namespace {
constexpr const char* kDot = "·";
}

FactoredValue FactoredValue::from_integer(std::uint64_t n) {
  FactoredValue v;
  for (auto [p, k] : factorize(n)) v.add(p, k);
  return v;
}

FactoredValue FactoredValue::from_factors(
    const std::vector<std::pair<std::uint64_t, std::int64_t>>& f) {
  FactoredValue v;
  for (auto [p, k] : f) {
    if (!is_prime(p)) throw std::invalid_argument("factored value key " + std::to_string(p) +
                                                  " is not prime");
    v.add(p, k);
  }
  return v;
}

void FactoredValue::add(std::uint64_t p, std::int64_t k) {
  if (k == 0) return;
  auto [it, inserted] = factors_.try_emplace(p, k);
  if (!inserted && (it->second += k) == 0) factors_.erase(it);
}

bool FactoredValue::is_integer() const {
  for (const auto& [p, k] : factors_)
    if (k < 0) return false;
  return true;
}

std::int64_t FactoredValue::exponent_of(std::uint64_t p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

FactoredValue& FactoredValue::operator*=(const FactoredValue& other) {
  for (const auto& [p, k] : other.factors_) add(p, k);
  return *this;
}

FactoredValue& FactoredValue::operator/=(const FactoredValue& other) {
  for (const auto& [p, k] : other.factors_) add(p, -k);
  return *this;
}

FactoredValue FactoredValue::pow(std::int64_t k) const {
  FactoredValue v;
  for (const auto& [p, e] : factors_) v.add(p, e * k);
  return v;
}

std::string FactoredValue::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, k] : factors_) {
    if (!first) os << kDot;
    first = false;
    os << p << '^' << k;
  }
  return os.str();
}

FactoredValue FactoredValue::parse(const std::string& text) {
  if (text == "1") return {};
  std::vector<std::pair<std::uint64_t, std::int64_t>> f;
  std::size_t pos = 0;
  const std::string dot = kDot;
  while (pos <= text.size()) {
    std::size_t end = text.find(dot, pos);
    if (end == std::string::npos) end = text.size();
    const std::string term = text.substr(pos, end - pos);
    const std::size_t caret = term.find('^');
    try {
      if (caret == std::string::npos) {
        f.emplace_back(std::stoull(term), 1);
      } else {
        f.emplace_back(std::stoull(term.substr(0, caret)), std::stoll(term.substr(caret + 1)));
      }
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed factored value: '" + text + "'");
    }
    pos = end + dot.size();
  }
  return from_factors(f);
}

nlohmann::json FactoredValue::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [p, k] : factors_) out.push_back({p, k});
  return out;
}

}  // namespace otype
