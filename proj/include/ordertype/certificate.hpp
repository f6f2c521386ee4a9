#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordertype/catalog.hpp"
#include "ordertype/factored_value.hpp"
#include "ordertype/linsolve.hpp"

namespace otype {

struct CertificateTerm {
  GroupId id;
  std::uint64_t multiplicity = 0;
  friend bool operator==(const CertificateTerm&, const CertificateTerm&) = default;
};

/// prod side_a has the same exponent type as prod side_b; side_a is meant to
/// be solvable and side_b to contain a non-solvable group.
struct MultiplicityCertificate {
  std::vector<CertificateTerm> side_a;
  std::vector<CertificateTerm> side_b;
  friend bool operator==(const MultiplicityCertificate&, const MultiplicityCertificate&) = default;
};

nlohmann::json to_json(const MultiplicityCertificate& cert, bool verified, std::uint64_t joint_exponent);
MultiplicityCertificate certificate_from_json(const nlohmann::json& j);

/// The G side with multiplicities m_i against the H side with n_i.
MultiplicityCertificate table_certificate(const Catalog& catalog);

/// Clears the denominators of the particular solution by their lcm L.
/// Positive coefficients go to side_a, negated negative ones plus the target
/// (multiplicity t * L) go to side_b.
struct ScaledCertificate {
  MultiplicityCertificate certificate;
  mpz_class scale;
};
ScaledCertificate to_certificate(const SolutionSpace& space, const LinearSystem& system);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;
  std::uint64_t joint_exponent = 1;
  /// Exponent types of both sides at every divisor of the joint exponent.
  std::map<std::uint64_t, FactoredValue> side_a_values;
  std::map<std::uint64_t, FactoredValue> side_b_values;

  bool passed() const;
  const Check* first_failure() const;
  nlohmann::json to_json() const;
};

/// Recomputes both sides from the catalog groups' exponent spectra, without
/// the revolved/valuation machinery. Throws ResolutionError for unknown ids.
VerificationReport verify_certificate(const MultiplicityCertificate& cert, const Catalog& catalog);

/// Valuation-level identity sum_a k v = sum_b k v.
bool valuation_identity_holds(const MultiplicityCertificate& cert, const Catalog& catalog);

/// Valuation vector of catalog entry i (computed from its group).
ValuationVector catalog_valuation(const Catalog& catalog, std::size_t i);

/// Solvable entries with a nonzero valuation vector, in catalog order.
std::vector<std::size_t> solvable_corpus(const Catalog& catalog, std::optional<GroupId> exclude = {});

LinearSystem catalog_system(const Catalog& catalog, std::size_t target, std::uint64_t multiplicity = 1);

enum class SearchStatus { Verified, Infeasible, VerificationFailed, SolvableTarget };

struct SearchOutcome {
  SearchStatus status = SearchStatus::Infeasible;
  ScreenResult screen;
  std::uint64_t target_multiplicity = 1;  // the t whose solution was used
  mpz_class scale = 1;                    // denominator lcm applied on top of t
  std::optional<Infeasibility> witness;
  std::optional<MultiplicityCertificate> certificate;
  std::optional<VerificationReport> report;
  LinearSystem system;  // the system behind the certificate or witness
};

struct SearchOptions {
  std::uint64_t max_multiplicity = 8;
};

/// build_system -> screen -> solve_exact -> to_certificate -> verify. Tries
/// t = 1..max_multiplicity for an integral particular solution, then falls
/// back to clearing denominators of the t = 1 solution.
SearchOutcome search_certificate(const Catalog& catalog, std::size_t target, SearchOptions options = {});

}  // namespace otype
