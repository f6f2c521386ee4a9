#include "ordertype/certificate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ordertype/error.hpp"
#include "ordertype/number_theory.hpp"
#include "ordertype/spectra.hpp"

namespace otype {

namespace {

nlohmann::json terms_to_json(const std::vector<CertificateTerm>& terms) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : terms) out.push_back({{"id", {t.id.order, t.id.index}}, {"mult", t.multiplicity}});
  return out;
}

std::vector<CertificateTerm> terms_from_json(const nlohmann::json& j) {
  std::vector<CertificateTerm> out;
  for (const auto& t : j) {
    const auto& id = t.at("id");
    out.push_back({{id.at(0).get<std::uint64_t>(), id.at(1).get<std::uint64_t>()},
                   t.at("mult").get<std::uint64_t>()});
  }
  return out;
}

std::uint64_t to_u64(const mpz_class& z) {
  if (sgn(z) < 0 || !z.fits_ulong_p()) throw SystemError("certificate multiplicity out of range");
  return z.get_ui();
}

std::vector<SpectrumPower> side_powers(const std::vector<CertificateTerm>& terms,
                                       const Catalog& catalog) {
  std::vector<SpectrumPower> out;
  for (const auto& t : terms)
    out.push_back({exponent_spectrum(catalog.group(catalog.require(t.id))), t.multiplicity});
  return out;
}

}  // namespace

nlohmann::json to_json(const MultiplicityCertificate& cert, bool verified, std::uint64_t joint_exponent) {
  return {{"side_a", terms_to_json(cert.side_a)},
          {"side_b", terms_to_json(cert.side_b)},
          {"verified", verified},
          {"joint_exponent", joint_exponent}};
}

MultiplicityCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    return {terms_from_json(j.at("side_a")), terms_from_json(j.at("side_b"))};
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(std::string("certificate parse error: ") + e.what());
  }
}

MultiplicityCertificate table_certificate(const Catalog& catalog) {
  MultiplicityCertificate cert;
  for (auto i : catalog.table_side(Side::G))
    cert.side_a.push_back({catalog.entry(i).id, catalog.entry(i).multiplicity});
  for (auto i : catalog.table_side(Side::H))
    cert.side_b.push_back({catalog.entry(i).id, catalog.entry(i).multiplicity});
  return cert;
}

ScaledCertificate to_certificate(const SolutionSpace& space, const LinearSystem& system) {
  const auto& cols = system.matrix.col_index;
  if (space.particular.size() != cols.size()) throw SystemError("solution does not match the system");
  mpz_class scale = 1;
  for (const auto& x : space.particular) scale = lcm(scale, mpz_class(x.get_den()));

  ScaledCertificate out;
  out.scale = scale;
  bool any = false;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const mpz_class k = mpz_class(space.particular[c].get_num()) * (scale / space.particular[c].get_den());
    if (k == 0) continue;
    any = true;
    if (k > 0) {
      out.certificate.side_a.push_back({cols[c], to_u64(k)});
    } else {
      out.certificate.side_b.push_back({cols[c], to_u64(-k)});
    }
  }
  const bool nonzero_target =
      std::any_of(system.rhs.begin(), system.rhs.end(), [](const Rational& v) { return v != 0; });
  if (!any && nonzero_target) throw SystemError("all-zero solution for a nonzero target");
  if (out.certificate.side_a.empty()) throw SystemError("sign split leaves the solvable side empty");
  out.certificate.side_b.push_back(
      {system.target, to_u64(mpz_class(std::to_string(system.target_multiplicity)) * scale)});
  return out;
}

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json item = {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
    if (c.name == "exponent_types_equal") {
      nlohmann::json values = nlohmann::json::array();
      for (const auto& [n, v] : side_a_values)
        values.push_back({{"n", n}, {"side_a", v.to_json()}, {"side_b", side_b_values.at(n).to_json()}});
      item["values"] = std::move(values);
    }
    list.push_back(std::move(item));
  }
  return list;
}

VerificationReport verify_certificate(const MultiplicityCertificate& cert, const Catalog& catalog) {
  VerificationReport report;
  for (const auto* side : {&cert.side_a, &cert.side_b})
    for (const auto& t : *side) catalog.require(t.id);

  {
    Check c{"multiplicities_positive", true, ""};
    for (const auto* side : {&cert.side_a, &cert.side_b})
      for (const auto& t : *side)
        if (t.multiplicity == 0) {
          c.passed = false;
          c.detail = t.id.to_string() + " has multiplicity 0";
        }
    if (cert.side_a.empty() || cert.side_b.empty()) {
      c.passed = false;
      c.detail = "a side is empty";
    }
    report.checks.push_back(c);
  }
  {
    Check c{"sides_disjoint", true, ""};
    std::set<GroupId> a;
    for (const auto& t : cert.side_a) a.insert(t.id);
    for (const auto& t : cert.side_b)
      if (a.contains(t.id)) {
        c.passed = false;
        c.detail = t.id.to_string() + " appears on both sides";
      }
    report.checks.push_back(c);
  }
  {
    const auto pa = side_powers(cert.side_a, catalog);
    const auto pb = side_powers(cert.side_b, catalog);
    std::uint64_t ja = 1, jb = 1;
    for (const auto& p : pa) ja = std::lcm(ja, p.spectrum.exponent);
    for (const auto& p : pb) jb = std::lcm(jb, p.spectrum.exponent);
    report.joint_exponent = std::lcm(ja, jb);
    const auto va = spectrum_power_product(pa);
    const auto vb = spectrum_power_product(pb);
    Check c{"exponent_types_equal", true, ""};
    for (auto n : divisors(report.joint_exponent)) {
      const auto& a = va.at(std::gcd(n, ja));
      const auto& b = vb.at(std::gcd(n, jb));
      report.side_a_values.emplace(n, a);
      report.side_b_values.emplace(n, b);
      if (c.passed && a != b) {
        c.passed = false;
        c.detail = "mismatch at n=" + std::to_string(n) + ": " + a.to_string() + " vs " + b.to_string();
      }
    }
    report.checks.push_back(c);
  }
  {
    Check c{"side_a_solvable", true, ""};
    for (const auto& t : cert.side_a)
      if (!is_solvable(catalog.group(catalog.require(t.id)))) {
        c.passed = false;
        c.detail = t.id.to_string() + " is not solvable";
        break;
      }
    report.checks.push_back(c);
  }
  {
    Check c{"side_b_has_non_solvable", false, "every side_b group is solvable"};
    for (const auto& t : cert.side_b)
      if (!is_solvable(catalog.group(catalog.require(t.id)))) {
        c.passed = true;
        c.detail = t.id.to_string() + " is not solvable";
        break;
      }
    report.checks.push_back(c);
  }
  return report;
}

ValuationVector catalog_valuation(const Catalog& catalog, std::size_t i) {
  return valuation_vector(exponent_spectrum(catalog.group(i)));
}

bool valuation_identity_holds(const MultiplicityCertificate& cert, const Catalog& catalog) {
  ValuationVector diff;
  for (const auto& t : cert.side_a)
    diff += catalog_valuation(catalog, catalog.require(t.id)).scaled(static_cast<std::int64_t>(t.multiplicity));
  for (const auto& t : cert.side_b)
    diff += catalog_valuation(catalog, catalog.require(t.id)).scaled(-static_cast<std::int64_t>(t.multiplicity));
  return diff.empty();
}

std::vector<std::size_t> solvable_corpus(const Catalog& catalog, std::optional<GroupId> exclude) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto& d = catalog.entry(i);
    if (!d.solvable || (exclude && d.id == *exclude)) continue;
    if (catalog.group(i).is_trivial()) continue;
    out.push_back(i);
  }
  return out;
}

LinearSystem catalog_system(const Catalog& catalog, std::size_t target, std::uint64_t multiplicity) {
  const auto& t = catalog.entry(target);
  std::vector<CorpusColumn> corpus;
  for (auto i : solvable_corpus(catalog, t.id)) corpus.push_back({catalog.entry(i).id, catalog_valuation(catalog, i)});
  return build_system(corpus, t.id, catalog_valuation(catalog, target), multiplicity);
}

SearchOutcome search_certificate(const Catalog& catalog, std::size_t target, SearchOptions options) {
  SearchOutcome out;
  out.system = catalog_system(catalog, target, 1);
  out.screen = least_squares_screen(out.system);
  if (catalog.entry(target).solvable && is_solvable(catalog.group(target))) {
    out.status = SearchStatus::SolvableTarget;
    return out;
  }

  auto first = solve_exact(out.system);
  if (auto* inf = std::get_if<Infeasibility>(&first)) {
    out.status = SearchStatus::Infeasible;
    out.witness = *inf;
    return out;
  }

  // The particular solution is linear in t, so the first integral t is the
  // lcm of the t = 1 denominators whenever that lcm is within the bound.
  SolutionSpace space = std::get<SolutionSpace>(first);
  for (std::uint64_t t = 1; t <= options.max_multiplicity; ++t) {
    LinearSystem sys = catalog_system(catalog, target, t);
    auto res = solve_exact(sys);
    const auto& sol = std::get<SolutionSpace>(res);
    const bool integral = std::all_of(sol.particular.begin(), sol.particular.end(),
                                      [](const Rational& x) { return x.get_den() == 1; });
    if (integral) {
      out.system = std::move(sys);
      out.target_multiplicity = t;
      space = sol;
      break;
    }
  }

  auto scaled = to_certificate(space, out.system);
  out.scale = scaled.scale;
  out.certificate = scaled.certificate;
  out.report = verify_certificate(*out.certificate, catalog);
  out.status = out.report->passed() ? SearchStatus::Verified : SearchStatus::VerificationFailed;
  return out;
}

}  // namespace otype
