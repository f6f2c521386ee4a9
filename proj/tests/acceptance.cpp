// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ordertype/catalog.hpp"
#include "ordertype/certificate.hpp"
#include "ordertype/linsolve.hpp"
#include "ordertype/number_theory.hpp"
#include "ordertype/reference_tables.hpp"
#include "ordertype/revolved.hpp"
#include "ordertype/spectra.hpp"

using namespace otype;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

const Catalog& catalog() {
  static const Catalog c = load_catalog(ORDERTYPE_DEFAULT_CATALOG);
  return c;
}

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s));
  if (!o.ok) ++failures;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.3f s", secs);
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " [" << timing << "]"
            << (o.detail.empty() ? "" : " - " + o.detail) << std::endl;
}

// Rebuilds the groups from their descriptors so the timing covers enumeration.
Outcome table_rows_match(Side side) {
  Outcome o;
  for (const auto& row : reference::table_rows()) {
    if (row.side != side) continue;
    const auto g = build_group(catalog().entry(catalog().require(row.id)));
    const auto e = exponent_spectrum(g);
    if (e.exponent != row.exponent) o.fail(row.id.to_string() + " exponent");
    for (std::size_t k = 0; k < 16; ++k)
      if (e.at(reference::kTableDivisors[k]) != row.values[k])
        o.fail(row.id.to_string() + " at n=" + std::to_string(reference::kTableDivisors[k]));
  }
  return o;
}

std::map<std::uint64_t, FactoredValue> side_product(Side side) {
  std::vector<SpectrumPower> v;
  for (auto i : catalog().table_side(side))
    v.push_back({exponent_spectrum(catalog().group(i)), catalog().entry(i).multiplicity});
  return spectrum_power_product(v);
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + ORDERTYPE_CLI_PATH + "\" " + args;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("cannot start " + cmd);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  if (status != 0) throw std::runtime_error(cmd + " exited with status " + std::to_string(status));
  return out;
}

}  // namespace

int main() {
  catalog();

  criterion(1, "G-side exponent rows reproduce the published table", 10, [] { return table_rows_match(Side::G); });

  criterion(2, "H-side exponent rows reproduce the published table", 0, [] {
    auto o = table_rows_match(Side::H);
    const auto e = exponent_spectrum(catalog().group(catalog().require({168, 42})));
    const std::array<std::uint64_t, 16> gl{1, 22, 57, 64, 78, 49, 64, 120, 70, 105, 120, 112, 126, 112, 168, 168};
    for (std::size_t k = 0; k < 16; ++k)
      if (e.at(reference::kTableDivisors[k]) != gl[k]) o.fail("GL(3,2) row differs");
    return o;
  });

  criterion(3, "factored products agree at every divisor of 168 and match the reference", 5, [] {
    Outcome o;
    const auto g = side_product(Side::G), h = side_product(Side::H);
    for (auto n : divisors(168)) {
      if (g.at(n) != h.at(n)) o.fail("sides differ at n=" + std::to_string(n));
      if (g.at(n) != reference::product_table().at(n)) o.fail("reference differs at n=" + std::to_string(n));
    }
    if (g.at(168).to_string() != "2^365·3^105·7^104") o.fail("n=168 is " + g.at(168).to_string());
    if (g.at(42).to_string() != "2^185·3^177·5^3·7^104") o.fail("n=42 is " + g.at(42).to_string());
    return o;
  });

  criterion(4, "solvability split: all G_i and H_i solvable except H_16; A_5 not solvable", 30, [] {
    Outcome o;
    for (const auto& row : reference::table_rows()) {
      const bool want = row.id != reference::kNonSolvableId;
      if (is_solvable(build_group(catalog().entry(catalog().require(row.id)))) != want)
        o.fail(row.id.to_string());
    }
    if (is_solvable(build_group(catalog().entry(catalog().resolve("A_5"))))) o.fail("A_5");
    return o;
  });

  criterion(5, "order/exponent inversion round-trips for every catalog group", 0, [] {
    Outcome o;
    for (std::size_t i = 0; i < catalog().size(); ++i) {
      const auto s = order_spectrum(catalog().group(i));
      if (order_from_exponent(exponent_spectrum(s)) != s) o.fail(catalog().entry(i).id.to_string());
    }
    return o;
  });

  criterion(6, "product lemma on 20 random catalog pairs with |A||B| <= 10000", 0, [] {
    Outcome o;
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<std::size_t> pick(0, catalog().size() - 1);
    for (int done = 0; done < 20;) {
      const auto ia = pick(rng), ib = pick(rng);
      const auto& a = catalog().group(ia);
      const auto& b = catalog().group(ib);
      if (a.order() * b.order() > 10'000) continue;
      const auto ea = exponent_spectrum(a), eb = exponent_spectrum(b);
      const auto ep = exponent_spectrum(direct_product(a, b));
      for (const auto& [n, v] : ep.values)
        if (v != ea.at(n) * eb.at(n))
          o.fail(catalog().entry(ia).id.to_string() + " x " + catalog().entry(ib).id.to_string());
      ++done;
    }
    return o;
  });

  criterion(7, "revolved reconstruction on divisors of E and triviality off E up to 4E", 0, [] {
    Outcome o;
    for (std::size_t i = 0; i < catalog().size(); ++i) {
      const auto e = exponent_spectrum(catalog().group(i));
      const auto r = revolved_spectrum(e);
      const auto name = catalog().entry(i).id.to_string();
      for (auto n : divisors(e.exponent)) {
        FactoredValue prod;
        for (auto d : divisors(n)) prod *= r.values.at(d);
        if (prod != FactoredValue::from_integer(e.at(n))) o.fail(name + " reconstruction at n=" + std::to_string(n));
      }
      for (auto n : divisors(4 * e.exponent))
        if (e.exponent % n != 0 && !revolved_value(e, n).is_one())
          o.fail(name + " nontrivial at n=" + std::to_string(n));
    }
    return o;
  });

  criterion(8, "search: verified GL(3,2) certificate, table multiplicities solve it, A_5 infeasible", 60, [] {
    Outcome o;
    const auto gl = catalog().resolve("GL(3,2)");
    const auto corpus = solvable_corpus(catalog(), GroupId{168, 42});
    std::set<GroupId> corpus_ids, table_ids;
    for (auto i : corpus) corpus_ids.insert(catalog().entry(i).id);
    for (const auto& row : reference::table_rows())
      if (row.id != reference::kNonSolvableId) table_ids.insert(row.id);
    if (corpus.size() != 35 || corpus_ids != table_ids) o.fail("corpus is not the 35 solvable table groups");

    const auto out = search_certificate(catalog(), gl);
    if (out.status != SearchStatus::Verified || !out.report || !out.report->passed())
      o.fail("GL(3,2) certificate not verified");

    const auto sys = catalog_system(catalog(), gl, 3);
    std::vector<Rational> x(sys.matrix.cols());
    for (std::size_t c = 0; c < x.size(); ++c) {
      const auto* row = reference::find_row(sys.matrix.col_index[c]);
      x[c] = row->side == Side::G ? Rational(row->multiplicity) : Rational(-static_cast<long>(row->multiplicity));
    }
    if (!satisfies(sys, x)) o.fail("table multiplicities do not satisfy the system");

    const auto a5 = search_certificate(catalog(), catalog().resolve("A_5"));
    if (a5.status != SearchStatus::Infeasible || !a5.witness) {
      o.fail("A_5 not reported infeasible");
    } else {
      const auto yv = a5.system.matrix.left_multiply(a5.witness->row_combination);
      const bool zero = std::all_of(yv.begin(), yv.end(), [](const Rational& v) { return v == 0; });
      if (!zero || !proves_infeasible(a5.system, a5.witness->row_combination)) o.fail("A_5 witness does not check");
    }
    return o;
  });

  criterion(9, "screen residual < 1e-6 for GL(3,2) and >= 0.5 for A_5", 0, [] {
    Outcome o;
    const auto gl = least_squares_screen(catalog_system(catalog(), catalog().resolve("GL(3,2)")));
    const auto a5 = least_squares_screen(catalog_system(catalog(), catalog().resolve("A_5")));
    std::ostringstream d;
    d << "GL(3,2) " << gl.residual << ", A_5 " << a5.residual;
    o.detail = d.str();
    if (!(gl.residual < 1e-6)) o.fail(d.str());
    if (!(a5.residual >= 0.5)) o.fail(d.str());
    return o;
  });

  criterion(10, "two runs of verify-theorem --format csv are byte-identical", 0, [] {
    Outcome o;
    const auto a = run_cli("verify-theorem --format csv");
    const auto b = run_cli("verify-theorem --format csv");
    if (a.empty() || a != b) o.fail("outputs differ");
    return o;
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
