#include "ordertype/cli.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ordertype/catalog.hpp"
#include "ordertype/certificate.hpp"
#include "ordertype/error.hpp"
#include "ordertype/reference_tables.hpp"
#include "ordertype/revolved.hpp"
#include "ordertype/spectra.hpp"

namespace otype::cli {

namespace {

using nlohmann::json;

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

json id_json(GroupId id) { return json::array({id.order, id.index}); }

std::string table_header() {
  std::string h = "i,name,Id,multiplicity,E";
  for (auto d : reference::kTableDivisors) h += "," + std::to_string(d);
  return h;
}

// One row in the per-group table layout, computed from the group itself.
struct TableLine {
  int row = 0;  // 0 when the group is not a table entry
  const GroupDescriptor* entry = nullptr;
  ExponentSpectrum spectrum;

  std::array<std::uint64_t, 16> values() const {
    std::array<std::uint64_t, 16> v{};
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = spectrum.at(reference::kTableDivisors[k]);
    return v;
  }

  std::string csv() const {
    std::ostringstream os;
    os << (row ? std::to_string(row) : "") << ',' << csv_quote(entry->name) << ','
       << csv_quote(entry->id.to_string()) << ',' << entry->multiplicity << ',' << spectrum.exponent;
    for (auto v : values()) os << ',' << v;
    return os.str();
  }

  json to_json() const {
    return {{"i", row},
            {"name", entry->name},
            {"id", id_json(entry->id)},
            {"multiplicity", entry->multiplicity},
            {"exponent", spectrum.exponent},
            {"values", values()}};
  }
};

struct TheoremTables {
  std::vector<TableLine> g_rows, h_rows;
  std::map<std::uint64_t, FactoredValue> g_product, h_product;
};

TheoremTables theorem_tables(const Catalog& catalog) {
  TheoremTables t;
  const auto g_idx = catalog.table_side(Side::G);
  const auto h_idx = catalog.table_side(Side::H);

  std::vector<FiniteGroup> groups;
  for (auto i : g_idx) groups.push_back(catalog.group(i));
  for (auto i : h_idx) groups.push_back(catalog.group(i));
  const auto spectra = exponent_spectra(groups);

  std::vector<SpectrumPower> gp, hp;
  for (std::size_t k = 0; k < g_idx.size(); ++k) {
    const auto& e = catalog.entry(g_idx[k]);
    t.g_rows.push_back({static_cast<int>(k + 1), &e, spectra[k]});
    gp.push_back({spectra[k], e.multiplicity});
  }
  for (std::size_t k = 0; k < h_idx.size(); ++k) {
    const auto& e = catalog.entry(h_idx[k]);
    t.h_rows.push_back({static_cast<int>(k + 1), &e, spectra[g_idx.size() + k]});
    hp.push_back({spectra[g_idx.size() + k], e.multiplicity});
  }
  // The tables list the product at the divisors of 168 only.
  auto restrict = [](const std::map<std::uint64_t, FactoredValue>& full, std::uint64_t joint) {
    std::map<std::uint64_t, FactoredValue> out;
    for (auto d : reference::kTableDivisors) out.emplace(d, full.at(std::gcd(d, joint)));
    return out;
  };
  std::uint64_t jg = 1, jh = 1;
  for (const auto& p : gp) jg = std::lcm(jg, p.spectrum.exponent);
  for (const auto& p : hp) jh = std::lcm(jh, p.spectrum.exponent);
  t.g_product = restrict(spectrum_power_product(gp), jg);
  t.h_product = restrict(spectrum_power_product(hp), jh);
  return t;
}

void write_tables_csv(std::ostream& os, const TheoremTables& t) {
  os << "# table: G exponent types\n" << table_header() << '\n';
  for (const auto& l : t.g_rows) os << l.csv() << '\n';
  os << "# table: H exponent types\n" << table_header() << '\n';
  for (const auto& l : t.h_rows) os << l.csv() << '\n';
  os << "# table: G product exponent type\nn,value\n";
  for (const auto& [n, v] : t.g_product) os << n << ',' << v.to_string() << '\n';
  os << "# table: H product exponent type\nn,value\n";
  for (const auto& [n, v] : t.h_product) os << n << ',' << v.to_string() << '\n';
}

json product_json(const std::map<std::uint64_t, FactoredValue>& p) {
  json out = json::array();
  for (const auto& [n, v] : p) out.push_back({{"n", n}, {"value", v.to_json()}});
  return out;
}

json tables_json(const TheoremTables& t) {
  json g = json::array(), h = json::array();
  for (const auto& l : t.g_rows) g.push_back(l.to_json());
  for (const auto& l : t.h_rows) h.push_back(l.to_json());
  return {{"G_rows", g},
          {"H_rows", h},
          {"G_product", product_json(t.g_product)},
          {"H_product", product_json(t.h_product)}};
}

std::string row_string(const std::array<std::uint64_t, 16>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
  return s;
}

std::vector<Check> reference_checks(const TheoremTables& t) {
  std::vector<Check> checks;
  for (const auto* rows : {&t.g_rows, &t.h_rows}) {
    for (const auto& l : *rows) {
      const auto* ref = reference::find_row(l.entry->id);
      const std::string side(to_string(ref->side));
      Check c{"table_" + side + "_row_" + std::to_string(l.row), true,
              l.entry->id.to_string() + " " + l.entry->name};
      const auto got = l.values();
      if (got != ref->values || l.spectrum.exponent != ref->exponent) {
        c.passed = false;
        c.detail += ": computed E=" + std::to_string(l.spectrum.exponent) + " [" + row_string(got) +
                    "], expected E=" + std::to_string(ref->exponent) + " [" + row_string(ref->values) + "]";
      }
      checks.push_back(std::move(c));
    }
  }
  for (const auto& [label, product] :
       {std::pair{"G", &t.g_product}, std::pair{"H", &t.h_product}}) {
    Check c{std::string("product_") + label + "_matches_reference", true, ""};
    for (const auto& [n, v] : *product) {
      const auto& want = reference::product_table().at(n);
      if (v != want) {
        c.passed = false;
        c.detail = "n=" + std::to_string(n) + ": computed " + v.to_string() + ", expected " + want.to_string();
        break;
      }
    }
    checks.push_back(std::move(c));
  }
  return checks;
}

void write_checks_csv(std::ostream& os, const std::vector<Check>& checks) {
  os << "# checks\ncheck,passed,detail\n";
  for (const auto& c : checks)
    os << c.name << ',' << (c.passed ? "true" : "false") << ',' << csv_quote(c.detail) << '\n';
}

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

class Runner {
 public:
  Runner(RunConfig config, std::ostream& out, std::ostream& err) : cfg_(std::move(config)), out_(out), err_(err) {}

  int dispatch() {
    catalog_ = load_catalog(cfg_.catalog_path, cfg_.enum_cap);
    if (cfg_.command == "catalog list") return catalog_list();
    if (cfg_.command == "spectrum") return spectrum();
    if (cfg_.command == "emit-tables") return emit_tables(false);
    if (cfg_.command == "verify-theorem") return emit_tables(true);
    if (cfg_.command == "screen") return screen();
    if (cfg_.command == "search") return search();
    err_ << "error: unknown command '" << cfg_.command << "'\n";
    return kExitInputError;
  }

 private:
  // Writes through --out when given, else to the output stream.
  void emit(const std::function<void(std::ostream&)>& body) {
    if (cfg_.out_path.empty()) {
      body(out_);
      return;
    }
    std::ofstream f(cfg_.out_path, std::ios::binary);
    if (!f) throw CatalogError("cannot open output file " + cfg_.out_path);
    body(f);
  }

  bool json_format() const { return cfg_.format == Format::Json; }

  int catalog_list() {
    emit([&](std::ostream& os) {
      if (json_format()) {
        json list = to_json(*catalog_);
        os << list.dump(2) << '\n';
        return;
      }
      os << "id,name,degree,order,solvable,side,multiplicity\n";
      for (std::size_t i = 0; i < catalog_->size(); ++i) {
        const auto& d = catalog_->entry(i);
        os << csv_quote(d.id.to_string()) << ',' << csv_quote(d.name) << ',' << d.degree << ','
           << catalog_->group(i).order() << ',' << (d.solvable ? "true" : "false") << ','
           << to_string(d.side) << ',' << d.multiplicity << '\n';
      }
    });
    return kExitOk;
  }

  int spectrum() {
    const std::size_t i = catalog_->resolve(cfg_.selector);
    const auto& d = catalog_->entry(i);
    const auto o = order_spectrum(catalog_->group(i));
    const auto e = exponent_spectrum(o);
    const auto r = revolved_spectrum(e);
    const auto v = valuation_vector(r);
    const auto* ref = reference::find_row(d.id);
    const TableLine line{ref ? ref->row : 0, &d, e};

    emit([&](std::ostream& os) {
      if (json_format()) {
        json oj = json::array(), ej = json::array(), rj = json::array();
        for (const auto& [n, c] : o.counts) oj.push_back({n, c});
        for (const auto& [n, c] : e.values) ej.push_back({n, c});
        for (const auto& [n, val] : r.values) rj.push_back({{"n", n}, {"value", val.to_json()}});
        json doc = {{"id", id_json(d.id)},
                    {"name", d.name},
                    {"order", o.group_order()},
                    {"exponent", e.exponent},
                    {"order_spectrum", oj},
                    {"exponent_spectrum", ej},
                    {"table_row", line.to_json()},
                    {"revolved_spectrum", rj},
                    {"valuation_vector", v.to_json()}};
        os << doc.dump(2) << '\n';
        return;
      }
      os << "# group," << csv_quote(d.id.to_string()) << ',' << csv_quote(d.name) << '\n';
      os << "# order_spectrum\nn,count\n";
      for (const auto& [n, c] : o.counts) os << n << ',' << c << '\n';
      os << "# exponent_spectrum\nn,e\n";
      for (const auto& [n, c] : e.values) os << n << ',' << c << '\n';
      os << "# table_row\n" << table_header() << '\n' << line.csv() << '\n';
      os << "# revolved_spectrum\nn,r\n";
      for (const auto& [n, val] : r.values) os << n << ',' << val.to_string() << '\n';
      os << "# valuation_vector\nn,p,k\n";
      for (const auto& [key, k] : v.entries()) os << key.n << ',' << key.p << ',' << k << '\n';
    });
    return kExitOk;
  }

  int emit_tables(bool verify) {
    const auto tables = theorem_tables(*catalog_);
    std::vector<Check> checks;
    std::optional<VerificationReport> report;
    if (verify) {
      checks = reference_checks(tables);
      report = verify_certificate(table_certificate(*catalog_), *catalog_);
      checks.insert(checks.end(), report->checks.begin(), report->checks.end());
    }
    emit([&](std::ostream& os) {
      if (json_format()) {
        json doc = tables_json(tables);
        if (verify) {
          doc["checks"] = checks_json(checks);
          doc["certificate_report"] = report->to_json();
        }
        os << doc.dump(2) << '\n';
        return;
      }
      write_tables_csv(os, tables);
      if (verify) write_checks_csv(os, checks);
    });
    for (const auto& c : checks) {
      if (c.passed) continue;
      err_ << "verification failed: " << c.name << ": " << c.detail << '\n';
      return kExitVerificationFailed;
    }
    return kExitOk;
  }

  int screen() {
    const std::size_t i = catalog_->resolve(cfg_.selector);
    const auto sys = catalog_system(*catalog_, i, 1);
    const auto res = least_squares_screen(sys, {cfg_.screen_tolerance, 0});
    const auto& d = catalog_->entry(i);
    emit([&](std::ostream& os) {
      if (json_format()) {
        json doc = {{"target", id_json(d.id)},
                    {"name", d.name},
                    {"rows", sys.matrix.rows()},
                    {"cols", sys.matrix.cols()},
                    {"residual", res.residual},
                    {"iterations", res.iterations},
                    {"converged", res.converged}};
        os << doc.dump(2) << '\n';
        return;
      }
      os << "target,name,rows,cols,residual,iterations,converged\n"
         << csv_quote(d.id.to_string()) << ',' << csv_quote(d.name) << ',' << sys.matrix.rows() << ','
         << sys.matrix.cols() << ',' << format_double(res.residual) << ',' << res.iterations << ','
         << (res.converged ? "true" : "false") << '\n';
    });
    return kExitOk;
  }

  int search() {
    const std::size_t i = catalog_->resolve(cfg_.selector);
    const auto& d = catalog_->entry(i);
    const auto outcome = search_certificate(*catalog_, i, {cfg_.max_multiplicity});
    const auto& sys = outcome.system;
    err_ << "system: " << sys.matrix.rows() << " rows x " << sys.matrix.cols() << " columns\n"
         << "screen residual: " << format_double(outcome.screen.residual)
         << (outcome.screen.converged ? "" : " (not converged; upper bound)") << '\n';

    switch (outcome.status) {
      case SearchStatus::SolvableTarget:
        err_ << "warning: target " << d.id.to_string() << " " << d.name
             << " is solvable; no certificate emitted\n";
        return kExitSolvableTarget;
      case SearchStatus::Infeasible: {
        const auto& w = *outcome.witness;
        json witness = json::array();
        for (std::size_t r = 0; r < w.row_combination.size(); ++r) {
          if (w.row_combination[r] == 0) continue;
          const auto& key = sys.matrix.row_index[r];
          witness.push_back({{"n", key.n}, {"p", key.p}, {"y", w.row_combination[r].get_str()}});
        }
        json doc = {{"target", id_json(d.id)},
                    {"status", "infeasible"},
                    {"rank", w.rank},
                    {"witness", witness}};
        emit([&](std::ostream& os) { os << doc.dump(2) << '\n'; });
        err_ << "infeasible: target vector is outside the span of the solvable corpus (rank "
             << w.rank << ")\n";
        return kExitInfeasible;
      }
      case SearchStatus::Verified:
      case SearchStatus::VerificationFailed: {
        const bool ok = outcome.status == SearchStatus::Verified;
        const json doc = to_json(*outcome.certificate, ok, outcome.report->joint_exponent);
        emit([&](std::ostream& os) { os << doc.dump(2) << '\n'; });
        err_ << "target multiplicity t = " << outcome.target_multiplicity
             << ", denominator scale = " << outcome.scale.get_str() << '\n';
        for (const auto& c : outcome.report->checks)
          err_ << (c.passed ? "  pass " : "  FAIL ") << c.name << (c.detail.empty() ? "" : ": ")
               << c.detail << '\n';
        return ok ? kExitOk : kExitVerificationFailed;
      }
    }
    return kExitInputError;
  }

  RunConfig cfg_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<Catalog> catalog_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.catalog_path = ORDERTYPE_DEFAULT_CATALOG;

  CLI::App app{"Order types of finite permutation groups"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "csv";
  app.add_option("--catalog", cfg.catalog_path, "Catalog JSON file");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out_path, "Write results to this file");
  app.add_option("--max-multiplicity", cfg.max_multiplicity, "Largest target multiplicity tried by search")
      ->check(CLI::PositiveNumber);
  app.add_option("--enum-cap", cfg.enum_cap, "Element cap for group enumeration")->check(CLI::PositiveNumber);

  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog inspection");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "List catalog entries");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Order, exponent and revolved spectra of one group");
  spectrum_cmd->add_option("group", cfg.selector, "Id such as (168,42) or a name")->required();
  app.add_subcommand("verify-theorem", "Check the G/H exponent-type identity and solvability split");
  app.add_subcommand("emit-tables", "Per-group exponent tables and factored products");
  auto* screen_cmd = app.add_subcommand("screen", "Least-squares distance of a target from the solvable span");
  screen_cmd->add_option("target", cfg.selector, "Id or name")->required();
  auto* search_cmd = app.add_subcommand("search", "Exact certificate search for a target");
  search_cmd->add_option("target", cfg.selector, "Id or name")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitInputError;
  }
  cfg.format = format == "json" ? Format::Json : Format::Csv;
  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    if (sub == catalog_cmd) cfg.command += " list";
  }

  try {
    Runner runner(cfg, out, err);
    return runner.dispatch();
  } catch (const ResolutionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace otype::cli
