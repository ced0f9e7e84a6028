#include "combpoly/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <json.hpp>
#include <map>
#include <sstream>

#include "combpoly/errors.hpp"
#include "combpoly/families.hpp"
#include "combpoly/verify.hpp"

namespace combpoly::cli {

namespace {

using Json = nlohmann::ordered_json;

// Plain numbers while a double can hold them, decimal strings beyond.
Json int_json(const Int& v) {
  if (fits_double_exactly(v)) return Json(v.get_si());
  return Json(v.get_str());
}

Json coeffs_json(const UniPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(int_json(c));
  return arr;
}

// Terms of a bivariate Andre value in ascending (xexp, yexp) order.
Json terms_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["xexp"] = e[0];
    t["yexp"] = e[1];
    t["coeff"] = int_json(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct Options {
  std::string format = "text";
  std::string family;
  int n = -1;
  std::string method;
  std::string variant;
  std::string target;
  std::string suite = "all";
  int max_n = -1;
  bool strict_flags = false;
  bool timings = false;
  int rows = -1;
};

int do_compute(const Options& o, std::ostream& out) {
  const FamilyId f = parse_family(o.family);
  const Method m = o.method.empty() ? reference_method(f) : parse_method(f, o.method);
  const FamilyValue v = family(f, o.n, m);
  if (o.format == "json") {
    Json j;
    j["family"] = to_string(f);
    j["n"] = o.n;
    j["method"] = m.name();
    if (const auto* p = std::get_if<UniPoly>(&v)) {
      j["coeffs"] = coeffs_json(*p);
    } else {
      j["terms"] = terms_json(std::get<LaurentPoly>(v));
    }
    out << j.dump() << '\n';
  } else if (o.format == "csv") {
    if (const auto* p = std::get_if<UniPoly>(&v)) {
      out << "k,coeff\n";
      for (size_t k = 0; k < p->coeffs().size(); ++k) {
        out << k << ',' << p->coeffs()[k].get_str() << '\n';
      }
    } else {
      out << "xexp,yexp,coeff\n";
      for (const auto& [e, c] : std::get<LaurentPoly>(v).terms()) {
        out << e[0] << ',' << e[1] << ',' << c.get_str() << '\n';
      }
    }
  } else {
    out << to_string(f) << '_' << o.n << " = " << to_string(v) << "  [" << m.name() << "]\n";
  }
  return kExitOk;
}

template <class R>
std::string entry_text(const R& v) {
  if constexpr (std::is_same_v<R, Int>) {
    return v.get_str();
  } else {
    return v.to_string();
  }
}

int do_det(const Options& o, std::ostream& out) {
  const DetVariant v = parse_det_variant(o.variant);
  const FamilyId target = o.target.empty() ? default_target(v) : parse_family(o.target);
  check_target(v, target);
  const MatrixValue mv = build_matrix(v, o.n, target);
  const FamilyValue d = determinant(mv);
  std::vector<std::vector<std::string>> cells;
  std::visit(
      [&](const auto& h) {
        for (size_t i = 0; i < h.order(); ++i) {
          std::vector<std::string> row;
          for (size_t j = 0; j < h.order(); ++j) row.push_back(entry_text(h.at(i, j)));
          cells.push_back(std::move(row));
        }
      },
      mv);
  const int index = family_index(v, o.n, target);
  if (o.format == "json") {
    Json j;
    j["variant"] = to_string(v);
    j["target"] = to_string(target);
    j["n"] = o.n;
    j["order"] = order_of(mv);
    j["index"] = index;
    j["matrix"] = cells;
    if (const auto* p = std::get_if<UniPoly>(&d)) {
      j["det"] = coeffs_json(*p);
    } else {
      j["det"] = terms_json(std::get<LaurentPoly>(d));
    }
    out << j.dump() << '\n';
  } else if (o.format == "csv") {
    out << "i,j,entry\n";
    for (size_t i = 0; i < cells.size(); ++i) {
      for (size_t k = 0; k < cells[i].size(); ++k) {
        out << i + 1 << ',' << k + 1 << ',' << csv_field(cells[i][k]) << '\n';
      }
    }
  } else {
    size_t width = 1;
    for (const auto& r : cells) {
      for (const auto& c : r) width = std::max(width, c.size());
    }
    for (const auto& r : cells) {
      for (size_t k = 0; k < r.size(); ++k) {
        out << (k ? "  " : "") << std::string(width - r[k].size(), ' ') << r[k];
      }
      out << '\n';
    }
    out << "det = " << to_string(d) << "  (" << to_string(target) << '_' << index << ")\n";
  }
  return kExitOk;
}

int do_verify(const Options& o, std::ostream& out) {
  const std::vector<CheckId> selection = expand_selection(o.suite);
  std::map<std::string, int> bounds;
  if (o.max_n >= 0) {
    for (const auto& id : selection) bounds[id.name()] = o.max_n;
  }
  const Report report = run_suite(selection, bounds);
  if (o.format == "json") {
    Json checks = Json::array();
    for (const auto& e : report.entries) {
      Json j;
      j["id"] = e.id.name();
      j["n_min"] = e.n_min;
      j["n_max"] = e.n_max;
      j["status"] = to_string(e.status);
      if (e.counterexample) {
        j["counterexample"] = {{"n", e.counterexample->n},
                               {"lhs", e.counterexample->lhs},
                               {"rhs", e.counterexample->rhs}};
      }
      if (!e.observed.empty()) j["observed"] = e.observed;
      if (o.timings) j["elapsed_ms"] = e.elapsed_ms;
      checks.push_back(std::move(j));
    }
    Json j;
    j["checks"] = std::move(checks);
    j["summary"] = {{"pass", report.count(Status::pass)},
                    {"fail", report.count(Status::fail)},
                    {"flag", report.count(Status::flag)}};
    out << j.dump() << '\n';
  } else if (o.format == "csv") {
    out << "id,n_min,n_max,status,n,lhs,rhs,observed" << (o.timings ? ",elapsed_ms" : "") << '\n';
    for (const auto& e : report.entries) {
      out << e.id.name() << ',' << e.n_min << ',' << e.n_max << ',' << to_string(e.status) << ',';
      if (e.counterexample) {
        out << e.counterexample->n << ',' << csv_field(e.counterexample->lhs) << ','
            << csv_field(e.counterexample->rhs);
      } else {
        out << ",,";
      }
      out << ',' << csv_field(e.observed);
      if (o.timings) out << ',' << e.elapsed_ms;
      out << '\n';
    }
  } else {
    for (const auto& e : report.entries) {
      std::string tag(to_string(e.status));
      for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      out << tag << ' ' << e.id.name() << " n=" << e.n_min << ".." << e.n_max;
      if (!e.observed.empty()) out << "  " << e.observed;
      if (e.status == Status::fail && e.counterexample) {
        out << "  at n=" << e.counterexample->n << ": " << e.counterexample->lhs
            << " != " << e.counterexample->rhs;
      }
      if (o.timings) out << "  (" << e.elapsed_ms << " ms)";
      out << '\n';
    }
    out << report.count(Status::pass) << " pass, " << report.count(Status::fail) << " fail, "
        << report.count(Status::flag) << " flag\n";
  }
  return report.ok(o.strict_flags) ? kExitOk : kExitCheckFailed;
}

int do_table(const Options& o, std::ostream& out) {
  const FamilyId f = parse_family(o.family);
  const bool triangle = f == FamilyId::R || f == FamilyId::T;
  const Method m = reference_method(f);
  const int first = triangle ? 1 : m.min_n;
  Json rows = Json::array();
  if (o.format == "csv") out << (f == FamilyId::Andre ? "n,xexp,yexp,value\n" : "n,k,value\n");
  for (int n = first; n <= o.rows; ++n) {
    if (f == FamilyId::Andre) {
      const LaurentPoly e = std::get<LaurentPoly>(family(f, n, m));
      if (o.format == "csv") {
        for (const auto& [ex, c] : e.terms()) {
          out << n << ',' << ex[0] << ',' << ex[1] << ',' << c.get_str() << '\n';
        }
      } else if (o.format == "json") {
        rows.push_back({{"n", n}, {"terms", terms_json(e)}});
      } else {
        out << n << ": " << e.to_string() << '\n';
      }
      continue;
    }
    std::vector<Int> values;
    if (triangle) {
      for (int k = 0; k <= n; ++k) values.push_back(triangle_entry(f, n, k));
      while (!values.empty() && values.back() == 0) values.pop_back();
    } else {
      values = family_poly(f, n, m).coeffs();
    }
    if (o.format == "csv") {
      for (size_t k = 0; k < values.size(); ++k) {
        out << n << ',' << k << ',' << values[k].get_str() << '\n';
      }
    } else if (o.format == "json") {
      Json arr = Json::array();
      for (const auto& v : values) arr.push_back(int_json(v));
      rows.push_back({{"n", n}, {"coeffs", std::move(arr)}});
    } else {
      out << n << ':';
      for (const auto& v : values) out << ' ' << v.get_str();
      out << '\n';
    }
  }
  if (o.format == "json") {
    Json j;
    j["family"] = to_string(f);
    j["rows"] = std::move(rows);
    out << j.dump() << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact combinatorial polynomial engine", "combpoly"};
  app.require_subcommand(1, 1);
  const std::vector<std::string> formats{"text", "json", "csv"};

  auto* compute = app.add_subcommand("compute", "Compute one family value");
  compute->add_option("--family", o.family, "A, Andre, EulerNum, R, S, T, B, F or D")->required();
  compute->add_option("--n", o.n, "Index")->required()->check(CLI::NonNegativeNumber);
  compute->add_option("--method", o.method, "Method name, e.g. grammar or determinant:sr_thmB");
  compute->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* det = app.add_subcommand("det", "Print a determinant matrix and its value");
  det->add_option("--variant", o.variant, "Determinant variant")->required();
  det->add_option("--n", o.n, "Matrix parameter")->required()->check(CLI::NonNegativeNumber);
  det->add_option("--target", o.target, "Family, for variants that build more than one");
  det->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("--suite", o.suite, "Comma-separated check names, or all");
  verify->add_option("--max-n", o.max_n, "Upper bound for every selected check")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--strict-flags", o.strict_flags, "Treat flagged checks as failures");
  verify->add_flag("--timings", o.timings, "Include elapsed times");
  verify->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* table = app.add_subcommand("table", "Emit coefficient rows");
  table->add_option("--family", o.family)->required();
  table->add_option("--rows", o.rows, "Last row")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--format", o.format)->check(CLI::IsMember(formats));

  std::vector<const char*> argv{"combpoly"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (compute->parsed()) return do_compute(o, out);
    if (det->parsed()) return do_det(o, out);
    if (verify->parsed()) return do_verify(o, out);
    return do_table(o, out);
  } catch (const ExactDivisionFailed& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const NonIntegerResult& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    // Bad names, unsupported methods and out-of-range sizes are all
    // problems with the request rather than with the mathematics.
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }
}

}  // namespace combpoly::cli
