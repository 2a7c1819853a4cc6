#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toricfrob/catalog.hpp"
#include "toricfrob/classes.hpp"
#include "toricfrob/frobenius.hpp"
#include "toricfrob/io.hpp"
#include "toricfrob/mori.hpp"
#include "toricfrob/report.hpp"
#include "toricfrob/svg.hpp"

namespace {

using namespace toricfrob;
using ojson = nlohmann::ordered_json;

enum Exit { kOk = 0, kValidation = 1, kParse = 2, kBudget = 3, kOther = 4 };

struct Input {
  std::string fan_file;
  std::string catalog_name;
  std::string format = "json";
  std::string out;
  unsigned p = 2;
  std::vector<unsigned> e_list{1, 2, 3};
  std::vector<std::string> divisor;
  bool timing = false;
  bool list = false;
};

Fan load(const Input& in) {
  if (in.fan_file.empty() == in.catalog_name.empty())
    throw Error(ErrorCode::ParseError, "give exactly one of --fan or --catalog");
  if (!in.catalog_name.empty()) return catalog(in.catalog_name);
  std::vector<std::string> warnings;
  Fan fan = read_fan_file(in.fan_file, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return fan;
}

void emit(const Input& in, const std::string& text) {
  if (in.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(in.out);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + in.out + "'");
  f << text;
}

ojson integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

ojson vector_json(const IntVector& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

std::string text_vector(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

ReportOptions report_options(const Input& in, bool full) {
  ReportOptions o;
  o.p = in.p;
  o.e_list = in.e_list;
  o.timing = in.timing;
  o.checks = full;
  o.oracles = full;
  return o;
}

// Subset of the full report, keyed by top-level field.
std::string partial_report(const Input& in, const Fan& fan, const std::vector<std::string>& keys) {
  const ojson full = ojson::parse(run_report(fan, report_options(in, false)));
  ojson out;
  out["name"] = full["name"];
  for (const auto& k : keys) out[k] = full[k];
  if (in.format == "text") return render_text(out.dump());
  return out.dump(2) + "\n";
}

std::string decompose(const Input& in, const Fan& fan) {
  const ClassGroup cg(fan);
  IntVector divisor(fan.rays.size());
  if (!in.divisor.empty()) {
    if (in.divisor.size() != fan.rays.size())
      throw Error(ErrorCode::DimensionMismatch, "--divisor needs one coefficient per ray");
    for (std::size_t i = 0; i < divisor.size(); ++i) {
      try {
        divisor[i] = Integer(in.divisor[i]);
      } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::ParseError, "--divisor entry '" + in.divisor[i] + "' is not an integer");
      }
    }
  }
  ojson runs = ojson::array();
  std::ostringstream text;
  for (unsigned e : in.e_list) {
    const auto dec = pushforward_decomposition(fan, cg, divisor, in.p, e);
    ojson entries = ojson::array();
    text << "q = " << dec.q << " (p = " << in.p << ", e = " << e << "), rank " << dec.total() << "\n";
    for (const auto& [cls, m] : dec.entries) {
      entries.push_back({{"class", vector_json(cls.free.coords)},
                         {"torsion", vector_json(cls.torsion)},
                         {"multiplicity", integer_json(m)}});
      text << "  O(-E), E = " << text_vector(cls.free.coords);
      if (!cls.torsion.empty()) text << " + torsion " << text_vector(cls.torsion);
      text << " : " << m << "\n";
    }
    runs.push_back({{"p", in.p}, {"e", e}, {"q", dec.q}, {"rank", integer_json(dec.total())},
                    {"entries", std::move(entries)}});
  }
  if (in.format == "text") return text.str();
  ojson out{{"name", fan.name}, {"divisor", vector_json(divisor)}, {"pushforwards", std::move(runs)}};
  return out.dump(2) + "\n";
}

std::string chain(const Input& in, const Fan& fan) {
  const auto steps = blowdown_chain(fan);
  ojson arr = ojson::array();
  std::ostringstream text;
  text << "blowdown chain from " << fan.name << ": " << steps.size() << " step(s)\n";
  for (const auto& s : steps) {
    arr.push_back({{"removed_ray", s.removed_ray},
                   {"relation", vector_json(s.contraction.relation.coefficients)},
                   {"rays", s.fan.rays.size()},
                   {"max_cones", s.fan.max_cones.size()},
                   {"fan", ojson::parse(serialize_fan(s.fan))}});
    text << "  contract ray " << s.removed_ray << " via " << text_vector(s.contraction.relation.coefficients)
         << " -> " << s.fan.rays.size() << " rays, " << s.fan.max_cones.size() << " cones\n";
  }
  if (in.format == "text") return text.str();
  ojson out{{"name", fan.name}, {"steps", std::move(arr)}};
  return out.dump(2) + "\n";
}

std::string validate_verb(const Input& in, const Fan& fan, bool& ok) {
  const auto d = validate(fan);
  ok = d.valid();
  if (in.format == "text") {
    std::ostringstream os;
    os << (ok ? "valid" : "invalid") << ": simplicial " << d.simplicial << ", complete " << d.complete
       << ", smooth " << d.smooth << "\n";
    for (const auto& e : d.errors) os << "  " << e << "\n";
    return os.str();
  }
  ojson out{{"name", fan.name},     {"valid", ok},         {"simplicial", d.simplicial},
            {"complete", d.complete}, {"smooth", d.smooth}, {"errors", d.errors}};
  return out.dump(2) + "\n";
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ValidationError:
    case ErrorCode::MalformedFan: return kValidation;
    case ErrorCode::ParseError:
    case ErrorCode::UnknownName: return kParse;
    case ErrorCode::BudgetExceeded: return kBudget;
    default: return kOther;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius and Mori invariants of complete simplicial toric varieties"};
  app.require_subcommand(1);
  Input in;

  auto add_input = [&](CLI::App* sub) {
    auto* fan = sub->add_option("--fan", in.fan_file, "JSON fan file");
    auto* cat = sub->add_option("--catalog", in.catalog_name, "catalog expression, e.g. hirzebruch(2)");
    fan->excludes(cat);
    sub->add_option("--out", in.out, "write output here instead of stdout");
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", in.format, "output format")->check(CLI::IsMember(formats));
  };

  auto* v_validate = app.add_subcommand("validate", "check simplicial, complete and smooth");
  add_input(v_validate);
  add_format(v_validate, {"json", "text"});

  auto* v_report = app.add_subcommand("report", "full report with cross-checks");
  add_input(v_report);
  add_format(v_report, {"json", "text"});
  v_report->add_option("--p", in.p, "characteristic for the counting oracles");
  v_report->add_option("--e", in.e_list, "Frobenius powers for the counting oracles");
  v_report->add_flag("--timing", in.timing, "include per-section wall-clock times");

  auto* v_fsupp = app.add_subcommand("fsupp", "Frobenius support with densities and flags");
  add_input(v_fsupp);
  add_format(v_fsupp, {"json", "text"});

  auto* v_decompose = app.add_subcommand("decompose", "split F^e_* O(-D) into line bundles");
  add_input(v_decompose);
  add_format(v_decompose, {"json", "text"});
  v_decompose->add_option("--p", in.p, "characteristic");
  v_decompose->add_option("--e", in.e_list, "Frobenius powers")->expected(1, -1);
  v_decompose->add_option("--divisor", in.divisor, "coefficients of D, one per ray")->delimiter(',');

  auto* v_signatures = app.add_subcommand("signatures", "ample and nef F-signatures");
  add_input(v_signatures);
  add_format(v_signatures, {"json", "text"});

  auto* v_mori = app.add_subcommand("mori", "Mori cone and extremal contractions");
  add_input(v_mori);
  add_format(v_mori, {"json", "text"});

  auto* v_chain = app.add_subcommand("chain", "contract inert divisorial rays until eff = nef");
  add_input(v_chain);
  add_format(v_chain, {"json", "text"});

  auto* v_plot = app.add_subcommand("plot", "SVG of N^1 for Picard rank 2");
  add_input(v_plot);
  add_format(v_plot, {"svg"});

  auto* v_catalog = app.add_subcommand("catalog", "list the built-in fans");
  v_catalog->add_flag("--list", in.list, "print the catalog syntax");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (v_catalog->parsed()) {
      for (const auto& line : catalog_listing()) std::cout << line << "\n";
      return kOk;
    }
    if (v_validate->parsed()) {
      // Validation reports instead of throwing, so load without require_valid.
      Fan fan;
      try {
        fan = load(in);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ValidationError) throw;
        std::cerr << e.what() << "\n";
        return kValidation;
      }
      bool ok = true;
      emit(in, validate_verb(in, fan, ok));
      return ok ? kOk : kValidation;
    }
    const Fan fan = load(in);
    if (v_report->parsed()) {
      const std::string json = run_report(fan, report_options(in, true));
      emit(in, in.format == "text" ? render_text(json) : json);
    } else if (v_fsupp->parsed()) {
      emit(in, partial_report(in, fan, {"class_group", "fsupp"}));
    } else if (v_signatures->parsed()) {
      emit(in, partial_report(in, fan, {"signatures", "verdicts"}));
    } else if (v_mori->parsed()) {
      emit(in, partial_report(in, fan, {"cones", "contractions", "verdicts"}));
    } else if (v_decompose->parsed()) {
      emit(in, decompose(in, fan));
    } else if (v_chain->parsed()) {
      emit(in, chain(in, fan));
    } else if (v_plot->parsed()) {
      emit(in, plot_ns(fan));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
  return kOk;
}
