#include "toricfrob/report.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "toricfrob/classes.hpp"
#include "toricfrob/frobenius.hpp"
#include "toricfrob/mori.hpp"

namespace toricfrob {

namespace {

using ojson = nlohmann::ordered_json;

ojson integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

ojson rational_json(const Rational& x) {
  return ojson{{"num", integer_json(x.get_num())}, {"den", integer_json(x.get_den())}};
}

ojson vector_json(const IntVector& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

ojson vectors_json(const std::vector<IntVector>& vs) {
  ojson a = ojson::array();
  for (const auto& v : vs) a.push_back(vector_json(v));
  return a;
}

ojson check(const std::string& name, bool lhs, bool rhs) {
  return ojson{{"name", name}, {"status", lhs == rhs ? "pass" : "fail"}, {"lhs", lhs}, {"rhs", rhs}};
}

ojson skipped(const std::string& name, const std::string& reason) {
  return ojson{{"name", name}, {"status", "skipped"}, {"reason", reason}};
}

class Sections {
 public:
  explicit Sections(bool enabled) : enabled_(enabled) {}
  void run(const std::string& name, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    if (enabled_) {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
      timing_[name] = ms.count();
    }
  }
  const ojson& timing() const { return timing_; }

 private:
  bool enabled_;
  ojson timing_ = ojson::object();
};

}  // namespace

std::string run_report(const Fan& fan, const ReportOptions& options) {
  ojson out;
  Sections sections(options.timing);
  out["name"] = fan.name;
  out["dim"] = fan.dim;
  out["num_rays"] = fan.rays.size();
  out["num_max_cones"] = fan.max_cones.size();

  const FanDiagnostics diag = validate(fan);
  out["diagnostics"] = {{"simplicial", diag.simplicial},
                        {"complete", diag.complete},
                        {"smooth", diag.smooth},
                        {"errors", diag.errors}};
  require_valid(fan);

  const ClassGroup cg(fan);
  ojson torsion = ojson::array();
  for (const auto& t : cg.torsion()) torsion.push_back(integer_json(t));
  out["class_group"] = {{"rank", cg.rank()},
                        {"torsion", torsion},
                        {"ray_classes", vectors_json(cg.ray_classes())},
                        {"anticanonical", vector_json(anticanonical(cg).free.coords)}};

  std::vector<FSuppEntry> support;
  Cone eff, nef, mov, mori;
  FEffectiveCones fcones;
  sections.run("cones", [&] {
    eff = Cone{cg.rank(), extreme_rays(eff_cone(cg))};
    nef = nef_cone(fan, cg);
    mov = moving_cone(cg);
    mori = Cone{cg.rank(), extreme_rays(mori_cone(fan, cg))};
  });
  sections.run("fsupp", [&] {
    support = fsupp(fan, cg);
    fcones = f_effective_cones(cg, support);
  });
  out["cones"] = {{"eff", vectors_json(eff.generators)},
                  {"nef", vectors_json(nef.generators)},
                  {"mov", vectors_json(mov.generators)},
                  {"mori", vectors_json(mori.generators)},
                  {"frob", vectors_json(fcones.frob.generators)},
                  {"fe", vectors_json(fcones.fe.generators)}};

  ojson table = ojson::array();
  for (const auto& e : support) {
    table.push_back({{"class", vector_json(e.cls.coords)},
                     {"alpha", rational_json(e.alpha)},
                     {"big", e.big},
                     {"nef", e.nef},
                     {"ample", e.ample}});
  }
  out["fsupp"] = std::move(table);

  const SignatureReport sig = signatures(support);
  out["signatures"] = {{"ample", rational_json(sig.ample_signature)},
                       {"nef", rational_json(sig.nef_signature)},
                       {"big_mass", rational_json(sig.total_big_mass)}};

  std::vector<ContractionInfo> contractions;
  sections.run("mori", [&] { contractions = extremal_contractions(fan, cg); });
  ojson ctable = ojson::array();
  for (const auto& c : contractions) {
    ojson row{{"ray", vector_json(c.ray)},
              {"relation", vector_json(c.relation.coefficients)},
              {"kind", std::string(to_string(c.kind))},
              {"fiber_dim", c.fiber_dim},
              {"exc_codim", c.exc_codim},
              {"inert", c.inert},
              {"smooth_blowup", c.smooth_blowup},
              {"degree", integer_json(c.degree)}};
    row["length"] = c.length ? integer_json(*c.length) : ojson(nullptr);
    row["matches"] = c.matches;
    row["conflicting"] = c.conflicting;
    ctable.push_back(std::move(row));
  }
  out["contractions"] = std::move(ctable);

  const bool fano = is_fano(fan, cg);
  const bool inert_fano = is_birationally_inert_fano(fan, cg);
  const bool effnef = eff_equals_nef(fan, cg);
  ojson verdicts{{"fano", fano},
                 {"weak_fano", is_weak_fano(fan, cg)},
                 {"birationally_inert_fano", inert_fano},
                 {"eff_equals_nef", effnef}};
  bool projective = false, extremal = false;
  if (diag.smooth) {
    projective = is_projective_space(fan);
    extremal = is_extremal_fano(fan, cg);
    verdicts["projective_space"] = projective;
    verdicts["extremal_fano"] = extremal;
  } else {
    verdicts["projective_space"] = nullptr;
    verdicts["extremal_fano"] = nullptr;
  }
  verdicts["a"] = rational_json(sig.ample_signature);
  verdicts["n"] = rational_json(sig.nef_signature);
  out["verdicts"] = std::move(verdicts);

  bool all_big = true, all_nef = true, all_ample = true;
  for (const auto& e : support) {
    all_big = all_big && e.big;
    all_nef = all_nef && e.nef;
    all_ample = all_ample && e.ample;
  }

  if (options.checks) {
    ojson checks = ojson::array();
    const std::string singular = "fan is not smooth";
    if (diag.smooth) {
      checks.push_back(check("fsupp_big_iff_projective_space", all_big, projective));
      checks.push_back(check("fsupp_nef_iff_extremal_fano", all_nef, extremal));
      checks.push_back(check("fsupp_ample_iff_rank_one", all_ample, cg.rank() == 1));
      checks.push_back(check("a_one_iff_eff_equals_nef", sig.ample_signature == 1, effnef));
      if (extremal) {
        checks.push_back(check("fsupp_size_is_cones_minus_one", true,
                               support.size() + 1 == fan.max_cones.size()));
      } else {
        checks.push_back(skipped("fsupp_size_is_cones_minus_one", "not extremal Fano"));
      }
    } else {
      for (const char* name : {"fsupp_big_iff_projective_space", "fsupp_nef_iff_extremal_fano",
                               "fsupp_ample_iff_rank_one", "a_one_iff_eff_equals_nef",
                               "fsupp_size_is_cones_minus_one"}) {
        checks.push_back(skipped(name, singular));
      }
    }
    checks.push_back(check("fsupp_nef_iff_birationally_inert_fano", all_nef, inert_fano));
    checks.push_back(check("alpha_mass_is_one", sig.total_big_mass == 1, true));
    out["cross_checks"] = std::move(checks);
  }

  // Counting oracles at q = p^e.
  std::set<NumClass> fsupp_classes;
  for (const auto& e : support) fsupp_classes.insert(e.cls);
  ojson oracles = ojson::array();
  sections.run("oracles", [&] {
    if (!options.oracles) return;
    for (unsigned e : options.e_list) {
      ojson row{{"p", options.p}, {"e", e}};
      try {
        const auto dec = trace_kernel_decomposition(fan, cg, options.p, e);
        Integer expected = 1;
        for (std::size_t i = 0; i < fan.dim; ++i) expected *= Integer(static_cast<unsigned long>(dec.q));
        expected -= 1;
        std::set<NumClass> seen;
        for (const auto& [cls, m] : dec.entries)
          if (!is_zero(cls.free.coords)) seen.insert(cls.free);
        bool p_torsion = false;
        for (const auto& t : cg.torsion())
          if (t % options.p == 0) p_torsion = true;
        row["q"] = dec.q;
        row["rank_total"] = integer_json(dec.total());
        row["rank_expected"] = integer_json(expected);
        row["rank_ok"] = dec.total() == expected;
        row["support_equals_fsupp"] = seen == fsupp_classes;
        row["p_torsion"] = p_torsion;
      } catch (const Error& err) {
        if (err.code() != ErrorCode::BudgetExceeded) throw;
        row["skipped"] = err.what();
      }
      oracles.push_back(std::move(row));
    }
  });
  if (options.oracles) out["oracles"] = std::move(oracles);

  // Reported, never asserted.
  ojson open;
  open["fano_with_zero_nef_signature"] = fano && sig.nef_signature == 0;
  open["nef_signature_one_with_non_nef_support"] = sig.nef_signature == 1 && !all_nef;
  ojson witnesses = ojson::array();
  for (const auto& c : contractions) {
    if (c.kind != ContractionKind::Divisorial) continue;
    bool found = false;
    for (const auto& e : support) {
      if (e.nef && intersection_number(cg, cg.lift(e.cls), c.relation.coefficients) == 0) {
        found = true;
        break;
      }
    }
    witnesses.push_back({{"relation", vector_json(c.relation.coefficients)}, {"nef_witness", found}});
  }
  open["divisorial_nef_witness"] = std::move(witnesses);
  open["frob_equals_mov"] = same_cone(fcones.frob, mov);
  out["open_questions"] = std::move(open);

  if (options.timing) out["timing_ms"] = sections.timing();
  return out.dump(2) + "\n";
}

namespace {

std::string text_of(const ojson& v) {
  if (v.is_object() && v.contains("num")) {
    const std::string num = text_of(v["num"]), den = text_of(v["den"]);
    return den == "1" ? num : num + "/" + den;
  }
  if (v.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + text_of(v[i]);
    return s + ")";
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "n/a";
  return v.dump();
}

}  // namespace

std::string render_text(const std::string& report_json) {
  // Sections absent from the document (partial reports) are skipped.
  const ojson r = ojson::parse(report_json);
  std::ostringstream os;
  const std::string name = r.value("name", std::string{});
  os << "fan " << (name.empty() ? "(unnamed)" : name);
  if (r.contains("dim")) {
    os << ": dim " << r["dim"] << ", " << r["num_rays"] << " rays, " << r["num_max_cones"]
       << " maximal cones";
  }
  os << "\n";
  if (r.contains("diagnostics")) {
    const auto& d = r["diagnostics"];
    os << "  simplicial " << text_of(d["simplicial"]) << ", complete " << text_of(d["complete"])
       << ", smooth " << text_of(d["smooth"]) << "\n";
  }
  if (r.contains("class_group")) {
    const auto& cg = r["class_group"];
    os << "class group: rank " << cg["rank"] << ", torsion " << text_of(cg["torsion"]) << "\n";
    os << "  ray classes " << text_of(cg["ray_classes"]) << "\n";
    os << "  -K = " << text_of(cg["anticanonical"]) << "\n";
  }
  if (r.contains("cones")) {
    os << "cones (extreme rays):\n";
    for (const auto& [cone, rays] : r["cones"].items()) os << "  " << cone << ": " << text_of(rays) << "\n";
  }
  if (r.contains("fsupp")) {
    os << "Frobenius support (" << r["fsupp"].size() << " classes):\n";
    for (const auto& e : r["fsupp"]) {
      os << "  " << text_of(e["class"]) << "  alpha " << text_of(e["alpha"]);
      for (const char* flag : {"big", "nef", "ample"})
        if (e[flag].get<bool>()) os << " " << flag;
      os << "\n";
    }
  }
  if (r.contains("signatures")) {
    const auto& s = r["signatures"];
    os << "signatures: a = " << text_of(s["ample"]) << ", n = " << text_of(s["nef"])
       << ", big mass = " << text_of(s["big_mass"]) << "\n";
  }
  if (r.contains("contractions")) {
    os << "extremal contractions:\n";
    for (const auto& c : r["contractions"]) {
      os << "  " << text_of(c["ray"]) << " " << c["kind"].get<std::string>() << " relation "
         << text_of(c["relation"]) << " degree " << text_of(c["degree"]);
      if (c["inert"].get<bool>()) os << " inert";
      if (!c["length"].is_null()) os << " length " << text_of(c["length"]);
      if (c["conflicting"].get<bool>()) os << " CONFLICTING";
      os << "\n";
    }
  }
  if (r.contains("verdicts")) {
    os << "verdicts:\n";
    for (const auto& [verdict, v] : r["verdicts"].items()) os << "  " << verdict << ": " << text_of(v) << "\n";
  }
  if (r.contains("cross_checks")) {
    os << "cross-checks:\n";
    for (const auto& c : r["cross_checks"]) {
      os << "  " << c["status"].get<std::string>() << "  " << c["name"].get<std::string>();
      if (c.contains("reason")) os << " (" << c["reason"].get<std::string>() << ")";
      os << "\n";
    }
  }
  if (r.contains("oracles")) os << "oracles:\n";
  for (const auto& o : r.value("oracles", ojson::array())) {
    os << "  p=" << o["p"] << " e=" << o["e"];
    if (o.contains("skipped")) {
      os << " skipped: " << o["skipped"].get<std::string>() << "\n";
      continue;
    }
    os << " q=" << o["q"] << " rank " << text_of(o["rank_total"]) << "/" << text_of(o["rank_expected"])
       << " support=fsupp " << text_of(o["support_equals_fsupp"]) << "\n";
  }
  if (r.contains("open_questions")) {
    os << "open questions:\n";
    for (const auto& [question, v] : r["open_questions"].items()) {
      if (v.is_array()) {
        for (const auto& w : v)
          os << "  " << question << " " << text_of(w["relation"]) << ": " << text_of(w["nef_witness"]) << "\n";
      } else {
        os << "  " << question << ": " << text_of(v) << "\n";
      }
    }
  }
  if (r.contains("timing_ms")) {
    os << "timing (ms):\n";
    for (const auto& [section, v] : r["timing_ms"].items()) os << "  " << section << ": " << v << "\n";
  }
  return os.str();
}

}  // namespace toricfrob
