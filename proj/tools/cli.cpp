#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gdua/classify.hpp"
#include "gdua/parse.hpp"
#include "gdua/pbw.hpp"
#include "report.hpp"

namespace gdua::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

CycloNumber scalar_to_cyclo(const ScalarValue& v) {
  if (std::holds_alternative<MonomialScalar>(v)) {
    const MonomialScalar& m = std::get<MonomialScalar>(v);
    return m.to_cyclo(m.root_order());
  }
  return std::get<CycloNumber>(v);
}

struct MappedError {
  std::string kind;
  int code;
};

MappedError map_error(const std::exception& e) {
  if (dynamic_cast<const SyntaxError*>(&e)) return {"SyntaxError", kExitUsage};
  if (dynamic_cast<const UnsupportedScalarForm*>(&e)) {
    return {"UnsupportedScalarForm", kExitDomain};
  }
  if (dynamic_cast<const RootsNotRepresentable*>(&e)) {
    return {"RootsNotRepresentable", kExitDomain};
  }
  if (dynamic_cast<const ZeroBeta*>(&e)) return {"ZeroBeta", kExitUsage};
  if (dynamic_cast<const ZeroScalar*>(&e)) return {"ZeroScalar", kExitUsage};
  return {"Error", kExitUsage};
}

struct GduaInput {
  Poly f;
  ScalarValue r, s;
  CycloNumber gamma;
  ordered_json echo;
};

GduaInput parse_gdua(const std::string& f_src, const std::string& r_src,
                     const std::string& s_src, const std::string& gamma_src) {
  GduaInput in{Poly::zero(1),
               MonomialScalar::one(),
               MonomialScalar::one(),
               CycloNumber::zero(1),
               {}};
  in.f = parse_poly(f_src);
  in.r = parse_scalar(r_src);
  in.s = parse_scalar(s_src);
  in.gamma = scalar_to_cyclo(parse_scalar(gamma_src));
  in.echo = ordered_json{{"mode", "gdua"},
                         {"f", format_poly(in.f)},
                         {"r", format_scalar(in.r)},
                         {"s", format_scalar(in.s)},
                         {"gamma", format_cyclo(in.gamma)}};
  return in;
}

int do_classify(const GduaInput& in, bool json, bool inventory_only,
                std::ostream& out) {
  Classification c = classify_general(in.f, in.r, in.s, in.gamma);
  if (json) {
    out << report_json(in.echo, c).dump() << "\n";
  } else if (inventory_only) {
    out << inventory_text(c.inventory);
  } else {
    out << classification_text(c);
  }
  return kExitOk;
}

int do_downup(const std::string& alpha_src, const std::string& beta_src,
              const std::string& r_src, const std::string& s_src,
              const std::string& gamma_src, bool rs_form, bool json,
              std::ostream& out) {
  CycloNumber gamma = scalar_to_cyclo(parse_scalar(gamma_src));
  Classification c;
  ordered_json echo;
  if (rs_form) {
    ScalarValue r = parse_scalar(r_src);
    ScalarValue s = parse_scalar(s_src);
    c = classify_downup_rs(r, s, gamma);
    echo = ordered_json{{"mode", "downup"},
                        {"r", format_scalar(r)},
                        {"s", format_scalar(s)},
                        {"gamma", format_cyclo(gamma)}};
  } else {
    CycloNumber alpha = scalar_to_cyclo(parse_scalar(alpha_src));
    CycloNumber beta = scalar_to_cyclo(parse_scalar(beta_src));
    c = classify_downup(alpha, beta, gamma);
    echo = ordered_json{{"mode", "downup"},
                        {"alpha", format_cyclo(alpha)},
                        {"beta", format_cyclo(beta)},
                        {"gamma", format_cyclo(gamma)}};
  }
  if (json) {
    out << report_json(echo, c).dump() << "\n";
  } else {
    out << classification_text(c);
  }
  return kExitOk;
}

int do_smith(const std::string& f_src, bool json, std::ostream& out) {
  Poly f = parse_poly(f_src);
  Classification c = classify_smith(f);
  if (json) {
    ordered_json echo{{"mode", "smith"}, {"f", format_poly(f)}};
    out << report_json(echo, c).dump() << "\n";
  } else {
    out << classification_text(c);
  }
  return kExitOk;
}

int do_verify(const GduaInput& in, unsigned max_k, bool json,
              std::ostream& out) {
  auto rs = resolve_scalar_pair(in.r, in.s);
  if (!rs) throw ZeroScalar("verify requires nonzero r and s");
  PresentationPtr pres =
      Presentation::create(in.f, rs->first, rs->second, in.gamma);

  unsigned ambient = pres->ambient_order();
  CycloNumber rc = pres->r().to_cyclo(ambient);
  CycloNumber sc = pres->s().to_cyclo(ambient);
  AlgebraElement D = AlgebraElement::d(pres);
  AlgebraElement U = AlgebraElement::u(pres);
  AlgebraElement H = AlgebraElement::h(pres);
  AlgebraElement zero = AlgebraElement::zero(pres);

  struct Check {
    std::string name;
    bool ok;
  };
  std::vector<Check> checks;
  checks.push_back(
      {"relation.dh",
       D * H - (H * D).scaled(rc) + D.scaled(pres->gamma()) == zero});
  checks.push_back(
      {"relation.hu",
       H * U - (U * H).scaled(rc) + U.scaled(pres->gamma()) == zero});
  checks.push_back(
      {"relation.du",
       D * U - (U * D).scaled(sc) +
               AlgebraElement::from_h_poly(pres, pres->f()) ==
           zero});
  if (pres->gamma_is_zero()) {
    for (unsigned k = 1; k <= max_k; ++k) {
      checks.push_back({"power_identity.k" + std::to_string(k),
                        check_power_identity(pres, k)});
    }
  }
  auto cw = conformal_witness(pres->f(), pres->r(), pres->s(), pres->gamma());
  if (cw) {
    AlgebraElement z = U * D - AlgebraElement::from_h_poly(pres, cw->g);
    auto q = q_commutation_check(z);
    bool ok = q && (*q)[0] == sc.inverse() &&
              (*q)[1] == CycloNumber::one(ambient) && (*q)[2] == sc;
    checks.push_back({"z_q_commutation", ok});
  }

  bool all_ok = true;
  for (const Check& c : checks) all_ok = all_ok && c.ok;

  if (json) {
    ordered_json j;
    j["schema_version"] = "1";
    j["input"] = in.echo;
    ordered_json cj = ordered_json::array();
    for (const Check& c : checks) {
      cj.push_back(ordered_json{{"name", c.name}, {"ok", c.ok}});
    }
    j["verify"] = ordered_json{
        {"max_k", max_k}, {"checks", std::move(cj)}, {"all_ok", all_ok}};
    out << j.dump() << "\n";
  } else {
    for (const Check& c : checks) {
      out << c.name << ": " << (c.ok ? "ok" : "FAIL") << "\n";
    }
    out << (all_ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  return all_ok ? kExitOk : kExitUsage;
}

// One master-vs-regime comparison; returns true when the verdicts agree.
bool cross_check_one(const GduaInput& in, std::ostream& out) {
  Classification master = classify_general(in.f, in.r, in.s, in.gamma);
  Classification regime =
      classify_by_regime_general(in.f, in.r, in.s, in.gamma);
  bool agree = master.verdict == regime.verdict;
  ordered_json j;
  j["input"] = in.echo;
  j["master"] = ordered_json{{"verdict", to_string(master.verdict)},
                             {"fired_rule", master.fired_rule}};
  j["regime"] = ordered_json{{"verdict", to_string(regime.verdict)},
                             {"fired_rule", regime.fired_rule}};
  j["agree"] = agree;
  out << j.dump() << "\n";
  return agree;
}

std::string record_field(const nlohmann::json& rec, const char* key,
                         const std::string& fallback) {
  if (!rec.contains(key)) return fallback;
  const auto& v = rec.at(key);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

int do_cross_check(const std::string& f_src, const std::string& r_src,
                   const std::string& s_src, const std::string& gamma_src,
                   const std::string& batch_path, std::ostream& out,
                   std::ostream& err) {
  long disagreements = 0;
  long failures = 0;
  if (batch_path.empty()) {
    GduaInput in = parse_gdua(f_src, r_src, s_src, gamma_src);
    if (!cross_check_one(in, out)) ++disagreements;
  } else {
    std::ifstream file(batch_path);
    if (!file) {
      err << "error: cannot open batch file " << batch_path << "\n";
      return kExitUsage;
    }
    std::string line;
    while (std::getline(file, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        nlohmann::json rec = nlohmann::json::parse(line);
        GduaInput in = parse_gdua(record_field(rec, "f", "0"),
                                  record_field(rec, "r", ""),
                                  record_field(rec, "s", ""),
                                  record_field(rec, "gamma", "0"));
        if (!cross_check_one(in, out)) ++disagreements;
      } catch (const std::exception& e) {
        ++failures;
        out << error_json(map_error(e).kind, e.what()).dump() << "\n";
      }
    }
  }
  err << "disagreements: " << disagreements << "\n";
  if (failures > 0) err << "failed records: " << failures << "\n";
  return (disagreements == 0 && failures == 0) ? kExitOk : kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Unique factorization classifier for generalized down-up "
               "algebras L(f, r, s, gamma)"};
  app.require_subcommand(1);

  std::string f_src = "0", r_src, s_src, gamma_src = "0";
  std::string alpha_src, beta_src, batch_path;
  unsigned max_k = 6;
  bool json = false;

  auto add_gdua_flags = [&](CLI::App* cmd, bool rs_required) {
    cmd->add_option("--f", f_src, "polynomial f(h)")->capture_default_str();
    auto* r_opt = cmd->add_option("--r", r_src, "scalar r");
    auto* s_opt = cmd->add_option("--s", s_src, "scalar s");
    if (rs_required) {
      r_opt->required();
      s_opt->required();
    }
    cmd->add_option("--gamma", gamma_src, "scalar gamma")
        ->capture_default_str();
  };

  CLI::App* c_classify =
      app.add_subcommand("classify", "classify L(f, r, s, gamma)");
  add_gdua_flags(c_classify, true);
  c_classify->add_flag("--json", json, "emit a JSON report");

  CLI::App* c_inventory = app.add_subcommand(
      "inventory", "height-one prime inventory of L(f, r, s, gamma)");
  add_gdua_flags(c_inventory, true);
  c_inventory->add_flag("--json", json, "emit a JSON report");

  CLI::App* c_downup = app.add_subcommand(
      "classify-downup", "classify the down-up algebra A(alpha, beta, gamma)");
  auto* a_opt = c_downup->add_option("--alpha", alpha_src, "scalar alpha");
  auto* b_opt = c_downup->add_option("--beta", beta_src, "scalar beta");
  auto* r_opt = c_downup->add_option("--r", r_src, "root r of h^2-alpha*h-beta");
  auto* s_opt = c_downup->add_option("--s", s_src, "root s of h^2-alpha*h-beta");
  c_downup->add_option("--gamma", gamma_src, "scalar gamma")
      ->capture_default_str();
  c_downup->add_flag("--json", json, "emit a JSON report");
  a_opt->needs(b_opt);
  b_opt->needs(a_opt);
  r_opt->needs(s_opt);
  s_opt->needs(r_opt);
  a_opt->excludes(r_opt);
  a_opt->excludes(s_opt);

  CLI::App* c_smith =
      app.add_subcommand("classify-smith", "classify the Smith algebra S(f)");
  c_smith->add_option("--f", f_src, "polynomial f(h)")->capture_default_str();
  c_smith->add_flag("--json", json, "emit a JSON report");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "check defining relations and power identities exactly");
  add_gdua_flags(c_verify, true);
  c_verify->add_option("--max-k", max_k, "largest power-identity exponent")
      ->capture_default_str();
  c_verify->add_flag("--json", json, "emit a JSON report");

  CLI::App* c_cross = app.add_subcommand(
      "cross-check", "master classifier vs per-regime theorems");
  add_gdua_flags(c_cross, false);
  c_cross->add_option("--batch", batch_path,
                      "JSONL file with one flat input record per line");

  std::vector<const char*> argv;
  argv.push_back("gdua");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(c_classify)) {
      return do_classify(parse_gdua(f_src, r_src, s_src, gamma_src), json,
                         false, out);
    }
    if (app.got_subcommand(c_inventory)) {
      return do_classify(parse_gdua(f_src, r_src, s_src, gamma_src), json,
                         true, out);
    }
    if (app.got_subcommand(c_downup)) {
      bool ab_form = a_opt->count() > 0;
      bool rs_form = r_opt->count() > 0;
      if (!ab_form && !rs_form) {
        err << "classify-downup requires either --alpha/--beta or --r/--s\n";
        return kExitUsage;
      }
      return do_downup(alpha_src, beta_src, r_src, s_src, gamma_src, rs_form,
                       json, out);
    }
    if (app.got_subcommand(c_smith)) return do_smith(f_src, json, out);
    if (app.got_subcommand(c_verify)) {
      return do_verify(parse_gdua(f_src, r_src, s_src, gamma_src), max_k,
                       json, out);
    }
    if (app.got_subcommand(c_cross)) {
      if (batch_path.empty() && (r_src.empty() || s_src.empty())) {
        err << "cross-check requires --batch or --r and --s\n";
        return kExitUsage;
      }
      return do_cross_check(f_src, r_src, s_src, gamma_src, batch_path, out,
                            err);
    }
  } catch (const std::exception& e) {
    MappedError m = map_error(e);
    if (json) {
      out << error_json(m.kind, e.what()).dump() << "\n";
    } else {
      err << "error (" << m.kind << "): " << e.what() << "\n";
    }
    return m.code;
  }
  return kExitUsage;
}

}  // namespace gdua::cli
