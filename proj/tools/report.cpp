#include "report.hpp"

#include <sstream>

#include "gdua/parse.hpp"

namespace gdua {

namespace {

template <typename T>
ordered_json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

ordered_json witnesses_json(const Witnesses& w) {
  ordered_json j;
  j["conformal"] = w.conformal;
  j["g"] = w.g ? ordered_json(format_poly(*w.g)) : ordered_json(nullptr);
  j["w"] = w.w ? ordered_json(format_cyclo(*w.w)) : ordered_json(nullptr);
  j["nontrivial_root"] = opt_json(w.nontrivial_root);
  j["tau"] = w.tau.convert_to<long long>();
  j["epsilon"] = w.epsilon.convert_to<long long>();
  j["group_rank"] = w.group_rank;
  j["torsionfree"] = w.torsionfree;
  j["r_order"] = opt_json(w.r_order);
  j["s_order"] = opt_json(w.s_order);
  j["minimal_k"] = opt_json(w.minimal_k);
  return j;
}

ordered_json inventory_json(const PrimeInventory& inv) {
  ordered_json j;
  j["coverage"] = to_string(inv.coverage);
  ordered_json primes = ordered_json::array();
  for (const PrimeDescriptor& p : inv.primes) {
    ordered_json pj;
    pj["generator"] = to_string(p.generator);
    pj["family_parameter"] = opt_json(p.family_parameter);
    pj["completely_prime"] = opt_json(p.completely_prime);
    pj["principal"] = p.principal;
    pj["exponent"] = opt_json(p.exponent);
    primes.push_back(std::move(pj));
  }
  j["primes"] = std::move(primes);
  return j;
}

}  // namespace

ordered_json classification_json(const Classification& c) {
  ordered_json j;
  j["verdict"] = to_string(c.verdict);
  j["fired_rule"] = c.fired_rule;
  j["witnesses"] = witnesses_json(c.witnesses);
  j["inventory"] = inventory_json(c.inventory);
  ordered_json trace = ordered_json::array();
  for (const TraceEntry& t : c.trace) {
    ordered_json tj;
    tj["condition"] = t.condition;
    tj["outcome"] = t.outcome;
    trace.push_back(std::move(tj));
  }
  j["trace"] = std::move(trace);
  return j;
}

ordered_json report_json(const ordered_json& input_echo,
                         const Classification& c) {
  ordered_json j;
  j["schema_version"] = "1";
  j["input"] = input_echo;
  j["classification"] = classification_json(c);
  return j;
}

ordered_json error_json(const std::string& kind, const std::string& message) {
  ordered_json j;
  j["error"] = ordered_json{{"kind", kind}, {"message", message}};
  return j;
}

std::string inventory_text(const PrimeInventory& inv) {
  std::ostringstream out;
  out << "inventory (" << to_string(inv.coverage) << "):\n";
  if (inv.primes.empty()) out << "  (none listed)\n";
  for (const PrimeDescriptor& p : inv.primes) {
    out << "  " << to_string(p.generator);
    if (p.exponent) out << "  exponent " << *p.exponent;
    if (p.family_parameter) out << "  family " << *p.family_parameter;
    out << "  " << (p.principal ? "principal" : "non-principal");
    if (p.completely_prime) {
      out << (*p.completely_prime ? ", completely prime"
                                  : ", not completely prime");
    }
    out << "\n";
  }
  return out.str();
}

std::string classification_text(const Classification& c) {
  std::ostringstream out;
  const Witnesses& w = c.witnesses;
  out << "verdict: " << to_string(c.verdict) << "\n";
  out << "fired rule: " << c.fired_rule << "\n";
  out << "witnesses:\n";
  out << "  conformal: " << (w.conformal ? "true" : "false") << "\n";
  out << "  g: " << (w.g ? format_poly(*w.g) : "-") << "\n";
  out << "  w: " << (w.w ? format_cyclo(*w.w) : "-") << "\n";
  out << "  nontrivial_root: "
      << (w.nontrivial_root ? (*w.nontrivial_root ? "true" : "false") : "-")
      << "\n";
  out << "  tau: " << w.tau.str() << "\n";
  out << "  epsilon: " << w.epsilon.str() << "\n";
  out << "  group_rank: " << w.group_rank << "\n";
  out << "  torsionfree: " << (w.torsionfree ? "true" : "false") << "\n";
  out << "  r_order: "
      << (w.r_order ? std::to_string(*w.r_order) : std::string("-")) << "\n";
  out << "  s_order: "
      << (w.s_order ? std::to_string(*w.s_order) : std::string("-")) << "\n";
  out << "  minimal_k: "
      << (w.minimal_k ? std::to_string(*w.minimal_k) : std::string("-"))
      << "\n";
  out << inventory_text(c.inventory);
  out << "trace:\n";
  for (const TraceEntry& t : c.trace) {
    out << "  " << t.condition << ": " << t.outcome << "\n";
  }
  return out.str();
}

}  // namespace gdua
