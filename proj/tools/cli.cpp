#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "witt/centralizer.hpp"
#include "witt/errors.hpp"
#include "witt/format.hpp"
#include "witt/json.hpp"
#include "witt/laws.hpp"
#include "witt/parse.hpp"
#include "witt/rigidity.hpp"

namespace witt::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::size_t arity = 2;
  std::optional<std::size_t> prefix;
  std::string variant = "Wn";
  int box = 2;
  std::string format = "text";
  std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  const Globals& g;
  std::ostream& out;

  bool json_output() const { return g.format == "json"; }

  VariantKind kind() const {
    auto k = parse_variant_kind(g.variant);
    if (!k) throw UsageError("unknown variant '" + g.variant + "'");
    return *k;
  }

  // dmu is built from the first n variables: --prefix when given, otherwise
  // the whole arity for every variant except the truncated W_inf model.
  std::optional<std::size_t> effective_prefix() const {
    if (g.prefix) return g.prefix;
    if (kind() == VariantKind::WInfTrunc) return std::nullopt;
    return g.arity;
  }

  AlgebraVariant variant() const { return AlgebraVariant::make(kind(), g.arity, g.prefix.value_or(0)); }

  WittElement element(const std::string& text) const { return parse_element(text, g.arity, effective_prefix()); }

  void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

void print_basis(std::ostream& out, std::span<const WittElement> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) out << "  [" << i << "] " << to_string(basis[i]) << "\n";
}

int report_verification(const Context& c, const VerificationReport& r) {
  if (c.json_output()) {
    c.emit(to_json_value(r));
  } else {
    c.out << r.lemma << " " << (r.pass ? "PASS" : "FAIL") << " dimension=" << r.dimension << "\n";
    c.out << "  parameters: " << r.parameters.dump() << "\n";
    if (!r.details.empty()) c.out << "  details: " << r.details.dump() << "\n";
    if (!r.basis.empty()) {
      c.out << "  basis:\n";
      print_basis(c.out, r.basis);
    }
    for (const auto& f : r.failures) c.out << "  failure: " << f << "\n";
  }
  return r.pass ? kPass : kCheckFailed;
}

int cmd_parse(const Context& c, const std::string& text) {
  const WittElement x = c.element(text);
  if (c.json_output()) {
    c.emit({{"element", to_string(x)}, {"member", member(c.variant(), x)}});
  } else {
    c.out << to_string(x) << "\n";
  }
  return kPass;
}

int cmd_bracket(const Context& c, const std::string& a, const std::string& b) {
  const WittElement x = c.element(a);
  const WittElement y = c.element(b);
  const WittElement z = bracket(x, y);
  if (c.json_output()) {
    c.emit({{"x", to_string(x)}, {"y", to_string(y)}, {"bracket", to_string(z)}});
  } else {
    c.out << to_string(z) << "\n";
  }
  return kPass;
}

int cmd_centralize(const Context& c, const std::string& text) {
  const WittElement z = c.element(text);
  const AlgebraVariant v = c.variant();
  const CentralizerResult r = centralizer_basis(z, v, DegreeBox{c.g.box});
  if (c.json_output()) {
    json j = to_json_value(r);
    j["element"] = to_string(z);
    j["space_dimension"] = TruncatedSpace(v, DegreeBox{c.g.box}).dimension();
    c.emit(j);
  } else {
    c.out << "dimension: " << r.dimension << "\n";
    print_basis(c.out, r.basis);
  }
  return kPass;
}

struct VerifyArgs {
  std::string lemma;
  std::optional<int> k;
  std::optional<std::string> element;
  int shift = 2;
};

int cmd_verify(const Context& c, const VerifyArgs& a) {
  auto need_k = [&] {
    if (!a.k) throw UsageError(a.lemma + " needs --k");
    return *a.k;
  };
  auto need_element = [&] {
    if (!a.element) throw UsageError(a.lemma + " needs --element");
    return c.element(*a.element);
  };
  auto need_prefix = [&] {
    if (!c.g.prefix) throw UsageError(a.lemma + " needs --prefix n < --arity");
    return *c.g.prefix;
  };
  const std::size_t m = c.g.arity;
  if (a.lemma == "lemma2.2") return report_verification(c, verify_lemma_2_2(m, need_k(), c.g.box, c.kind()));
  if (a.lemma == "lemma3.2") return report_verification(c, verify_lemma_3_2(need_element(), DegreeBox{c.g.box}));
  if (a.lemma == "lemma3.3") return report_verification(c, verify_lemma_3_3(m, need_k()));
  if (a.lemma == "lemma3.4") return report_verification(c, verify_lemma_3_4(need_element(), c.g.prefix.value_or(m)));
  if (a.lemma == "lemma4.1") return report_verification(c, verify_lemma_4_1(need_prefix(), m, need_k(), c.g.box));
  if (a.lemma == "lemma4.3") return report_verification(c, verify_lemma_4_3(need_prefix(), m, need_k(), a.shift));
  if (a.lemma == "lemma4.4") return report_verification(c, verify_lemma_4_4(need_element(), need_prefix(), a.shift));
  throw UsageError("unknown lemma '" + a.lemma + "'");
}

int cmd_rigidity(const Context& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open probe file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("probe file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("probes") || !doc["probes"].is_array()) {
    throw UsageError("probe file needs {\"probes\": [{\"x\": ..., \"dx\": ...}]}");
  }
  PointwiseMap delta(c.variant());
  for (const auto& p : doc["probes"]) {
    if (!p.is_object() || !p.contains("x") || !p.contains("dx") || !p["x"].is_string() || !p["dx"].is_string()) {
      throw UsageError("each probe needs string fields \"x\" and \"dx\"");
    }
    delta.set(c.element(p["x"].get<std::string>()), c.element(p["dx"].get<std::string>()));
  }
  const RigidityReport r = rigidity_pipeline(delta, DegreeBox{c.g.box});
  if (c.json_output()) {
    c.emit(to_json_value(r));
  } else {
    c.out << "verdict: " << r.verdict << "\n";
    if (r.recovered_a) c.out << "recovered a: " << to_string(*r.recovered_a) << "\n";
    if (!r.common_centralizer.empty()) {
      c.out << "common centralizer:\n";
      print_basis(c.out, r.common_centralizer);
    }
    for (const auto& res : r.residuals) {
      c.out << "  " << (res.pass ? "pass" : "FAIL") << "  " << to_string(res.probe) << "  residual " << to_string(res.value)
            << "\n";
    }
    for (const auto& e : r.certificate) {
      c.out << "  certificate: constraint " << e.constraint << " at " << to_string(e.exponent) << " d" << e.direction + 1
            << " weight " << to_string(e.weight) << "\n";
    }
    for (const auto& t : r.lemma_traces) {
      c.out << "  trace " << t.lemma << " " << (t.pass ? "PASS" : "FAIL") << " " << t.parameters.dump() << "\n";
    }
  }
  return r.pass() ? kPass : kCheckFailed;
}

int cmd_fuzz(const Context& c, const std::string& law_name, std::size_t count) {
  auto law = parse_law(law_name);
  if (!law) throw UsageError("unknown law '" + law_name + "'");
  const LawReport r = check_law(*law, c.variant(), DegreeBox{c.g.box}, count, c.g.seed);
  if (c.json_output()) {
    json j = to_json_value(r);
    j["seed"] = c.g.seed;
    j["variant"] = c.g.variant;
    c.emit(j);
  } else {
    c.out << to_string(r.law) << ": " << r.passed << "/" << r.checked << " pass";
    if (r.first_failure) c.out << " (first failure at sample " << *r.first_failure << ")";
    c.out << "\n";
  }
  return r.pass() ? kPass : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in Witt algebras", "witt"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--arity", g.arity, "Ambient variable count m")->check(CLI::Range(1, 8));
  app.add_option("--prefix", g.prefix, "Number n of variables d_mu is built from")->check(CLI::Range(1, 8));
  app.add_option("--variant", g.variant, "Wn, WnPlus, WnPlusPlus, WnMu or WInfTrunc");
  app.add_option("--box", g.box, "Degree box bound N")->check(CLI::Range(0, 64));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Random seed");

  std::string text;
  std::string text2;
  auto* parse = app.add_subcommand("parse", "Print the canonical form of an element");
  parse->add_option("element", text, "Element expression")->required();

  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two elements");
  bracket_cmd->add_option("x", text, "First element")->required();
  bracket_cmd->add_option("y", text2, "Second element")->required();

  auto* centralize = app.add_subcommand("centralize", "Centralizer inside the degree box");
  centralize->add_option("element", text, "Element expression")->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run one lemma verifier");
  verify->add_option("lemma", va.lemma, "lemma2.2, lemma3.2, lemma3.3, lemma3.4, lemma4.1, lemma4.3 or lemma4.4")
      ->required();
  verify->add_option("--k", va.k, "Power-sum exponent k");
  verify->add_option("--element", va.element, "Element x");
  verify->add_option("--shift", va.shift, "Bound on the K_n shifts")->check(CLI::Range(1, 16));

  std::string probes;
  auto* rigidity = app.add_subcommand("rigidity", "Run the 2-local rigidity pipeline on a probe table");
  rigidity->add_option("--probes", probes, "JSON file {\"probes\": [{\"x\": ..., \"dx\": ...}]}")->required();

  std::string law;
  std::size_t count = 100;
  auto* fuzz = app.add_subcommand("fuzz", "Check a Lie-algebra law on random samples");
  fuzz->add_option("law", law, "jacobi, antisymmetry, bilinearity, closure or cartan")->required();
  fuzz->add_option("--count", count, "Number of samples");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  const Context c{g, out};
  try {
    if (*parse) return cmd_parse(c, text);
    if (*bracket_cmd) return cmd_bracket(c, text, text2);
    if (*centralize) return cmd_centralize(c, text);
    if (*verify) return cmd_verify(c, va);
    if (*rigidity) return cmd_rigidity(c, probes);
    if (*fuzz) return cmd_fuzz(c, law, count);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace witt::cli
