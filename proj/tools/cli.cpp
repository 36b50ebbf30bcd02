#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "milnor/classify.hpp"
#include "milnor/error.hpp"
#include "milnor/generators.hpp"
#include "milnor/invariants.hpp"

namespace milnor::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct JobConfig {
  std::vector<std::string> inputs;
  int max_length = 3;
  int max_r = 1;
  std::string delta_mode = "milnor-cyclic";
  std::string format = "table";
  int jobs = 1;
  bool strict = false;
  bool nonzero_only = false;
};

// Input problems tied to a file.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Verdicts that the strict flag turns into a failure.
struct HypothesisNotMet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AnyDiagram load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot read file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_diagram_json(buffer.str());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::erase_if(cleaned, [](char c) { return c == '[' || c == ']'; });
  std::istringstream is(cleaned);
  std::string token;
  while (is >> token) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw InvalidArgument("");
    } catch (const std::exception&) {
      throw InvalidArgument("'" + text + "' is not a list of integers");
    }
  }
  return out;
}

ojson integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

ojson rows_json(const std::vector<InvariantRow>& rows) {
  ojson arr = ojson::array();
  for (const InvariantRow& r : rows) {
    arr.push_back({{"index", r.index.to_string()},
                   {"value", integer_json(r.value.value)},
                   {"modulus", integer_json(r.value.modulus)}});
  }
  return arr;
}

std::string rows_text(const std::vector<InvariantRow>& rows, const std::string& indent) {
  std::ostringstream os;
  for (const InvariantRow& r : rows) {
    os << indent << r.index.to_string() << ": " << r.value.to_string() << '\n';
  }
  return os.str();
}

void emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError(path + ": cannot write file");
  f << text;
}

// --- invariants ---------------------------------------------------------------------------

int cmd_invariants(const JobConfig& cfg, std::ostream& out) {
  const DeltaMode mode = parse_delta_mode(cfg.delta_mode);
  ojson all = ojson::array();
  std::ostringstream text;
  for (const std::string& path : cfg.inputs) {
    const AnyDiagram any = load(path);
    const Diagram& d = as_diagram(any);
    MilnorEngine engine(d);
    const std::string subject = d.name().empty() ? path : d.name();
    const InvariantTable t = table(engine, subject, cfg.max_length, cfg.max_r, mode, cfg.jobs);
    if (cfg.format == "json") {
      all.push_back(ojson::parse(t.to_json()));
    } else {
      text << "# " << subject << " (" << (t.string_link ? "string link" : "link") << ", "
           << t.components << " components, |I| <= " << t.max_length << ", r <= " << t.max_r;
      if (!t.string_link) text << ", " << to_string(mode);
      text << ")\n" << t.to_text(cfg.nonzero_only);
    }
  }
  out << (cfg.format == "json" ? all.dump(2) + "\n" : text.str());
  return kSuccess;
}

// --- classify -------------------------------------------------------------------------------

struct ClassifyFlags {
  bool homotopy = false;
  bool self_delta = false;
  bool brunnian = false;
  bool cor2 = false;
  int k = 0;
};

ojson vector_json(const SelfDeltaVector& v) {
  ojson j;
  j["hypothesis_ok"] = v.hypothesis_ok;
  if (v.obstruction) {
    j["obstruction"] = {{"index", v.obstruction->to_string()},
                        {"value", integer_json(v.obstruction_value->value)},
                        {"modulus", integer_json(v.obstruction_value->modulus)}};
  }
  j["entries"] = rows_json(v.entries);
  return j;
}

std::string vector_text(const SelfDeltaVector& v, const std::string& name) {
  std::ostringstream os;
  os << name << ": hypothesis " << (v.hypothesis_ok ? "holds" : "fails");
  if (v.obstruction) {
    os << " (" << v.obstruction->to_string() << ": " << v.obstruction_value->to_string() << ")";
  }
  os << '\n' << rows_text(v.entries, "  ");
  return os.str();
}

void classify_string_links(const std::vector<StringLinkDiagram>& ls,
                           const std::vector<std::string>& names, const ClassifyFlags& flags,
                           ojson& report, std::ostringstream& text) {
  if (ls.size() == 1) {
    const NormalForm nf = homotopy_normal_form(ls[0]);
    ojson entries = ojson::array();
    for (const NormalFormEntry& e : nf.entries) {
      entries.push_back({{"pi", e.pi.index().to_string()}, {"exponent", integer_json(e.exponent)}});
    }
    report["normal_form"] = entries;
    text << "link-homotopy normal form of " << names[0] << ":\n";
    for (const NormalFormEntry& e : nf.entries) {
      text << "  V" << e.pi.index().to_string() << "^" << e.exponent.str() << '\n';
    }
    return;
  }
  const bool same = link_homotopic(ls[0], ls[1]);
  report["link_homotopic"] = same;
  text << (same ? "link-homotopic" : "not link-homotopic") << '\n';
  if (flags.k > 0) {
    const bool ck = c1s_ck_equivalent(ls[0], ls[1], flags.k);
    report["ck_equivalent"] = {{"k", flags.k}, {"equivalent", ck}};
    text << "self C1 + C" << flags.k << ": " << (ck ? "equivalent" : "not equivalent") << '\n';
  }
}

void classify_links(const std::vector<LinkDiagram>& ls, const std::vector<std::string>& names,
                    const ClassifyFlags& flags, DeltaMode mode, bool strict, ojson& report,
                    std::ostringstream& text) {
  const bool all = !flags.homotopy && !flags.self_delta && !flags.brunnian && !flags.cor2;
  if (ls.size() == 2) {
    if (flags.homotopy) {
      const HomotopyDecision h = homotopy_decide(ls[0], ls[1], mode);
      report["homotopy_verdict"] = to_string(h.verdict);
      if (h.witness) report["witness"] = h.witness->to_string();
      if (h.verdict == Verdict::kUndecided) {
        text << "link-homotopy: Undecided\n";
        if (strict) throw HypothesisNotMet("r = 1 invariants agree but n > 3");
      } else {
        text << (h.verdict == Verdict::kYes ? "link-homotopic" : "not link-homotopic");
        if (h.witness) text << " (differs at " << h.witness->to_string() << ")";
        text << '\n';
      }
      if (!flags.self_delta) return;
    }
    const SelfDeltaDecision d = selfdelta_decide(ls[0], ls[1], mode);
    report["verdict"] = to_string(d.verdict);
    if (d.witness) report["witness"] = d.witness->to_string();
    report["first"] = vector_json(d.first);
    report["second"] = vector_json(d.second);
    text << "self-delta: " << to_string(d.verdict);
    if (d.witness) text << " (differs at " << d.witness->to_string() << ")";
    text << '\n';
    if (strict && d.verdict == Verdict::kUndecided) {
      throw HypothesisNotMet("self-delta verdict is undecided outside the vanishing hypothesis");
    }
    return;
  }
  const LinkDiagram& l = ls[0];
  if (all || flags.homotopy) {
    const bool t = homotopy_trivial(l, mode);
    report["homotopy_trivial"] = t;
    text << "link-homotopic to trivial: " << (t ? "yes" : "no") << '\n';
  }
  if (all || flags.self_delta) {
    const SelfDeltaVector v = selfdelta_vector(l, mode);
    const bool t = selfdelta_trivial(l, mode);
    report["selfdelta_vector"] = vector_json(v);
    report["selfdelta_trivial"] = t;
    text << vector_text(v, names[0]);
    text << "self-delta trivial: " << (t ? "yes" : "no") << '\n';
    if (strict && !v.hypothesis_ok && !flags.brunnian) {
      throw HypothesisNotMet("low order invariants do not vanish");
    }
  }
  if (all || flags.cor2) {
    const Cor2Report r = cor2_report(l, mode);
    report["cor2"] = {{"selfdelta_trivial", r.selfdelta_trivial},
                      {"cable_homotopy_trivial", r.cable_homotopy_trivial},
                      {"consistent", r.consistent()}};
    text << "2-parallel check: " << (r.consistent() ? "consistent" : "INCONSISTENT") << '\n';
  }
  if (flags.brunnian) {
    try {
      BrunnianRep rep = brunnian_representative(l, mode);
      verify_brunnian_representative(l, rep, mode);
      ojson eps = ojson::array();
      for (std::size_t i = 0; i < rep.phis.size(); ++i) {
        eps.push_back({{"phi", MultiIndex(rep.phis[i].values).to_string()}, {"epsilon", rep.epsilon[i]}});
      }
      ojson taus = ojson::array();
      for (std::size_t i = 0; i < rep.taus.size(); ++i) {
        taus.push_back({{"tau", rep.taus[i].index().to_string()},
                        {"exponent", integer_json(rep.tau_exponents[i])}});
      }
      ojson etas = ojson::array();
      for (std::size_t i = 0; i < rep.etas.size(); ++i) {
        etas.push_back({{"eta", rep.etas[i].index().to_string()},
                        {"exponent", integer_json(rep.eta_exponents[i])}});
      }
      report["brunnian"] = {{"epsilon", eps}, {"R", taus}, {"P", etas},
                            {"verified", rep.verified.value_or(false)}};
      text << "Brunnian representative (input assumed Brunnian):\n" << rep.to_string();
    } catch (const HypothesisError& e) {
      report["brunnian"] = {{"error", e.what()}};
      text << "Brunnian representative: hypothesis not met: " << e.what() << '\n';
      if (strict) throw HypothesisNotMet(e.what());
    }
  }
}

int cmd_classify(const JobConfig& cfg, const ClassifyFlags& flags, std::ostream& out) {
  if (cfg.inputs.empty() || cfg.inputs.size() > 2) {
    throw InvalidArgument("classify takes one or two input files");
  }
  const DeltaMode mode = parse_delta_mode(cfg.delta_mode);
  std::vector<LinkDiagram> links;
  std::vector<StringLinkDiagram> strings;
  std::vector<std::string> names;
  for (const std::string& path : cfg.inputs) {
    AnyDiagram any = load(path);
    names.push_back(path);
    if (auto* l = std::get_if<LinkDiagram>(&any)) {
      links.push_back(*l);
    } else {
      strings.push_back(std::get<StringLinkDiagram>(any));
    }
  }
  if (!links.empty() && !strings.empty()) {
    throw InvalidArgument("cannot compare a link with a string link");
  }
  if (cfg.inputs.size() == 2) {
    const int a = links.empty() ? strings[0].components() : links[0].components();
    const int b = links.empty() ? strings[1].components() : links[1].components();
    if (a != b) throw InvalidArgument("inputs have different component counts");
  }
  ojson report;
  report["inputs"] = cfg.inputs;
  report["kind"] = links.empty() ? "stringlink" : "link";
  report["delta_mode"] = cfg.delta_mode;
  std::ostringstream text;
  int code = kSuccess;
  try {
    if (links.empty()) {
      classify_string_links(strings, names, flags, report, text);
    } else {
      classify_links(links, names, flags, mode, cfg.strict, report, text);
    }
  } catch (const HypothesisNotMet& e) {
    report["strict_failure"] = e.what();
    code = kHypothesisNotMet;
  }
  out << (cfg.format == "json" ? report.dump(2) + "\n" : text.str());
  return code;
}

// --- generate / cable -------------------------------------------------------------------

std::string cable_text(const std::string& path, const std::string& mult) {
  const AnyDiagram any = load(path);
  const auto* l = std::get_if<LinkDiagram>(&any);
  if (l == nullptr) throw InvalidArgument("cabling needs a closed link");
  const CabledLink c = cable(*l, parse_int_list(mult));
  ojson j = ojson::parse(to_json_text(c.link));
  j["source_component"] = c.source_component;
  return j.dump(2) + "\n";
}

int cmd_generate(const std::string& kind, const std::vector<std::string>& params, int n_opt,
                 int k_opt, bool inverse, bool string_link, const std::string& output,
                 std::ostream& out) {
  auto param = [&](std::size_t i) -> const std::string& {
    if (i >= params.size()) throw InvalidArgument("generate " + kind + " needs more parameters");
    return params[i];
  };
  const int e = inverse ? -1 : 1;
  std::string text;
  if (kind == "milnor-link") {
    text = to_json_text(make_milnor_link(std::stoi(param(0))));
  } else if (kind == "v-pi") {
    InjectionPi pi;
    pi.values = parse_int_list(param(0));
    pi.n = n_opt > 0 ? n_opt : *std::max_element(pi.values.begin(), pi.values.end());
    text = to_json_text(make_V_pi(pi, e));
  } else if (kind == "v-tau") {
    SurjectionTau tau;
    tau.values = parse_int_list(param(0));
    if (k_opt <= 0) throw InvalidArgument("v-tau needs --k");
    tau.k = k_opt;
    tau.m = static_cast<int>(tau.values.size()) + 2;
    tau.n = n_opt > 0 ? n_opt : std::max(k_opt, *std::max_element(tau.values.begin(), tau.values.end()));
    text = to_json_text(make_V_tau(tau, e));
  } else if (kind == "hopf") {
    text = to_json_text(hopf_link(e));
  } else if (kind == "whitehead") {
    text = to_json_text(whitehead_link());
  } else if (kind == "trivial") {
    const int n = std::stoi(param(0));
    text = string_link ? to_json_text(trivial_string_link(n)) : to_json_text(trivial_link(n));
  } else if (kind == "cable") {
    text = cable_text(param(0), param(1));
  } else {
    throw InvalidArgument("unknown generator '" + kind +
                          "' (milnor-link, v-pi, v-tau, hopf, whitehead, trivial, cable)");
  }
  emit(out, text, output);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Milnor invariants of links and string links"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-length", cfg.max_length, "Longest index")->check(CLI::Range(2, 64));
    sub->add_option("--max-r", cfg.max_r, "Largest repetition count")->check(CLI::Range(1, 64));
    sub->add_option("--delta-mode", cfg.delta_mode, "milnor-cyclic or paper-strict")
        ->check(CLI::IsMember({"milnor-cyclic", "paper-strict"}));
    sub->add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1, 256));
    sub->add_flag("--strict", cfg.strict, "Exit with code 3 when a hypothesis is not met");
  };

  CLI::App* inv = app.add_subcommand("invariants", "Invariant tables");
  add_common(inv);
  inv->add_flag("--nonzero", cfg.nonzero_only, "Only print nonzero rows");
  inv->add_option("files", cfg.inputs, "Diagram files")->required();

  ClassifyFlags flags;
  CLI::App* cls = app.add_subcommand("classify", "Classification reports");
  add_common(cls);
  cls->add_flag("--homotopy", flags.homotopy, "Link-homotopy normal form or comparison");
  cls->add_flag("--self-delta", flags.self_delta, "Self Delta-equivalence");
  cls->add_flag("--brunnian", flags.brunnian, "Brunnian representative");
  cls->add_flag("--cor2", flags.cor2, "2-parallel consistency check");
  cls->add_option("--k", flags.k, "Also compare r = 1 invariants up to this length");
  cls->add_option("files", cfg.inputs, "One or two diagram files")->required();

  std::string gen_kind;
  std::vector<std::string> gen_params;
  int n_opt = 0;
  int k_opt = 0;
  bool inverse = false;
  bool string_link = false;
  std::string output;
  CLI::App* gen = app.add_subcommand("generate", "Emit generator diagrams");
  gen->add_option("kind", gen_kind, "milnor-link | v-pi | v-tau | hopf | whitehead | trivial | cable")
      ->required();
  gen->add_option("params", gen_params, "Generator parameters");
  gen->add_option("--n", n_opt, "Component count");
  gen->add_option("--k", k_opt, "Target component for v-tau");
  gen->add_flag("--inverse", inverse, "Inverse generator");
  gen->add_flag("--string-link", string_link, "Emit a string link (trivial)");
  gen->add_option("-o,--output", output, "Output file");

  std::string cable_file;
  std::string cable_mult;
  CLI::App* cab = app.add_subcommand("cable", "Zero-framed parallel copies");
  cab->add_option("file", cable_file, "Link file")->required();
  cab->add_option("multiplicities", cable_mult, "Comma separated, e.g. 2,2")->required();
  cab->add_option("-o,--output", output, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, help);
    (code == 0 ? out : err) << help.str();
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(cfg, out);
    if (cls->parsed()) return cmd_classify(cfg, flags, out);
    if (gen->parsed()) {
      return cmd_generate(gen_kind, gen_params, n_opt, k_opt, inverse, string_link, output, out);
    }
    if (cab->parsed()) {
      emit(out, cable_text(cable_file, cable_mult), output);
      return kSuccess;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << '\n';
    return kHypothesisNotMet;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: number out of range\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace milnor::cli
