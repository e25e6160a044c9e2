#include "wat/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "report.hpp"
#include "wat/constructions.hpp"
#include "wat/error.hpp"
#include "wat/gadgets.hpp"
#include "wat/io.hpp"
#include "wat/limits.hpp"
#include "wat/min_wdfa.hpp"
#include "wat/oracle.hpp"

namespace wat {

namespace {

using cli::json;
using cli::Report;

struct Context {
  Limits limits;
  std::vector<std::string> files;
  std::size_t number = 0;
  std::optional<std::size_t> len;
  bool wdfa = false;
  bool wheeler = false;
};

Dfa deterministic(const AutomatonFile& f, const std::string& path) {
  if (!f.deterministic()) throw InputError(path + " is not deterministic");
  return f.dfa();
}

Dfa language_dfa(const AutomatonFile& f, const Limits& l) {
  return f.deterministic() ? f.dfa() : determinize(f.nfa, l.det_cap).dfa;
}

Report automaton_report(const Dfa& d, const std::optional<WheelerOrder>& order = std::nullopt) {
  Report r;
  r.data["automaton"] = cli::automaton_json(d, order);
  r.text = serialize(d, order);
  return r;
}

Report verdict(bool positive) {
  Report r;
  r.code = positive ? kExitPositive : kExitNegative;
  r.data["wheeler"] = positive;
  return r;
}

Report order_verdict(const Alphabet& s, const WheelerCertificate& c) {
  Report r = verdict(c.wheeler());
  r.data["order"] = nullptr;
  r.data["violation"] = nullptr;
  if (c.wheeler()) {
    r.data["order"] = c.order->by_rank;
    r.text = "Wheeler\norder: " + cli::order_text(c.order->by_rank) + "\n";
  } else {
    r.text = "not Wheeler\n";
    if (c.violation) {
      r.data["violation"] = cli::violation_json(s, *c.violation);
      r.text += "violation: " + c.violation->describe(s) + "\n";
    }
  }
  return r;
}

Report claimed_order(const Nfa& a, const WheelerOrder& order) {
  const auto v = check_wheeler_conditions(a, order);
  WheelerCertificate c;
  if (v) c.violation = v;
  else c.order = order;
  Report r = order_verdict(a.alphabet(), c);
  r.data["claimed"] = true;
  return r;
}

Report non_wheeler(const Dfa& minimal, const NonWheelerWitness& w) {
  Report r = verdict(false);
  r.data["witness"] = cli::witness_json(minimal.alphabet(), w);
  r.data["minimal_dfa"] = cli::automaton_json(minimal);
  r.text = "not a Wheeler language\nwitness: " + cli::witness_text(minimal.alphabet(), w) + "\n";
  return r;
}

WheelerDfa load_wdfa(const std::string& path) {
  const AutomatonFile f = read_automaton(path);
  const Dfa d = deterministic(f, path);
  if (f.order) return {d, *f.order};
  const auto c = is_wheeler_dfa(d);
  if (!c.wheeler()) throw PreconditionError(path + " is not a WDFA");
  return {d, *c.order};
}

// ---------------------------------------------------------------------------

Report cmd_trim(const Context& c) {
  const AutomatonFile f = read_automaton(c.files[0]);
  const Nfa t = trim(f.nfa);
  Report r;
  r.data["automaton"] = cli::automaton_json(t);
  r.text = serialize(t);
  return r;
}

Report cmd_detmin(const Context& c) { return automaton_report(minimize(language_dfa(read_automaton(c.files[0]), c.limits))); }

Report cmd_product(const Context& c) {
  const Dfa x = language_dfa(read_automaton(c.files[0]), c.limits);
  const Dfa y = language_dfa(read_automaton(c.files[1]), c.limits);
  if (!(x.alphabet() == y.alphabet())) throw InputError("the two automata declare different alphabets");
  return automaton_report(product_intersection(x, y));
}

Report cmd_is_wheeler_dfa(const Context& c) {
  const AutomatonFile f = read_automaton(c.files[0]);
  const Dfa d = deterministic(f, c.files[0]);
  if (f.order) return claimed_order(f.nfa, *f.order);
  return order_verdict(d.alphabet(), is_wheeler_dfa(d));
}

Report cmd_is_wheeler_nfa(const Context& c) {
  const AutomatonFile f = read_automaton(c.files[0]);
  if (f.order) return claimed_order(f.nfa, *f.order);
  return order_verdict(f.nfa.alphabet(), is_wheeler_nfa_bruteforce(f.nfa, c.limits.order_cap));
}

Report cmd_is_wheeler_lang(const Context& c) {
  const auto v = is_wheeler_language_nfa(read_automaton(c.files[0]).nfa, c.limits.det_cap);
  if (!v.wheeler) return non_wheeler(v.minimal, *v.witness);
  Report r = verdict(true);
  r.data["witness"] = nullptr;
  r.data["minimal_dfa"] = cli::automaton_json(v.minimal);
  r.text = "Wheeler language\n";
  return r;
}

Report cmd_is_reduced(const Context& c) {
  const Nfa a = read_automaton(c.files[0]).nfa;
  Report r;
  const bool reduced = is_reduced(a, c.limits.det_cap);
  r.code = reduced ? kExitPositive : kExitNegative;
  r.data["reduced"] = reduced;
  r.data["pair"] = nullptr;
  r.text = reduced ? "reduced\n" : "not reduced\n";
  for (State q = 0; q < a.num_states() && !reduced && r.data["pair"].is_null(); ++q)
    for (State p = q + 1; p < a.num_states(); ++p)
      if (same_incoming(a, q, p, c.limits.det_cap)) {
        r.data["pair"] = {q, p};
        r.text += "same incoming language: q" + std::to_string(q) + ", q" + std::to_string(p) + "\n";
        break;
      }
  return r;
}

Report cmd_colex_order(const Context& c) {
  const AutomatonFile f = read_automaton(c.files[0]);
  Dfa d = deterministic(f, c.files[0]);
  std::vector<State> origin(d.num_states());
  for (State q = 0; q < d.num_states(); ++q) origin[q] = q;
  const bool split = !label_function(d).has_value();
  if (split) {
    const InputConsistent ic = make_input_consistent(d.to_nfa());
    d = Dfa::from_nfa(ic.nfa);
    origin = ic.origin;
  }
  const ColexRelation rel = colex_partial_order_dfa(d);
  Report r;
  json pairs = json::array();
  std::string text;
  for (State q = 0; q < d.num_states(); ++q)
    for (State p = 0; p < d.num_states(); ++p)
      if (rel.less(q, p)) {
        pairs.push_back({q, p});
        text += "q" + std::to_string(q) + " < q" + std::to_string(p) + "\n";
      }
  r.data["split"] = split;
  r.data["origin"] = origin;
  r.data["less"] = pairs;
  r.data["total"] = rel.is_total();
  r.data["order"] = nullptr;
  if (split) r.data["automaton"] = cli::automaton_json(d);
  if (const auto order = rel.to_order()) {
    r.data["order"] = order->by_rank;
    r.text = "total order: " + cli::order_text(order->by_rank) + "\n";
  } else {
    r.text = "partial order:\n" + text;
  }
  return r;
}

Report cmd_fingerprint(const Context& c) {
  const Dfa d = minimize(language_dfa(read_automaton(c.files[0]), c.limits));
  const auto v = is_wheeler_language_dfa(d);
  if (!v.wheeler) return non_wheeler(v.minimal, *v.witness);
  const FingerprintRun run = fingerprint_run(d, {c.limits.iter_cap, false});
  Report r;
  json reps = json::array();
  for (const Word& w : run.fingerprint.reps) {
    reps.push_back(format_word(d.alphabet(), w));
    r.text += format_word(d.alphabet(), w) + "\n";
  }
  r.data["representatives"] = reps;
  r.data["iterations"] = run.iterations;
  return r;
}

Report cmd_min_wdfa(const Context& c) {
  const Dfa d = language_dfa(read_automaton(c.files[0]), c.limits);
  try {
    const WheelerDfa w = min_wdfa(d, {c.limits.iter_cap, false});
    Report r = automaton_report(w.dfa, w.order);
    r.data["states"] = w.dfa.num_states();
    return r;
  } catch (const NonWheelerError& e) {
    return non_wheeler(minimize(d), e.witness());
  }
}

Report cmd_intersect_wdfa(const Context& c) {
  const auto res = intersect_wdfa(load_wdfa(c.files[0]), load_wdfa(c.files[1]));
  Report r = automaton_report(res.result.dfa, res.result.order);
  r.data["states"] = res.empty ? 0 : res.result.dfa.num_states();
  r.data["bound"] = res.bound;
  r.data["empty"] = res.empty;
  if (res.empty) r.text = "empty intersection\n";
  return r;
}

Report gadget_report(const GadgetReport& g, std::optional<OrderGadget> order) {
  Report r;
  r.code = g.agree() ? kExitPositive : kExitNegative;
  r.data["gadget"] = g.gadget;
  r.data["input"] = g.input_summary;
  r.data["left"] = g.left;
  r.data["right"] = g.right;
  r.data["left_holds"] = g.left_holds;
  r.data["right_holds"] = g.right_holds;
  r.data["agree"] = g.agree();
  r.data["automaton"] = cli::automaton_json(g.output);
  r.data["qe"] = nullptr;
  r.data["qf"] = nullptr;
  if (order) {
    r.data["qe"] = order->qe;
    r.data["qf"] = order->qf;
  }
  const auto yes = [](bool b) { return b ? "holds" : "fails"; };
  r.text = serialize(g.output) + "# " + g.left + ": " + yes(g.left_holds) + "\n# " + g.right + ": " +
           yes(g.right_holds) + "\n# " + (g.agree() ? "agree" : "DISAGREE") + "\n";
  return r;
}

Report cmd_gadget(const std::string& which, const Context& c) {
  const Nfa a = read_automaton(c.files[0]).nfa;
  const std::size_t cap = c.limits.det_cap;
  if (which == "reduced-univ") return gadget_report(report_reduced_universality(a, cap), std::nullopt);
  if (which == "order") return gadget_report(report_order_hardness(a, cap), gadget_order_hardness(trim(a)));
  if (which == "reducedness") return gadget_report(report_reducedness(a, cap), gadget_reducedness(a));
  return gadget_report(report_wheeler_language(a, cap), std::nullopt);
}

Report cmd_family(const std::string& which, const Context& c) {
  const Dfa d = which == "A" ? family_A(c.number) : family_B(c.number);
  const WheelerDfa w = min_wdfa(d);
  Report r = c.wdfa ? automaton_report(w.dfa, w.order) : automaton_report(d);
  r.data["min_dfa_states"] = d.num_states();
  r.data["min_wdfa_states"] = w.dfa.num_states();
  return r;
}

Report cmd_oracle(const std::string& which, const Context& c) {
  const AutomatonFile f = read_automaton(c.files[0]);
  Report r;
  if (which == "classes") {
    const Dfa d = minimize(language_dfa(f, c.limits));
    const std::size_t n = d.num_states();
    const std::size_t len = c.len.value_or(std::min(n * n + n + 2, c.limits.enum_cap));
    const auto blocks = oracle::equiv_c_classes_bounded(d, len, c.limits.enum_cap);
    json out = json::array();
    for (const auto& b : blocks.blocks) {
      const std::string rep = format_word(d.alphabet(), b.rep);
      out.push_back({{"rep", rep}, {"state", b.state}, {"end", b.end == kHash ? "#" : d.alphabet().name(b.end)}, {"size", b.size}});
      r.text += rep + " (q" + std::to_string(b.state) + ", " + std::to_string(b.size) + " words)\n";
    }
    r.data["length"] = len;
    r.data["blocks"] = out;
    r.data["bounded_only"] = blocks.bounded_only;
    if (blocks.bounded_only) r.text += "# block count still grows at this length\n";
  } else if (which == "order") {
    const auto order = oracle::exhaustive_wheeler_order(f.nfa, c.limits.order_cap);
    r.code = order ? kExitPositive : kExitNegative;
    r.data["wheeler"] = order.has_value();
    r.data["order"] = order ? json(*order) : json(nullptr);
    r.text = order ? "order: " + cli::order_text(*order) + "\n" : "no Wheeler order\n";
  } else {
    const auto u = oracle::bounded_universality(f.nfa, c.len.value_or(10), c.limits.det_cap);
    r.code = u.universal ? kExitPositive : kExitNegative;
    r.data["universal"] = u.universal;
    r.data["authoritative"] = u.authoritative;
    r.text = std::string(u.universal ? "universal" : "not universal") + (u.authoritative ? "" : " (sampled)") + "\n";
  }
  return r;
}

Report cmd_export_dot(const Context& c) {
  const AutomatonFile f = read_automaton(c.files[0]);
  std::optional<WheelerOrder> order = f.order;
  if (!order && c.wheeler && f.deterministic()) order = is_wheeler_dfa(f.dfa()).order;
  Report r;
  r.text = export_dot(f.nfa, order);
  r.data["dot"] = r.text;
  return r;
}

std::string verdict_name(int code) {
  switch (code) {
    case kExitPositive: return "positive";
    case kExitNegative: return "negative";
    case kExitInput: return "input-error";
    default: return "resource-cap";
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wheeler automata toolkit", "wat"};
  app.require_subcommand(1);
  Context ctx;
  bool as_json = false;
  std::optional<std::size_t> det_cap, enum_cap, iter_cap, order_cap;
  app.add_flag("--json", as_json, "Machine-readable report");
  app.add_option("--det-cap", det_cap, "Maximum subsets in a determinization (env WAT_DET_CAP)");
  app.add_option("--enum-cap", enum_cap, "Maximum enumeration length (env WAT_ENUM_CAP)");
  app.add_option("--iter-cap", iter_cap, "Fingerprint iteration cap, 0 for the default (env WAT_ITER_CAP)");
  app.add_option("--order-cap", order_cap, "Maximum states for exhaustive order search");

  std::string command;
  std::function<Report()> action;
  const auto file_command = [&](const std::string& name, const std::string& help, std::size_t files,
                                Report (*fn)(const Context&)) {
    CLI::App* sub = app.add_subcommand(name, help)->fallthrough();
    sub->add_option("files", ctx.files, "Automaton files")->required()->expected(static_cast<int>(files));
    sub->callback([&, name, fn] {
      command = name;
      action = [&, fn] { return fn(ctx); };
    });
    return sub;
  };
  file_command("trim", "Remove useless states", 1, cmd_trim);
  file_command("detmin", "Determinize and minimize", 1, cmd_detmin);
  file_command("product", "Product automaton of two languages", 2, cmd_product);
  file_command("is-wheeler-dfa", "Wheeler order of a DFA, or check the claimed order", 1, cmd_is_wheeler_dfa);
  file_command("is-wheeler-nfa", "Wheeler order of an NFA by exhaustive search", 1, cmd_is_wheeler_nfa);
  file_command("is-wheeler-lang", "Decide whether the language is Wheeler", 1, cmd_is_wheeler_lang);
  file_command("is-reduced", "Distinct states have distinct incoming languages", 1, cmd_is_reduced);
  file_command("colex-order", "Co-lex partial order of a DFA", 1, cmd_colex_order);
  file_command("fingerprint", "One representative per class of the minimum WDFA", 1, cmd_fingerprint);
  file_command("min-wdfa", "Minimum WDFA of the language", 1, cmd_min_wdfa);
  file_command("intersect-wdfa", "Minimum WDFA of the intersection of two WDFAs", 2, cmd_intersect_wdfa);
  file_command("export-dot", "Graphviz export", 1, cmd_export_dot)
      ->add_flag("--wheeler", ctx.wheeler, "Rank nodes by the Wheeler order of a DFA");

  CLI::App* gadget = app.add_subcommand("gadget", "Reduction gadgets with their biconditional check")->fallthrough();
  gadget->require_subcommand(1);
  for (const std::string which : {"reduced-univ", "order", "reducedness", "wheeler-lang"}) {
    CLI::App* sub = gadget->add_subcommand(which)->fallthrough();
    sub->add_option("file", ctx.files, "Automaton file")->required()->expected(1);
    sub->callback([&, which] {
      command = "gadget " + which;
      action = [&, which] { return cmd_gadget(which, ctx); };
    });
  }

  CLI::App* family = app.add_subcommand("family", "Tightness families A_n and B_m")->fallthrough();
  family->require_subcommand(1);
  for (const std::string which : {"A", "B"}) {
    CLI::App* sub = family->add_subcommand(which)->fallthrough();
    sub->add_option("n", ctx.number, "Family parameter")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--wdfa", ctx.wdfa, "Print the minimum WDFA instead of the minimum DFA");
    sub->callback([&, which] {
      command = "family " + which;
      action = [&, which] { return cmd_family(which, ctx); };
    });
  }

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth")->fallthrough();
  oracle_cmd->require_subcommand(1);
  for (const std::string which : {"classes", "order", "universal"}) {
    CLI::App* sub = oracle_cmd->add_subcommand(which)->fallthrough();
    sub->add_option("file", ctx.files, "Automaton file")->required()->expected(1);
    sub->add_option("--len", ctx.len, "Word length budget");
    sub->callback([&, which] {
      command = "oracle " + which;
      action = [&, which] { return cmd_oracle(which, ctx); };
    });
  }

  std::vector<std::string> argv_store{"wat"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    const auto& subs = app.get_subcommands({});
    const bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* s) { return s->get_name() == args[0]; });
    if (!known) {
      err << "wat: unknown subcommand '" << args[0] << "'\n" << app.help();
      return kExitInput;
    }
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitInput;
  }

  Report report;
  try {
    ctx.limits = Limits::from_env();
    if (det_cap) ctx.limits.det_cap = *det_cap;
    if (enum_cap) ctx.limits.enum_cap = *enum_cap;
    if (iter_cap) ctx.limits.iter_cap = *iter_cap;
    if (order_cap) ctx.limits.order_cap = *order_cap;
    report = action();
  } catch (const InputError& e) {
    report.code = kExitInput;
    report.data = {{"error", {{"kind", "input"}, {"message", e.what()}, {"line", e.line()}}}};
  } catch (const PreconditionError& e) {
    report.code = kExitInput;
    report.data = {{"error", {{"kind", "precondition"}, {"message", e.what()}, {"line", 0}}}};
  } catch (const ResourceError& e) {
    report.code = kExitResource;
    report.data = {{"error", {{"kind", "resource"}, {"message", e.what()}, {"line", 0}}}};
  } catch (const Error& e) {
    report.code = kExitInput;
    report.data = {{"error", {{"kind", "internal"}, {"message", e.what()}, {"line", 0}}}};
  }

  const bool failed = report.data.contains("error");
  if (as_json) {
    json doc{{"command", command}, {"exit_code", report.code}, {"verdict", verdict_name(report.code)}};
    doc.update(report.data);
    out << doc.dump(2) << '\n';
  } else if (failed) {
    err << "wat " << command << ": " << report.data["error"]["message"].get<std::string>() << '\n';
  } else {
    out << report.text;
  }
  return report.code;
}

}  // namespace wat
