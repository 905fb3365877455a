#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobkit/cli.hpp"
#include "frobkit/parse.hpp"
#include "frobkit/session.hpp"
#include "frobkit/tight.hpp"

namespace frobkit {

namespace {

// Command-line level problem: unknown binding names, malformed flag values.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PayloadEntry {
  enum class Kind { ideal, poly, integer, boolean, text };
  Kind kind;
  std::string name;
  std::string value;                   // scalar kinds
  std::vector<std::string> generators;  // ideal kind
};

struct Payload {
  std::vector<PayloadEntry> entries;

  void add_ideal(const std::string& name, const Ideal& J) {
    PayloadEntry e{PayloadEntry::Kind::ideal, name, "", {}};
    for (const Polynomial& g : J.groebner_basis()) e.generators.push_back(format_poly(g));
    entries.push_back(std::move(e));
  }
  void add_poly(const std::string& name, const Polynomial& f) {
    entries.push_back({PayloadEntry::Kind::poly, name, format_poly(f), {}});
  }
  void add_int(const std::string& name, std::int64_t v) {
    entries.push_back({PayloadEntry::Kind::integer, name, std::to_string(v), {}});
  }
  void add_bool(const std::string& name, bool v) {
    entries.push_back({PayloadEntry::Kind::boolean, name, v ? "true" : "false", {}});
  }
  void add_text(const std::string& name, const std::string& v) {
    entries.push_back({PayloadEntry::Kind::text, name, v, {}});
  }

  std::string render_text() const {
    std::ostringstream out;
    for (const PayloadEntry& e : entries) {
      if (e.kind == PayloadEntry::Kind::ideal) {
        if (e.generators.empty()) continue;  // the zero ideal prints nothing
        out << "ideal " << e.name << ":\n";
        for (const std::string& g : e.generators) out << "  " << g << "\n";
      } else if (e.kind == PayloadEntry::Kind::poly) {
        out << "poly " << e.name << ": " << e.value << "\n";
      } else {
        out << e.name << ": " << e.value << "\n";
      }
    }
    return out.str();
  }

  std::string render_json(const std::string& command) const {
    nlohmann::json doc;
    doc["status"] = "ok";
    doc["command"] = command;
    doc["payload"] = nlohmann::json::array();
    for (const PayloadEntry& e : entries) {
      nlohmann::json item;
      item["name"] = e.name;
      switch (e.kind) {
        case PayloadEntry::Kind::ideal:
          item["kind"] = "ideal";
          item["generators"] = e.generators;
          break;
        case PayloadEntry::Kind::poly:
          item["kind"] = "poly";
          item["value"] = e.value;
          break;
        case PayloadEntry::Kind::integer:
          item["kind"] = "int";
          item["value"] = std::stoll(e.value);
          break;
        case PayloadEntry::Kind::boolean:
          item["kind"] = "bool";
          item["value"] = e.value == "true";
          break;
        case PayloadEntry::Kind::text:
          item["kind"] = "text";
          item["value"] = e.value;
          break;
      }
      doc["payload"].push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
  }
};

const Ideal& get_ideal(const SessionFile& session, const std::string& name) {
  auto it = session.ideals.find(name);
  if (it == session.ideals.end()) throw UsageError("unknown ideal binding '" + name + "'");
  return it->second;
}

const Polynomial& get_poly(const SessionFile& session, const std::string& name) {
  auto it = session.polys.find(name);
  if (it == session.polys.end()) throw UsageError("unknown poly binding '" + name + "'");
  return it->second;
}

// Integer flags accept a literal value or the name of an `int` binding.
std::int64_t get_int(const SessionFile& session, const std::string& text) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  auto it = session.ints.find(text);
  if (it == session.ints.end()) {
    throw UsageError("'" + text + "' is neither an integer nor an int binding");
  }
  return it->second;
}

FrobeniusMultiplier make_multiplier(const SessionFile& session, const std::string& u_name,
                                    const std::string& base_name) {
  return FrobeniusMultiplier(get_poly(session, u_name), 1, get_ideal(session, base_name));
}

struct CommandContext {
  SessionFile session;
  Payload payload;
};

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Frobenius-theoretic ideal calculus over small prime fields"};
  app.require_subcommand(0, 1);

  std::string session_path;
  bool json_output = false;
  app.add_option("--session", session_path, "session file with the ring and named bindings");
  app.add_flag("--json", json_output, "emit the payload as JSON");

  // Per-command flag storage.
  std::string arg_ideal, arg_a, arg_b, arg_poly, arg_u, arg_base, arg_v, arg_c, arg_j, arg_l,
      arg_k;
  std::string arg_e, arg_level, arg_max_level, arg_eta;
  bool flag_chain = false;
  std::vector<std::string> arg_entries, arg_seq;

  struct Registered {
    CLI::App* cmd;
    std::function<void(CommandContext&)> action;
  };
  std::vector<Registered> registered;

  auto add = [&](const std::string& name, const std::string& description,
                 std::function<void(CommandContext&)> action) -> CLI::App* {
    CLI::App* cmd = app.add_subcommand(name, description);
    cmd->fallthrough();
    registered.push_back({cmd, std::move(action)});
    return cmd;
  };

  {
    CLI::App* c = add("gb", "reduced Groebner basis of an ideal", [&](CommandContext& ctx) {
      ctx.payload.add_ideal("result", get_ideal(ctx.session, arg_ideal));
    });
    c->add_option("--ideal", arg_ideal)->required();
  }
  {
    CLI::App* c = add("nf", "normal form of a polynomial", [&](CommandContext& ctx) {
      ctx.payload.add_poly("result", normal_form(get_poly(ctx.session, arg_poly),
                                                 get_ideal(ctx.session, arg_ideal)));
    });
    c->add_option("--poly", arg_poly)->required();
    c->add_option("--ideal", arg_ideal)->required();
  }
  {
    CLI::App* c = add("eq", "ideal equality", [&](CommandContext& ctx) {
      ctx.payload.add_bool("equal", ideal_equal(get_ideal(ctx.session, arg_a),
                                                get_ideal(ctx.session, arg_b)));
    });
    c->add_option("--a", arg_a)->required();
    c->add_option("--b", arg_b)->required();
  }
  auto binary_ideal_cmd = [&](const std::string& name, const std::string& description,
                              Ideal (*op)(const Ideal&, const Ideal&)) {
    CLI::App* c = add(name, description, [&, op](CommandContext& ctx) {
      ctx.payload.add_ideal(
          "result", op(get_ideal(ctx.session, arg_a), get_ideal(ctx.session, arg_b)));
    });
    c->add_option("--a", arg_a)->required();
    c->add_option("--b", arg_b)->required();
  };
  binary_ideal_cmd("sum", "sum of two ideals", ideal_sum);
  binary_ideal_cmd("product", "product of two ideals", ideal_product);
  binary_ideal_cmd("intersect", "intersection of two ideals", ideal_intersect);
  binary_ideal_cmd("colon", "colon ideal (a : b)", ideal_colon);
  {
    CLI::App* c = add("dim", "Krull dimension of the quotient by an ideal",
                      [&](CommandContext& ctx) {
                        ctx.payload.add_int("dim",
                                            quotient_dimension(get_ideal(ctx.session, arg_ideal)));
                      });
    c->add_option("--ideal", arg_ideal)->required();
  }
  {
    CLI::App* c = add("bracket", "bracket power of an ideal", [&](CommandContext& ctx) {
      ctx.payload.add_ideal("result", bracket_power(get_ideal(ctx.session, arg_ideal),
                                                    get_int(ctx.session, arg_e))
                                          .normalized());
    });
    c->add_option("--ideal", arg_ideal)->required();
    c->add_option("--e", arg_e)->required();
  }
  {
    CLI::App* c = add("root", "Frobenius root of an ideal", [&](CommandContext& ctx) {
      ctx.payload.add_ideal("result", frobenius_root(get_ideal(ctx.session, arg_ideal),
                                                     get_int(ctx.session, arg_e))
                                          .normalized());
    });
    c->add_option("--ideal", arg_ideal)->required();
    c->add_option("--e", arg_e)->required();
  }
  {
    CLI::App* c = add("star", "star closure of an ideal", [&](CommandContext& ctx) {
      ctx.payload.add_ideal("result",
                            star_closure(get_ideal(ctx.session, arg_ideal),
                                         get_poly(ctx.session, arg_v),
                                         get_int(ctx.session, arg_e)));
    });
    c->add_option("--ideal", arg_ideal)->required();
    c->add_option("--v", arg_v)->required();
    c->add_option("--e", arg_e)->required();
  }
  {
    CLI::App* c = add("sharp", "sharp closure of an E_S-ideal", [&](CommandContext& ctx) {
      FrobeniusMultiplier mult = make_multiplier(ctx.session, arg_u, arg_base);
      SharpResult sharp = sharp_closure(get_ideal(ctx.session, arg_ideal), mult);
      ctx.payload.add_ideal("result", sharp.closure);
    });
    c->add_option("--ideal", arg_ideal)->required();
    c->add_option("--u", arg_u)->required();
    c->add_option("--I", arg_base)->required();
  }
  {
    CLI::App* c = add("esideal", "test for an E_S-ideal", [&](CommandContext& ctx) {
      FrobeniusMultiplier mult = make_multiplier(ctx.session, arg_u, arg_base);
      EsStatus status = es_ideal_status(get_ideal(ctx.session, arg_ideal), mult);
      ctx.payload.add_bool("esideal", status == EsStatus::es_ideal);
      if (status == EsStatus::not_containing_base) {
        ctx.payload.add_text("reason", "not-containing-base");
      } else if (status == EsStatus::not_stable) {
        ctx.payload.add_text("reason", "not-stable");
      }
    });
    c->add_option("--ideal", arg_ideal)->required();
    c->add_option("--u", arg_u)->required();
    c->add_option("--I", arg_base)->required();
  }
  {
    CLI::App* c = add("hsl", "nilpotency chain and F-injectivity", [&](CommandContext& ctx) {
      FrobeniusMultiplier mult = make_multiplier(ctx.session, arg_u, arg_base);
      HslResult hsl = hsl_chain(mult);
      ctx.payload.add_int("eta", hsl.eta);
      ctx.payload.add_bool("finjective", hsl.f_injective);
      ctx.payload.add_ideal("nil", hsl.nil_ideal);
    });
    c->add_option("--I", arg_base)->required();
    c->add_option("--u", arg_u)->required();
  }
  {
    CLI::App* c = add("gradedann", "graded annihilator components", [&](CommandContext& ctx) {
      FrobeniusMultiplier mult = make_multiplier(ctx.session, arg_u, arg_base);
      if (!arg_k.empty()) {
        if (flag_chain || arg_level.empty()) {
          throw UsageError("--K requires --level and excludes --chain");
        }
        ctx.payload.add_ideal("result",
                              quotient_graded_ann(get_ideal(ctx.session, arg_l),
                                                  get_ideal(ctx.session, arg_k), mult,
                                                  get_int(ctx.session, arg_level)));
        return;
      }
      QuotientPresentation pres(get_ideal(ctx.session, arg_base));
      ESModuleDescriptor desc(pres, get_ideal(ctx.session, arg_l));
      if (flag_chain) {
        if (arg_max_level.empty()) throw UsageError("--chain requires --max-level");
        IdealChain chain = graded_ann_chain(desc, mult, get_int(ctx.session, arg_max_level));
        for (std::size_t i = 0; i < chain.entries().size(); ++i) {
          ctx.payload.add_ideal("level" + std::to_string(i), chain.entries()[i]);
        }
        if (chain.stabilized_at()) {
          ctx.payload.add_int("stabilized_at",
                              static_cast<std::int64_t>(*chain.stabilized_at()));
        } else {
          ctx.payload.add_text("stabilized_at", "none");
        }
        return;
      }
      if (arg_level.empty()) throw UsageError("gradedann needs --level or --chain");
      ctx.payload.add_ideal("result",
                            graded_ann_component(desc, mult, get_int(ctx.session, arg_level)));
    });
    c->add_option("--L", arg_l)->required();
    c->add_option("--u", arg_u)->required();
    c->add_option("--I", arg_base)->required();
    c->add_option("--K", arg_k);
    c->add_option("--level", arg_level);
    c->add_option("--max-level", arg_max_level);
    c->add_flag("--chain", flag_chain);
  }
  {
    CLI::App* c = add("wpti", "weak parameter test ideal at one level", [&](CommandContext& ctx) {
      QuotientPresentation pres(get_ideal(ctx.session, arg_base));
      FrobeniusMultiplier mult = make_multiplier(ctx.session, arg_u, arg_base);
      ctx.payload.add_ideal("result",
                            wpti(pres, mult, get_ideal(ctx.session, arg_j),
                                 get_poly(ctx.session, arg_c), get_int(ctx.session, arg_e)));
    });
    c->add_option("--I", arg_base)->required();
    c->add_option("--u", arg_u)->required();
    c->add_option("--J", arg_j)->required();
    c->add_option("--c", arg_c)->required();
    c->add_option("--e", arg_e)->required();
  }
  {
    CLI::App* c = add("wptilimit", "weak parameter test ideals until stabilization",
                      [&](CommandContext& ctx) {
      QuotientPresentation pres(get_ideal(ctx.session, arg_base));
      FrobeniusMultiplier mult = make_multiplier(ctx.session, arg_u, arg_base);
      TestIdealResult result =
          wpti_limit(pres, mult, get_ideal(ctx.session, arg_j), get_poly(ctx.session, arg_c),
                     get_int(ctx.session, arg_max_level));
      for (std::size_t i = 0; i < result.per_level.entries().size(); ++i) {
        ctx.payload.add_ideal("tau" + std::to_string(i), result.per_level.entries()[i]);
      }
      if (result.stable_index) {
        ctx.payload.add_int("stable_index", *result.stable_index);
      } else {
        ctx.payload.add_text("stable_index", "none");
      }
    });
    c->add_option("--I", arg_base)->required();
    c->add_option("--u", arg_u)->required();
    c->add_option("--J", arg_j)->required();
    c->add_option("--c", arg_c)->required();
    c->add_option("--max-level", arg_max_level)->required();
  }
  {
    CLI::App* c = add("nphi", "twisted root ideal for one Frobenius splitting datum",
                      [&](CommandContext& ctx) {
      QuotientPresentation pres(get_ideal(ctx.session, arg_base));
      ctx.payload.add_ideal("result",
                            n_phi_ideal(pres, get_poly(ctx.session, arg_v),
                                        get_int(ctx.session, arg_e),
                                        get_ideal(ctx.session, arg_j),
                                        get_poly(ctx.session, arg_c)));
    });
    c->add_option("--I", arg_base)->required();
    c->add_option("--v", arg_v)->required();
    c->add_option("--e", arg_e)->required();
    c->add_option("--J", arg_j)->required();
    c->add_option("--c", arg_c)->required();
  }
  {
    CLI::App* c = add("tc", "tight-closure annihilator ideal", [&](CommandContext& ctx) {
      QuotientPresentation pres(get_ideal(ctx.session, arg_base));
      FrobeniusMultiplier mult = make_multiplier(ctx.session, arg_u, arg_base);
      TcResult tc = tc_annihilator(pres, mult, get_ideal(ctx.session, arg_j),
                                   get_poly(ctx.session, arg_c), get_int(ctx.session, arg_eta));
      ctx.payload.add_ideal("result", tc.annihilator_ideal);
      ctx.payload.add_bool("variants_agree", tc.variants_agree);
    });
    c->add_option("--I", arg_base)->required();
    c->add_option("--u", arg_u)->required();
    c->add_option("--J", arg_j)->required();
    c->add_option("--c", arg_c)->required();
    c->add_option("--eta", arg_eta)->required();
  }
  {
    CLI::App* c = add("cizero", "tight closure of zero for a complete intersection",
                      [&](CommandContext& ctx) {
      QuotientPresentation pres(get_ideal(ctx.session, arg_base));
      std::vector<Polynomial> seq;
      seq.reserve(arg_seq.size());
      for (const std::string& name : arg_seq) seq.push_back(get_poly(ctx.session, name));
      ctx.payload.add_ideal("result",
                            ci_zero_star(pres, seq, get_poly(ctx.session, arg_c),
                                         get_int(ctx.session, arg_max_level)));
    });
    c->add_option("--I", arg_base)->required();
    c->add_option("--g", arg_seq, "poly bindings forming the regular sequence");
    c->add_option("--c", arg_c)->required();
    c->add_option("--max-level", arg_max_level)->required();
  }
  {
    CLI::App* c = add("qgtest", "quasi-Gorenstein test ideal", [&](CommandContext& ctx) {
      QuotientPresentation pres(get_ideal(ctx.session, arg_base));
      FrobeniusMultiplier mult = make_multiplier(ctx.session, arg_u, arg_base);
      ctx.payload.add_ideal(
          "result", quasi_gorenstein_test_ideal(pres, mult, get_poly(ctx.session, arg_c)));
    });
    c->add_option("--I", arg_base)->required();
    c->add_option("--u", arg_u)->required();
    c->add_option("--c", arg_c)->required();
  }
  {
    CLI::App* c = add("verifychain", "validate a chain of sharp-fixed ideals",
                      [&](CommandContext& ctx) {
      FrobeniusMultiplier mult = make_multiplier(ctx.session, arg_u, arg_base);
      std::vector<Ideal> chain;
      chain.reserve(arg_entries.size());
      for (const std::string& name : arg_entries) chain.push_back(get_ideal(ctx.session, name));
      ChainReport report = verify_sharp_chain(chain, mult);
      ctx.payload.add_bool("valid", report.valid);
      for (const std::string& v : report.violations) ctx.payload.add_text("violation", v);
    });
    c->add_option("--I", arg_base)->required();
    c->add_option("--u", arg_u)->required();
    c->add_option("--entry", arg_entries, "ideal bindings forming the chain")->required();
  }

  CliResult result;
  try {
    // CLI11's vector overload consumes the arguments back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    int code = app.exit(e, out, err);  // prints help or a usage message
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? 0 : 1;
    return result;
  }

  CLI::App* chosen = nullptr;
  std::function<void(CommandContext&)> action;
  for (const Registered& r : registered) {
    if (r.cmd->parsed()) {
      chosen = r.cmd;
      action = r.action;
      break;
    }
  }
  if (chosen == nullptr) {
    result.err = "usage error: no command given (see --help)\n";
    result.exit_code = 1;
    return result;
  }

  try {
    if (session_path.empty()) throw UsageError("--session is required");
    CommandContext ctx{load_session(session_path), Payload{}};
    action(ctx);
    result.out =
        json_output ? ctx.payload.render_json(chosen->get_name()) : ctx.payload.render_text();
  } catch (const UsageError& e) {
    result.err = std::string("usage error: ") + e.what() + "\n";
    result.exit_code = 1;
  } catch (const ParseError& e) {
    std::ostringstream err;
    err << "parse error";
    if (e.line() > 0) err << " at line " << e.line();
    if (e.position() > 0) err << ", column " << e.position();
    err << ": " << e.what() << "\n";
    result.err = err.str();
    result.exit_code = 2;
  } catch (const CapExceededError& e) {
    result.err = std::string("cap exceeded: ") + e.what() + "\n";
    result.exit_code = 4;
  } catch (const PreconditionError& e) {
    result.err = std::string("precondition failed: ") + e.what() + "\n";
    result.exit_code = 3;
  } catch (const Error& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 3;
  }
  return result;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  CliResult result = run_cli(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}

}  // namespace frobkit
