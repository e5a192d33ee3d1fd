#include "qplane/cli.hpp"

#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "qplane/division.hpp"
#include "qplane/parser.hpp"

namespace qplane {

Json to_json(const QPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back(Json{{"i", e.x_exp}, {"j", e.y_exp}, {"c", c.to_string()}});
  return Json{{"q", f.q().to_string()}, {"field", f.field().to_string()}, {"terms", std::move(terms)}};
}

Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const QPoly& p : f.factors) factors.push_back(to_string(p));
  return Json{{"unit", f.unit.to_string()}, {"factors", std::move(factors)}};
}

Json to_json(const PrimeVerdict& verdict) {
  if (const auto* p = std::get_if<Prime>(&verdict))
    return Json{{"verdict", "PRIME"}, {"certificate", to_string(p->certificate)}};
  if (const auto* u = std::get_if<Unknown>(&verdict))
    return Json{{"verdict", "UNKNOWN"}, {"explanation", u->explanation}};
  const NotPrimeReason& reason = std::get<NotPrime>(verdict).reason;
  Json out{{"verdict", "NOT PRIME"}, {"reason", reason_name(reason)}};
  if (const auto* nc = std::get_if<reason::NotCentral>(&reason)) {
    out["offending"] = to_string(nc->offending);
  } else if (const auto* red = std::get_if<reason::Reducible>(&reason)) {
    out["witness"] = to_json(red->witness);
  } else if (const auto* w = std::get_if<reason::ExplicitWitness>(&reason)) {
    out["f"] = to_string(w->f);
    out["g"] = to_string(w->g);
  }
  return out;
}

namespace {

constexpr const char* kGrammar = R"(Polynomial syntax:
  sum      := product (('+' | '-') product)*
  product  := unary (('*' | '/') unary | unary)*     juxtaposition multiplies: 2x y
  unary    := '-' unary | power
  power    := atom ('^' integer)?                     right-associative
  atom     := integer | x | y | sqrt(integer) | '(' sum ')'
Products keep their written order: y*x is q*x*y. Division needs a constant divisor.
Scalars (--q, coefficients) use the same syntax, e.g. -1, 3/2, (1+sqrt(2))/3.
Fields: Q, Q(sqrt 2), Q(sqrt(-3)). Put "--" before a polynomial that starts with '-'.
)";

struct Outcome {
  std::string text;
  Json result;
  int code = exit_code::kOk;
};

std::string verdict_word(IrreducibilityVerdict::Kind kind) {
  switch (kind) {
    case IrreducibilityVerdict::Kind::Irreducible: return "IRREDUCIBLE";
    case IrreducibilityVerdict::Kind::Reducible: return "REDUCIBLE";
    case IrreducibilityVerdict::Kind::Unsupported: return "UNSUPPORTED";
  }
  return "UNSUPPORTED";
}

Outcome irreducible_outcome(const IrreducibilityVerdict& v) {
  Outcome o;
  o.result = Json{{"verdict", verdict_word(v.kind)}};
  switch (v.kind) {
    case IrreducibilityVerdict::Kind::Irreducible:
      o.text = "IRREDUCIBLE";
      break;
    case IrreducibilityVerdict::Kind::Reducible:
      o.text = "REDUCIBLE: " + to_string(*v.witness);
      o.result["witness"] = to_json(*v.witness);
      break;
    case IrreducibilityVerdict::Kind::Unsupported:
      o.text = "UNSUPPORTED: " + v.explanation;
      o.result["explanation"] = v.explanation;
      o.code = exit_code::kUndecided;
      break;
  }
  return o;
}

Outcome factored_outcome(const Factorization& f) {
  Outcome o;
  o.text = to_string(f);
  o.result = Json{{"verdict", "REDUCIBLE"}};
  o.result.update(to_json(f));
  return o;
}

Outcome irreducible_only() {
  return Outcome{"IRREDUCIBLE", Json{{"verdict", "IRREDUCIBLE"}}, exit_code::kOk};
}

Outcome factor_command(const QPoly& f) {
  if (f.is_constant()) throw ConstantInput("cannot factor the constant " + to_string(f));
  if (const auto qf = as_quadratic_form(f)) {
    const std::vector<Factorization> all = factor_qf(*qf);
    if (all.empty()) return irreducible_only();
    Outcome o = factored_outcome(all.front());
    Json alternatives = Json::array();
    for (std::size_t n = 0; n < all.size(); ++n) {
      if (n > 0) o.text += "\n" + to_string(all[n]);
      alternatives.push_back(to_json(all[n]));
    }
    o.result["factorizations"] = std::move(alternatives);
    return o;
  }
  if (is_homogeneous(f)) {
    const HomogeneousFactorResult r = factor_homogeneous(f);
    switch (r.status) {
      case FactorStatus::Irreducible: return irreducible_only();
      case FactorStatus::Factored: return factored_outcome(r.factorization);
      case FactorStatus::Partial: {
        Outcome o = factored_outcome(r.factorization);
        o.text = "PARTIAL: " + o.text;
        o.result["verdict"] = "PARTIAL";
        Json rest = Json::array();
        for (const QPoly& p : r.unfactored) rest.push_back(to_string(p));
        o.result["unfactored"] = std::move(rest);
        o.code = exit_code::kUndecided;
        return o;
      }
    }
  }
  if (univariate_variable(f)) {
    try {
      const UnivariateFactorResult r = factor_univariate(f);
      if (r.status == FactorStatus::Irreducible) return irreducible_only();
      return factored_outcome(r.factorization);
    } catch (const DegreeCapExceeded& e) {
      return Outcome{std::string("UNSUPPORTED: ") + e.what(),
                     Json{{"verdict", "UNSUPPORTED"}, {"explanation", e.what()}},
                     exit_code::kUndecided};
    }
  }
  const IrreducibilityVerdict v = is_irreducible(f);
  if (v.kind == IrreducibilityVerdict::Kind::Reducible) return factored_outcome(*v.witness);
  return irreducible_outcome(v);
}

Outcome prime_command(const QPoly& p) {
  const PrimeVerdict verdict = classify_prime(p);
  Outcome o{to_string(verdict), to_json(verdict), exit_code::kOk};
  if (std::holds_alternative<Unknown>(verdict)) o.code = exit_code::kUndecided;
  return o;
}

Outcome divmod_command(const QPoly& f, const QPoly& g, Side side, Direction dir) {
  const DivisionResult r = divmod(f, g, side, dir);
  Outcome o;
  o.text = "quotient: " + to_string(r.quotient) + "\nremainder: " + to_string(r.remainder);
  o.result = Json{{"side", to_string(side)},
                  {"direction", to_string(dir)},
                  {"quotient", to_json(r.quotient)},
                  {"remainder", to_json(r.remainder)}};
  return o;
}

Outcome disc_command(const QPoly& form) {
  const QuadraticForm qf = QuadraticForm::from_poly(form);
  const FieldElem d = quantum_discriminant(qf);
  const QFReducibility red = is_reducible_qf(qf);
  Outcome o;
  o.text = d.to_string();
  o.result = Json{{"discriminant", d.to_string()}, {"square", red.reducible}};
  if (red.witness) o.result["root"] = red.witness->to_string();
  return o;
}

Outcome central_command(const QPoly& f) {
  const auto offending = non_central_exponent(f);
  Outcome o;
  o.text = offending ? "NOT CENTRAL: " + to_string(*offending) : "CENTRAL";
  o.result = Json{{"central", !offending.has_value()}};
  if (offending) o.result["offending"] = to_string(*offending);
  return o;
}

Outcome witness_command(const QPoly& p, const QPoly& f, const QPoly& g) {
  const bool ok = verify_nonprime_witness(p, f, g);
  const QPoly fg = f * g;
  Outcome o;
  o.text = ok ? "WITNESS VALID" : "WITNESS INVALID";
  o.result = Json{{"valid", ok}, {"product", to_string(fg)}};
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in the quantum plane O_q(F^2), where yx = qxy.", "qplane"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  std::string q_text = "1";
  std::string field_text = "Q";
  bool json = false;
  app.add_option("--q", q_text, "commutation parameter q (nonzero scalar)")->capture_default_str();
  app.add_option("--field", field_text, "coefficient field")->capture_default_str();
  app.add_flag("--json", json, "emit JSON");

  std::vector<std::string> polys;
  std::string side_text = "right";
  std::string dir_text = "x";

  struct Command {
    CLI::App* app;
    std::size_t arity;  // 0 means one or more
  };
  std::vector<Command> commands;
  auto add = [&](const char* name, const char* help, std::size_t arity) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    auto* opt = sub->add_option("polynomials", polys, "polynomial expressions")->required();
    if (arity != 0) opt->expected(static_cast<int>(arity));
    commands.push_back({sub, arity});
    return sub;
  };
  add("eval", "print the canonical form of a polynomial", 1);
  add("mul", "multiply polynomials left to right", 0);
  CLI::App* divmod_app = add("divmod", "skew division f = Q*g + R (right) or f = g*Q + R (left)", 2);
  divmod_app->add_option("--side", side_text, "left or right")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  divmod_app->add_option("--dir", dir_text, "x or y")
      ->check(CLI::IsMember({"x", "y"}))
      ->capture_default_str();
  add("disc", "quantum discriminant b^2 - 4acq of a quadratic form", 1);
  add("factor", "factor a polynomial", 1);
  add("central", "test whether a polynomial is central", 1);
  add("irreducible", "decide irreducibility", 1);
  add("prime", "classify primality", 1);
  add("witness", "verify a non-primality witness p | f*g with p dividing neither", 3);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_code::kInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();

  Outcome outcome;
  std::string q_shown;
  std::string field_shown;
  try {
    const Field field = Field::parse(field_text);
    const SessionConfig config(parse_scalar(q_text, field), field,
                               json ? OutputFormat::Json : OutputFormat::Text);
    q_shown = config.q.to_string();
    field_shown = config.field.to_string();

    std::vector<QPoly> parsed;
    for (const std::string& text : polys) parsed.push_back(parse_polynomial(text, config));

    if (name == "eval") {
      outcome = Outcome{to_string(parsed[0]), to_json(parsed[0]), exit_code::kOk};
    } else if (name == "mul") {
      QPoly product = parsed[0];
      for (std::size_t n = 1; n < parsed.size(); ++n) product = product * parsed[n];
      outcome = Outcome{to_string(product), to_json(product), exit_code::kOk};
    } else if (name == "divmod") {
      outcome = divmod_command(parsed[0], parsed[1], side_text == "left" ? Side::Left : Side::Right,
                               dir_text == "y" ? Direction::Y : Direction::X);
    } else if (name == "disc") {
      outcome = disc_command(parsed[0]);
    } else if (name == "factor") {
      outcome = factor_command(parsed[0]);
    } else if (name == "central") {
      outcome = central_command(parsed[0]);
    } else if (name == "irreducible") {
      outcome = irreducible_outcome(is_irreducible(parsed[0]));
    } else if (name == "prime") {
      outcome = prime_command(parsed[0]);
    } else {
      outcome = witness_command(parsed[0], parsed[1], parsed[2]);
    }
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n\n" << kGrammar;
    return exit_code::kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInputError;
  }

  if (json) {
    const Json doc{{"command", name}, {"q", q_shown}, {"field", field_shown}, {"result", outcome.result}};
    out << doc.dump(2) << "\n";
  } else {
    out << outcome.text << "\n";
  }
  return outcome.code;
}

}  // namespace qplane
