#include "hilbert/cli.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hilbert/errors.hpp"
#include "hilbert/macaulay.hpp"
#include "hilbert/oracle.hpp"
#include "hilbert/parser.hpp"
#include "hilbert/polynomial.hpp"
#include "hilbert/realizer.hpp"

namespace hilbert {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char kUsage[] =
    "usage: hilbertpoly [--json] <command> ...\n"
    "  check <poly>              decide Hilbert membership, print M(f)\n"
    "  decompose <poly>          print Macaulay parameters and terms\n"
    "  signs <poly>              print the sign pattern S(f)\n"
    "  realize <s0,s1,...>       build a Hilbert polynomial with sign pattern s\n"
    "  bound --coeffs a0,a1,...  print leading_bound and minimal_leading\n"
    "  oracle --vars n [--gens \"x1^2,x1*x2\"] --tmax T\n"
    "                            Hilbert table of a monomial quotient + cross-check\n"
    "polynomials: e.g. \"5*x^3 - 2*x + 1\", \"1/2 x^2 + 1/2 x\"\n";

std::string format_params(const MacaulayParams& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.params.size(); ++i)
    s += (i ? ", " : "") + m.params[i].str();
  return s + ")";
}

std::string format_pattern(const SignPattern& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i)
    s += (i ? ", " : "") + std::to_string(p[i]);
  return s + ")";
}

json params_json(const MacaulayParams& m) {
  json a = json::array();
  for (const Integer& v : m.params)
    a.push_back(v.str());
  return a;
}

const char* tag_name(AtomTag tag) {
  switch (tag) {
    case AtomTag::kMonomialProposition: return "monomial-proposition";
    case AtomTag::kBaseFact2xPlus1: return "base-fact-2x+1";
    case AtomTag::kBaseFact5xMinus5: return "base-fact-5x-5";
    case AtomTag::kProductOfAtoms: return "product-of-atoms";
    case AtomTag::kConstant: return "constant";
  }
  return "?";
}

std::string render_node(const CertNode& node, const std::vector<CertAtom>& atoms) {
  switch (node.kind) {
    case CertNode::Kind::kLeaf:
      return "(" + to_string(atoms[node.atom].poly) + ")";
    case CertNode::Kind::kSum: {
      std::string s;
      for (std::size_t i = 0; i < node.children.size(); ++i)
        s += (i ? " + " : "") + render_node(node.children[i], atoms);
      return s;
    }
    case CertNode::Kind::kProduct: {
      std::string s;
      for (std::size_t i = 0; i < node.children.size(); ++i)
        s += (i ? "*" : "") + render_node(node.children[i], atoms);
      return s;
    }
  }
  return "";
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    // trim blanks
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw UsageError("empty entry in integer list '" + text + "'");
    try {
      out.emplace_back(item.substr(b, e - b + 1));
    } catch (const std::runtime_error&) {
      throw UsageError("bad integer '" + item + "'");
    }
  }
  if (out.empty())
    throw UsageError("empty integer list");
  return out;
}

// --flag value and --flag=value forms.
std::map<std::string, std::string> parse_options(const std::vector<std::string>& args,
                                                 std::size_t from) {
  std::map<std::string, std::string> opts;
  for (std::size_t i = from; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0)
      throw UsageError("unexpected argument '" + a + "'");
    auto eq = a.find('=');
    if (eq != std::string::npos) {
      opts[a.substr(2, eq - 2)] = a.substr(eq + 1);
    } else {
      if (i + 1 >= args.size())
        throw UsageError("missing value for " + a);
      opts[a.substr(2)] = args[++i];
    }
  }
  return opts;
}

std::string require_option(std::map<std::string, std::string>& opts, const std::string& name) {
  auto it = opts.find(name);
  if (it == opts.end())
    throw UsageError("missing required option --" + name);
  std::string v = it->second;
  opts.erase(it);
  return v;
}

void emit(std::ostream& out, bool as_json, const json& obj, const std::string& text) {
  if (as_json)
    out << obj.dump(2) << "\n";
  else
    out << text;
}

int cmd_check(const std::string& input, bool as_json, std::ostream& out) {
  Polynomial f = parse_poly(input);
  bool integer_valued = is_integer_valued(f);
  bool hilbert = is_hilbert(f);
  std::optional<MacaulayParams> m;
  if (integer_valued)
    m = macaulay_params(f);

  std::string text = hilbert ? "Hilbert polynomial" : "not a Hilbert polynomial";
  text += m ? "; M = " + format_params(*m) : "; not integer-valued";
  json obj = {{"command", "check"},
              {"input", input},
              {"result", to_string(f)},
              {"params", m ? params_json(*m) : json(nullptr)},
              {"verdict", hilbert}};
  emit(out, as_json, obj, text + "\n");
  return hilbert ? 0 : 1;
}

int cmd_decompose(const std::string& input, bool as_json, std::ostream& out) {
  Polynomial f = parse_poly(input);
  MacaulayParams m = macaulay_params(f);  // NotIntegerValued -> exit 2

  std::vector<std::string> terms;
  for (std::size_t i = m.params.size(); i-- > 0;)
    terms.push_back("m_" + std::to_string(i) + " = " + m.params[i].str() + ": " +
                    to_string(macaulay_term(static_cast<unsigned>(i), m.params[i])));

  std::ostringstream text;
  text << "f = " << to_string(f) << "\n"
       << "M(f) = " << format_params(m) << "\n";
  for (const std::string& t : terms)
    text << "  " << t << "\n";
  json obj = {{"command", "decompose"},
              {"input", input},
              {"result", terms},
              {"params", params_json(m)},
              {"verdict", m.non_increasing_nonnegative()}};
  emit(out, as_json, obj, text.str());
  return 0;
}

int cmd_signs(const std::string& input, bool as_json, std::ostream& out) {
  Polynomial f = parse_poly(input);
  SignPattern s = sign_pattern(f);  // DegreeUndefined -> exit 2
  json obj = {{"command", "signs"},
              {"input", input},
              {"result", s},
              {"params", nullptr},
              {"verdict", nullptr}};
  emit(out, as_json, obj, format_pattern(s) + "\n");
  return 0;
}

int cmd_realize(const std::string& input, bool as_json, std::ostream& out) {
  SignPattern s;
  for (const Integer& v : parse_integer_list(input)) {
    if (v < -1 || v > 1)
      throw UsageError("sign pattern entries must be -1, 0 or 1");
    s.push_back(v.convert_to<int>());
  }
  Polynomial f = realize_signs(s);
  LowerCoefficients lower;
  lower.a.assign(s.begin(), s.end());
  Certificate cert = build_certificate(lower, numerator(f.leading_coefficient()));
  bool verified = verify_certificate(cert, f);
  MacaulayParams m = macaulay_params(f);

  std::ostringstream text;
  text << to_string(f) << "\n"
       << "certificate: " << render_node(cert.combiner, cert.atoms) << "\n";
  for (const CertAtom& atom : cert.atoms)
    text << "  atom [" << tag_name(atom.tag) << "] " << to_string(atom.poly) << "\n";
  text << "verified: " << (verified ? "yes" : "NO") << "\n";

  json atoms = json::array();
  for (const CertAtom& atom : cert.atoms)
    atoms.push_back({{"poly", to_string(atom.poly)}, {"tag", tag_name(atom.tag)}});
  json obj = {{"command", "realize"},
              {"input", input},
              {"result",
               {{"polynomial", to_string(f)},
                {"certificate", {{"atoms", atoms},
                                 {"expression", render_node(cert.combiner, cert.atoms)}}}}},
              {"params", params_json(m)},
              {"verdict", verified}};
  emit(out, as_json, obj, text.str());
  return verified ? 0 : 1;
}

int cmd_bound(std::map<std::string, std::string> opts, bool as_json, std::ostream& out) {
  LowerCoefficients lower{parse_integer_list(require_option(opts, "coeffs"))};
  if (!opts.empty())
    throw UsageError("unknown option --" + opts.begin()->first);
  Integer bound = leading_bound(lower);
  Integer minimal = minimal_leading(lower);
  json obj = {{"command", "bound"},
              {"input", nullptr},
              {"result", {{"leading_bound", bound.str()}, {"minimal_leading", minimal.str()}}},
              {"params", nullptr},
              {"verdict", nullptr}};
  std::string text =
      "leading_bound = " + bound.str() + "\nminimal_leading = " + minimal.str() + "\n";
  emit(out, as_json, obj, text);
  return 0;
}

int cmd_oracle(std::map<std::string, std::string> opts, bool as_json, std::ostream& out) {
  std::string vars_text = require_option(opts, "vars");
  std::string tmax_text = require_option(opts, "tmax");
  std::string gens_text;
  if (auto it = opts.find("gens"); it != opts.end()) {
    gens_text = it->second;
    opts.erase(it);
  }
  if (!opts.empty())
    throw UsageError("unknown option --" + opts.begin()->first);
  unsigned n_vars, t_max;
  try {
    n_vars = static_cast<unsigned>(std::stoul(vars_text));
    t_max = static_cast<unsigned>(std::stoul(tmax_text));
  } catch (const std::exception&) {
    throw UsageError("--vars and --tmax take non-negative integers");
  }
  if (n_vars == 0)
    throw UsageError("--vars must be >= 1");

  MonomialIdeal ideal(n_vars, parse_generators(gens_text, n_vars));
  CrossCheck result = cross_check(ideal, t_max);

  std::ostringstream table;
  for (std::size_t t = 0; t < result.table.values.size(); ++t)
    table << (t ? ", " : "(") << result.table.values[t];
  table << ")";

  std::ostringstream text;
  text << "table = " << table.str() << "\n"
       << "polynomial = " << to_string(result.poly) << "\n"
       << "stabilization = " << result.stabilization << "\n"
       << "M = " << format_params(result.params) << "\n"
       << "cross-check: " << (result.pass ? "pass" : "FAIL") << "\n";
  json obj = {{"command", "oracle"},
              {"input", {{"vars", n_vars}, {"gens", gens_text}, {"tmax", t_max}}},
              {"result",
               {{"table", result.table.values},
                {"polynomial", to_string(result.poly)},
                {"stabilization", result.stabilization}}},
              {"params", params_json(result.params)},
              {"verdict", result.pass}};
  emit(out, as_json, obj, text.str());
  return result.pass ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> rest;
  bool as_json = false;
  for (const std::string& a : args) {
    if (a == "--json")
      as_json = true;
    else
      rest.push_back(a);
  }
  try {
    if (rest.empty())
      throw UsageError("no command given");
    const std::string& cmd = rest[0];
    auto positional = [&](const char* what) -> const std::string& {
      if (rest.size() != 2)
        throw UsageError(std::string(cmd) + " takes exactly one argument: " + what);
      return rest[1];
    };
    if (cmd == "check")
      return cmd_check(positional("a polynomial"), as_json, out);
    if (cmd == "decompose")
      return cmd_decompose(positional("a polynomial"), as_json, out);
    if (cmd == "signs")
      return cmd_signs(positional("a polynomial"), as_json, out);
    if (cmd == "realize")
      return cmd_realize(positional("a sign pattern"), as_json, out);
    if (cmd == "bound")
      return cmd_bound(parse_options(rest, 1), as_json, out);
    if (cmd == "oracle")
      return cmd_oracle(parse_options(rest, 1), as_json, out);
    throw UsageError("unknown command '" + cmd + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kUsage;
    return 2;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hilbert
