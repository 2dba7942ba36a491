#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ellimod/error.hpp"
#include "ellimod/json_io.hpp"
#include "ellimod/verify.hpp"

namespace ellimod::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string group;
  std::string mu;
  std::string compare;
  std::string json;
  std::string vector;
  std::optional<std::int64_t> d;
  std::optional<int> node;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::size_t samples = VerifyOptions{}.samples;
  bool heuristic = false;
  bool markdown = false;
};

struct Outcome {
  Json result;
  int exit_code = kOk;
};

using Handler = std::function<Outcome(const Flags&, Json& input, std::ostream& err)>;

struct Command {
  const char* name;
  const char* description;
  const char* provenance;
  Handler handler;
};

std::shared_ptr<const RootSystem> group_of(const Flags& f, Json& input) {
  if (f.group.empty()) throw UsageError("--group is required (e.g. --group E8)");
  input["group"] = f.group;
  return parse_group(f.group);
}

ELambdaPoint mu_of(const std::shared_ptr<const RootSystem>& sys, const Flags& f, Json& input) {
  if (f.mu.empty()) throw UsageError("--mu is required (e.g. --mu \"1/3,0;0,1/2\")");
  input["mu"] = f.mu;
  return ELambdaPoint::parse(sys, f.mu);
}

BundleDecomp decomp_of(const Flags& f, Json& input) {
  if (f.json.empty()) throw UsageError("--json is required (inline JSON or @file)");
  std::string text = f.json;
  if (text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot read " + text.substr(1));
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::MalformedInput, "--json is not valid JSON");
  input["decomposition"] = j;
  return bundle_decomp_from_json(j);
}

Json root_labels(const RootSystem& sys, const std::vector<std::size_t>& roots) {
  Json out = Json::array();
  for (auto r : roots) {
    std::string s = "[";
    for (std::size_t i = 0; i < sys.roots()[r].size(); ++i)
      s += (i ? "," : "") + std::to_string(sys.roots()[r][i]);
    out.push_back(s + "]");
  }
  return out;
}

IntVector parse_int_vector(const std::string& text) {
  IntVector out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::MalformedInput, "not an integer vector: '" + text + "'");
    }
  }
  return out;
}

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"weights", "Weights (g_0, ..., g_r) of the weighted projective moduli space",
       "weights are 1 and the coefficients of the highest coroot",
       [](const Flags& f, Json& in, std::ostream&) {
         auto sys = group_of(f, in);
         return Outcome{{{"weights", wp_weights(*sys)}}};
       }},
      {"casimir", "Casimir weights d_i = m_i + 1, |W| and dim g",
       "exponents from the Coxeter element; |W| from the stabilizer chain",
       [](const Flags& f, Json& in, std::ostream&) {
         auto sys = group_of(f, in);
         return Outcome{{{"casimir_weights", sys->casimir_weights()},
                         {"exponents", sys->exponents()},
                         {"weyl_order", sys->weyl_order()},
                         {"dimension", sys->dimension()}}};
       }},
      {"strata", "Dimensions of the Z/d isotropy strata of the moduli space",
       "number of weights divisible by d",
       [](const Flags& f, Json& in, std::ostream&) {
         auto sys = group_of(f, in);
         if (f.d) {
           in["d"] = *f.d;
           return Outcome{{{"d", *f.d}, {"dim", stratum_dim(*sys, *f.d)}}};
         }
         const IntVector w = wp_weights(*sys);
         Json strata = Json::array();
         for (std::int64_t d = 2; d <= *std::max_element(w.begin(), w.end()); ++d)
           if (auto k = stratum_dim(*sys, d); k > 0) strata.push_back({{"d", d}, {"dim", k}});
         return Outcome{{{"weights", w}, {"strata", strata}}};
       }},
      {"canon", "Canonical representative of the W-orbit of mu and its stabilizer order",
       "lexicographically minimal point of the W-orbit in E (x) coroot lattice",
       [](const Flags& f, Json& in, std::ostream&) {
         auto sys = group_of(f, in);
         const ELambdaPoint mu = mu_of(sys, f, in);
         if (f.compare.empty()) return Outcome{to_json(canonicalize(mu))};
         in["compare"] = f.compare;
         in["heuristic"] = f.heuristic;
         const ELambdaPoint nu = ELambdaPoint::parse(sys, f.compare);
         return Outcome{{{"equal", orbit_equal(mu, nu, f.heuristic)},
                         {"method", f.heuristic ? "fingerprint" : "exact"}}};
       }},
      {"regular", "Regularity of the class of mu and h^0 of the split adjoint bundle",
       "regular iff no root vanishes on mu; h^0 = r + number of vanishing roots",
       [](const Flags& f, Json& in, std::ostream&) {
         auto sys = group_of(f, in);
         const ELambdaPoint mu = mu_of(sys, f, in);
         return Outcome{{{"regular", is_regular_class(mu)},
                         {"aut_dim_split", aut_dim_split(mu)},
                         {"vanishing_roots", root_labels(*sys, vanishing_roots(mu))}}};
       }},
      {"adjoint", "Adjoint bundle of the split and of the regular representative",
       "split: O^r plus root line bundles; regular: blocks I_{2d-1} of the vanishing subsystem",
       [](const Flags& f, Json& in, std::ostream&) {
         auto sys = group_of(f, in);
         const ELambdaPoint mu = mu_of(sys, f, in);
         return Outcome{{{"split", to_json(split_adjoint(mu))},
                         {"regular", to_json(regular_adjoint_blocks(mu))}}};
       }},
      {"classify-sl", "Validate an SL(n) decomposition and report regularity",
       "regular iff the twists are distinct; aut dim = sum of min(d_i, d_j) over equal twists - 1",
       [](const Flags& f, Json& in, std::ostream&) {
         const auto c = sl_classify(decomp_of(f, in));
         return Outcome{{{"regular", c.is_regular}, {"aut_dim", c.aut_dim}}};
       }},
      {"classify-sp", "Validate a regular Sp(2n) decomposition",
       "I_{2a}(eta) at two-torsion twists, I_d(lambda) + I_d(-lambda) elsewhere",
       [](const Flags& f, Json& in, std::ostream&) {
         return Outcome{{{"valid", true}, {"n", sp_validate(decomp_of(f, in))}}};
       }},
      {"classify-so", "Validate a regular SO(N) decomposition and its Spin liftability",
       "I_{2a+1}(eta) + eta at two-torsion twists, pairs elsewhere; odd blocks lift to Spin",
       [](const Flags& f, Json& in, std::ostream&) {
         return Outcome{{{"valid", true}, {"n", so_validate(decomp_of(f, in))}}};
       }},
      {"from-mu", "Regular SL(n) or Sp(2n) decomposition of the class of mu (types A, C)",
       "lift of mu to E^n in the epsilon model, grouped by value",
       [](const Flags& f, Json& in, std::ostream&) {
         auto sys = group_of(f, in);
         const ELambdaPoint mu = mu_of(sys, f, in);
         if (sys->kind() == Kind::A) return Outcome{to_json(sl_class_from_mu(mu))};
         if (sys->kind() == Kind::C) return Outcome{to_json(sp_class_from_mu(mu))};
         throw Error(ErrorCode::WrongSystemType,
                     "from-mu needs type A or C, got " + sys->name());
       }},
      {"parabolic", "Maximal parabolic at the marked vertex and its unipotent levels",
       "marked vertex: trivalent (D, E), long end of the multiple edge (B, C, F, G), P_d (A)",
       [](const Flags& f, Json& in, std::ostream&) {
         auto sys = group_of(f, in);
         if (f.d) in["d"] = *f.d;
         return Outcome{to_json(parabolic_data(*sys, f.d), *sys)};
       }},
      {"family", "C^*-weights and line bundle exponents of the family over the base",
       "sorted weights g_i paired with Casimir weights; leading row (1, 0); E8 excluded",
       [](const Flags& f, Json& in, std::ostream&) {
         auto sys = group_of(f, in);
         return Outcome{to_json(family_table(*sys))};
       }},
      {"np", "Order n_P of the central subgroup for the universal bundle",
       "A: n / gcd(d, n); C_n, B_n (n even), D_n (n odd): 2; otherwise 1",
       [](const Flags& f, Json& in, std::ostream&) {
         auto sys = group_of(f, in);
         if (f.d) in["d"] = *f.d;
         return Outcome{{{"n_P", n_P(*sys, f.d)}}};
       }},
      {"spectral", "Spectral cover fiber of an SL(n) or Sp(2n) decomposition",
       "divisor sum d_i (lambda_i); Sp adds the involution p -> -p",
       [](const Flags& f, Json& in, std::ostream&) {
         const BundleDecomp v = decomp_of(f, in);
         if (v.group == GroupTag::SL) return Outcome{to_json(sl_spectral_fiber(v), false)};
         if (v.group == GroupTag::Sp) return Outcome{to_json(sp_spectral_fiber(v), true)};
         throw Error(ErrorCode::WrongSystemType,
                     "spectral covers are implemented for SL and Sp only, got " +
                         to_string(v.group));
       }},
      {"cover-index", "Degree [W : W_0] of the cover for a marked orbit vector",
       "size of the W-orbit of the vector (breadth-first enumeration)",
       [](const Flags& f, Json& in, std::ostream&) {
         auto sys = group_of(f, in);
         IntVector v;
         if (!f.vector.empty() == f.node.has_value())
           throw UsageError("give exactly one of --vector and --node");
         if (f.node) {
           in["node"] = *f.node;
           v = fundamental_coweight_multiple(*sys, *f.node - 1);
         } else {
           in["vector"] = f.vector;
           v = parse_int_vector(f.vector);
         }
         return Outcome{{{"vector", v}, {"cover_index", cover_index(*sys, v, default_orbit_bound())}}};
       }},
      {"verify", "Run the acceptance criteria suites",
       "oracle and property checks of every module",
       [](const Flags& f, Json& in, std::ostream& err) {
         in["seed"] = f.seed;
         in["samples"] = f.samples;
         bool all = true;
         Json rows = Json::array();
         run_all_criteria({f.seed, f.samples}, [&](const CriterionResult& r) {
           all = all && r.passed;
           err << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "  ("
               << r.seconds << " s): " << r.detail << "\n";
           rows.push_back({{"id", r.id},
                           {"title", r.title},
                           {"passed", r.passed},
                           {"seconds", r.seconds},
                           {"time_limit", r.time_limit},
                           {"detail", r.detail}});
         });
         return Outcome{{{"passed", all}, {"criteria", rows}}, all ? kOk : kVerifyFailed};
       }},
  };
  return table;
}

std::string cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  for (std::size_t pos = 0; (pos = s.find('|', pos)) != std::string::npos; pos += 2)
    s.replace(pos, 1, "\\|");
  return s;
}

bool is_table(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v)
    if (!row.is_object() || row.size() != v[0].size()) return false;
  return true;
}

void render_markdown(const std::string& name, const Json& envelope, std::ostream& out) {
  out << "## " << name << "\n\n";
  for (const auto& [k, v] : envelope["input"].items()) out << "- " << k << ": " << cell(v) << "\n";
  out << "\n";
  const Json& result = envelope.contains("error") ? envelope["error"] : envelope["result"];
  std::vector<std::pair<std::string, const Json*>> tables;
  std::vector<std::pair<std::string, const Json*>> fields;
  for (const auto& [k, v] : result.items()) (is_table(v) ? tables : fields).emplace_back(k, &v);
  if (!fields.empty()) {
    out << "| field | value |\n|---|---|\n";
    for (const auto& [k, v] : fields) out << "| " << k << " | " << cell(*v) << " |\n";
  }
  for (const auto& [k, rows] : tables) {
    out << "\n### " << k << "\n\n|";
    for (const auto& [col, _] : (*rows)[0].items()) out << " " << col << " |";
    out << "\n|";
    for (std::size_t i = 0; i < (*rows)[0].size(); ++i) out << "---|";
    out << "\n";
    for (const auto& row : *rows) {
      out << "|";
      for (const auto& [_, v] : row.items()) out << " " << cell(v) << " |";
      out << "\n";
    }
  }
  if (envelope.contains("provenance")) out << "\n_" << cell(envelope["provenance"]) << "_\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moduli of semistable principal bundles on an elliptic curve"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--group", flags.group, "Root system, e.g. E8, A4, D5");
  app.add_option("--mu", flags.mu, "Point of E (x) coroot lattice: \"a1,b1;a2,b2;...\"");
  app.add_option("--seed", flags.seed, "Seed for random sampling");
  app.add_flag("--markdown", flags.markdown, "Render the result as Markdown tables");

  std::map<std::string, const Command*> by_name;
  for (const auto& cmd : commands()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.description);
    sub->fallthrough();
    by_name[cmd.name] = &cmd;
    const std::string n = cmd.name;
    if (n == "canon") {
      sub->add_option("--compare", flags.compare, "Second point; report orbit equality");
      sub->add_flag("--heuristic", flags.heuristic, "Compare root-value fingerprints only");
    }
    if (n == "strata" || n == "parabolic" || n == "np")
      sub->add_option("--d", flags.d, n == "strata" ? "Isotropy order d >= 2" : "P_d for type A");
    if (n.rfind("classify-", 0) == 0 || n == "spectral")
      sub->add_option("--json", flags.json, "Decomposition as JSON, or @file");
    if (n == "cover-index") {
      sub->add_option("--vector", flags.vector, "Integer vector in coroot coordinates: \"1,2,3\"");
      sub->add_option("--node", flags.node, "Use the fundamental coweight at this Bourbaki node");
    }
    if (n == "verify")
      sub->add_option("--samples", flags.samples, "Random samples per type")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const Command& cmd = *by_name.at(name);
  Json envelope{{"command", name}, {"input", Json::object()}};
  int code = kOk;
  try {
    Outcome outcome = cmd.handler(flags, envelope["input"], err);
    envelope["result"] = std::move(outcome.result);
    envelope["provenance"] = cmd.provenance;
    code = outcome.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    envelope["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    code = kValidation;
  }
  if (flags.markdown)
    render_markdown(name, envelope, out);
  else
    out << envelope.dump(2) << "\n";
  return code;
}

}  // namespace ellimod::cli
