// Command-line front end. One subcommand per library query; see README.md.

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "treegroups/construct.hpp"
#include "treegroups/errors.hpp"
#include "treegroups/expr.hpp"
#include "treegroups/invariant.hpp"
#include "treegroups/quotient.hpp"

using namespace tg;
using nlohmann::json;

namespace {

struct Options {
  std::string omega = "(012)";
  std::optional<std::string> eta;
  std::optional<std::size_t> depth;
  std::optional<std::string> vertex;
  std::optional<std::size_t> max_len;
  std::optional<int> length;
  std::string group = "L";
  std::optional<std::string> gens;
  bool json = false;
  std::vector<std::string> args;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text output plus the JSON "result" value.
struct Output {
  std::string text;
  json value;
};

std::string show(const Word& w) { return w.empty() ? "e" : w.to_string(); }

std::size_t need_depth(const Options& o) {
  if (!o.depth) throw UsageError("this command requires --depth");
  return *o.depth;
}

VertexPath need_vertex(const Options& o) {
  if (!o.vertex) throw UsageError("this command requires --vertex");
  return VertexPath::parse(*o.vertex);
}

void need_args(const Options& o, std::size_t n, const char* what) {
  if (o.args.size() != n) throw UsageError(std::string("expected ") + what);
}

OmegaSeq omega_of(const Options& o) { return OmegaSeq::parse(o.omega); }

OmegaSeq eta_of(const Options& o) {
  if (!o.eta) throw UsageError("this command requires --eta");
  return OmegaSeq::parse(*o.eta);
}

std::vector<Word> generators_of(const Options& o, const OmegaSeq& omega) {
  if (o.gens) {
    std::vector<Word> out;
    std::stringstream ss(*o.gens);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_expression(item, omega));
    return out;
  }
  if (o.group == "G") return g_generators(omega);
  if (o.group == "L") return l_generators(omega);
  throw UsageError("--group must be G or L");
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

Output cmd_reduce(const Options& o) {
  need_args(o, 1, "one word");
  Word w = parse_expression(o.args[0], omega_of(o));
  return {show(w), w.to_string()};
}

Output cmd_act(const Options& o) {
  need_args(o, 1, "one word");
  Word w = parse_expression(o.args[0], omega_of(o));
  VertexPath v = act(w, need_vertex(o));
  return {v.to_string(), v.to_string()};
}

Output cmd_sections(const Options& o) {
  need_args(o, 1, "one word");
  Word w = parse_expression(o.args[0], omega_of(o));
  if (o.vertex) {
    Word s = section_at(w, VertexPath::parse(*o.vertex));
    return {show(s), s.to_string()};
  }
  auto [s0, s1] = sections(w);
  return {show(s0) + " " + show(s1), json::array({s0.to_string(), s1.to_string()})};
}

Output cmd_portrait(const Options& o) {
  need_args(o, 1, "one word");
  Word w = parse_expression(o.args[0], omega_of(o));
  Portrait p = portrait(w, need_depth(o));
  std::string text;
  for (std::size_t j = 0; j <= p.depth(); ++j) {
    if (j) text.push_back('\n');
    for (auto b : p.level(j)) text.push_back(static_cast<char>('0' + b));
  }
  return {text, p.to_json()};
}

Output cmd_trivial(const Options& o) {
  need_args(o, 1, "one word");
  Word w = parse_expression(o.args[0], omega_of(o));
  bool t = o.depth ? is_trivial_to_depth(w, *o.depth) : is_trivial(w);
  return {bool_text(t), t};
}

Output cmd_equal(const Options& o) {
  need_args(o, 2, "two words");
  OmegaSeq omega = omega_of(o);
  Word lhs = parse_expression(o.args[0], omega);
  Word rhs = parse_expression(o.args[1], o.eta ? OmegaSeq::parse(*o.eta) : omega);
  bool e = equal_auto(lhs, rhs);
  return {bool_text(e), e};
}

Output cmd_order(const Options& o) {
  need_args(o, 1, "one word");
  Word w = parse_expression(o.args[0], omega_of(o));
  auto n = order(w);
  return {std::to_string(n), n};
}

Output cmd_metric(const Options& o) {
  need_args(o, 2, "two words");
  OmegaSeq omega = omega_of(o);
  Distance d = metric_distance(parse_expression(o.args[0], omega), parse_expression(o.args[1], omega), o.depth);
  json v = {{"zero", d.zero}, {"exponent", d.exponent}, {"upper_bound", d.upper_bound}, {"text", d.to_string()}};
  return {d.to_string(), v};
}

Output cmd_inl(const Options& o) {
  need_args(o, 1, "one word");
  bool b = in_L(parse_expression(o.args[0], omega_of(o)));
  return {bool_text(b), b};
}

Output cmd_parity(const Options& o) {
  need_args(o, 1, "one word");
  Word w = parse_expression(o.args[0], omega_of(o));
  auto p = parity_hom(w, need_depth(o));
  return {p.to_string(), p.to_string()};
}

json triple_json(const std::vector<ParityVector>& image) {
  json out = json::array();
  for (const auto& v : image) out.push_back(v.to_string());
  return out;
}

Output cmd_triple(const Options& o) {
  need_args(o, 0, "no positional arguments");
  InvariantTriple t = invariant_triple(omega_of(o), need_depth(o));
  return {t.to_string(), triple_json({t.vectors.begin(), t.vectors.end()})};
}

Output cmd_reconstruct(const Options& o) {
  need_args(o, 3, "three bit strings");
  auto t = InvariantTriple::from(
      {ParityVector::parse(o.args[0]), ParityVector::parse(o.args[1]), ParityVector::parse(o.args[2])});
  auto [x, y] = reconstruct_omega(t);
  return {x + " " + y, json::array({x, y})};
}

Output cmd_distinguish(const Options& o) {
  need_args(o, 0, "no positional arguments");
  OmegaSeq omega = omega_of(o);
  OmegaSeq eta = eta_of(o);
  const std::size_t depth = need_depth(o);
  auto show_image = [](const std::vector<ParityVector>& image) {
    std::string s = "{";
    for (std::size_t i = 0; i < image.size(); ++i) s += (i ? ", " : "") + image[i].to_string();
    return s + "}";
  };
  auto a = parity_image(omega, depth);
  auto b = parity_image(eta, depth);
  Verdict v = distinguish(omega, eta, depth);
  std::string text = "omega " + omega.to_string() + ": " + show_image(a) + "\neta " + eta.to_string() + ": " +
                     show_image(b) + "\n" + v.to_string();
  return {text, {{"omega", triple_json(a)}, {"eta", triple_json(b)}, {"verdict", v.to_string()}}};
}

Output cmd_orbit(const Options& o) {
  need_args(o, 0, "no positional arguments");
  OmegaSeq omega = omega_of(o);
  VertexPath v = need_vertex(o);
  if (v.level() == 0) throw UsageError("--vertex must be nonempty");
  auto q = build_quotient(generators_of(o, omega), static_cast<unsigned>(v.level()));
  std::string text;
  json arr = json::array();
  for (const auto& x : orbit(q, v)) {
    if (!text.empty()) text.push_back(' ');
    text += x.to_string();
    arr.push_back(x.to_string());
  }
  return {text, arr};
}

Output cmd_transitive(const Options& o) {
  need_args(o, 0, "no positional arguments");
  OmegaSeq omega = omega_of(o);
  bool t = is_level_transitive(generators_of(o, omega), static_cast<unsigned>(need_depth(o)));
  return {bool_text(t), t};
}

Output cmd_qorder(const Options& o) {
  need_args(o, 0, "no positional arguments");
  OmegaSeq omega = omega_of(o);
  auto q = build_quotient(generators_of(o, omega), static_cast<unsigned>(need_depth(o)));
  const std::string n = q.order().str();
  json v = q.to_json();
  v["order"] = n;
  return {n, v};
}

Output cmd_index(const Options& o) {
  need_args(o, 0, "no positional arguments");
  unsigned i = index_in_quotient(omega_of(o), static_cast<unsigned>(need_depth(o)));
  return {std::to_string(i), i};
}

LWord target_of(const Options& o, const OmegaSeq& omega, std::size_t level) {
  return to_lgen(parse_expression(o.args[0], omega, level));
}

Output cmd_realize(const Options& o) {
  need_args(o, 1, "one target word in L over the shifted sequence");
  OmegaSeq omega = omega_of(o);
  VertexPath u = need_vertex(o);
  LWord g = target_of(o, omega, u.level());
  Word h = section_realizer(omega, u, g);
  return {show(h), {{"word", h.to_string()}, {"target", g.to_string()}}};
}

Output cmd_realize_sq(const Options& o) {
  need_args(o, 1, "one target word in L over the shifted sequence");
  OmegaSeq omega = omega_of(o);
  VertexPath u = need_vertex(o);
  LWord g = target_of(o, omega, u.level());
  SquaresCert c = square_realizer(omega, u, g);
  Word h = flatten(c, omega);
  return {show(h) + "\n" + c.to_json().dump(), {{"word", h.to_string()}, {"certificate", c.to_json()}}};
}

Output cmd_mapper(const Options& o) {
  need_args(o, 2, "two vertices");
  Word w = transitive_mapper(omega_of(o), VertexPath::parse(o.args[0]), VertexPath::parse(o.args[1]));
  return {show(w), w.to_string()};
}

Output cmd_rist_search(const Options& o) {
  need_args(o, 0, "no positional arguments");
  RistWitness r = rist_search(omega_of(o), need_vertex(o), o.max_len.value_or(kDefaultRistMaxLen));
  return {show(r.word),
          {{"word", r.word.to_string()}, {"lword", r.lword.to_string()}, {"vertex", r.vertex.to_string()},
           {"depth", r.depth}}};
}

Output cmd_classes(const Options& o) {
  need_args(o, 0, "no positional arguments");
  if (!o.length) throw UsageError("classes requires --length");
  auto n = count_pi_classes(*o.length);
  return {std::to_string(n), n};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the groups G_ω and L_ω"};
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, std::pair<std::string, std::function<Output(const Options&)>>> commands = {
      {"reduce", {"Reduce a word", cmd_reduce}},
      {"act", {"Image of --vertex", cmd_act}},
      {"sections", {"Sections at 0 and 1, or at --vertex", cmd_sections}},
      {"portrait", {"Portrait to --depth", cmd_portrait}},
      {"trivial", {"Word problem (exact, or to --depth)", cmd_trivial}},
      {"equal", {"Equality of two words (second over --eta if given)", cmd_equal}},
      {"order", {"Order of a word", cmd_order}},
      {"metric", {"Tree distance between two words", cmd_metric}},
      {"inl", {"Membership in L", cmd_inl}},
      {"parity", {"Level parity vector to --depth", cmd_parity}},
      {"triple", {"Invariant triple at --depth", cmd_triple}},
      {"reconstruct", {"Recover the sequence from a triple", cmd_reconstruct}},
      {"distinguish", {"Compare --omega and --eta at --depth", cmd_distinguish}},
      {"orbit", {"Orbit of --vertex", cmd_orbit}},
      {"transitive", {"Level transitivity at --depth", cmd_transitive}},
      {"qorder", {"Order of the level --depth quotient", cmd_qorder}},
      {"index", {"Index of L in G modulo level --depth", cmd_index}},
      {"realize", {"Level-fixing element with a given section at --vertex", cmd_realize}},
      {"realize-sq", {"Product-of-squares element with a given section at --vertex", cmd_realize_sq}},
      {"mapper", {"Element of L mapping one vertex to another", cmd_mapper}},
      {"rist-search", {"Search for a rigid element at --vertex", cmd_rist_search}},
      {"classes", {"Number of sequences of --length up to swapping 1 and 2", cmd_classes}},
  };

  app.add_option("--omega", o.omega, "Sequence PREFIX(PERIOD)")->capture_default_str();
  app.add_option("--eta", o.eta, "Second sequence");
  app.add_option("--depth", o.depth, "Depth or level");
  app.add_option("--vertex", o.vertex, "Vertex bit string");
  app.add_option("--max-len", o.max_len, "Search length bound");
  app.add_option("--length", o.length, "Prefix length for classes");
  app.add_option("--group", o.group, "Generating set G or L")->capture_default_str();
  app.add_option("--gens", o.gens, "Comma separated generating words (overrides --group)");
  app.add_flag("--json", o.json, "Emit one JSON document");

  std::string chosen;
  for (const auto& [name, entry] : commands) {
    auto* sub = app.add_subcommand(name, entry.first);
    sub->fallthrough();
    sub->add_option("args", o.args, "Positional arguments");
    sub->callback([&chosen, name = name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    Output out = commands.at(chosen).second(o);
    if (o.json) {
      std::cout << json{{"command", chosen}, {"result", out.value}}.dump() << "\n";
    } else {
      std::cout << out.text << "\n";
    }
    return 0;
  } catch (const UsageError& e) {
    if (o.json) std::cout << json{{"command", chosen}, {"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    else std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (o.json) {
      std::cout << json{{"command", chosen}, {"error", std::string(kind_name(e.kind()))}, {"message", e.what()}}.dump()
                << "\n";
    } else {
      std::cerr << kind_name(e.kind()) << " error: " << e.what() << "\n";
    }
    return 1;
  }
}
