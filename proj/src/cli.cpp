#include "treearr/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "treearr/arrangement.hpp"
#include "treearr/coalg.hpp"
#include "treearr/lattice.hpp"
#include "treearr/treecore.hpp"
#include "treearr/verify.hpp"

namespace treearr {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kGrammar =
    "grammar:\n"
    "  forest := tree { ';' tree }\n"
    "  tree   := label [ '(' tree { ',' tree } ')' ]\n"
    "  label  := [A-Za-z0-9]+\n"
    "example: \"a(b(c),d)\" or \"a(b);c\"";

// Thrown for argument problems detected after CLI parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string format = "text";
  long grid_offset = 1;
  std::size_t max_n = 4;
  std::size_t k = 2;
  std::string nodes;
  std::string word;
  std::string order;
  std::string strategy = "auto";
};

struct Context {
  const Options& opt;
  std::ostream& out;
  bool json() const { return opt.format == "json"; }
};

Json with_schema(const std::string& command, Json body) {
  Json j;
  j["schema"] = "treearr." + command + "/1";
  for (auto& [key, value] : body.items()) j[key] = value;
  return j;
}

int emit_certificate(const Context& ctx, const std::string& command, const Certificate& cert) {
  if (ctx.json()) {
    ctx.out << with_schema(command, cert.to_json()).dump(2) << '\n';
  } else {
    ctx.out << cert.to_text() << '\n';
  }
  return cert.pass ? 0 : 1;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<Vertex> parse_vertices(const Forest& f, const std::string& text) {
  std::vector<Vertex> out;
  for (const auto& label : split(text, ',')) {
    if (!f.labels()->contains(label)) throw UsageError("unknown label '" + label + "'");
    out.push_back(f.vertex(label));
  }
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? sep : "") + items[k];
  return out;
}

// ------------------------------------------------------------ commands

int cmd_exponents(const Context& ctx) {
  const auto t = parse_tree(ctx.opt.input);
  const auto e = exponents(t);
  if (ctx.json()) {
    ctx.out << with_schema("exponents", {{"tree", t.to_string()}, {"exponents", e}}).dump(2) << '\n';
    return 0;
  }
  std::vector<std::string> items;
  for (auto d : e) items.push_back(std::to_string(d));
  ctx.out << join(items, " ") << '\n';
  return 0;
}

int cmd_qform(const Context& ctx) {
  const auto arr = build_arrangement(parse_tree(ctx.opt.input));
  const auto q = defining_form(arr).to_string(arr.namer());
  if (ctx.json()) {
    ctx.out << with_schema("qform", {{"tree", arr.tree.to_string()},
                                     {"hyperplanes", arr.hyperplanes.size()},
                                     {"qform", q}})
                   .dump(2)
            << '\n';
  } else {
    ctx.out << q << '\n';
  }
  return 0;
}

int cmd_saito(const Context& ctx) {
  return emit_certificate(ctx, "saito-check",
                          saito_check(build_arrangement(parse_tree(ctx.opt.input)), ctx.opt.grid_offset));
}

int cmd_log(const Context& ctx) {
  const auto arr = build_arrangement(parse_tree(ctx.opt.input));
  Certificate cert{"theta_i and omega_i are logarithmic for every vertex", true, Json::object()};
  Json theta_fail = Json::array();
  Json omega_fail = Json::array();
  for (Vertex i = 0; i < static_cast<Vertex>(arr.tree.size()); ++i) {
    if (!is_logarithmic(arr, theta(arr, i))) theta_fail.push_back(arr.tree.label(i));
    if (!omega_is_logarithmic(arr, i)) omega_fail.push_back(arr.tree.label(i));
  }
  cert.pass = theta_fail.empty() && omega_fail.empty();
  cert.witness["tree"] = arr.tree.to_string();
  cert.witness["vertices"] = arr.tree.size();
  cert.witness["theta_failures"] = theta_fail;
  cert.witness["omega_failures"] = omega_fail;
  return emit_certificate(ctx, "log-check", cert);
}

int cmd_duality(const Context& ctx) {
  IdentityStrategy s = IdentityStrategy::Automatic;
  if (ctx.opt.strategy == "symbolic") s = IdentityStrategy::Symbolic;
  if (ctx.opt.strategy == "grid") s = IdentityStrategy::Grid;
  return emit_certificate(
      ctx, "duality-check",
      duality_check(build_arrangement(parse_tree(ctx.opt.input)), s, ctx.opt.grid_offset));
}

int cmd_lattice(const Context& ctx) {
  const auto lat = build_lattice(parse_tree(ctx.opt.input));
  if (ctx.opt.format == "dot") {
    ctx.out << hasse_dot(lat);
  } else if (ctx.json()) {
    ctx.out << lattice_json(lat).dump(2) << '\n';
  } else {
    const auto mu = mobius(lat);
    for (std::size_t k = 0; k < lat.size(); ++k) {
      ctx.out << "rank " << lat.rank()[k] << "  mu " << mu[k].get_str() << "  "
              << lat.elements()[k].to_string() << '\n';
    }
    ctx.out << lat.size() << " elements, " << lat.hasse().size() << " cover relations\n";
  }
  return 0;
}

int cmd_charpoly(const Context& ctx) {
  const auto t = parse_tree(ctx.opt.input);
  const auto product = char_poly_product(t);
  const auto via_mobius = char_poly_mobius(build_lattice(t));
  const bool agree = product == via_mobius;
  if (ctx.json()) {
    ctx.out << with_schema("charpoly", {{"tree", t.to_string()},
                                        {"product", product.to_string()},
                                        {"mobius", via_mobius.to_string()},
                                        {"agree", agree}})
                   .dump(2)
            << '\n';
  } else {
    ctx.out << product.to_string() << '\n';
    if (!agree) ctx.out << "mobius sum differs: " << via_mobius.to_string() << '\n';
  }
  return agree ? 0 : 1;
}

int cmd_chambers(const Context& ctx) {
  const auto t = parse_tree(ctx.opt.input);
  const Integer chambers = chamber_count(t);
  if (ctx.json()) {
    const auto acyclic = count_acyclic_orientations(comparability_graph(t));
    ctx.out << with_schema("chambers", {{"tree", t.to_string()},
                                        {"chambers", chambers.get_str()},
                                        {"acyclic_orientations", acyclic}})
                   .dump(2)
            << '\n';
  } else {
    ctx.out << chambers.get_str() << '\n';
  }
  return 0;
}

int cmd_cardpoly(const Context& ctx) {
  const auto t = parse_tree(ctx.opt.input);
  const auto lat = build_lattice(t);
  const auto direct = cardinality_poly(lat);
  const bool agree = direct == cardinality_poly_recursive(t);
  if (ctx.json()) {
    ctx.out << with_schema("cardpoly", {{"tree", t.to_string()},
                                        {"poly", direct.to_string()},
                                        {"value_at_1_1", direct.evaluate(1, 1).get_str()},
                                        {"recursion_agrees", agree}})
                   .dump(2)
            << '\n';
  } else {
    ctx.out << direct.to_string() << '\n';
    if (!agree) ctx.out << "recursion disagrees\n";
  }
  return agree ? 0 : 1;
}

int cmd_coproduct(const Context& ctx) {
  const auto f = parse_forest(ctx.opt.input);
  if (ctx.opt.k == 0) throw UsageError("--k must be at least 1");
  const auto delta = iterated_coproduct(CoalgebraElement(f), ctx.opt.k);
  if (ctx.json()) {
    Json body = to_json(delta);
    body["forest"] = f.to_string();
    body["k"] = ctx.opt.k;
    ctx.out << with_schema("coproduct", body).dump(2) << '\n';
  } else {
    ctx.out << to_string(delta) << '\n';
  }
  return 0;
}

int cmd_gamma(const Context& ctx) {
  const auto f = parse_forest(ctx.opt.input);
  auto nodes = parse_vertices(f, ctx.opt.nodes);
  std::sort(nodes.begin(), nodes.end());
  const auto all = f.nodes();
  if (!std::includes(all.begin(), all.end(), nodes.begin(), nodes.end())) {
    throw UsageError("--nodes must be nodes (non-roots) of " + f.to_string());
  }
  std::vector<std::string> items;
  for (const auto& g : gamma(f, nodes)) items.push_back(g.to_string());
  if (ctx.json()) {
    ctx.out << with_schema("gamma", {{"forest", f.to_string()}, {"forests", items}}).dump(2) << '\n';
  } else {
    for (const auto& s : items) ctx.out << s << '\n';
  }
  return 0;
}

// The positional argument supplies the label set, e.g. "a;b;c".
AlgebraWord word_from(const Context& ctx) {
  const auto f = parse_forest(ctx.opt.input);
  return parse_word(ctx.opt.word, f.labels());
}

int cmd_reduce(const Context& ctx) {
  const auto w = word_from(ctx);
  const auto nf = algebra_reduce(w);
  const std::string rendered =
      nf.is_zero() ? "0" : std::string(nf.sign > 0 ? "+" : "-") + "m[" + nf.forest->to_string() + "]";
  if (ctx.json()) {
    Json body{{"word", to_string(w)}, {"sign", nf.sign}};
    body["forest"] = nf.is_zero() ? Json(nullptr) : Json(nf.forest->to_string());
    ctx.out << with_schema("algebra-reduce", body).dump(2) << '\n';
  } else {
    ctx.out << rendered << '\n';
  }
  return 0;
}

int cmd_rho(const Context& ctx) {
  const auto w = word_from(ctx);
  const auto image = rho(w);
  if (ctx.json()) {
    Json body = to_json(image);
    body["word"] = to_string(w);
    ctx.out << with_schema("rho", body).dump(2) << '\n';
  } else {
    ctx.out << to_string(image) << '\n';
  }
  return 0;
}

int cmd_iso(const Context& ctx) {
  const auto f = parse_forest(ctx.opt.input);
  return emit_certificate(ctx, "iso-check", iso_check(f.labels()->labels()));
}

int cmd_chordal(const Context& ctx) {
  const auto t = parse_tree(ctx.opt.input);
  const auto g = comparability_graph(t);
  Certificate cert;
  cert.witness["tree"] = t.to_string();
  cert.witness["edges"] = g.edges.size();
  if (!ctx.opt.order.empty()) {
    const auto order = parse_vertices(t, ctx.opt.order);
    if (order.size() != t.size()) throw UsageError("--order must list every label once");
    cert.claim = "the given order is a perfect elimination ordering";
    cert.pass = check_chordal_peo(g, order);
    cert.witness["order"] = ctx.opt.order;
  } else {
    cert.claim = "every linear extension is a perfect elimination ordering";
    cert.pass = true;
    std::size_t count = 0;
    for_each_linear_extension(t, [&](const std::vector<Vertex>& order) {
      ++count;
      if (cert.pass && !check_chordal_peo(g, order)) {
        cert.pass = false;
        std::vector<std::string> labels;
        for (Vertex v : order) labels.push_back(t.label(v));
        cert.witness["counterexample"] = join(labels, ",");
      }
    });
    cert.witness["linear_extensions"] = count;
  }
  return emit_certificate(ctx, "chordal-check", cert);
}

int cmd_relations(const Context& ctx) {
  return emit_certificate(ctx, "relations-check",
                          relation_span_check(build_arrangement(parse_tree(ctx.opt.input))));
}

int cmd_sweep(const Context& ctx) {
  const auto report = sweep(ctx.opt.max_n, ctx.opt.grid_offset);
  if (ctx.json()) {
    Json props = Json::array();
    for (const auto& p : report.properties) {
      props.push_back({{"name", p.name},
                       {"max_n", p.max_n},
                       {"cases", p.cases},
                       {"status", p.pass ? "pass" : "fail"},
                       {"counterexample", p.counterexample}});
    }
    ctx.out << with_schema("sweep", {{"max_n", ctx.opt.max_n},
                                     {"tree_counts", report.tree_counts},
                                     {"forest_counts", report.forest_counts},
                                     {"properties", props}})
                   .dump(2)
            << '\n';
  } else {
    ctx.out << report.to_text();
  }
  return report.pass() ? 0 : 1;
}

struct Command {
  const char* name;
  const char* help;
  int (*run)(const Context&);
};

const Command kCommands[] = {
    {"exponents", "Depths of the vertices, i.e. the exponents of the arrangement", cmd_exponents},
    {"qform", "Defining polynomial of the arrangement", cmd_qform},
    {"saito-check", "Freeness certificate via the Saito determinant", cmd_saito},
    {"log-check", "Check that every theta_i and omega_i is logarithmic", cmd_log},
    {"duality-check", "Check <omega_i, theta_j> = delta_ij", cmd_duality},
    {"lattice", "Intersection lattice as forests (text, json or dot)", cmd_lattice},
    {"charpoly", "Characteristic polynomial", cmd_charpoly},
    {"chambers", "Number of chambers", cmd_chambers},
    {"cardpoly", "Cardinality polynomial C(y,z)", cmd_cardpoly},
    {"coproduct", "Iterated coproduct of a forest", cmd_coproduct},
    {"gamma", "Subforests with a given node set", cmd_gamma},
    {"algebra-reduce", "Normal form of a word in the Omega generators", cmd_reduce},
    {"rho", "Image of a word in the dual algebra", cmd_rho},
    {"iso-check", "Check the monomial-to-dual transition matrix is unimodular", cmd_iso},
    {"chordal-check", "Check perfect elimination orderings of the comparability graph",
     cmd_chordal},
    {"relations-check", "Check elementary relations span the relation space", cmd_relations},
    {"sweep", "Exhaustive property sweep over all small trees and forests", cmd_sweep},
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact computations on rooted-tree arrangements, their lattices and forest coalgebras",
               "treearr"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--grid-offset", opt.grid_offset, "Base of the identity-testing grid");
  app.add_option("--max-n", opt.max_n, "Size bound for sweep")->check(CLI::Range(1, 6));

  std::map<CLI::App*, const Command*> dispatch;
  for (const auto& c : kCommands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    dispatch[sub] = &c;
    const std::string name = c.name;
    if (name == "sweep") continue;
    const bool labels_only = name == "algebra-reduce" || name == "rho" || name == "iso-check";
    sub->add_option("input", opt.input, labels_only ? "Label set as a forest, e.g. \"a;b;c\""
                                                    : "Tree or forest, e.g. \"a(b(c),d)\"")
        ->required();
    if (name == "coproduct") sub->add_option("--k", opt.k, "Number of tensor slots");
    if (name == "gamma") sub->add_option("--nodes", opt.nodes, "Comma-separated labels")->required();
    if (name == "algebra-reduce" || name == "rho") {
      sub->add_option("--word", opt.word, "Generators, e.g. \"a-b,b-c\" for Omega_ab Omega_bc");
    }
    if (name == "chordal-check") sub->add_option("--order", opt.order, "Comma-separated labels");
    if (name == "duality-check") {
      sub->add_option("--strategy", opt.strategy, "Identity test")
          ->check(CLI::IsMember({"auto", "symbolic", "grid"}));
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help() << '\n' << kGrammar << '\n';
    return 2;
  }

  const Command* command = nullptr;
  for (auto* sub : app.get_subcommands()) command = dispatch.at(sub);
  if (opt.format == "dot" && std::string(command->name) != "lattice") {
    err << "usage error: --format dot is only available for the lattice subcommand;"
           " use text or json here\n";
    return 2;
  }

  const Context ctx{opt, out};
  try {
    return command->run(ctx);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    if (e.position() <= opt.input.size()) {
      err << "  " << opt.input << "\n  " << std::string(e.position(), ' ') << "^\n";
    }
    err << kGrammar << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace treearr
