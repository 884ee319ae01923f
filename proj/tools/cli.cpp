#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "gmsrg/codes.hpp"
#include "gmsrg/distinguish.hpp"
#include "gmsrg/error.hpp"
#include "gmsrg/gf2geom.hpp"
#include "gmsrg/graph6.hpp"
#include "gmsrg/srg.hpp"
#include "gmsrg/switching.hpp"
#include "gmsrg/verify.hpp"

namespace gmsrg::cli {
namespace {

using nlohmann::json;

struct Options {
  int n = 0;
  std::string kind = "elliptic";
  int t = 0;
  std::string variant = "t";
  std::size_t seed_choice = 0;
  bool verify = false;
  bool code = false;
  bool cross_check = false;
  bool no_timings = false;
  std::string graph6;
  std::string out;
};

// A command either fills the report or throws; failed checks are collected
// by name.
struct Run {
  json report = json::object();
  std::vector<std::string> failed;

  void check(const std::string& name, bool passed) {
    report["checks"][name] = passed;
    if (!passed) failed.push_back(name);
  }

  template <class F>
  auto timed(const std::string& stage, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto finish = [&] {
      report["timings"][stage] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    if constexpr (std::is_void_v<std::invoke_result_t<F>>) {
      f();
      finish();
    } else {
      auto value = f();
      finish();
      return value;
    }
  }
};

json points_json(std::span<const Point> pts) {
  json a = json::array();
  for (auto p : pts) a.push_back(p.bits);
  return a;
}

json subspace_json(const Subspace& u) {
  return {{"projective_dimension", u.projective_dimension()},
          {"basis", points_json(u.basis())},
          {"points", points_json(u.points())}};
}

json params_json(const SrgParams& p) {
  json j = {{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
  if (p.spectrum) {
    j["spectrum"] = {{"r", p.spectrum->r}, {"s", p.spectrum->s},
                     {"f", p.spectrum->f}, {"g", p.spectrum->g}};
  } else {
    j["spectrum"] = nullptr;
  }
  return j;
}

json weights_json(const WeightDistribution& w) {
  json a = json::array();
  for (auto [weight, count] : w) a.push_back({weight, count});
  return a;
}

json code_json(const BinaryCode& code) {
  json j = {{"length", code.length()}, {"dimension", code.dim()}};
  if (code.dim() == 0) return j;
  const auto words = min_weight_codewords(code);
  j["min_weight"] = words.front().count();
  j["min_weight_words"] = words.size();
  if (code.dim() <= max_enumeration_dim) j["weight_distribution"] = weights_json(weight_distribution(code));
  return j;
}

void export_graph6(Run& run, const Graph& g, const std::string& path) {
  const std::string g6 = graph6::encode(g);
  const std::string labels = graph6::encode_labels(g);
  {
    std::ofstream f(path, std::ios::binary);
    f << g6 << '\n';
    std::ofstream l(path + ".labels", std::ios::binary);
    l << labels;
    if (!f || !l) throw Error(Errc::invalid_request, "cannot write " + path);
  }
  std::ifstream f(path, std::ios::binary);
  std::ifstream l(path + ".labels", std::ios::binary);
  std::stringstream g6_in, labels_in;
  g6_in << f.rdbuf();
  labels_in << l.rdbuf();
  const Graph back = graph6::decode_with_labels(g6_in.str(), labels_in.str());
  run.report["graph6"] = {{"file", path}, {"labels_file", path + ".labels"}, {"bytes", g6.size()}};
  run.check("graph6_round_trip", back == g);
}

json request_json(const std::string& command, const Options& o) {
  return {{"command", command}, {"n", o.n}, {"kind", o.kind}};
}

struct Switched {
  SwitchConfig config;
  std::vector<Point> S;
  std::vector<Point> T;
  Graph graph;
};

Switched make_switched(Run& run, const QuadraticForm& form, const Graph& gamma, const Options& o) {
  const SwitchVariant variant = parse_variant(o.variant);
  SwitchConfig config = run.timed("config", [&] { return make_config(form, o.t, variant, o.seed_choice); });
  auto S = build_S(config);
  auto T = T_formula(config);
  const auto s_idx = vertex_indices(gamma, S);
  Graph g = run.timed("switch", [&] { return gm_switch(gamma, s_idx); });
  json cfg = {{"alpha", subspace_json(config.alpha)}, {"pi", subspace_json(config.pi)}};
  if (config.pi2) cfg["pi_prime"] = subspace_json(*config.pi2);
  run.report["configuration"] = cfg;
  run.report["switching_set"] = {{"S", points_json(S)}, {"size_S", S.size()}, {"size_T", T.size()}};
  return {std::move(config), std::move(S), std::move(T), std::move(g)};
}

void cmd_construct(Run& run, const Options& o) {
  run.report["request"] = request_json("construct", o);
  const auto form = canonical_form(o.n, parse_kind(o.kind));
  const Graph gamma = run.timed("build", [&] { return build_gamma(form); });
  run.report["quadric"] = {{"points", form.quadric_size()}, {"expected_points", expected_quadric_size(o.n, form.kind())}};
  run.report["graph"] = {{"vertices", gamma.vertex_count()}, {"edges", gamma.edge_count()}};
  run.check("quadric_size", form.quadric_size() == expected_quadric_size(o.n, form.kind()));
  if (o.verify) {
    const SrgParams got = run.timed("verify", [&] { return verify_srg(gamma); });
    const SrgParams want = expected_params(o.n, form.kind());
    run.report["srg"] = params_json(got);
    run.report["expected_srg"] = params_json(want);
    run.check("srg_parameters", got == want);
  }
  if (o.code) {
    const BinaryCode code = run.timed("code", [&] { return code_from_graph(gamma); });
    run.report["code"] = code_json(code);
  }
  if (!o.graph6.empty()) export_graph6(run, gamma, o.graph6);
}

void cmd_switch(Run& run, const Options& o) {
  json req = request_json("switch", o);
  req["t"] = o.t;
  req["variant"] = o.variant;
  req["seed_choice"] = o.seed_choice;
  run.report["request"] = req;
  const auto form = canonical_form(o.n, parse_kind(o.kind));
  const Graph gamma = run.timed("build", [&] { return build_gamma(form); });
  const Switched sw = make_switched(run, form, gamma, o);
  const SwitchVariant variant = sw.config.variant();
  run.report["graph"] = {{"vertices", sw.graph.vertex_count()}, {"edges", sw.graph.edge_count()}};
  run.check("set_sizes", sw.S.size() == expected_S_size(o.t, variant) &&
                             sw.T.size() == expected_T_size(o.n, form.kind(), o.t, variant));
  if (o.verify) {
    run.timed("verify", [&] {
      validate_config(sw.config);
      const auto cert = validate_switching_set(gamma, vertex_indices(gamma, sw.S));
      run.report["switching_set"]["classes"] = {{"none", cert.none.size()},
                                                {"half", cert.half.size()},
                                                {"all", cert.all.size()},
                                                {"induced_degree", cert.induced_degree}};
      run.check("half_class_is_T", cert.half == vertex_indices(gamma, sw.T));
      const SrgParams base = verify_srg(gamma);
      const SrgParams got = verify_srg(sw.graph);
      run.report["srg"] = params_json(got);
      run.check("srg_parameters", got == base);
    });
  }
  if (o.code) {
    run.timed("code", [&] {
      const BinaryCode code = code_from_graph(sw.graph);
      run.report["code"] = code_json(code);
      const BitVec vS = characteristic_vector(sw.graph, sw.S);
      const BitVec vT = characteristic_vector(sw.graph, sw.T);
      const auto words = min_weight_codewords(code);
      const bool unique = words.size() == 1 && words.front() == vS;
      run.report["code"]["min_word_is_vS"] = unique;
      run.report["code"]["vS_in_code"] = code.contains(vS);
      run.report["code"]["vT_in_code"] = code.contains(vT);
      run.report["code"]["vT_in_gamma_code"] = code_from_graph(gamma).contains(vT);
      run.check("code_dimension", code.dim() == o.n + 3);
      run.check("min_weight", words.front().count() == expected_S_size(o.t, variant));
    });
  }
  if (!o.graph6.empty()) export_graph6(run, sw.graph, o.graph6);
}

void cmd_code(Run& run, const Options& o) {
  json req = request_json("code", o);
  if (o.t > 0) {
    req["t"] = o.t;
    req["variant"] = o.variant;
    req["seed_choice"] = o.seed_choice;
  }
  run.report["request"] = req;
  const auto form = canonical_form(o.n, parse_kind(o.kind));
  const Graph gamma = run.timed("build", [&] { return build_gamma(form); });
  const Graph g = o.t > 0 ? make_switched(run, form, gamma, o).graph : gamma;
  const BinaryCode code = run.timed("code", [&] { return code_from_graph(g); });
  run.report["code"] = run.timed("enumerate", [&] { return code_json(code); });
}

void cmd_classify(Run& run, const Options& o) {
  run.report["request"] = request_json("classify-family", o);
  ClassifyOptions opts;
  opts.cross_check_all = o.cross_check;
  const FamilyReport fam = run.timed("classify", [&] { return classify_family(o.n, parse_kind(o.kind), opts); });
  json members = json::array();
  for (const auto& m : fam.members) {
    members.push_back({{"name", m.name},
                       {"two_rank", m.sig.two_rank},
                       {"min_weight", m.sig.min_weight},
                       {"min_words", describe_profiles(m.sig)}});
  }
  json pairs = json::array();
  for (const auto& ev : fam.pairs) {
    json p = {{"a", fam.members[ev.a].name},
              {"b", fam.members[ev.b].name},
              {"separated_by", std::string(to_string(ev.separated_by))},
              {"detail", ev.invariant_detail},
              {"distinct", std::string(to_string(ev.distinct))}};
    if (ev.tester_isomorphic) p["tester_isomorphic"] = *ev.tester_isomorphic;
    if (ev.tester_indeterminate) p["tester_indeterminate"] = true;
    pairs.push_back(std::move(p));
  }
  run.report["members"] = members;
  run.report["pairs"] = pairs;
  run.report["distinct_graphs"] = fam.distinct_count;
  run.report["switched_graphs"] = fam.switched_count;
  run.report["stated_switched_graphs"] = fam.claimed_switched;
  run.report["stated_count_agrees"] = fam.claim_matches;
  bool tester_ok = true;
  for (const auto& ev : fam.pairs) {
    if (ev.tester_isomorphic && *ev.tester_isomorphic && ev.separated_by != Separation::none) tester_ok = false;
  }
  run.check("invariants_agree_with_tester", tester_ok);
}

void cmd_verify_all(Run& run, const Options& o) {
  run.report["request"] = {{"command", "verify-all"}, {"n", o.n}};
  const auto results = run.timed("verify_all", [&] { return verify_all(o.n); });
  json checks = json::array();
  for (const auto& r : results) {
    checks.push_back({{"id", r.id},
                      {"title", r.title},
                      {"applicable", r.applicable},
                      {"passed", r.passed},
                      {"notes", r.notes}});
    if (r.applicable && !r.passed) run.failed.push_back("criterion " + r.id);
  }
  run.report["criteria"] = checks;
}

void emit(const Run& run, const Options& o, std::ostream& out) {
  json report = run.report;
  if (o.no_timings) report.erase("timings");
  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    f << text;
    if (!f) throw Error(Errc::invalid_request, "cannot write " + o.out);
  }
}

bool is_usage(Errc c) {
  return c == Errc::invalid_dimension || c == Errc::kind_parity || c == Errc::invalid_request ||
         c == Errc::unsupported_quadric;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadric strongly regular graphs and their Godsil-McKay switchings", "gmsrg"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_kind) {
    sub->add_option("--n", o.n, "projective dimension")->required();
    if (with_kind) {
      sub->add_option("--kind", o.kind, "quadric type")
          ->required()
          ->check(CLI::IsMember({"elliptic", "hyperbolic"}));
    }
    sub->add_option("--out", o.out, "write the report to a file");
    sub->add_flag("--no-timings", o.no_timings, "omit the timings block");
  };
  auto switching = [&](CLI::App* sub, bool required) {
    auto* t = sub->add_option("--t", o.t, "dimension of alpha")->check(CLI::PositiveNumber);
    if (required) t->required();
    sub->add_option("--variant", o.variant, "t or tt")->check(CLI::IsMember({"t", "tt"}));
    sub->add_option("--seed-choice", o.seed_choice, "index of the (alpha, Pi[, Pi']) configuration in lex order");
  };

  auto* construct = app.add_subcommand("construct", "build Gamma_Q");
  common(construct, true);
  construct->add_flag("--verify", o.verify, "check the strongly regular parameters");
  construct->add_flag("--code", o.code, "report the binary code");
  construct->add_option("--graph6", o.graph6, "export graph6 plus a .labels sidecar");

  auto* sw = app.add_subcommand("switch", "build a switched graph");
  common(sw, true);
  switching(sw, true);
  sw->add_flag("--verify", o.verify, "check the switching set and the parameters");
  sw->add_flag("--code", o.code, "analyze the binary code");
  sw->add_option("--graph6", o.graph6, "export graph6 plus a .labels sidecar");

  auto* code = app.add_subcommand("code", "binary code of Gamma_Q or of a switched graph");
  common(code, true);
  switching(code, false);

  auto* classify = app.add_subcommand("classify-family", "count non-isomorphic graphs in a family");
  common(classify, true);
  classify->add_flag("--cross-check", o.cross_check, "run the isomorphism tester on every pair");

  auto* verify = app.add_subcommand("verify-all", "run every acceptance check for one n");
  common(verify, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e, out, err);
    return code_ == 0 ? ok : usage_error;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  Run r;
  try {
    if (chosen == construct) cmd_construct(r, o);
    if (chosen == sw) cmd_switch(r, o);
    if (chosen == code) cmd_code(r, o);
    if (chosen == classify) cmd_classify(r, o);
    if (chosen == verify) cmd_verify_all(r, o);
    emit(r, o, out);
  } catch (const Error& e) {
    if (e.code() == Errc::not_found && o.variant == "tt" && name != "verify-all") {
      err << name << ": no Π′ exists (" << e.what() << ")\n";
      return check_failed;
    }
    err << name << ": " << to_string(e.code()) << ": " << e.what() << '\n';
    return is_usage(e.code()) ? usage_error : check_failed;
  }
  for (const auto& f : r.failed) err << name << ": failed check: " << f << '\n';
  return r.failed.empty() ? ok : check_failed;
}

}  // namespace gmsrg::cli
