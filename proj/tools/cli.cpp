#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "basilica/acceptance.hpp"
#include "basilica/algebra.hpp"
#include "basilica/config.hpp"
#include "basilica/dynamics.hpp"
#include "basilica/error.hpp"
#include "basilica/parse.hpp"
#include "basilica/relation.hpp"
#include "basilica/schreier.hpp"
#include "basilica/spectral.hpp"
#include "basilica/wreath.hpp"

namespace basilica::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Artifact {
  std::string file;
  std::string kind;  // json, csv or dot
  std::string content;
  bool absolute = false;  // file is a user path, not relative to output_dir
};

struct Outcome {
  json result = json::object();
  std::vector<Artifact> artifacts;
  json timings = json::object();
  bool ok = true;
};

Word word_arg(const std::string& text) { return parse_word(text, algebra::named_elements()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw InputError("cannot write '" + path.string() + "'");
}

void require_level(unsigned level, const RunConfig& config, const char* cap) {
  if (level > config.cap(cap))
    throw ResourceError("level " + std::to_string(level) + " exceeds the configured cap " +
                        std::to_string(config.cap(cap)) + " (level_caps." + cap + ")");
}

spectral::SpectrumOptions spectrum_options(const RunConfig& config) {
  spectral::SpectrumOptions o;
  o.cluster_tol = config.tol("eigen_cluster");
  o.residual_tol = config.tol("eigen_residual");
  return o;
}

dynamics::DynamicsOptions dynamics_options(const RunConfig& config) {
  dynamics::DynamicsOptions o;
  o.lift.tol = config.tol("lift");
  return o;
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

json error_json(const char* kind, const std::string& command, const std::string& message) {
  return {{"error", {{"kind", kind}, {"command", command}, {"message", message}}}};
}

json decomposition_json(const Word& w) {
  const Decomposition d = decompose(w);
  return {{"word", w.str()},
          {"trivial", is_trivial(w)},
          {"sections", {{"x", d.x.str()}, {"y", d.y.str()}}},
          {"swap", d.swap}};
}

json items_of(const std::vector<algebra::CheckOutcome>& checks, Outcome& o) {
  json items = json::array();
  for (const auto& c : checks) {
    items.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    o.timings[c.name] = c.seconds;
    o.ok = o.ok && c.passed;
  }
  return items;
}

struct Cli {
  CLI::App app{"Iterated monodromy group of z^2 - 1: words, verification, spectra, "
               "Schreier graphs and dynamics"};
  RunConfig defaults;
  std::string config_path;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string format;

  std::string command;
  std::function<Outcome(const RunConfig&)> action;

  void on(CLI::App* sub, std::string name, std::function<Outcome(const RunConfig&)> fn) {
    sub->callback([this, name = std::move(name), fn = std::move(fn)] {
      command = name;
      action = fn;
    });
  }

  Cli() {
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--seed", seed, "Random seed (overrides the config)")->default_str(
        std::to_string(defaults.seed));
    app.add_option("--out", out_dir, std::string("Output directory (env ") + kOutputDirEnv + ")")
        ->default_str(defaults.output_dir);
    app.add_option("--format", format, "Output format for stdout")
        ->check(CLI::IsMember({"json", "csv", "dot"}))
        ->default_str(defaults.format);
    app.footer("Default configuration:\n" + defaults.to_json());
    add_word();
    add_verify();
    add_relation();
    add_spectrum();
    add_schreier();
    add_dynamics();
  }

  void add_word() {
    auto* word = app.add_subcommand("word", "Group element arithmetic");
    word->require_subcommand(1);
    auto text = std::make_shared<std::string>();
    auto other = std::make_shared<std::string>();

    auto* reduce = word->add_subcommand("reduce", "Free reduction");
    reduce->add_option("word", *text)->required();
    on(reduce, "word_reduce", [text](const RunConfig&) {
      Outcome o;
      o.result = {{"input", *text}, {"word", word_arg(*text).str()}};
      return o;
    });

    auto* trivial = word->add_subcommand("trivial", "Decide w = 1");
    trivial->add_option("word", *text)->required();
    on(trivial, "word_trivial", [text](const RunConfig&) {
      Outcome o;
      const Word w = word_arg(*text);
      o.result = {{"word", w.str()}, {"trivial", is_trivial(w)}};
      return o;
    });

    auto* dec = word->add_subcommand("decompose", "Wreath decomposition <x, y> with swap flag");
    dec->add_option("word", *text)->required();
    on(dec, "word_decompose", [text](const RunConfig&) {
      Outcome o;
      o.result = decomposition_json(word_arg(*text));
      return o;
    });

    auto* sec = word->add_subcommand("section", "Section at a vertex address over {x, y}");
    sec->add_option("word", *text)->required();
    sec->add_option("address", *other)->required();
    on(sec, "word_section", [text, other](const RunConfig&) {
      Outcome o;
      const Word w = word_arg(*text);
      o.result = {{"word", w.str()}, {"address", *other}, {"section", section(w, *other).str()}};
      return o;
    });

    auto* act_cmd = word->add_subcommand("act", "Image of a vertex");
    act_cmd->add_option("word", *text)->required();
    act_cmd->add_option("vertex", *other)->required();
    on(act_cmd, "word_act", [text, other](const RunConfig&) {
      Outcome o;
      const Word w = word_arg(*text);
      o.result = {{"word", w.str()}, {"vertex", *other}, {"image", act(w, *other)}};
      return o;
    });

    auto* norm_cmd = word->add_subcommand("norm", "Weighted length used by the contraction argument");
    norm_cmd->add_option("word", *text)->required();
    on(norm_cmd, "word_norm", [text](const RunConfig&) {
      Outcome o;
      const Word w = word_arg(*text);
      const Norm n = norm(w);
      o.result = {{"word", w.str()}, {"a_count", n.a_count}, {"b_count", n.b_count},
                  {"norm", n.value()}};
      return o;
    });

    auto* eq = word->add_subcommand("equal", "Decide u = v");
    eq->add_option("u", *text)->required();
    eq->add_option("v", *other)->required();
    on(eq, "word_equal", [text, other](const RunConfig&) {
      Outcome o;
      const Word u = word_arg(*text), v = word_arg(*other);
      o.result = {{"u", u.str()}, {"v", v.str()}, {"equal", equal(u, v)}};
      return o;
    });
  }

  void add_verify() {
    auto* verify = app.add_subcommand("verify", "Verification suites");
    verify->require_subcommand(1);

    auto* ids = verify->add_subcommand("identities", "Identity catalogue");
    on(ids, "verify_identities", [](const RunConfig&) {
      Outcome o;
      o.result["items"] = items_of(algebra::run_identity_catalogue(), o);
      o.result["passed"] = o.ok;
      return o;
    });

    auto max_exp = std::make_shared<unsigned>(4);
    auto* rel = verify->add_subcommand("relators", "Relators [[a^p,b^p],b^p], [[b^p,a^2p],a^2p]");
    rel->add_option("--max-exponent", *max_exp, "Check p = 2^i for i <= this");
    on(rel, "verify_relators", [max_exp](const RunConfig&) {
      Outcome o;
      const auto report = algebra::check_relators(*max_exp);
      json items = json::array();
      for (const auto& e : report.relators) {
        items.push_back({{"p", e.p}, {"relator", e.text}, {"trivial", e.trivial}});
        o.timings[e.text] = e.seconds;
      }
      o.result["items"] = items;
      o.result["negative_control"] = {{"relator", report.negative_control.text},
                                      {"trivial", report.negative_control.trivial}};
      o.ok = report.consistent();
      o.result["passed"] = o.ok;
      return o;
    });

    auto length = std::make_shared<unsigned>(10);
    auto* monoid = verify->add_subcommand("monoid", "Positive words are pairwise distinct");
    monoid->add_option("--length", *length, "Maximum word length");
    on(monoid, "verify_monoid", [length](const RunConfig&) {
      Outcome o;
      const auto r = algebra::free_monoid_check(*length);
      json collisions = json::array();
      for (const auto& [u, v] : r.collisions) collisions.push_back({u.str(), v.str()});
      o.ok = r.collisions.empty();
      o.result = {{"max_length", r.max_length},   {"words", r.words},
                  {"fingerprint_level", r.fingerprint_level}, {"buckets", r.buckets},
                  {"largest_bucket", r.largest_bucket}, {"confirmations", r.confirmations},
                  {"collisions", collisions},     {"passed", o.ok}};
      return o;
    });

    auto samples = std::make_shared<std::uint64_t>(200);
    auto max_len = std::make_shared<std::uint64_t>(12);
    auto max_pow = std::make_shared<std::int64_t>(8);
    auto* torsion = verify->add_subcommand("torsion", "Random words have no trivial small powers");
    torsion->add_option("--samples", *samples);
    torsion->add_option("--length", *max_len, "Maximum word length");
    torsion->add_option("--power", *max_pow, "Largest power checked");
    on(torsion, "verify_torsion", [samples, max_len, max_pow](const RunConfig& config) {
      Outcome o;
      const auto r = algebra::torsion_probe(*samples, *max_len, *max_pow, config.seed);
      json violations = json::array();
      for (const auto& v : r.violations) violations.push_back({{"word", v.word.str()}, {"power", v.power}});
      json words = json::array();
      for (const Word& w : r.words) words.push_back(w.str());
      o.ok = r.violations.empty();
      o.result = {{"seed", config.seed},        {"samples", r.samples},
                  {"rejected_trivial", r.rejected_trivial}, {"powers_checked", r.powers_checked},
                  {"violations", violations},   {"words", words},
                  {"passed", o.ok}};
      return o;
    });

    auto level = std::make_shared<unsigned>(10);
    auto* trans = verify->add_subcommand("transitivity", "Level transitivity of the action");
    trans->add_option("--level", *level);
    on(trans, "verify_transitivity", [level](const RunConfig&) {
      Outcome o;
      const auto r = algebra::transitivity_check(*level);
      o.ok = r.transitive;
      o.result = {{"level", r.level}, {"orbit_size", r.orbit_size}, {"transitive", r.transitive},
                  {"passed", o.ok}};
      return o;
    });

    auto* witness = verify->add_subcommand("witness", "Nonsolvability witness [c, c^(-1-a)]");
    on(witness, "verify_witness", [](const RunConfig&) {
      Outcome o;
      const auto w = algebra::nonsolvability_witness();
      o.ok = w.nontrivial && w.section_y_trivial && !w.swap &&
             (w.section_x_equals_d || w.section_x_equals_d_inverse);
      o.result = {{"word", w.word.str()},
                  {"nontrivial", w.nontrivial},
                  {"sections", {{"x", w.section_x.str()}, {"y", w.section_y.str()}}},
                  {"swap", w.swap},
                  {"x_is_d", w.section_x_equals_d},
                  {"x_is_d_inverse", w.section_x_equals_d_inverse},
                  {"passed", o.ok}};
      return o;
    });

    auto fast = std::make_shared<bool>(false);
    auto ids_sel = std::make_shared<std::vector<int>>();
    auto* all = verify->add_subcommand("all", "Acceptance suite");
    all->add_flag("--fast", *fast, "Smaller levels and samples");
    all->add_option("--criterion", *ids_sel, "Run only these criteria (1-12)")
        ->check(CLI::Range(1, acceptance::kCriterionCount));
    on(all, "verify_all", [this, fast, ids_sel](const RunConfig& config) {
      Outcome o;
      std::vector<acceptance::CriterionResult> results;
      if (ids_sel->empty()) {
        results = acceptance::run_all(config, *fast);
      } else {
        for (int id : *ids_sel) results.push_back(acceptance::run_criterion(id, config, *fast));
      }
      for (const auto& r : results) {
        summary_ << acceptance::summary_line(r) << "\n";
        o.ok = o.ok && r.passed;
      }
      o.result = acceptance::report_json(results);
      o.result["fast"] = *fast;
      o.timings = acceptance::timing_json(results);
      return o;
    });
  }

  void add_relation() {
    auto* relation = app.add_subcommand("relation", "Relations between two elements");
    relation->require_subcommand(1);
    auto g = std::make_shared<std::string>();
    auto h = std::make_shared<std::string>();
    auto budget = std::make_shared<algebra::RelationBudget>();
    auto* find = relation->add_subcommand("find", "Find a nontrivial relation between g and h");
    find->add_option("first", *g, "Element g")->required();
    find->add_option("second", *h, "Element h")->required();
    find->add_option("--max-depth", budget->max_depth);
    find->add_option("--max-nodes", budget->max_nodes);
    on(find, "relation_find", [g, h, budget](const RunConfig&) {
      Outcome o;
      const Word gw = word_arg(*g), hw = word_arg(*h);
      const auto r = algebra::find_relation(gw, hw, *budget);
      o.ok = r.verified;
      o.result = {{"g", gw.str()},
                  {"h", hw.str()},
                  {"verified", r.verified},
                  {"witness", r.verified ? json(r.witness_str()) : json(nullptr)},
                  {"witness_length", r.witness.length()},
                  {"failure", r.failure},
                  {"trace", r.trace}};
      return o;
    });
  }

  void add_spectrum() {
    auto* spectrum = app.add_subcommand("spectrum", "Spectra of the level Markov operators");
    spectrum->require_subcommand(1);
    auto level = std::make_shared<unsigned>(0);

    auto* eigen = spectrum->add_subcommand("eigen", "Dense eigenvalues of the level operator");
    eigen->add_option("--level", *level)->required();
    on(eigen, "spectrum_eigen", [level](const RunConfig& config) {
      require_level(*level, config, "spectrum");
      Outcome o;
      const auto r = spectral::eigen_spectrum(*level, spectrum_options(config));
      const std::string file = "eigenvalues_n" + std::to_string(*level) + ".csv";
      o.artifacts.push_back({file, "csv", spectral::eigenvalues_csv(r)});
      json distinct = json::array();
      for (const auto& e : r.distinct)
        distinct.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
      o.result = {{"level", r.n},         {"dimension", r.eigenvalues.size()},
                  {"distinct", distinct}, {"gaps", r.gaps},
                  {"max_residual", r.max_residual}, {"csv", file}};
      return o;
    });

    auto grid = std::make_shared<std::uint64_t>(0);
    auto tol = std::make_shared<double>(0);
    auto* qroots = spectrum->add_subcommand("qroots", "Roots of Q_n(l, -1/4, -1/4) via the recursion");
    qroots->add_option("--level", *level)->required();
    qroots->add_option("--grid", *grid, "Sign-change grid size (default: sizes.root_grid)");
    qroots->add_option("--tol", *tol, "Bisection tolerance (default: tolerances.root_bisection)");
    on(qroots, "spectrum_qroots", [level, grid, tol](const RunConfig& config) {
      Outcome o;
      const auto r = spectral::q_root_spectrum(*level, *grid ? *grid : config.size("root_grid"),
                                               *tol > 0 ? *tol : config.tol("root_bisection"));
      std::string csv = "root\n";
      char buf[40];
      for (double x : r.roots) {
        std::snprintf(buf, sizeof buf, "%.17g\n", x);
        csv += buf;
      }
      const std::string file = "qroots_n" + std::to_string(*level) + ".csv";
      o.artifacts.push_back({file, "csv", csv});
      o.result = {{"level", r.n}, {"roots", r.roots}, {"warnings", r.warnings}, {"csv", file}};
      return o;
    });

    auto* compare = spectrum->add_subcommand("compare", "Compare eigenvalues with Q_n roots");
    compare->add_option("--level", *level)->required();
    on(compare, "spectrum_compare", [level](const RunConfig& config) {
      require_level(*level, config, "spectrum");
      Outcome o;
      const auto eig = spectral::eigen_spectrum(*level, spectrum_options(config));
      const auto roots = spectral::q_root_spectrum(*level, config.size("root_grid"),
                                                   config.tol("root_bisection"));
      const auto supp = spectral::support(eig);
      const double d = spectral::support_distance(supp, roots.roots);
      o.ok = d <= config.tol("spectral_match");
      o.result = {{"level", *level},          {"eigen_support", supp},
                  {"roots", roots.roots},     {"distance", d},
                  {"tolerance", config.tol("spectral_match")}, {"match", o.ok}};
      return o;
    });

    auto bins = std::make_shared<unsigned>(50);
    auto* measure = spectrum->add_subcommand("measure", "Histogram of the spectral measure");
    measure->add_option("--level", *level)->required();
    measure->add_option("--bins", *bins);
    on(measure, "spectrum_measure", [level, bins](const RunConfig& config) {
      require_level(*level, config, "spectrum");
      Outcome o;
      const auto eig = spectral::eigen_spectrum(*level, spectrum_options(config));
      const auto hist = spectral::spectral_measure(eig, *bins);
      const std::string file = "measure_n" + std::to_string(*level) + ".csv";
      o.artifacts.push_back({file, "csv", spectral::measure_csv(hist)});
      double total = 0;
      for (const auto& b : hist) total += b.mass;
      o.result = {{"level", *level}, {"bins", hist.size()}, {"total_mass", total}, {"csv", file}};
      return o;
    });

    auto first = std::make_shared<unsigned>(4);
    auto last = std::make_shared<unsigned>(8);
    auto min_gap = std::make_shared<double>(1e-3);
    auto* gaps = spectrum->add_subcommand("gaps", "Track spectral gaps across levels");
    gaps->add_option("--first", *first);
    gaps->add_option("--last", *last);
    gaps->add_option("--min-gap", *min_gap, "Smallest gap width counted");
    on(gaps, "spectrum_gaps", [first, last, min_gap](const RunConfig& config) {
      require_level(*last, config, "spectrum");
      Outcome o;
      auto opts = spectrum_options(config);
      opts.min_gap = *min_gap;
      const auto r = spectral::gap_persistence(*first, *last, opts);
      json tracks = json::array();
      for (const auto& t : r.tracks)
        tracks.push_back({{"gap", {t.gap.first, t.gap.second}}, {"widest_inside", t.widest_inside}});
      o.result = {{"first", r.first}, {"last", r.last}, {"tracks", tracks},
                  {"persistent", r.persistent}};
      return o;
    });
  }

  void add_schreier() {
    auto* schreier_cmd = app.add_subcommand("schreier", "Schreier graphs of the tree levels");
    schreier_cmd->require_subcommand(1);
    auto level = std::make_shared<unsigned>(0);
    auto method = std::make_shared<std::string>("direct");

    auto* build = schreier_cmd->add_subcommand("build", "Build the level-n Schreier graph");
    build->add_option("--level", *level)->required();
    build->add_option("--method", *method)->check(CLI::IsMember({"direct", "recursive"}));
    on(build, "schreier_build", [this, level, method](const RunConfig& config) {
      require_level(*level, config, "schreier");
      Outcome o;
      const auto g = *method == "direct" ? schreier::build_direct(*level)
                                         : schreier::build_recursive(*level);
      const std::string stem = "schreier_" + *method + "_n" + std::to_string(*level);
      if (config.format == "csv") throw InputError("schreier build: format must be dot or json");
      o.artifacts.push_back({stem + ".dot", "dot", schreier::to_dot(g)});
      o.artifacts.push_back({stem + ".json", "json", schreier::to_json(g)});
      o.result = {{"level", *level},
                  {"method", *method},
                  {"vertices", g.size()},
                  {"connected", schreier::is_connected(g)},
                  {"four_regular", schreier::is_four_regular(g)},
                  {"files", {stem + ".dot", stem + ".json"}}};
      raw_json_ = true;
      return o;
    });

    auto* check = schreier_cmd->add_subcommand("check", "Recursive construction vs orbit graph");
    check->add_option("--level", *level)->required();
    on(check, "schreier_check", [level](const RunConfig& config) {
      require_level(*level, config, "schreier");
      Outcome o;
      json items = json::array();
      for (unsigned n = 0; n <= *level; ++n) {
        const auto d = schreier::build_direct(n);
        const auto r = schreier::build_recursive(n);
        const bool iso = schreier::check_isomorphic(d, r);
        const bool shape = schreier::is_connected(r) && schreier::is_four_regular(r);
        items.push_back({{"level", n}, {"isomorphic", iso}, {"connected_four_regular", shape}});
        o.ok = o.ok && iso && shape;
      }
      o.result = {{"items", items}, {"passed", o.ok}};
      return o;
    });
  }

  void add_dynamics() {
    auto* julia = app.add_subcommand("julia", "Julia set sampling");
    julia->require_subcommand(1);
    auto count = std::make_shared<std::size_t>(100000);
    auto jseed = std::make_shared<std::uint64_t>(0);
    auto c_re = std::make_shared<double>(-1.0);
    auto c_im = std::make_shared<double>(0.0);
    auto burn_in = std::make_shared<std::size_t>(50);
    auto* sample = julia->add_subcommand("sample", "Inverse-iteration point cloud");
    sample->add_option("--count", *count);
    auto* seed_opt = sample->add_option("--seed", *jseed, "Seed (default: global seed)");
    sample->add_option("--c", *c_re, "Real part of c");
    sample->add_option("--c-im", *c_im, "Imaginary part of c");
    sample->add_option("--burn-in", *burn_in);
    on(sample, "julia_sample", [=](const RunConfig& config) {
      Outcome o;
      const std::uint64_t s = seed_opt->count() ? *jseed : config.seed;
      dynamics::QuadraticMap map{{*c_re, *c_im}};
      const auto cloud = dynamics::julia_sample(map, *count, s, *burn_in);
      o.artifacts.push_back({"julia_sample.csv", "csv", dynamics::cloud_csv(cloud)});
      double radius = 0;
      for (const auto& z : cloud) radius = std::max(radius, std::abs(z));
      o.result = {{"c", {*c_re, *c_im}}, {"count", cloud.size()}, {"seed", s},
                  {"burn_in", *burn_in}, {"max_modulus", radius}, {"csv", "julia_sample.csv"}};
      return o;
    });

    auto level = std::make_shared<unsigned>(0);
    auto* monodromy = app.add_subcommand("monodromy", "Numeric monodromy of z^2 - 1");
    monodromy->require_subcommand(1);
    auto* mcheck = monodromy->add_subcommand("check", "Lifted loops vs algebraic permutations");
    mcheck->add_option("--level", *level)->required();
    on(mcheck, "monodromy_check", [level](const RunConfig& config) {
      require_level(*level, config, "embedding");
      Outcome o;
      const dynamics::QuadraticMap map;
      const auto options = dynamics_options(config);
      const auto tree = dynamics::build_preimage_tree(map, *level, options);
      json items = json::array();
      for (unsigned n = 0; n <= *level; ++n) {
        for (Gen g : {Gen::a, Gen::b}) {
          const bool match =
              dynamics::numeric_monodromy(map, tree, g, n, options) == level_permutation(Word::gen(g), n);
          items.push_back({{"level", n}, {"generator", g == Gen::a ? "a" : "b"}, {"match", match}});
          o.ok = o.ok && match;
        }
      }
      o.result = {{"items", items}, {"min_separation", tree.min_separation.back()},
                  {"passed", o.ok}};
      return o;
    });

    auto file = std::make_shared<std::string>();
    auto* embed = app.add_subcommand("embed", "Schreier graph placed on the preimage tree");
    embed->add_option("--level", *level)->required();
    embed->add_option("--out", *file, "Point cloud CSV (re,im,address)")->required();
    on(embed, "embed", [level, file](const RunConfig& config) {
      require_level(*level, config, "embedding");
      Outcome o;
      const auto e = dynamics::embed_schreier(dynamics::QuadraticMap{}, *level,
                                              dynamics_options(config));
      std::vector<std::string> labels;
      for (std::uint32_t v = 0; v < e.graph.size(); ++v) labels.push_back(e.graph.name(v));
      o.artifacts.push_back({*file, "csv", dynamics::cloud_csv(e.positions, labels), true});
      const std::string json_file = "embedding_n" + std::to_string(*level) + ".json";
      o.artifacts.push_back({json_file, "json", dynamics::embedding_json(e)});
      o.result = {{"level", *level},
                  {"vertices", e.positions.size()},
                  {"min_separation", dynamics::min_pairwise_distance(e.positions)},
                  {"files", {fs::path(*file).filename().string(), json_file}}};
      return o;
    });

    auto fa = std::make_shared<std::string>();
    auto fb = std::make_shared<std::string>();
    auto* haus = app.add_subcommand("hausdorff", "Hausdorff distance between two point clouds");
    haus->add_option("--a", *fa)->required();
    haus->add_option("--b", *fb)->required();
    on(haus, "hausdorff", [fa, fb](const RunConfig&) {
      Outcome o;
      const auto a = dynamics::read_cloud_csv(read_file(*fa));
      const auto b = dynamics::read_cloud_csv(read_file(*fb));
      o.result = {{"points_a", a.size()},
                  {"points_b", b.size()},
                  {"directed_ab", dynamics::directed_hausdorff(a, b)},
                  {"directed_ba", dynamics::directed_hausdorff(b, a)},
                  {"distance", dynamics::hausdorff_distance(a, b)}};
      return o;
    });
  }

  RunConfig resolve_config() const {
    RunConfig config = config_path.empty() ? RunConfig{} : RunConfig::load(config_path);
    apply_environment(config);
    if (app.count("--seed")) config.seed = seed;
    if (app.count("--out")) config.output_dir = out_dir;
    if (app.count("--format")) config.format = format;
    config.validate();
    return config;
  }

  std::ostringstream summary_;
  bool raw_json_ = false;
};

void emit(const Outcome& o, const RunConfig& config, const std::string& command, bool raw_json,
          std::ostream& out) {
  const fs::path dir(config.output_dir);
  std::vector<std::string> files;
  for (const Artifact& a : o.artifacts) {
    write_file(a.absolute ? fs::path(a.file) : dir / a.file, a.content);
  }
  write_file(dir / (command + ".json"), o.result.dump(2) + "\n");

  if (config.format == "json") {
    if (raw_json) {
      for (const Artifact& a : o.artifacts)
        if (a.kind == "json") {
          out << a.content;
          return;
        }
    }
    out << o.result.dump(2) << "\n";
    return;
  }
  for (const Artifact& a : o.artifacts)
    if (a.kind == config.format) {
      out << a.content;
      return;
    }
  out << o.result.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli;
  std::vector<const char*> argv{"basilica"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    cli.app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    cli.app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    cli.app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    cli.app.exit(e, out, err);
    return kExitUsage;
  }

  const std::string command = cli.command;
  auto fail = [&](const char* kind, const std::string& message) {
    out << error_json(kind, command, message).dump(2) << "\n";
    err << "basilica " << command << ": " << message << "\n";
    return kExitFailure;
  };
  try {
    const RunConfig config = cli.resolve_config();
    const auto start = std::chrono::steady_clock::now();
    const std::string started = timestamp();
    Outcome o = cli.action(config);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(o, config, command, cli.raw_json_, out);
    const json meta = {{"command", command}, {"args", args}, {"started_at", started},
                       {"seconds", seconds}, {"timings", o.timings}};
    write_file(fs::path(config.output_dir) / (command + ".meta.json"), meta.dump(2) + "\n");
    err << cli.summary_.str();
    return o.ok ? kExitOk : kExitFailure;
  } catch (const InputError& e) {
    return fail("input", e.what());
  } catch (const PreconditionError& e) {
    return fail("precondition", e.what());
  } catch (const ResourceError& e) {
    return fail("resource", e.what());
  } catch (const NumericError& e) {
    return fail("numeric", e.what());
  } catch (const ConsistencyError& e) {
    return fail("consistency", e.what());
  } catch (const fs::filesystem_error& e) {
    return fail("io", e.what());
  } catch (const std::exception& e) {
    return fail("internal", e.what());
  }
}

}  // namespace basilica::cli
