#include "basilica/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "basilica/algebra.hpp"
#include "basilica/dynamics.hpp"
#include "basilica/error.hpp"
#include "basilica/parse.hpp"
#include "basilica/relation.hpp"
#include "basilica/schreier.hpp"
#include "basilica/spectral.hpp"
#include "basilica/wreath.hpp"

namespace basilica::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Recorder {
  CriterionResult& r;

  void check(std::string name, bool passed, std::string detail = {}) {
    r.checks.push_back({std::move(name), passed, std::move(detail)});
  }
};

Word w(const std::string& text) { return parse_word(text, algebra::named_elements()); }

void wreath_presentation(Recorder& rec, const RunConfig&, bool) {
  const Decomposition da = decompose(Word::a());
  const Decomposition db = decompose(Word::b());
  rec.check("a = <b, 1> (x y)", da == Decomposition{Word::b(), Word{}, true},
            "got <" + da.x.str() + ", " + da.y.str() + ">" + (da.swap ? " swap" : ""));
  rec.check("b = <a, 1>", db == Decomposition{Word::a(), Word{}, false},
            "got <" + db.x.str() + ", " + db.y.str() + ">" + (db.swap ? " swap" : ""));
}

void identity_catalogue(Recorder& rec, const RunConfig&, bool) {
  auto sections = [&](const std::string& name, const Word& word, const Word& x, const Word& y) {
    const Decomposition d = decompose(word);
    const bool ok = !d.swap && equal(d.x, x) && equal(d.y, y);
    rec.check(name, ok, "sections <" + d.x.str() + ", " + d.y.str() + ">" + (d.swap ? " swap" : ""));
  };
  rec.check("c^b = c", equal(w("c^b"), w("c")));
  rec.check("c^(a^3) = (c^(a^2))^-1 c c^a", equal(w("c^(a^3)"), w("(c^(a^2))^-1 c c^a")));
  sections("[b,a^2] = <[a,b], 1>", w("[b,a^2]"), w("[a,b]"), Word{});
  sections("[a,b] = <a, a^-b>", w("[a,b]"), w("a"), w("a^-b"));
  sections("c^a = <a^-b, a^b>", w("c^a"), w("a^-b"), w("a^b"));

  const algebra::NonsolvabilityWitness witness = algebra::nonsolvability_witness();
  std::string detail = "sections <" + witness.section_x.str() + ", " + witness.section_y.str() + ">";
  if (witness.section_x_equals_d_inverse) detail += "; the x-section equals d^-1, not d";
  rec.check("[c, c^(-1-a)] = <d, 1>",
            !witness.swap && witness.section_x_equals_d && witness.section_y_trivial, detail);
  rec.r.data["witness_nontrivial"] = witness.nontrivial;
  rec.r.data["witness_x_is_d_inverse"] = witness.section_x_equals_d_inverse;
}

void relators(Recorder& rec, const RunConfig&, bool fast) {
  const algebra::RelatorReport report = algebra::check_relators(fast ? 2 : 4);
  for (const auto& e : report.relators) rec.check(e.text + " = 1", e.trivial);
  rec.check("[[a,b],a] != 1", !report.negative_control.trivial);
}

void word_oracle(Recorder& rec, const RunConfig& config, bool fast) {
  const unsigned length = fast ? 6 : 8;
  const unsigned depth = fast ? std::min(12u, config.cap("word_oracle")) : config.cap("word_oracle");
  const algebra::OracleReport report = algebra::word_oracle_check(length, depth);
  rec.r.data["max_length"] = length;
  rec.r.data["depth"] = depth;
  rec.r.data["words"] = report.words;
  rec.r.data["trivial_words"] = report.trivial;
  std::string detail;
  for (std::size_t i = 0; i < report.disagreements.size() && i < 5; ++i)
    detail += report.disagreements[i].word.str() + " ";
  rec.check("is_trivial agrees with the level-" + std::to_string(depth) + " action on all " +
                std::to_string(report.words) + " reduced words of length <= " +
                std::to_string(length),
            report.disagreements.empty(), detail);
}

void abelianization(Recorder& rec, const RunConfig&, bool) {
  std::uint64_t tested = 0;
  std::string bad;
  for (std::int64_t m = -10; m <= 10; ++m) {
    for (std::int64_t n = -10; n <= 10; ++n) {
      const std::int64_t size = (m < 0 ? -m : m) + (n < 0 ? -n : n);
      if (size == 0 || size > 10) continue;
      const Word word = Word::a(m) * Word::b(n);
      ++tested;
      if (is_trivial(word) || algebra::abelianize(word).is_zero()) bad += word.str() + " ";
    }
  }
  rec.r.data["words"] = tested;
  rec.check("a^m b^n != 1 for 0 < |m|+|n| <= 10", bad.empty(), bad);
}

void torsion(Recorder& rec, const RunConfig& config, bool fast) {
  const algebra::TorsionReport report =
      algebra::torsion_probe(fast ? 50 : 200, 12, 8, config.seed);
  rec.r.data["samples"] = report.samples;
  rec.r.data["rejected_trivial"] = report.rejected_trivial;
  rec.r.data["powers_checked"] = report.powers_checked;
  std::string detail;
  for (const auto& v : report.violations)
    detail += "(" + v.word.str() + ")^" + std::to_string(v.power) + " ";
  rec.check("no random nontrivial word has a trivial power k <= 8", report.violations.empty(),
            detail);
}

void free_monoid(Recorder& rec, const RunConfig&, bool fast) {
  const unsigned length = fast ? 8 : 10;
  const algebra::MonoidReport report = algebra::free_monoid_check(length);
  rec.r.data["words"] = report.words;
  rec.r.data["buckets"] = report.buckets;
  rec.r.data["confirmations"] = report.confirmations;
  const std::uint64_t expected = (std::uint64_t{2} << length) - 2;
  rec.check("word count " + std::to_string(expected), report.words == expected,
            std::to_string(report.words));
  std::string detail;
  for (const auto& [u, v] : report.collisions) detail += u.str() + " = " + v.str() + "; ";
  rec.check("positive words pairwise distinct", report.collisions.empty(), detail);
}

void spectral_cross_validation(Recorder& rec, const RunConfig& config, bool fast) {
  using namespace spectral;
  const unsigned root_levels = fast ? 6 : 8;
  const unsigned dense_cap = fast ? std::min(8u, config.cap("spectrum")) : config.cap("spectrum");
  SpectrumOptions options;
  options.cluster_tol = config.tol("eigen_cluster");
  options.residual_tol = config.tol("eigen_residual");
  const double match = config.tol("spectral_match");
  const double nesting = config.tol("nesting");

  std::vector<SpectrumReport> reports;
  for (unsigned n = 0; n <= dense_cap; ++n) reports.push_back(eigen_spectrum(n, options));

  double worst_root = 0;
  std::string root_detail;
  for (unsigned n = 0; n <= root_levels && n <= dense_cap; ++n) {
    const RootReport roots =
        q_root_spectrum(n, config.size("root_grid"), config.tol("root_bisection"));
    const double d = support_distance(support(reports[n]), roots.roots);
    worst_root = std::max(worst_root, d);
    if (d > match) root_detail += "n=" + std::to_string(n) + " off by " + fmt(d) + "; ";
  }
  rec.r.data["root_eigen_distance"] = worst_root;
  rec.check("roots of Q_n(l,-1/4,-1/4) match the eigenvalues for n <= " +
                std::to_string(root_levels),
            worst_root <= match, root_detail.empty() ? "max " + fmt(worst_root) : root_detail);

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  double worst_det = 0, worst_rec = 0;
  for (unsigned n = 0; n <= 6; ++n) {
    const LevelRep rep = build_rep(n);
    for (int i = 0; i < 25; ++i) {
      const SpectralPoint p{coord(rng), coord(rng), coord(rng)};
      const double det = q_by_determinant(p, rep);
      const double q = eval_Q(p, n);
      worst_det = std::max(worst_det, std::abs(q - det) / std::max(std::abs(det), 1e-300));
      const double next = eval_Q(p, n + 1), composed = eval_Q(apply_F(p), n);
      worst_rec = std::max(worst_rec, std::abs(next - composed) / std::max(std::abs(next), 1e-300));
    }
  }
  rec.r.data["determinant_relative_error"] = worst_det;
  rec.r.data["recursion_relative_error"] = worst_rec;
  rec.check("Q_n equals the determinant at 25 random points, n <= 6",
            worst_det <= config.tol("q_relative"), "max " + fmt(worst_det));
  rec.check("Q_{n+1} = Q_n o F at 25 random points, n <= 6",
            worst_rec <= config.tol("q_relative"), "max " + fmt(worst_rec));

  const auto& level1 = reports.size() > 1 ? reports[1].eigenvalues : std::vector<double>{};
  rec.check("level-1 spectrum is {0, 1}",
            level1.size() == 2 && std::abs(level1[0]) <= 1e-12 && std::abs(level1[1] - 1) <= 1e-12);

  std::string missing_one, not_nested;
  for (unsigned n = 0; n <= dense_cap; ++n) {
    const auto s = support(reports[n]);
    if (s.empty() || std::abs(s.back() - 1.0) > nesting) missing_one += std::to_string(n) + " ";
    if (n < dense_cap) {
      const auto next = support(reports[n + 1]);
      for (double x : s) {
        double nearest = INFINITY;
        for (double y : next) nearest = std::min(nearest, std::abs(x - y));
        if (nearest > nesting) {
          not_nested += std::to_string(n) + " ";
          break;
        }
      }
    }
  }
  rec.check("1 is an eigenvalue for n <= " + std::to_string(dense_cap), missing_one.empty(),
            missing_one);
  rec.check("spec(pi_n) inside spec(pi_{n+1}) for n < " + std::to_string(dense_cap),
            not_nested.empty(), not_nested);
  rec.r.data["dense_level"] = dense_cap;
  rec.r.data["distinct_eigenvalues"] = reports.back().distinct.size();
}

void schreier_equivalence(Recorder& rec, const RunConfig& config, bool fast) {
  const unsigned cap = fast ? std::min(10u, config.cap("schreier")) : config.cap("schreier");
  std::string iso, shape;
  for (unsigned n = 0; n <= cap; ++n) {
    const auto direct = schreier::build_direct(n);
    const auto recursive = schreier::build_recursive(n);
    if (!schreier::check_isomorphic(direct, recursive)) iso += std::to_string(n) + " ";
    for (const auto* g : {&direct, &recursive})
      if (!schreier::is_connected(*g) || !schreier::is_four_regular(*g))
        shape += std::to_string(n) + " ";
  }
  rec.check("recursive construction isomorphic to the orbit graph for n <= " + std::to_string(cap),
            iso.empty(), iso);
  rec.check("all graphs connected and 4-regular", shape.empty(), shape);
}

void numeric_monodromy(Recorder& rec, const RunConfig& config, bool fast) {
  const unsigned cap = fast ? 4 : 6;
  dynamics::QuadraticMap map;
  dynamics::DynamicsOptions options;
  options.lift.tol = config.tol("lift");
  const dynamics::PreimageTree tree = dynamics::build_preimage_tree(map, cap, options);
  for (Gen g : {Gen::a, Gen::b}) {
    std::string bad;
    for (unsigned n = 0; n <= cap; ++n)
      if (dynamics::numeric_monodromy(map, tree, g, n, options) !=
          level_permutation(Word::gen(g), n))
        bad += std::to_string(n) + " ";
    rec.check(std::string("lifted ") + (g == Gen::a ? "a" : "b") +
                  "-loop permutes level n like the generator, n <= " + std::to_string(cap),
              bad.empty(), bad);
  }
}

void julia_convergence(Recorder& rec, const RunConfig& config, bool) {
  const unsigned top = config.cap("embedding");
  dynamics::QuadraticMap map;
  dynamics::DynamicsOptions options;
  options.lift.tol = config.tol("lift");
  const auto reference = dynamics::julia_sample(map, config.size("julia_points"), config.seed);
  const dynamics::PreimageTree tree = dynamics::build_preimage_tree(map, top, options);
  std::vector<double> distances;
  nlohmann::ordered_json table = nlohmann::ordered_json::object();
  for (unsigned n = 6; n <= top; n += 2) {
    distances.push_back(dynamics::hausdorff_distance(tree.levels[n], reference));
    table[std::to_string(n)] = distances.back();
  }
  rec.r.data["reference_points"] = reference.size();
  rec.r.data["hausdorff"] = table;
  bool monotone = true;
  for (std::size_t i = 1; i < distances.size() && 6 + 2 * i <= 12; ++i)
    monotone = monotone && distances[i] <= distances[i - 1];
  rec.check("d_H(V_6) >= d_H(V_8) >= d_H(V_10) >= d_H(V_12)", monotone && distances.size() >= 4);
  const double last = distances.empty() ? INFINITY : distances.back();
  rec.check("d_H(V_" + std::to_string(top) + ") < " + fmt(config.tol("hausdorff_limit")),
            last < config.tol("hausdorff_limit"), fmt(last));
}

void relation_finder(Recorder& rec, const RunConfig& config, bool) {
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> length(1, 4);
  const int pairs = 20;
  int verified = 0, unsound = 0, untraced = 0;
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (int i = 0; i < pairs; ++i) {
    const Word g = algebra::random_word(rng, length(rng));
    const Word h = algebra::random_word(rng, length(rng));
    const algebra::RelationResult r = algebra::find_relation(g, h);
    if (r.verified) {
      const bool sound = !r.witness.empty() && is_trivial(substitute(r.witness, g, h));
      if (sound) ++verified;
      else ++unsound;
    } else {
      if (!r.witness.empty()) ++unsound;
      if (r.trace.empty() || r.failure.empty()) ++untraced;
    }
    cases.push_back({{"g", g.str()}, {"h", h.str()}, {"verified", r.verified},
                     {"witness_length", r.witness.length()}});
  }
  rec.r.data["pairs"] = cases;
  rec.check(">= 90% of pairs have a verified relation", verified * 10 >= pairs * 9,
            std::to_string(verified) + "/" + std::to_string(pairs));
  rec.check("every returned witness is free-nontrivial and trivial in the group", unsound == 0,
            std::to_string(unsound) + " unsound");
  rec.check("every failure carries a trace", untraced == 0);
}

using Runner = void (*)(Recorder&, const RunConfig&, bool);

struct Entry {
  const char* name;
  Runner run;
  double budget;
};

const Entry kEntries[kCriterionCount] = {
    {"wreath presentation", wreath_presentation, 1},
    {"identity catalogue", identity_catalogue, 1},
    {"L-presentation relators", relators, 30},
    {"word problem oracle", word_oracle, 300},
    {"abelianization", abelianization, 60},
    {"torsion probes", torsion, 300},
    {"free monoid", free_monoid, 300},
    {"spectral cross-validation", spectral_cross_validation, 600},
    {"Schreier equivalence", schreier_equivalence, 60},
    {"numeric monodromy", numeric_monodromy, 120},
    {"Julia convergence", julia_convergence, 300},
    {"relation finder", relation_finder, 60},
};

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Entry& e : kEntries) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

CriterionResult run_criterion(int id, const RunConfig& config, bool fast) {
  if (id < 1 || id > kCriterionCount)
    throw InputError("criterion id must be 1.." + std::to_string(kCriterionCount));
  const Entry& entry = kEntries[id - 1];
  CriterionResult result;
  result.id = id;
  result.name = entry.name;
  result.budget_seconds = entry.budget;
  result.data = nlohmann::ordered_json::object();
  Recorder rec{result};
  const auto start = Clock::now();
  try {
    entry.run(rec, config, fast);
  } catch (const std::exception& e) {
    rec.check("completed without a module error", false, e.what());
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  rec.check("runtime within " + fmt(entry.budget) + " s", result.seconds <= entry.budget);
  result.passed = true;
  for (const Check& c : result.checks) result.passed = result.passed && c.passed;
  return result;
}

std::vector<CriterionResult> run_all(const RunConfig& config, bool fast) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, config, fast));
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "[%s] %2d %s (%.2f s)", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds);
  std::string out = head;
  for (const Check& c : r.checks)
    if (!c.passed) out += "\n       failed: " + c.name + (c.detail.empty() ? "" : " -- " + c.detail);
  return out;
}

nlohmann::ordered_json report_json(const std::vector<CriterionResult>& results) {
  nlohmann::ordered_json criteria = nlohmann::ordered_json::array();
  bool all = true;
  for (const CriterionResult& r : results) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const Check& c : r.checks) {
      if (c.name.rfind("runtime within", 0) == 0) continue;
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                        {"checks", checks}, {"data", r.data}});
    all = all && r.passed;
  }
  return {{"passed", all}, {"criteria", criteria}};
}

nlohmann::ordered_json timing_json(const std::vector<CriterionResult>& results) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const CriterionResult& r : results)
    out[std::to_string(r.id)] = {{"seconds", r.seconds}, {"budget_seconds", r.budget_seconds}};
  return out;
}

}  // namespace basilica::acceptance
