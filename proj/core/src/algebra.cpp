#include "basilica/algebra.hpp"

#include <bit>
#include <chrono>
#include <deque>
#include <random>
#include <unordered_map>

#include "basilica/error.hpp"
#include "basilica/wreath.hpp"

namespace basilica::algebra {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Identity equality(std::string name, const std::string& lhs, const std::string& rhs) {
  Identity id;
  id.name = std::move(name);
  id.kind = Identity::Kind::Equality;
  id.lhs = parse_word(lhs, named_elements());
  id.rhs = parse_word(rhs, named_elements());
  return id;
}

Identity sections(std::string name, const std::string& word, const std::string& x,
                  const std::string& y) {
  Identity id;
  id.name = std::move(name);
  id.kind = Identity::Kind::Sections;
  id.lhs = parse_word(word, named_elements());
  id.expect_x = parse_word(x, named_elements());
  id.expect_y = parse_word(y, named_elements());
  return id;
}

std::uint64_t fingerprint(const Permutation& perm) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint32_t v : perm) {
    h ^= v;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

Word element_c() { return commutator(Word::a(), Word::b()); }
Word element_d() { return commutator(element_c(), Word::a()); }
Word element_e() { return commutator(element_d(), Word::a()); }

const SymbolTable& named_elements() {
  static const SymbolTable table{
      {"c", element_c()}, {"d", element_d()}, {"e", element_e()}};
  return table;
}

AbelianImage abelianize(const Word& w) {
  return {w.exponent_sum(Gen::a), w.exponent_sum(Gen::b)};
}

bool check_identity(const Word& lhs, const Word& rhs) { return equal(lhs, rhs); }

const std::vector<Identity>& identity_catalogue() {
  static const std::vector<Identity> catalogue = [] {
    std::vector<Identity> v;
    v.push_back(equality("c^b = c", "c^b", "c"));
    v.push_back(equality("c^(a^3) = (c^(a^2))^-1 c c^a", "c^(a^3)",
                         "(c^(a^2))^-1 c c^a"));
    v.push_back(sections("[b,a^2] = <[a,b], 1>", "[b,a^2]", "[a,b]", "1"));
    v.push_back(sections("c = [a,b] = <a, a^-b>", "c", "a", "a^-b"));
    v.push_back(sections("c^a = <a^-b, a^b>", "c^a", "a^-b", "a^b"));
    v.push_back(sections("c^a = <[b,a], 1> c^-1", "c^a c", "[b,a]", "1"));
    v.push_back(sections("c^(a^2) = <[b,a^-1], [b,a]^b> c", "c^(a^2) c^-1",
                         "[b,a^-1]", "[b,a]^b"));
    v.push_back(sections("c^(-1-a) = <c, 1>", "c^-1 c^-a", "c", "1"));
    v.push_back(sections("c^(-a^-1 - 1) = <1, c>", "(c^-1)^(a^-1) c^-1", "1", "c"));
    v.push_back(sections("[e^-1, b] = <d, 1>", "[e^-1,b]", "d", "1"));
    // The commutator in this order lands on d^-1; the reversed order gives d.
    v.push_back(sections("[c, c^(-1-a)] = <d^-1, 1>", "[c, c^-1 c^-a]", "d^-1", "1"));
    v.push_back(sections("[c^(-1-a), c] = <d, 1>", "[c^-1 c^-a, c]", "d", "1"));
    v.push_back(equality("d^2 e = b^-1 a^-1 b a^-2 b^-1 a b a^2", "d^2 e",
                         "B A b a^-2 B a b a^2"));
    v.push_back(equality("[(a^2)^b, a^2] = 1", "[(a^2)^b, a^2]", "1"));
    v.push_back(equality("b^-1 a^-1 b a^-2 b^-1 a b a^2 = b^-1 a b a^-2 b^-1 a^-1 b a^2",
                         "B A b a^-2 B a b a^2", "B a b a^-2 B A b a^2"));
    v.push_back(equality("b^-1 a b a^-2 b^-1 a^-1 b a^2 = (d^2 e)^(-a^-b)",
                         "B a b a^-2 B A b a^2", "((d^2 e)^-1)^(a^-b)"));
    v.push_back(equality("d^2 e (d^2 e)^(a^-b) = 1", "(d^2 e) (d^2 e)^(a^-b)", "1"));
    return v;
  }();
  return catalogue;
}

CheckOutcome run_identity(const Identity& id) {
  const auto start = Clock::now();
  CheckOutcome out;
  out.name = id.name;
  if (id.kind == Identity::Kind::Equality) {
    out.passed = check_identity(id.lhs, id.rhs);
    out.detail = out.passed ? "equal" : "not equal";
  } else {
    Decomposition d = decompose(id.lhs);
    const bool x_ok = equal(d.x, id.expect_x);
    const bool y_ok = equal(d.y, id.expect_y);
    out.passed = !d.swap && x_ok && y_ok;
    out.detail = "sections (" + d.x.str() + ", " + d.y.str() + ")" +
                 (d.swap ? " swap" : "") + (x_ok ? "" : " x-mismatch") +
                 (y_ok ? "" : " y-mismatch");
  }
  out.seconds = seconds_since(start);
  return out;
}

std::vector<CheckOutcome> run_identity_catalogue() {
  std::vector<CheckOutcome> out;
  for (const Identity& id : identity_catalogue()) out.push_back(run_identity(id));
  return out;
}

bool RelatorReport::consistent() const {
  for (const RelatorEntry& r : relators)
    if (!r.trivial) return false;
  return !negative_control.trivial;
}

RelatorReport check_relators(unsigned max_power_exponent) {
  if (max_power_exponent > kMaxRelatorPowerExponent)
    throw InputError("relator power exponent above " +
                     std::to_string(kMaxRelatorPowerExponent));
  auto timed = [](std::int64_t p, std::string text, Word w) {
    RelatorEntry e{p, std::move(text), std::move(w)};
    const auto start = Clock::now();
    e.trivial = is_trivial(e.relator);
    e.seconds = seconds_since(start);
    return e;
  };
  RelatorReport report;
  for (unsigned i = 0; i <= max_power_exponent; ++i) {
    const std::int64_t p = std::int64_t{1} << i;
    const std::string ps = std::to_string(p);
    const std::string p2 = std::to_string(2 * p);
    const Word ap = Word::a(p), bp = Word::b(p), a2p = Word::a(2 * p);
    report.relators.push_back(timed(p, "[[a^" + ps + ",b^" + ps + "],b^" + ps + "]",
                                    commutator(commutator(ap, bp), bp)));
    report.relators.push_back(timed(p, "[[b^" + ps + ",a^" + p2 + "],a^" + p2 + "]",
                                    commutator(commutator(bp, a2p), a2p)));
  }
  report.negative_control =
      timed(1, "[[a,b],a]", commutator(commutator(Word::a(), Word::b()), Word::a()));
  return report;
}

TorsionReport torsion_probe(std::uint64_t samples, std::uint64_t max_length,
                            std::int64_t max_power, std::uint64_t seed) {
  if (max_length == 0) throw InputError("torsion probe needs max_length >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> length_dist(1, max_length);
  TorsionReport report;
  // Bound rejection sampling; nontrivial words dominate at every length.
  const std::uint64_t attempt_limit = 1000 * (samples + 1);
  std::uint64_t attempts = 0;
  while (report.samples < samples) {
    if (++attempts > attempt_limit)
      throw ConsistencyError("torsion probe: could not draw nontrivial words");
    Word w = random_word(rng, length_dist(rng));
    if (is_trivial(w)) {
      ++report.rejected_trivial;
      continue;
    }
    ++report.samples;
    for (std::int64_t k = 2; k <= max_power; ++k) {
      ++report.powers_checked;
      if (is_trivial(w.pow(k))) report.violations.push_back({w, k});
    }
    report.words.push_back(std::move(w));
  }
  return report;
}

MonoidReport free_monoid_check(unsigned max_length, unsigned fingerprint_level) {
  if (max_length > kMaxMonoidLength)
    throw ResourceError("free monoid check limited to length " +
                        std::to_string(kMaxMonoidLength));
  MonoidReport report;
  report.max_length = max_length;
  report.fingerprint_level = fingerprint_level;

  const Permutation perm_a = level_permutation(Word::a(), fingerprint_level);
  const Permutation perm_b = level_permutation(Word::b(), fingerprint_level);
  std::unordered_map<std::uint64_t, std::vector<Word>> buckets;

  // Depth-first over positive words; stack[k] holds the permutation of the
  // current length-k prefix.
  std::vector<Permutation> stack(max_length + 1);
  stack[0].resize(perm_a.size());
  for (std::uint32_t v = 0; v < stack[0].size(); ++v) stack[0][v] = v;
  std::vector<Gen> letters;

  auto visit = [&](auto&& self, unsigned depth) -> void {
    if (depth == max_length) return;
    for (Gen g : {Gen::a, Gen::b}) {
      const Permutation& step = g == Gen::a ? perm_a : perm_b;
      Permutation& next = stack[depth + 1];
      next.resize(step.size());
      for (std::size_t v = 0; v < step.size(); ++v) next[v] = step[stack[depth][v]];
      letters.push_back(g);
      Word w;
      for (Gen l : letters) w.push(l, 1);
      buckets[fingerprint(next)].push_back(std::move(w));
      ++report.words;
      self(self, depth + 1);
      letters.pop_back();
    }
  };
  visit(visit, 0);

  report.buckets = buckets.size();
  for (auto& [key, words] : buckets) {
    report.largest_bucket = std::max<std::uint64_t>(report.largest_bucket, words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        ++report.confirmations;
        if (equal(words[i], words[j])) report.collisions.emplace_back(words[i], words[j]);
      }
  }
  return report;
}

OracleReport word_oracle_check(unsigned max_length, unsigned depth) {
  if (max_length > kMaxOracleLength)
    throw ResourceError("word oracle limited to length " + std::to_string(kMaxOracleLength));
  if (depth > kMaxPermutationLevel)
    throw ResourceError("word oracle limited to depth " + std::to_string(kMaxPermutationLevel));
  OracleReport report;
  report.max_length = max_length;
  report.depth = depth;

  const Gen gens[4] = {Gen::a, Gen::a, Gen::b, Gen::b};
  const int signs[4] = {1, -1, 1, -1};
  Permutation steps[4];
  for (int k = 0; k < 4; ++k) steps[k] = level_permutation(Word::gen(gens[k], signs[k]), depth);

  std::vector<Permutation> stack(max_length + 1);
  stack[0].resize(steps[0].size());
  for (std::uint32_t v = 0; v < stack[0].size(); ++v) stack[0][v] = v;
  Word w;

  auto decide = [&](const Permutation& p) {
    // Shallowest level where some vertex moves: the leading differing bit.
    std::uint32_t moved = 0;
    for (std::uint32_t v = 0; v < p.size(); ++v) moved |= v ^ p[v];
    const unsigned moved_depth = moved == 0 ? 0 : depth - (std::bit_width(moved) - 1);
    const bool trivial = is_trivial(w);
    ++report.words;
    if (trivial) ++report.trivial;
    if (trivial != (moved == 0)) report.disagreements.push_back({w, trivial, moved_depth});
  };

  auto visit = [&](auto&& self, unsigned length, int last) -> void {
    decide(stack[length]);
    if (length == max_length) return;
    for (int k = 0; k < 4; ++k) {
      if (last >= 0 && (k ^ 1) == last) continue;
      Permutation& next = stack[length + 1];
      next.resize(steps[k].size());
      for (std::size_t v = 0; v < next.size(); ++v) next[v] = steps[k][stack[length][v]];
      const Word saved = w;
      w.push(gens[k], signs[k]);
      self(self, length + 1, k);
      w = saved;
    }
  };
  visit(visit, 0, -1);
  return report;
}

TransitivityReport transitivity_check(unsigned level) {
  if (level > kMaxPermutationLevel)
    throw ResourceError("transitivity check limited to level " +
                        std::to_string(kMaxPermutationLevel));
  const std::uint64_t size = std::uint64_t{1} << level;
  std::vector<bool> seen(size, false);
  std::deque<std::uint64_t> queue{0};
  seen[0] = true;
  std::uint64_t count = 1;
  while (!queue.empty()) {
    const std::uint64_t v = queue.front();
    queue.pop_front();
    for (Gen g : {Gen::a, Gen::b})
      for (std::int64_t e : {1, -1}) {
        const std::uint64_t w = act_power(g, e, v, level);
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          queue.push_back(w);
        }
      }
  }
  return {level, count, count == size};
}

NonsolvabilityWitness nonsolvability_witness() {
  const Word c = element_c();
  const Word c_minus_one_minus_a = c.inverse() * conjugate(c.inverse(), Word::a());
  NonsolvabilityWitness w;
  w.word = commutator(c, c_minus_one_minus_a);
  Decomposition d = decompose(w.word);
  w.section_x = d.x;
  w.section_y = d.y;
  w.swap = d.swap;
  w.nontrivial = !is_trivial(w.word);
  w.section_y_trivial = !d.swap && is_trivial(d.y);
  w.section_x_equals_d = equal(d.x, element_d());
  w.section_x_equals_d_inverse = equal(d.x, element_d().inverse());
  return w;
}

}  // namespace basilica::algebra
