#include "basilica/relation.hpp"

#include <optional>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "basilica/error.hpp"
#include "basilica/wreath.hpp"

namespace basilica::algebra {
namespace {

const Word kG = Word::a();
const Word kH = Word::b();

// A candidate replacement pair, as words in the abstract letters g, h.
struct PairChoice {
  const char* name;
  Word first;
  Word second;
};

bool commute_in_free_group(const Word& u, const Word& v) {
  return commutator(u, v).empty();
}

struct PairHash {
  std::size_t operator()(const std::pair<Word, Word>& p) const {
    return p.first.hash() * 0x9e3779b97f4a7c15ull ^ p.second.hash();
  }
};

class RelationSearch {
 public:
  RelationSearch(const RelationBudget& budget, std::vector<std::string>& trace)
      : budget_(budget), trace_(trace) {}

  std::optional<Word> solve(const Word& g, const Word& h, unsigned depth) {
    if (++nodes_ > budget_.max_nodes) return fail(depth, "node budget exhausted");
    if (depth > budget_.max_depth) return fail(depth, "depth budget exhausted");

    const auto key = std::make_pair(g, h);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!active_.insert(key).second) {
      ++cycles_;
      if (auto w = short_relation(g, h)) return found(depth, "short (cycle)", *w);
      return fail(depth, "cycle");
    }

    const std::uint64_t cycles_before = cycles_;
    std::optional<Word> result = dispatch(g, h, depth);
    active_.erase(key);
    if (result && result->length() > budget_.max_witness_length) {
      result.reset();
      note(depth, "witness length budget exhausted");
    }
    if (result || cycles_ == cycles_before) memo_.emplace(key, result);
    return result;
  }

 private:
  std::optional<Word> dispatch(const Word& g, const Word& h, unsigned depth) {
    std::ostringstream head;
    head << "L=" << relation_height(g, h) << " g=" << g.str() << " h=" << h.str();
    note(depth, head.str());

    if (is_trivial(g)) return found(depth, "trivial g", kG);
    if (is_trivial(h)) return found(depth, "trivial h", kH);
    if (commute_in_free_group(g, h)) return found(depth, "free-commute", commutator(kG, kH));
    if (relation_height(g, h) <= 2.0) {
      if (auto w = base_case(g, h)) return found(depth, "base", *w);
      return fail(depth, "no base relation");
    }
    if (in_exceptional_set(g) && in_exceptional_set(h)) {
      if (auto w = exceptional_relation(g, h)) return found(depth, "exceptional", *w);
    }

    const bool g_fixes = fixes_first_level(g);
    const bool h_fixes = fixes_first_level(h);
    if (g_fixes && h_fixes) {
      if (auto w = combine_sections(g, h, depth)) return found(depth, "H", *w);
      if (is_trivial(commutator(g, h))) return found(depth, "commute", commutator(kG, kH));
      if (auto w = short_relation(g, h)) return found(depth, "short", *w);
      return fail(depth, "H-branch failed");
    }
    if (is_trivial(commutator(g, h))) return found(depth, "commute", commutator(kG, kH));

    if (auto reduced = nielsen_reduction(g, h)) {
      const Word e = substitute(reduced->first, g, h);
      const Word f = substitute(reduced->second, g, h);
      note(depth, std::string("nielsen ") + reduced->name);
      if (auto u = solve(e, f, depth + 1)) {
        Word w = substitute(*u, reduced->first, reduced->second);
        if (verify(w, g, h)) return found(depth, std::string("nielsen ") + reduced->name, w);
      }
    }

    std::vector<PairChoice> choices;
    if (g_fixes) {
      choices.push_back({"g,h^2", kG, kH.pow(2)});
    } else if (h_fixes) {
      choices.push_back({"g^2,h", kG.pow(2), kH});
    } else {
      choices = both_swap_choices(g, h);
    }
    for (const PairChoice& choice : choices) {
      if (commute_in_free_group(choice.first, choice.second)) {
        note(depth, std::string("pair ") + choice.name + " degenerate in the free group");
        continue;
      }
      const Word e = substitute(choice.first, g, h);
      const Word f = substitute(choice.second, g, h);
      auto u = combine_sections(e, f, depth);
      if (!u) {
        note(depth, std::string("pair ") + choice.name + " failed");
        continue;
      }
      Word w = substitute(*u, choice.first, choice.second);
      if (w.empty()) {
        note(depth, std::string("pair ") + choice.name + " collapsed in the free group");
        continue;
      }
      if (!verify(w, g, h)) {
        note(depth, std::string("pair ") + choice.name + " unverified");
        continue;
      }
      return found(depth, std::string("pair ") + choice.name, w);
    }
    if (auto w = short_relation(g, h)) return found(depth, "short", *w);
    return fail(depth, "all pair choices failed");
  }

  // Elements a^-i b^n a^j. Two such elements either commute or share a power.
  std::optional<Word> exceptional_relation(const Word& g, const Word& h) const {
    const Word w = commutator(kG, kH);
    if (verify(w, g, h)) return w;
    const std::int64_t m = g.exponent_sum(Gen::b), n = h.exponent_sum(Gen::b);
    if (m == 0 || n == 0) return std::nullopt;
    const std::int64_t d = std::gcd(m, n);
    Word power = kG.pow(n / d) * kH.pow(-m / d);
    if (verify(power, g, h)) return power;
    return std::nullopt;
  }

  // Small commutator relations, tried where the recursion stalls.
  std::optional<Word> short_relation(const Word& g, const Word& h) const {
    const Word Gi = kG.inverse(), Hi = kH.inverse();
    const Word candidates[] = {
        commutator(kG, kH),
        commutator(kH, conjugate(kH, kG)),
        commutator(kH, conjugate(kH, Gi)),
        commutator(kG, conjugate(kG, kH)),
        commutator(kG, conjugate(kG, Hi)),
        commutator(kG.pow(2), kH),
        commutator(kG, kH.pow(2)),
        commutator(kG.pow(2), kH.pow(2)),
        commutator(commutator(kG, kH), kH),
        commutator(commutator(kG, kH), kG),
        commutator(commutator(kG, kH.pow(2)), kH.pow(2)),
        commutator(commutator(kH, kG.pow(2)), kG.pow(2)),
        commutator(kH, conjugate(kH, kG.pow(2))),
        commutator(kG, conjugate(kG, kH.pow(2))),
    };
    for (const Word& w : candidates)
      if (verify(w, g, h)) return w;
    return std::nullopt;
  }

  // e and f both fix the first level. Relations u for the x-sections and v
  // for the y-sections give u(e,f) = <1, *>, v(e,f) = <*, 1>, so they
  // commute. Conjugating v by a letter keeps the <*, 1> shape.
  std::optional<Word> combine_sections(const Word& e, const Word& f, unsigned depth) {
    Decomposition de = decompose(e);
    Decomposition df = decompose(f);
    auto u = solve(de.x, df.x, depth + 1);
    if (!u) return std::nullopt;
    auto v = solve(de.y, df.y, depth + 1);
    if (!v) return std::nullopt;
    for (const Word& conj : {Word{}, kG, kH}) {
      Word w = commutator(*u, conjugate(*v, conj));
      if (w.empty()) continue;
      if (verify(w, e, f)) return w;
    }
    return std::nullopt;
  }

  // A free-group automorphism of the pair that strictly shortens it. Sections
  // of words in the exceptional set need not be shorter, so the recursion can
  // revisit a pair like (a^-1 b^-1 a, a^-1); conjugating back to (b^-1, a^-1)
  // breaks the cycle. A relation for the image pulls back to a relation for
  // (g, h) because the substitution is invertible.
  std::optional<PairChoice> nielsen_reduction(const Word& g, const Word& h) const {
    const std::uint64_t current = g.length() + h.length();
    const Word G = kG, H = kH, Gi = kG.inverse(), Hi = kH.inverse();
    const PairChoice moves[] = {
        {"(h^-1 g h, h)", Hi * G * H, H}, {"(h g h^-1, h)", H * G * Hi, H},
        {"(g, g^-1 h g)", G, Gi * H * G}, {"(g, g h g^-1)", G, G * H * Gi},
        {"(g h, h)", G * H, H},           {"(g h^-1, h)", G * Hi, H},
        {"(h g, h)", H * G, H},           {"(h^-1 g, h)", Hi * G, H},
        {"(g, h g)", G, H * G},           {"(g, h g^-1)", G, H * Gi},
        {"(g, g h)", G, G * H},           {"(g, g^-1 h)", G, Gi * H},
    };
    std::optional<PairChoice> best;
    std::uint64_t best_length = current;
    for (const PairChoice& m : moves) {
      const std::uint64_t length =
          substitute(m.first, g, h).length() + substitute(m.second, g, h).length();
      if (length < best_length) {
        best_length = length;
        best = m;
      }
    }
    return best;
  }

  // Single generator letters on both sides.
  std::optional<Word> base_case(const Word& g, const Word& h) {
    const Word candidates[] = {
        commutator(commutator(kG, kH), kH),
        commutator(commutator(kG, kH), kG),
        commutator(commutator(kG, kH.pow(2)), kH.pow(2)),
        commutator(commutator(kH, kG.pow(2)), kG.pow(2)),
        commutator(kG, kH),
    };
    for (const Word& w : candidates)
      if (verify(w, g, h)) return w;
    return std::nullopt;
  }

  // Pair choice when both inputs swap the first level. The table is indexed
  // by which sections fix the first level; the transposed lookup and the
  // remaining pairs are tried afterwards.
  std::vector<PairChoice> both_swap_choices(const Word& g, const Word& h) const {
    Decomposition dg = decompose(g);
    Decomposition dh = decompose(h);
    const PairChoice table[] = {
        {"g^2,h^2", kG.pow(2), kH.pow(2)},
        {"gh,hg", kG * kH, kH * kG},
        {"gh^-1,hg^-1", kG * kH.inverse(), kH * kG.inverse()},
    };
    enum { kSquares, kProducts, kQuotients };
    // Rows: (h_x, h_y) in H; columns: (g_x, g_y) in H.
    auto lookup = [](bool gx, bool gy, bool hx, bool hy) {
      if (hx && !hy) {
        if (gx && !gy) return kQuotients;
        if (!gx && gy) return kProducts;
      } else if (!hx && hy) {
        if (gx && !gy) return kProducts;
        if (!gx && gy) return kQuotients;
      }
      return kSquares;
    };
    const bool gx = fixes_first_level(dg.x), gy = fixes_first_level(dg.y);
    const bool hx = fixes_first_level(dh.x), hy = fixes_first_level(dh.y);
    std::vector<PairChoice> out{table[lookup(gx, gy, hx, hy)]};
    PairChoice transposed = table[lookup(hx, hy, gx, gy)];
    transposed.name = transposed.name == table[kSquares].name    ? "g^2,h^2 (transposed)"
                      : transposed.name == table[kProducts].name ? "gh,hg (transposed)"
                                                                 : "gh^-1,hg^-1 (transposed)";
    out.push_back(transposed);
    out.push_back(table[kSquares]);
    out.push_back(table[kProducts]);
    out.push_back({"gh^-1,h^-1g", kG * kH.inverse(), kH.inverse() * kG});
    out.push_back({"g^-1h,hg^-1", kG.inverse() * kH, kH * kG.inverse()});
    return out;
  }

  bool verify(const Word& w, const Word& g, const Word& h) const {
    return !w.empty() && is_trivial(substitute(w, g, h));
  }

  std::optional<Word> found(unsigned depth, const std::string& tag, Word w) {
    note(depth, "-> " + tag + " : " + w.str('g', 'h'));
    return w;
  }

  std::optional<Word> fail(unsigned depth, const std::string& why) {
    note(depth, "fail: " + why);
    return std::nullopt;
  }

  void note(unsigned depth, const std::string& msg) {
    trace_.push_back(std::string(2 * depth, ' ') + msg);
  }

  const RelationBudget& budget_;
  std::vector<std::string>& trace_;
  std::uint64_t nodes_ = 0;
  std::uint64_t cycles_ = 0;
  std::unordered_map<std::pair<Word, Word>, std::optional<Word>, PairHash> memo_;
  std::unordered_set<std::pair<Word, Word>, PairHash> active_;
};

}  // namespace

bool fixes_first_level(const Word& w) { return w.exponent_sum(Gen::a) % 2 == 0; }

double relation_height(const Word& g, const Word& h) {
  const int fixed = (fixes_first_level(g) ? 1 : 0) + (fixes_first_level(h) ? 1 : 0);
  return static_cast<double>(g.length() + h.length()) - fixed / 3.0;
}

bool in_exceptional_set(const Word& w) {
  const auto& runs = w.runs();
  std::size_t i = 0;
  if (i < runs.size() && runs[i].gen == Gen::a) {
    if (runs[i].exp != -1) return false;
    ++i;
  }
  if (i < runs.size() && runs[i].gen == Gen::b) ++i;
  if (i < runs.size() && runs[i].gen == Gen::a) {
    if (runs[i].exp != 1) return false;
    ++i;
  }
  return i == runs.size();
}

RelationResult find_relation(const Word& g, const Word& h, const RelationBudget& budget) {
  RelationResult result;
  RelationSearch search(budget, result.trace);
  std::optional<Word> w = search.solve(g, h, 0);
  if (!w) {
    result.failure = "no relation found within budget";
    return result;
  }
  if (w->empty()) {
    result.failure = "witness trivial in the free group";
    return result;
  }
  if (!is_trivial(substitute(*w, g, h))) {
    result.failure = "witness failed verification";
    return result;
  }
  result.witness = std::move(*w);
  result.verified = true;
  return result;
}

}  // namespace basilica::algebra
