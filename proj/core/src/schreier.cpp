#include "basilica/schreier.hpp"

#include <bit>
#include <deque>
#include <limits>

#include <nlohmann/json.hpp>

#include "basilica/error.hpp"

namespace basilica::schreier {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

Permutation inverse(const Permutation& p) {
  Permutation inv(p.size());
  for (std::uint32_t v = 0; v < p.size(); ++v) inv[p[v]] = v;
  return inv;
}

bool is_bijection(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t image : p) {
    if (image >= p.size() || seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

class Builder {
 public:
  Builder(AttachmentReading reading, std::uint64_t limit) : reading_(reading), limit_(limit) {}

  std::uint32_t vertex() {
    if (a_.size() >= limit_)
      throw ResourceError("build_recursive: more than " + std::to_string(limit_) +
                          " vertices; the attachment reading does not fit this level");
    a_.push_back(kUnset);
    b_.push_back(kUnset);
    return static_cast<std::uint32_t>(a_.size() - 1);
  }

  // Returns the piece index, or npos when the piece is a single point.
  std::size_t grow(char kind, unsigned m, std::uint32_t root) {
    if (m == 0) return npos;
    const bool polygon_step = kind == 'A' ? m % 2 == 1 : m % 2 == 0;
    if (!polygon_step) return grow(kind, m - 1, root);

    const unsigned k = kind == 'A' ? (m - 1) / 2 + 1 : m / 2;
    const std::uint64_t sides = std::uint64_t{1} << k;
    PolygonPiece piece{kind, m, {root}, {}};
    for (std::uint64_t i = 1; i < sides; ++i) piece.polygon.push_back(vertex());
    Permutation& edges = kind == 'A' ? a_ : b_;
    for (std::uint64_t i = 0; i < sides; ++i)
      edges[piece.polygon[i]] = piece.polygon[(i + 1) % sides];

    const std::size_t id = pieces_.size();
    pieces_.push_back(piece);
    for (std::uint64_t i = 1; i < sides; ++i) {
      const unsigned t = static_cast<unsigned>(std::countr_zero(i));
      unsigned child;
      if (reading_ == AttachmentReading::Exponent)
        child = kind == 'A' ? 2 * t : 2 * t + 1;
      else
        child = kind == 'A' ? (2u << t) : (2u << t) + 1;
      const std::size_t c = grow(kind == 'A' ? 'B' : 'A', child, piece.polygon[i]);
      if (c != npos) pieces_[id].children.push_back(c);
    }
    return id;
  }

  RecursiveBuild finish(unsigned n, std::uint32_t root) {
    for (std::uint32_t v = 0; v < a_.size(); ++v) {
      if (a_[v] == kUnset) a_[v] = v;
      if (b_[v] == kUnset) b_[v] = v;
    }
    RecursiveBuild out;
    out.graph.n = n;
    out.graph.a = std::move(a_);
    out.graph.b = std::move(b_);
    out.graph.distinguished = root;
    out.pieces = std::move(pieces_);
    return out;
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  AttachmentReading reading_;
  std::uint64_t limit_;
  Permutation a_, b_;
  std::vector<PolygonPiece> pieces_;
};

}  // namespace

std::string LabeledGraph::name(std::uint32_t v) const {
  if (addressed) return n == 0 ? std::string("root") : vertex_address(v, n);
  return "p" + std::to_string(v);
}

LabeledGraph build_direct(unsigned n) {
  if (n > kMaxGraphLevel)
    throw ResourceError("build_direct: level " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxGraphLevel));
  LabeledGraph g;
  g.n = n;
  g.a = level_permutation(Word::a(), n);
  g.b = level_permutation(Word::b(), n);
  g.distinguished = 0;
  g.addressed = true;
  return g;
}

RecursiveBuild build_recursive_pieces(unsigned n, AttachmentReading reading) {
  if (n > kMaxGraphLevel)
    throw ResourceError("build_recursive: level " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxGraphLevel));
  Builder builder(reading, std::uint64_t{1} << n);
  const std::uint32_t root = builder.vertex();
  builder.grow('A', n, root);
  builder.grow('B', n, root);
  return builder.finish(n, root);
}

LabeledGraph build_recursive(unsigned n, AttachmentReading reading) {
  return build_recursive_pieces(n, reading).graph;
}

std::optional<Permutation> find_isomorphism(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.size() != h.size() || g.size() == 0) return std::nullopt;
  const Permutation* gm[4] = {&g.a, nullptr, &g.b, nullptr};
  const Permutation* hm[4] = {&h.a, nullptr, &h.b, nullptr};
  const Permutation ga_inv = inverse(g.a), gb_inv = inverse(g.b);
  const Permutation ha_inv = inverse(h.a), hb_inv = inverse(h.b);
  gm[1] = &ga_inv;
  gm[3] = &gb_inv;
  hm[1] = &ha_inv;
  hm[3] = &hb_inv;

  Permutation map(g.size(), kUnset);
  std::vector<bool> used(h.size(), false);
  map[g.distinguished] = h.distinguished;
  used[h.distinguished] = true;
  std::deque<std::uint32_t> queue{g.distinguished};
  std::size_t mapped = 1;
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    for (int m = 0; m < 4; ++m) {
      const std::uint32_t gv = (*gm[m])[v];
      const std::uint32_t hv = (*hm[m])[map[v]];
      if (map[gv] == kUnset) {
        if (used[hv]) return std::nullopt;
        map[gv] = hv;
        used[hv] = true;
        ++mapped;
        queue.push_back(gv);
      } else if (map[gv] != hv) {
        return std::nullopt;
      }
    }
  }
  if (mapped != g.size()) return std::nullopt;
  return map;
}

bool check_isomorphic(const LabeledGraph& g, const LabeledGraph& h) {
  return find_isomorphism(g, h).has_value();
}

LabeledGraph relabel(const LabeledGraph& g, const Permutation& map, bool addressed) {
  LabeledGraph out;
  out.n = g.n;
  out.a.resize(g.size());
  out.b.resize(g.size());
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    out.a[map[v]] = map[g.a[v]];
    out.b[map[v]] = map[g.b[v]];
  }
  out.distinguished = map[g.distinguished];
  out.addressed = addressed;
  return out;
}

bool is_connected(const LabeledGraph& g) {
  if (g.size() == 0) return false;
  const Permutation ai = inverse(g.a), bi = inverse(g.b);
  std::vector<bool> seen(g.size(), false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t w : {g.a[v], ai[v], g.b[v], bi[v]}) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.size();
}

bool is_four_regular(const LabeledGraph& g) {
  if (g.a.size() != g.b.size() || !is_bijection(g.a) || !is_bijection(g.b)) return false;
  std::vector<unsigned> degree(g.size(), 0);
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    ++degree[v];
    ++degree[g.a[v]];
    ++degree[v];
    ++degree[g.b[v]];
  }
  for (unsigned d : degree)
    if (d != 4) return false;
  return true;
}

std::string to_dot(const LabeledGraph& g) {
  std::string out = "digraph schreier_" + std::to_string(g.n) + " {\n";
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + g.name(v) + "\"";
    if (v == g.distinguished) out += ", shape=doublecircle";
    out += "];\n";
  }
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    out += "  v" + std::to_string(v) + " -> v" + std::to_string(g.a[v]) + " [label=a];\n";
    out += "  v" + std::to_string(v) + " -> v" + std::to_string(g.b[v]) + " [label=b];\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const LabeledGraph& g) {
  nlohmann::ordered_json j;
  j["level"] = g.n;
  j["addressed"] = g.addressed;
  j["distinguished"] = g.distinguished;
  nlohmann::ordered_json names = nlohmann::ordered_json::array();
  for (std::uint32_t v = 0; v < g.size(); ++v) names.push_back(g.name(v));
  j["vertices"] = names;
  j["a"] = g.a;
  j["b"] = g.b;
  return j.dump() + "\n";
}

LabeledGraph from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("schreier json: ") + e.what());
  }
  LabeledGraph g;
  try {
    g.n = j.at("level").get<unsigned>();
    g.addressed = j.value("addressed", false);
    g.distinguished = j.at("distinguished").get<std::uint32_t>();
    g.a = j.at("a").get<Permutation>();
    g.b = j.at("b").get<Permutation>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("schreier json: ") + e.what());
  }
  if (g.n > kMaxGraphLevel) throw InputError("schreier json: level out of range");
  const std::size_t size = std::size_t{1} << g.n;
  if (g.a.size() != size || g.b.size() != size)
    throw InputError("schreier json: permutation length does not match level");
  if (!is_bijection(g.a) || !is_bijection(g.b))
    throw InputError("schreier json: edge maps are not permutations");
  if (g.distinguished >= size) throw InputError("schreier json: distinguished vertex out of range");
  return g;
}

std::string export_graph(const LabeledGraph& g, std::string_view format) {
  if (format == "dot") return to_dot(g);
  if (format == "json") return to_json(g);
  throw InputError("unknown graph format '" + std::string(format) + "' (expected dot or json)");
}

}  // namespace basilica::schreier
