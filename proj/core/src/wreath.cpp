#include "basilica/wreath.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <unordered_set>

#include "basilica/error.hpp"

namespace basilica {
namespace {

std::int64_t floor_half(std::int64_t e) { return e >= 0 ? e / 2 : -((-e + 1) / 2); }
std::int64_t ceil_half(std::int64_t e) { return floor_half(e + 1); }

// Sections of g^exp at x and y, and whether it swaps the two.
struct PowerSections {
  Gen gen_x;
  std::int64_t exp_x;
  Gen gen_y;
  std::int64_t exp_y;
  bool swap;
};

// a^e = <b^ceil(e/2), b^floor(e/2)> (x y)^e,  b^e = <a^e, 1>.
PowerSections power_sections(Gen g, std::int64_t e) {
  if (g == Gen::a) return {Gen::b, ceil_half(e), Gen::b, floor_half(e), (e & 1) != 0};
  return {Gen::a, e, Gen::a, 0, false};
}

void check_address(std::string_view address) {
  for (char ch : address)
    if (ch != 'x' && ch != 'y')
      throw InputError(std::string("vertex letter '") + ch + "' not in {x,y}");
}

}  // namespace

Decomposition decompose(const Word& w) {
  Decomposition d;
  Word* out[2] = {&d.x, &d.y};
  int position[2] = {0, 1};
  for (const Run& r : w.runs()) {
    PowerSections s = power_sections(r.gen, r.exp);
    for (int start = 0; start < 2; ++start) {
      int& at = position[start];
      if (at == 0) {
        out[start]->push(s.gen_x, s.exp_x);
      } else {
        out[start]->push(s.gen_y, s.exp_y);
      }
      if (s.swap) at ^= 1;
    }
  }
  d.swap = position[0] != 0;
  return d;
}

Word section(const Word& w, std::string_view address) {
  check_address(address);
  Word current = w;
  for (char ch : address) {
    if (current.empty()) break;
    Decomposition d = decompose(current);
    current = ch == 'x' ? std::move(d.x) : std::move(d.y);
  }
  return current;
}

std::uint64_t act_power(Gen g, std::int64_t exp, std::uint64_t vertex,
                        unsigned level) {
  std::uint64_t result = vertex;
  for (unsigned depth = 0; depth < level && exp != 0; ++depth) {
    const unsigned bit = level - 1 - depth;
    const bool at_y = (vertex >> bit) & 1u;
    PowerSections s = power_sections(g, exp);
    if (s.swap) result ^= (std::uint64_t{1} << bit);
    g = at_y ? s.gen_y : s.gen_x;
    exp = at_y ? s.exp_y : s.exp_x;
  }
  return result;
}

std::uint64_t act(const Word& w, std::uint64_t vertex, unsigned level) {
  for (const Run& r : w.runs()) vertex = act_power(r.gen, r.exp, vertex, level);
  return vertex;
}

std::string act(const Word& w, std::string_view vertex) {
  check_address(vertex);
  if (vertex.size() > 63) throw ResourceError("vertex deeper than 63 levels");
  const auto level = static_cast<unsigned>(vertex.size());
  return vertex_address(act(w, vertex_index(vertex), level), level);
}

Permutation level_permutation(const Word& w, unsigned level) {
  if (level > kMaxPermutationLevel)
    throw ResourceError("level " + std::to_string(level) +
                        " exceeds permutation limit " +
                        std::to_string(kMaxPermutationLevel));
  const std::uint64_t size = std::uint64_t{1} << level;
  Permutation perm(size);
  for (std::uint64_t v = 0; v < size; ++v)
    perm[v] = static_cast<std::uint32_t>(act(w, v, level));
  return perm;
}

double Norm::value() const {
  return static_cast<double>(a_count) +
         std::numbers::sqrt2 * static_cast<double>(b_count);
}

Norm norm(const Word& w) { return {w.count(Gen::a), w.count(Gen::b)}; }

double contraction_fixed_point() { return 1.0 / (std::numbers::sqrt2 - 1.0); }

std::vector<Word> section_closure(const Word& w) {
  std::unordered_set<Word, WordHash> seen{w};
  std::vector<Word> order{w};
  for (std::size_t i = 0; i < order.size(); ++i) {
    Decomposition d = decompose(order[i]);
    for (Word* s : {&d.x, &d.y})
      if (seen.insert(*s).second) order.push_back(std::move(*s));
  }
  return order;
}

bool is_trivial(const Word& w) {
  if (w.empty()) return true;
  // Odd total a-exponent already swaps the root.
  if (w.exponent_sum(Gen::a) % 2 != 0) return false;
  std::unordered_set<Word, WordHash> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word current = std::move(queue.front());
    queue.pop_front();
    if (current.empty()) continue;
    Decomposition d = decompose(current);
    if (d.swap) return false;
    for (Word* s : {&d.x, &d.y})
      if (!s->empty() && seen.insert(*s).second) queue.push_back(std::move(*s));
  }
  return true;
}

bool equal(const Word& u, const Word& v) { return is_trivial(u * v.inverse()); }

std::uint64_t vertex_index(std::string_view address) {
  check_address(address);
  if (address.size() > 63) throw ResourceError("vertex deeper than 63 levels");
  std::uint64_t v = 0;
  for (char ch : address) v = (v << 1) | (ch == 'y' ? 1u : 0u);
  return v;
}

std::string vertex_address(std::uint64_t index, unsigned level) {
  std::string s(level, 'x');
  for (unsigned i = 0; i < level; ++i)
    if ((index >> (level - 1 - i)) & 1u) s[i] = 'y';
  return s;
}

}  // namespace basilica
