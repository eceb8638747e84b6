#pragma once

// Reference implementations used to cross-check the library. They share no
// code with it: the automaton is spelled out state by state and words are
// plain letter strings over {a, A, b, B}.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Apply one letter to a vertex given as a string over {x, y}.
//   a(x u) = y b(u),  a(y u) = x u
//   b(x u) = x a(u),  b(y u) = y u
// and the inverses read backwards.
inline std::string apply_letter(char letter, std::string v) {
  std::size_t i = 0;
  while (i < v.size()) {
    switch (letter) {
      case 'a':
        if (v[i] == 'x') { v[i] = 'y'; letter = 'b'; ++i; continue; }
        v[i] = 'x';
        return v;
      case 'A':
        if (v[i] == 'y') { v[i] = 'x'; letter = 'B'; ++i; continue; }
        v[i] = 'y';
        return v;
      case 'b':
        if (v[i] == 'x') { letter = 'a'; ++i; continue; }
        return v;
      case 'B':
        if (v[i] == 'x') { letter = 'A'; ++i; continue; }
        return v;
      default:
        return v;
    }
  }
  return v;
}

// Leftmost letter acts first.
inline std::string apply_word(const std::string& letters, std::string v) {
  for (char c : letters) v = apply_letter(c, std::move(v));
  return v;
}

inline std::string address(std::uint64_t index, unsigned level) {
  std::string s(level, 'x');
  for (unsigned k = 0; k < level; ++k)
    if ((index >> (level - 1 - k)) & 1) s[k] = 'y';
  return s;
}

inline std::uint64_t index_of(const std::string& s) {
  std::uint64_t v = 0;
  for (char c : s) v = 2 * v + (c == 'y');
  return v;
}

inline std::vector<std::uint32_t> permutation(const std::string& letters, unsigned level) {
  std::vector<std::uint32_t> p(std::size_t{1} << level);
  for (std::uint64_t v = 0; v < p.size(); ++v)
    p[v] = static_cast<std::uint32_t>(index_of(apply_word(letters, address(v, level))));
  return p;
}

inline bool acts_trivially(const std::string& letters, unsigned level) {
  const auto p = permutation(letters, level);
  for (std::uint32_t v = 0; v < p.size(); ++v)
    if (p[v] != v) return false;
  return true;
}

inline std::string inverse(const std::string& letters) {
  std::string out(letters.rbegin(), letters.rend());
  for (char& c : out) c = static_cast<char>(std::islower(c) ? std::toupper(c) : std::tolower(c));
  return out;
}

inline std::string random_reduced(std::mt19937_64& rng, std::size_t length) {
  static const char letters[] = {'a', 'A', 'b', 'B'};
  std::string s;
  while (s.size() < length) {
    const char c = letters[rng() % 4];
    if (!s.empty() && inverse(std::string(1, c))[0] == s.back()) continue;
    s += c;
  }
  return s;
}

// Cyclic Jacobi rotations on a dense symmetric matrix.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += m[i][j] * m[i][j];
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(m[p][q]) < 1e-300) continue;
        const double theta = (m[q][q] - m[p][p]) / (2 * m[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double kp = m[k][p], kq = m[k][q];
          m[k][p] = c * kp - s * kq;
          m[k][q] = s * kp + c * kq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double pk = m[p][k], qk = m[q][k];
          m[p][k] = c * pk - s * qk;
          m[q][k] = s * pk + c * qk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = m[i][i];
  std::sort(out.begin(), out.end());
  return out;
}

// (A + A^T + B + B^T) / 4 from the automaton permutations.
inline std::vector<std::vector<double>> markov(unsigned level) {
  const auto a = permutation("a", level), b = permutation("b", level);
  const std::size_t n = a.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t v = 0; v < n; ++v) {
    m[v][a[v]] += 0.25;
    m[a[v]][v] += 0.25;
    m[v][b[v]] += 0.25;
    m[b[v]][v] += 0.25;
  }
  return m;
}

}  // namespace oracle
