#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "birdtrack/errors.hpp"

namespace birdtrack {

/// One-line notation, 0-based: p[i] is the image of i.
using Perm = std::vector<int>;
using Cycles = std::vector<std::vector<int>>;

inline Perm identity_perm(int k) {
  Perm p(k);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline void require_permutation(const Perm& p) {
  if (!is_permutation(p)) fail(ErrorCode::InvalidPermutation, "not a bijection");
}

inline Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

/// (a*b)(i) = a(b(i)): b first.
inline Perm multiply(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

/// Canonical cycles: smallest element first, sorted by first element, 1-cycles kept.
inline Cycles to_cycles(const Perm& p) {
  Cycles out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int i = static_cast<int>(s); !seen[i]; i = p[i]) {
      seen[i] = 1;
      c.push_back(i);
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline int cycle_count(const Perm& p) { return static_cast<int>(to_cycles(p).size()); }

inline int sign(const Perm& p) {
  int s = 1;
  for (const auto& c : to_cycles(p))
    if (c.size() % 2 == 0) s = -s;
  return s;
}

inline Perm from_cycles(const Cycles& cycles, int k) {
  Perm p = identity_perm(k);
  std::vector<char> used(k, 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i];
      if (a < 0 || a >= k || used[a]) fail(ErrorCode::InvalidDecomposition, "cycles overlap or leave 1.." + std::to_string(k));
      used[a] = 1;
      p[a] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

/// Parses "(1 2 3)(4)" (1-based, spaces or commas); k = 0 infers the size
/// from the largest entry.
inline Perm parse_cycles(const std::string& text, int k = 0) {
  Cycles cycles;
  std::vector<int>* cur = nullptr;
  int largest = 0;
  for (std::size_t i = 0; i < text.size();) {
    char ch = text[i];
    if (ch == '(') {
      if (cur) fail(ErrorCode::ParseError, "nested '(' in " + text);
      cycles.emplace_back();
      cur = &cycles.back();
      ++i;
    } else if (ch == ')') {
      if (!cur || cur->empty()) fail(ErrorCode::ParseError, "empty or unmatched cycle in " + text);
      cur = nullptr;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (!cur) fail(ErrorCode::ParseError, "entry outside a cycle in " + text);
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      int v = std::stoi(text.substr(i, j - i));
      if (v < 1) fail(ErrorCode::ParseError, "entries are 1-based");
      largest = std::max(largest, v);
      cur->push_back(v - 1);
      i = j;
    } else if (ch == ' ' || ch == ',' || ch == '\t') {
      ++i;
    } else {
      fail(ErrorCode::ParseError, std::string("unexpected character '") + ch + "' in " + text);
    }
  }
  if (cur) fail(ErrorCode::ParseError, "unterminated cycle in " + text);
  if (k == 0) k = largest;
  if (largest > k) fail(ErrorCode::InvalidDecomposition, "entry exceeds " + std::to_string(k));
  return from_cycles(cycles, k);
}

/// "(1 2 3)(4)" with all 1-cycles written out.
inline std::string format_cycles(const Perm& p, bool with_fixed_points = true) {
  std::string s;
  for (const auto& c : to_cycles(p)) {
    if (c.size() == 1 && !with_fixed_points) continue;
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(c[i] + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

inline std::vector<Perm> all_permutations(int k) {
  std::vector<Perm> out;
  Perm p = identity_perm(k);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Permutations of `slots` embedded in identity on k points.
inline std::vector<Perm> permutations_of(const std::vector<int>& slots, int k) {
  std::vector<Perm> out;
  std::vector<int> img = slots;
  std::sort(img.begin(), img.end());
  std::vector<int> dom = img;
  do {
    Perm p = identity_perm(k);
    for (std::size_t i = 0; i < dom.size(); ++i) p[dom[i]] = img[i];
    out.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace birdtrack
