#include "sl2jsr/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "sl2jsr/scalars.hpp"

namespace sl2jsr {

bool is_positive_word(const std::string& w) {
  if (w.empty()) return false;
  return std::all_of(w.begin(), w.end(), [](char c) { return c == 'a' || c == 'b'; });
}

bool is_group_word(const std::string& w) {
  if (w.empty()) return false;
  return std::all_of(w.begin(), w.end(),
                     [](char c) { return c == 'a' || c == 'b' || c == 'A' || c == 'B'; });
}

void require_positive_word(const std::string& w) {
  if (!is_positive_word(w)) throw ParseError("not a word over {a,b}: '" + w + "'");
}

void require_group_word(const std::string& w) {
  if (!is_group_word(w)) throw ParseError("not a word over {a,b,A,B}: '" + w + "'");
}

char letter_inverse(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    case 'B': return 'b';
    default: throw std::invalid_argument("bad letter");
  }
}

std::string word_inverse(const std::string& w) {
  std::string out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out += letter_inverse(*it);
  return out;
}

std::string free_reduce(const std::string& w) {
  std::string out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == letter_inverse(c)) {
      out.pop_back();
    } else {
      out += c;
    }
  }
  return out;
}

std::string cyclic_reduce(const std::string& w) {
  std::string r = free_reduce(w);
  while (r.size() >= 2 && r.front() == letter_inverse(r.back())) {
    r = r.substr(1, r.size() - 2);
  }
  return r;
}

std::string word_pow(const std::string& w, unsigned long k) {
  std::string out;
  out.reserve(w.size() * k);
  for (unsigned long i = 0; i < k; ++i) out += w;
  return out;
}

std::string rotate_left(const std::string& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  return w.substr(k) + w.substr(0, k);
}

std::vector<std::string> rotations(const std::string& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.push_back(rotate_left(w, k));
  return out;
}

std::string reversed(const std::string& w) { return std::string(w.rbegin(), w.rend()); }

std::string lex_least_rotation(const std::string& w) {
  std::string best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::string r = rotate_left(w, k);
    if (r < best) best = r;
  }
  return best;
}

std::string canonical_trace_key(const std::string& w) {
  if (w.empty()) return w;
  // Prefer the representative with the fewest inverse letters, so that
  // inverse-free classes keep an inverse-free canonical form; break ties
  // lexicographically. Inverse-letter count is rotation-invariant.
  auto caps = [](const std::string& s) {
    std::size_t c = 0;
    for (char ch : s) {
      if (ch == 'A' || ch == 'B') ++c;
    }
    return c;
  };
  std::string inv = word_inverse(w);
  std::string best = lex_least_rotation(w);
  std::size_t best_caps = caps(best);
  for (const std::string& v : {reversed(w), inv, reversed(inv)}) {
    std::string c = lex_least_rotation(v);
    std::size_t cc = caps(c);
    if (cc < best_caps || (cc == best_caps && c < best)) {
      best = c;
      best_caps = cc;
    }
  }
  return best;
}

std::pair<std::string, unsigned long> primitive_root(const std::string& w) {
  if (w.empty()) throw std::invalid_argument("primitive root of empty word");
  std::size_t n = w.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = (w[i] == w[i - p]);
    if (periodic) return {w.substr(0, p), n / p};
  }
  return {w, 1};  // unreachable: p = n always matches
}

std::vector<std::string> lyndon_words(std::size_t max_len) {
  if (max_len == 0) throw std::invalid_argument("lyndon_words: max_len must be >= 1");
  std::vector<std::string> out;
  std::string w = "a";
  while (!w.empty()) {
    out.push_back(w);
    // successor: extend cyclically to max_len, strip trailing b, bump last a
    std::string t;
    t.reserve(max_len);
    for (std::size_t i = 0; i < max_len; ++i) t += w[i % w.size()];
    while (!t.empty() && t.back() == 'b') t.pop_back();
    if (!t.empty()) t.back() = 'b';
    w = t;
  }
  return out;
}

std::optional<std::vector<unsigned long>> syllabic_decomposition(const std::string& w) {
  require_positive_word(w);
  std::size_t n = w.size();
  bool has_a = w.find('a') != std::string::npos;
  bool has_b = w.find('b') != std::string::npos;
  if (!has_a || !has_b) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] == 'a' && w[(i + 1) % n] == 'a') return std::nullopt;
  }
  std::string r = lex_least_rotation(w);
  // r starts with a, ends with b, and has no aa anywhere
  std::vector<unsigned long> ks;
  std::size_t i = 0;
  while (i < n) {
    // r[i] == 'a'
    std::size_t j = i + 1;
    while (j < n && r[j] == 'b') ++j;
    ks.push_back(j - i - 1);
    i = j;
  }
  return ks;
}

bool is_subword(const std::string& u, const std::string& w) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < w.size() && i < u.size(); ++j) {
    if (w[j] == u[i]) ++i;
  }
  return i == u.size();
}

std::size_t count_letter(const std::string& w, char c) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), c));
}

}  // namespace sl2jsr
