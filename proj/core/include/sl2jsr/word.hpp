#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sl2jsr {

// Words are plain strings: positive words over {a, b}, group words over
// {a, b, A, B} with A = a^-1 and B = b^-1.

bool is_positive_word(const std::string& w);
bool is_group_word(const std::string& w);

// Throws ParseError on anything but a nonempty string over {a, b}
// (or over {a, b, A, B} for the group variant).
void require_positive_word(const std::string& w);
void require_group_word(const std::string& w);

char letter_inverse(char c);

// Group inverse: reversed string of letter inverses.
std::string word_inverse(const std::string& w);

// Removes adjacent letter-inverse pairs until none remain. May return "".
std::string free_reduce(const std::string& w);

// Freely reduces, then strips matching inverse letters from both ends.
std::string cyclic_reduce(const std::string& w);

std::string word_pow(const std::string& w, unsigned long k);

std::string rotate_left(const std::string& w, std::size_t k);
std::vector<std::string> rotations(const std::string& w);
std::string reversed(const std::string& w);
std::string lex_least_rotation(const std::string& w);

// Least string among all rotations of w, its reversal, its group inverse,
// and the reversal of its inverse. Words related by these moves evaluate to
// matrices with equal traces, so this is the memoization key for traces.
std::string canonical_trace_key(const std::string& w);

// Shortest u and largest k with w = u^k.
std::pair<std::string, unsigned long> primitive_root(const std::string& w);

// All Lyndon words over a < b of length <= max_len, lexicographically ordered.
std::vector<std::string> lyndon_words(std::size_t max_len);

// If some rotation of w is a concatenation of blocks a·b^k (k >= 1), the
// exponent list of the lexicographically least such rotation; otherwise
// nullopt (w has a cyclic occurrence of aa, or is a power of one letter).
std::optional<std::vector<unsigned long>> syllabic_decomposition(const std::string& w);

// Scattered-subsequence test: u embeds in w preserving order.
bool is_subword(const std::string& u, const std::string& w);

std::size_t count_letter(const std::string& w, char c);

}  // namespace sl2jsr
