#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gpab/words.hpp"

namespace gpab::testing {

// Canonical representative by brute force: the closure of the word under swapping adjacent
// commuting syllables and merging adjacent syllables on the same vertex, reduced to the
// shortest, then lexicographically least, word. Exponents of finite-order vertices are taken
// in [1, o). Independent of the library's normal form code.
Word rewrite_canonical(const LabeledGraph& g, const Word& w);

// Letters used by the exhaustive suites: v^{±1} for infinite vertices, v^1 and v^{o-1} otherwise.
std::vector<Syllable> small_alphabet(const LabeledGraph& g);

// Calls f on every word of at most max_len letters over the alphabet whose neighbouring
// letters sit on different vertices.
void for_each_word(const std::vector<Syllable>& alphabet, int max_len, const std::function<void(const Word&)>& f);

// Searches conjugators c (words of at most max_len letters) with c x c^-1 = y.
std::optional<Word> brute_conjugator(const GroupElement& x, const GroupElement& y, int max_len);

}  // namespace gpab::testing
