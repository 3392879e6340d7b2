#pragma once

// Free Lie superalgebra slices inside the tensor algebra on the f_i, plus
// the e_i collapse operator that drives both the contravariant root
// multiplicity ranks and the Shapovalov ranks.

#include <map>
#include <vector>

#include "superdual/qmatrix.hpp"
#include "superdual/sgcm.hpp"

namespace superdual::oracle {

using Word = std::vector<int>;          // generator indices
using WordCombo = std::map<Word, Rat>;  // element of the tensor algebra slice

// All words with the given content (counts per generator), in lex order.
std::vector<Word> words_of_content(const std::vector<long>& content);

// Lyndon words of the given content.
std::vector<Word> lyndon_words(const std::vector<long>& content);

// Expansion into the tensor algebra of the standard (Lyndon-factorization)
// bracketing of a Lyndon word, with super signs from the given parities.
WordCombo lyndon_bracket_expansion(const Word& w, const std::vector<cartan::Parity>& parity);

// Basis of the free Lie superalgebra component of the given multidegree:
// standard bracketings of Lyndon words, plus [b,b] for odd Lyndon b at the
// doubled degree.
std::vector<WordCombo> free_lie_slice(const std::vector<long>& content,
                                      const std::vector<cartan::Parity>& parity);

// e_i acting on a word in the f's, with [e_i, f_i] collapsed to the scalar
// (shift - sum of a[i][j] over the suffix); shift = <lambda, alpha_i^vee>.
// With shift = 0 and the word inside a Lie element of height >= 2 this is
// ad(e_i); with general shift it is the Verma action with pi extracted at
// the empty word.
WordCombo e_collapse(const Word& w, int i, const cartan::Sgcm& a,
                     const std::vector<cartan::Parity>& parity, const Rat& shift);

}  // namespace superdual::oracle
