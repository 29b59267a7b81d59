#pragma once

#include <map>
#include <string>
#include <vector>

#include "jmcalc/halfint.hpp"
#include "jmcalc/segment.hpp"

namespace jmcalc {

// Exponent word, highest-weight letter first within each generating block.
using Word = std::vector<HalfInt>;
// Words with interleaving multiplicities.
using WordMultiset = std::map<Word, long>;

std::string word_str(const Word& w);

// Maximum total word length accepted by the word expansion. Defaults to 12,
// override with the JMCALC_WORD_CAP environment variable.
int word_cap();

// All interleavings of the given letter streams, counted with multiplicity.
// Equal letters in different streams still yield distinct interleavings.
WordMultiset shuffle_streams(const std::vector<Word>& streams);

// Number of interleavings of the streams equal to the given word.
long count_shuffles_equal(const Word& target, const std::vector<Word>& streams);

// Exponent words of the full torus-direction restriction of the
// representation induced from the given product of segment factors (times the
// anchor unit). Independent reference implementation: each factor splits into
// a kept top piece and a reflected bottom piece, and the resulting one-letter
// streams are interleaved in all possible ways.
WordMultiset minimal_jacquet_words(const std::vector<Segment>& factors);

// True when every nonempty prefix sum of the word is strictly positive.
// The square-integrability criterion on exponent words; empty word passes.
bool casselman_positive(const Word& w);

// True when at least one word in the multiset has no negative letter.
bool has_nonneg_word(const WordMultiset& words);

}  // namespace jmcalc
