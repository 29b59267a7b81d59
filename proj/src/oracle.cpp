#include "jmcalc/oracle.hpp"

#include <fmt/format.h>

#include <cstdlib>
#include <numeric>

namespace jmcalc {
namespace {

// Interleave the tails words[k][pos[k]..] in every order, appending each
// completed word to `out`. Each distinct interleaving counts once even when
// two streams carry equal letters.
void shuffle_rec(const std::vector<Word>& words, std::vector<std::size_t>& pos,
                 Word& prefix, WordMultiset& out) {
    bool done = true;
    for (std::size_t k = 0; k < words.size(); ++k) {
        if (pos[k] < words[k].size()) {
            done = false;
            prefix.push_back(words[k][pos[k]]);
            ++pos[k];
            shuffle_rec(words, pos, prefix, out);
            --pos[k];
            prefix.pop_back();
        }
    }
    if (done) ++out[prefix];
}

void splits_rec(const std::vector<Segment>& factors, std::size_t idx,
                std::vector<Word>& streams, WordMultiset& out) {
    if (idx == factors.size()) {
        for (auto& [w, c] : shuffle_streams(streams)) out[w] += c;
        return;
    }
    const Segment& d = factors[idx];
    for (auto& [upper, lower] : comult_delta(d)) {
        // Kept top piece descends as-is, bottom piece reflects through zero.
        streams.push_back(upper.word());
        streams.push_back(lower.contragredient().word());
        splits_rec(factors, idx + 1, streams, out);
        streams.pop_back();
        streams.pop_back();
    }
}

}  // namespace

std::string word_str(const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += w[i].str();
    }
    return s + ")";
}

WordMultiset shuffle_streams(const std::vector<Word>& streams) {
    WordMultiset out;
    std::vector<std::size_t> pos(streams.size(), 0);
    Word prefix;
    shuffle_rec(streams, pos, prefix, out);
    return out;
}

// Multi-pointer count: advance any stream whose next letter matches the next
// target letter. Memoised on the consumed-prefix profile.
long count_shuffles_equal(const Word& target, const std::vector<Word>& streams) {
    std::size_t total = 0;
    for (auto& s : streams) total += s.size();
    if (total != target.size()) return 0;
    std::map<std::vector<std::size_t>, long> memo;
    std::vector<std::size_t> pos(streams.size(), 0);

    auto rec = [&](auto&& self, std::size_t depth) -> long {
        if (depth == target.size()) return 1;
        if (auto it = memo.find(pos); it != memo.end()) return it->second;
        long n = 0;
        for (std::size_t k = 0; k < streams.size(); ++k) {
            if (pos[k] < streams[k].size() && streams[k][pos[k]] == target[depth]) {
                ++pos[k];
                n += self(self, depth + 1);
                --pos[k];
            }
        }
        memo.emplace(pos, n);
        return n;
    };
    return rec(rec, 0);
}

int word_cap() {
    if (const char* env = std::getenv("JMCALC_WORD_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 12;
}

WordMultiset minimal_jacquet_words(const std::vector<Segment>& factors) {
    long total = 0;
    for (auto& d : factors) total += d.cardinality();
    if (total > word_cap())
        throw std::invalid_argument(
            fmt::format("word expansion of length {} exceeds cap {}", total, word_cap()));
    WordMultiset out;
    std::vector<Word> streams;
    splits_rec(factors, 0, streams, out);
    return out;
}

bool casselman_positive(const Word& w) {
    HalfInt sum(0);
    for (HalfInt x : w) {
        sum += x;
        if (sum <= HalfInt(0)) return false;
    }
    return true;
}

bool has_nonneg_word(const WordMultiset& words) {
    for (auto& [w, c] : words) {
        bool ok = true;
        for (HalfInt x : w)
            if (x < HalfInt(0)) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace jmcalc
