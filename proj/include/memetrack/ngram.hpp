#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "memetrack/corpus.hpp"
#include "memetrack/tokenize.hpp"

namespace memetrack {

// Token-interned view of a corpus. tokens[p] are canonical token ids for
// publication p; surface[p] the aligned pre-fold spelling ids.
struct TokenizedCorpus {
    TokenizeConfig config;
    std::vector<std::vector<std::uint32_t>> tokens;
    std::vector<std::vector<std::uint32_t>> surface;
    std::vector<std::string> vocab;          // token id -> canonical spelling
    std::vector<std::string> surface_vocab;  // surface id -> original spelling

    std::size_t size() const { return tokens.size(); }
};

TokenizedCorpus tokenize_corpus(const Corpus& corpus, const TokenizeConfig& config, unsigned threads = 1);

// Candidates are exactly the n-grams that occur in some publication and in
// at least one publication it cites: the only n-grams whose d_mm can be
// nonzero, hence the only ones that can score. Ids follow ascending key
// order, which makes every later per-candidate loop deterministic.
struct CandidateSet {
    std::vector<std::string> keys;                         // id -> canonical key
    std::vector<std::vector<std::uint32_t>> token_seqs;    // id -> token ids
    std::unordered_map<std::string, std::uint32_t> by_key; // key -> id

    std::size_t size() const { return keys.size(); }
    // -1 when unknown
    std::int64_t find(const std::string& key) const {
        auto it = by_key.find(key);
        return it == by_key.end() ? -1 : static_cast<std::int64_t>(it->second);
    }
};

// max_n == 0 means unlimited length (the default).
CandidateSet enumerate_candidates(const TokenizedCorpus& tc, const Corpus& corpus, std::size_t max_n = 0,
                                  unsigned threads = 1);

// Per-publication occurrence counts and start positions for each candidate,
// plus per-candidate carrier postings.
struct OccurrenceIndex {
    struct PubEntry {
        std::vector<std::uint32_t> cands;                 // sorted candidate ids
        std::vector<std::uint32_t> counts;                // aligned occurrence counts
        std::vector<std::vector<std::uint32_t>> positions;  // aligned start positions

        std::int64_t find(std::uint32_t cand) const;
    };

    std::vector<PubEntry> per_pub;
    std::vector<std::vector<std::uint32_t>> carriers;  // cand -> carrier pubs, ascending

    std::uint64_t carrier_count(std::uint32_t cand) const { return carriers[cand].size(); }
};

OccurrenceIndex count_occurrences(const TokenizedCorpus& tc, const CandidateSet& candidates, unsigned threads = 1);

// Most frequent original spelling of each candidate (ties: lexicographically
// smallest), for the display_form output column.
std::vector<std::string> display_forms(const TokenizedCorpus& tc, const CandidateSet& candidates,
                                       const OccurrenceIndex& index);

std::size_t ngram_length(const std::string& key);

}  // namespace memetrack
