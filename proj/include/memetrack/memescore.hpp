#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "memetrack/corpus.hpp"
#include "memetrack/ngram.hpp"

namespace memetrack {

// The four inheritance counts plus the carrier count for one n-gram.
//   d_mm:      carriers citing at least one carrier (free-riding discount
//              applies here and only here)
//   d_to_m:    all publications citing at least one carrier
//   d_m_notm:  carriers citing no carrier
//   d_to_notm: all publications citing no carrier
struct MemeCounts {
    std::uint64_t d_mm = 0;
    std::uint64_t d_to_m = 0;
    std::uint64_t d_m_notm = 0;
    std::uint64_t d_to_notm = 0;
    std::uint64_t carriers = 0;

    bool operator==(const MemeCounts&) const = default;
};

struct MemeStats {
    double frequency = 0.0;    // carriers / corpus size
    double propagation = 0.0;  // sticking over sparking, delta-noised
    double score = 0.0;        // frequency * propagation
    double delta = 0.0;
};

struct ScoreConfig {
    double delta = 3.0;
    bool discount_free_riding = true;
    TokenizeConfig tokenize;
    std::size_t max_n = 0;  // 0 = unlimited
    unsigned threads = 1;
};

struct ScoreEntry {
    std::string key;
    std::string display;
    std::uint32_t n = 0;
    MemeCounts counts;
    MemeStats stats;
};

// Ranked by (score desc, frequency desc, key asc) — a total order, so tables
// serialize identically run to run. Quantiles are nearest-rank over the
// nonzero scores only.
struct ScoreTable {
    std::vector<ScoreEntry> entries;
    std::vector<std::pair<double, double>> quantiles;  // (level, score)
    std::size_t nonzero_count = 0;
    std::size_t corpus_size = 0;
    ScoreConfig config;

    const ScoreEntry* find(const std::string& key) const;
    // 1-based rank of key, 0 when absent
    std::size_t rank_of(const std::string& key) const;
};

inline constexpr double kQuantileLevels[] = {0.5, 0.9, 0.99, 0.999};

// delta = 0 gives the exact ratio form and requires d_to_m > 0 and
// d_m_notm > 0; with delta > 0 every n-gram has a finite score.
double propagation_score(const MemeCounts& counts, double delta);

double meme_score(double frequency, double propagation);

// Definitional single-n-gram counting (linear scans over the corpus).
// `key` must be a known candidate.
MemeCounts inheritance_counts(const Corpus& corpus, const TokenizedCorpus& tc, const CandidateSet& candidates,
                              const OccurrenceIndex& index, const std::string& key, bool discount_free_riding);

// True when every occurrence of candidate `cand` in `pub` and in each of
// `cited_carriers` sits inside the same longer n-gram, found by growing the
// candidate's context wherever occurrence counts match.
bool free_riding_excluded(const TokenizedCorpus& tc, const CandidateSet& candidates, const OccurrenceIndex& index,
                          std::uint32_t cand, std::uint32_t pub, const std::vector<std::uint32_t>& cited_carriers);

// Full pipeline: candidates -> occurrence index -> counts -> ranked table.
ScoreTable score_corpus(const Corpus& corpus, const ScoreConfig& config);

// Exhaustive reference implementation: enumerates every n-gram of every
// publication with no candidate restriction and counts by direct scans.
// Refuses corpora above `size_bound`.
ScoreTable brute_force_oracle(const Corpus& corpus, const ScoreConfig& config, std::size_t size_bound = 200);

// Shared ranking/quantile assembly for anything that produces score entries.
void finalize_table(ScoreTable& table);

std::vector<double> nonzero_scores_ascending(const ScoreTable& table);
double median_nonzero_score(const ScoreTable& table);

}  // namespace memetrack
