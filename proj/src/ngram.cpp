#include "memetrack/ngram.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "memetrack/parallel.hpp"

namespace memetrack {

std::int64_t OccurrenceIndex::PubEntry::find(std::uint32_t cand) const {
    auto it = std::lower_bound(cands.begin(), cands.end(), cand);
    if (it == cands.end() || *it != cand) return -1;
    return it - cands.begin();
}

std::size_t ngram_length(const std::string& key) {
    if (key.empty()) return 0;
    return static_cast<std::size_t>(std::count(key.begin(), key.end(), ' ')) + 1;
}

TokenizedCorpus tokenize_corpus(const Corpus& corpus, const TokenizeConfig& config, unsigned threads) {
    const std::size_t n = corpus.size();
    std::vector<TokenSeq> seqs(n);
    parallel_chunks(n, threads, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) seqs[p] = tokenize(corpus.pubs[p].text, config);
    });

    // interning is sequential so ids depend only on corpus order
    TokenizedCorpus tc;
    tc.config = config;
    tc.tokens.resize(n);
    tc.surface.resize(n);
    std::unordered_map<std::string, std::uint32_t> token_ids;
    std::unordered_map<std::string, std::uint32_t> surface_ids;
    auto intern = [](std::unordered_map<std::string, std::uint32_t>& ids, std::vector<std::string>& vocab,
                     std::string& s) {
        auto [it, inserted] = ids.emplace(std::move(s), static_cast<std::uint32_t>(vocab.size()));
        if (inserted) vocab.push_back(it->first);
        return it->second;
    };
    for (std::size_t p = 0; p < n; ++p) {
        auto& seq = seqs[p];
        tc.tokens[p].reserve(seq.tokens.size());
        tc.surface[p].reserve(seq.tokens.size());
        for (std::size_t k = 0; k < seq.tokens.size(); ++k) {
            tc.tokens[p].push_back(intern(token_ids, tc.vocab, seq.tokens[k]));
            tc.surface[p].push_back(intern(surface_ids, tc.surface_vocab, seq.surface[k]));
        }
    }
    return tc;
}

namespace {

// All n-grams common to the citing/cited token pair, found by extending
// diagonal match runs; every common n-gram is a window of some maximal run.
void collect_edge_common(const std::vector<std::uint32_t>& citing, const std::vector<std::uint32_t>& cited,
                         std::size_t max_n, std::unordered_set<std::string>& sink,
                         const std::vector<std::string>& vocab) {
    if (citing.empty() || cited.empty()) return;
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> cited_positions;
    for (std::uint32_t j = 0; j < cited.size(); ++j) cited_positions[cited[j]].push_back(j);

    std::unordered_set<std::uint64_t> seen_windows;  // (i,len) packed; dedups runs sharing windows
    for (std::uint32_t i = 0; i < citing.size(); ++i) {
        auto it = cited_positions.find(citing[i]);
        if (it == cited_positions.end()) continue;
        for (std::uint32_t j : it->second) {
            if (i > 0 && j > 0 && citing[i - 1] == cited[j - 1]) continue;  // not a run start
            std::size_t len = 0;
            while (i + len < citing.size() && j + len < cited.size() && citing[i + len] == cited[j + len]) ++len;
            const std::size_t cap = max_n == 0 ? len : std::min(len, max_n);
            for (std::size_t off = 0; off < len; ++off) {
                const std::size_t max_here = std::min(cap, len - off);
                for (std::size_t g = 1; g <= max_here; ++g) {
                    const std::uint64_t packed = (static_cast<std::uint64_t>(i + off) << 32) | g;
                    if (!seen_windows.insert(packed).second) continue;
                    std::string key;
                    for (std::size_t k = 0; k < g; ++k) {
                        if (k > 0) key += ' ';
                        key += vocab[citing[i + off + k]];
                    }
                    sink.insert(std::move(key));
                }
            }
        }
    }
}

}  // namespace

CandidateSet enumerate_candidates(const TokenizedCorpus& tc, const Corpus& corpus, std::size_t max_n,
                                  unsigned threads) {
    const std::size_t n = corpus.size();
    const unsigned workers = clamp_threads(threads);
    std::vector<std::unordered_set<std::string>> partial(workers);
    parallel_chunks(n, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            for (std::uint32_t q : corpus.pubs[p].refs) {
                collect_edge_common(tc.tokens[p], tc.tokens[q], max_n, partial[w], tc.vocab);
            }
        }
    });

    CandidateSet cs;
    std::unordered_set<std::string> merged;
    for (auto& part : partial) {
        merged.insert(std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    cs.keys.assign(std::make_move_iterator(merged.begin()), std::make_move_iterator(merged.end()));
    std::sort(cs.keys.begin(), cs.keys.end());

    std::unordered_map<std::string, std::uint32_t> token_ids;
    token_ids.reserve(tc.vocab.size());
    for (std::uint32_t t = 0; t < tc.vocab.size(); ++t) token_ids.emplace(tc.vocab[t], t);
    cs.token_seqs.resize(cs.keys.size());
    cs.by_key.reserve(cs.keys.size());
    for (std::uint32_t c = 0; c < cs.keys.size(); ++c) {
        cs.by_key.emplace(cs.keys[c], c);
        for (auto& token : split_key(cs.keys[c])) cs.token_seqs[c].push_back(token_ids.at(token));
    }
    return cs;
}

namespace {

// Token-level trie over candidate sequences; matching walks each start
// position forward while prefixes stay alive.
struct CandidateTrie {
    struct Node {
        std::unordered_map<std::uint32_t, std::uint32_t> children;
        std::int64_t candidate = -1;
    };
    std::vector<Node> nodes;

    explicit CandidateTrie(const CandidateSet& cs) {
        nodes.emplace_back();
        for (std::uint32_t c = 0; c < cs.size(); ++c) {
            std::uint32_t cur = 0;
            for (std::uint32_t token : cs.token_seqs[c]) {
                auto [it, inserted] = nodes[cur].children.emplace(token, static_cast<std::uint32_t>(nodes.size()));
                if (inserted) nodes.emplace_back();
                cur = it->second;
            }
            nodes[cur].candidate = c;
        }
    }
};

}  // namespace

OccurrenceIndex count_occurrences(const TokenizedCorpus& tc, const CandidateSet& candidates, unsigned threads) {
    const std::size_t n = tc.size();
    CandidateTrie trie(candidates);

    OccurrenceIndex index;
    index.per_pub.resize(n);
    parallel_chunks(n, threads, [&](unsigned, std::size_t begin, std::size_t end) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> hits;  // (candidate, position)
        for (std::size_t p = begin; p < end; ++p) {
            hits.clear();
            const auto& tokens = tc.tokens[p];
            for (std::uint32_t start = 0; start < tokens.size(); ++start) {
                std::uint32_t node = 0;
                for (std::uint32_t j = start; j < tokens.size(); ++j) {
                    auto it = trie.nodes[node].children.find(tokens[j]);
                    if (it == trie.nodes[node].children.end()) break;
                    node = it->second;
                    if (trie.nodes[node].candidate >= 0) {
                        hits.emplace_back(static_cast<std::uint32_t>(trie.nodes[node].candidate), start);
                    }
                }
            }
            std::sort(hits.begin(), hits.end());
            auto& entry = index.per_pub[p];
            for (std::size_t k = 0; k < hits.size();) {
                std::size_t k2 = k;
                while (k2 < hits.size() && hits[k2].first == hits[k].first) ++k2;
                entry.cands.push_back(hits[k].first);
                entry.counts.push_back(static_cast<std::uint32_t>(k2 - k));
                entry.positions.emplace_back();
                for (std::size_t t = k; t < k2; ++t) entry.positions.back().push_back(hits[t].second);
                k = k2;
            }
        }
    });

    index.carriers.resize(candidates.size());
    for (std::uint32_t p = 0; p < n; ++p) {
        for (std::uint32_t cand : index.per_pub[p].cands) index.carriers[cand].push_back(p);
    }
    return index;
}

std::vector<std::string> display_forms(const TokenizedCorpus& tc, const CandidateSet& candidates,
                                       const OccurrenceIndex& index) {
    std::vector<std::string> forms(candidates.size());
    std::vector<std::map<std::string, std::uint64_t>> tallies(candidates.size());
    for (std::uint32_t p = 0; p < tc.size(); ++p) {
        const auto& entry = index.per_pub[p];
        for (std::size_t k = 0; k < entry.cands.size(); ++k) {
            const std::uint32_t cand = entry.cands[k];
            const std::size_t len = candidates.token_seqs[cand].size();
            for (std::uint32_t pos : entry.positions[k]) {
                std::string form;
                for (std::size_t t = 0; t < len; ++t) {
                    if (t > 0) form += ' ';
                    form += tc.surface_vocab[tc.surface[p][pos + t]];
                }
                ++tallies[cand][std::move(form)];
            }
        }
    }
    for (std::uint32_t c = 0; c < candidates.size(); ++c) {
        const auto& tally = tallies[c];
        std::uint64_t best = 0;
        for (const auto& [form, count] : tally) {
            if (count > best) {
                best = count;
                forms[c] = form;
            }
        }
        if (tally.empty()) forms[c] = candidates.keys[c];
    }
    return forms;
}

}  // namespace memetrack
