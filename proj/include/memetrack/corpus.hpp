#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace memetrack {

struct Publication {
    std::string id;
    std::string date;     // normalized to YYYY-MM-DD
    std::string text;     // title and abstract joined with one space
    std::string journal;  // empty when untagged
    std::vector<std::uint32_t> refs;  // resolved cited chrono indices, sorted, unique, no self
    std::uint32_t chrono_index = 0;
};

struct IngestConfig {};

// Publications sorted by chrono_index (== position). References are resolved
// to in-corpus indices; self-references and duplicates are gone, references
// to unknown ids are counted in dropped_refs and removed.
struct Corpus {
    std::vector<Publication> pubs;
    std::size_t edge_count = 0;
    std::size_t dropped_refs = 0;

    std::size_t size() const { return pubs.size(); }
};

struct SummaryReport {
    std::size_t publications = 0;
    std::size_t edges = 0;
    std::size_t dropped_refs = 0;
    std::string first_date;
    std::string last_date;
    std::vector<std::pair<std::string, std::size_t>> journal_counts;  // sorted by journal
};

// Raw record as it appears in the input file; used by the loader and by the
// synthetic generator, which fabricates records instead of reading them.
struct RawRecord {
    std::string id;
    std::string date;  // ISO-8601; year or year-month precision allowed
    std::string title;
    std::string abstract_text;
    std::vector<std::string> refs;
    std::string journal;
};

Corpus load_corpus(const std::string& path, const IngestConfig& config = {});

// Shared ingestion path: validation, self-loop removal, dedup, resolution,
// chronological indexing by (date, id).
Corpus build_corpus(std::vector<RawRecord> records);

SummaryReport corpus_summary(const Corpus& corpus);

// One JSON object per line, fields in fixed order, refs sorted,
// chronological record order. Loading the output reproduces the corpus
// exactly, so ingestion is idempotent in this form.
void write_canonical_jsonl(const Corpus& corpus, std::ostream& out);
std::string canonical_jsonl(const Corpus& corpus);

// "2005", "2005-07" and "2005-07-14[Txx:xx]" all normalize to a full date;
// missing month/day become January/1st. Throws on anything unparseable.
std::string normalize_date(const std::string& iso_date);

}  // namespace memetrack
