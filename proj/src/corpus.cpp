#include "memetrack/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "memetrack/errors.hpp"

namespace memetrack {
namespace {

using nlohmann::json;

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

int parse_component(std::string_view s, int lo, int hi, const std::string& what) {
    require(all_digits(s), "invalid date component '", std::string(s), "' in ", what);
    int v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    require(v >= lo && v <= hi, "date component out of range in ", what);
    return v;
}

std::string two_digits(int v) {
    std::string s = std::to_string(v);
    return v < 10 ? "0" + s : s;
}

RawRecord parse_record(const std::string& line, std::size_t line_no) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        fail("line ", line_no, ": malformed record: ", e.what());
    }
    require(j.is_object(), "line ", line_no, ": malformed record: not a JSON object");

    RawRecord rec;
    auto get_string = [&](const char* field, bool required) -> std::string {
        auto it = j.find(field);
        if (it == j.end() || it->is_null()) {
            require(!required, "line ", line_no, ": missing required field '", field, "'");
            return {};
        }
        require(it->is_string(), "line ", line_no, ": field '", field, "' must be a string");
        return it->get<std::string>();
    };
    rec.id = get_string("id", true);
    require(!rec.id.empty(), "line ", line_no, ": field 'id' must be non-empty");
    rec.date = get_string("date", true);
    rec.title = get_string("title", false);
    rec.abstract_text = get_string("abstract", false);
    rec.journal = get_string("journal", false);
    if (auto it = j.find("refs"); it != j.end() && !it->is_null()) {
        require(it->is_array(), "line ", line_no, ": field 'refs' must be an array");
        for (const auto& r : *it) {
            require(r.is_string(), "line ", line_no, ": field 'refs' must contain strings");
            rec.refs.push_back(r.get<std::string>());
        }
    }
    try {
        rec.date = normalize_date(rec.date);
    } catch (const Error& e) {
        fail("line ", line_no, ": field 'date': ", e.what());
    }
    return rec;
}

std::string json_escape(const std::string& s) {
    return json(s).dump();
}

}  // namespace

std::string normalize_date(const std::string& iso_date) {
    // strip a time suffix if present
    std::string d = iso_date;
    if (auto t = d.find('T'); t != std::string::npos) d = d.substr(0, t);
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= d.size()) {
        auto dash = d.find('-', pos);
        if (dash == std::string::npos) {
            parts.push_back(d.substr(pos));
            break;
        }
        parts.push_back(d.substr(pos, dash - pos));
        pos = dash + 1;
    }
    require(!parts.empty() && parts.size() <= 3, "unparseable date '", iso_date, "'");
    require(parts[0].size() == 4, "year must have four digits in '", iso_date, "'");
    int year = parse_component(parts[0], 0, 9999, "'" + iso_date + "'");
    int month = parts.size() > 1 ? parse_component(parts[1], 1, 12, "'" + iso_date + "'") : 1;
    int day = parts.size() > 2 ? parse_component(parts[2], 1, 31, "'" + iso_date + "'") : 1;
    std::string y = std::to_string(year);
    y.insert(y.begin(), 4 - y.size(), '0');
    return y + "-" + two_digits(month) + "-" + two_digits(day);
}

Corpus build_corpus(std::vector<RawRecord> records) {
    // chronological order: (date, id), ids unique
    std::stable_sort(records.begin(), records.end(), [](const RawRecord& a, const RawRecord& b) {
        if (a.date != b.date) return a.date < b.date;
        return a.id < b.id;
    });

    std::unordered_map<std::string, std::uint32_t> index;
    index.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto [it, inserted] = index.emplace(records[i].id, static_cast<std::uint32_t>(i));
        require(inserted, "duplicate publication id '", records[i].id, "'");
    }

    Corpus corpus;
    corpus.pubs.resize(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        RawRecord& rec = records[i];
        Publication& pub = corpus.pubs[i];
        pub.id = std::move(rec.id);
        pub.date = std::move(rec.date);
        pub.journal = std::move(rec.journal);
        pub.chrono_index = static_cast<std::uint32_t>(i);
        if (rec.title.empty()) {
            pub.text = std::move(rec.abstract_text);
        } else if (rec.abstract_text.empty()) {
            pub.text = std::move(rec.title);
        } else {
            pub.text = rec.title + " " + rec.abstract_text;
        }

        std::set<std::string> unique_refs(rec.refs.begin(), rec.refs.end());
        unique_refs.erase(pub.id);  // no self-loops
        for (const auto& ref_id : unique_refs) {
            auto it = index.find(ref_id);
            if (it == index.end()) {
                ++corpus.dropped_refs;
                continue;
            }
            pub.refs.push_back(it->second);
        }
        std::sort(pub.refs.begin(), pub.refs.end());
        corpus.edge_count += pub.refs.size();
    }
    return corpus;
}

Corpus load_corpus(const std::string& path, const IngestConfig&) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open corpus file '", path, "'");

    std::vector<RawRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (blank) continue;
        records.push_back(parse_record(line, line_no));
    }
    return build_corpus(std::move(records));
}

SummaryReport corpus_summary(const Corpus& corpus) {
    SummaryReport report;
    report.publications = corpus.size();
    report.edges = corpus.edge_count;
    report.dropped_refs = corpus.dropped_refs;
    if (!corpus.pubs.empty()) {
        report.first_date = corpus.pubs.front().date;
        report.last_date = corpus.pubs.back().date;
    }
    std::map<std::string, std::size_t> journals;
    for (const auto& pub : corpus.pubs) {
        if (!pub.journal.empty()) ++journals[pub.journal];
    }
    report.journal_counts.assign(journals.begin(), journals.end());
    return report;
}

void write_canonical_jsonl(const Corpus& corpus, std::ostream& out) {
    for (const auto& pub : corpus.pubs) {
        out << "{\"id\":" << json_escape(pub.id) << ",\"date\":" << json_escape(pub.date)
            << ",\"title\":" << json_escape(pub.text);
        out << ",\"refs\":[";
        std::vector<std::string> ref_ids;
        ref_ids.reserve(pub.refs.size());
        for (auto r : pub.refs) ref_ids.push_back(corpus.pubs[r].id);
        std::sort(ref_ids.begin(), ref_ids.end());
        for (std::size_t k = 0; k < ref_ids.size(); ++k) {
            if (k > 0) out << ',';
            out << json_escape(ref_ids[k]);
        }
        out << ']';
        if (!pub.journal.empty()) out << ",\"journal\":" << json_escape(pub.journal);
        out << "}\n";
    }
}

std::string canonical_jsonl(const Corpus& corpus) {
    std::ostringstream os;
    write_canonical_jsonl(corpus, os);
    return os.str();
}

}  // namespace memetrack
