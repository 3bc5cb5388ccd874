#pragma once

#include "textlift/chunk.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace textlift {

/// Word list for longest-match segmentation. Entries are NFC, non-empty,
/// whitespace-free.
struct Lexicon {
    std::set<std::string> entries;
    size_t max_entry_cps = 0; // longest entry, in codepoints

    static Lexicon from_words(const std::vector<std::string>& words);
    /// One word per line; '#' starts a comment line.
    static Lexicon load(const std::filesystem::path& path);

    std::string content_hash() const;
};

/// Greedy forward longest-match segmentation. Codepoints starting no lexicon
/// entry fall back to: lowercased non-CJK alphanumeric runs, dropped
/// whitespace/punctuation, or single-codepoint terms.
std::vector<std::string> segment(std::string_view input, const Lexicon& lexicon);

/// Segment with byte spans, for totality checks and diagnostics. `dropped`
/// spans cover separators so that term + dropped spans tile the input.
struct SegmentSpan {
    std::string term;
    uint32_t byte_start = 0;
    uint32_t byte_end = 0;
    bool dropped = false;
};
std::vector<SegmentSpan> segment_spans(std::string_view input, const Lexicon& lexicon);

struct Bm25Params {
    double k1 = 1.5;
    double b = 0.75;
};

struct Posting {
    std::string chunk_id;
    uint32_t tf = 0;
};

struct ScoredChunk {
    std::string chunk_id;
    double score = 0.0;
};

/// BM25 inverted index over chunks. Immutable once built; safe for
/// concurrent searches.
class SparseIndex {
public:
    SparseIndex() = default;

    static SparseIndex build(const std::vector<Chunk>& chunks, const Lexicon& lexicon,
                             const Bm25Params& params);

    /// Okapi BM25 with idf(t) = ln(1 + (N - df + 0.5) / (df + 0.5)).
    /// Results restricted to `candidates` when given; ties broken by
    /// ascending chunk_id; zero-score chunks omitted; at most k results.
    std::vector<ScoredChunk> search(
        std::string_view query, const Lexicon& lexicon, size_t k,
        const std::optional<std::unordered_set<std::string>>& candidates = std::nullopt) const;

    size_t doc_count() const { return doc_lengths_.size(); }
    double avgdl() const { return avgdl_; }
    const Bm25Params& params() const { return params_; }
    const std::map<std::string, std::vector<Posting>>& postings() const { return postings_; }
    const std::map<std::string, uint64_t>& doc_lengths() const { return doc_lengths_; }
    const std::string& lexicon_hash() const { return lexicon_hash_; }

    void save(const std::filesystem::path& path) const;
    /// Rejects stores whose lexicon hash differs from `lexicon`.
    static SparseIndex load(const std::filesystem::path& path, const Lexicon& lexicon);

private:
    std::map<std::string, std::vector<Posting>> postings_; // term -> (chunk, tf)
    std::map<std::string, uint64_t> doc_lengths_;
    double avgdl_ = 0.0;
    Bm25Params params_;
    std::string lexicon_hash_;
};

} // namespace textlift
