#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace textlift {

/// Half-open byte span of one token inside its source text.
struct TokenSpan {
    uint32_t byte_start = 0;
    uint32_t byte_end = 0;
};

/// Deterministic text -> token boundary function. Implementations must be
/// monotone: a prefix of the text ending on a token boundary tokenizes to a
/// prefix of the full token sequence.
class TokenCounter {
public:
    virtual ~TokenCounter() = default;
    /// Stable name + version; recorded in every chunk store and report.
    virtual std::string name() const = 0;
    virtual std::vector<TokenSpan> tokenize(std::string_view text) const = 0;

    size_t count(std::string_view text) const { return tokenize(text).size(); }
};

/// Default counter: one token per CJK codepoint, one per maximal run of
/// non-CJK letters/digits, one per punctuation codepoint. Whitespace is a
/// boundary and never a token.
class CjkWordTokenCounter final : public TokenCounter {
public:
    std::string name() const override { return "cjk-word/v1"; }
    std::vector<TokenSpan> tokenize(std::string_view text) const override;
};

struct ChunkParams {
    size_t chunk_size = 8000;
    size_t overlap = 500;

    void validate() const; // throws InvalidChunkParams
};

struct Chunk {
    std::string chunk_id; // pid + page range + ordinal
    std::string pid;
    uint32_t page_start = 0;
    uint32_t page_end = 0;
    uint64_t token_start = 0; // half-open, in units of the active counter
    uint64_t token_end = 0;
    std::string text;

    bool operator==(const Chunk&) const = default;
};

/// Window bodies for one page, before ids are attached.
struct ChunkBody {
    uint64_t token_start = 0;
    uint64_t token_end = 0;
    std::string text;

    bool operator==(const ChunkBody&) const = default;
};

/// Greedy fixed-stride windows of `chunk_size` tokens, stride
/// chunk_size - overlap; the final window may be shorter. A chunk's text is
/// the byte span from its first token through the bytes preceding the next
/// window's first token, so stripping overlaps and concatenating
/// reconstructs the page exactly.
std::vector<ChunkBody> chunk_page(std::string_view text, const ChunkParams& params,
                                  const TokenCounter& counter);

/// Pages are chunked independently; output ordered by (pid, page_no,
/// ordinal); chunk ids are deterministic and collision-free.
std::vector<Chunk> chunk_corpus(
    const std::map<std::pair<std::string, uint32_t>, std::string>& enhanced_pages,
    const ChunkParams& params, const TokenCounter& counter);

// Chunk store: header line {token counter, params}, then one record per chunk.
void save_chunks(const std::filesystem::path& path, const std::vector<Chunk>& chunks,
                 const ChunkParams& params, const TokenCounter& counter);

struct ChunkStore {
    std::string counter_name;
    ChunkParams params;
    std::vector<Chunk> chunks;
};

ChunkStore load_chunks(const std::filesystem::path& path);

} // namespace textlift
