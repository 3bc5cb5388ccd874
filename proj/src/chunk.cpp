#include "textlift/chunk.hpp"

#include "textlift/errors.hpp"
#include "textlift/jsonl.hpp"
#include "textlift/text.hpp"

#include <unordered_set>

namespace textlift {

std::vector<TokenSpan> CjkWordTokenCounter::tokenize(std::string_view input) const {
    std::vector<TokenSpan> spans;
    const auto cps = text::decode_utf8(input);
    size_t i = 0;
    while (i < cps.size()) {
        const auto& c = cps[i];
        if (text::is_cjk(c.cp)) {
            spans.push_back({c.byte_offset, c.byte_offset + c.byte_len});
            ++i;
        } else if (text::is_word_char(c.cp)) {
            size_t j = i;
            while (j < cps.size() && text::is_word_char(cps[j].cp) && !text::is_cjk(cps[j].cp))
                ++j;
            spans.push_back({c.byte_offset, cps[j - 1].byte_offset + cps[j - 1].byte_len});
            i = j;
        } else if (text::is_space(c.cp)) {
            ++i;
        } else {
            // Punctuation and symbols count as one token each.
            spans.push_back({c.byte_offset, c.byte_offset + c.byte_len});
            ++i;
        }
    }
    return spans;
}

void ChunkParams::validate() const {
    if (chunk_size < 1)
        throw config_error("InvalidChunkParams", "chunk_size must be >= 1");
    if (overlap >= chunk_size)
        throw config_error("InvalidChunkParams",
                           "overlap (" + std::to_string(overlap) + ") must be < chunk_size (" +
                               std::to_string(chunk_size) + ")");
}

std::vector<ChunkBody> chunk_page(std::string_view input, const ChunkParams& params,
                                  const TokenCounter& counter) {
    params.validate();
    const auto tokens = counter.tokenize(input);
    const size_t n = tokens.size();
    std::vector<ChunkBody> out;
    if (n == 0)
        return out;

    // Byte position where the window of tokens [a, b) begins/ends. The first
    // window absorbs any leading separators and each window runs up to the
    // start of the token after it, so consecutive de-overlapped windows abut.
    auto span_begin = [&](size_t a) -> size_t {
        return a == 0 ? 0 : tokens[a].byte_start;
    };
    auto span_end = [&](size_t b) -> size_t {
        return b == n ? input.size() : tokens[b].byte_start;
    };

    const size_t stride = params.chunk_size - params.overlap;
    size_t start = 0;
    while (true) {
        const size_t end = std::min(start + params.chunk_size, n);
        ChunkBody body;
        body.token_start = start;
        body.token_end = end;
        const size_t lo = span_begin(start);
        body.text = std::string(input.substr(lo, span_end(end) - lo));
        out.push_back(std::move(body));
        if (end == n)
            break;
        start += stride;
    }
    return out;
}

std::vector<Chunk> chunk_corpus(
    const std::map<std::pair<std::string, uint32_t>, std::string>& enhanced_pages,
    const ChunkParams& params, const TokenCounter& counter) {
    std::vector<Chunk> out;
    std::unordered_set<std::string> seen_ids;
    for (const auto& [key, page_text] : enhanced_pages) {
        const auto& [pid, page_no] = key;
        const auto bodies = chunk_page(page_text, params, counter);
        for (size_t ordinal = 0; ordinal < bodies.size(); ++ordinal) {
            Chunk c;
            c.chunk_id =
                pid + "#p" + std::to_string(page_no) + "." + std::to_string(ordinal);
            c.pid = pid;
            c.page_start = page_no;
            c.page_end = page_no;
            c.token_start = bodies[ordinal].token_start;
            c.token_end = bodies[ordinal].token_end;
            c.text = bodies[ordinal].text;
            if (!seen_ids.insert(c.chunk_id).second)
                throw internal_error("ChunkIdCollision", c.chunk_id);
            out.push_back(std::move(c));
        }
    }
    return out;
}

static constexpr const char* kChunkFormat = "textlift-chunks/v1";

void save_chunks(const std::filesystem::path& path, const std::vector<Chunk>& chunks,
                 const ChunkParams& params, const TokenCounter& counter) {
    std::vector<jsonl::ojson> records;
    records.reserve(chunks.size() + 1);
    jsonl::ojson header;
    header["format"] = kChunkFormat;
    header["token_counter"] = counter.name();
    header["chunk_size"] = params.chunk_size;
    header["overlap"] = params.overlap;
    records.push_back(std::move(header));
    for (const auto& c : chunks) {
        jsonl::ojson rec;
        rec["chunk_id"] = c.chunk_id;
        rec["pid"] = c.pid;
        rec["page_start"] = c.page_start;
        rec["page_end"] = c.page_end;
        rec["token_start"] = c.token_start;
        rec["token_end"] = c.token_end;
        rec["text"] = c.text;
        records.push_back(std::move(rec));
    }
    jsonl::write_all(path, records);
}

ChunkStore load_chunks(const std::filesystem::path& path) {
    ChunkStore store;
    bool have_header = false;
    jsonl::for_each_record(path, [&](const jsonl::json& rec, size_t line_no) {
        if (!have_header) {
            if (!rec.contains("format") || rec.at("format") != kChunkFormat)
                throw data_error("BadChunkStoreHeader",
                                 path.string() + ": expected format " + kChunkFormat);
            store.counter_name = rec.at("token_counter").get<std::string>();
            store.params.chunk_size = rec.at("chunk_size").get<size_t>();
            store.params.overlap = rec.at("overlap").get<size_t>();
            have_header = true;
            return;
        }
        try {
            Chunk c;
            c.chunk_id = rec.at("chunk_id").get<std::string>();
            c.pid = rec.at("pid").get<std::string>();
            c.page_start = rec.at("page_start").get<uint32_t>();
            c.page_end = rec.at("page_end").get<uint32_t>();
            c.token_start = rec.at("token_start").get<uint64_t>();
            c.token_end = rec.at("token_end").get<uint64_t>();
            c.text = rec.at("text").get<std::string>();
            store.chunks.push_back(std::move(c));
        } catch (const jsonl::json::exception& e) {
            throw data_error("MalformedRecord",
                             path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    });
    if (!have_header)
        throw data_error("BadChunkStoreHeader", path.string() + ": empty store");
    return store;
}

} // namespace textlift
