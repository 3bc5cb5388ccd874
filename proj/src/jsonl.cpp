#include "textlift/jsonl.hpp"

#include "textlift/errors.hpp"

#include <fstream>
#include <sstream>

namespace textlift::jsonl {

namespace fs = std::filesystem;

void for_each_record(const fs::path& path,
                     const std::function<void(const json&, size_t)>& fn) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw data_error("FileOpen", "cannot open " + path.string());
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::parse_error& e) {
            throw data_error("MalformedRecord",
                             path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
        fn(rec, line_no);
    }
}

std::vector<json> read_all(const fs::path& path) {
    std::vector<json> out;
    for_each_record(path, [&](const json& rec, size_t) { out.push_back(rec); });
    return out;
}

void write_all(const fs::path& path, const std::vector<ojson>& records) {
    std::ostringstream os;
    for (const auto& rec : records)
        os << rec.dump() << '\n';
    write_file_atomic(path, os.str());
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw data_error("FileOpen", "cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file_atomic(const fs::path& path, std::string_view content) {
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw data_error("FileOpen", "cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out)
            throw data_error("FileWrite", "short write to " + tmp.string());
    }
    fs::rename(tmp, path);
}

} // namespace textlift::jsonl
