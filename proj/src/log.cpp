#include "textlift/log.hpp"

#include <iostream>
#include <mutex>

namespace textlift::log {

namespace {
std::mutex g_mutex;

const char* tag(Severity sev) {
    switch (sev) {
    case Severity::info: return "INFO";
    case Severity::warn: return "WARN";
    case Severity::error: return "ERROR";
    }
    return "?";
}
} // namespace

void emit(Severity sev, std::string_view stage, std::string_view locus,
          std::string_view message) {
    std::lock_guard<std::mutex> lock(g_mutex);
    std::cerr << "[" << tag(sev) << "] " << stage;
    if (!locus.empty())
        std::cerr << " " << locus;
    std::cerr << ": " << message << "\n";
}

} // namespace textlift::log
