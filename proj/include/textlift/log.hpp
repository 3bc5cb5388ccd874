#pragma once

#include <string_view>

namespace textlift::log {

enum class Severity { info, warn, error };

/// One structured line on stderr: severity, stage, locus, message.
void emit(Severity sev, std::string_view stage, std::string_view locus,
          std::string_view message);

inline void info(std::string_view stage, std::string_view locus, std::string_view msg) {
    emit(Severity::info, stage, locus, msg);
}
inline void warn(std::string_view stage, std::string_view locus, std::string_view msg) {
    emit(Severity::warn, stage, locus, msg);
}
inline void error(std::string_view stage, std::string_view locus, std::string_view msg) {
    emit(Severity::error, stage, locus, msg);
}

} // namespace textlift::log
