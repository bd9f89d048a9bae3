#pragma once

#include <string>
#include <string_view>

namespace leidenbench::detail {

inline bool needs_quoting(std::string_view field, char delimiter) {
    for (char c : field) {
        if (c == delimiter || c == '"' || c == '\n' || c == '\r') return true;
    }
    return false;
}

// RFC 4180 escaping: wrap in quotes when needed, double embedded quotes.
inline std::string csv_field(std::string_view field, char delimiter) {
    if (!needs_quoting(field, delimiter)) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n\f\v";
    auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) return {};
    auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

}  // namespace leidenbench::detail
