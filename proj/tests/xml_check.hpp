#pragma once

// Tiny XML well-formedness check: balanced tags, quoted attributes, a single
// root element. Enough for the documents this project emits.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace xml_check {

inline bool well_formed(std::string_view doc) {
    std::vector<std::string> stack;
    bool seen_root = false;
    std::size_t i = 0;
    auto is_name = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' || c == '.'; };

    while (i < doc.size()) {
        if (doc[i] != '<') {
            if (doc[i] == '>') return false;
            if (stack.empty() && !std::isspace(static_cast<unsigned char>(doc[i]))) return false;
            ++i;
            continue;
        }
        if (doc.substr(i, 2) == "<?") {
            const auto end = doc.find("?>", i);
            if (end == std::string_view::npos) return false;
            i = end + 2;
            continue;
        }
        if (doc.substr(i, 4) == "<!--") {
            const auto end = doc.find("-->", i);
            if (end == std::string_view::npos) return false;
            i = end + 3;
            continue;
        }
        const bool closing = i + 1 < doc.size() && doc[i + 1] == '/';
        std::size_t j = i + (closing ? 2 : 1);
        const std::size_t name_start = j;
        while (j < doc.size() && is_name(doc[j])) ++j;
        if (j == name_start) return false;
        const std::string name(doc.substr(name_start, j - name_start));

        if (closing) {
            while (j < doc.size() && std::isspace(static_cast<unsigned char>(doc[j]))) ++j;
            if (j >= doc.size() || doc[j] != '>') return false;
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
            i = j + 1;
            continue;
        }

        // attributes
        bool self_closing = false;
        while (true) {
            while (j < doc.size() && std::isspace(static_cast<unsigned char>(doc[j]))) ++j;
            if (j >= doc.size()) return false;
            if (doc[j] == '>') break;
            if (doc[j] == '/') {
                if (j + 1 >= doc.size() || doc[j + 1] != '>') return false;
                self_closing = true;
                ++j;
                break;
            }
            const std::size_t attr_start = j;
            while (j < doc.size() && is_name(doc[j])) ++j;
            if (j == attr_start || j >= doc.size() || doc[j] != '=') return false;
            ++j;
            if (j >= doc.size() || (doc[j] != '"' && doc[j] != '\'')) return false;
            const char quote = doc[j++];
            while (j < doc.size() && doc[j] != quote) {
                if (doc[j] == '<') return false;
                ++j;
            }
            if (j >= doc.size()) return false;
            ++j;
        }
        if (stack.empty()) {
            if (seen_root) return false;
            seen_root = true;
        }
        if (!self_closing) stack.push_back(name);
        i = j + 1;
    }
    return seen_root && stack.empty();
}

} // namespace xml_check
