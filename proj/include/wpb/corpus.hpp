#pragma once

#include <map>
#include <string>
#include <vector>

#include "wpb/corpus_text.hpp"
#include "wpb/dsl.hpp"
#include "wpb/errors.hpp"

namespace wpb {

/** Parse the bundled catalog. Every entry carries its source-equation tag and
 * a unique id. */
inline const std::vector<IdentitySpec>& catalog() {
    static const std::vector<IdentitySpec> entries = [] {
        std::vector<IdentitySpec> all;
        for (const char* text :
             {corpus_text::section2(), corpus_text::section3(), corpus_text::section4(),
              corpus_text::section5(), corpus_text::section6(), corpus_text::section7(),
              corpus_text::section8()}) {
            Parser p{std::string(text)};
            for (auto& s : p.parse_catalog()) all.push_back(std::move(s));
        }
        std::map<std::string, int> seen;
        for (const auto& s : all)
            if (++seen[s.id] > 1) throw ConfigError("duplicate catalog id '" + s.id + "'");
        return all;
    }();
    return entries;
}

inline const IdentitySpec& catalog_entry(const std::string& id) {
    for (const auto& s : catalog())
        if (s.id == id) return s;
    throw ConfigError("unknown identity '" + id + "'");
}

inline bool catalog_has(const std::string& id) {
    for (const auto& s : catalog())
        if (s.id == id) return true;
    return false;
}

}  // namespace wpb
