#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "revpat/errors.hpp"
#include "revpat/pattern.hpp"

namespace revpat {

struct AvoidabilityClass {
    enum class Kind { unavoidable, index, unknown };

    Kind kind = Kind::unknown;
    int index = 0;               // avoidability index, meaningful when kind == index
    std::string aperiodic = "-"; // aperiodic-avoider note
    std::string claim;           // which recorded fact produced the verdict

    static AvoidabilityClass unavoidable_class(std::string note, std::string claim) {
        return {Kind::unavoidable, 0, std::move(note), std::move(claim)};
    }
    static AvoidabilityClass with_index(int k, std::string note, std::string claim) {
        if (k < 2)
            throw DomainError("avoidability index must be >= 2");
        return {Kind::index, k, std::move(note), std::move(claim)};
    }
    static AvoidabilityClass unknown_class(std::string note, std::string claim) {
        return {Kind::unknown, 0, std::move(note), std::move(claim)};
    }

    std::string verdict() const {
        switch (kind) {
        case Kind::unavoidable:
            return "unavoidable";
        case Kind::index:
            return "index(" + std::to_string(index) + ")";
        case Kind::unknown:
            break;
        }
        return "unknown";
    }

    bool operator==(const AvoidabilityClass& o) const {
        return kind == o.kind && index == o.index && aperiodic == o.aperiodic;
    }
};

namespace detail {

inline constexpr std::string_view kClassificationTable =
#include "revpat/data/classification_table.inc"
    ;

struct TableEntry {
    bool family = false; // true: all marked variants of an unmarked base
    std::string source;  // pattern as written in the table
    AvoidabilityClass verdict;
};

inline AvoidabilityClass parse_verdict(const std::string& v, std::string note, std::string claim) {
    if (v == "unavoidable")
        return AvoidabilityClass::unavoidable_class(std::move(note), std::move(claim));
    if (v == "index2")
        return AvoidabilityClass::with_index(2, std::move(note), std::move(claim));
    if (v == "index3")
        return AvoidabilityClass::with_index(3, std::move(note), std::move(claim));
    if (v == "unknown")
        return AvoidabilityClass::unknown_class(std::move(note), std::move(claim));
    throw ParseError("bad verdict '" + v + "' in classification table");
}

struct ClassificationTable {
    int version = 0;
    std::map<Pattern, TableEntry> exact;    // keyed by canonical form
    std::map<Pattern, TableEntry> families; // keyed by canonical form of the base
};

inline ClassificationTable parse_table(std::string_view text) {
    ClassificationTable t;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string scope;
        if (!(ls >> scope) || scope.starts_with("#"))
            continue;
        if (scope == "version") {
            ls >> t.version;
            continue;
        }
        std::string pat, verdict, note, claim;
        if (!(ls >> pat >> verdict >> note >> claim))
            throw ParseError("malformed classification row: " + line);
        for (char& c : claim)
            if (c == '_')
                c = ' ';
        const Pattern p = Pattern::parse(pat);
        TableEntry e{scope == "variants", pat, parse_verdict(verdict, note, claim)};
        auto& target = scope == "exact" ? t.exact : scope == "variants" ? t.families : throw ParseError("bad scope '" + scope + "'");
        const Pattern key = canonical_form(p);
        auto [it, inserted] = target.emplace(key, e);
        if (!inserted && !(it->second.verdict == e.verdict))
            throw ParseError("classification table rows " + it->second.source + " and " + pat +
                             " share a symmetry class but disagree");
    }
    return t;
}

inline const ClassificationTable& classification_table() {
    static const ClassificationTable t = parse_table(kClassificationTable);
    return t;
}

// Some block of >= 3 consecutive positions holds a single variable.
inline bool has_unary_cube(const Pattern& p) {
    for (std::size_t k = 0; k + 2 < p.size(); ++k)
        if (p[k].var == p[k + 1].var && p[k].var == p[k + 2].var)
            return true;
    return false;
}

// Some variable sits next to its own mirror image.
inline bool has_adjacent_mirror(const Pattern& p) {
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
        if (p[k].var == p[k + 1].var && p[k].reversed != p[k + 1].reversed)
            return true;
    return false;
}

} // namespace detail

/// Version of the embedded classification table.
inline int classification_table_version() { return detail::classification_table().version; }

/*
 * Avoidability verdict for a pattern over at most two variables.
 *
 * Explicit table rows win, then family rows, then the general facts: the
 * unavoidable patterns stay unavoidable under any marks, a unary block of
 * length >= 3 is avoided by an aperiodic binary word, a variable next to its
 * own mirror is avoided by (01)^w, and unmarked patterns not listed with
 * index 3 have index 2. Anything else is reported as unknown.
 */
inline AvoidabilityClass classify(const Pattern& p) {
    if (p.variable_count() > 2)
        throw UnsupportedError("classification covers patterns over at most two variables");
    const auto& table = detail::classification_table();
    const Pattern base = canonical_form(underlying(p));
    if (auto it = table.exact.find(base); it != table.exact.end() &&
                                          it->second.verdict.kind == AvoidabilityClass::Kind::unavoidable)
        return it->second.verdict;
    if (auto it = table.exact.find(canonical_form(p)); it != table.exact.end())
        return it->second.verdict;
    // Marks that toggling whole variables removes do not change avoidability.
    const bool marked = canonical_form(p) != base;
    if (marked)
        if (auto it = table.families.find(base); it != table.families.end())
            return it->second.verdict;
    if (detail::has_unary_cube(p))
        return AvoidabilityClass::with_index(2, "aperiodic-binary", "contains a unary block of length at least 3");
    if (detail::has_adjacent_mirror(p))
        return AvoidabilityClass::with_index(2, "-", "(01)^w avoids a variable next to its mirror image");
    if (!marked)
        return AvoidabilityClass::with_index(2, "-", "binary patterns outside the index-3 list have index 2");
    return AvoidabilityClass::unknown_class("-", "no recorded verdict");
}

} // namespace revpat
