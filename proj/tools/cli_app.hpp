#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "revpat/analytics.hpp"
#include "revpat/errors.hpp"
#include "revpat/generators.hpp"
#include "revpat/matcher.hpp"
#include "revpat/pattern.hpp"
#include "revpat/search.hpp"
#include "revpat/serialize.hpp"
#include "revpat/verify.hpp"

namespace revpat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMeets = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

struct WordSource {
    std::string word, word_file, generator;
    std::int64_t length = -1;

    void attach(CLI::App* cmd) {
        auto* w = cmd->add_option("--word", word, "word as digits");
        auto* f = cmd->add_option("--word-file", word_file, "file holding the word as digits");
        auto* g = cmd->add_option("--generator", generator, "registered generator name");
        cmd->add_option("--length", length, "prefix length for --generator");
        w->excludes(f)->excludes(g);
        f->excludes(g);
    }

    Word load() const {
        if (!generator.empty()) {
            if (length < 0)
                throw ParseError("--generator needs --length");
            return generate(generator, length);
        }
        std::string text = word;
        if (!word_file.empty()) {
            std::ifstream in(word_file);
            if (!in)
                throw ParseError("cannot read " + word_file);
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
            std::erase_if(text, [](unsigned char c) { return std::isspace(c); });
        } else if (word.empty()) {
            throw ParseError("one of --word, --word-file, --generator is required");
        }
        return Word::parse(text);
    }
};

inline std::string describe(const SearchOutcome& o) {
    std::ostringstream os;
    if (o.unavoidable())
        os << "unavoidable L=" << o.bound();
    else
        os << "depth-exhausted (conjectured avoidable) witness=" << o.witness().to_string();
    os << " nodes_explored=" << o.nodes_explored << " wall_time_ms=" << o.wall_time_ms;
    return os.str();
}

/// Runs one command line (without the program name); returns the exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Patterns with reversed variables: matching, search, generators, checks", "revpat"};
    app.require_subcommand(1);

    std::string pattern_text;
    int alphabet = 2;
    std::size_t depth = 1000;
    bool json = false;

    auto* check = app.add_subcommand("check", "does a word meet a pattern");
    WordSource check_src;
    check->add_option("--pattern", pattern_text, "pattern, uppercase = reversed")->required();
    check_src.attach(check);

    auto* search_cmd = app.add_subcommand("search", "backtracking search for avoiding words");
    search_cmd->add_option("--pattern", pattern_text)->required();
    search_cmd->add_option("--alphabet", alphabet)->required();
    search_cmd->add_option("--depth", depth)->capture_default_str();
    search_cmd->add_flag("--json", json);
    bool certify = false;
    search_cmd->add_flag("--certify", certify, "re-check an unavoidable verdict by enumerating every word of length L");

    auto* gen_cmd = app.add_subcommand("generate", "prefix of a registered infinite word");
    std::string gen_name;
    std::int64_t gen_len = 0;
    gen_cmd->add_option("--name", gen_name)->required();
    gen_cmd->add_option("--length", gen_len)->required();

    auto* count_cmd = app.add_subcommand("count", "number of avoiding words by length");
    std::size_t max_len = 0;
    count_cmd->add_option("--pattern", pattern_text)->required();
    count_cmd->add_option("--alphabet", alphabet)->required();
    count_cmd->add_option("--max-len", max_len)->required();

    auto* index_cmd = app.add_subcommand("index", "avoidability index estimate");
    int max_k = 3;
    index_cmd->add_option("--pattern", pattern_text)->required();
    index_cmd->add_option("--max-k", max_k)->required();
    index_cmd->add_option("--depth", depth)->capture_default_str();
    index_cmd->add_flag("--json", json);

    auto* verify_cmd = app.add_subcommand("verify", "re-check the registered claims");
    std::string filter, format = "csv";
    std::size_t prefix_len = 10000;
    verify_cmd->add_option("--filter", filter, "id prefix");
    verify_cmd->add_option("--prefix-len", prefix_len)->capture_default_str();
    verify_cmd->add_option("--depth", depth)->capture_default_str();
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "markdown"}))->capture_default_str();

    auto* analyze_cmd = app.add_subcommand("analyze", "squares, palindromes, factor complexity");
    WordSource analyze_src;
    analyze_src.attach(analyze_cmd);
    std::optional<std::size_t> min_root, min_pal, complexity;
    analyze_cmd->add_option("--squares", min_root, "list squares with root length >= MINROOT");
    analyze_cmd->add_option("--palindromes", min_pal, "list palindromes of length >= MINLEN");
    analyze_cmd->add_option("--complexity", complexity, "factor complexity for n = 1..NMAX");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check->parsed()) {
            const Pattern p = Pattern::parse(pattern_text);
            const Word w = check_src.load();
            const auto occ = find_occurrence(w, p);
            if (!occ) {
                out << "avoids\n";
                return kExitOk;
            }
            out << "meets\n" << format_occurrence(*occ) << "\n";
            return kExitMeets;
        }
        if (search_cmd->parsed()) {
            const Pattern p = Pattern::parse(pattern_text);
            const SearchOutcome o = search(p, alphabet, depth);
            if (certify && o.unavoidable()) {
                const bool at = exhaustive_unavoidability(p, alphabet, o.bound());
                const bool below = o.bound() > 0 && exhaustive_unavoidability(p, alphabet, o.bound() - 1);
                if (!at || below) {
                    err << "certificate check failed\n";
                    return kExitMeets;
                }
            }
            out << (json ? to_json(o).dump() : describe(o)) << "\n";
            if (certify && o.unavoidable() && !json)
                out << "certified by enumeration\n";
            return kExitOk;
        }
        if (gen_cmd->parsed()) {
            out << generate(gen_name, gen_len).to_string() << "\n";
            return kExitOk;
        }
        if (count_cmd->parsed()) {
            for (auto c : count_avoiders(Pattern::parse(pattern_text), alphabet, max_len))
                out << c << "\n";
            return kExitOk;
        }
        if (index_cmd->parsed()) {
            const IndexEstimate e = estimate_index(Pattern::parse(pattern_text), max_k, depth);
            if (json) {
                out << to_json(e).dump() << "\n";
            } else {
                out << "lower_bound=" << e.lower_bound
                    << " candidate=" << (e.candidate ? std::to_string(*e.candidate) : std::string("none"))
                    << " depth=" << e.depth_used << "\n";
                for (const auto& r : e.runs)
                    out << "k=" << r.alphabet_size << " " << describe(r) << "\n";
            }
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            const Report rep = run_suite(filter, prefix_len, depth);
            out << emit_report(rep, format == "csv" ? ReportFormat::csv : ReportFormat::markdown);
            if (rep.unknown_filter)
                err << "no check id starts with '" << filter << "'\n";
            return rep.all_passed() ? kExitOk : kExitMeets;
        }
        if (analyze_cmd->parsed()) {
            const Word w = analyze_src.load();
            out << "length " << w.size() << "\n";
            if (!w.empty())
                out << "max_unary_power " << max_unary_power(w) << "\n";
            if (min_root) {
                const auto sq = list_squares(w, *min_root);
                out << "squares " << sq.size() << "\n";
                for (const auto& s : sq)
                    out << s.position << " " << s.root.to_string() << "\n";
            }
            if (min_pal) {
                const auto pals = list_palindromes(w, *min_pal);
                out << "palindromes " << pals.size() << "\n";
                for (const auto& p : pals)
                    out << p.position << " " << w.factor(p.position, p.length).to_string() << "\n";
            }
            if (complexity) {
                out << "complexity\n";
                for (std::size_t n = 1; n <= *complexity && n <= w.size(); ++n)
                    out << n << " " << factor_complexity(w, n) << "\n";
                if (*complexity >= 1 && w.size() >= 2 * *complexity)
                    out << morse_hedlund_evidence(w, *complexity).to_string() << "\n";
            }
            return kExitOk;
        }
    } catch (const ResourceError& e) {
        err << "resource guard: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace revpat::cli
