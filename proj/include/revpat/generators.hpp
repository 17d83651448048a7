#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revpat/errors.hpp"
#include "revpat/word.hpp"

namespace revpat {

/*
 * A single-consumer cursor over a deterministic infinite word.
 *
 * Two generators with the same name always yield the same stream, so
 * take(n) of a fresh instance is the length-n prefix of the named word.
 */
class WordGenerator {
public:
    WordGenerator(std::string name, int alphabet_size, std::function<Symbol()> next)
        : name_(std::move(name)), alphabet_size_(alphabet_size), next_(std::move(next)) {}

    const std::string& name() const noexcept { return name_; }
    int alphabet_size() const noexcept { return alphabet_size_; }

    Symbol next() {
        ++position_;
        return next_();
    }

    /// Symbols emitted so far.
    std::size_t position() const noexcept { return position_; }

    Word take(std::size_t n) {
        std::vector<Symbol> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(next());
        return Word(std::move(out), alphabet_size_);
    }

private:
    std::string name_;
    int alphabet_size_;
    std::function<Symbol()> next_;
    std::size_t position_ = 0;
};

namespace detail {

// Concatenation of blocks block(0) block(1) ..., materialized one block at a time.
inline std::function<Symbol()> block_stream(std::function<std::vector<Symbol>(std::size_t)> block) {
    struct State {
        std::function<std::vector<Symbol>(std::size_t)> block;
        std::vector<Symbol> current;
        std::size_t index = 0;
        std::size_t k = 0;
    };
    auto st = std::make_shared<State>();
    st->block = std::move(block);
    return [st]() {
        while (st->index == st->current.size()) {
            st->current = st->block(st->k++);
            st->index = 0;
        }
        return st->current[st->index++];
    };
}

inline std::vector<Symbol> alternating_block(std::size_t pairs, std::vector<Symbol> tail) {
    std::vector<Symbol> out;
    out.reserve(2 * pairs + tail.size());
    for (std::size_t i = 0; i < pairs; ++i) {
        out.push_back(0);
        out.push_back(1);
    }
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

// Fixed point of a prolongable morphism m with m(0) starting with 0.
inline std::function<Symbol()> fixed_point_stream(std::vector<std::vector<Symbol>> images) {
    struct State {
        std::vector<std::vector<Symbol>> images;
        std::vector<Symbol> produced;
        std::size_t expanded = 0; // letters of `produced` whose images are appended
        std::size_t index = 0;
    };
    auto st = std::make_shared<State>();
    st->images = std::move(images);
    st->produced = st->images[0];
    st->expanded = 1;
    return [st]() {
        while (st->index >= st->produced.size()) {
            const auto& img = st->images[st->produced[st->expanded++]];
            st->produced.insert(st->produced.end(), img.begin(), img.end());
        }
        return st->produced[st->index++];
    };
}

inline std::function<Symbol()> morphic_image_stream(const Morphism& m, std::function<Symbol()> base) {
    struct State {
        const Morphism* m;
        std::function<Symbol()> base;
        const Word* current = nullptr;
        std::size_t index = 0;
    };
    auto st = std::make_shared<State>();
    st->m = &m;
    st->base = std::move(base);
    return [st]() {
        if (st->current == nullptr || st->index == st->current->size()) {
            st->current = &st->m->image(st->base());
            st->index = 0;
        }
        return (*st->current)[st->index++];
    };
}

/*
 * Lexicographically least square-free word over {0,...,4} avoiding the
 * factors 02 03 04 13 14 20 24 30 31 41 42 434010, built by depth-first
 * backtracking.
 *
 * The search always runs `kLookahead` letters past the longest prefix ever
 * handed out; if backtracking ever reaches below that prefix the stream
 * would stop being prefix-consistent, so that case throws.
 */
class ConstrainedSquareFree {
public:
    static constexpr std::size_t kLookahead = 256;

    static ConstrainedSquareFree& instance() {
        static ConstrainedSquareFree s;
        return s;
    }

    Symbol at(std::size_t i) {
        std::lock_guard lock(mutex_);
        extend(i + 1);
        handed_ = std::max(handed_, i + 1);
        return stack_[i];
    }

private:
    static bool forbidden_pair(Symbol a, Symbol b) {
        static constexpr std::array<std::array<bool, 5>, 5> table = {{
            {false, false, true, true, true},   // 02 03 04
            {false, false, false, true, true},  // 13 14
            {true, false, false, false, true},  // 20 24
            {true, true, false, false, false},  // 30 31
            {false, true, true, false, false},  // 41 42
        }};
        return table[a][b];
    }

    bool acceptable() const {
        const std::size_t n = stack_.size();
        if (n >= 2 && forbidden_pair(stack_[n - 2], stack_[n - 1]))
            return false;
        static constexpr std::array<Symbol, 6> banned = {4, 3, 4, 0, 1, 0};
        if (n >= banned.size() && std::equal(banned.begin(), banned.end(), stack_.end() - banned.size()))
            return false;
        for (std::size_t r = 1; 2 * r <= n; ++r)
            if (std::equal(stack_.end() - r, stack_.end(), stack_.end() - 2 * r))
                return false;
        return true;
    }

    void extend(std::size_t needed) {
        const std::size_t target = std::max(needed, handed_) + kLookahead;
        while (stack_.size() < target) {
            // try the next candidate letter at the current depth
            Symbol start = 0;
            if (retry_) {
                start = Symbol(stack_.back() + 1);
                stack_.pop_back();
                retry_ = false;
            }
            bool placed = false;
            for (Symbol c = start; c < 5; ++c) {
                stack_.push_back(c);
                if (acceptable()) {
                    placed = true;
                    break;
                }
                stack_.pop_back();
            }
            if (!placed) {
                if (stack_.empty())
                    throw std::logic_error("constrained square-free search exhausted");
                if (stack_.size() - 1 < handed_)
                    throw std::logic_error("constrained square-free stream lost prefix consistency");
                retry_ = true;
            }
        }
    }

    std::mutex mutex_;
    std::vector<Symbol> stack_;
    std::size_t handed_ = 0; // longest prefix ever returned to a caller
    bool retry_ = false;
};

inline std::function<Symbol()> constrained_square_free_stream() {
    auto pos = std::make_shared<std::size_t>(0);
    return [pos]() { return ConstrainedSquareFree::instance().at((*pos)++); };
}

struct GeneratorSpec {
    std::string_view name;
    int alphabet_size;
    std::function<Symbol()> (*factory)();
};

inline std::function<Symbol()> make_tau_prime() {
    // (01)^{2^k} 1 for k = 0, 1, 2, ...
    return block_stream([](std::size_t k) { return alternating_block(std::size_t{1} << k, {1}); });
}

inline std::function<Symbol()> make_tau_triple() {
    // (01)^{2^k - 1} 11 for k = 1, 2, ...
    return block_stream([](std::size_t k) { return alternating_block((std::size_t{1} << (k + 1)) - 1, {1, 1}); });
}

inline std::function<Symbol()> make_tau_dprime() {
    // tau_prime with a 2 inserted before every 0
    auto base = std::make_shared<std::function<Symbol()>>(make_tau_prime());
    auto pending = std::make_shared<int>(-1);
    return [base, pending]() -> Symbol {
        if (*pending >= 0) {
            Symbol s = Symbol(*pending);
            *pending = -1;
            return s;
        }
        Symbol s = (*base)();
        if (s == 0) {
            *pending = 0;
            return 2;
        }
        return s;
    };
}

inline std::function<Symbol()> make_squarefree3() {
    return fixed_point_stream({{0, 1, 2}, {0, 2}, {1}});
}

inline const std::vector<GeneratorSpec>& generator_registry() {
    static const std::vector<GeneratorSpec> registry = {
        {"alt01", 2, [] { return block_stream([](std::size_t) { return std::vector<Symbol>{0, 1}; }); }},
        {"alt012", 3, [] { return block_stream([](std::size_t) { return std::vector<Symbol>{0, 1, 2}; }); }},
        {"tau_prime", 2, make_tau_prime},
        {"tau_dprime", 3, make_tau_dprime},
        {"tau_triple", 2, make_tau_triple},
        {"squarefree3", 3, make_squarefree3},
        {"sigma12", 3, [] { return morphic_image_stream(psi12(), make_squarefree3()); }},
        {"squarefree5_rsw", 5, constrained_square_free_stream},
        {"rsw6", 2, [] { return morphic_image_stream(psi6(), constrained_square_free_stream()); }},
    };
    return registry;
}

} // namespace detail

inline std::vector<std::string> generator_names() {
    std::vector<std::string> names;
    for (const auto& g : detail::generator_registry())
        names.emplace_back(g.name);
    return names;
}

inline bool is_generator(std::string_view name) {
    for (const auto& g : detail::generator_registry())
        if (g.name == name)
            return true;
    return false;
}

inline WordGenerator make_generator(std::string_view name) {
    for (const auto& g : detail::generator_registry())
        if (g.name == name)
            return WordGenerator(std::string(name), g.alphabet_size, g.factory());
    throw RegistryError("unknown generator '" + std::string(name) + "'");
}

/// Length-n prefix of the named infinite word.
inline Word generate(std::string_view name, std::int64_t n) {
    if (n < 0)
        throw DomainError("prefix length must be non-negative");
    return make_generator(name).take(std::size_t(n));
}

} // namespace revpat
