#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace alma {

/// Index of a symbol inside its Alphabet.
using Symbol = std::uint32_t;

/// A finite word as a sequence of symbol indices.
using Word = std::vector<Symbol>;

/// Separator between the finite prefix and the period of a lasso word.
inline constexpr std::string_view kSeparator = "$";

/// Rendering of the empty word in tables and on the wire.
inline constexpr std::string_view kEmptyWordToken = "_";

/**
 * An ordered list of distinct symbol names.
 *
 * Symbols are arbitrary whitespace-free tokens; words are stored as indices
 * into this list so the order fixed here is the order every deterministic
 * scan (worklists, counterexample search) follows.
 */
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    [[nodiscard]] std::size_t size() const { return symbols_.size(); }
    [[nodiscard]] bool empty() const { return symbols_.empty(); }
    [[nodiscard]] const std::string& name(Symbol s) const { return symbols_.at(s); }
    [[nodiscard]] const std::vector<std::string>& names() const { return symbols_; }
    [[nodiscard]] std::optional<Symbol> find(std::string_view name) const;
    [[nodiscard]] bool contains(std::string_view name) const { return find(name).has_value(); }

    /// Copy with `$` appended as the last symbol. Rejects alphabets already containing it.
    [[nodiscard]] Alphabet withSeparator() const;
    /// Index of `$`, if present.
    [[nodiscard]] std::optional<Symbol> separator() const { return find(kSeparator); }

    /// Parses whitespace-separated symbol names; `_` alone is the empty word.
    [[nodiscard]] Word parseWord(std::string_view text) const;
    /// Symbols joined by single spaces, `_` for the empty word.
    [[nodiscard]] std::string format(const Word& w) const;
    /// Symbols concatenated when every name is one character, dot-joined otherwise.
    [[nodiscard]] std::string formatCompact(const Word& w) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, Symbol> index_;
};

/// Concatenation helper.
[[nodiscard]] Word concat(const Word& a, const Word& b);
[[nodiscard]] Word concat(const Word& a, Symbol s, const Word& b);

/// Order by length, then lexicographically by symbol index.
[[nodiscard]] bool shortlexLess(const Word& a, const Word& b);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace alma
