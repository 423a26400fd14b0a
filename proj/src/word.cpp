#include "alma/word.hpp"

#include <algorithm>
#include <sstream>

#include "alma/errors.hpp"

namespace alma {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto& s = symbols_[i];
        if (s.empty() || s == kEmptyWordToken ||
            s.find_first_of(" \t\r\n:#") != std::string::npos) {
            throw InputError("invalid symbol name '" + s + "'");
        }
        if (!index_.emplace(s, static_cast<Symbol>(i)).second) {
            throw InputError("duplicate symbol '" + s + "' in alphabet");
        }
    }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Alphabet Alphabet::withSeparator() const {
    if (contains(kSeparator)) {
        throw InputError("'$' is reserved as the lasso separator and cannot be an input symbol");
    }
    auto names = symbols_;
    names.emplace_back(kSeparator);
    return Alphabet(std::move(names));
}

Word Alphabet::parseWord(std::string_view text) const {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
    if (tokens.size() == 1 && tokens[0] == kEmptyWordToken) return {};
    Word w;
    w.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        auto s = find(tokens[i]);
        if (!s) {
            throw InputError("unknown symbol '" + tokens[i] + "' at position " +
                             std::to_string(i + 1));
        }
        w.push_back(*s);
    }
    return w;
}

std::string Alphabet::format(const Word& w) const {
    if (w.empty()) return std::string(kEmptyWordToken);
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += name(w[i]);
    }
    return out;
}

std::string Alphabet::formatCompact(const Word& w) const {
    if (w.empty()) return std::string(kEmptyWordToken);
    bool single = std::all_of(symbols_.begin(), symbols_.end(),
                              [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && !single) out += '.';
        out += name(w[i]);
    }
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word r;
    r.reserve(a.size() + b.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word concat(const Word& a, Symbol s, const Word& b) {
    Word r;
    r.reserve(a.size() + 1 + b.size());
    r.insert(r.end(), a.begin(), a.end());
    r.push_back(s);
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

bool shortlexLess(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    // FNV-1a over the symbol indices
    std::size_t h = 1469598103934665603ULL;
    for (Symbol s : w) {
        h ^= s + 0x9e3779b9U;
        h *= 1099511628211ULL;
    }
    return h ^ w.size();
}

}  // namespace alma
