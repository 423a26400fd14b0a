#include "alma/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "alma/errors.hpp"

namespace alma {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<Line> significantLines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        auto raw = text.substr(pos, end - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        auto t = trim(raw);
        if (!t.empty()) lines.push_back({number, std::move(t)});
        pos = end + 1;
    }
    return lines;
}

std::size_t endLine(std::string_view text) {
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(std::move(t));
    return out;
}

std::size_t parseCount(const Line& line, const std::string& value, const char* what) {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        fail(line.number, std::string("invalid ") + what + " '" + value + "'");
    }
    return n;
}

std::size_t parsePositive(const Line& line, const std::string& value, const char* what) {
    auto n = parseCount(line, value, what);
    if (n == 0) fail(line.number, std::string(what) + " must be positive");
    return n;
}

Gf2Vector parseBits(const Line& line, std::string_view text, std::size_t expected) {
    auto toks = tokens(text);
    if (toks.size() != expected) {
        fail(line.number, "expected " + std::to_string(expected) + " entries, found " + std::to_string(toks.size()));
    }
    Gf2Vector v(expected);
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (toks[i] != "0" && toks[i] != "1") {
            fail(line.number, "invalid entry '" + toks[i] + "' (expected 0 or 1)");
        }
        v.set(i, toks[i] == "1");
    }
    return v;
}

Alphabet parseAlphabet(const Line& line, const std::string& value) {
    auto names = tokens(value);
    if (names.empty()) fail(line.number, "alphabet is empty");
    try {
        return Alphabet(std::move(names));
    } catch (const InputError& e) {
        fail(line.number, e.what());
    }
}

std::pair<std::string, std::string> splitKey(const Line& line) {
    const auto colon = line.text.find(':');
    if (colon == std::string::npos) fail(line.number, "expected 'key: value', got '" + line.text + "'");
    return {trim(line.text.substr(0, colon)), trim(line.text.substr(colon + 1))};
}

}  // namespace

M2ma parseM2maFile(std::string_view text) {
    const auto lines = significantLines(text);
    std::optional<Alphabet> alphabet;
    std::optional<std::size_t> dimension;
    std::optional<Line> finalLine;
    std::map<Symbol, Gf2Matrix> matrices;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& line = lines[i];
        auto [key, value] = splitKey(line);
        if (key == "alphabet") {
            if (alphabet) fail(line.number, "duplicate 'alphabet:'");
            alphabet = parseAlphabet(line, value);
        } else if (key == "dimension") {
            if (dimension) fail(line.number, "duplicate 'dimension:'");
            dimension = parsePositive(line, value, "dimension");
        } else if (key == "final") {
            if (finalLine) fail(line.number, "duplicate 'final:'");
            finalLine = Line{line.number, value};
        } else if (key.rfind("transition ", 0) == 0) {
            if (!alphabet || !dimension) fail(line.number, "'alphabet:' and 'dimension:' must precede transitions");
            if (!value.empty()) fail(line.number, "unexpected text after '" + key + ":'");
            const auto name = trim(key.substr(11));
            auto sym = alphabet->find(name);
            if (!sym) fail(line.number, "transition for unknown symbol '" + name + "'");
            if (matrices.count(*sym)) fail(line.number, "duplicate transition matrix for '" + name + "'");
            Gf2Matrix m(*dimension, *dimension);
            for (std::size_t r = 0; r < *dimension; ++r) {
                if (i + 1 >= lines.size() || lines[i + 1].text.find(':') != std::string::npos) {
                    const auto at = i + 1 < lines.size() ? lines[i + 1].number : endLine(text);
                    fail(at, "transition matrix for '" + name + "' has " + std::to_string(r) + " rows, expected " +
                                 std::to_string(*dimension));
                }
                ++i;
                m.setRow(r, parseBits(lines[i], lines[i].text, *dimension));
            }
            matrices.emplace(*sym, std::move(m));
        } else {
            fail(line.number, "unknown key '" + key + "'");
        }
    }

    const auto eof = endLine(text);
    if (!alphabet) fail(eof, "missing 'alphabet:'");
    if (!dimension) fail(eof, "missing 'dimension:'");
    if (!finalLine) fail(eof, "missing 'final:'");
    auto final = parseBits(*finalLine, finalLine->text, *dimension);
    std::vector<Gf2Matrix> mus;
    for (Symbol s = 0; s < alphabet->size(); ++s) {
        auto it = matrices.find(s);
        if (it == matrices.end()) fail(eof, "missing transition matrix for '" + alphabet->name(s) + "'");
        mus.push_back(std::move(it->second));
    }
    return M2ma(*alphabet, Gf2Vector::unit(*dimension, 0), std::move(mus), std::move(final));
}

namespace {

struct EqKeys {
    std::optional<std::size_t> tests, maxLen, limit;
    std::size_t firstLine = 0;

    bool any() const { return tests || maxLen || limit; }

    bool accept(const Line& line, const std::string& key, const std::string& value) {
        std::optional<std::size_t>* slot = nullptr;
        if (key == "eq-tests") slot = &tests;
        if (key == "eq-maxlen") slot = &maxLen;
        if (key == "eq-limit") slot = &limit;
        if (!slot) return false;
        if (*slot) fail(line.number, "duplicate '" + key + ":'");
        *slot = parsePositive(line, value, key.c_str());
        if (!firstLine) firstLine = line.number;
        return true;
    }

    ApproxEqConfig require(std::size_t eof) const {
        if (!tests) fail(eof, "missing 'eq-tests:'");
        if (!maxLen) fail(eof, "missing 'eq-maxlen:'");
        if (!limit) fail(eof, "missing 'eq-limit:'");
        return ApproxEqConfig{*tests, *maxLen, *limit, 0};
    }
};

}  // namespace

NfaFile parseNfaFile(std::string_view text, AutomatonKind kind) {
    if (kind == AutomatonKind::Ufa) throw InputError("UFA files are not an input format");
    const auto lines = significantLines(text);
    std::optional<Alphabet> alphabet;
    std::optional<std::size_t> states;
    std::optional<Line> finalLine;
    bool sawTransitions = false;
    std::vector<Line> transitionLines;
    EqKeys eq;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& line = lines[i];
        auto [key, value] = splitKey(line);
        if (eq.accept(line, key, value)) continue;
        if (key == "alphabet") {
            if (alphabet) fail(line.number, "duplicate 'alphabet:'");
            alphabet = parseAlphabet(line, value);
            if (alphabet->contains(kSeparator)) fail(line.number, "'$' is reserved and cannot be in the alphabet");
        } else if (key == "states") {
            if (states) fail(line.number, "duplicate 'states:'");
            states = parsePositive(line, value, "state count");
        } else if (key == "final") {
            if (finalLine) fail(line.number, "duplicate 'final:'");
            finalLine = Line{line.number, value};
        } else if (key == "transitions") {
            if (sawTransitions) fail(line.number, "duplicate 'transitions:'");
            if (!value.empty()) fail(line.number, "transitions start on the line after 'transitions:'");
            sawTransitions = true;
            while (i + 1 < lines.size() && lines[i + 1].text.find(':') == std::string::npos) {
                transitionLines.push_back(lines[++i]);
            }
        } else {
            fail(line.number, "unknown key '" + key + "'");
        }
    }

    const auto eof = endLine(text);
    if (!alphabet) fail(eof, "missing 'alphabet:'");
    if (!states) fail(eof, "missing 'states:'");
    if (!finalLine) fail(eof, "missing 'final:'");
    if (!sawTransitions) fail(eof, "missing 'transitions:'");

    auto stateId = [&](const Line& line, const std::string& tok) {
        auto id = parseCount(line, tok, "state");
        if (id == 0 || id > *states) {
            fail(line.number, "state " + tok + " is out of range 1.." + std::to_string(*states));
        }
        return id - 1;
    };

    std::vector<std::size_t> final;
    for (const auto& tok : tokens(finalLine->text)) final.push_back(stateId(*finalLine, tok));

    std::vector<Transition> delta;
    for (const auto& line : transitionLines) {
        auto toks = tokens(line.text);
        if (toks.size() != 3) fail(line.number, "expected 'source symbol target', got '" + line.text + "'");
        auto sym = alphabet->find(toks[1]);
        if (!sym) fail(line.number, "unknown symbol '" + toks[1] + "'");
        Transition t{stateId(line, toks[0]), *sym, stateId(line, toks[2])};
        if (std::find(delta.begin(), delta.end(), t) != delta.end()) {
            fail(line.number, "duplicate transition '" + line.text + "'");
        }
        delta.push_back(t);
    }

    std::optional<ApproxEqConfig> config;
    if (kind == AutomatonKind::Nba) {
        config = eq.require(eof);
    } else if (eq.any()) {
        fail(eq.firstLine, "eq-* parameters only apply to NBA input");
    }
    return NfaFile{Nfa(*alphabet, *states, {0}, std::move(delta), std::move(final), kind), config};
}

ArbitraryFile parseArbitraryFile(std::string_view text) {
    const auto lines = significantLines(text);
    std::optional<Alphabet> alphabet;
    std::optional<std::string> command;
    std::optional<bool> lasso;
    EqKeys eq;

    for (const auto& line : lines) {
        auto [key, value] = splitKey(line);
        if (eq.accept(line, key, value)) continue;
        if (key == "alphabet") {
            if (alphabet) fail(line.number, "duplicate 'alphabet:'");
            alphabet = parseAlphabet(line, value);
        } else if (key == "oracle") {
            if (command) fail(line.number, "duplicate 'oracle:'");
            if (value.empty()) fail(line.number, "oracle command is empty");
            command = value;
        } else if (key == "lasso") {
            if (lasso) fail(line.number, "duplicate 'lasso:'");
            if (value != "yes" && value != "no") fail(line.number, "lasso must be 'yes' or 'no'");
            lasso = value == "yes";
        } else {
            fail(line.number, "unknown key '" + key + "'");
        }
    }
    const auto eof = endLine(text);
    if (!alphabet) fail(eof, "missing 'alphabet:'");
    if (!command) fail(eof, "missing 'oracle:'");
    if (!lasso) fail(eof, "missing 'lasso:'");
    if (*lasso && alphabet->contains(kSeparator)) fail(eof, "'$' is reserved in lasso mode");
    return ArbitraryFile{*alphabet, *command, *lasso, eq.require(eof)};
}

InputKind detectInputKind(std::string_view text) {
    for (const auto& line : significantLines(text)) {
        const auto colon = line.text.find(':');
        if (colon == std::string::npos) continue;
        const auto key = trim(line.text.substr(0, colon));
        if (key == "dimension") return InputKind::M2ma;
        if (key == "states") return InputKind::Nfa;
    }
    throw InputError("input has neither 'dimension:' (M2MA) nor 'states:' (SUBA)");
}

std::string formatM2ma(const M2ma& a) {
    if (a.initial() != Gf2Vector::unit(a.dimension(), 0)) {
        throw InvariantError("only M2MAs with initial vector e1 can be written");
    }
    auto bits = [](const Gf2Vector& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ' ';
            s += v.get(i) ? '1' : '0';
        }
        return s;
    };
    std::ostringstream out;
    out << "alphabet:";
    for (const auto& name : a.alphabet().names()) out << ' ' << name;
    out << "\ndimension: " << a.dimension() << "\nfinal: " << bits(a.final()) << '\n';
    for (Symbol s = 0; s < a.alphabet().size(); ++s) {
        out << "transition " << a.alphabet().name(s) << ":\n";
        for (std::size_t r = 0; r < a.dimension(); ++r) out << bits(a.transition(s).row(r)) << '\n';
    }
    return out.str();
}

std::string readTextFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace alma
