#include "alma/oracles.hpp"

#include <sstream>

#include "alma/errors.hpp"

namespace alma {

Word randomWord(std::size_t alphabetSize, std::size_t maxLen, Rng& rng) {
    if (alphabetSize == 0) throw InputError("cannot draw words over an empty alphabet");
    std::uniform_int_distribution<std::size_t> length(0, maxLen);
    std::uniform_int_distribution<Symbol> symbol(0, static_cast<Symbol>(alphabetSize - 1));
    Word w(length(rng));
    for (auto& s : w) s = symbol(rng);
    return w;
}

LassoWord randomLasso(std::size_t alphabetSize, std::size_t maxLen, Rng& rng) {
    if (alphabetSize == 0) throw InputError("cannot draw words over an empty alphabet");
    if (maxLen < 2) throw InputError("lasso samples need a maximum length of at least 2");
    const auto total = std::uniform_int_distribution<std::size_t>(1, maxLen - 1)(rng);
    const auto periodLen = std::uniform_int_distribution<std::size_t>(1, total)(rng);
    std::uniform_int_distribution<Symbol> symbol(0, static_cast<Symbol>(alphabetSize - 1));
    LassoWord lasso{Word(total - periodLen), Word(periodLen)};
    for (auto& s : lasso.prefix) s = symbol(rng);
    for (auto& s : lasso.period) s = symbol(rng);
    return lasso;
}

void ApproxEqConfig::validate() const {
    if (numTests == 0 || maxLen == 0 || maxEq == 0) {
        throw InputError("eq-tests, eq-maxlen and eq-limit must all be positive");
    }
}

Word sampleWord(const MembershipOracle& oracle, std::size_t maxLen, Rng& rng) {
    const auto& alphabet = oracle.alphabet();
    if (!oracle.isLasso()) return randomWord(alphabet.size(), maxLen, rng);
    const auto sep = alphabet.separator();
    if (!sep || *sep + 1 != alphabet.size()) {
        throw InvariantError("lasso oracle alphabet must end with the separator");
    }
    return encodeLasso(randomLasso(alphabet.size() - 1, maxLen, rng), *sep);
}

LassoOracle::LassoOracle(const Alphabet& base)
    : alphabet_(base.withSeparator()), separator_(static_cast<Symbol>(base.size())) {}

bool LassoOracle::query(const Word& w) {
    auto lasso = decodeLasso(w, separator_);
    return lasso && queryLasso(*lasso);
}

SubaOracle::SubaOracle(Nfa suba) : LassoOracle(suba.alphabet()), suba_(std::move(suba)) {
    if (suba_.kind() != AutomatonKind::Suba) throw InputError("SubaOracle needs a SUBA");
}

NbaOracle::NbaOracle(Nfa nba) : LassoOracle(nba.alphabet()), nba_(std::move(nba)) {}

std::optional<Word> ApproxEquivalence::check(const M2ma& hypothesis) {
    for (std::size_t i = 0; i < config_.numTests; ++i) {
        auto w = sampleWord(target_, config_.maxLen, rng_);
        if (hypothesis.accepts(w) != target_.query(w)) return w;
    }
    return std::nullopt;
}

std::string ValidationReport::summary(const Alphabet& alphabet) const {
    std::ostringstream out;
    out << "validation: " << agreements << "/" << sampleCount << " sampled words agree (seed " << seed
        << ", max length " << sampleMaxLen << ")";
    for (const auto& w : witnesses) out << "\n  disagreement on: " << alphabet.format(w);
    return out.str();
}

ValidationReport validateLearned(const M2ma& learned, MembershipOracle& reference,
                                 const ValidationConfig& config) {
    Rng rng(config.seed);
    ValidationReport report{config.seed, config.sampleCount, config.sampleMaxLen, 0, {}};
    for (std::size_t i = 0; i < config.sampleCount; ++i) {
        auto w = sampleWord(reference, config.sampleMaxLen, rng);
        if (learned.accepts(w) == reference.query(w)) {
            ++report.agreements;
        } else if (report.witnesses.size() < 10) {
            report.witnesses.push_back(std::move(w));
        }
    }
    return report;
}

}  // namespace alma
