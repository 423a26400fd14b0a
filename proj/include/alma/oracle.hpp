#pragma once

#include <optional>

#include "alma/m2ma.hpp"
#include "alma/word.hpp"

namespace alma {

/// Answers whether a finite word is in the target language. Must be deterministic.
class MembershipOracle {
public:
    virtual ~MembershipOracle() = default;

    /// The alphabet the learner works over (including `$` for lasso targets).
    [[nodiscard]] virtual const Alphabet& alphabet() const = 0;
    [[nodiscard]] virtual bool query(const Word& w) = 0;
    /// True when the target is an omega-language encoded as u$v words.
    [[nodiscard]] virtual bool isLasso() const { return false; }
};

/// Confirms a hypothesis or returns a word on which it is wrong.
class EquivalenceStrategy {
public:
    virtual ~EquivalenceStrategy() = default;
    [[nodiscard]] virtual std::optional<Word> check(const M2ma& hypothesis) = 0;
};

/// Membership through an M2MA.
class M2maOracle final : public MembershipOracle {
public:
    explicit M2maOracle(M2ma target) : target_(std::move(target)) {}
    [[nodiscard]] const Alphabet& alphabet() const override { return target_.alphabet(); }
    [[nodiscard]] bool query(const Word& w) override { return target_.accepts(w); }
    [[nodiscard]] const M2ma& target() const { return target_; }

private:
    M2ma target_;
};

}  // namespace alma
