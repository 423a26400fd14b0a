#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "alma/gf2.hpp"
#include "alma/m2ma.hpp"
#include "alma/word.hpp"

namespace alma {

/// Words paired with the state (or co-state) vectors they generate.
struct LabeledBasis {
    std::vector<Word> words;
    std::vector<Gf2Vector> vectors;
    std::size_t dim = 0;  // ambient dimension of the vectors

    [[nodiscard]] std::size_t size() const { return words.size(); }
};

/// A finite block of the Hankel matrix: block[i][j] = f(prefixes[i] . suffixes[j]).
struct ObservationTable {
    std::vector<Word> prefixes;
    std::vector<Word> suffixes;
    Gf2Matrix block;
};

struct Reduction {
    M2ma automaton;
    LabeledBasis basis;
};

/**
 * Restricts an automaton to its reachable row space.
 *
 * Basis vectors are discovered from v_I^T (labeled by the empty word) by
 * extending each basis vector with every symbol in alphabet order. The
 * result is expressed in the coordinates of that basis, so its initial
 * vector is e1. A zero initial vector yields M2ma::emptyLanguage and an
 * empty basis.
 */
[[nodiscard]] Reduction forwardReduce(const M2ma& a);

/// forwardReduce on the reversed automaton, reversed back. Labels are suffixes w with vector mu(w) v_F.
[[nodiscard]] Reduction backwardReduce(const M2ma& a);

enum class MinimizeStage { Input, ForwardBasis, BackwardBasis, TableComplete };

struct ProgressEvent {
    MinimizeStage stage;
    std::size_t size;                          // dimension or basis size at this stage
    const M2ma* automaton = nullptr;           // set for Input
    const ObservationTable* table = nullptr;   // set for TableComplete
};

using ProgressSink = std::function<void(const ProgressEvent&)>;

struct Minimization {
    M2ma automaton;
    ObservationTable table;
};

/**
 * Forward reduction, then backward reduction, then one more forward pass to
 * label the final basis with access words. The result has dimension equal
 * to the Hankel rank of f (1 for the empty language) and initial vector e1.
 *
 * The emitted table pairs the access words with the suffix words of the
 * backward pass; its block is square and invertible. For the empty
 * language the table is 0x0.
 */
[[nodiscard]] Minimization minimize(const M2ma& a, const ProgressSink& progress = {});

/// block[i][j] = f_a(prefixes[i] . suffixes[j]), computed from states and co-states.
[[nodiscard]] ObservationTable makeTable(const M2ma& a, std::vector<Word> prefixes,
                                         std::vector<Word> suffixes);

/// Grid with prefixes as row labels and suffixes as column labels; the empty word shows as `_`.
[[nodiscard]] std::string renderTable(const ObservationTable& table, const Alphabet& alphabet);

}  // namespace alma
