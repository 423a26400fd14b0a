#include "alma/minimize.hpp"

#include <algorithm>
#include <sstream>

namespace alma {

Reduction forwardReduce(const M2ma& a) {
    const auto d = a.dimension();
    const auto& alphabet = a.alphabet();
    if (a.initial().isZero()) return {M2ma::emptyLanguage(alphabet), LabeledBasis{{}, {}, d}};

    std::vector<LinearMap> maps;
    maps.reserve(alphabet.size());
    for (const auto& m : a.transitions()) maps.emplace_back(m);

    LabeledBasis basis{{Word{}}, {a.initial()}, d};
    Gf2Basis span(d);
    span.tryExtend(a.initial());

    // images[i][s] = coordinates of basis_i * mu_s, padded to the final size later
    std::vector<std::vector<Gf2Vector>> images;
    for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
        images.emplace_back();
        for (Symbol s = 0; s < alphabet.size(); ++s) {
            auto next = maps[s].applyLeft(basis.vectors[i]);
            auto verdict = span.tryExtend(next);
            if (verdict.extended) {
                images[i].push_back(Gf2Vector::unit(d, basis.vectors.size()));
                Word label = basis.words[i];
                label.push_back(s);
                basis.words.push_back(std::move(label));
                basis.vectors.push_back(std::move(next));
            } else {
                images[i].push_back(verdict.coordinates.resized(d));
            }
        }
    }

    const auto r = basis.vectors.size();
    std::vector<Gf2Matrix> mus(alphabet.size(), Gf2Matrix(r, r));
    Gf2Vector final(r);
    for (std::size_t i = 0; i < r; ++i) {
        final.set(i, dot(basis.vectors[i], a.final()));
        for (Symbol s = 0; s < alphabet.size(); ++s) mus[s].setRow(i, images[i][s].resized(r));
    }
    return {M2ma(alphabet, Gf2Vector::unit(r, 0), std::move(mus), std::move(final)), std::move(basis)};
}

Reduction backwardReduce(const M2ma& a) {
    auto rev = forwardReduce(a.reversed());
    for (auto& w : rev.basis.words) std::reverse(w.begin(), w.end());
    return {rev.automaton.reversed(), std::move(rev.basis)};
}

ObservationTable makeTable(const M2ma& a, std::vector<Word> prefixes, std::vector<Word> suffixes) {
    Gf2Matrix block(prefixes.size(), suffixes.size());
    std::vector<Gf2Vector> costates;
    costates.reserve(suffixes.size());
    for (const auto& y : suffixes) costates.push_back(a.costateOf(y));
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        auto state = a.stateAfter(prefixes[i]);
        for (std::size_t j = 0; j < suffixes.size(); ++j) block.set(i, j, dot(state, costates[j]));
    }
    return {std::move(prefixes), std::move(suffixes), std::move(block)};
}

Minimization minimize(const M2ma& a, const ProgressSink& progress) {
    auto report = [&](ProgressEvent e) {
        if (progress) progress(e);
    };
    report({MinimizeStage::Input, a.dimension(), &a, nullptr});

    auto forward = forwardReduce(a);
    report({MinimizeStage::ForwardBasis, forward.basis.size()});
    auto backward = backwardReduce(forward.automaton);
    report({MinimizeStage::BackwardBasis, backward.basis.size()});

    if (forward.basis.size() == 0 || backward.basis.size() == 0) {
        Minimization empty{M2ma::emptyLanguage(a.alphabet()), ObservationTable{{}, {}, Gf2Matrix()}};
        report({MinimizeStage::TableComplete, 0, nullptr, &empty.table});
        return empty;
    }

    // Relabel with access words; this pass also puts the initial vector back to e1.
    auto labeled = forwardReduce(backward.automaton);
    auto table = makeTable(a, std::move(labeled.basis.words), std::move(backward.basis.words));
    if (table.block.rows() != table.block.cols() || !isInvertible(table.block)) {
        throw InvariantError("minimized observation table is not square and invertible (" +
                             std::to_string(table.block.rows()) + "x" +
                             std::to_string(table.block.cols()) + ")");
    }
    Minimization result{std::move(labeled.automaton), std::move(table)};
    report({MinimizeStage::TableComplete, result.automaton.dimension(), nullptr, &result.table});
    return result;
}

std::string renderTable(const ObservationTable& table, const Alphabet& alphabet) {
    std::vector<std::string> rowLabels, colLabels;
    for (const auto& x : table.prefixes) rowLabels.push_back(alphabet.formatCompact(x));
    for (const auto& y : table.suffixes) colLabels.push_back(alphabet.formatCompact(y));

    std::size_t labelWidth = 1;
    for (const auto& l : rowLabels) labelWidth = std::max(labelWidth, l.size());
    std::vector<std::size_t> widths;
    for (const auto& l : colLabels) widths.push_back(std::max<std::size_t>(1, l.size()));

    std::ostringstream out;
    auto pad = [&](const std::string& s, std::size_t w) { out << s << std::string(w - s.size(), ' '); };
    pad("", labelWidth);
    for (std::size_t j = 0; j < colLabels.size(); ++j) {
        out << ' ';
        pad(colLabels[j], widths[j]);
    }
    out << '\n';
    for (std::size_t i = 0; i < rowLabels.size(); ++i) {
        pad(rowLabels[i], labelWidth);
        for (std::size_t j = 0; j < colLabels.size(); ++j) {
            out << ' ';
            pad(table.block.at(i, j) ? "1" : "0", widths[j]);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace alma
