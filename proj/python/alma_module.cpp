#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "alma/cli.hpp"
#include "alma/errors.hpp"
#include "alma/io.hpp"
#include "alma/learner.hpp"
#include "alma/minimize.hpp"
#include "alma/omega.hpp"
#include "alma/oracles.hpp"

namespace py = pybind11;
using namespace alma;

namespace {

std::vector<std::string> names(const Alphabet& sigma, const Word& w) {
    std::vector<std::string> out;
    for (Symbol s : w) out.push_back(sigma.name(s));
    return out;
}

Word toWord(const Alphabet& sigma, const std::vector<std::string>& symbols) {
    Word w;
    for (const auto& name : symbols) {
        auto s = sigma.find(name);
        if (!s) throw InputError("unknown symbol '" + name + "'");
        w.push_back(*s);
    }
    return w;
}

std::vector<std::vector<int>> rows(const Gf2Matrix& m) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c);
    return out;
}

std::vector<int> bits(const Gf2Vector& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.get(i);
    return out;
}

Gf2Vector toVector(const std::vector<int>& b) {
    Gf2Vector v(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] & 1) v.set(i);
    return v;
}

Gf2Matrix toMatrix(const std::vector<std::vector<int>>& rs) {
    const std::size_t n = rs.size(), m = n ? rs[0].size() : 0;
    Gf2Matrix out(n, m);
    for (std::size_t r = 0; r < n; ++r) {
        if (rs[r].size() != m) throw InputError("ragged matrix");
        for (std::size_t c = 0; c < m; ++c)
            if (rs[r][c] & 1) out.set(r, c, true);
    }
    return out;
}

py::dict learnStats(const LearnResult& r) {
    py::dict d;
    d["automaton"] = forwardReduce(r.hypothesis).automaton;
    d["converged"] = r.converged;
    d["equivalence_queries"] = r.state.eqCount;
    d["membership_queries"] = r.state.mqCount;
    return d;
}

}  // namespace

PYBIND11_MODULE(_alma, m) {
    m.doc() = "Learning and minimizing multiplicity automata over GF(2)";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<OracleError>(m, "OracleError", PyExc_RuntimeError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    py::class_<M2ma>(m, "M2ma")
        .def(py::init([](std::vector<std::string> alphabet, std::vector<int> initial,
                         std::vector<std::vector<std::vector<int>>> transitions, std::vector<int> final) {
                 std::vector<Gf2Matrix> mu;
                 for (const auto& t : transitions) mu.push_back(toMatrix(t));
                 return M2ma(Alphabet(std::move(alphabet)), toVector(initial), std::move(mu), toVector(final));
             }),
             py::arg("alphabet"), py::arg("initial"), py::arg("transitions"), py::arg("final"))
        .def_static("parse", &parseM2maFile, py::arg("text"))
        .def_property_readonly("dimension", &M2ma::dimension)
        .def_property_readonly("alphabet", [](const M2ma& a) { return a.alphabet().names(); })
        .def_property_readonly("initial", [](const M2ma& a) { return bits(a.initial()); })
        .def_property_readonly("final", [](const M2ma& a) { return bits(a.final()); })
        .def("transition",
             [](const M2ma& a, const std::string& s) {
                 auto sym = a.alphabet().find(s);
                 if (!sym) throw InputError("unknown symbol '" + s + "'");
                 return rows(a.transition(*sym));
             })
        .def("accepts", [](const M2ma& a, const std::vector<std::string>& w) { return a.accepts(toWord(a.alphabet(), w)); },
             py::arg("word"))
        .def(
            "counterexample",
            [](const M2ma& a, const M2ma& b) -> std::optional<std::vector<std::string>> {
                auto w = findCounterexample(a, b);
                if (!w) return std::nullopt;
                return names(a.alphabet(), *w);
            },
            py::arg("other"))
        .def("equivalent", [](const M2ma& a, const M2ma& b) { return equivalent(a, b); }, py::arg("other"))
        .def("minimize", [](const M2ma& a) { return minimize(a).automaton; })
        .def("minimal_dfa_states", [](const M2ma& a) { return minimalDfaStateCount(a); })
        .def("format", &formatM2ma)
        .def("__repr__", [](const M2ma& a) {
            return "<M2ma dimension=" + std::to_string(a.dimension()) + " alphabet=" +
                   std::to_string(a.alphabet().size()) + ">";
        });

    py::class_<Nfa>(m, "Nfa")
        .def_property_readonly("states", &Nfa::stateCount)
        .def_property_readonly("alphabet", [](const Nfa& a) { return a.alphabet().names(); })
        .def("__repr__",
             [](const Nfa& a) { return std::string("<Nfa ") + toString(a.kind()) + " states=" + std::to_string(a.stateCount()) + ">"; });

    m.def("parse_suba", [](const std::string& text) { return parseNfaFile(text, AutomatonKind::Suba).automaton; },
          py::arg("text"));
    m.def("parse_nba", [](const std::string& text) { return parseNfaFile(text, AutomatonKind::Nba).automaton; },
          py::arg("text"));
    m.def("suba_to_m2ma", [](const Nfa& s) { return ufaToM2ma(subaToUfa(s)); }, py::arg("suba"),
          "Encodes the lasso words u $ v accepted by a SUBA as an M2MA.");

    auto lasso = [](const Nfa& a, const std::vector<std::string>& u, const std::vector<std::string>& v) {
        LassoWord l{toWord(a.alphabet(), u), toWord(a.alphabet(), v)};
        if (l.period.empty()) throw InputError("the period of a lasso must be nonempty");
        return l;
    };
    m.def("suba_accepts", [lasso](const Nfa& a, const std::vector<std::string>& u,
                                  const std::vector<std::string>& v) { return subaMq(a, lasso(a, u, v)); },
          py::arg("suba"), py::arg("prefix"), py::arg("period"));
    m.def("nba_accepts", [lasso](const Nfa& a, const std::vector<std::string>& u,
                                 const std::vector<std::string>& v) { return nbaMq(a, lasso(a, u, v)); },
          py::arg("nba"), py::arg("prefix"), py::arg("period"));

    m.def(
        "learn",
        [](const M2ma& target) {
            auto min = minimize(target);
            M2maOracle mq(min.automaton);
            TableEquivalence eq(min.automaton, min.table);
            return learnStats(learn(mq, eq));
        },
        py::arg("target"),
        "Learns a target M2MA exactly; returns a dict with the automaton and query counts.");

    m.def(
        "learn_function",
        [](std::vector<std::string> alphabet, std::function<bool(std::vector<std::string>)> fn, std::size_t tests,
           std::size_t maxLen, std::size_t maxEq, std::uint64_t seed) {
            Alphabet sigma(std::move(alphabet));
            FunctionOracle mq(sigma, [&](const Word& w) { return fn(names(sigma, w)); });
            ApproxEqConfig cfg{tests, maxLen, maxEq, seed};
            cfg.validate();
            Rng rng(seed);
            ApproxEquivalence eq(mq, cfg, rng);
            LearnOptions opts;
            opts.maxEq = maxEq;
            return learnStats(learn(mq, eq, opts));
        },
        py::arg("alphabet"), py::arg("oracle"), py::arg("tests") = 1000, py::arg("max_len") = 20,
        py::arg("max_eq") = 100, py::arg("seed") = 1,
        "Learns a language given by a Python predicate on lists of symbols, with sampled equivalence queries.");

    m.def(
        "run",
        [](const std::string& subcommand, const std::string& path, std::optional<std::uint64_t> seed) {
            auto sub = parseSubcommand(subcommand);
            if (!sub) throw InputError("unknown subcommand '" + subcommand + "'");
            RunSpec spec;
            spec.subcommand = *sub;
            spec.inputPath = path;
            spec.seed = seed;
            std::istringstream in;
            std::ostringstream out, err;
            const int code = runSubcommand(spec, in, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("subcommand"), py::arg("path"), py::arg("seed") = py::none(),
        "Runs a command-line pipeline; returns (exit code, stdout, stderr).");
}
