#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <vector>

#include "chrobak/cnf.hpp"
#include "chrobak/convert.hpp"
#include "chrobak/cycle_gcd.hpp"
#include "chrobak/dot.hpp"
#include "chrobak/errors.hpp"
#include "chrobak/nfa.hpp"
#include "chrobak/oracle.hpp"
#include "chrobak/random_nfa.hpp"
#include "chrobak/scc.hpp"
#include "chrobak/semilinear.hpp"

namespace py = pybind11;
using namespace chrobak;

namespace {

// Python-facing progression lists; std::set stays an internal detail.
std::vector<ArithmeticProgression> to_list(const ProgressionSet& ps) {
    return {ps.begin(), ps.end()};
}

ProgressionSet to_set(const std::vector<ArithmeticProgression>& list) {
    return {list.begin(), list.end()};
}

std::string repr_progression(const ArithmeticProgression& p) {
    std::ostringstream out;
    out << "ArithmeticProgression(offset=" << p.offset << ", period=" << p.period << ")";
    return out.str();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "unary NFA to arithmetic-progression / Chrobak-normal-form conversion";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<LimitError>(m, "LimitError", PyExc_RuntimeError);

    py::class_<UnaryNfa>(m, "UnaryNfa")
        .def(py::init([](int state_count, State initial, const std::set<State>& finals,
                         const std::set<Edge>& edges) {
                 UnaryNfa nfa{state_count, initial, finals, edges};
                 validate(nfa);
                 return nfa;
             }),
             py::arg("state_count"), py::arg("initial"), py::arg("finals"), py::arg("edges"))
        .def_readonly("state_count", &UnaryNfa::state_count)
        .def_readonly("initial", &UnaryNfa::initial)
        .def_readonly("finals", &UnaryNfa::finals)
        .def_readonly("edges", &UnaryNfa::edges)
        .def(py::self == py::self)
        .def("__repr__", [](const UnaryNfa& nfa) {
            std::ostringstream out;
            out << "UnaryNfa(states=" << nfa.state_count << ", edges=" << nfa.edges.size()
                << ", finals=" << nfa.finals.size() << ")";
            return out.str();
        });

    py::class_<NormalizedNfa>(m, "NormalizedNfa")
        .def_readonly("automaton", &NormalizedNfa::automaton)
        .def_readonly("final_state", &NormalizedNfa::final_state)
        .def_readonly("zero_accepted", &NormalizedNfa::zero_accepted)
        .def_readonly("n_prime", &NormalizedNfa::n_prime);

    py::class_<SccDecomposition>(m, "SccDecomposition")
        .def_readonly("component_of", &SccDecomposition::component_of)
        .def_readonly("components", &SccDecomposition::components)
        .def_readonly("condensation_edges", &SccDecomposition::condensation_edges)
        .def_readonly("nontrivial", &SccDecomposition::nontrivial);

    py::class_<CycleProfile>(m, "CycleProfile")
        .def_readonly("component_size", &CycleProfile::component_size)
        .def_readonly("witness_lengths", &CycleProfile::witness_lengths)
        .def_readonly("gcd_value", &CycleProfile::gcd_value)
        .def_readonly("states", &CycleProfile::states);

    py::class_<ArithmeticProgression>(m, "ArithmeticProgression")
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("offset"),
             py::arg("period") = 0)
        .def_readonly("offset", &ArithmeticProgression::offset)
        .def_readonly("period", &ArithmeticProgression::period)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__",
             [](const ArithmeticProgression& p) {
                 return py::hash(py::make_tuple(p.offset, p.period));
             })
        .def("__repr__", &repr_progression);

    py::class_<EventuallyPeriodicSet>(m, "EventuallyPeriodicSet")
        .def(py::init([](std::int64_t threshold, std::int64_t period,
                         const std::set<std::int64_t>& sporadic,
                         const std::set<std::int64_t>& residues) {
                 return EventuallyPeriodicSet{threshold, period, sporadic, residues};
             }),
             py::arg("threshold"), py::arg("period"), py::arg("sporadic"),
             py::arg("residues"))
        .def_readonly("threshold", &EventuallyPeriodicSet::threshold)
        .def_readonly("period", &EventuallyPeriodicSet::period)
        .def_readonly("sporadic", &EventuallyPeriodicSet::sporadic)
        .def_readonly("residues", &EventuallyPeriodicSet::residues)
        .def(py::self == py::self)
        .def("__contains__",
             [](const EventuallyPeriodicSet& eps, std::int64_t x) {
                 return eps_member(eps, x);
             })
        .def("__repr__", [](const EventuallyPeriodicSet& eps) {
            std::ostringstream out;
            out << "EventuallyPeriodicSet(threshold=" << eps.threshold
                << ", period=" << eps.period << ", sporadic=" << eps.sporadic.size()
                << " item(s), residues=" << eps.residues.size() << " item(s))";
            return out.str();
        });

    py::class_<SemigroupDecomposition>(m, "SemigroupDecomposition")
        .def_readonly("sporadic", &SemigroupDecomposition::sporadic)
        .def_readonly("tail_offset", &SemigroupDecomposition::tail_offset)
        .def_readonly("gcd", &SemigroupDecomposition::gcd);

    py::class_<ChrobakCycle>(m, "ChrobakCycle")
        .def(py::init([](std::int64_t period, const std::set<std::int64_t>& finals) {
                 return ChrobakCycle{period, finals};
             }),
             py::arg("period"), py::arg("final_positions"))
        .def_readonly("period", &ChrobakCycle::period)
        .def_readonly("final_positions", &ChrobakCycle::final_positions)
        .def(py::self == py::self);

    py::class_<ChrobakNfa>(m, "ChrobakNfa")
        .def(py::init([](std::int64_t tail_length, const std::set<std::int64_t>& tail_finals,
                         const std::vector<ChrobakCycle>& cycles) {
                 ChrobakNfa cnf{tail_length, tail_finals, cycles};
                 validate(cnf);
                 return cnf;
             }),
             py::arg("tail_length"), py::arg("tail_finals"), py::arg("cycles"))
        .def_readonly("tail_length", &ChrobakNfa::tail_length)
        .def_readonly("tail_finals", &ChrobakNfa::tail_finals)
        .def_readonly("cycles", &ChrobakNfa::cycles)
        .def("state_count", &cnf_state_count)
        .def("__contains__", &cnf_member)
        .def(py::self == py::self);

    py::class_<SccGcdInfo>(m, "SccGcdInfo")
        .def_readonly("component", &SccGcdInfo::component)
        .def_readonly("size", &SccGcdInfo::size)
        .def_readonly("gcd", &SccGcdInfo::gcd);

    py::class_<ConvertResult>(m, "ConvertResult")
        .def_property_readonly("progressions",
                               [](const ConvertResult& r) { return to_list(r.progressions); })
        .def_readonly("cnf", &ConvertResult::cnf)
        .def_readonly("n_prime", &ConvertResult::n_prime)
        .def_readonly("singleton_bound", &ConvertResult::singleton_bound)
        .def_readonly("offset_bound", &ConvertResult::offset_bound)
        .def_readonly("scc_gcds", &ConvertResult::scc_gcds)
        .def_readonly("zero_accepted", &ConvertResult::zero_accepted)
        .def_readonly("empty_language", &ConvertResult::empty_language);

    py::class_<RhoShape>(m, "RhoShape")
        .def_readonly("subset_chain", &RhoShape::subset_chain)
        .def_readonly("tail_length", &RhoShape::tail_length)
        .def_readonly("cycle_length", &RhoShape::cycle_length);

    // nfa core
    m.def("parse_nfa", &parse_nfa, py::arg("text"));
    m.def("serialize_nfa", &serialize_nfa, py::arg("nfa"));
    m.def("member", &member, py::arg("nfa"), py::arg("length"));
    m.def("accepted_up_to", &accepted_up_to, py::arg("nfa"), py::arg("bound"));
    m.def(
        "exact_length_path_exists",
        [](const UnaryNfa& nfa, std::int64_t length) {
            return exact_length_path_exists(nfa, length);
        },
        py::arg("nfa"), py::arg("length"));
    m.def("trim", &trim, py::arg("nfa"));
    m.def(
        "normalize",
        [](const UnaryNfa& nfa) {
            NormalizeResult result = normalize(nfa);
            return py::make_tuple(result.zero_accepted, result.positive_part);
        },
        py::arg("nfa"), "returns (zero_accepted, NormalizedNfa or None)");

    // scc
    m.def("decompose", &decompose, py::arg("nfa"));
    m.def("reach_states", &reach_states, py::arg("nfa"), py::arg("from_states"));
    m.def("build_restricted", &build_restricted, py::arg("normalized"),
          py::arg("decomposition"), py::arg("component"));

    // cycle gcd
    m.def("cycle_profile", &cycle_profile, py::arg("nfa"), py::arg("component"));
    m.def("cycle_lengths_via_powers", &cycle_lengths_via_powers, py::arg("nfa"),
          py::arg("component"));
    m.def("scc_gcd", &scc_gcd, py::arg("nfa"), py::arg("component"));
    m.def("simple_cycle_lengths", &simple_cycle_lengths, py::arg("nfa"),
          py::arg("component"), py::arg("limit") = 10);
    m.def("simple_cycle_gcd_bruteforce", &simple_cycle_gcd_bruteforce, py::arg("nfa"),
          py::arg("component"), py::arg("limit") = 10);

    // semilinear
    m.def(
        "ps_member",
        [](const std::vector<ArithmeticProgression>& ps, std::int64_t x) {
            return ps_member(to_set(ps), x);
        },
        py::arg("progressions"), py::arg("x"));
    m.def(
        "parse_progressions",
        [](const std::string& text) { return to_list(parse_progressions(text)); },
        py::arg("text"));
    m.def(
        "serialize_progressions",
        [](const std::vector<ArithmeticProgression>& ps) {
            return serialize_progressions(to_set(ps));
        },
        py::arg("progressions"));
    m.def("eps_member", &eps_member, py::arg("eps"), py::arg("x"));
    m.def("canonicalize", &chrobak::canonicalize, py::arg("eps"));
    m.def("eps_equal", &eps_equal, py::arg("lhs"), py::arg("rhs"));
    m.def(
        "eps_from_progressions",
        [](const std::vector<ArithmeticProgression>& ps, std::int64_t lcm_ceiling) {
            return eps_from_progressions(to_set(ps), lcm_ceiling);
        },
        py::arg("progressions"), py::arg("lcm_ceiling") = 1000000000);
    m.def("representable_dp", &representable_dp, py::arg("coins"), py::arg("bound"));
    m.def("numerical_semigroup_decompose", &numerical_semigroup_decompose,
          py::arg("coins"), py::arg("n"));

    // chrobak normal form + pipeline
    m.def(
        "progressions_to_cnf",
        [](const std::vector<ArithmeticProgression>& ps) {
            return progressions_to_cnf(to_set(ps));
        },
        py::arg("progressions"));
    m.def(
        "cnf_to_progressions",
        [](const ChrobakNfa& cnf) { return to_list(cnf_to_progressions(cnf)); },
        py::arg("cnf"));
    m.def("cnf_to_nfa", &cnf_to_nfa, py::arg("cnf"));
    m.def("is_cnf", &is_cnf, py::arg("nfa"));
    m.def("convert", &convert, py::arg("nfa"));

    // oracle
    m.def("rho_shape", &rho_shape, py::arg("nfa"), py::arg("state_limit") = 20);
    m.def("determinize", &determinize, py::arg("nfa"), py::arg("state_limit") = 20);
    m.def("enumerate_paths_lastscc", &enumerate_paths_lastscc, py::arg("normalized"),
          py::arg("decomposition"), py::arg("component"), py::arg("bound"));
    m.def("example1_graph", &example1_graph);
    m.def(
        "diophantine_overapprox",
        [](const UnaryNfa& nfa, int state_limit) {
            return to_list(diophantine_overapprox(nfa, state_limit));
        },
        py::arg("nfa"), py::arg("state_limit") = 12);

    // utilities
    m.def("dot_cnf", &dot_cnf, py::arg("cnf"));
    m.def("random_nfa", &random_nfa, py::arg("seed"), py::arg("index"),
          py::arg("max_states"));
}
