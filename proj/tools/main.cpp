// chrobak: convert unary NFAs to unions of arithmetic progressions and
// Chrobak-normal-form automata, check equivalence, and inspect the pipeline.
//
// Exit codes: 0 success or affirmative verdict, 1 negative verdict,
// 2 usage or parse error, 3 resource or limit error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

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

namespace {

using namespace chrobak;
using nlohmann::json;

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
}

UnaryNfa load_nfa(const std::string& path, const std::string& fixture) {
    if (!fixture.empty()) {
        if (fixture == "example1")
            return example1_graph();
        throw std::runtime_error("unknown fixture '" + fixture + "' (available: example1)");
    }
    return parse_nfa(read_file(path));
}

enum class InputKind { Auto, Nfa, Aps };

InputKind kind_from_string(const std::string& text) {
    if (text == "auto")
        return InputKind::Auto;
    if (text == "nfa")
        return InputKind::Nfa;
    if (text == "aps")
        return InputKind::Aps;
    throw std::runtime_error("unknown input kind '" + text + "'");
}

EventuallyPeriodicSet load_language(const std::string& path, InputKind kind,
                                    int determinize_limit) {
    if (kind == InputKind::Auto) {
        if (path.ends_with(".nfa"))
            kind = InputKind::Nfa;
        else if (path.ends_with(".aps"))
            kind = InputKind::Aps;
        else
            throw std::runtime_error("cannot infer the kind of '" + path +
                                     "'; pass --lhs-kind/--rhs-kind nfa|aps");
    }
    std::string text = read_file(path);
    if (kind == InputKind::Nfa)
        return determinize(parse_nfa(text), determinize_limit);
    return eps_from_progressions(parse_progressions(text));
}

json progressions_json(const ProgressionSet& ps) {
    json out = json::array();
    for (const auto& p : ps)
        out.push_back({{"offset", p.offset}, {"period", p.period}});
    return out;
}

json cnf_json(const ChrobakNfa& cnf) {
    json cycles = json::array();
    for (const auto& cycle : cnf.cycles)
        cycles.push_back({{"period", cycle.period},
                          {"final_positions", cycle.final_positions}});
    return {{"tail_length", cnf.tail_length},
            {"tail_finals", cnf.tail_finals},
            {"cycles", cycles}};
}

int cmd_convert(const std::string& input, const std::string& fixture,
                const std::string& format, const std::string& dot_path) {
    ConvertResult result = convert(load_nfa(input, fixture));
    if (format == "progressions") {
        std::cout << serialize_progressions(result.progressions);
    } else if (format == "cnf") {
        std::cout << serialize_nfa(cnf_to_nfa(result.cnf));
    } else if (format == "json") {
        json out{{"schema", 1},
                 {"empty_language", result.empty_language},
                 {"zero_accepted", result.zero_accepted},
                 {"n_prime", result.n_prime},
                 {"bounds",
                  {{"singleton_bound", result.singleton_bound},
                   {"offset_bound", result.offset_bound}}},
                 {"progressions", progressions_json(result.progressions)},
                 {"cnf", cnf_json(result.cnf)}};
        json gcds = json::array();
        for (const auto& info : result.scc_gcds)
            gcds.push_back({{"component", info.component},
                            {"size", info.size},
                            {"gcd", info.gcd}});
        out["scc_gcds"] = gcds;
        std::cout << out.dump(2) << '\n';
    }
    if (!dot_path.empty())
        write_file(dot_path, dot_cnf(result.cnf));
    if (result.empty_language)
        std::cerr << "note: the language is empty\n";
    return 0;
}

int cmd_member(const std::string& input, std::int64_t length) {
    bool accepted = member(parse_nfa(read_file(input)), length);
    std::cout << (accepted ? "yes" : "no") << '\n';
    return accepted ? 0 : kExitNegative;
}

int cmd_equal(const std::string& lhs, const std::string& rhs, InputKind lhs_kind,
              InputKind rhs_kind, int determinize_limit) {
    EventuallyPeriodicSet a = load_language(lhs, lhs_kind, determinize_limit);
    EventuallyPeriodicSet b = load_language(rhs, rhs_kind, determinize_limit);
    if (eps_equal(a, b)) {
        std::cout << "equal\n";
        return 0;
    }
    std::int64_t horizon = std::max(a.threshold, b.threshold) +
                           a.period / std::gcd(a.period, b.period) * b.period;
    for (std::int64_t x = 0; x <= horizon; ++x)
        if (eps_member(a, x) != eps_member(b, x)) {
            std::cout << "not equal: first differing length " << x << '\n';
            return kExitNegative;
        }
    std::cout << "not equal\n"; // unreachable for well-formed inputs
    return kExitNegative;
}

int cmd_sccs(const std::string& input) {
    UnaryNfa nfa = parse_nfa(read_file(input));
    auto dec = decompose(nfa);
    for (std::size_t c = 0; c < dec.components.size(); ++c) {
        std::cout << "component " << c << (dec.nontrivial[c] ? " nontrivial" : " trivial")
                  << " size " << dec.components[c].size() << ":";
        for (State q : dec.components[c])
            std::cout << ' ' << q;
        std::cout << '\n';
    }
    for (const auto& [from, to] : dec.condensation_edges)
        std::cout << "condensation " << from << " -> " << to << '\n';
    return 0;
}

int cmd_gcds(const std::string& input) {
    UnaryNfa nfa = parse_nfa(read_file(input));
    auto dec = decompose(nfa);
    for (std::size_t c = 0; c < dec.components.size(); ++c) {
        if (!dec.nontrivial[c])
            continue;
        std::cout << "scc " << c << " size " << dec.components[c].size() << " gcd "
                  << scc_gcd(nfa, dec.components[c]) << '\n';
    }
    return 0;
}

int cmd_oracle(const std::string& input, const std::string& fixture, int determinize_limit) {
    EventuallyPeriodicSet eps = determinize(load_nfa(input, fixture), determinize_limit);
    std::cout << "threshold " << eps.threshold << '\n';
    std::cout << "period " << eps.period << '\n';
    std::cout << "sporadic";
    for (std::int64_t x : eps.sporadic)
        std::cout << ' ' << x;
    std::cout << '\n' << "residues";
    for (std::int64_t r : eps.residues)
        std::cout << ' ' << r;
    std::cout << '\n';
    return 0;
}

int cmd_check_cnf(const std::string& input) {
    bool ok = is_cnf(parse_nfa(read_file(input)));
    std::cout << (ok ? "cnf" : "not-cnf") << '\n';
    return ok ? 0 : kExitNegative;
}

int cmd_fuzz(std::int64_t count, int max_states, std::uint64_t seed, bool naive,
             int determinize_limit) {
    std::int64_t failures = 0;
    std::int64_t skipped = 0;
    auto check_case = [&](const std::string& label, const UnaryNfa& nfa, int limit) {
        try {
            EventuallyPeriodicSet exact = determinize(nfa, limit);
            EventuallyPeriodicSet candidate =
                naive ? eps_from_progressions(diophantine_overapprox(nfa, nfa.state_count))
                      : eps_from_progressions(convert(nfa).progressions);
            if (!eps_equal(candidate, exact)) {
                ++failures;
                std::cout << "FAIL " << label << '\n' << serialize_nfa(nfa);
            }
        } catch (const LimitError& e) {
            ++skipped;
            std::cerr << "skip " << label << ": " << e.what() << '\n';
        }
    };
    if (naive) // guaranteed counterexample to the naive method
        check_case("fixture example1", example1_graph(), 32);
    for (std::int64_t i = 0; i < count; ++i)
        check_case("case " + std::to_string(i), random_nfa(seed, i, max_states),
                   determinize_limit);
    std::cout << "fuzz: " << count << " case(s), " << failures << " failure(s)";
    if (skipped > 0)
        std::cout << ", " << skipped << " skipped";
    std::cout << '\n';
    return failures == 0 ? 0 : kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unary NFA to arithmetic-progression / Chrobak-normal-form converter"};
    app.require_subcommand(1);

    std::string input, fixture, format = "progressions", dot_path;
    std::string lhs, rhs, lhs_kind = "auto", rhs_kind = "auto";
    std::int64_t length = 0, count = 100;
    int max_states = 10, determinize_limit = 20;
    std::uint64_t seed = 42;
    bool naive = false;

    auto* convert_cmd = app.add_subcommand("convert", "convert an NFA to progressions/CNF");
    auto* convert_input = convert_cmd->add_option("input", input, "NFA file");
    convert_cmd->add_option("--fixture", fixture, "use a built-in fixture (example1)")
        ->excludes(convert_input);
    convert_cmd->add_option("--format", format, "progressions (default), cnf, or json")
        ->check(CLI::IsMember({"progressions", "cnf", "json"}));
    convert_cmd->add_option("--dot", dot_path, "write a DOT rendering of the CNF automaton");

    auto* member_cmd = app.add_subcommand("member", "test one length for membership");
    member_cmd->add_option("input", input, "NFA file")->required();
    member_cmd->add_option("length", length, "word length to test")
        ->required()
        ->check(CLI::NonNegativeNumber);

    auto* equal_cmd = app.add_subcommand("equal", "compare two language descriptions");
    equal_cmd->add_option("lhs", lhs, "left input (.nfa or .aps)")->required();
    equal_cmd->add_option("rhs", rhs, "right input (.nfa or .aps)")->required();
    equal_cmd->add_option("--lhs-kind", lhs_kind, "auto (default), nfa, or aps")
        ->check(CLI::IsMember({"auto", "nfa", "aps"}));
    equal_cmd->add_option("--rhs-kind", rhs_kind, "auto (default), nfa, or aps")
        ->check(CLI::IsMember({"auto", "nfa", "aps"}));
    equal_cmd->add_option("--determinize-limit", determinize_limit,
                          "state budget for the subset construction (default 20)");

    auto* sccs_cmd = app.add_subcommand("sccs", "print the condensation");
    sccs_cmd->add_option("input", input, "NFA file")->required();

    auto* gcds_cmd = app.add_subcommand("gcds", "print per-SCC sizes and cycle gcds");
    gcds_cmd->add_option("input", input, "NFA file")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "print the determinized language");
    auto* oracle_input = oracle_cmd->add_option("input", input, "NFA file");
    oracle_cmd->add_option("--fixture", fixture, "use a built-in fixture (example1)")
        ->excludes(oracle_input);
    oracle_cmd->add_option("--determinize-limit", determinize_limit,
                           "state budget for the subset construction (default 20)");

    auto* check_cmd = app.add_subcommand("check-cnf", "verify Chrobak normal form structure");
    check_cmd->add_option("input", input, "NFA file")->required();

    auto* fuzz_cmd = app.add_subcommand("fuzz", "random convert-vs-oracle comparison");
    fuzz_cmd->add_option("--count", count, "number of random automata (default 100)")
        ->check(CLI::NonNegativeNumber);
    fuzz_cmd->add_option("--max-states", max_states, "state bound per automaton (default 10)")
        ->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--seed", seed, "generator seed (default 42)");
    fuzz_cmd->add_flag("--naive", naive,
                       "compare the flawed cycle-combination overapproximation instead");
    fuzz_cmd->add_option("--determinize-limit", determinize_limit,
                         "state budget for the subset construction (default 20)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (convert_cmd->parsed()) {
            if (input.empty() && fixture.empty())
                throw std::runtime_error("convert needs an input file or --fixture");
            return cmd_convert(input, fixture, format, dot_path);
        }
        if (member_cmd->parsed())
            return cmd_member(input, length);
        if (equal_cmd->parsed())
            return cmd_equal(lhs, rhs, kind_from_string(lhs_kind),
                             kind_from_string(rhs_kind), determinize_limit);
        if (sccs_cmd->parsed())
            return cmd_sccs(input);
        if (gcds_cmd->parsed())
            return cmd_gcds(input);
        if (oracle_cmd->parsed()) {
            if (input.empty() && fixture.empty())
                throw std::runtime_error("oracle needs an input file or --fixture");
            return cmd_oracle(input, fixture, determinize_limit);
        }
        if (check_cmd->parsed())
            return cmd_check_cnf(input);
        if (fuzz_cmd->parsed()) {
            if (max_states > determinize_limit)
                throw std::runtime_error("--max-states must not exceed --determinize-limit");
            return cmd_fuzz(count, max_states, seed, naive, determinize_limit);
        }
    } catch (const LimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
