#include "chrobak/nfa.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "chrobak/errors.hpp"

namespace chrobak {

void validate(const UnaryNfa& nfa) {
    if (nfa.state_count <= 0)
        throw std::invalid_argument("automaton must have at least one state");
    auto in_range = [&](State q) { return 0 <= q && q < nfa.state_count; };
    if (!in_range(nfa.initial))
        throw std::invalid_argument("initial state out of range");
    for (State f : nfa.finals)
        if (!in_range(f))
            throw std::invalid_argument("final state out of range");
    for (const auto& [u, v] : nfa.edges)
        if (!in_range(u) || !in_range(v))
            throw std::invalid_argument("edge endpoint out of range");
}

std::vector<std::vector<State>> successor_lists(const UnaryNfa& nfa) {
    std::vector<std::vector<State>> succ(nfa.state_count);
    for (const auto& [u, v] : nfa.edges)
        succ[u].push_back(v);
    return succ;
}

std::vector<std::vector<State>> predecessor_lists(const UnaryNfa& nfa) {
    std::vector<std::vector<State>> pred(nfa.state_count);
    for (const auto& [u, v] : nfa.edges)
        pred[v].push_back(u);
    return pred;
}

namespace {

std::int64_t parse_number(const std::string& token, int line) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
        throw ParseError(line, "expected a nonnegative integer, got '" + token + "'");
    return value;
}

State parse_state(const std::string& token, int line, int state_count) {
    std::int64_t value = parse_number(token, line);
    if (value >= state_count)
        throw ParseError(line, "state index " + token + " out of range [0, " +
                                   std::to_string(state_count) + ")");
    return static_cast<State>(value);
}

std::vector<char> forward_reachable(const UnaryNfa& nfa,
                                    const std::vector<std::vector<State>>& adj,
                                    std::vector<State> queue) {
    std::vector<char> seen(nfa.state_count, 0);
    for (State q : queue)
        seen[q] = 1;
    while (!queue.empty()) {
        State q = queue.back();
        queue.pop_back();
        for (State t : adj[q])
            if (!seen[t]) {
                seen[t] = 1;
                queue.push_back(t);
            }
    }
    return seen;
}

// Restriction to the flagged states, renumbered in ascending order.
// The caller guarantees the initial state is kept.
UnaryNfa restrict_states(const UnaryNfa& nfa, const std::vector<char>& keep) {
    std::vector<State> renumber(nfa.state_count, -1);
    int next = 0;
    for (State q = 0; q < nfa.state_count; ++q)
        if (keep[q])
            renumber[q] = next++;
    UnaryNfa out;
    out.state_count = next;
    out.initial = renumber[nfa.initial];
    for (State f : nfa.finals)
        if (keep[f])
            out.finals.insert(renumber[f]);
    for (const auto& [u, v] : nfa.edges)
        if (keep[u] && keep[v])
            out.edges.insert({renumber[u], renumber[v]});
    return out;
}

} // namespace

UnaryNfa parse_nfa(const std::string& text) {
    UnaryNfa nfa;
    bool have_states = false;
    bool have_initial = false;
    int line_no = 0;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream words(line);
        std::string word;
        if (!(words >> word) || word[0] == '#')
            continue;

        std::vector<std::string> args;
        std::string arg;
        while (words >> arg)
            args.push_back(arg);

        if (word == "states") {
            if (have_states)
                throw ParseError(line_no, "duplicate 'states' directive");
            if (args.size() != 1)
                throw ParseError(line_no, "'states' takes exactly one argument");
            std::int64_t n = parse_number(args[0], line_no);
            if (n < 1 || n > 100000000)
                throw ParseError(line_no, "state count must be in [1, 10^8]");
            nfa.state_count = static_cast<int>(n);
            have_states = true;
            continue;
        }
        if (!have_states)
            throw ParseError(line_no, "'" + word + "' before the 'states' directive");
        if (word == "initial") {
            if (have_initial)
                throw ParseError(line_no, "duplicate 'initial' directive");
            if (args.size() != 1)
                throw ParseError(line_no, "'initial' takes exactly one argument");
            nfa.initial = parse_state(args[0], line_no, nfa.state_count);
            have_initial = true;
        } else if (word == "final") {
            if (args.empty())
                throw ParseError(line_no, "'final' needs at least one state index");
            for (const auto& a : args)
                nfa.finals.insert(parse_state(a, line_no, nfa.state_count));
        } else if (word == "edge") {
            if (args.size() != 2)
                throw ParseError(line_no, "'edge' takes exactly two arguments");
            State u = parse_state(args[0], line_no, nfa.state_count);
            State v = parse_state(args[1], line_no, nfa.state_count);
            nfa.edges.insert({u, v});
        } else {
            throw ParseError(line_no, "unknown directive '" + word + "'");
        }
    }
    if (!have_states)
        throw ParseError(std::max(line_no, 1), "missing 'states' directive");
    if (!have_initial)
        throw ParseError(std::max(line_no, 1), "missing 'initial' directive");
    return nfa;
}

std::string serialize_nfa(const UnaryNfa& nfa) {
    std::ostringstream out;
    out << "states " << nfa.state_count << '\n';
    out << "initial " << nfa.initial << '\n';
    if (!nfa.finals.empty()) {
        out << "final";
        for (State f : nfa.finals)
            out << ' ' << f;
        out << '\n';
    }
    for (const auto& [u, v] : nfa.edges)
        out << "edge " << u << ' ' << v << '\n';
    return out.str();
}

bool member(const UnaryNfa& nfa, std::int64_t length) {
    if (length < 0)
        throw std::invalid_argument("length must be nonnegative");
    auto succ = successor_lists(nfa);
    std::vector<char> cur(nfa.state_count, 0), next(nfa.state_count);
    cur[nfa.initial] = 1;
    for (std::int64_t step = 0; step < length; ++step) {
        std::fill(next.begin(), next.end(), 0);
        bool any = false;
        for (State q = 0; q < nfa.state_count; ++q)
            if (cur[q])
                for (State t : succ[q]) {
                    next[t] = 1;
                    any = true;
                }
        if (!any)
            return false;
        cur.swap(next);
    }
    for (State f : nfa.finals)
        if (cur[f])
            return true;
    return false;
}

std::vector<bool> accepted_length_flags(const UnaryNfa& nfa, std::int64_t bound) {
    if (bound < 0)
        throw std::invalid_argument("bound must be nonnegative");
    auto succ = successor_lists(nfa);
    std::vector<char> is_final(nfa.state_count, 0);
    for (State f : nfa.finals)
        is_final[f] = 1;
    std::vector<bool> flags(static_cast<std::size_t>(bound) + 1, false);
    std::vector<char> cur(nfa.state_count, 0), next(nfa.state_count);
    cur[nfa.initial] = 1;
    for (std::int64_t len = 0; len <= bound; ++len) {
        bool hit = false;
        for (State q = 0; q < nfa.state_count && !hit; ++q)
            hit = cur[q] && is_final[q];
        flags[static_cast<std::size_t>(len)] = hit;
        if (len == bound)
            break;
        std::fill(next.begin(), next.end(), 0);
        bool any = false;
        for (State q = 0; q < nfa.state_count; ++q)
            if (cur[q])
                for (State t : succ[q]) {
                    next[t] = 1;
                    any = true;
                }
        if (!any)
            break;
        cur.swap(next);
    }
    return flags;
}

std::set<std::int64_t> accepted_up_to(const UnaryNfa& nfa, std::int64_t bound) {
    auto flags = accepted_length_flags(nfa, bound);
    std::set<std::int64_t> out;
    for (std::int64_t x = 0; x <= bound; ++x)
        if (flags[static_cast<std::size_t>(x)])
            out.insert(x);
    return out;
}

std::optional<UnaryNfa> trim(const UnaryNfa& nfa) {
    auto fwd = forward_reachable(nfa, successor_lists(nfa), {nfa.initial});
    bool final_reachable = false;
    for (State f : nfa.finals)
        final_reachable = final_reachable || fwd[f];
    if (!final_reachable)
        return std::nullopt;
    std::vector<State> finals(nfa.finals.begin(), nfa.finals.end());
    auto bwd = forward_reachable(nfa, predecessor_lists(nfa), std::move(finals));
    std::vector<char> keep(nfa.state_count);
    for (State q = 0; q < nfa.state_count; ++q)
        keep[q] = fwd[q] && bwd[q];
    return restrict_states(nfa, keep);
}

NormalizeResult normalize(const UnaryNfa& nfa) {
    auto trimmed = trim(nfa);
    if (!trimmed)
        return {false, std::nullopt};
    const UnaryNfa& t = *trimmed;
    bool zero_accepted = t.finals.count(t.initial) > 0;

    UnaryNfa ext;
    ext.state_count = t.state_count + 2;
    State fresh_initial = t.state_count;
    State fresh_final = t.state_count + 1;
    ext.initial = fresh_initial;
    ext.finals = {fresh_final};
    ext.edges = t.edges;
    for (const auto& [u, v] : t.edges) {
        if (u == t.initial)
            ext.edges.insert({fresh_initial, v});
        if (t.finals.count(v)) {
            ext.edges.insert({u, fresh_final});
            if (u == t.initial)
                ext.edges.insert({fresh_initial, fresh_final});
        }
    }

    auto positive = trim(ext);
    if (!positive)
        return {zero_accepted, std::nullopt};
    NormalizedNfa norm;
    norm.final_state = *positive->finals.begin();
    norm.n_prime = positive->state_count;
    norm.zero_accepted = zero_accepted;
    norm.automaton = std::move(*positive);
    return {zero_accepted, std::move(norm)};
}

bool exact_length_path_exists(const UnaryNfa& nfa, std::int64_t length) {
    return member(nfa, length);
}

bool exact_length_path_exists(const NormalizedNfa& nfa, std::int64_t length) {
    return member(nfa.automaton, length);
}

} // namespace chrobak
