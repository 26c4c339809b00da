#include "chrobak/semilinear.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chrobak/errors.hpp"

namespace chrobak {

bool ps_member(const ProgressionSet& ps, std::int64_t x) {
    if (x < 0)
        return false;
    for (const auto& p : ps) {
        if (p.period == 0) {
            if (x == p.offset)
                return true;
        } else if (x >= p.offset && (x - p.offset) % p.period == 0) {
            return true;
        }
    }
    return false;
}

ProgressionSet parse_progressions(const std::string& text) {
    ProgressionSet ps;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        // <a> or <a>+<b>N, decimal, no spaces
        std::int64_t offset = 0;
        auto [p1, ec1] = std::from_chars(line.data(), line.data() + line.size(), offset);
        if (ec1 != std::errc() || p1 == line.data())
            throw ParseError(line_no, "expected '<offset>' or '<offset>+<period>N', got '" + line + "'");
        const char* end = line.data() + line.size();
        if (p1 == end) {
            ps.insert({offset, 0});
            continue;
        }
        if (*p1 != '+')
            throw ParseError(line_no, "expected '+' after the offset in '" + line + "'");
        std::int64_t period = 0;
        auto [p2, ec2] = std::from_chars(p1 + 1, end, period);
        if (ec2 != std::errc() || p2 != end - 1 || *p2 != 'N' || period < 1)
            throw ParseError(line_no, "expected '<offset>+<period>N' with period >= 1, got '" + line + "'");
        ps.insert({offset, period});
    }
    return ps;
}

std::string serialize_progressions(const ProgressionSet& ps) {
    std::ostringstream out;
    for (const auto& p : ps) {
        out << p.offset;
        if (p.period > 0)
            out << '+' << p.period << 'N';
        out << '\n';
    }
    return out.str();
}

bool eps_member(const EventuallyPeriodicSet& eps, std::int64_t x) {
    if (x < 0)
        return false;
    if (x < eps.threshold)
        return eps.sporadic.count(x) > 0;
    return eps.residues.count(x % eps.period) > 0;
}

EventuallyPeriodicSet canonicalize(const EventuallyPeriodicSet& eps) {
    if (eps.period <= 0)
        throw std::invalid_argument("period must be positive");
    const std::int64_t t0 = eps.threshold;
    const std::int64_t p0 = eps.period;

    // minimal period: smallest divisor of p0 that shifts the set into itself
    // beyond the threshold
    std::int64_t period = p0;
    for (std::int64_t p = 1; p <= p0; ++p) {
        if (p0 % p != 0)
            continue;
        bool ok = true;
        for (std::int64_t x = t0; ok && x < t0 + p0; ++x)
            ok = eps_member(eps, x) == eps_member(eps, x + p);
        if (ok) {
            period = p;
            break;
        }
    }

    std::set<std::int64_t> residues;
    for (std::int64_t x = t0; x < t0 + period; ++x)
        if (eps_member(eps, x))
            residues.insert(x % period);

    std::int64_t threshold = t0;
    while (threshold > 0 &&
           eps_member(eps, threshold - 1) == (residues.count((threshold - 1) % period) > 0))
        --threshold;

    std::set<std::int64_t> sporadic;
    for (std::int64_t x = 0; x < threshold; ++x)
        if (eps_member(eps, x))
            sporadic.insert(x);
    return {threshold, period, std::move(sporadic), std::move(residues)};
}

bool eps_equal(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b) {
    return canonicalize(a) == canonicalize(b);
}

EventuallyPeriodicSet eps_from_progressions(const ProgressionSet& ps,
                                            std::int64_t lcm_ceiling) {
    std::int64_t period = 1;
    std::int64_t max_offset = -1;
    for (const auto& p : ps) {
        if (p.offset < 0 || p.period < 0)
            throw std::invalid_argument("offsets and periods must be nonnegative");
        max_offset = std::max(max_offset, p.offset);
        if (p.period > 0) {
            if (p.period > lcm_ceiling)
                throw LimitError("progression period exceeds the lcm ceiling");
            period = period / std::gcd(period, p.period) * p.period;
            if (period > lcm_ceiling)
                throw LimitError("lcm of periods exceeds the configured ceiling " +
                                 std::to_string(lcm_ceiling));
        }
    }
    std::int64_t threshold = max_offset + 1;

    EventuallyPeriodicSet eps;
    eps.threshold = threshold;
    eps.period = period;
    for (std::int64_t x = 0; x < threshold; ++x)
        if (ps_member(ps, x))
            eps.sporadic.insert(x);
    // every progression with nonzero period divides `period`, and every
    // x >= threshold clears every offset, so a residue test suffices
    for (std::int64_t r = 0; r < period; ++r)
        for (const auto& p : ps)
            if (p.period > 0 && (r - p.offset) % p.period == 0) {
                eps.residues.insert(r);
                break;
            }
    return canonicalize(eps);
}

std::vector<bool> representable_dp(const std::vector<std::int64_t>& coins,
                                   std::int64_t bound) {
    if (bound < 0)
        throw std::invalid_argument("bound must be nonnegative");
    for (std::int64_t c : coins)
        if (c <= 0)
            throw std::invalid_argument("coins must be positive");
    std::vector<bool> table(static_cast<std::size_t>(bound) + 1, false);
    table[0] = true;
    for (std::int64_t x = 1; x <= bound; ++x)
        for (std::int64_t c : coins)
            if (c <= x && table[static_cast<std::size_t>(x - c)]) {
                table[static_cast<std::size_t>(x)] = true;
                break;
            }
    return table;
}

SemigroupDecomposition numerical_semigroup_decompose(std::vector<std::int64_t> coins,
                                                     std::int64_t n) {
    if (coins.empty())
        throw std::invalid_argument("at least one coin is required");
    std::sort(coins.begin(), coins.end());
    coins.erase(std::unique(coins.begin(), coins.end()), coins.end());
    for (std::int64_t c : coins)
        if (c <= 0 || c > n)
            throw std::invalid_argument("coins must lie in [1, n]");

    SemigroupDecomposition out;
    out.gcd = 0;
    for (std::int64_t c : coins)
        out.gcd = std::gcd(out.gcd, c);
    std::int64_t square = n * n;
    auto table = representable_dp(coins, square);
    for (std::int64_t x = 0; x <= square; ++x)
        if (table[static_cast<std::size_t>(x)])
            out.sporadic.insert(x);
    out.tail_offset = out.gcd * (square / out.gcd + 1);
    return out;
}

} // namespace chrobak
