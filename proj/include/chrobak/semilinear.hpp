#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace chrobak {

/// The set {offset + period * k : k >= 0}; period 0 denotes {offset}.
struct ArithmeticProgression {
    std::int64_t offset = 0;
    std::int64_t period = 0;

    auto operator<=>(const ArithmeticProgression&) const = default;
};

/// A finite union of arithmetic progressions; the empty set denotes the
/// empty language. Ordered by (offset, period), the canonical output order.
using ProgressionSet = std::set<ArithmeticProgression>;

bool ps_member(const ProgressionSet& ps, std::int64_t x);

/// Text format: one term per line, `<a>` for a singleton or `<a>+<b>N` for
/// period b >= 1, decimal, no spaces; '#' lines and blank lines ignored.
/// The set is the union of all lines. Throws ParseError.
ProgressionSet parse_progressions(const std::string& text);
std::string serialize_progressions(const ProgressionSet& ps);

/// Canonical form of an eventually periodic set of naturals:
/// sporadic members below `threshold`, then the residue classes mod `period`.
/// Canonical means the period is minimal and the threshold minimal for it.
struct EventuallyPeriodicSet {
    std::int64_t threshold = 0;
    std::int64_t period = 1;
    std::set<std::int64_t> sporadic; // members < threshold
    std::set<std::int64_t> residues; // subset of [0, period)

    bool operator==(const EventuallyPeriodicSet&) const = default;
};

bool eps_member(const EventuallyPeriodicSet& eps, std::int64_t x);

/// Minimizes the period (divisors in increasing order), then the threshold.
/// Idempotent; equal sets canonicalize to identical records.
EventuallyPeriodicSet canonicalize(const EventuallyPeriodicSet& eps);

/// True iff both denote the same set of naturals.
bool eps_equal(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b);

/// Exact conversion: period = lcm of all nonzero periods, threshold just past
/// the largest offset, then canonicalized. Throws LimitError when the lcm
/// exceeds `lcm_ceiling` (comparison infeasible, not wrong input).
EventuallyPeriodicSet eps_from_progressions(const ProgressionSet& ps,
                                            std::int64_t lcm_ceiling = 1000000000);

/// The set of nonnegative integer combinations of the coins, split as
/// S union (a + b*N): all representable values up to n^2, then the full
/// residue-0 tail starting at the least multiple of b = gcd(coins) above n^2.
struct SemigroupDecomposition {
    std::set<std::int64_t> sporadic; // representable values <= n^2
    std::int64_t tail_offset = 0;    // least multiple of gcd above n^2
    std::int64_t gcd = 1;
};

/// table[x] is true iff x is a nonnegative integer combination of the coins.
std::vector<bool> representable_dp(const std::vector<std::int64_t>& coins,
                                   std::int64_t bound);

/// Requires 0 < coin <= n for every coin and at least one coin.
SemigroupDecomposition numerical_semigroup_decompose(std::vector<std::int64_t> coins,
                                                     std::int64_t n);

} // namespace chrobak
