#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spk/polynomial.hpp"

namespace spk {

/// Window for root counting. Missing endpoints mean -inf / +inf. A degenerate
/// interval (lo == hi) denotes an exactly known rational point.
struct RatInterval {
    std::optional<Rat> lo, hi;

    static RatInterval whole() { return {}; }
    static RatInterval below(Rat hi) { return {std::nullopt, std::move(hi)}; }
    static RatInterval above(Rat lo) { return {std::move(lo), std::nullopt}; }
    static RatInterval between(Rat lo, Rat hi) { return {std::move(lo), std::move(hi)}; }
    bool exact() const { return lo && hi && *lo == *hi; }
};

/// Number of distinct real roots in (lo, hi], endpoints at infinity open.
/// Multiplicities are ignored (the count is of distinct roots).
int sturm_count(const Polynomial& p, const RatInterval& window);

/// Largest m with (x - r)^m dividing p.
int root_multiplicity(const Polynomial& p, const Rat& r);

struct IsolatedRoot {
    Rat lo, hi;        // lo == hi for exact rational roots
    bool exact = false;
    int multiplicity = 1;
};

struct RootReport {
    std::string polynomial;
    long long degree = 0;
    int distinct_real_roots = 0;
    std::vector<IsolatedRoot> roots;  // ascending; intervals pairwise disjoint
};

/// Exact rational roots are recovered by divisor search on the square-free
/// factors; the rest are bisected into disjoint isolating intervals.
RootReport isolate_roots(const Polynomial& p);

enum class InterlaceVerdict { interlaces, alternates_left, neither, vacuous };
const std::string& to_string(InterlaceVerdict v);

/// Weak interlacing verdict; ties are allowed and compared with multiplicity.
/// Requires both inputs real-rooted (throws otherwise). Degree-zero
/// comparanda (including the zero polynomial) give `vacuous`.
InterlaceVerdict interlace_verdict(const Polynomial& p, const Polynomial& q);

struct ZerosReportItem {
    int n = 0;
    std::string claim;
    bool pass = false;
    std::string detail;
};

struct ZerosReport {
    std::vector<ZerosReportItem> items;
    bool all_pass() const;
};

/// Certifies the root package of the descent-expansion coefficient
/// polynomials for 1 <= n <= n_max: the multiplicity of -1 in f_n, the simple
/// roots in (-1,0), consecutive interlacing, and the parity-dependent
/// relation between the even and odd coefficient parts.
ZerosReport theorem_zeros_report(int n_max);

}  // namespace spk
