#pragma once

#include <optional>

#include "spk/enumerate.hpp"

namespace spk {

/// The full set of Stirling-word statistics. Single-position statistics count
/// positions of the zero-padded word; pair statistics look at the two copies
/// of each value.
struct StatRecord {
    int asc = 0, plat = 0, des = 0;
    int lap = 0, rpd = 0, eud = 0, apd = 0, vv = 0;
    int dplat = 0, dasc = 0, dd = 0, uu = 0, ddes = 0, pasc = 0;
    int apap = 0, dpa = 0, pdpd = 0;
    int ap = 0;

    bool operator==(const StatRecord& o) const = default;
};

struct QZeroStatRecord {
    int lap = 0, ap = 0, even = 0;

    bool operator==(const QZeroStatRecord& o) const = default;
};

struct SignedStatRecord {
    int desA = 0, desB = 0, neg = 0, fdes = 0;
    std::optional<int> desD;  // defined for n >= 2 only

    bool operator==(const SignedStatRecord& o) const = default;
};

struct PermStatRecord {
    int des = 0, exc = 0, ipk = 0, lpk = 0, udrun = 0, fix = 0;

    bool operator==(const PermStatRecord& o) const = default;
};

/// Statistics of a word in which every value appears exactly twice.
StatRecord word_stats(const StirlingWord& w);

/// Statistics of an SP-code, computed from the used child slots of each node.
/// Agrees with word_stats through the code bijection.
StatRecord code_stats(const SPCode& c);

/// Statistics of a word where 1 appears once and every larger value twice.
QZeroStatRecord qzero_stats(const StirlingWord& w);

SignedStatRecord signed_stats(const SignedPerm& p);

PermStatRecord perm_stats(const std::vector<int>& p);

}  // namespace spk
