#include "spk/stats.hpp"

#include <array>
#include <stdexcept>

namespace spk {

namespace {

// 0-padded access, 1-indexed; out-of-range positions read as 0.
struct Padded {
    const std::vector<int>& s;
    int at(int i) const { return (i >= 1 && i <= (int)s.size()) ? s[i - 1] : 0; }
    int len() const { return (int)s.size(); }
};

}  // namespace

StatRecord word_stats(const StirlingWord& w) {
    if (!is_regular_stirling_word(w))
        throw std::invalid_argument("word_stats: not a Stirling word: " + w.str());
    Padded p{w.letters};
    int L = p.len();
    int n = L / 2;
    StatRecord r;

    for (int i = 1; i <= L; ++i) {
        int prev = p.at(i - 1), cur = p.at(i), next = p.at(i + 1);
        if (prev < cur) ++r.asc;
        if (cur == next && i < L) ++r.plat;
        if (cur > next) ++r.des;
        if (prev < cur && cur == next) {
            ++r.lap;
            if (i >= 2) ++r.ap;
        }
        if (prev == cur && cur > next && prev != 0) ++r.rpd;
        if (prev > cur && cur == next) ++r.dplat;
        if (prev < cur && cur < next) ++r.dasc;
        if (prev > cur && cur > next && cur != 0) ++r.ddes;
        if (prev == cur && cur < next && prev != 0) ++r.pasc;
        if (prev > cur && cur == next && next < p.at(i + 2)) ++r.dpa;
        if (prev < cur && cur == next && next > p.at(i + 2)) ++r.apd;
    }

    // pair statistics: locate the two copies of each value
    std::vector<int> first(n + 1, 0), second(n + 1, 0);
    for (int i = 1; i <= L; ++i) {
        int v = p.at(i);
        if (!first[v])
            first[v] = i;
        else
            second[v] = i;
    }
    auto ap_pair_at = [&](int k) {  // sigma_k < sigma_{k+1} = sigma_{k+2}
        return p.at(k) < p.at(k + 1) && p.at(k + 1) == p.at(k + 2) && p.at(k + 1) != 0;
    };
    auto pd_pair_at = [&](int k) {  // sigma_{k-2} = sigma_{k-1} > sigma_k
        return p.at(k - 2) == p.at(k - 1) && p.at(k - 1) > p.at(k) && p.at(k - 1) != 0;
    };
    for (int v = 1; v <= n; ++v) {
        int i = first[v], j = second[v];
        int prev = p.at(i - 1), next = p.at(j + 1);
        if (prev < v && next < v) ++r.eud;
        if (prev > v && next < v) ++r.dd;
        if (prev < v && next > v) ++r.uu;
        if (prev > v && p.at(i + 1) > v && p.at(j - 1) > v && next > v) ++r.vv;
        if (ap_pair_at(i) && ap_pair_at(j)) ++r.apap;
        if (pd_pair_at(i) && pd_pair_at(j)) ++r.pdpd;
    }
    return r;
}

StatRecord code_stats(const SPCode& c) {
    if (!is_valid_code(c)) throw std::invalid_argument("code_stats: invalid code " + c.str());
    int n = c.size();
    // used[a] = bitmask of occupied child slots of node a
    std::vector<int> used(n + 1, 0);
    for (int i = 1; i < n; ++i) used[c.pairs[i].first] |= 1 << (c.pairs[i].second - 1);

    StatRecord r;
    for (int a = 1; a <= n; ++a) {
        bool s1 = used[a] & 1, s2 = used[a] & 2, s3 = used[a] & 4;
        if (!s1) ++r.asc;
        if (!s2) ++r.plat;
        if (!s3) ++r.des;
        if (!s1 && !s2) ++r.lap;
        if (!s2 && !s3) ++r.rpd;
        if (!s1 && !s3) ++r.eud;
        if (!s1 && !s2 && !s3) ++r.apd;
        if (s1 && s2 && s3) ++r.vv;
        if (!s1 && s2) ++r.dasc;
        if (s1 && !s2) ++r.dplat;
        if (s2 && !s3) ++r.ddes;
        if (!s2 && s3) ++r.pasc;
        if (!s1 && s3) ++r.uu;
        if (s1 && !s3) ++r.dd;
        if (!s1 && s2 && s3) ++r.apap;
        if (s1 && !s2 && s3) ++r.dpa;
        if (s1 && s2 && !s3) ++r.pdpd;
    }

    // The decoded word starts with a plateau exactly when the terminal node of
    // the left spine has no left or middle child; that left ascent-plateau is
    // the one lap position the ap statistic excludes.
    std::vector<int> left_child(n + 1, 0);
    for (int i = 1; i < n; ++i)
        if (c.pairs[i].second == 1) left_child[c.pairs[i].first] = i + 1;
    int spine = 1;
    while (left_child[spine]) spine = left_child[spine];
    r.ap = r.lap - ((used[spine] & 3) == 0 ? 1 : 0);
    return r;
}

QZeroStatRecord qzero_stats(const StirlingWord& w) {
    if (!is_qzero_word(w))
        throw std::invalid_argument("qzero_stats: not a one-copy-of-1 Stirling word: " + w.str());
    Padded p{w.letters};
    int L = p.len();
    QZeroStatRecord r;
    for (int i = 1; i < L; ++i) {
        if (p.at(i - 1) < p.at(i) && p.at(i) == p.at(i + 1)) {
            ++r.lap;
            if (i >= 2) ++r.ap;
        }
    }
    int n = (L + 1) / 2;
    std::vector<int> first(n + 1, 0);
    for (int i = 1; i <= L; ++i)
        if (!first[p.at(i)]) first[p.at(i)] = i;
    for (int v = 2; v <= n; ++v)
        if (first[v] % 2 == 0) ++r.even;
    return r;
}

SignedStatRecord signed_stats(const SignedPerm& p) {
    int n = p.size();
    SignedStatRecord r;
    for (int i = 1; i < n; ++i)
        if (p.values[i - 1] > p.values[i]) ++r.desA;
    r.desB = r.desA + (n >= 1 && p.values[0] < 0 ? 1 : 0);
    for (int v : p.values)
        if (v < 0) ++r.neg;
    r.fdes = r.desA + r.desB;
    if (n >= 2) {
        int d = 0;
        for (int i = 1; i <= n; ++i) {
            int prev = i == 1 ? -p.values[1] : p.values[i - 2];
            if (prev > p.values[i - 1]) ++d;
        }
        r.desD = d;
    }
    return r;
}

PermStatRecord perm_stats(const std::vector<int>& p) {
    int n = (int)p.size();
    PermStatRecord r;
    auto at = [&](int i) { return i == 0 ? 0 : p[i - 1]; };  // 0-prefixed
    for (int i = 1; i < n; ++i)
        if (p[i - 1] > p[i]) ++r.des;
    for (int i = 1; i <= n; ++i) {
        if (p[i - 1] > i) ++r.exc;
        if (p[i - 1] == i) ++r.fix;
    }
    for (int i = 2; i <= n - 1; ++i)
        if (p[i - 2] < p[i - 1] && p[i - 1] > p[i]) ++r.ipk;
    for (int i = 1; i <= n - 1; ++i)
        if (at(i - 1) < at(i) && at(i) > at(i + 1)) ++r.lpk;
    if (n >= 1) {
        // maximal monotone segments of 0,p(1),...,p(n)
        r.udrun = 1;
        int dir = 0;  // +1 rising, -1 falling
        for (int i = 1; i <= n; ++i) {
            int step = at(i) > at(i - 1) ? 1 : -1;
            if (dir != 0 && step != dir) ++r.udrun;
            dir = step;
        }
    }
    return r;
}

}  // namespace spk
