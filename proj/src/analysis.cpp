#include "spk/analysis.hpp"

#include <algorithm>

#include "spk/catalog.hpp"

namespace spk {

namespace {

// Dense univariate polynomial over exact rationals; index = degree.
using RatPoly = std::vector<Rat>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const RatPoly& p) { return (int)p.size() - 1; }  // -1 for zero

RatPoly to_dense(const Polynomial& p) {
    VarName v("x");
    if (!p.univariate(&v))
        throw std::invalid_argument("root analysis needs a univariate polynomial");
    if (p.has_negative_exponent())
        throw std::invalid_argument("root analysis rejects Laurent input");
    RatPoly d((size_t)p.degree_in(v) + 1, Rat(0));
    for (const auto& [m, c] : p.terms()) d[m.exponent(v)] = Rat(c);
    trim(d);
    return d;
}

RatPoly derivative(const RatPoly& p) {
    RatPoly d;
    for (int i = 1; i <= deg(p); ++i) d.push_back(p[i] * i);
    return d;
}

Rat eval(const RatPoly& p, const Rat& x) {
    Rat r = 0;
    for (int i = deg(p); i >= 0; --i) r = r * x + p[i];
    return r;
}

RatPoly rem(RatPoly a, const RatPoly& b) {
    while (deg(a) >= deg(b) && !a.empty()) {
        Rat factor = a.back() / b.back();
        int shift = deg(a) - deg(b);
        for (int i = 0; i <= deg(b); ++i) a[i + shift] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

RatPoly divide_exact(RatPoly a, const RatPoly& b) {
    RatPoly q(std::max(0, deg(a) - deg(b) + 1), Rat(0));
    while (deg(a) >= deg(b) && !a.empty()) {
        Rat factor = a.back() / b.back();
        int shift = deg(a) - deg(b);
        q[shift] = factor;
        for (int i = 0; i <= deg(b); ++i) a[i + shift] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    if (!a.empty()) throw std::logic_error("divide_exact: nonzero remainder");
    return q;
}

RatPoly monic(RatPoly p) {
    if (p.empty()) return p;
    Rat lead = p.back();
    for (Rat& c : p) c /= lead;
    return p;
}

RatPoly gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

RatPoly squarefree(const RatPoly& p) {
    if (deg(p) <= 0) return p;
    RatPoly g = gcd(p, derivative(p));
    if (deg(g) <= 0) return p;
    return divide_exact(p, g);
}

int sign_of(const Rat& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

struct SturmChain {
    std::vector<RatPoly> seq;

    explicit SturmChain(const RatPoly& p) {
        seq.push_back(p);
        RatPoly d = derivative(p);
        trim(d);
        if (!d.empty()) seq.push_back(d);
        while (seq.back().size() > 1) {
            RatPoly r = rem(seq[seq.size() - 2], seq.back());
            for (Rat& c : r) c = -c;
            trim(r);
            if (r.empty()) break;
            seq.push_back(std::move(r));
        }
    }

    int variations_at(const std::optional<Rat>& point, bool negative_infinity) const {
        int var = 0, prev = 0;
        for (const RatPoly& f : seq) {
            int s;
            if (point) {
                s = sign_of(eval(f, *point));
            } else {
                s = sign_of(f.empty() ? Rat(0) : f.back());
                if (negative_infinity && deg(f) % 2 == 1) s = -s;
            }
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }
};

// Distinct roots of square-free sf in (lo, hi]; endpoints must not be roots
// of sf except possibly hi, which the caller accounts for.
int count_open(const RatPoly& sf, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    SturmChain chain(sf);
    return chain.variations_at(lo, true) - chain.variations_at(hi, false);
}

int count_halfopen(RatPoly sf, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    int extra = 0;
    if (hi && eval(sf, *hi) == 0) {
        extra = 1;
        RatPoly factor = {-*hi, Rat(1)};
        sf = divide_exact(sf, factor);
    }
    if (lo && eval(sf, *lo) == 0) {
        RatPoly factor = {-*lo, Rat(1)};
        sf = divide_exact(sf, factor);
    }
    if (deg(sf) <= 0) return extra;
    return count_open(sf, lo, hi) + extra;
}

// Square-free decomposition (Yun): p = prod factors[i].first^(factors[i].second)
// with pairwise coprime square-free factors.
std::vector<std::pair<RatPoly, int>> yun(const RatPoly& p) {
    std::vector<std::pair<RatPoly, int>> out;
    if (deg(p) <= 0) return out;
    RatPoly g = gcd(p, derivative(p));
    RatPoly w = divide_exact(p, g);
    RatPoly y = divide_exact(derivative(p), g);
    int i = 1;
    while (deg(w) > 0) {
        RatPoly dw = derivative(w);
        RatPoly z = y;
        z.resize(std::max(z.size(), dw.size()), Rat(0));
        for (int k = 0; k <= deg(dw); ++k) z[k] -= dw[k];
        trim(z);
        RatPoly gi = gcd(w, z);
        if (deg(gi) > 0) out.emplace_back(monic(gi), i);
        w = divide_exact(w, gi);
        y = divide_exact(z, gi);
        ++i;
    }
    return out;
}

// All positive divisors via trial division; inputs in our root searches stay
// well below the bound.
std::vector<Int> divisors(Int v) {
    if (v < 0) v = -v;
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            small.push_back(d);
            if (d * d != v) large.push_back(v / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Exact rational roots of a square-free polynomial; divides them out of sf.
std::vector<Rat> extract_rational_roots(RatPoly& sf) {
    std::vector<Rat> roots;
    if (deg(sf) <= 0) return roots;
    while (deg(sf) >= 1 && sf[0] == 0) {  // root at 0
        roots.push_back(0);
        sf.erase(sf.begin());
    }
    if (deg(sf) == 1) {
        roots.push_back(-sf[0] / sf[1]);
        sf = {Rat(1)};
        return roots;
    }
    if (deg(sf) < 1) return roots;
    // clear denominators to an integer polynomial
    Int lcm = 1;
    for (const Rat& c : sf) {
        Int den = denominator(c);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    std::vector<Int> ip;
    for (const Rat& c : sf) ip.push_back(numerator(c * Rat(lcm)));
    const Int limit("1000000000000");
    if (abs(ip.front()) > limit || abs(ip.back()) > limit) return roots;  // intervals only
    for (const Int& num : divisors(ip.front()))
        for (const Int& den : divisors(ip.back()))
            for (int s : {1, -1}) {
                Rat cand = Rat(s * num, den);
                if (eval(sf, cand) == 0) {
                    roots.push_back(cand);
                    RatPoly factor = {-cand, Rat(1)};
                    sf = divide_exact(sf, factor);
                    if (deg(sf) == 1) {
                        roots.push_back(-sf[0] / sf[1]);
                        sf = {Rat(1)};
                        return roots;
                    }
                }
            }
    return roots;
}

Rat cauchy_bound(const RatPoly& p) {
    Rat m = 0;
    for (int i = 0; i < deg(p); ++i) m = std::max(m, abs(p[i] / p.back()));
    return m + 1;
}

struct RootBox {
    Rat lo, hi;  // open interval holding exactly one root of `factor`
    bool exact = false;
    int multiplicity = 1;
    const RatPoly* factor = nullptr;
};

// Splits (lo, hi) holding `count` roots of square-free sf into isolating boxes.
void bisect(const RatPoly& sf, Rat lo, Rat hi, int count, int multiplicity,
            std::vector<RootBox>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({lo, hi, false, multiplicity, &sf});
        return;
    }
    Rat mid = (lo + hi) / 2;
    RatPoly reduced = sf;
    if (eval(sf, mid) == 0) {
        out.push_back({mid, mid, true, multiplicity, &sf});
        RatPoly factor = {-mid, Rat(1)};
        reduced = divide_exact(sf, factor);
        --count;
    }
    int left = count_halfopen(reduced, lo, mid);
    if (eval(reduced, mid) == 0)
        throw std::logic_error("bisect: midpoint root not removed");
    // mid itself is no longer a root of `reduced`, so (lo,mid] == (lo,mid)
    bisect(sf, lo, mid, left, multiplicity, out);
    bisect(sf, mid, hi, count - left, multiplicity, out);
}

void shrink(RootBox& b) {
    if (b.exact) return;
    Rat mid = (b.lo + b.hi) / 2;
    if (eval(*b.factor, mid) == 0) {
        b.lo = b.hi = mid;
        b.exact = true;
        return;
    }
    if (count_halfopen(*b.factor, b.lo, mid) == 1)
        b.hi = mid;
    else
        b.lo = mid;
}

bool disjoint(const RootBox& a, const RootBox& b) {
    if (a.exact && b.exact) return a.lo != b.lo;
    if (a.exact) return a.lo <= b.lo || a.lo >= b.hi;
    if (b.exact) return b.lo <= a.lo || b.lo >= a.hi;
    return a.hi <= b.lo || b.hi <= a.lo;
}

std::vector<RootBox> isolate(const RatPoly& dense, std::vector<std::vector<RatPoly>>& storage) {
    storage.emplace_back();
    std::vector<RatPoly>& factors = storage.back();
    auto decomposition = yun(dense);
    factors.reserve(decomposition.size() * 2);

    std::vector<RootBox> boxes;
    for (auto& [factor, mult] : decomposition) {
        RatPoly sf = factor;
        std::vector<Rat> rationals = extract_rational_roots(sf);
        for (const Rat& r : rationals) boxes.push_back({r, r, true, mult, nullptr});
        if (deg(sf) >= 1) {
            factors.push_back(sf);
            const RatPoly& stored = factors.back();
            Rat bound = cauchy_bound(stored);
            int total = count_halfopen(stored, -bound, bound);
            if (total != 0) bisect(stored, -bound, bound, total, mult, boxes);
        }
    }
    // separate boxes until pairwise disjoint
    for (bool again = true; again;) {
        again = false;
        for (size_t i = 0; i < boxes.size(); ++i)
            for (size_t j = i + 1; j < boxes.size(); ++j) {
                int rounds = 0;
                while (!disjoint(boxes[i], boxes[j])) {
                    shrink(boxes[i]);
                    shrink(boxes[j]);
                    again = true;
                    if (++rounds > 512)
                        throw std::logic_error("isolate: failed to separate roots");
                }
            }
    }
    std::sort(boxes.begin(), boxes.end(),
              [](const RootBox& a, const RootBox& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
    return boxes;
}

}  // namespace

int sturm_count(const Polynomial& p, const RatInterval& window) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    RatPoly dense = to_dense(p);
    if (deg(dense) == 0) return 0;
    return count_halfopen(squarefree(dense), window.lo, window.hi);
}

int root_multiplicity(const Polynomial& p, const Rat& r) {
    if (p.is_zero()) throw std::invalid_argument("root_multiplicity: zero polynomial");
    RatPoly dense = to_dense(p);
    RatPoly factor = {-r, Rat(1)};
    int m = 0;
    while (deg(dense) >= 1 && eval(dense, r) == 0) {
        dense = divide_exact(dense, factor);
        ++m;
    }
    return m;
}

RootReport isolate_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    RatPoly dense = to_dense(p);
    RootReport report;
    report.polynomial = p.text();
    report.degree = deg(dense);
    std::vector<std::vector<RatPoly>> storage;
    for (const RootBox& b : isolate(dense, storage)) {
        report.roots.push_back({b.lo, b.hi, b.exact, b.multiplicity});
        ++report.distinct_real_roots;
    }
    return report;
}

const std::string& to_string(InterlaceVerdict v) {
    static const std::string names[] = {"interlaces", "alternates-left", "neither", "vacuous"};
    return names[(int)v];
}

namespace {

// Roots listed with multiplicity as comparable objects.
struct RootPoint {
    Rat lo, hi;
    bool exact;
    const RatPoly* factor;  // null for exact
};

bool root_leq(RootPoint& a, RootPoint& b) {
    auto equal = [&]() -> bool {
        if (a.exact && b.exact) return a.lo == b.lo;
        if (a.exact && !b.exact)
            return b.lo < a.lo && a.lo < b.hi && eval(*b.factor, a.lo) == 0;
        if (!a.exact && b.exact)
            return a.lo < b.lo && b.lo < a.hi && eval(*a.factor, b.lo) == 0;
        return false;  // interval-interval ties fall back to the gcd test
    };
    for (int round = 0;; ++round) {
        if (equal()) return true;
        bool a_below = (a.exact ? a.lo : a.hi) <= (b.exact ? b.lo : b.lo);
        if (a_below) return true;
        bool b_below = (b.exact ? b.lo : b.hi) <= (a.exact ? a.lo : a.lo);
        if (b_below) return false;
        // overlapping; shrink the interval ones
        if (round > 256) {
            // potential shared irrational root: decide by gcd
            if (!a.exact && !b.exact) {
                RatPoly g = gcd(*a.factor, *b.factor);
                Rat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
                if (deg(g) > 0 && count_halfopen(g, lo, hi) > 0) return true;  // tie
            }
            if (round > 512) throw std::logic_error("root comparison failed to converge");
        }
        auto shrink_one = [](RootPoint& r) {
            if (r.exact) return;
            Rat mid = (r.lo + r.hi) / 2;
            if (eval(*r.factor, mid) == 0) {
                r.lo = r.hi = mid;
                r.exact = true;
                return;
            }
            if (count_halfopen(*r.factor, r.lo, mid) == 1)
                r.hi = mid;
            else
                r.lo = mid;
        };
        shrink_one(a);
        shrink_one(b);
    }
}

std::vector<RootPoint> root_list(const RatPoly& dense, std::vector<std::vector<RatPoly>>& storage) {
    std::vector<RootPoint> pts;
    for (const RootBox& b : isolate(dense, storage))
        for (int i = 0; i < b.multiplicity; ++i)
            pts.push_back({b.lo, b.hi, b.exact, b.factor});
    return pts;
}

bool real_rooted(const RatPoly& dense) {
    if (deg(dense) <= 0) return true;
    RatPoly sf = squarefree(dense);
    return count_halfopen(sf, std::nullopt, std::nullopt) == deg(sf);
}

}  // namespace

InterlaceVerdict interlace_verdict(const Polynomial& p, const Polynomial& q) {
    RatPoly dp = to_dense(p), dq = to_dense(q);
    if (!real_rooted(dp))
        throw std::domain_error("interlace_verdict: first polynomial is not real-rooted: " + p.text());
    if (!real_rooted(dq))
        throw std::domain_error("interlace_verdict: second polynomial is not real-rooted: " + q.text());
    if (deg(dp) <= 0 || deg(dq) <= 0) return InterlaceVerdict::vacuous;

    std::vector<std::vector<RatPoly>> storage;
    std::vector<RootPoint> xi = root_list(dp, storage);
    std::vector<RootPoint> theta = root_list(dq, storage);

    if (deg(dq) == deg(dp) + 1) {
        // theta_1 <= xi_1 <= theta_2 <= ... <= xi_m <= theta_{m+1}
        for (size_t i = 0; i < xi.size(); ++i)
            if (!root_leq(theta[i], xi[i]) || !root_leq(xi[i], theta[i + 1]))
                return InterlaceVerdict::neither;
        return InterlaceVerdict::interlaces;
    }
    if (deg(dq) == deg(dp)) {
        // xi_1 <= theta_1 <= xi_2 <= ... <= xi_m <= theta_m
        for (size_t i = 0; i < xi.size(); ++i) {
            if (!root_leq(xi[i], theta[i])) return InterlaceVerdict::neither;
            if (i + 1 < xi.size() && !root_leq(theta[i], xi[i + 1]))
                return InterlaceVerdict::neither;
        }
        return InterlaceVerdict::alternates_left;
    }
    return InterlaceVerdict::neither;
}

bool ZerosReport::all_pass() const {
    for (const auto& item : items)
        if (!item.pass) return false;
    return true;
}

ZerosReport theorem_zeros_report(int n_max) {
    if (n_max < 2) throw std::invalid_argument("theorem_zeros_report: n_max must be >= 2");
    ZerosReport report;
    auto add = [&](int n, std::string claim, bool pass, std::string detail = "") {
        report.items.push_back({n, std::move(claim), pass, std::move(detail)});
    };

    for (int n = 1; n <= n_max; ++n) {
        Polynomial fn = f_poly(n);
        RatPoly dense = to_dense(fn);

        int mult = root_multiplicity(fn, Rat(-1));
        bool mult_ok = mult == n / 2;
        add(n, "multiplicity of -1 in f_n is floor(n/2)", mult_ok,
            mult_ok ? "" : "got " + std::to_string(mult));

        RatPoly quotient = dense;
        RatPoly one_plus_x = {Rat(1), Rat(1)};
        for (int i = 0; i < mult; ++i) quotient = divide_exact(quotient, one_plus_x);
        bool quot_sf = deg(quotient) <= 0 || deg(gcd(quotient, derivative(quotient))) == 0;
        bool deg_ok = deg(quotient) == (n - 1) / 2;
        bool window_ok = true;
        if (deg(quotient) > 0) {
            // all remaining roots simple and strictly inside (-1, 0)
            int inside = count_halfopen(quotient, Rat(-1), Rat(0));
            window_ok = inside == deg(quotient) && eval(quotient, Rat(0)) != 0 &&
                        eval(quotient, Rat(-1)) != 0;
        }
        bool zero_ok = eval(dense, Rat(0)) != 0;
        add(n, "remaining floor((n-1)/2) roots of f_n simple in (-1,0)",
            quot_sf && deg_ok && window_ok && zero_ok);

        if (n < n_max) {
            InterlaceVerdict v = interlace_verdict(fn, f_poly(n + 1));
            bool ok = v == InterlaceVerdict::interlaces || v == InterlaceVerdict::vacuous;
            add(n, "f_n interlaces f_{n+1}", ok, ok ? "" : "verdict " + to_string(v));
        }

        Polynomial xin = xi_poly(n);
        RatPoly dxi = to_dense(xin);
        bool xi_ok = real_rooted(dxi) &&
                     (deg(dxi) <= 0 ||
                      (deg(gcd(dxi, derivative(dxi))) == 0 &&
                       count_halfopen(dxi, std::nullopt, Rat(0)) == deg(dxi) &&
                       eval(dxi, Rat(0)) != 0));
        add(n, "xi_n real-rooted with negative simple roots", xi_ok);

        if (n >= 2) {
            Polynomial zetan = zeta_poly(n);
            RatPoly dzeta = to_dense(zetan);
            bool zeta_ok = real_rooted(dzeta) &&
                           (deg(dzeta) <= 0 ||
                            (deg(gcd(dzeta, derivative(dzeta))) == 0 &&
                             count_halfopen(dzeta, std::nullopt, Rat(0)) == deg(dzeta) &&
                             eval(dzeta, Rat(0)) != 0));
            add(n, "zeta_n real-rooted with negative simple roots", zeta_ok);

            InterlaceVerdict v = interlace_verdict(zetan, xin);
            bool ok = n % 2 == 0
                          ? (v == InterlaceVerdict::alternates_left || v == InterlaceVerdict::vacuous)
                          : (v == InterlaceVerdict::interlaces || v == InterlaceVerdict::vacuous);
            add(n, n % 2 == 0 ? "zeta_n alternates left of xi_n" : "zeta_n interlaces xi_n", ok,
                ok ? "" : "verdict " + to_string(v));
        }
    }
    return report;
}

}  // namespace spk
