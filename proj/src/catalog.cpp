#include "spk/catalog.hpp"

#include <mutex>

#include "spk/enumerate.hpp"
#include "spk/stats.hpp"

namespace spk {

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }
Polynomial V(const char* name) { return Polynomial::var(name); }

const VarName kX("x"), kY("y"), kQ("q");

Polynomial xpow(int e) { return Polynomial(Monomial::single(kX, e), 1); }

}  // namespace

Int GammaTable::at(int i, int j, int k) const {
    auto it = entries.find({i, j, k});
    return it == entries.end() ? Int(0) : it->second;
}

namespace {

GammaTable gamma_by_recursion(int n, const GammaTable& prev) {
    GammaTable t;
    t.n = n;
    if (n == 1) {
        t.entries[{0, 0, 1}] = 1;
        return t;
    }
    auto prev_at = [&](int i, int j, int k) -> Int {
        if (i < 0 || j < 0 || k < 0) return 0;
        return prev.at(i, j, k);
    };
    for (int k = 0; 3 * k <= 2 * n + 1; ++k)
        for (int j = 0; 2 * j + 3 * k <= 2 * n + 1; ++j) {
            int i = 2 * n + 1 - 2 * j - 3 * k;
            Int value = 3 * (i + 1) * prev_at(i + 1, j, k - 1) +
                        2 * (j + 1) * prev_at(i - 1, j + 1, k - 1) +
                        k * prev_at(i, j - 1, k);
            if (value != 0) t.entries[{i, j, k}] = value;
        }
    return t;
}

GammaTable gamma_by_grammar(int n) {
    const Grammar& h = builtin_grammar(GrammarName::H);
    Polynomial p = h.derive_iter(V("w"), n - 1);
    const VarName u("u"), v("v"), w("w");
    GammaTable t;
    t.n = n;
    for (const auto& [m, c] : p.terms()) {
        std::array<int, 3> key = {m.exponent(u), m.exponent(v), m.exponent(w)};
        long long named = key[0] + key[1] + key[2];
        if (m.degree() != named)
            throw std::logic_error("gamma grammar route produced a foreign variable");
        t.entries[key] = c;
    }
    return t;
}

}  // namespace

const GammaTable& gamma_table(int n) {
    if (n < 1) throw std::invalid_argument("gamma_table: n must be >= 1");
    static std::mutex mu;
    static std::map<int, GammaTable>* cache = new std::map<int, GammaTable>();
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache->find(n);
    if (it != cache->end()) return it->second;
    // fill from the lowest missing level upward so the recursion has its input
    int lo = 1;
    for (; lo <= n && cache->count(lo); ++lo) {}
    for (int m = lo; m <= n; ++m) {
        static const GammaTable empty;
        const GammaTable& prev = m == 1 ? empty : cache->at(m - 1);
        GammaTable rec = gamma_by_recursion(m, prev);
        GammaTable gram = gamma_by_grammar(m);
        if (rec.entries != gram.entries)
            throw std::logic_error("gamma_table: recursion and grammar routes disagree at n=" +
                                   std::to_string(m));
        cache->emplace(m, std::move(rec));
    }
    return cache->at(n);
}

GammaSubstSpec gamma_spec(GammaSpecName name) {
    switch (name) {
        case GammaSpecName::C3:
            return {P("x + y + z"), P("x*y + y*z + z*x"), P("x*y*z"), P("1")};
        case GammaSpecName::N:
            return {P("3"), P("p + q + r"), P("p*q*r"), P("1")};
        case GammaSpecName::Q6:
            return {P("x + y + z"), P("x*y*p + x*z*q + y*z*r"), P("x*y*z*p*q*r"), P("1")};
        case GammaSpecName::Q8:
            return {P("x + y + z"), P("x*y*p + x*z*q + y*z*r"), P("x*y*z*p*q*r*s"), P("t")};
        case GammaSpecName::F17:
            return {P("alpha1*beta2*beta4*x + alpha2*beta1*beta6*y + alpha3*beta3*beta5*z"),
                    P("beta4*beta6*x*y*p + beta2*beta5*x*z*q + beta1*beta3*y*z*r"),
                    P("x*y*z*p*q*r*s"), P("t")};
        case GammaSpecName::NP:
            return {P("alpha1 + alpha2 + alpha3"), P("p + q + r"), P("p*q*r"), P("1")};
        case GammaSpecName::Palpha:
            return {P("alpha1 + alpha2 + alpha3"), P("3"), P("1"), P("1")};
        case GammaSpecName::E6:
            return {P("beta2*beta4 + beta1*beta6 + beta3*beta5"),
                    P("beta4*beta6 + beta2*beta5 + beta1*beta3"), P("1"), P("1")};
        case GammaSpecName::Mbeta:
            return {P("beta1 + beta4 + beta5"), P("beta1 + beta4 + beta5"), P("1"), P("1")};
    }
    throw std::logic_error("unreachable");
}

Polynomial gamma_substitute(int n, const GammaSubstSpec& spec) {
    const GammaTable& t = gamma_table(n);
    std::map<int, Polynomial> up, vp, wp, tp;
    auto power = [](std::map<int, Polynomial>& cache, const Polynomial& base, int e) {
        auto it = cache.find(e);
        if (it == cache.end()) it = cache.emplace(e, base.pow(e)).first;
        return it->second;
    };
    Polynomial sum;
    for (const auto& [key, coeff] : t.entries) {
        auto [i, j, k] = key;
        int te = n - i - j - k;
        if (te < 0) throw std::logic_error("gamma_substitute: negative marker exponent");
        sum += power(up, spec.u, i) * power(vp, spec.v, j) * power(wp, spec.w, k) *
               power(tp, spec.t, te) * coeff;
    }
    return sum;
}

// ------------------------------------------------------- coefficient tables

namespace {

struct XiZeta {
    std::vector<std::vector<Int>> xi, zeta;  // rows indexed from 1
};

// Paired descent-coefficient recurrence:
//   xi(n+1,k)   = (1+2k) xi(n,k) + (n-2k+1) xi(n,k-1) + zeta(n,k-1)/2
//   zeta(n+1,k) = 2(1+k) zeta(n,k) + (n-2k) zeta(n,k-1) + 2 xi(n,k)
// with xi(1,0) = 1 and zeta(1,.) = 0. zeta rows stay even throughout.
const XiZeta& xi_zeta_rows(int n) {
    static std::mutex mu;
    static XiZeta* data = new XiZeta{{{}, {1}}, {{}, {}}};  // rows 0 unused
    std::lock_guard<std::mutex> lock(mu);
    while ((int)data->xi.size() <= n) {
        int m = (int)data->xi.size() - 1;  // extending from row m to m+1
        const auto& xi = data->xi[m];
        const auto& zeta = data->zeta[m];
        auto get = [](const std::vector<Int>& row, int k) -> Int {
            return (k < 0 || k >= (int)row.size()) ? Int(0) : row[k];
        };
        std::vector<Int> nxi(m / 2 + 1, 0), nzeta(m >= 1 ? (m - 1) / 2 + 1 : 0, 0);
        for (int k = 0; k < (int)nxi.size(); ++k)
            nxi[k] = (1 + 2 * k) * get(xi, k) + (m - 2 * k + 1) * get(xi, k - 1) +
                     div_exact(get(zeta, k - 1), 2);
        for (int k = 0; k < (int)nzeta.size(); ++k)
            nzeta[k] = 2 * (1 + k) * get(zeta, k) + (m - 2 * k) * get(zeta, k - 1) +
                       2 * get(xi, k);
        data->xi.push_back(std::move(nxi));
        data->zeta.push_back(std::move(nzeta));
    }
    return *data;
}

}  // namespace

const std::vector<Int>& xi_row(int n) {
    if (n < 1) throw std::invalid_argument("xi_row: n must be >= 1");
    return xi_zeta_rows(n).xi[n];
}

const std::vector<Int>& zeta_row(int n) {
    if (n < 1) throw std::invalid_argument("zeta_row: n must be >= 1");
    return xi_zeta_rows(n).zeta[n];
}

Polynomial updown_poly(int n) {
    if (n < 0) throw std::invalid_argument("updown_poly: n must be >= 0");
    Polynomial t(Int(1));  // T_0
    for (int m = 0; m < n; ++m)
        t = (V("x") * Polynomial(Int(m)) * V("x") + V("x")) * t +
            V("x") * (Polynomial(Int(1)) - V("x") * V("x")) * t.diff(kX);
    return t;
}

Polynomial xi_poly(int n) {
    const auto& row = xi_row(n);
    Polynomial p;
    for (int k = 0; k < (int)row.size(); ++k) p += Polynomial(Monomial::single(kX, k), row[k]);
    return p;
}

Polynomial zeta_poly(int n) {
    const auto& row = zeta_row(n);
    Polynomial p;
    for (int k = 0; k < (int)row.size(); ++k) p += Polynomial(Monomial::single(kX, k), row[k]);
    return p;
}

Polynomial f_poly(int n) {
    if (n < 1) throw std::invalid_argument("f_poly: n must be >= 1");
    Polynomial f(Int(2));  // f_1
    for (int m = 1; m < n; ++m)
        f = (Polynomial(Int(1)) + V("x") + Polynomial(Int(m - 1)) * V("x") * V("x")) * f +
            V("x") * (Polynomial(Int(1)) - V("x") * V("x")) * f.diff(kX);
    return f;
}

Int stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("stirling2: indices out of range");
    // triangle rows up to n
    std::vector<Int> row = {1};  // S2(0,0)
    for (int m = 1; m <= n; ++m) {
        std::vector<Int> next(m + 1, 0);
        for (int j = 1; j <= m; ++j)
            next[j] = j * (j < (int)row.size() ? row[j] : Int(0)) + row[j - 1];
        row = std::move(next);
    }
    return row[k];
}

// ----------------------------------------------------------------- families

const std::vector<std::pair<std::string, FamilyName>>& family_poly_names() {
    static const std::vector<std::pair<std::string, FamilyName>> names = {
        {"A", FamilyName::A},         {"B", FamilyName::B},
        {"Bq", FamilyName::Bq},       {"b", FamilyName::b},
        {"D", FamilyName::D},         {"d", FamilyName::d},
        {"C3", FamilyName::C3},       {"T", FamilyName::T},
        {"xi", FamilyName::xi},       {"zeta", FamilyName::zeta},
        {"f", FamilyName::f},         {"M", FamilyName::M},
        {"Mtilde", FamilyName::Mtilde}, {"N", FamilyName::N},
        {"Q6", FamilyName::Q6},       {"Q8", FamilyName::Q8},
        {"F17", FamilyName::F17},     {"NP", FamilyName::NP},
        {"Palpha", FamilyName::Palpha}, {"E6", FamilyName::E6},
        {"Mbeta", FamilyName::Mbeta}, {"S2", FamilyName::S2},
    };
    return names;
}

FamilyName family_poly_from(const std::string& s) {
    for (const auto& [name, f] : family_poly_names())
        if (name == s) return f;
    throw std::invalid_argument("unknown polynomial family: " + s);
}

const std::string& to_string(FamilyName f) {
    for (const auto& [name, g] : family_poly_names())
        if (g == f) return name;
    throw std::logic_error("unmapped family name");
}

namespace {

Polynomial eulerian_a(int n) {
    Polynomial a(Int(1));  // A_0
    for (int m = 1; m <= n; ++m)
        a = (Polynomial(Int(1)) + Polynomial(Int(m - 1)) * V("x")) * a +
            V("x") * (Polynomial(Int(1)) - V("x")) * a.diff(kX);
    return a;
}

Polynomial eulerian_b(int n) {
    Polynomial b(Int(1));  // B_0
    for (int m = 1; m <= n; ++m)
        b = (Polynomial(Int(1)) + Polynomial(Int(2 * m - 1)) * V("x")) * b +
            Polynomial(Int(2)) * V("x") * (Polynomial(Int(1)) - V("x")) * b.diff(kX);
    return b;
}

Polynomial grammar_route_b(int n) {
    const Grammar& g = builtin_grammar(GrammarName::lemma21);
    Polynomial seed = P("P*E + N*E");
    Polynomial derived = g.derive_iter(seed, n - 1);
    std::map<VarName, Polynomial> subs = {
        {VarName("P"), P("1")}, {VarName("A"), P("1")}, {VarName("E"), P("1")},
        {VarName("N"), V("y")}, {VarName("D"), P("x*y")},
    };
    return derived.substitute(subs);
}

}  // namespace

Polynomial family_poly(FamilyName name, int n) {
    switch (name) {
        case FamilyName::A:
            if (n < 0) break;
            return eulerian_a(n);
        case FamilyName::B:
            if (n < 0) break;
            return eulerian_b(n);
        case FamilyName::Bq:
            if (n < 1) break;
            return family_poly_enumerated(FamilyName::Bq, n);
        case FamilyName::b:
            if (n < 1) break;
            return grammar_route_b(n);
        case FamilyName::D:
            if (n < 2) break;
            return eulerian_b(n) -
                   Polynomial(Int(n)) * Polynomial(int_pow(2, n - 1)) * V("x") * eulerian_a(n - 1);
        case FamilyName::d:
            if (n < 1) break;
            return family_poly_enumerated(FamilyName::d, n);
        case FamilyName::C3:
            if (n < 1) break;
            return gamma_substitute(n, gamma_spec(GammaSpecName::C3));
        case FamilyName::T:
            if (n < 0) break;
            return updown_poly(n);
        case FamilyName::xi:
            if (n < 1) break;
            return xi_poly(n);
        case FamilyName::zeta:
            if (n < 1) break;
            return zeta_poly(n);
        case FamilyName::f:
            if (n < 1) break;
            return f_poly(n);
        case FamilyName::M:
            if (n < 1) break;
            return family_poly_enumerated(FamilyName::M, n);
        case FamilyName::Mtilde:
            if (n < 1) break;
            return family_poly_enumerated(FamilyName::Mtilde, n);
        case FamilyName::N:
            if (n < 1) break;
            return gamma_substitute(n, gamma_spec(GammaSpecName::N));
        case FamilyName::Q6:
            if (n < 1) break;
            return gamma_substitute(n, gamma_spec(GammaSpecName::Q6));
        case FamilyName::Q8:
            if (n < 1) break;
            return gamma_substitute(n, gamma_spec(GammaSpecName::Q8));
        case FamilyName::F17:
            if (n < 1) break;
            return gamma_substitute(n, gamma_spec(GammaSpecName::F17));
        case FamilyName::NP:
            if (n < 1) break;
            return gamma_substitute(n, gamma_spec(GammaSpecName::NP));
        case FamilyName::Palpha:
            if (n < 1) break;
            return gamma_substitute(n, gamma_spec(GammaSpecName::Palpha));
        case FamilyName::E6:
            if (n < 1) break;
            return gamma_substitute(n, gamma_spec(GammaSpecName::E6));
        case FamilyName::Mbeta:
            if (n < 1) break;
            return gamma_substitute(n, gamma_spec(GammaSpecName::Mbeta));
        case FamilyName::S2: {
            if (n < 0) break;
            Polynomial p;
            for (int k = 0; k <= n; ++k)
                p += Polynomial(Monomial::single(kX, k), stirling2(n, k));
            return p;
        }
    }
    throw std::invalid_argument("family_poly: n out of range for " + to_string(name));
}

bool family_has_enum_route(FamilyName name) {
    switch (name) {
        case FamilyName::xi:
        case FamilyName::zeta:
        case FamilyName::f:
        case FamilyName::S2:
            return false;
        default:
            return true;
    }
}

Polynomial family_poly_enumerated(FamilyName name, int n) {
    Polynomial sum;
    const VarName vy("y"), vz("z"), vp("p"), vq("q"), vr("r"), vs("s"), vt("t");
    auto mono = [](std::initializer_list<std::pair<VarName, int>> fs) {
        return Polynomial(Monomial(fs), 1);
    };
    switch (name) {
        case FamilyName::A:
            for_each_perm(Family::S, n, [&](const std::vector<int>& p) {
                sum += xpow(perm_stats(p).des);
            });
            return sum;
        case FamilyName::B:
            for_each_signed(Family::SB, n, [&](const SignedPerm& p) {
                sum += xpow(signed_stats(p).desB);
            });
            return sum;
        case FamilyName::Bq:
            for_each_signed(Family::SB, n, [&](const SignedPerm& p) {
                SignedStatRecord r = signed_stats(p);
                sum += mono({{kX, r.desB}, {kQ, r.neg}});
            });
            return sum;
        case FamilyName::b:
            for_each_signed(Family::SB, n, [&](const SignedPerm& p) {
                SignedStatRecord r = signed_stats(p);
                sum += mono({{kX, r.desA}, {kY, r.desB}});
            });
            return sum;
        case FamilyName::D:
            if (n < 2) throw std::invalid_argument("type D needs n >= 2");
            for_each_signed(Family::SD, n, [&](const SignedPerm& p) {
                sum += xpow(*signed_stats(p).desD);
            });
            return sum;
        case FamilyName::d:
            if (count_family(Family::Derange, n) == 0) return Polynomial();
            for_each_perm(Family::Derange, n, [&](const std::vector<int>& p) {
                sum += xpow(perm_stats(p).exc);
            });
            return sum;
        case FamilyName::C3:
            for_each_word(Family::Q, n, [&](const StirlingWord& w) {
                StatRecord r = word_stats(w);
                sum += mono({{kX, r.asc}, {vy, r.plat}, {vz, r.des}});
            });
            return sum;
        case FamilyName::T:
            for_each_perm(Family::S, n, [&](const std::vector<int>& p) {
                sum += xpow(perm_stats(p).udrun);
            });
            return sum;
        case FamilyName::M:
            for_each_word(Family::Q, n, [&](const StirlingWord& w) {
                sum += xpow(word_stats(w).ap);
            });
            return sum;
        case FamilyName::Mtilde:
            for_each_word(Family::Q, n, [&](const StirlingWord& w) {
                sum += xpow(word_stats(w).lap);
            });
            return sum;
        case FamilyName::N:
            for_each_word(Family::Q, n, [&](const StirlingWord& w) {
                StatRecord r = word_stats(w);
                sum += mono({{vp, r.lap}, {vq, r.eud}, {vr, r.rpd}});
            });
            return sum;
        case FamilyName::Q6:
            for_each_word(Family::Q, n, [&](const StirlingWord& w) {
                StatRecord r = word_stats(w);
                sum += mono({{kX, r.asc}, {vy, r.plat}, {vz, r.des},
                             {vp, r.lap}, {vq, r.eud}, {vr, r.rpd}});
            });
            return sum;
        case FamilyName::Q8:
            for_each_word(Family::Q, n, [&](const StirlingWord& w) {
                StatRecord r = word_stats(w);
                sum += mono({{kX, r.asc}, {vy, r.plat}, {vz, r.des}, {vp, r.lap},
                             {vq, r.eud}, {vr, r.rpd}, {vs, r.apd}, {vt, r.vv}});
            });
            return sum;
        case FamilyName::F17:
            for_each_word(Family::Q, n, [&](const StirlingWord& w) {
                StatRecord r = word_stats(w);
                sum += mono({{kX, r.asc},
                             {vy, r.plat},
                             {vz, r.des},
                             {vp, r.lap},
                             {vq, r.eud},
                             {vr, r.rpd},
                             {vs, r.apd},
                             {vt, r.vv},
                             {VarName("alpha1"), r.apap},
                             {VarName("alpha2"), r.dpa},
                             {VarName("alpha3"), r.pdpd},
                             {VarName("beta1"), r.dplat},
                             {VarName("beta2"), r.dasc},
                             {VarName("beta3"), r.dd},
                             {VarName("beta4"), r.uu},
                             {VarName("beta5"), r.ddes},
                             {VarName("beta6"), r.pasc}});
            });
            return sum;
        case FamilyName::NP:
            for_each_word(Family::Q, n, [&](const StirlingWord& w) {
                StatRecord r = word_stats(w);
                sum += mono({{vp, r.lap},
                             {vq, r.eud},
                             {vr, r.rpd},
                             {VarName("alpha1"), r.apap},
                             {VarName("alpha2"), r.dpa},
                             {VarName("alpha3"), r.pdpd}});
            });
            return sum;
        case FamilyName::Palpha:
            for_each_word(Family::Q, n, [&](const StirlingWord& w) {
                StatRecord r = word_stats(w);
                sum += mono({{VarName("alpha1"), r.apap},
                             {VarName("alpha2"), r.dpa},
                             {VarName("alpha3"), r.pdpd}});
            });
            return sum;
        case FamilyName::E6:
            for_each_word(Family::Q, n, [&](const StirlingWord& w) {
                StatRecord r = word_stats(w);
                sum += mono({{VarName("beta1"), r.dplat},
                             {VarName("beta2"), r.dasc},
                             {VarName("beta3"), r.dd},
                             {VarName("beta4"), r.uu},
                             {VarName("beta5"), r.ddes},
                             {VarName("beta6"), r.pasc}});
            });
            return sum;
        case FamilyName::Mbeta:
            for_each_word(Family::Q, n, [&](const StirlingWord& w) {
                StatRecord r = word_stats(w);
                sum += mono({{VarName("beta1"), r.dplat},
                             {VarName("beta4"), r.uu},
                             {VarName("beta5"), r.ddes}});
            });
            return sum;
        default:
            break;
    }
    throw std::invalid_argument("family_poly_enumerated: no enumeration route for " +
                                to_string(name));
}

Polynomial bn_expansion_rhs(int n) {
    if (n < 2) throw std::invalid_argument("bn_expansion_rhs: n must be >= 2");
    const auto& xi = xi_row(n);
    const auto& zeta = zeta_row(n);
    Polynomial xy = P("x*y");
    Polynomial one_plus_xy = P("1 + x*y");
    Polynomial first, second;
    for (int k = 0; k < (int)xi.size(); ++k)
        first += Polynomial(int_pow(4, k) * xi[k]) * xy.pow(k) * one_plus_xy.pow(n - 1 - 2 * k);
    for (int k = 0; k < (int)zeta.size(); ++k)
        second += Polynomial(int_pow(4, k) * zeta[k]) * xy.pow(k) * one_plus_xy.pow(n - 2 - 2 * k);
    return P("1 + y") * first + P("y + x*y") * second;
}

}  // namespace spk
