#include "spk/checks.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "spk/enumerate.hpp"
#include "spk/stats.hpp"

namespace spk {

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }
Polynomial V(const char* name) { return Polynomial::var(name); }

const VarName kX("x"), kY("y"), kZ("z"), kQv("q");

std::string truncate(std::string s) {
    if (s.size() > 400) s = s.substr(0, 400) + "...";
    return s;
}

std::string poly_mismatch(const std::string& what, const Polynomial& a, const Polynomial& b) {
    if (a == b) return "";
    return what + ": " + truncate(a.text()) + " != " + truncate(b.text());
}

Polynomial mono1(std::initializer_list<std::pair<VarName, int>> fs) {
    return Polynomial(Monomial(fs), 1);
}

// ------------------------------------------------------------- check bodies

std::string check_table1(int n, const CheckOptions&) {
    std::string fail;
    for_each_word(Family::Q, n, [&](const StirlingWord& w) {
        if (!fail.empty()) return;
        StatRecord ws = word_stats(w);
        if (ws.asc + ws.plat + ws.des != 2 * n + 1) {
            fail = "word " + w.str() + ": asc+plat+des != 2n+1";
            return;
        }
        if (ws.apd > ws.lap || ws.apd > ws.eud || ws.apd > ws.rpd) {
            fail = "word " + w.str() + ": apd exceeds lap/eud/rpd";
            return;
        }
        StatRecord cs = code_stats(word_to_code(w));
        if (!(ws == cs)) fail = "word " + w.str() + ": word and code statistics differ";
    });
    return fail;
}

std::string check_roundtrips(int n, const CheckOptions&) {
    std::string fail;
    for_each_word(Family::Q, n, [&](const StirlingWord& w) {
        if (!fail.empty()) return;
        TernaryTree t = word_to_tree(w);
        if (!(tree_to_word(t) == w)) {
            fail = "tree round trip broke on " + w.str();
            return;
        }
        SPCode c = word_to_code(w);
        if (!is_valid_code(c)) {
            fail = "word_to_code produced an invalid code for " + w.str();
            return;
        }
        if (!(code_to_word(c) == w)) {
            fail = "code round trip broke on " + w.str();
            return;
        }
        if (!(tree_to_code(t) == c)) {
            fail = "gap route and tree route disagree on " + w.str();
            return;
        }
        // exterior slots of the tree against the word statistics
        StatRecord ws = word_stats(w);
        int exl = n, exm = n, exr = n;
        for (int v = 2; v <= n; ++v) {
            if (t.slot[v] == 1) --exl;
            if (t.slot[v] == 2) --exm;
            if (t.slot[v] == 3) --exr;
        }
        if (exl != ws.asc || exm != ws.plat || exr != ws.des) {
            fail = "exterior slot counts disagree with word statistics on " + w.str();
            return;
        }
    });
    if (!fail.empty()) return fail;
    for_each_code(n, [&](const SPCode& c) {
        if (!fail.empty()) return;
        if (!(tree_to_code(code_to_tree(c)) == c)) {
            fail = "code/tree round trip broke on " + c.str();
            return;
        }
        StirlingWord w = code_to_word(c);
        if (!is_regular_stirling_word(w)) {
            fail = "decoded word is not a Stirling word: " + c.str();
            return;
        }
        if (!(word_to_code(w) == c)) fail = "word/code round trip broke on " + c.str();
    });
    return fail;
}

std::string check_thm_bn_expansion(int n, const CheckOptions&) {
    Polynomial rhs = bn_expansion_rhs(n);
    Polynomial from_grammar = family_poly(FamilyName::b, n);
    Polynomial from_enum = family_poly_enumerated(FamilyName::b, n);
    std::string r = poly_mismatch("expansion vs grammar", rhs, from_grammar);
    if (!r.empty()) return r;
    return poly_mismatch("expansion vs enumeration", rhs, from_enum);
}

std::string check_grammar_vs_enum_bn(int n, const CheckOptions&) {
    return poly_mismatch("grammar vs enumeration", family_poly(FamilyName::b, n),
                         family_poly_enumerated(FamilyName::b, n));
}

std::string check_xi_zeta_T(int n, const CheckOptions&) {
    Polynomial t = updown_poly(n);
    if (n <= 8) {
        std::string r =
            poly_mismatch("run recursion vs enumeration", t, family_poly_enumerated(FamilyName::T, n));
        if (!r.empty()) return r;
    }
    auto t_coeff = [&](int k) { return t.coefficient(Monomial::single(kX, k)); };
    const auto& xi = xi_row(n);
    const auto& zeta = zeta_row(n);
    for (int k = 0; 2 * k + 1 <= n; ++k) {
        Int want = t_coeff(2 * k + 1);
        Int got = k < (int)xi.size() ? xi[k] : Int(0);
        if (got != want)
            return "xi(" + std::to_string(n) + "," + std::to_string(k) + ") = " + got.str() +
                   " but run count gives " + want.str();
    }
    for (int k = 0; 2 * k + 2 <= n; ++k) {
        Int want = 2 * t_coeff(2 * k + 2);
        Int got = k < (int)zeta.size() ? zeta[k] : Int(0);
        if (got != want)
            return "zeta(" + std::to_string(n) + "," + std::to_string(k) + ") = " + got.str() +
                   " but doubled run count gives " + want.str();
    }
    // f_n = 2 xi_n(x^2) + x zeta_n(x^2)
    Polynomial recombined;
    for (int k = 0; k < (int)xi.size(); ++k)
        recombined += Polynomial(Monomial::single(kX, 2 * k), 2 * xi[k]);
    for (int k = 0; k < (int)zeta.size(); ++k)
        recombined += Polynomial(Monomial::single(kX, 2 * k + 1), zeta[k]);
    std::string r = poly_mismatch("f recursion vs coefficient rows", f_poly(n), recombined);
    if (!r.empty()) return r;
    if (n >= 2) {
        Int xi1 = 0, zeta1 = 0;
        for (const Int& c : xi) xi1 += c;
        for (const Int& c : zeta) zeta1 += c;
        if (2 * xi1 != factorial(n)) return "xi_n(1) != n!/2";
        if (zeta1 != factorial(n)) return "zeta_n(1) != n!";
    }
    return "";
}

Polynomial enum_signed_fourway(int n) {
    Polynomial sum;
    for_each_signed(Family::SB, n, [&](const SignedPerm& p) {
        SignedStatRecord r = signed_stats(p);
        sum += mono1({{kX, r.desA + 1}, {kY, r.desB}, {kQv, r.neg}});
    });
    return sum;
}

Polynomial enum_qzero_fourway(int index) {
    Polynomial sum;
    for_each_word(Family::Q0, index, [&](const StirlingWord& w) {
        QZeroStatRecord r = qzero_stats(w);
        sum += mono1({{kX, r.lap}, {kY, r.ap}, {kQv, r.even}});
    });
    return sum;
}

std::string check_thm24_fourway(int n, const CheckOptions&) {
    Polynomial by_signed = enum_signed_fourway(n);

    const Grammar& g1 = builtin_grammar(GrammarName::g1);
    Polynomial route1 = g1.derive_iter(P("P*E + q*N*E"), n - 1)
                            .substitute({{VarName("P"), V("x")},
                                         {VarName("A"), P("1")},
                                         {VarName("E"), P("1")},
                                         {VarName("N"), P("x*y")},
                                         {VarName("D"), P("x*y")}});
    const Grammar& g2 = builtin_grammar(GrammarName::g2);
    Polynomial route2 = g2.derive_iter(P("g2_alpha*g2_W + q*g2_beta*g2_gamma"), n - 1)
                            .substitute({{VarName("g2_alpha"), V("x")},
                                         {VarName("g2_gamma"), P("1")},
                                         {VarName("g2_W"), P("1")},
                                         {VarName("g2_beta"), P("x*y")}});
    Polynomial by_words = enum_qzero_fourway(n + 1);

    std::string r = poly_mismatch("signed enumeration vs first grammar", by_signed, route1);
    if (r.empty()) r = poly_mismatch("signed enumeration vs second grammar", by_signed, route2);
    if (r.empty()) r = poly_mismatch("signed enumeration vs word enumeration", by_signed, by_words);
    return r;
}

std::string check_cor_oneminusy(int n, const CheckOptions&) {
    Polynomial sum;
    for_each_word(Family::Q0, n + 1, [&](const StirlingWord& w) {
        QZeroStatRecord r = qzero_stats(w);
        Int sign = r.even % 2 == 0 ? 1 : -1;
        sum += Polynomial(Monomial::single(kY, r.ap), sign);
    });
    Polynomial rhs = P("1 - y").pow(n);
    return poly_mismatch("signed ascent-plateau sum", sum, rhs);
}

std::string check_cor_derangement(int n, const CheckOptions&) {
    // Both sides scaled by y^n to stay polynomial. The derangement side uses
    // excedance enumeration.
    Polynomial sum;
    for_each_word(Family::Q0, n + 1, [&](const StirlingWord& w) {
        QZeroStatRecord r = qzero_stats(w);
        Int sign = r.even % 2 == 0 ? 1 : -1;
        sum += Polynomial(Monomial::single(kY, r.ap + n - r.even), sign);
    });
    Polynomial dn;
    if (n >= 2)
        for_each_perm(Family::Derange, n, [&](const std::vector<int>& p) {
            dn += Polynomial(Monomial::single(kY, perm_stats(p).exc), 1);
        });
    else if (n == 0)
        dn = P("1");
    Polynomial rhs = P("y - 1").pow(n) * dn;
    return poly_mismatch("derangement identity", sum, rhs);
}

std::string check_typeD_stembridge(int n, const CheckOptions&) {
    return poly_mismatch("type D identity vs enumeration", family_poly(FamilyName::D, n),
                         family_poly_enumerated(FamilyName::D, n));
}

std::string check_typeD_count(int n, const CheckOptions&) {
    Int odd = 0, even = 0;
    for_each_word(Family::Q0, n + 1, [&](const StirlingWord& w) {
        (qzero_stats(w).even % 2 == 0 ? even : odd) += 1;
    });
    Int expect = int_pow(2, n - 1) * factorial(n);
    if (odd != expect || even != expect)
        return "parity classes " + odd.str() + "/" + even.str() + ", expected " + expect.str();
    if (expect != count_family(Family::SD, n)) return "closed form disagrees with type D size";
    return "";
}

std::string check_dumont_symmetry(int n, const CheckOptions&) {
    Polynomial c = family_poly(FamilyName::C3, n);
    const Grammar& g = builtin_grammar(GrammarName::gxyz);
    std::string r = poly_mismatch("substitution vs grammar", c, g.derive_iter(V("x"), n));
    if (!r.empty()) return r;

    Polynomial rec = P("x*y*z");
    for (int k = 1; k < n; ++k)
        rec = P("x*y*z") * (rec.diff(kX) + rec.diff(kY) + rec.diff(kZ));
    r = poly_mismatch("derivative recursion", c, rec);
    if (!r.empty()) return r;

    const char* vars[3] = {"x", "y", "z"};
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& pi : perms) {
        std::map<VarName, Polynomial> subs;
        for (int i = 0; i < 3; ++i) subs.emplace(VarName(vars[i]), V(vars[pi[i]]));
        if (c.substitute(subs) != c) return "not symmetric under a variable permutation";
    }
    if (n <= 7) {
        r = poly_mismatch("substitution vs enumeration", c,
                          family_poly_enumerated(FamilyName::C3, n));
        if (!r.empty()) return r;
    }
    return "";
}

std::string check_bona_equidist(int n, const CheckOptions&) {
    Polynomial by_asc, by_plat, by_des;
    for_each_word(Family::Q, n, [&](const StirlingWord& w) {
        StatRecord r = word_stats(w);
        by_asc += Polynomial(Monomial::single(kX, r.asc), 1);
        by_plat += Polynomial(Monomial::single(kX, r.plat), 1);
        by_des += Polynomial(Monomial::single(kX, r.des), 1);
    });
    std::string r = poly_mismatch("ascents vs plateaux", by_asc, by_plat);
    if (r.empty()) r = poly_mismatch("plateaux vs descents", by_plat, by_des);
    return r;
}

std::string check_thm32_q8(int n, const CheckOptions&) {
    return poly_mismatch("eight-variable substitution vs enumeration",
                         family_poly(FamilyName::Q8, n),
                         family_poly_enumerated(FamilyName::Q8, n));
}

std::string check_thm34_f17(int n, const CheckOptions&) {
    return poly_mismatch("seventeen-variable substitution vs enumeration",
                         family_poly(FamilyName::F17, n),
                         family_poly_enumerated(FamilyName::F17, n));
}

// --- homogenization identity ------------------------------------------------

struct HomogTuple {
    int asc, plat, des, lap, eud, rpd, apd, vv, alpha;
};

std::vector<HomogTuple> collect_homog(int n, std::string* fail) {
    std::vector<HomogTuple> tuples;
    for_each_word(Family::Q, n, [&](const StirlingWord& w) {
        StatRecord r = word_stats(w);
        int alpha = n + 2 * r.apd - r.lap - r.eud - r.rpd - r.vv;
        if (alpha < 0 && fail->empty()) *fail = "negative homogenization exponent on " + w.str();
        tuples.push_back({r.asc, r.plat, r.des, r.lap, r.eud, r.rpd, r.apd, r.vv, alpha});
    });
    return tuples;
}

struct PowTable {
    std::vector<Int> p;
    PowTable() = default;
    PowTable(const Int& base, int maxe) {
        p.reserve(maxe + 1);
        p.push_back(1);
        for (int i = 1; i <= maxe; ++i) p.push_back(p.back() * base);
    }
    const Int& operator[](int e) const { return p[e]; }
};

std::string check_thm33_homog(int n, const CheckOptions&) {
    std::string fail;
    std::vector<HomogTuple> tuples = collect_homog(n, &fail);
    if (!fail.empty()) return fail;

    int max_apd = 0, max_alpha = 0, max_L = 0, max_vv = 0, max_E = 0;
    for (const auto& t : tuples) {
        max_apd = std::max(max_apd, t.apd);
        max_alpha = std::max(max_alpha, t.alpha);
        max_L = std::max(max_L, t.lap + t.eud + t.rpd);
        max_vv = std::max(max_vv, t.vv);
        max_E = std::max(max_E, t.asc + t.plat + t.des + t.lap + t.eud + t.rpd + t.apd + t.vv);
    }

    if (n <= 4) {
        // symbolic route, denominators cleared by 3^n (xyz)^max_apd
        Polynomial xyz = P("x*y*z");
        Polynomial sum3, sum8;
        Polynomial s3 = P("x + y + z");
        for (const auto& t : tuples) {
            Polynomial w3 = mono1({{kX, t.lap + t.eud}, {kY, t.lap + t.rpd}, {kZ, t.eud + t.rpd}}) *
                            Polynomial(Monomial({{kX, -t.apd}, {kY, -t.apd}, {kZ, -t.apd}}),
                                       int_pow(3, n - t.alpha)) *
                            s3.pow(t.alpha);
            sum3 += w3;
            Polynomial w8 =
                mono1({{kX, t.lap + t.eud}, {kY, t.lap + t.rpd}, {kZ, t.eud + t.rpd},
                       {VarName("p"), t.lap}, {VarName("q"), t.eud}, {VarName("r"), t.rpd},
                       {VarName("s"), t.apd}, {VarName("t"), t.vv}}) *
                Polynomial(Monomial({{kX, -t.apd}, {kY, -t.apd}, {kZ, -t.apd}}),
                           int_pow(3, n - t.alpha)) *
                s3.pow(t.alpha);
            sum8 += w8;
        }
        Polynomial clear = Polynomial(Monomial({{kX, max_apd}, {kY, max_apd}, {kZ, max_apd}}), 1);
        Polynomial lhs3 =
            family_poly(FamilyName::C3, n) * Polynomial(int_pow(3, n)) * clear;
        std::string r = poly_mismatch("trivariate homogenization (symbolic)", lhs3, sum3 * clear);
        if (!r.empty()) return r;
        Polynomial lhs8 =
            family_poly_enumerated(FamilyName::Q8, n) * Polynomial(int_pow(3, n)) * clear;
        r = poly_mismatch("eight-variable homogenization (symbolic)", lhs8, sum8 * clear);
        if (!r.empty()) return r;
    }

    // 25 fixed positive rational points; prime numerators over a shared
    // denominator per point. Everything is cleared to big-integer arithmetic
    // and compared by cross multiplication.
    std::vector<int> primes;
    for (int v = 2; (int)primes.size() < 200; ++v) {
        bool prime = true;
        for (int d : primes) {
            if (d * d > v) break;
            if (v % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(v);
    }

    Polynomial c3 = family_poly(FamilyName::C3, n);
    for (int pt = 0; pt < 25; ++pt) {
        Int a[8];
        for (int k = 0; k < 8; ++k) a[k] = primes[8 * pt + k];
        const Int& ax = a[0];
        const Int& ay = a[1];
        const Int& az = a[2];
        Int den = 101 + pt;
        Int s = ax + ay + az;

        int maxe = 8 * n + 8;
        PowTable pw[8];
        for (int k = 0; k < 8; ++k) pw[k] = PowTable(a[k], maxe);
        PowTable pden(den, 12 * n + 12), ps(s, 4 * n + 4);

        // eight-variable identity
        Int lhs_num = 0;
        for (const auto& t : tuples) {
            int e = t.asc + t.plat + t.des + t.lap + t.eud + t.rpd + t.apd + t.vv;
            lhs_num += pw[0][t.asc] * pw[1][t.plat] * pw[2][t.des] * pw[3][t.lap] *
                       pw[4][t.eud] * pw[5][t.rpd] * pw[6][t.apd] * pw[7][t.vv] *
                       pden[max_E - e];
        }
        // lhs = lhs_num / den^max_E
        PowTable p_xyp(3 * ax * ay * a[3], n), p_xzq(3 * ax * az * a[4], n),
            p_yzr(3 * ay * az * a[5], n), p_ssq(a[6] * s * s, n), p_3t(3 * a[7], n),
            p_dds(den * den * s, 3 * n), p_9xyz(9 * ax * ay * az, n);
        Int rhs_sum = 0;
        for (const auto& t : tuples) {
            int L = t.lap + t.eud + t.rpd;
            rhs_sum += p_xyp[t.lap] * p_xzq[t.eud] * p_yzr[t.rpd] * p_ssq[t.apd] * p_3t[t.vv] *
                       p_dds[max_L - L] * p_9xyz[max_apd - t.apd] * ps[max_vv - t.vv];
        }
        // rhs = s^n * rhs_sum / ((3 den)^n * (den^2 s)^max_L * (9 xyz)^max_apd * s^max_vv)
        Int rhs_num = ps[n] * rhs_sum;
        Int rhs_den = int_pow(3 * den, n) * p_dds[max_L] * p_9xyz[max_apd] * ps[max_vv];
        Int lhs_den = pden[max_E];
        if (lhs_num * rhs_den != rhs_num * lhs_den)
            return "eight-variable point check failed at point " + std::to_string(pt);

        // trivariate identity against the substitution-route polynomial
        RationalPoint rp;
        rp.assignment.emplace(kX, Rat(ax, den));
        rp.assignment.emplace(kY, Rat(ay, den));
        rp.assignment.emplace(kZ, Rat(az, den));
        Rat lhs3 = c3.eval(rp);
        PowTable p_xy(ax * ay, n), p_xz(ax * az, n), p_yz(ay * az, n),
            p_xyz(ax * ay * az, n);
        Int sum3 = 0;
        for (const auto& t : tuples) {
            int L = t.lap + t.eud + t.rpd;
            // (xy)^lap (xz)^eud (yz)^rpd (xyz)^-apd ((x+y+z)/3)^alpha, cleared to
            // the common denominator den^(2 max_L + max_alpha) (xyz)^max_apd 3^n
            sum3 += p_xy[t.lap] * p_xz[t.eud] * p_yz[t.rpd] * pden[3 * t.apd] * ps[t.alpha] *
                    int_pow(3, n - t.alpha) * pden[2 * (max_L - L) + (max_alpha - t.alpha)] *
                    p_xyz[max_apd - t.apd];
        }
        Int den3 = pden[2 * max_L + max_alpha] * p_xyz[max_apd] * int_pow(3, n);
        if (lhs3 != Rat(sum3, den3))
            return "trivariate point check failed at point " + std::to_string(pt);
    }
    return "";
}

std::string check_npa_epos(int n, const CheckOptions&) {
    std::string r = poly_mismatch("six-variable substitution vs enumeration",
                                  family_poly(FamilyName::NP, n),
                                  family_poly_enumerated(FamilyName::NP, n));
    if (r.empty())
        r = poly_mismatch("pair-statistic substitution vs enumeration",
                          family_poly(FamilyName::Palpha, n),
                          family_poly_enumerated(FamilyName::Palpha, n));
    return r;
}

std::string check_e6_symmetry(int n, const CheckOptions&) {
    Polynomial e6 = family_poly(FamilyName::E6, n);
    std::string r = poly_mismatch("substitution vs enumeration", e6,
                                  family_poly_enumerated(FamilyName::E6, n));
    if (!r.empty()) return r;
    auto specialize = [&](int first, int second) {
        std::map<VarName, Polynomial> subs;
        const char* names[6] = {"beta1", "beta2", "beta3", "beta4", "beta5", "beta6"};
        for (int i = 0; i < 6; ++i) {
            if (i == first)
                subs.emplace(VarName(names[i]), V("x"));
            else if (i == second)
                subs.emplace(VarName(names[i]), V("y"));
            else
                subs.emplace(VarName(names[i]), P("1"));
        }
        return e6.substitute(subs);
    };
    Polynomial s12 = specialize(0, 1), s34 = specialize(2, 3), s56 = specialize(4, 5);
    r = poly_mismatch("three-way symmetry (1,2 vs 3,4)", s12, s34);
    if (r.empty()) r = poly_mismatch("three-way symmetry (3,4 vs 5,6)", s34, s56);
    return r;
}

std::string check_mbeta_epos(int n, const CheckOptions&) {
    return poly_mismatch("trivariate pair substitution vs enumeration",
                         family_poly(FamilyName::Mbeta, n),
                         family_poly_enumerated(FamilyName::Mbeta, n));
}

std::string check_carlitz(int n, const CheckOptions& opts) {
    int order = opts.series_order;
    // descent generating polynomial over the words, from the verified
    // substitution route
    Polynomial c3 = family_poly(FamilyName::C3, n).substitute(
        {{kX, P("1")}, {kY, P("1")}});
    std::vector<Int> c(n + 1, 0);
    for (const auto& [m, coeff] : c3.terms()) c[m.exponent(kZ)] = coeff;
    for (int k = 0; k <= order; ++k) {
        // coefficient of x^k in C_n(x) / (1-x)^(2n+1)
        Int acc = 0;
        for (int i = 0; i <= std::min(k, n); ++i) acc += c[i] * binomial(2 * n + k - i, 2 * n);
        if (acc != stirling2(n + k, k))
            return "series coefficient " + std::to_string(k) + " is " + acc.str() +
                   ", expected " + stirling2(n + k, k).str();
    }
    return "";
}

std::string check_convolution(int n, const CheckOptions&) {
    std::vector<Polynomial> m(n + 1), mt(n + 1);
    m[0] = P("1");
    mt[0] = P("1");
    for (int i = 1; i <= n; ++i) {
        m[i] = family_poly_enumerated(FamilyName::M, i);
        mt[i] = family_poly_enumerated(FamilyName::Mtilde, i);
    }
    Polynomial rhs1, rhs2;
    for (int i = 0; i <= n; ++i) {
        rhs1 += Polynomial(binomial(n, i)) * mt[i] * mt[n - i];
        rhs2 += Polynomial(binomial(n, i)) * m[i] * mt[n - i];
    }
    Polynomial lhs1 = Polynomial(int_pow(2, n)) * V("x") * family_poly(FamilyName::A, n);
    std::string r = poly_mismatch("left ascent-plateau convolution", lhs1, rhs1);
    if (r.empty())
        r = poly_mismatch("mixed convolution", family_poly(FamilyName::B, n), rhs2);
    return r;
}

std::string check_gammaA_fs(int n, const CheckOptions&) {
    Polynomial a = family_poly_enumerated(FamilyName::A, n);
    std::vector<Int> g;
    try {
        g = gamma_decompose(a, n);
    } catch (const std::exception& e) {
        return std::string("decomposition failed: ") + e.what();
    }
    for (size_t k = 0; k < g.size(); ++k)
        if (g[k] < 0) return "negative expansion coefficient at k=" + std::to_string(k);
    if (gamma_recompose(g, kX, n) != a) return "re-expansion does not reproduce the input";
    return "";
}

std::string check_gammaA_branden(int n, const CheckOptions&) {
    Polynomial a = family_poly_enumerated(FamilyName::A, n);
    std::vector<Int> g = gamma_decompose(a, n);
    std::vector<Int> ipk_count(n + 2, 0);
    for_each_perm(Family::S, n,
                  [&](const std::vector<int>& p) { ipk_count[perm_stats(p).ipk] += 1; });
    for (int k = 0; k <= n; ++k) {
        Int lhs = k < (int)g.size() ? g[k] * int_pow(2, n - 1 - 2 * k) : Int(0);
        if (lhs != ipk_count[k])
            return "interior peak count mismatch at k=" + std::to_string(k) + ": " + lhs.str() +
                   " vs " + ipk_count[k].str();
    }
    return "";
}

std::string check_gammaB_petersen(int n, const CheckOptions&) {
    Polynomial b = family_poly(FamilyName::B, n);
    std::vector<Int> g = gamma_decompose(b, n + 1);
    std::vector<Int> lpk_count(n + 2, 0);
    for_each_perm(Family::S, n,
                  [&](const std::vector<int>& p) { lpk_count[perm_stats(p).lpk] += 1; });
    for (int i = 0; i <= n; ++i) {
        Int lhs = i < (int)g.size() ? g[i] : Int(0);
        if (lhs != int_pow(4, i) * lpk_count[i])
            return "left peak count mismatch at i=" + std::to_string(i);
    }
    return "";
}

std::string check_counts(int n, const CheckOptions&) {
    for (const auto& [name, f] : family_names()) {
        Int seen = 0;
        FamilyVisitor v;
        v.word = [&](const StirlingWord& w) {
            seen += 1;
            bool ok = f == Family::Q0 ? is_qzero_word(w) : is_regular_stirling_word(w);
            if (!ok) throw std::logic_error("generated word fails validation: " + w.str());
        };
        v.signed_perm = [&](const SignedPerm&) { seen += 1; };
        v.perm = [&](const std::vector<int>&) { seen += 1; };
        v.code = [&](const SPCode& c) {
            seen += 1;
            if (!is_valid_code(c)) throw std::logic_error("generated code fails validation");
        };
        v.tree = [&](const TernaryTree&) { seen += 1; };
        for_each_family(f, n, v);
        if (seen != count_family(f, n))
            return "family " + name + " enumerated " + seen.str() + " objects, closed form " +
                   count_family(f, n).str();
    }
    return "";
}

std::string check_gamma_nonneg(int n, const CheckOptions&) {
    const GammaTable& t = gamma_table(n);  // the two routes are compared inside
    Int mass = 0;
    for (const auto& [key, value] : t.entries) {
        auto [i, j, k] = key;
        if (value < 0) return "negative entry at (" + std::to_string(i) + "," +
                              std::to_string(j) + "," + std::to_string(k) + ")";
        if (i + 2 * j + 3 * k != 2 * n + 1) return "support violation";
        if (n - i - j - k < 0) return "entry outside the tree-degree bound";
        mass += value * int_pow(3, i + j);
    }
    if (mass != odd_double_factorial(n)) return "total mass is not (2n-1)!!";

    using Entries = std::map<std::array<int, 3>, Int>;
    static const std::map<int, Entries> pinned = {
        {1, {{{0, 0, 1}, 1}}},
        {2, {{{0, 1, 1}, 1}}},
        {3, {{{1, 0, 2}, 2}, {{0, 2, 1}, 1}}},
        {4, {{{0, 0, 3}, 6}, {{1, 1, 2}, 8}, {{0, 3, 1}, 1}}},
    };
    auto it = pinned.find(n);
    if (it != pinned.end() && t.entries != it->second) return "pinned table mismatch";
    return "";
}

std::string check_alpha_nonneg(int n, const CheckOptions&) {
    std::string fail;
    for_each_word(Family::Q, n, [&](const StirlingWord& w) {
        if (!fail.empty()) return;
        StatRecord r = word_stats(w);
        int alpha = n + 2 * r.apd - r.lap - r.eud - r.rpd - r.vv;
        if (alpha < 0) fail = "negative exponent on " + w.str();
        if (r.apd > r.lap || r.apd > r.eud || r.apd > r.rpd)
            fail = "apd bound violated on " + w.str();
    });
    return fail;
}

std::string check_gprime_coeffs(int n, const CheckOptions&) {
    const Grammar& g = builtin_grammar(GrammarName::gprime);
    Polynomial derived = g.derive_iter(P("a*E"), n - 1);
    const VarName va("a"), vb("b"), vE("E"), vc("c"), vd("d");
    auto groups = derived.group_by({va, vb, vE});
    Monomial keyA = Monomial({{va, 1}, {vE, 1}});
    Monomial keyB = Monomial({{vb, 1}, {vE, 1}});
    for (const auto& [key, poly] : groups)
        if (key != keyA && key != keyB) return "unexpected group " + Polynomial(key, 1).text();

    const auto& xi = xi_row(n);
    const auto& zeta = zeta_row(n);
    Polynomial partA = groups.count(keyA) ? groups.at(keyA) : Polynomial();
    Polynomial partB = groups.count(keyB) ? groups.at(keyB) : Polynomial();
    Polynomial wantA, wantB;
    for (int k = 0; k < (int)xi.size(); ++k)
        wantA += Polynomial(Monomial({{vc, k}, {vd, n - 1 - 2 * k}}), int_pow(4, k) * xi[k]);
    for (int k = 0; k < (int)zeta.size(); ++k)
        wantB += Polynomial(Monomial({{vc, k}, {vd, n - 2 - 2 * k}}), int_pow(4, k) * zeta[k]);
    std::string r = poly_mismatch("first component", partA, wantA);
    if (r.empty()) r = poly_mismatch("second component", partB, wantB);
    return r;
}

// ----------------------------------------------------------------- registry

struct CheckDef {
    CheckId id;
    std::string name;
    int start_n;
    int default_nmax;
    std::function<std::string(int, const CheckOptions&)> fn;
};

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {CheckId::table1, "table1", 1, 7, check_table1},
        {CheckId::roundtrips, "roundtrips", 1, 7, check_roundtrips},
        {CheckId::thm_bn_expansion, "thm-bn-expansion", 2, 7, check_thm_bn_expansion},
        {CheckId::xi_zeta_T, "xi-zeta-T", 1, 12, check_xi_zeta_T},
        {CheckId::grammar_vs_enum_bn, "grammar-vs-enum-bn", 1, 7, check_grammar_vs_enum_bn},
        {CheckId::thm24_fourway, "thm24-fourway", 1, 6, check_thm24_fourway},
        {CheckId::cor_oneminusy, "cor-oneminusy", 1, 6, check_cor_oneminusy},
        {CheckId::cor_derangement, "cor-derangement", 1, 6, check_cor_derangement},
        {CheckId::typeD_stembridge, "typeD-stembridge", 2, 6, check_typeD_stembridge},
        {CheckId::typeD_count, "typeD-count", 1, 6, check_typeD_count},
        {CheckId::dumont_symmetry, "dumont-symmetry", 1, 7, check_dumont_symmetry},
        {CheckId::bona_equidist, "bona-equidist", 1, 7, check_bona_equidist},
        {CheckId::thm32_q8, "thm32-q8", 1, 6, check_thm32_q8},
        {CheckId::thm33_homog, "thm33-homog", 1, 7, check_thm33_homog},
        {CheckId::thm34_f17, "thm34-f17", 1, 5, check_thm34_f17},
        {CheckId::npa_epos, "npa-epos", 1, 6, check_npa_epos},
        {CheckId::e6_symmetry, "e6-symmetry", 1, 6, check_e6_symmetry},
        {CheckId::mbeta_epos, "mbeta-epos", 1, 6, check_mbeta_epos},
        {CheckId::carlitz, "carlitz", 1, 6, check_carlitz},
        {CheckId::convolution, "convolution", 1, 7, check_convolution},
        {CheckId::gammaA_fs, "gammaA-fs", 1, 8, check_gammaA_fs},
        {CheckId::gammaA_branden, "gammaA-branden", 1, 8, check_gammaA_branden},
        {CheckId::gammaB_petersen, "gammaB-petersen", 1, 8, check_gammaB_petersen},
        {CheckId::counts, "counts", 1, 7, check_counts},
        {CheckId::gamma_nonneg, "gamma-nonneg", 1, 14, check_gamma_nonneg},
        {CheckId::alpha_nonneg, "alpha-nonneg", 1, 7, check_alpha_nonneg},
        {CheckId::gprime_coeffs, "gprime-coeffs", 1, 10, check_gprime_coeffs},
    };
    return defs;
}

const CheckDef& def_of(CheckId id) {
    for (const CheckDef& d : registry())
        if (d.id == id) return d;
    throw std::logic_error("unregistered check");
}

}  // namespace

const std::vector<std::pair<std::string, CheckId>>& check_ids() {
    static const std::vector<std::pair<std::string, CheckId>>* names = [] {
        auto* v = new std::vector<std::pair<std::string, CheckId>>();
        for (const CheckDef& d : registry()) v->emplace_back(d.name, d.id);
        return v;
    }();
    return *names;
}

CheckId check_from(const std::string& s) {
    for (const auto& [name, id] : check_ids())
        if (name == s) return id;
    throw std::invalid_argument("unknown check: " + s);
}

const std::string& to_string(CheckId id) { return def_of(id).name; }

bool CheckReport::all_pass() const {
    for (const CheckRow& r : rows)
        if (!r.pass) return false;
    return true;
}

int check_start_n(CheckId id) { return def_of(id).start_n; }
int check_default_nmax(CheckId id) { return def_of(id).default_nmax; }

CheckReport run_check(CheckId id, int n_max, const CheckOptions& opts) {
    return run_checks({id}, n_max, opts, 1);
}

CheckReport run_checks(const std::vector<CheckId>& ids, int n_max, const CheckOptions& opts,
                       int jobs) {
    struct Task {
        const CheckDef* def;
        int n;
    };
    std::vector<Task> tasks;
    for (CheckId id : ids) {
        const CheckDef& d = def_of(id);
        int hi = d.default_nmax + (opts.deep ? 1 : 0);
        if (n_max >= 0) hi = std::min(hi, n_max);
        for (int n = d.start_n; n <= hi; ++n) tasks.push_back({&d, n});
    }

    CheckReport report;
    report.rows.resize(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            CheckRow& row = report.rows[i];
            row.check = t.def->name;
            row.n = t.n;
            auto t0 = std::chrono::steady_clock::now();
            try {
                row.counterexample = t.def->fn(t.n, opts);
                row.pass = row.counterexample.empty();
            } catch (const std::exception& e) {
                row.pass = false;
                row.counterexample = std::string("error: ") + e.what();
            }
            row.millis = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        }
    };
    int threads = std::max(1, jobs);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return report;
}

}  // namespace spk
