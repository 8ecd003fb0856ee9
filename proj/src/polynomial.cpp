#include "spk/polynomial.hpp"

#include <algorithm>

namespace spk {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<std::pair<VarName, int>> factors) {
    for (const auto& [v, e] : factors) {
        bool merged = false;
        for (auto& [u, f] : factors_)
            if (u == v) {
                f += e;
                merged = true;
                break;
            }
        if (!merged) factors_.emplace_back(v, e);
    }
    normalize();
}

Monomial Monomial::single(VarName v, int e) {
    Monomial m;
    if (e != 0) {
        m.factors_.emplace_back(v, e);
        m.degree_ = e;
    }
    return m;
}

void Monomial::normalize() {
    std::sort(factors_.begin(), factors_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    factors_.erase(std::remove_if(factors_.begin(), factors_.end(),
                                  [](const auto& f) { return f.second == 0; }),
                   factors_.end());
    degree_ = 0;
    for (const auto& [v, e] : factors_) degree_ += e;
}

int Monomial::exponent(VarName v) const {
    for (const auto& [u, e] : factors_)
        if (u == v) return e;
    return 0;
}

Monomial Monomial::with_exponent(VarName v, int e) const {
    Monomial m;
    m.factors_.reserve(factors_.size() + 1);
    bool placed = false;
    for (const auto& f : factors_) {
        if (f.first == v) {
            if (e != 0) m.factors_.emplace_back(v, e);
            placed = true;
        } else {
            if (!placed && v < f.first) {
                if (e != 0) m.factors_.emplace_back(v, e);
                placed = true;
            }
            m.factors_.push_back(f);
        }
    }
    if (!placed && e != 0) m.factors_.emplace_back(v, e);
    m.degree_ = 0;
    for (const auto& [u, f] : m.factors_) m.degree_ += f;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    m.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), ae = factors_.end();
    auto b = o.factors_.begin(), be = o.factors_.end();
    while (a != ae && b != be) {
        if (a->first == b->first) {
            int e = a->second + b->second;
            if (e != 0) m.factors_.emplace_back(a->first, e);
            ++a;
            ++b;
        } else if (a->first < b->first) {
            m.factors_.push_back(*a++);
        } else {
            m.factors_.push_back(*b++);
        }
    }
    m.factors_.insert(m.factors_.end(), a, ae);
    m.factors_.insert(m.factors_.end(), b, be);
    m.degree_ = 0;
    for (const auto& [v, e] : m.factors_) m.degree_ += e;
    return m;
}

Monomial Monomial::inverse() const {
    Monomial m = *this;
    for (auto& [v, e] : m.factors_) e = -e;
    m.degree_ = -m.degree_;
    return m;
}

bool Monomial::has_negative_exponent() const {
    for (const auto& [v, e] : factors_)
        if (e < 0) return true;
    return false;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    auto i = a.factors_.begin(), ie = a.factors_.end();
    auto j = b.factors_.begin(), je = b.factors_.end();
    while (i != ie || j != je) {
        if (i == ie) return false;  // a's exponent 0 at j's variable
        if (j == je) return true;
        if (i->first == j->first) {
            if (i->second != j->second) return i->second > j->second;
            ++i;
            ++j;
        } else if (i->first < j->first) {
            // a has a nonzero exponent where b has zero
            return i->second > 0;
        } else {
            return j->second < 0;
        }
    }
    return false;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(Int c) {
    if (c != 0) terms_.emplace(Monomial::unit(), std::move(c));
}

Polynomial::Polynomial(Monomial m, Int c) {
    if (c != 0) terms_.emplace(std::move(m), std::move(c));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Int Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::insert_term(Monomial m, Int c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(std::move(m), std::move(c));
    if (!fresh) {
        it->second += c;  // try_emplace left c intact
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(m, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.insert_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Int& c) const {
    if (c == 0) return Polynomial();
    Polynomial r = *this;
    for (auto& [m, k] : r.terms_) k *= c;
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
    Polynomial r(Int(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

Polynomial Polynomial::div_exact_int(const Int& c) const {
    Polynomial r = *this;
    for (auto& [m, k] : r.terms_) k = div_exact(k, c);
    return r;
}

Polynomial Polynomial::diff(VarName v) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0) continue;
        if (e < 0)
            throw std::domain_error("diff: negative exponent of " + v.str());
        r.insert_term(m.with_exponent(v, e - 1), c * e);
    }
    return r;
}

Polynomial Polynomial::substitute(const std::map<VarName, Polynomial>& subs) const {
    // Power cache shared across terms: substitution bodies repeat a lot.
    std::map<VarName, std::map<int, Polynomial>> powers;
    auto power_of = [&](VarName v, int e) -> const Polynomial& {
        auto& cache = powers[v];
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        const Polynomial& body = subs.at(v);
        Polynomial value;
        if (e >= 0) {
            value = body.pow(e);
        } else {
            if (!body.is_monomial())
                throw std::domain_error("substitute: variable " + v.str() +
                                        " has a negative exponent but maps to a non-monomial");
            const auto& [bm, bc] = *body.terms().begin();
            if (bc != 1 && bc != -1)
                throw std::domain_error("substitute: variable " + v.str() +
                                        " has a negative exponent but maps to a non-invertible monomial");
            Int c = (bc == -1 && (e % 2 != 0)) ? Int(-1) : Int(1);
            Monomial m;
            for (int i = 0; i < -e; ++i) m = m * bm.inverse();
            value = Polynomial(std::move(m), std::move(c));
        }
        return cache.emplace(e, std::move(value)).first->second;
    };

    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial term(c);
        Monomial passthrough;
        for (const auto& [v, e] : m.factors()) {
            if (subs.count(v))
                term = term * power_of(v, e);
            else
                passthrough = passthrough * Monomial::single(v, e);
        }
        if (!passthrough.is_unit()) term = term * Polynomial(passthrough, 1);
        out += term;
    }
    return out;
}

Rat Polynomial::eval(const RationalPoint& pt) const {
    Rat sum = 0;
    for (const auto& [m, c] : terms_) {
        Rat value(c);
        for (const auto& [v, e] : m.factors()) {
            auto it = pt.assignment.find(v);
            if (it == pt.assignment.end())
                throw std::invalid_argument("eval: unassigned variable " + v.str());
            if (e < 0 && it->second == 0)
                throw std::domain_error("eval: zero raised to a negative power (" + v.str() + ")");
            value *= rat_pow(it->second, e);
        }
        sum += value;
    }
    return sum;
}

std::map<Monomial, Polynomial, MonomialOrder> Polynomial::group_by(
    const std::set<VarName>& vars) const {
    std::map<Monomial, Polynomial, MonomialOrder> groups;
    for (const auto& [m, c] : terms_) {
        Monomial key, rest;
        for (const auto& [v, e] : m.factors()) {
            if (vars.count(v))
                key = key * Monomial::single(v, e);
            else
                rest = rest * Monomial::single(v, e);
        }
        groups[key] += Polynomial(rest, c);
    }
    return groups;
}

std::set<VarName> Polynomial::variables() const {
    std::set<VarName> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vars.insert(v);
    return vars;
}

bool Polynomial::univariate(VarName* v) const {
    std::set<VarName> vars = variables();
    if (vars.size() > 1) return false;
    if (v && !vars.empty()) *v = *vars.begin();
    return true;
}

long long Polynomial::degree_in(VarName v) const {
    long long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, (long long)m.exponent(v));
    return d;
}

long long Polynomial::total_degree() const {
    long long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::has_negative_exponent() const {
    for (const auto& [m, c] : terms_)
        if (m.has_negative_exponent()) return true;
    return false;
}

// ---------------------------------------------------------- gamma expansion

std::vector<Int> gamma_decompose(const Polynomial& p, int n) {
    if (n < 1) throw std::invalid_argument("gamma_decompose: n must be >= 1");
    VarName v("x");
    if (!p.univariate(&v))
        throw std::invalid_argument("gamma_decompose: input is not univariate");
    if (p.has_negative_exponent())
        throw std::invalid_argument("gamma_decompose: Laurent input");
    if (p.degree_in(v) > n - 1)
        throw std::invalid_argument("gamma_decompose: degree exceeds n-1");

    Polynomial one_plus_v = Polynomial(Int(1)) + Polynomial::var(v.str());
    Polynomial residual = p;
    std::vector<Int> g;
    for (int k = 0; 2 * k <= n - 1; ++k) {
        Int gk = residual.coefficient(Monomial::single(v, k));
        g.push_back(gk);
        if (gk != 0)
            residual -= Polynomial(Monomial::single(v, k), gk) * one_plus_v.pow(n - 1 - 2 * k);
    }
    if (!residual.is_zero())
        throw std::invalid_argument(
            "gamma_decompose: input is not expressible in the basis (not palindromic)");
    return g;
}

Polynomial gamma_recompose(const std::vector<Int>& g, VarName v, int n) {
    Polynomial one_plus_v = Polynomial(Int(1)) + Polynomial(Monomial::single(v, 1), 1);
    Polynomial sum;
    for (size_t k = 0; k < g.size(); ++k)
        sum += Polynomial(Monomial::single(v, (int)k), g[k]) *
               one_plus_v.pow(n - 1 - 2 * (int)k);
    return sum;
}

}  // namespace spk
