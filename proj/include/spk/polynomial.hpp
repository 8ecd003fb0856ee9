#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spk/numbers.hpp"
#include "spk/varname.hpp"

namespace spk {

/// Product of variable powers. Exponents are signed (Laurent terms are legal)
/// and zero exponents are never stored.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::initializer_list<std::pair<VarName, int>> factors);

    static Monomial unit() { return Monomial(); }
    static Monomial single(VarName v, int e);

    int exponent(VarName v) const;
    Monomial with_exponent(VarName v, int e) const;
    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;

    long long degree() const { return degree_; }
    bool is_unit() const { return factors_.empty(); }
    bool has_negative_exponent() const;

    const std::vector<std::pair<VarName, int>>& factors() const { return factors_; }

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    friend struct MonomialOrder;
    void normalize();

    std::vector<std::pair<VarName, int>> factors_;  // sorted by VarName, no zeros
    long long degree_ = 0;                          // signed total degree
};

/// Canonical term order: graded (ascending total degree), ties broken by the
/// exponent sequence in variable order, larger exponent first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct RationalPoint {
    std::map<VarName, Rat> assignment;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position + 1)),
          pos(position) {}
    size_t pos;
};

/// Sparse multivariate polynomial with exact integer coefficients.
/// Immutable value semantics: every operation returns a fresh polynomial.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Int, MonomialOrder>;

    Polynomial() = default;  // zero
    explicit Polynomial(Int c);
    explicit Polynomial(long long c) : Polynomial(Int(c)) {}
    Polynomial(Monomial m, Int c);

    static Polynomial var(std::string_view name) {
        return Polynomial(Monomial::single(VarName(name), 1), 1);
    }
    static Polynomial constant(Int c) { return Polynomial(std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    Int coefficient(const Monomial& m) const;
    Int constant_term() const { return coefficient(Monomial::unit()); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator*(const Int& c) const;
    Polynomial pow(int e) const;

    /// Exact division by an integer constant; throws if any coefficient
    /// is not divisible.
    Polynomial div_exact_int(const Int& c) const;

    /// Formal partial derivative. Rejects negative exponents of v.
    Polynomial diff(VarName v) const;

    /// Simultaneous substitution; unmapped variables pass through. A variable
    /// occurring with a negative exponent must map to an invertible monomial.
    Polynomial substitute(const std::map<VarName, Polynomial>& subs) const;

    /// Exact evaluation. Every variable must be assigned, and variables with
    /// negative exponents must be assigned nonzero values.
    Rat eval(const RationalPoint& pt) const;

    /// Groups terms by their monomial part in `vars`; values collect the
    /// remaining factors.
    std::map<Monomial, Polynomial, MonomialOrder> group_by(const std::set<VarName>& vars) const;

    std::set<VarName> variables() const;

    /// True when at most one variable occurs; stores it in `v` if present.
    bool univariate(VarName* v) const;
    long long degree_in(VarName v) const;
    long long total_degree() const;  // max term degree; 0 for the zero polynomial
    bool has_negative_exponent() const;

    /// Canonical text form (see parse for the grammar). Deterministic.
    std::string text() const;
    static Polynomial parse(std::string_view input);

private:
    void insert_term(Monomial m, Int c);
    TermMap terms_;
};

inline Polynomial operator*(const Int& c, const Polynomial& p) { return p * c; }

/// Coefficients g_k of the expansion p = sum_k g_k x^k (1+x)^(n-1-2k) for a
/// palindromic univariate polynomial of degree <= n-1. Throws when p is not
/// expressible in that basis.
std::vector<Int> gamma_decompose(const Polynomial& p, int n);

/// Rebuilds sum_k g_k v^k (1+v)^(n-1-2k); inverse of gamma_decompose.
Polynomial gamma_recompose(const std::vector<Int>& g, VarName v, int n);

}  // namespace spk
