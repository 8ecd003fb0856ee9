#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "spk/grammar.hpp"
#include "spk/polynomial.hpp"

namespace spk {

/// Universal expansion coefficients for fixed n, supported on i+2j+3k = 2n+1.
struct GammaTable {
    int n = 0;
    std::map<std::array<int, 3>, Int> entries;

    Int at(int i, int j, int k) const;
};

/// Computes the table by the coefficient recursion and independently from the
/// grammar-H derivative, and refuses to return unless the two routes agree.
/// Results are cached per n and shared read-only.
const GammaTable& gamma_table(int n);

/// Substitution target for the universal expansion
/// sum gamma_{n,i,j,k} u^i v^j w^k t^(n-i-j-k).
struct GammaSubstSpec {
    Polynomial u, v, w, t;
};

enum class GammaSpecName { C3, N, Q6, Q8, F17, NP, Palpha, E6, Mbeta };
GammaSubstSpec gamma_spec(GammaSpecName name);

Polynomial gamma_substitute(int n, const GammaSubstSpec& spec);

/// Named polynomial families; see the README for each family's variables.
enum class FamilyName {
    A, B, Bq, b, D, d, C3, T, xi, zeta, f, M, Mtilde,
    N, Q6, Q8, F17, NP, Palpha, E6, Mbeta, S2,
};

const std::vector<std::pair<std::string, FamilyName>>& family_poly_names();
FamilyName family_poly_from(const std::string& s);
const std::string& to_string(FamilyName f);

/// The designated fast route of each family (recurrence, grammar, or
/// gamma-substitution; enumeration when nothing cheaper exists).
Polynomial family_poly(FamilyName name, int n);

/// Independent enumeration route; throws for families without one.
Polynomial family_poly_enumerated(FamilyName name, int n);
bool family_has_enum_route(FamilyName name);

/// Expansion of the bivariate type A/B descent polynomial in the
/// (xy, 1+xy) basis with up-down-run coefficients; defined for n >= 2.
Polynomial bn_expansion_rhs(int n);

Int stirling2(int n, int k);

// Coefficient tables feeding the expansion and the root package.
const std::vector<Int>& xi_row(int n);    // xi(n,k), k = 0..floor((n-1)/2)
const std::vector<Int>& zeta_row(int n);  // zeta(n,k); empty row for n = 1
Polynomial updown_poly(int n);            // T_n by its recursion
Polynomial xi_poly(int n);
Polynomial zeta_poly(int n);
Polynomial f_poly(int n);                 // f_n by its own recursion

}  // namespace spk
