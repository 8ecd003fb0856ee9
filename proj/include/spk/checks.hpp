#pragma once

#include <string>
#include <vector>

#include "spk/catalog.hpp"

namespace spk {

enum class CheckId {
    table1, roundtrips, thm_bn_expansion, xi_zeta_T, grammar_vs_enum_bn,
    thm24_fourway, cor_oneminusy, cor_derangement, typeD_stembridge, typeD_count,
    dumont_symmetry, bona_equidist, thm32_q8, thm33_homog, thm34_f17,
    npa_epos, e6_symmetry, mbeta_epos, carlitz, convolution,
    gammaA_fs, gammaA_branden, gammaB_petersen, counts, gamma_nonneg,
    alpha_nonneg, gprime_coeffs,
};

/// Canonical registry order; verify output is emitted in this order.
const std::vector<std::pair<std::string, CheckId>>& check_ids();
CheckId check_from(const std::string& s);
const std::string& to_string(CheckId id);

struct CheckOptions {
    bool deep = false;      // widens every default range by one
    int series_order = 15;  // truncation order of the series comparison
};

struct CheckRow {
    std::string check;
    int n = 0;
    bool pass = false;
    double millis = 0.0;
    std::string counterexample;  // empty when passing
};

struct CheckReport {
    std::vector<CheckRow> rows;
    bool all_pass() const;
};

int check_start_n(CheckId id);
int check_default_nmax(CheckId id);

/// Runs one check for start_n <= n <= n_max. n_max < 0 selects the default
/// (plus one under opts.deep).
CheckReport run_check(CheckId id, int n_max = -1, const CheckOptions& opts = {});

/// Runs several checks, possibly in parallel; rows come back in canonical
/// (registry, n) order regardless of scheduling. n_max caps each check's
/// default range when nonnegative.
CheckReport run_checks(const std::vector<CheckId>& ids, int n_max, const CheckOptions& opts,
                       int jobs);

}  // namespace spk
