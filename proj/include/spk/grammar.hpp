#pragma once

#include <map>
#include <string>
#include <vector>

#include "spk/polynomial.hpp"

namespace spk {

/// A context-free grammar in Chen's sense: a substitution rule per variable.
/// Variables without a rule are constants (derivative zero), which is how
/// markers like q and t survive repeated derivation.
class Grammar {
public:
    Grammar() = default;
    explicit Grammar(std::map<VarName, Polynomial> rules) : rules_(std::move(rules)) {}

    const std::map<VarName, Polynomial>& rules() const { return rules_; }
    const Polynomial* rule(VarName v) const;

    /// Formal derivative: linear, and Leibniz on products. Rejects negative
    /// exponents on ruled variables.
    Polynomial derive(const Polynomial& p) const;

    /// n-fold derivative; n = 0 returns p unchanged.
    Polynomial derive_iter(const Polynomial& p, int n) const;

private:
    std::map<VarName, Polynomial> rules_;
};

/// Closed catalog of the built-in grammars addressable from the CLI.
enum class GrammarName { lemma21, gprime, g1, g2, g3, gxyz, H, I, J };

const std::vector<std::pair<std::string, GrammarName>>& grammar_names();
GrammarName grammar_name_from(const std::string& s);
const std::string& to_string(GrammarName name);

const Grammar& builtin_grammar(GrammarName name);

}  // namespace spk
