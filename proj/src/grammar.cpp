#include "spk/grammar.hpp"

#include <stdexcept>

namespace spk {

const Polynomial* Grammar::rule(VarName v) const {
    auto it = rules_.find(v);
    return it == rules_.end() ? nullptr : &it->second;
}

Polynomial Grammar::derive(const Polynomial& p) const {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m.factors()) {
            const Polynomial* body = rule(v);
            if (!body) continue;
            if (e < 0)
                throw std::domain_error("derive: ruled variable " + v.str() +
                                        " carries a negative exponent");
            // c*e * v^(e-1) * rule(v) * (other factors)
            out += *body * Polynomial(m.with_exponent(v, e - 1), c * e);
        }
    }
    return out;
}

Polynomial Grammar::derive_iter(const Polynomial& p, int n) const {
    if (n < 0) throw std::invalid_argument("derive_iter: negative power");
    Polynomial cur = p;
    for (int i = 0; i < n; ++i) cur = derive(cur);
    return cur;
}

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }

Grammar make_grammar(std::initializer_list<std::pair<const char*, const char*>> rules) {
    std::map<VarName, Polynomial> m;
    for (const auto& [v, body] : rules) m.emplace(VarName(v), P(body));
    return Grammar(std::move(m));
}

}  // namespace

const std::vector<std::pair<std::string, GrammarName>>& grammar_names() {
    static const std::vector<std::pair<std::string, GrammarName>> names = {
        {"lemma21", GrammarName::lemma21}, {"gprime", GrammarName::gprime},
        {"g1", GrammarName::g1},           {"g2", GrammarName::g2},
        {"g3", GrammarName::g3},           {"gxyz", GrammarName::gxyz},
        {"H", GrammarName::H},             {"I", GrammarName::I},
        {"J", GrammarName::J},
    };
    return names;
}

GrammarName grammar_name_from(const std::string& s) {
    for (const auto& [name, g] : grammar_names())
        if (name == s) return g;
    throw std::invalid_argument("unknown grammar: " + s);
}

const std::string& to_string(GrammarName name) {
    for (const auto& [text, g] : grammar_names())
        if (g == name) return text;
    throw std::logic_error("unmapped grammar name");
}

const Grammar& builtin_grammar(GrammarName name) {
    // Signed-permutation descent grammar and its change-of-variables form.
    static const Grammar lemma21 = make_grammar({{"P", "P*D + N*A"},
                                                 {"N", "P*D + N*A"},
                                                 {"E", "A*E + D*E"},
                                                 {"A", "2*A*D"},
                                                 {"D", "2*A*D"}});
    static const Grammar gprime = make_grammar({{"a", "2*b"},
                                                {"b", "2*a*c + b*d"},
                                                {"c", "2*c*d"},
                                                {"d", "4*c"},
                                                {"E", "d*E"}});
    // q-weighted variants: q has no rule and survives derivation.
    static const Grammar g1 = make_grammar({{"P", "P*D + q*N*A"},
                                            {"N", "P*D + q*N*A"},
                                            {"E", "A*E + q*D*E"},
                                            {"A", "A*D + q*A*D"},
                                            {"D", "A*D + q*A*D"}});
    static const Grammar g2 =
        make_grammar({{"g2_alpha", "g2_alpha*g2_W + q*g2_beta*g2_gamma"},
                      {"g2_gamma", "g2_alpha*g2_W + q*g2_beta*g2_gamma"},
                      {"g2_beta", "g2_beta*g2_W + q*g2_beta*g2_W"},
                      {"g2_W", "g2_beta*g2_W + q*g2_beta*g2_W"}});
    static const Grammar g3 = make_grammar({{"x", "x*y + q*x*y"}, {"y", "x*y + q*x*y"}});
    // Trivariate ascent/plateau/descent grammar and its elementary-symmetric form.
    static const Grammar gxyz =
        make_grammar({{"x", "x*y*z"}, {"y", "x*y*z"}, {"z", "x*y*z"}});
    static const Grammar H = make_grammar({{"w", "v*w"}, {"u", "3*w"}, {"v", "2*u*w"}});
    // Node-insertion grammars on simplified ternary increasing trees; t marks
    // saturated (degree three) vertices and has no rule.
    static const Grammar I =
        make_grammar({{"P", "P*P1"}, {"P1", "2*P*P2"}, {"P2", "3*t*P"}});
    static const Grammar J = make_grammar(
        {{"delta", "delta*delta1"}, {"delta1", "2*delta*delta2"}, {"delta2", "3*t*delta"}});

    switch (name) {
        case GrammarName::lemma21: return lemma21;
        case GrammarName::gprime: return gprime;
        case GrammarName::g1: return g1;
        case GrammarName::g2: return g2;
        case GrammarName::g3: return g3;
        case GrammarName::gxyz: return gxyz;
        case GrammarName::H: return H;
        case GrammarName::I: return I;
        case GrammarName::J: return J;
    }
    throw std::logic_error("unreachable");
}

}  // namespace spk
