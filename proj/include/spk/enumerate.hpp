#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spk/numbers.hpp"

namespace spk {

/// Word over a multiset with the Stirling property: letters lying between the
/// two copies of a value are strictly larger. Also used for the one-copy-of-1
/// variant (odd length).
struct StirlingWord {
    std::vector<int> letters;

    bool operator==(const StirlingWord& o) const { return letters == o.letters; }
    std::string str() const;
};

struct SignedPerm {
    std::vector<int> values;  // |values| is a permutation of [n]

    int size() const { return (int)values.size(); }
    bool operator==(const SignedPerm& o) const { return values == o.values; }
    std::string str() const;
};

/// Insertion-history code of a ternary increasing tree: pair i records the
/// parent and child slot (1=left, 2=middle, 3=right) of node i+1. The root is
/// (0,0) and pairs are pairwise distinct.
struct SPCode {
    std::vector<std::pair<int, int>> pairs;

    int size() const { return (int)pairs.size(); }
    bool operator==(const SPCode& o) const { return pairs == o.pairs; }
    std::string str() const;
};

/// Increasing ternary tree on labels 1..n in simplified form (no exterior
/// nodes); parent[v] and slot[v] are 1-indexed by node label, zero for the root.
struct TernaryTree {
    std::vector<int> parent;  // parent[0] unused
    std::vector<int> slot;

    int size() const { return (int)parent.size() - 1; }
    bool operator==(const TernaryTree& o) const {
        return parent == o.parent && slot == o.slot;
    }
    /// child(v, s) = label of the child of v in slot s, or 0.
    int child(int v, int s) const;
};

enum class Family { Q, Q1, Q0, SB, SD, S, Code, Tree, Derange };

const std::vector<std::pair<std::string, Family>>& family_names();
Family family_from(const std::string& s);
const std::string& to_string(Family f);

struct ResourceGuard {
    int max_n = 9;
    Int max_objects = 21'000'000;
};

struct ResourceGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Closed-form family size (no enumeration).
Int count_family(Family f, int n);

/// Visits every object of the family exactly once, in a deterministic order
/// (insertion-order recursion for Q/Q1/Q0/Code/Tree, lexicographic for
/// S/SB/SD/Derange). Objects are delivered to exactly one of the callbacks.
struct FamilyVisitor {
    std::function<void(const StirlingWord&)> word;
    std::function<void(const SignedPerm&)> signed_perm;
    std::function<void(const std::vector<int>&)> perm;
    std::function<void(const SPCode&)> code;
    std::function<void(const TernaryTree&)> tree;
};
void for_each_family(Family f, int n, const FamilyVisitor& visitor,
                     const ResourceGuard& guard = ResourceGuard());

// Convenience wrappers for the common cases.
void for_each_word(Family f, int n, const std::function<void(const StirlingWord&)>& fn,
                   const ResourceGuard& guard = ResourceGuard());
void for_each_signed(Family f, int n, const std::function<void(const SignedPerm&)>& fn,
                     const ResourceGuard& guard = ResourceGuard());
void for_each_perm(Family f, int n, const std::function<void(const std::vector<int>&)>& fn,
                   const ResourceGuard& guard = ResourceGuard());
void for_each_code(int n, const std::function<void(const SPCode&)>& fn,
                   const ResourceGuard& guard = ResourceGuard());

/// Validators used by tests and by the loud-failure paths.
bool is_regular_stirling_word(const StirlingWord& w);  // each of 1..n twice
bool is_qzero_word(const StirlingWord& w);             // 1 once, 2..n twice
bool is_valid_code(const SPCode& c);

// Bijections. tree_to_word is the depth-first reading; word_to_code strips
// the largest pair and classifies the gap it came from; code_to_word goes
// through the tree.
StirlingWord tree_to_word(const TernaryTree& t);
TernaryTree word_to_tree(const StirlingWord& w);
SPCode tree_to_code(const TernaryTree& t);
TernaryTree code_to_tree(const SPCode& c);
SPCode word_to_code(const StirlingWord& w);
StirlingWord code_to_word(const SPCode& c);

}  // namespace spk
