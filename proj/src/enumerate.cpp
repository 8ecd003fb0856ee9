#include "spk/enumerate.hpp"

#include <algorithm>
#include <map>

namespace spk {

std::string StirlingWord::str() const {
    std::string s;
    bool wide = false;
    for (int v : letters)
        if (v > 9) wide = true;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i && wide) s += ' ';
        s += std::to_string(letters[i]);
    }
    return s;
}

std::string SignedPerm::str() const {
    std::string s;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(values[i]);
    }
    return s;
}

std::string SPCode::str() const {
    std::string s;
    for (const auto& [a, b] : pairs)
        s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return s;
}

int TernaryTree::child(int v, int s) const {
    for (int u = v + 1; u <= size(); ++u)
        if (parent[u] == v && slot[u] == s) return u;
    return 0;
}

const std::vector<std::pair<std::string, Family>>& family_names() {
    static const std::vector<std::pair<std::string, Family>> names = {
        {"q", Family::Q},       {"q1", Family::Q1},   {"q0", Family::Q0},
        {"sb", Family::SB},     {"sd", Family::SD},   {"s", Family::S},
        {"code", Family::Code}, {"tree", Family::Tree}, {"derange", Family::Derange},
    };
    return names;
}

Family family_from(const std::string& s) {
    for (const auto& [name, f] : family_names())
        if (name == s) return f;
    throw std::invalid_argument("unknown family: " + s);
}

const std::string& to_string(Family f) {
    for (const auto& [name, g] : family_names())
        if (g == f) return name;
    throw std::logic_error("unmapped family");
}

Int count_family(Family f, int n) {
    if (n < 1) throw std::invalid_argument("count_family: n must be >= 1");
    switch (f) {
        case Family::Q:
        case Family::Code:
        case Family::Tree:
            return odd_double_factorial(n);
        case Family::Q1:
        case Family::Q0:
            return int_pow(2, n - 1) * factorial(n - 1);
        case Family::SB:
            return int_pow(2, n) * factorial(n);
        case Family::SD:
            return int_pow(2, n - 1) * factorial(n);
        case Family::S:
            return factorial(n);
        case Family::Derange: {
            Int prev = 1, cur = 0;  // D_0, D_1
            for (int k = 2; k <= n; ++k) {
                Int next = (k - 1) * (cur + prev);
                prev = cur;
                cur = next;
            }
            return n == 0 ? Int(1) : cur;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

void check_guard(Family f, int n, const ResourceGuard& guard) {
    if (n < 1) throw std::invalid_argument("enumerate: n must be >= 1");
    if (n > guard.max_n)
        throw ResourceGuardError("enumerate: n=" + std::to_string(n) +
                                 " exceeds the guard limit n<=" + std::to_string(guard.max_n));
    Int size = count_family(f, n);
    if (size > guard.max_objects)
        throw ResourceGuardError("enumerate: family " + to_string(f) + " at n=" +
                                 std::to_string(n) + " has " + size.str() +
                                 " objects, above the cap " + guard.max_objects.str());
}

// Stirling words by the insertion recursion: each word of the next level is
// obtained by inserting the adjacent pair (k,k) into one gap, gaps visited
// left to right.
void rec_words(std::vector<int>& w, int level, int n, bool keep_ones_adjacent,
               const std::function<void(const StirlingWord&)>& fn) {
    if (level > n) {
        StirlingWord out{w};
        fn(out);
        return;
    }
    size_t len = w.size();
    for (size_t gap = 0; gap <= len; ++gap) {
        if (keep_ones_adjacent) {
            // skip the gap between the two copies of 1
            bool between_ones = gap > 0 && gap < len && w[gap - 1] == 1 && w[gap] == 1;
            if (between_ones) continue;
        }
        w.insert(w.begin() + gap, 2, level);
        rec_words(w, level + 1, n, keep_ones_adjacent, fn);
        w.erase(w.begin() + gap, w.begin() + gap + 2);
    }
}

void rec_signed(std::vector<int>& acc, std::vector<bool>& used, int n, bool even_only,
                const std::function<void(const SignedPerm&)>& fn) {
    if ((int)acc.size() == n) {
        if (even_only) {
            int neg = 0;
            for (int v : acc)
                if (v < 0) ++neg;
            if (neg % 2 != 0) return;
        }
        SignedPerm out{acc};
        fn(out);
        return;
    }
    for (int v = -n; v <= n; ++v) {
        if (v == 0 || used[std::abs(v)]) continue;
        used[std::abs(v)] = true;
        acc.push_back(v);
        rec_signed(acc, used, n, even_only, fn);
        acc.pop_back();
        used[std::abs(v)] = false;
    }
}

void rec_codes(SPCode& c, int level, int n, const std::function<void(const SPCode&)>& fn) {
    if (level > n) {
        fn(c);
        return;
    }
    for (int a = 1; a < level; ++a)
        for (int b = 1; b <= 3; ++b) {
            bool used = false;
            for (const auto& p : c.pairs)
                if (p.first == a && p.second == b) {
                    used = true;
                    break;
                }
            if (used) continue;
            c.pairs.emplace_back(a, b);
            rec_codes(c, level + 1, n, fn);
            c.pairs.pop_back();
        }
}

}  // namespace

void for_each_family(Family f, int n, const FamilyVisitor& visitor,
                     const ResourceGuard& guard) {
    check_guard(f, n, guard);
    switch (f) {
        case Family::Q:
        case Family::Q1: {
            std::vector<int> w = {1, 1};
            rec_words(w, 2, n, f == Family::Q1, visitor.word);
            return;
        }
        case Family::Q0: {
            std::vector<int> w = {1};
            rec_words(w, 2, n, false, visitor.word);
            return;
        }
        case Family::SB:
        case Family::SD: {
            std::vector<int> acc;
            std::vector<bool> used(n + 1, false);
            rec_signed(acc, used, n, f == Family::SD, visitor.signed_perm);
            return;
        }
        case Family::S:
        case Family::Derange: {
            std::vector<int> p(n);
            for (int i = 0; i < n; ++i) p[i] = i + 1;
            do {
                if (f == Family::Derange) {
                    bool fixed = false;
                    for (int i = 0; i < n; ++i)
                        if (p[i] == i + 1) {
                            fixed = true;
                            break;
                        }
                    if (fixed) continue;
                }
                visitor.perm(p);
            } while (std::next_permutation(p.begin(), p.end()));
            return;
        }
        case Family::Code: {
            SPCode c;
            c.pairs.emplace_back(0, 0);
            rec_codes(c, 2, n, visitor.code);
            return;
        }
        case Family::Tree: {
            SPCode c;
            c.pairs.emplace_back(0, 0);
            rec_codes(c, 2, n, [&](const SPCode& code) { visitor.tree(code_to_tree(code)); });
            return;
        }
    }
    throw std::logic_error("unreachable");
}

void for_each_word(Family f, int n, const std::function<void(const StirlingWord&)>& fn,
                   const ResourceGuard& guard) {
    FamilyVisitor v;
    v.word = fn;
    for_each_family(f, n, v, guard);
}

void for_each_signed(Family f, int n, const std::function<void(const SignedPerm&)>& fn,
                     const ResourceGuard& guard) {
    FamilyVisitor v;
    v.signed_perm = fn;
    for_each_family(f, n, v, guard);
}

void for_each_perm(Family f, int n, const std::function<void(const std::vector<int>&)>& fn,
                   const ResourceGuard& guard) {
    FamilyVisitor v;
    v.perm = fn;
    for_each_family(f, n, v, guard);
}

void for_each_code(int n, const std::function<void(const SPCode&)>& fn,
                   const ResourceGuard& guard) {
    FamilyVisitor v;
    v.code = fn;
    for_each_family(Family::Code, n, v, guard);
}

bool is_regular_stirling_word(const StirlingWord& w) {
    const auto& s = w.letters;
    if (s.size() % 2 != 0) return false;
    int n = (int)s.size() / 2;
    std::vector<int> first(n + 1, 0), count(n + 1, 0);
    for (int i = 0; i < (int)s.size(); ++i) {
        int v = s[i];
        if (v < 1 || v > n) return false;
        if (++count[v] > 2) return false;
        if (count[v] == 1) first[v] = i;
        if (count[v] == 2) {
            for (int j = first[v] + 1; j < i; ++j)
                if (s[j] <= v) return false;
        }
    }
    for (int v = 1; v <= n; ++v)
        if (count[v] != 2) return false;
    return true;
}

bool is_qzero_word(const StirlingWord& w) {
    const auto& s = w.letters;
    if (s.size() % 2 != 1) return false;
    int n = ((int)s.size() + 1) / 2;
    std::vector<int> first(n + 1, 0), count(n + 1, 0);
    for (int i = 0; i < (int)s.size(); ++i) {
        int v = s[i];
        if (v < 1 || v > n) return false;
        if (++count[v] > 2) return false;
        if (count[v] == 1) first[v] = i;
        if (count[v] == 2) {
            if (v == 1) return false;
            for (int j = first[v] + 1; j < i; ++j)
                if (s[j] <= v) return false;
        }
    }
    if (count[1] != 1) return false;
    for (int v = 2; v <= n; ++v)
        if (count[v] != 2) return false;
    return true;
}

bool is_valid_code(const SPCode& c) {
    if (c.pairs.empty() || c.pairs[0] != std::make_pair(0, 0)) return false;
    for (int i = 1; i < (int)c.pairs.size(); ++i) {
        const auto& [a, b] = c.pairs[i];
        if (a < 1 || a > i || b < 1 || b > 3) return false;
        for (int j = 1; j < i; ++j)
            if (c.pairs[j] == c.pairs[i]) return false;
    }
    return true;
}

// ------------------------------------------------------------- bijections

namespace {

void read_subtree(const TernaryTree& t, int v, std::vector<int>& out) {
    if (int l = t.child(v, 1)) read_subtree(t, l, out);
    out.push_back(v);
    if (int m = t.child(v, 2)) read_subtree(t, m, out);
    out.push_back(v);
    if (int r = t.child(v, 3)) read_subtree(t, r, out);
}

// Attaches the subtree encoded by s[lo..hi) under `parent` in `slot`; the
// subtree root is the smallest letter of the segment.
void build_subtree(const std::vector<int>& s, int lo, int hi, int parent, int slot,
                   TernaryTree& t) {
    if (lo >= hi) return;
    int root = s[lo], i1 = lo, i2 = lo;
    for (int i = lo; i < hi; ++i)
        if (s[i] < root) root = s[i];
    for (int i = lo; i < hi; ++i)
        if (s[i] == root) {
            i1 = i;
            break;
        }
    for (int i = hi - 1; i >= lo; --i)
        if (s[i] == root) {
            i2 = i;
            break;
        }
    t.parent[root] = parent;
    t.slot[root] = slot;
    build_subtree(s, lo, i1, root, 1, t);
    build_subtree(s, i1 + 1, i2, root, 2, t);
    build_subtree(s, i2 + 1, hi, root, 3, t);
}

}  // namespace

StirlingWord tree_to_word(const TernaryTree& t) {
    StirlingWord w;
    w.letters.reserve(2 * t.size());
    read_subtree(t, 1, w.letters);
    return w;
}

TernaryTree word_to_tree(const StirlingWord& w) {
    if (!is_regular_stirling_word(w))
        throw std::invalid_argument("word_to_tree: not a Stirling word: " + w.str());
    int n = (int)w.letters.size() / 2;
    TernaryTree t;
    t.parent.assign(n + 1, 0);
    t.slot.assign(n + 1, 0);
    build_subtree(w.letters, 0, (int)w.letters.size(), 0, 0, t);
    return t;
}

SPCode tree_to_code(const TernaryTree& t) {
    SPCode c;
    c.pairs.emplace_back(0, 0);
    for (int v = 2; v <= t.size(); ++v) c.pairs.emplace_back(t.parent[v], t.slot[v]);
    return c;
}

TernaryTree code_to_tree(const SPCode& c) {
    if (!is_valid_code(c)) throw std::invalid_argument("code_to_tree: invalid code " + c.str());
    int n = c.size();
    TernaryTree t;
    t.parent.assign(n + 1, 0);
    t.slot.assign(n + 1, 0);
    std::map<std::pair<int, int>, int> occupied;
    for (int v = 2; v <= n; ++v) {
        const auto& [a, b] = c.pairs[v - 1];
        if (!occupied.emplace(std::make_pair(a, b), v).second)
            throw std::invalid_argument("code_to_tree: slot reused by " + c.str());
        t.parent[v] = a;
        t.slot[v] = b;
    }
    return t;
}

SPCode word_to_code(const StirlingWord& w) {
    if (!is_regular_stirling_word(w))
        throw std::invalid_argument("word_to_code: not a Stirling word: " + w.str());
    int n = (int)w.letters.size() / 2;
    std::vector<int> s = w.letters;
    std::vector<std::pair<int, int>> pairs(n);
    pairs[0] = {0, 0};
    for (int v = n; v >= 2; --v) {
        // the two copies of the current maximum are adjacent
        int i = -1;
        for (int j = 0; j + 1 < (int)s.size(); ++j)
            if (s[j] == v && s[j + 1] == v) {
                i = j;
                break;
            }
        if (i < 0) throw std::logic_error("word_to_code: adjacent pair missing for " + w.str());
        int left = i > 0 ? s[i - 1] : 0;
        int right = i + 2 < (int)s.size() ? s[i + 2] : 0;
        std::pair<int, int> pair;
        if (left < right)
            pair = {right, 1};
        else if (left == right)
            pair = {right, 2};
        else
            pair = {left, 3};
        s.erase(s.begin() + i, s.begin() + i + 2);

        // The insertion gap for this pair must be unique in the reduced word;
        // fail loudly if the structural assumption is ever violated.
        int matches = 0;
        for (int g = 0; g <= (int)s.size(); ++g) {
            int l = g > 0 ? s[g - 1] : 0;
            int r = g < (int)s.size() ? s[g] : 0;
            std::pair<int, int> gap_pair;
            if (l < r)
                gap_pair = {r, 1};
            else if (l == r)
                gap_pair = {r, 2};
            else
                gap_pair = {l, 3};
            if (gap_pair == pair) ++matches;
        }
        if (matches != 1)
            throw std::logic_error("word_to_code: gap label (" + std::to_string(pair.first) +
                                   "," + std::to_string(pair.second) + ") not unique in " +
                                   w.str());
        pairs[v - 1] = pair;
    }
    if (s != std::vector<int>{1, 1})
        throw std::logic_error("word_to_code: reduction did not end at 11");
    return SPCode{pairs};
}

StirlingWord code_to_word(const SPCode& c) { return tree_to_word(code_to_tree(c)); }

}  // namespace spk
