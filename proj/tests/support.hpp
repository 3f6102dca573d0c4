#pragma once

// Test oracles and generators. The reference machines here are built from
// the defining formulas directly and walked with string maps, sharing no
// code with the library's constructors or table walkers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mealy/machine.hpp"

namespace testing {

using mealy::Index;
using mealy::Word;

/// Automaton as a map (state, letter) -> (next, out) over names.
struct RefMachine {
    std::vector<std::string> states;
    std::vector<std::string> letters;
    std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> delta;

    /// Rules "state letter next out", one per entry.
    static RefMachine from_rules(std::vector<std::string> states, std::vector<std::string> letters,
                                 const std::vector<std::string>& rules) {
        RefMachine m{std::move(states), std::move(letters), {}};
        for (const auto& r : rules) {
            std::istringstream in(r);
            std::string q, x, p, y;
            in >> q >> x >> p >> y;
            m.delta[{q, x}] = {p, y};
        }
        return m;
    }

    std::vector<std::string> run(std::string q, const std::vector<std::string>& w) const {
        std::vector<std::string> out;
        for (const auto& x : w) {
            const auto& [p, y] = delta.at({q, x});
            out.push_back(y);
            q = p;
        }
        return out;
    }

    /// Right action of a state word: first state acts first.
    std::vector<std::string> run_word(const std::vector<std::string>& xi, std::vector<std::string> w) const {
        for (const auto& q : xi)
            w = run(q, w);
        return w;
    }
};

inline std::vector<std::string> chars(const std::string& s) {
    std::vector<std::string> v;
    for (char c : s)
        v.emplace_back(1, c);
    return v;
}

inline std::string concat(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v)
        s += x;
    return s;
}

/// Aleshin type A^(n) from its definition: q_{n,0} = c_n, q_{n,2n-1} = a_n,
/// phi(q_i, x) = q_{i+1}; a, b flip the letter, other states copy it.
/// `complement` flips every output, giving B^(n).
inline RefMachine ref_series(int n, bool complement, bool classic_names) {
    const std::string sfx = classic_names ? "" : "." + std::to_string(n);
    const std::string a = "a" + sfx, b = "b" + sfx, c = "c" + sfx;
    auto q = [&](int i) -> std::string {
        if (i == 0)
            return c;
        if (i == 2 * n - 1)
            return a;
        return "q" + sfx + "." + std::to_string(i);
    };
    RefMachine m;
    m.states = {a, b, c};
    for (int i = 1; i <= 2 * n - 2; ++i)
        m.states.push_back(q(i));
    m.letters = {"0", "1"};
    auto out = [&](const std::string& s, int x) {
        int y = (s == a || s == b) ? 1 - x : x;
        if (complement)
            y = 1 - y;
        return std::to_string(y);
    };
    for (int x : {0, 1}) {
        const std::string xs = std::to_string(x);
        m.delta[{a, xs}] = {x == 0 ? c : b, out(a, x)};
        m.delta[{b, xs}] = {x == 0 ? b : c, out(b, x)};
        for (int i = 0; i <= 2 * n - 2; ++i)
            m.delta[{q(i), xs}] = {q(i + 1), out(q(i), x)};
    }
    return m;
}

// --- random generation ------------------------------------------------------

using Rng = std::mt19937_64;

inline Index pick(Rng& rng, std::size_t bound) {
    return static_cast<Index>(std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng));
}

inline std::vector<Index> random_permutation(Rng& rng, std::size_t n) {
    std::vector<Index> p(n);
    for (Index i = 0; i < n; ++i)
        p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline mealy::Alphabet numbered(const std::string& prefix, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(prefix + std::to_string(i));
    return mealy::Alphabet(names);
}

enum class Shape { any, invertible, reversible };

/// Random machine; letters "x0".."x{k-1}", states "s0".."s{m-1}".
inline mealy::MealyMachine random_machine(Rng& rng, std::size_t m, std::size_t k, Shape shape = Shape::any) {
    std::vector<Index> next(m * k), out(m * k);
    for (Index q = 0; q < m; ++q) {
        const auto perm = random_permutation(rng, k);
        for (Index x = 0; x < k; ++x) {
            next[q * k + x] = pick(rng, m);
            out[q * k + x] = shape == Shape::invertible ? perm[x] : pick(rng, k);
        }
    }
    if (shape == Shape::reversible)
        for (Index x = 0; x < k; ++x) {
            const auto perm = random_permutation(rng, m);
            for (Index q = 0; q < m; ++q)
                next[q * k + x] = perm[q];
        }
    return {"R", numbered("x", k), numbered("s", m), std::move(next), std::move(out)};
}

inline Word random_word(Rng& rng, std::size_t len, std::size_t k) {
    Word w(len);
    for (auto& x : w)
        x = pick(rng, k);
    return w;
}

/// All words of length exactly `len` over k letters, lexicographic.
inline std::vector<Word> all_words(std::size_t k, std::size_t len) {
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<Word> grown;
        for (const auto& w : out)
            for (Index x = 0; x < k; ++x) {
                auto v = w;
                v.push_back(x);
                grown.push_back(std::move(v));
            }
        out = std::move(grown);
    }
    return out;
}

/// Brute-force equality of two transformations on all words of length
/// `len` (equality on length len implies it on all shorter lengths).
inline bool equal_up_to(const mealy::PointedMachine& t1, const mealy::PointedMachine& t2, std::size_t len) {
    for (const auto& w : all_words(t1.alphabet().size(), len))
        if (mealy::apply(t1, w) != mealy::apply(t2, w))
            return false;
    return true;
}

} // namespace testing
