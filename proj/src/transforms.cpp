#include "mealy/transforms.hpp"

#include <numeric>
#include <unordered_set>

#include "mealy/errors.hpp"

namespace mealy {

namespace {

constexpr Index kNone = Index(-1);

/// First state whose output map psi(q, .) is not a bijection.
std::optional<Index> non_invertible_state(const MealyMachine& m) {
    std::vector<char> hit(m.num_letters());
    for (Index q = 0; q < m.num_states(); ++q) {
        std::fill(hit.begin(), hit.end(), 0);
        for (Index x = 0; x < m.num_letters(); ++x) {
            auto& h = hit[m.out(q, x)];
            if (h)
                return q;
            h = 1;
        }
    }
    return std::nullopt;
}

/// First letter whose transition map phi(., x) is not a bijection.
std::optional<Index> non_reversible_letter(const MealyMachine& m) {
    std::vector<char> hit(m.num_states());
    for (Index x = 0; x < m.num_letters(); ++x) {
        std::fill(hit.begin(), hit.end(), 0);
        for (Index q = 0; q < m.num_states(); ++q) {
            auto& h = hit[m.next(q, x)];
            if (h)
                return x;
            h = 1;
        }
    }
    return std::nullopt;
}

/// First (q, x) whose image under (phi, psi) is shared with an earlier pair.
std::optional<std::pair<Index, Index>> pair_map_collision(const MealyMachine& m) {
    const std::size_t k = m.num_letters();
    std::vector<char> hit(m.num_states() * k);
    for (Index q = 0; q < m.num_states(); ++q)
        for (Index x = 0; x < k; ++x) {
            auto& h = hit[m.next(q, x) * k + m.out(q, x)];
            if (h)
                return std::pair{q, x};
            h = 1;
        }
    return std::nullopt;
}

bool invertible(const MealyMachine& m) { return !non_invertible_state(m); }
bool reversible(const MealyMachine& m) { return !non_reversible_letter(m); }

} // namespace

MealyMachine inverse_automaton(const MealyMachine& m) {
    if (auto q = non_invertible_state(m))
        throw DomainError("machine '" + m.name() + "' is not invertible: output map at state '"
                          + m.state_name(*q) + "' is not a bijection");
    const std::size_t k = m.num_letters();
    std::vector<Index> next(m.num_states() * k), out(m.num_states() * k);
    for (Index q = 0; q < m.num_states(); ++q)
        for (Index x = 0; x < k; ++x) {
            const Index y = m.out(q, x);
            next[q * k + y] = m.next(q, x);
            out[q * k + y] = x;
        }
    return {m.name() + "^-1", m.alphabet(), m.states(), std::move(next), std::move(out)};
}

MealyMachine reverse_automaton(const MealyMachine& m) {
    if (auto x = non_reversible_letter(m))
        throw DomainError("machine '" + m.name() + "' is not reversible: transition map on letter '"
                          + m.alphabet().name(*x) + "' is not a bijection");
    const std::size_t k = m.num_letters();
    std::vector<Index> next(m.num_states() * k), out(m.num_states() * k);
    for (Index q = 0; q < m.num_states(); ++q)
        for (Index x = 0; x < k; ++x) {
            const Index p = m.next(q, x);
            next[p * k + x] = q;
            out[p * k + x] = m.out(q, x);
        }
    return {m.name() + "^rev", m.alphabet(), m.states(), std::move(next), std::move(out)};
}

MealyMachine dual_automaton(const MealyMachine& m) {
    const std::size_t k = m.num_letters();
    const std::size_t n = m.num_states();
    std::vector<Index> next(k * n), out(k * n);
    for (Index x = 0; x < k; ++x)
        for (Index q = 0; q < n; ++q) {
            next[x * n + q] = m.out(q, x);
            out[x * n + q] = m.next(q, x);
        }
    return {"dual(" + m.name() + ")", m.states(), m.alphabet(), std::move(next), std::move(out)};
}

MealyMachine disjoint_union(const std::vector<MealyMachine>& machines, std::string name) {
    if (machines.empty())
        throw InputError("disjoint union of no machines");
    const Alphabet& alphabet = machines.front().alphabet();
    std::vector<std::string> names;
    std::unordered_set<std::string> used;
    std::vector<Index> next, out;
    std::string joined;
    Index offset = 0;
    for (const auto& m : machines) {
        if (!(m.alphabet() == alphabet))
            throw InputError("disjoint union: machine '" + m.name() + "' has a different alphabet");
        for (const auto& s : m.states().names()) {
            if (!used.insert(s).second)
                throw InputError("disjoint union: state name '" + s + "' occurs in more than one machine");
            names.push_back(s);
        }
        for (Index v : m.table().next)
            next.push_back(v + offset);
        out.insert(out.end(), m.table().out.begin(), m.table().out.end());
        offset += static_cast<Index>(m.num_states());
        joined += (joined.empty() ? "" : "+") + m.name();
    }
    if (machines.size() == 1 && name.empty())
        return machines.front();
    return {name.empty() ? joined : std::move(name), alphabet, Alphabet(std::move(names)),
            std::move(next), std::move(out)};
}

AutomatonClassification classify(const MealyMachine& m) {
    AutomatonClassification c;
    const auto bad_state = non_invertible_state(m);
    const auto bad_letter = non_reversible_letter(m);
    const auto collision = pair_map_collision(m);
    c.invertible = !bad_state;
    c.reversible = !bad_letter;
    c.bireversible = c.invertible && c.reversible && !collision;

    if (bad_state)
        c.witnesses.push_back({"invertible", *bad_state, std::nullopt,
                               "output map at state '" + m.state_name(*bad_state)
                                   + "' is not a bijection"});
    if (bad_letter)
        c.witnesses.push_back({"reversible", std::nullopt, *bad_letter,
                               "transition map on letter '" + m.alphabet().name(*bad_letter)
                                   + "' is not a bijection"});
    if (!c.bireversible) {
        if (collision)
            c.witnesses.push_back({"bireversible", collision->first, collision->second,
                                   "(phi, psi) maps (" + m.state_name(collision->first) + ", "
                                       + m.alphabet().name(collision->second)
                                       + ") onto the image of another pair"});
        else
            c.witnesses.push_back({"bireversible", bad_state, bad_letter,
                                   bad_state ? "not invertible" : "not reversible"});
    }

    // Equivalent characterizations, used as consistency assertions.
    auto defect = [&](bool ok, const char* msg) {
        if (!ok)
            c.defects.emplace_back(msg);
    };
    const auto dual = dual_automaton(m);
    defect(invertible(dual) == c.reversible, "reversible disagrees with invertibility of the dual");
    defect(reversible(dual) == c.invertible, "invertible disagrees with reversibility of the dual");
    if (c.invertible && c.reversible) {
        const auto inv = inverse_automaton(m);
        const auto rev = reverse_automaton(m);
        defect(invertible(rev) == c.bireversible,
               "bireversible disagrees with invertibility of the reverse automaton");
        defect(reversible(inv) == c.bireversible,
               "bireversible disagrees with reversibility of the inverse automaton");
        defect(invertible(dual_automaton(inv)) == c.bireversible,
               "bireversible disagrees with invertibility of the dual of the inverse");
    }
    return c;
}

bool is_isomorphism(const MealyMachine& m1, const MealyMachine& m2,
                    const std::vector<Index>& state_map, const std::vector<Index>& letter_map) {
    if (m1.num_states() != m2.num_states() || m1.num_letters() != m2.num_letters())
        return false;
    if (state_map.size() != m1.num_states() || letter_map.size() != m1.num_letters())
        return false;
    auto bijective = [](const std::vector<Index>& f) {
        std::vector<char> hit(f.size());
        for (Index v : f) {
            if (v >= f.size() || hit[v])
                return false;
            hit[v] = 1;
        }
        return true;
    };
    if (!bijective(state_map) || !bijective(letter_map))
        return false;
    for (Index q = 0; q < m1.num_states(); ++q)
        for (Index x = 0; x < m1.num_letters(); ++x) {
            const Index p = state_map[q];
            const Index y = letter_map[x];
            if (state_map[m1.next(q, x)] != m2.next(p, y))
                return false;
            if (letter_map[m1.out(q, x)] != m2.out(p, y))
                return false;
        }
    return true;
}

namespace {

struct IsoSearch {
    const MealyMachine& m1;
    const MealyMachine& m2;
    const std::vector<Index>& letters;
    std::vector<Index> fwd;
    std::vector<Index> back;

    /// Extend the mapping with q -> p and everything it forces. Returns the
    /// states newly mapped, or nullopt (with the mapping restored) on conflict.
    std::optional<std::vector<Index>> propagate(Index q, Index p) {
        std::vector<Index> added;
        auto undo = [&] {
            for (Index s : added) {
                back[fwd[s]] = kNone;
                fwd[s] = kNone;
            }
        };
        auto bind = [&](Index a, Index b) {
            if (fwd[a] == kNone && back[b] == kNone) {
                fwd[a] = b;
                back[b] = a;
                added.push_back(a);
                return true;
            }
            return fwd[a] == b;
        };
        if (!bind(q, p)) {
            undo();
            return std::nullopt;
        }
        for (std::size_t i = 0; i < added.size(); ++i) {
            const Index a = added[i];
            const Index b = fwd[a];
            for (Index x = 0; x < m1.num_letters(); ++x) {
                const Index y = letters[x];
                if (letters[m1.out(a, x)] != m2.out(b, y) || !bind(m1.next(a, x), m2.next(b, y))) {
                    undo();
                    return std::nullopt;
                }
            }
        }
        return added;
    }

    bool solve() {
        Index q = 0;
        while (q < fwd.size() && fwd[q] != kNone)
            ++q;
        if (q == fwd.size())
            return true;
        for (Index p = 0; p < back.size(); ++p) {
            if (back[p] != kNone)
                continue;
            auto added = propagate(q, p);
            if (!added)
                continue;
            if (solve())
                return true;
            for (Index s : *added) {
                back[fwd[s]] = kNone;
                fwd[s] = kNone;
            }
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<Index>> find_isomorphism(const MealyMachine& m1, const MealyMachine& m2,
                                                   const std::vector<Index>& letter_map) {
    if (m1.num_states() != m2.num_states() || m1.num_letters() != m2.num_letters())
        return std::nullopt;
    std::vector<Index> letters = letter_map;
    if (letters.empty()) {
        letters.resize(m1.num_letters());
        std::iota(letters.begin(), letters.end(), Index{0});
    }
    if (letters.size() != m1.num_letters())
        throw InputError("letter map has the wrong size");
    IsoSearch search{m1, m2, letters, std::vector<Index>(m1.num_states(), kNone),
                     std::vector<Index>(m2.num_states(), kNone)};
    if (!search.solve())
        return std::nullopt;
    return search.fwd;
}

bool isomorphic(const MealyMachine& m1, const MealyMachine& m2) {
    if (m1.num_letters() != m2.num_letters())
        return false;
    std::vector<Index> letters;
    for (const auto& name : m1.alphabet().names()) {
        auto y = m2.alphabet().find(name);
        if (!y)
            return false;
        letters.push_back(*y);
    }
    return find_isomorphism(m1, m2, letters).has_value();
}

Table canonical_table(const MealyMachine& m, Index root) {
    std::vector<Index> number(m.num_states(), kNone);
    std::vector<Index> order{root};
    number[root] = 0;
    Table t;
    t.num_letters = m.num_letters();
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Index q = order[i];
        for (Index x = 0; x < m.num_letters(); ++x) {
            const Index p = m.next(q, x);
            if (number[p] == kNone) {
                number[p] = static_cast<Index>(order.size());
                order.push_back(p);
            }
            t.next.push_back(number[p]);
            t.out.push_back(m.out(q, x));
        }
    }
    t.num_states = order.size();
    return t;
}

} // namespace mealy
