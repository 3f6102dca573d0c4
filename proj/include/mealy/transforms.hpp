#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mealy/machine.hpp"

namespace mealy {

/// Inverse automaton: every label x|y becomes y|x. Pointed at q it computes
/// the inverse of A_q. Throws DomainError naming a state whose output map is
/// not a bijection.
MealyMachine inverse_automaton(const MealyMachine& m);

/// Reverse automaton: every edge of the Moore diagram is reversed, labels
/// kept. Throws DomainError naming a letter whose transition map is not a
/// bijection.
MealyMachine reverse_automaton(const MealyMachine& m);

/// Dual automaton (Q and X swapped, phi and psi swapped). Always defined.
MealyMachine dual_automaton(const MealyMachine& m);

/// Machine on the union of the state sets acting as each constituent on its
/// own states. Requires one shared alphabet and pairwise distinct state names.
MealyMachine disjoint_union(const std::vector<MealyMachine>& machines, std::string name = {});

/// Copy of `m` with states renamed by `rename(old_name)`.
template <class F>
MealyMachine rename_states(const MealyMachine& m, F&& rename, std::string name = {}) {
    std::vector<std::string> names;
    names.reserve(m.num_states());
    for (const auto& s : m.states().names())
        names.push_back(rename(s));
    return {name.empty() ? m.name() : std::move(name), m.alphabet(), Alphabet(std::move(names)),
            m.table().next, m.table().out};
}

struct ClassificationWitness {
    std::string property;            // "invertible", "reversible" or "bireversible"
    std::optional<Index> state;      // offending state, if the failure is per state
    std::optional<Index> letter;     // offending letter, if the failure is per letter
    std::string description;
};

struct AutomatonClassification {
    bool invertible = false;
    bool reversible = false;
    bool bireversible = false;
    std::vector<ClassificationWitness> witnesses;
    /// Disagreements between the direct predicates and the equivalent
    /// characterizations through inverse, reverse and dual automata. Empty
    /// for any correct implementation.
    std::vector<std::string> defects;
};

/// Invertibility, reversibility and bi-reversibility from first principles,
/// cross-checked against the characterizations through derived automata.
AutomatonClassification classify(const MealyMachine& m);

/// True iff `state_map` (by index, m1 -> m2) together with `letter_map`
/// (m1 letters -> m2 letters) is an isomorphism of the two machines.
bool is_isomorphism(const MealyMachine& m1, const MealyMachine& m2,
                    const std::vector<Index>& state_map, const std::vector<Index>& letter_map);

/// State bijection m1 -> m2 that is an isomorphism for the given letter map
/// (identity by index when empty), found by backtracking with forward
/// propagation. nullopt when none exists.
std::optional<std::vector<Index>> find_isomorphism(const MealyMachine& m1, const MealyMachine& m2,
                                                   const std::vector<Index>& letter_map = {});

/// Machine isomorphism with letters matched by name.
bool isomorphic(const MealyMachine& m1, const MealyMachine& m2);

/// Canonical form: states renumbered in BFS order from `root`, visiting
/// letters in index order. Two machines whose roots have isomorphic
/// reachable parts produce equal tables.
Table canonical_table(const MealyMachine& m, Index root);

} // namespace mealy
