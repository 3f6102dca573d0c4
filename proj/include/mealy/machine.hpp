#pragma once

#include <concepts>
#include <cstddef>
#include <type_traits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mealy/alphabet.hpp"

namespace mealy {

/// Default bound on the number of reachable states materialized by product
/// constructions (composition, equality decision).
inline constexpr std::size_t kDefaultPairCap = 5'000'000;

/// Process-wide cap used when a call does not pass one explicitly.
std::size_t default_pair_cap() noexcept;
void set_default_pair_cap(std::size_t cap) noexcept;

/// Dense transition and output tables, row-major by state.
struct Table {
    std::size_t num_states = 0;
    std::size_t num_letters = 0;
    std::vector<Index> next;
    std::vector<Index> out;

    Index next_of(Index q, Index x) const noexcept { return next[q * num_letters + x]; }
    Index out_of(Index q, Index x) const noexcept { return out[q * num_letters + x]; }
};

/**
 * Mealy automaton (Q, X, phi, psi) with named states and letters.
 *
 * Immutable after construction. Both tables are total; every entry is a
 * declared state or letter.
 */
class MealyMachine {
public:
    /// `next` and `out` are row-major: entry q * |X| + x.
    MealyMachine(std::string name, Alphabet alphabet, Alphabet states,
                 std::vector<Index> next, std::vector<Index> out);

    const std::string& name() const noexcept { return name_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Alphabet& states() const noexcept { return states_; }
    const Table& table() const noexcept { return table_; }

    std::size_t num_states() const noexcept { return table_.num_states; }
    std::size_t num_letters() const noexcept { return table_.num_letters; }

    Index next(Index q, Index x) const noexcept { return table_.next_of(q, x); }
    Index out(Index q, Index x) const noexcept { return table_.out_of(q, x); }

    const std::string& state_name(Index q) const { return states_.name(q); }
    Index state_index(std::string_view name) const { return states_.index_of(name); }

    MealyMachine renamed(std::string name) const;

private:
    std::string name_;
    Alphabet alphabet_;
    Alphabet states_;
    Table table_;
};

using MachinePtr = std::shared_ptr<const MealyMachine>;

/// A machine with a distinguished initial state; denotes the tree
/// endomorphism A_q of X*.
class PointedMachine {
public:
    PointedMachine(MachinePtr machine, Index initial);
    PointedMachine(MachinePtr machine, std::string_view initial);
    PointedMachine(MealyMachine machine, std::string_view initial);

    const MealyMachine& machine() const noexcept { return *machine_; }
    const MachinePtr& shared() const noexcept { return machine_; }
    Index initial() const noexcept { return initial_; }
    const Alphabet& alphabet() const noexcept { return machine_->alphabet(); }
    const std::string& initial_name() const { return machine_->state_name(initial_); }

    /// Same machine, different initial state.
    PointedMachine at(Index q) const { return {machine_, q}; }

private:
    MachinePtr machine_;
    Index initial_;
};

/// One-state machine that outputs its input.
PointedMachine identity_machine(const Alphabet& alphabet);

/// (phi(q, x), psi(q, x)).
std::pair<Index, Index> step(const MealyMachine& m, Index q, Index x);
std::pair<std::string, std::string> step(const MealyMachine& m, std::string_view q,
                                         std::string_view x);

/// Output word of t on w. Length preserving; apply(t, {}) == {}.
Word apply(const PointedMachine& t, const Word& w);

// A call apply(machine, word) with a Word argument also finds std::apply by
// argument-dependent lookup, which wins for rvalues. This equally general
// but constrained overload takes precedence and forwards to the one above.
template <class T, class W>
    requires std::same_as<std::remove_cvref_t<T>, PointedMachine>
             && std::same_as<std::remove_cvref_t<W>, Word>
Word apply(T&& t, W&& w) {
    return apply(static_cast<const PointedMachine&>(t), static_cast<const Word&>(w));
}

/// (psi(q, x), t pointed at phi(q, x)), so that apply(t, xw) = y ++ apply(t', w).
std::pair<Index, PointedMachine> section(const PointedMachine& t, Index x);

/**
 * Machine for w -> second(first(w)). The first argument acts first.
 *
 * Only pairs (q1, q2) reachable from the initial pair are materialized;
 * state i of the result is named "(q1,q2)". Throws InputError when the
 * alphabets differ and ResourceError when more than `cap` pairs are reached.
 */
PointedMachine compose(const PointedMachine& first, const PointedMachine& second,
                       std::size_t cap = default_pair_cap());

/// Machine computing A_xi = A_{q_n} ... A_{q_1}: the first letter of `xi`
/// acts first. Empty `xi` gives the identity machine.
PointedMachine compose_word(const MealyMachine& family, const Word& xi,
                            std::size_t cap = default_pair_cap());

/// A_xi(w) where xi is a word over the states of `family`. Satisfies
/// apply_state_word(m, xi1 ++ xi2, w) == apply_state_word(m, xi2, apply_state_word(m, xi1, w)).
Word apply_state_word(const MealyMachine& family, const Word& xi, const Word& w);

/// Shortest word on which t1 and t2 differ, or nullopt when they induce the
/// same transformation of X*. Decided exactly on the reachable pair product.
std::optional<Word> distinguishing_word(const PointedMachine& t1, const PointedMachine& t2,
                                        std::size_t cap = default_pair_cap());

bool transformations_equal(const PointedMachine& t1, const PointedMachine& t2,
                           std::size_t cap = default_pair_cap());

/// Shortest word moved by t, or nullopt when t is the identity on X*.
std::optional<Word> nontrivial_witness(const PointedMachine& t,
                                       std::size_t cap = default_pair_cap());

bool is_identity(const PointedMachine& t, std::size_t cap = default_pair_cap());

// Index-level product machinery, shared by the verification suites, which
// build long compositions without naming intermediate states.
namespace product {

/// Reachable pair product of two tables over the same alphabet; state 0 is
/// the initial pair. `pairs[i]` records the constituents of state i.
struct Product {
    Table table;
    std::vector<std::pair<Index, Index>> pairs;
};

Product compose(const Table& first, Index first_init, const Table& second, Index second_init,
                std::size_t cap);

std::optional<Word> nontrivial_witness(const Table& t, Index init, std::size_t cap);

std::optional<Word> distinguishing_word(const Table& t1, Index init1, const Table& t2,
                                        Index init2, std::size_t cap);

} // namespace product

} // namespace mealy
