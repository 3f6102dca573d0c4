#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mealy/machine.hpp"

namespace mealy {

/// Role of a state inside one Aleshin/Bellaterra type automaton.
enum class Role { a, b, c, q };

/// One internal state of A^(n) or B^(n): a_n, b_n, c_n or q_{n,i}.
struct BaseState {
    int n = 0;
    Role role = Role::a;
    int i = 0;  // chain position for Role::q, 1 .. 2n-2
    std::string name;
};

/**
 * Index set N of a disjoint union of series members (a single n is the
 * singleton {n}).
 *
 * State names are canonical and parseable: "a.3", "b.3", "c.3", "q.3.1", ...
 * The classic scope is {1} with the unsubscripted names "a", "b", "c" of the
 * original three-state automata.
 */
class Scope {
public:
    static Scope single(int n);
    static Scope of(std::vector<int> members);
    static Scope classic();
    /// Accepts "3", "{1,2}", "1,2" and "classic".
    static Scope parse(std::string_view text);

    const std::vector<int>& members() const noexcept { return members_; }
    bool is_classic() const noexcept { return classic_; }
    bool is_single() const noexcept { return members_.size() == 1; }
    bool contains_zero() const noexcept { return members_.front() == 0; }

    /// Q_N in canonical order: smaller n first; a_n, b_n, c_n, q_{n,1}, ...
    std::vector<BaseState> base_states() const;
    std::string label() const;

    bool operator==(const Scope&) const = default;

private:
    std::vector<int> members_;
    bool classic_ = false;
};

/// Name of a state in a scope, e.g. state_name(scope, Role::q, 3, 1) == "q.3.1".
std::string state_name(const Scope& scope, Role role, int n, int i = 0);

/// Q_N as an alphabet of names.
Alphabet base_state_alphabet(const Scope& scope);

/**
 * Signed generators Q_N^+- = Q_N u Q_N^-1.
 *
 * Symbol layout: all positive symbols in base order, then all inverses in
 * the same order. This matches the state order of make_U and the letter
 * order of make_D, so indices are shared across the three. The inverse of
 * "a.1" is serialized "a.1'".
 */
class SignedAlphabet {
public:
    explicit SignedAlphabet(const Scope& scope);

    const Scope& scope() const noexcept { return scope_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return 2 * base_.size(); }
    std::size_t base_size() const noexcept { return base_.size(); }

    const BaseState& base(Index symbol) const { return base_[base_index(symbol)]; }
    Index base_index(Index symbol) const noexcept { return symbol % base_.size(); }
    bool is_inverse(Index symbol) const noexcept { return symbol >= base_.size(); }
    Index inverse_of(Index symbol) const noexcept {
        return is_inverse(symbol) ? symbol - base_.size() : symbol + base_.size();
    }
    Index symbol(Index base_index, bool inverse) const noexcept {
        return base_index + (inverse ? static_cast<Index>(base_.size()) : 0);
    }
    const std::vector<BaseState>& base_states() const noexcept { return base_; }

    /// Report rendering, e.g. "a_1^-1".
    std::string display(Index symbol) const;

private:
    Scope scope_;
    std::vector<BaseState> base_;
    Alphabet alphabet_;
};

/// Bijection of a finite named set, stored as an index array.
class Permutation {
public:
    static Permutation identity(Alphabet domain);
    /// Throws InputError when `mapping` is not a bijection of the domain.
    static Permutation from_mapping(Alphabet domain, std::vector<Index> mapping);
    /// Cycle notation: {{"a", "b"}, {"c", "d", "e"}} is (a b)(c d e).
    static Permutation from_cycles(Alphabet domain, const std::vector<std::vector<std::string>>& cycles);
    /// Parses "(a b)(c d e)"; "()" and "" give the identity.
    static Permutation parse(Alphabet domain, std::string_view text);

    const Alphabet& domain() const noexcept { return domain_; }
    const std::vector<Index>& mapping() const noexcept { return map_; }
    Index operator()(Index x) const { return map_.at(x); }

    Permutation inverse() const;
    std::string to_cycles() const;

    bool operator==(const Permutation& other) const {
        return domain_ == other.domain_ && map_ == other.map_;
    }

private:
    Permutation(Alphabet domain, std::vector<Index> mapping)
        : domain_(std::move(domain)), map_(std::move(mapping)) {}

    Alphabet domain_;
    std::vector<Index> map_;
};

/// Function-composition product: (tau * sigma)(x) = tau(sigma(x)).
Permutation operator*(const Permutation& tau, const Permutation& sigma);

// --- Automaton series ---------------------------------------------------

enum class FamilyKind { aleshin, bellaterra };

/// A^(N): disjoint union of the Aleshin type automata A^(n), n in N (n >= 1).
MealyMachine make_aleshin(const Scope& scope);
MealyMachine make_aleshin(int n);

/// B^(N): same transitions as A^(N), outputs complemented; n = 0 contributes
/// the one-state swap automaton B^(0) with state "c.0".
MealyMachine make_bellaterra(const Scope& scope);
MealyMachine make_bellaterra(int n);

MealyMachine make_union_family(const Scope& scope, FamilyKind kind);

/// The three-state Aleshin automaton A and Bellaterra automaton B, states a, b, c.
MealyMachine aleshin_automaton();
MealyMachine bellaterra_automaton();

/// Disjoint union of m and its inverse automaton with every state q renamed q'.
MealyMachine make_signed(const MealyMachine& m, std::string name = {});

/// I^(N): inverse of A^(N) with states renamed q'.
MealyMachine make_I(const Scope& scope);
/// U^(N) = A^(N) u I^(N), states in SignedAlphabet order.
MealyMachine make_U(const Scope& scope);
/// D^(N): dual of U^(N), alphabet Q_N^+-, states "0" and "1".
MealyMachine make_D(const Scope& scope);
/// E^(N): transitions of D^(N); outputs prod (a_n' b_n') at 0 and prod (a_n b_n) at 1.
MealyMachine make_E(const Scope& scope);

/// One-state machine over Q_N^+- applying tau to positive symbols and the
/// sign-conjugated tau to inverses. `tau` acts on base_state_alphabet(scope).
PointedMachine make_pi(const Scope& scope, const Permutation& tau);

/// Product over n in N of the cycle (a_n [b_n] c_n q_{n,1} ... q_{n,2n-2}).
Permutation chain_cycle(const Scope& scope, bool through_b);
/// Product over n in N of the cycle (c_n q_{n,1} ... q_{n,2n-2}).
Permutation tail_cycle(const Scope& scope);
/// Product over n in N of the transposition of the two given roles.
Permutation role_transposition(const Scope& scope, Role r1, Role r2);

/// h = B^(0) pointed at c.0: swaps 0 and 1 in every position.
PointedMachine flip_machine();

} // namespace mealy
