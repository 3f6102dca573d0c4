#include "mealy/families.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "mealy/errors.hpp"
#include "mealy/transforms.hpp"

namespace mealy {

// --- Scope ---------------------------------------------------------------

Scope Scope::single(int n) { return of({n}); }

Scope Scope::of(std::vector<int> members) {
    if (members.empty())
        throw InputError("scope must contain at least one index");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.front() < 0)
        throw InputError("scope index must be nonnegative, got " + std::to_string(members.front()));
    Scope s;
    s.members_ = std::move(members);
    return s;
}

Scope Scope::classic() {
    Scope s = single(1);
    s.classic_ = true;
    return s;
}

Scope Scope::parse(std::string_view text) {
    std::string t(text);
    if (t == "classic")
        return classic();
    std::replace_if(t.begin(), t.end(), [](char c) { return c == '{' || c == '}' || c == ','; }, ' ');
    std::istringstream in(t);
    std::vector<int> members;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size())
            throw InputError("bad scope index '" + tok + "' in '" + std::string(text) + "'");
        members.push_back(v);
    }
    return of(std::move(members));
}

std::string state_name(const Scope& scope, Role role, int n, int i) {
    static constexpr const char* letters[] = {"a", "b", "c", "q"};
    std::string s = letters[static_cast<int>(role)];
    if (scope.is_classic())
        return s;
    s += "." + std::to_string(n);
    if (role == Role::q)
        s += "." + std::to_string(i);
    return s;
}

std::vector<BaseState> Scope::base_states() const {
    std::vector<BaseState> out;
    for (int n : members_) {
        if (n == 0) {
            out.push_back({0, Role::c, 0, state_name(*this, Role::c, 0)});
            continue;
        }
        for (Role r : {Role::a, Role::b, Role::c})
            out.push_back({n, r, 0, state_name(*this, r, n)});
        for (int i = 1; i <= 2 * n - 2; ++i)
            out.push_back({n, Role::q, i, state_name(*this, Role::q, n, i)});
    }
    return out;
}

std::string Scope::label() const {
    if (classic_)
        return "classic";
    if (members_.size() == 1)
        return std::to_string(members_.front());
    std::string s = "{";
    for (std::size_t i = 0; i < members_.size(); ++i)
        s += (i ? "," : "") + std::to_string(members_[i]);
    return s + "}";
}

Alphabet base_state_alphabet(const Scope& scope) {
    std::vector<std::string> names;
    for (auto& b : scope.base_states())
        names.push_back(b.name);
    return Alphabet(std::move(names));
}

// --- SignedAlphabet --------------------------------------------------------

namespace {

void require_aleshin_scope(const Scope& scope) {
    if (scope.contains_zero())
        throw InputError("Aleshin type automata need n >= 1 (scope " + scope.label() + ")");
}

} // namespace

SignedAlphabet::SignedAlphabet(const Scope& scope) : scope_(scope), base_(scope.base_states()) {
    require_aleshin_scope(scope);
    std::vector<std::string> names;
    for (const auto& b : base_)
        names.push_back(b.name);
    for (const auto& b : base_)
        names.push_back(b.name + "'");
    alphabet_ = Alphabet(std::move(names));
}

std::string SignedAlphabet::display(Index symbol) const {
    const auto& b = base(symbol);
    static constexpr const char* letters[] = {"a", "b", "c", "q"};
    std::string s = letters[static_cast<int>(b.role)];
    if (!scope_.is_classic()) {
        s += "_" + std::to_string(b.n);
        if (b.role == Role::q)
            s += "," + std::to_string(b.i);
    }
    if (is_inverse(symbol))
        s += "^-1";
    return s;
}

// --- Permutation -----------------------------------------------------------

Permutation Permutation::identity(Alphabet domain) {
    std::vector<Index> m(domain.size());
    for (Index i = 0; i < m.size(); ++i)
        m[i] = i;
    return {std::move(domain), std::move(m)};
}

Permutation Permutation::from_mapping(Alphabet domain, std::vector<Index> mapping) {
    if (mapping.size() != domain.size())
        throw InputError("permutation mapping has the wrong size");
    std::vector<char> hit(mapping.size());
    for (Index v : mapping) {
        if (v >= mapping.size() || hit[v])
            throw InputError("permutation mapping is not a bijection");
        hit[v] = 1;
    }
    return {std::move(domain), std::move(mapping)};
}

Permutation Permutation::from_cycles(Alphabet domain,
                                     const std::vector<std::vector<std::string>>& cycles) {
    std::vector<Index> m(domain.size());
    for (Index i = 0; i < m.size(); ++i)
        m[i] = i;
    std::vector<char> used(domain.size());
    for (const auto& cycle : cycles) {
        std::vector<Index> idx;
        for (const auto& name : cycle) {
            const Index i = domain.index_of(name);
            if (used[i])
                throw InputError("element '" + name + "' occurs twice in cycle notation");
            used[i] = 1;
            idx.push_back(i);
        }
        for (std::size_t j = 0; j < idx.size(); ++j)
            m[idx[j]] = idx[(j + 1) % idx.size()];
    }
    return {std::move(domain), std::move(m)};
}

Permutation Permutation::parse(Alphabet domain, std::string_view text) {
    std::vector<std::vector<std::string>> cycles;
    std::string cur;
    bool open = false;
    auto flush = [&] {
        if (!cur.empty())
            cycles.back().push_back(cur);
        cur.clear();
    };
    for (char ch : text) {
        if (ch == '(') {
            if (open)
                throw InputError("nested '(' in cycle notation");
            open = true;
            cycles.emplace_back();
        } else if (ch == ')') {
            if (!open)
                throw InputError("unbalanced ')' in cycle notation");
            flush();
            open = false;
        } else if (ch == ' ' || ch == ',' || ch == '\t') {
            if (open)
                flush();
        } else {
            if (!open)
                throw InputError("symbol outside a cycle in '" + std::string(text) + "'");
            cur += ch;
        }
    }
    if (open)
        throw InputError("unterminated cycle in '" + std::string(text) + "'");
    return from_cycles(std::move(domain), cycles);
}

Permutation Permutation::inverse() const {
    std::vector<Index> inv(map_.size());
    for (Index i = 0; i < map_.size(); ++i)
        inv[map_[i]] = i;
    return {domain_, std::move(inv)};
}

std::string Permutation::to_cycles() const {
    std::string s;
    std::vector<char> seen(map_.size());
    for (Index start = 0; start < map_.size(); ++start) {
        if (seen[start] || map_[start] == start)
            continue;
        s += "(";
        for (Index i = start; !seen[i]; i = map_[i]) {
            seen[i] = 1;
            if (i != start)
                s += " ";
            s += domain_.name(i);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& tau, const Permutation& sigma) {
    if (!(tau.domain() == sigma.domain()))
        throw InputError("product of permutations on different sets");
    std::vector<Index> m(sigma.mapping().size());
    for (Index i = 0; i < m.size(); ++i)
        m[i] = tau(sigma(i));
    return Permutation::from_mapping(tau.domain(), std::move(m));
}

// --- Series ----------------------------------------------------------------

namespace {

std::string family_name(const char* letter, const Scope& scope) {
    if (scope.is_classic())
        return letter;
    return std::string(letter) + "(" + scope.label() + ")";
}

/// Tables of A^(N) or B^(N) over {0, 1}.
MealyMachine build_series(const Scope& scope, FamilyKind kind) {
    const auto base = scope.base_states();
    std::vector<std::string> names;
    for (const auto& b : base)
        names.push_back(b.name);
    std::vector<Index> next(base.size() * 2), out(base.size() * 2);

    Index offset = 0;
    for (int n : scope.members()) {
        if (n == 0) {
            // B^(0): one state swapping the letters.
            next[offset * 2 + 0] = next[offset * 2 + 1] = offset;
            out[offset * 2 + 0] = 1;
            out[offset * 2 + 1] = 0;
            offset += 1;
            continue;
        }
        const Index a = offset, b = offset + 1, c = offset + 2;
        // Chain position i in 0..2n-1 where position 0 is c_n and 2n-1 is a_n.
        auto chain = [&](int i) -> Index {
            if (i == 0)
                return c;
            if (i == 2 * n - 1)
                return a;
            return c + static_cast<Index>(i);
        };
        auto set = [&](Index q, Index x, Index p, bool flip) {
            next[q * 2 + x] = p;
            const bool complement = (kind == FamilyKind::bellaterra) != flip;
            out[q * 2 + x] = complement ? 1 - x : x;
        };
        set(a, 0, c, true);
        set(a, 1, b, true);
        set(b, 0, b, true);
        set(b, 1, c, true);
        for (int i = 0; i <= 2 * n - 2; ++i)
            for (Index x : {0u, 1u})
                set(chain(i), x, chain(i + 1), false);
        offset += static_cast<Index>(2 * n + 1);
    }
    return {family_name(kind == FamilyKind::aleshin ? "A" : "B", scope), Alphabet({"0", "1"}),
            Alphabet(std::move(names)), std::move(next), std::move(out)};
}

} // namespace

MealyMachine make_aleshin(const Scope& scope) {
    require_aleshin_scope(scope);
    return build_series(scope, FamilyKind::aleshin);
}

MealyMachine make_aleshin(int n) {
    if (n < 1)
        throw InputError("Aleshin type automaton A^(n) needs n >= 1, got " + std::to_string(n));
    return make_aleshin(Scope::single(n));
}

MealyMachine make_bellaterra(const Scope& scope) { return build_series(scope, FamilyKind::bellaterra); }

MealyMachine make_bellaterra(int n) {
    if (n < 0)
        throw InputError("Bellaterra type automaton B^(n) needs n >= 0, got " + std::to_string(n));
    return make_bellaterra(Scope::single(n));
}

MealyMachine make_union_family(const Scope& scope, FamilyKind kind) {
    return kind == FamilyKind::aleshin ? make_aleshin(scope) : make_bellaterra(scope);
}

MealyMachine aleshin_automaton() { return make_aleshin(Scope::classic()); }
MealyMachine bellaterra_automaton() { return make_bellaterra(Scope::classic()); }

MealyMachine make_signed(const MealyMachine& m, std::string name) {
    auto inv = rename_states(inverse_automaton(m), [](const std::string& s) { return s + "'"; });
    return disjoint_union({m, inv}, name.empty() ? "signed(" + m.name() + ")" : std::move(name));
}

MealyMachine make_I(const Scope& scope) {
    return rename_states(inverse_automaton(make_aleshin(scope)),
                         [](const std::string& s) { return s + "'"; }, family_name("I", scope));
}

MealyMachine make_U(const Scope& scope) {
    return make_signed(make_aleshin(scope), family_name("U", scope));
}

MealyMachine make_D(const Scope& scope) {
    return dual_automaton(make_U(scope)).renamed(family_name("D", scope));
}

MealyMachine make_E(const Scope& scope) {
    const SignedAlphabet sa(scope);
    const MealyMachine d = make_D(scope);
    const std::size_t k = sa.size();
    std::vector<Index> out(2 * k);
    for (Index s = 0; s < k; ++s) {
        out[s] = out[k + s] = s;
        const Role r = sa.base(s).role;
        if (r == Role::a || r == Role::b) {
            const Index partner = r == Role::a ? s + 1 : s - 1;
            // State 0 swaps a_n^-1, b_n^-1; state 1 swaps a_n, b_n.
            if (sa.is_inverse(s))
                out[s] = partner;
            else
                out[k + s] = partner;
        }
    }
    return {family_name("E", scope), d.alphabet(), d.states(), d.table().next, std::move(out)};
}

PointedMachine make_pi(const Scope& scope, const Permutation& tau) {
    const SignedAlphabet sa(scope);
    if (!(tau.domain() == base_state_alphabet(scope)))
        throw InputError("pi: permutation must act on the base states of scope " + scope.label());
    std::vector<Index> next(sa.size(), 0), out(sa.size());
    for (Index s = 0; s < sa.size(); ++s)
        out[s] = sa.symbol(tau(sa.base_index(s)), sa.is_inverse(s));
    return {std::make_shared<const MealyMachine>("pi" + tau.to_cycles(), sa.alphabet(),
                                                 Alphabet({"pi"}), std::move(next), std::move(out)),
            Index{0}};
}

namespace {

Permutation cycles_per_member(const Scope& scope,
                              const std::function<std::vector<std::string>(int)>& cycle_of) {
    std::vector<std::vector<std::string>> cycles;
    for (int n : scope.members())
        if (n > 0)
            cycles.push_back(cycle_of(n));
    return Permutation::from_cycles(base_state_alphabet(scope), cycles);
}

} // namespace

Permutation chain_cycle(const Scope& scope, bool through_b) {
    return cycles_per_member(scope, [&](int n) {
        std::vector<std::string> c{state_name(scope, Role::a, n)};
        if (through_b)
            c.push_back(state_name(scope, Role::b, n));
        c.push_back(state_name(scope, Role::c, n));
        for (int i = 1; i <= 2 * n - 2; ++i)
            c.push_back(state_name(scope, Role::q, n, i));
        return c;
    });
}

Permutation tail_cycle(const Scope& scope) {
    return cycles_per_member(scope, [&](int n) {
        std::vector<std::string> c{state_name(scope, Role::c, n)};
        for (int i = 1; i <= 2 * n - 2; ++i)
            c.push_back(state_name(scope, Role::q, n, i));
        return c;
    });
}

Permutation role_transposition(const Scope& scope, Role r1, Role r2) {
    if (r1 == Role::q || r2 == Role::q)
        throw InputError("role_transposition takes roles a, b, c");
    return cycles_per_member(scope, [&](int n) {
        return std::vector<std::string>{state_name(scope, r1, n), state_name(scope, r2, n)};
    });
}

PointedMachine flip_machine() { return {make_bellaterra(0), "c.0"}; }

} // namespace mealy
