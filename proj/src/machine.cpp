#include "mealy/machine.hpp"

#include <atomic>
#include <deque>
#include <unordered_map>

#include "mealy/errors.hpp"

namespace mealy {

namespace {

std::atomic<std::size_t> g_pair_cap{kDefaultPairCap};

void require_same_alphabet(const Alphabet& a, const Alphabet& b, const char* what) {
    if (!(a == b))
        throw InputError(std::string(what) + ": alphabet mismatch");
}

Word word_from_parents(const std::vector<std::pair<Index, Index>>& parent, Index state) {
    // parent[s] = (predecessor, letter); the root points to itself.
    Word w;
    while (parent[state].first != state) {
        w.push_back(parent[state].second);
        state = parent[state].first;
    }
    return {w.rbegin(), w.rend()};
}

} // namespace

std::size_t default_pair_cap() noexcept { return g_pair_cap.load(std::memory_order_relaxed); }

void set_default_pair_cap(std::size_t cap) noexcept {
    g_pair_cap.store(cap, std::memory_order_relaxed);
}

MealyMachine::MealyMachine(std::string name, Alphabet alphabet, Alphabet states,
                           std::vector<Index> next, std::vector<Index> out)
    : name_(std::move(name)), alphabet_(std::move(alphabet)), states_(std::move(states)) {
    if (alphabet_.empty())
        throw InputError("machine '" + name_ + "' has an empty alphabet");
    if (states_.empty())
        throw InputError("machine '" + name_ + "' has no states");
    const std::size_t cells = states_.size() * alphabet_.size();
    if (next.size() != cells || out.size() != cells)
        throw InputError("machine '" + name_ + "': tables must have |Q|*|X| = "
                         + std::to_string(cells) + " entries");
    for (std::size_t i = 0; i < cells; ++i) {
        if (next[i] >= states_.size())
            throw InputError("machine '" + name_ + "': transition to undeclared state");
        if (out[i] >= alphabet_.size())
            throw InputError("machine '" + name_ + "': output of undeclared letter");
    }
    table_.num_states = states_.size();
    table_.num_letters = alphabet_.size();
    table_.next = std::move(next);
    table_.out = std::move(out);
}

MealyMachine MealyMachine::renamed(std::string name) const {
    return {std::move(name), alphabet_, states_, table_.next, table_.out};
}

PointedMachine::PointedMachine(MachinePtr machine, Index initial)
    : machine_(std::move(machine)), initial_(initial) {
    if (!machine_)
        throw InputError("pointed machine without a machine");
    if (initial_ >= machine_->num_states())
        throw InputError("initial state index out of range");
}

PointedMachine::PointedMachine(MachinePtr machine, std::string_view initial)
    : PointedMachine(machine, machine ? machine->state_index(initial) : 0) {}

PointedMachine::PointedMachine(MealyMachine machine, std::string_view initial)
    : PointedMachine(std::make_shared<const MealyMachine>(std::move(machine)), initial) {}

PointedMachine identity_machine(const Alphabet& alphabet) {
    const auto k = static_cast<Index>(alphabet.size());
    std::vector<Index> next(k, 0), out(k);
    for (Index x = 0; x < k; ++x)
        out[x] = x;
    return {std::make_shared<const MealyMachine>("id", alphabet, Alphabet({"id"}), std::move(next),
                                                 std::move(out)),
            Index{0}};
}

std::pair<Index, Index> step(const MealyMachine& m, Index q, Index x) {
    if (q >= m.num_states())
        throw InputError("state index out of range");
    if (x >= m.num_letters())
        throw InputError("letter index out of range");
    return {m.next(q, x), m.out(q, x)};
}

std::pair<std::string, std::string> step(const MealyMachine& m, std::string_view q,
                                         std::string_view x) {
    auto [p, y] = step(m, m.state_index(q), m.alphabet().index_of(x));
    return {m.state_name(p), m.alphabet().name(y)};
}

Word apply(const PointedMachine& t, const Word& w) {
    const auto& m = t.machine();
    Word result;
    result.reserve(w.size());
    Index q = t.initial();
    for (Index x : w) {
        if (x >= m.num_letters())
            throw InputError("letter index out of range");
        result.push_back(m.out(q, x));
        q = m.next(q, x);
    }
    return result;
}

std::pair<Index, PointedMachine> section(const PointedMachine& t, Index x) {
    auto [p, y] = step(t.machine(), t.initial(), x);
    return {y, t.at(p)};
}

PointedMachine compose(const PointedMachine& first, const PointedMachine& second, std::size_t cap) {
    require_same_alphabet(first.alphabet(), second.alphabet(), "compose");
    auto prod = product::compose(first.machine().table(), first.initial(), second.machine().table(),
                                 second.initial(), cap);
    std::vector<std::string> names;
    names.reserve(prod.pairs.size());
    for (auto [a, b] : prod.pairs)
        names.push_back("(" + first.machine().state_name(a) + "," + second.machine().state_name(b) + ")");
    auto m = std::make_shared<const MealyMachine>(
        "(" + first.machine().name() + ";" + second.machine().name() + ")", first.alphabet(),
        Alphabet(std::move(names)), std::move(prod.table.next), std::move(prod.table.out));
    return {std::move(m), Index{0}};
}

PointedMachine compose_word(const MealyMachine& family, const Word& xi, std::size_t cap) {
    for (Index q : xi)
        if (q >= family.num_states())
            throw InputError("state word refers to an undeclared state");
    auto shared = std::make_shared<const MealyMachine>(family);
    PointedMachine acc = identity_machine(family.alphabet());
    for (Index q : xi)
        acc = compose(acc, PointedMachine(shared, q), cap);
    return acc;
}

Word apply_state_word(const MealyMachine& family, const Word& xi, const Word& w) {
    for (Index x : w)
        if (x >= family.num_letters())
            throw InputError("letter index out of range");
    Word cur = w;
    for (Index q : xi) {
        if (q >= family.num_states())
            throw InputError("state word refers to an undeclared state");
        for (auto& x : cur) {
            const Index y = family.out(q, x);
            q = family.next(q, x);
            x = y;
        }
    }
    return cur;
}

std::optional<Word> distinguishing_word(const PointedMachine& t1, const PointedMachine& t2,
                                        std::size_t cap) {
    require_same_alphabet(t1.alphabet(), t2.alphabet(), "transformations_equal");
    return product::distinguishing_word(t1.machine().table(), t1.initial(), t2.machine().table(),
                                        t2.initial(), cap);
}

bool transformations_equal(const PointedMachine& t1, const PointedMachine& t2, std::size_t cap) {
    return !distinguishing_word(t1, t2, cap).has_value();
}

std::optional<Word> nontrivial_witness(const PointedMachine& t, std::size_t cap) {
    return product::nontrivial_witness(t.machine().table(), t.initial(), cap);
}

bool is_identity(const PointedMachine& t, std::size_t cap) {
    return !nontrivial_witness(t, cap).has_value();
}

namespace product {

Product compose(const Table& first, Index first_init, const Table& second, Index second_init,
                std::size_t cap) {
    if (first.num_letters != second.num_letters)
        throw InputError("compose: alphabet size mismatch");
    const std::size_t k = first.num_letters;
    Product p;
    p.table.num_letters = k;
    std::unordered_map<std::uint64_t, Index> seen;
    auto key = [&](Index a, Index b) {
        return static_cast<std::uint64_t>(a) * second.num_states + b;
    };
    auto intern = [&](Index a, Index b) -> Index {
        auto [it, fresh] = seen.emplace(key(a, b), static_cast<Index>(p.pairs.size()));
        if (fresh) {
            if (p.pairs.size() >= cap)
                throw ResourceError("composition exceeded the reachable pair-state cap", cap,
                                    p.pairs.size() + 1);
            p.pairs.emplace_back(a, b);
        }
        return it->second;
    };
    intern(first_init, second_init);
    for (std::size_t i = 0; i < p.pairs.size(); ++i) {
        const auto [a, b] = p.pairs[i];
        for (Index x = 0; x < k; ++x) {
            const Index y = first.out_of(a, x);
            const Index z = second.out_of(b, y);
            const Index target = intern(first.next_of(a, x), second.next_of(b, y));
            p.table.next.push_back(target);
            p.table.out.push_back(z);
        }
    }
    p.table.num_states = p.pairs.size();
    return p;
}

std::optional<Word> nontrivial_witness(const Table& t, Index init, std::size_t cap) {
    // BFS over reachable states; the first (state, letter) with a changed
    // output gives a shortest moved word.
    std::vector<std::pair<Index, Index>> parent(t.num_states, {Index(-1), 0});
    std::vector<Index> order{init};
    parent[init] = {init, 0};
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Index q = order[i];
        for (Index x = 0; x < t.num_letters; ++x) {
            if (t.out_of(q, x) != x) {
                Word w = word_from_parents(parent, q);
                w.push_back(x);
                return w;
            }
            const Index p = t.next_of(q, x);
            if (parent[p].first == Index(-1)) {
                if (order.size() >= cap)
                    throw ResourceError("identity decision exceeded the reachable state cap", cap,
                                        order.size() + 1);
                parent[p] = {q, x};
                order.push_back(p);
            }
        }
    }
    return std::nullopt;
}

std::optional<Word> distinguishing_word(const Table& t1, Index init1, const Table& t2,
                                        Index init2, std::size_t cap) {
    if (t1.num_letters != t2.num_letters)
        throw InputError("transformations_equal: alphabet size mismatch");
    const std::size_t k = t1.num_letters;
    std::unordered_map<std::uint64_t, Index> seen;
    std::vector<std::pair<Index, Index>> pairs;
    std::vector<std::pair<Index, Index>> parent;
    auto visit = [&](Index a, Index b, Index from, Index letter) {
        const std::uint64_t key = static_cast<std::uint64_t>(a) * t2.num_states + b;
        if (seen.contains(key))
            return;
        if (pairs.size() >= cap)
            throw ResourceError("equality decision exceeded the reachable pair-state cap", cap,
                                pairs.size() + 1);
        const auto id = static_cast<Index>(pairs.size());
        seen.emplace(key, id);
        pairs.emplace_back(a, b);
        parent.emplace_back(from == Index(-1) ? id : from, letter);
    };
    visit(init1, init2, Index(-1), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [a, b] = pairs[i];
        for (Index x = 0; x < k; ++x) {
            if (t1.out_of(a, x) != t2.out_of(b, x)) {
                Word w = word_from_parents(parent, static_cast<Index>(i));
                w.push_back(x);
                return w;
            }
            visit(t1.next_of(a, x), t2.next_of(b, x), static_cast<Index>(i), x);
        }
    }
    return std::nullopt;
}

} // namespace product

} // namespace mealy
