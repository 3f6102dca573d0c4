#include <doctest.h>

#include "mealy/errors.hpp"
#include "mealy/families.hpp"
#include "mealy/transforms.hpp"
#include "support.hpp"

using namespace mealy;

namespace {

/// Library machine equals the reference machine entry by entry, by name.
bool matches(const MealyMachine& m, const testing::RefMachine& ref) {
    if (m.states().names() != ref.states || m.alphabet().names() != ref.letters)
        return false;
    for (const auto& q : ref.states)
        for (const auto& x : ref.letters)
            if (step(m, q, x) != ref.delta.at({q, x}))
                return false;
    return true;
}

std::string act(const PointedMachine& t, const SignedAlphabet& sa, const std::string& xi) {
    return format_word(sa.alphabet(), apply(t, parse_word(sa.alphabet(), xi)));
}

} // namespace

TEST_CASE("scopes") {
    CHECK(Scope::parse("3") == Scope::single(3));
    CHECK(Scope::parse("{2,1}") == Scope::of({1, 2}));
    CHECK(Scope::parse("1,2") == Scope::of({1, 2}));
    CHECK(Scope::parse("classic").is_classic());
    CHECK(Scope::of({2, 1, 2}).label() == "{1,2}");
    CHECK(Scope::single(3).label() == "3");
    CHECK_THROWS_AS(Scope::parse("{}"), InputError);
    CHECK_THROWS_AS(Scope::parse("x"), InputError);
    CHECK_THROWS_AS(Scope::of({-1}), InputError);

    const auto base = Scope::single(3).base_states();
    REQUIRE(base.size() == 7);
    CHECK(base[0].name == "a.3");
    CHECK(base[3].name == "q.3.1");
    CHECK(base[6].name == "q.3.4");
    CHECK(Scope::of({0, 2}).base_states().front().name == "c.0");
}

TEST_CASE("signed alphabet") {
    for (const Scope& s : {Scope::classic(), Scope::single(3), Scope::of({1, 2})}) {
        const SignedAlphabet sa(s);
        CHECK(sa.size() == 2 * sa.base_size());
        for (Index i = 0; i < sa.size(); ++i) {
            CHECK(sa.inverse_of(i) != i);
            CHECK(sa.inverse_of(sa.inverse_of(i)) == i);
            CHECK(sa.is_inverse(i) != sa.is_inverse(sa.inverse_of(i)));
            if (!sa.is_inverse(i))
                CHECK(sa.alphabet().name(sa.inverse_of(i)) == sa.alphabet().name(i) + "'");
        }
    }
    CHECK(SignedAlphabet(Scope::classic()).display(4) == "b^-1");
    CHECK(SignedAlphabet(Scope::single(2)).display(3) == "q_2,1");
    CHECK_THROWS_AS(SignedAlphabet(Scope::single(0)), InputError);
}

TEST_CASE("permutations") {
    const Alphabet q({"a", "b", "c"});
    const auto t = Permutation::parse(q, "(a b c)");
    CHECK(t(0) == 1);
    CHECK(t(2) == 0);
    CHECK(t.to_cycles() == "(a b c)");
    CHECK((t * t.inverse()) == Permutation::identity(q));
    CHECK(Permutation::parse(q, "()") == Permutation::identity(q));
    CHECK(Permutation::identity(q).to_cycles() == "()");
    // tau0 tau1^-1 = (b c) and tau0^-1 tau1 = (a b) for tau0 = (a c), tau1 = (a b c).
    const auto tau0 = Permutation::parse(q, "(a c)");
    CHECK((tau0 * t.inverse()).to_cycles() == "(b c)");
    CHECK((tau0.inverse() * t).to_cycles() == "(a b)");
    CHECK_THROWS_AS(Permutation::parse(q, "(a a)"), InputError);
    CHECK_THROWS_AS(Permutation::parse(q, "(a d)"), InputError);
    CHECK_THROWS_AS(Permutation::from_mapping(q, {0, 0, 1}), InputError);

    const Scope s2 = Scope::single(2);
    CHECK(chain_cycle(s2, false).to_cycles() == "(a.2 c.2 q.2.1 q.2.2)");
    CHECK(chain_cycle(s2, true).to_cycles() == "(a.2 b.2 c.2 q.2.1 q.2.2)");
    CHECK(tail_cycle(s2).to_cycles() == "(c.2 q.2.1 q.2.2)");
    CHECK(role_transposition(Scope::of({1, 2}), Role::a, Role::b).to_cycles() == "(a.1 b.1)(a.2 b.2)");
}

TEST_CASE("Aleshin type series") {
    CHECK(matches(aleshin_automaton(), testing::ref_series(1, false, true)));
    for (int n = 1; n <= 5; ++n) {
        const MealyMachine a = make_aleshin(n);
        CHECK(a.num_states() == static_cast<std::size_t>(2 * n + 1));
        CHECK(matches(a, testing::ref_series(n, false, false)));
    }
    CHECK(step(make_aleshin(3), "q.3.1", "0").first == "q.3.2");
    CHECK_THROWS_AS(make_aleshin(0), InputError);
    CHECK_THROWS_AS(make_aleshin(Scope::of({0, 1})), InputError);
    const MealyMachine a1 = make_aleshin(1);
    const MealyMachine a = aleshin_automaton();
    CHECK(a1.table().next == a.table().next);
    CHECK(a1.table().out == a.table().out);
}

TEST_CASE("Bellaterra type series") {
    CHECK(matches(bellaterra_automaton(), testing::ref_series(1, true, true)));
    CHECK(step(bellaterra_automaton(), "c", "0").second == "1");
    for (int n = 1; n <= 5; ++n) {
        const MealyMachine a = make_aleshin(n), b = make_bellaterra(n);
        CHECK(matches(b, testing::ref_series(n, true, false)));
        for (Index q = 0; q < a.num_states(); ++q)
            for (Index x = 0; x < 2; ++x) {
                CHECK(b.next(q, x) == a.next(q, x));
                CHECK(b.out(q, x) == 1 - a.out(q, x));
            }
    }
    const MealyMachine b0 = make_bellaterra(0);
    CHECK(b0.num_states() == 1);
    CHECK(b0.out(0, 0) == 1);
    CHECK(b0.out(0, 1) == 0);
    CHECK_THROWS_AS(make_bellaterra(-1), InputError);
}

TEST_CASE("unions of series members") {
    const MealyMachine a12 = make_union_family(Scope::of({1, 2}), FamilyKind::aleshin);
    CHECK(a12.num_states() == 8);
    const MealyMachine b02 = make_union_family(Scope::of({0, 2}), FamilyKind::bellaterra);
    CHECK(b02.num_states() == 6);
    CHECK(b02.states().names()
          == std::vector<std::string>{"c.0", "a.2", "b.2", "c.2", "q.2.1", "q.2.2"});
    // Each component acts as its own series member.
    CHECK(step(b02, "c.0", "0") == std::pair<std::string, std::string>{"c.0", "1"});
    CHECK(step(b02, "a.2", "1") == std::pair<std::string, std::string>{"b.2", "1"});
    CHECK(step(b02, "q.2.2", "0") == std::pair<std::string, std::string>{"a.2", "1"});
    const MealyMachine single = make_union_family(Scope::single(3), FamilyKind::aleshin);
    CHECK(single.table().next == make_aleshin(3).table().next);
    CHECK(single.table().out == make_aleshin(3).table().out);
}

TEST_CASE("U, I, D, E") {
    const MealyMachine u1 = make_U(Scope::classic());
    CHECK(u1.states().names() == std::vector<std::string>{"a", "b", "c", "a'", "b'", "c'"});
    for (int n = 1; n <= 3; ++n) {
        const Scope s = Scope::single(n);
        const auto u = std::make_shared<const MealyMachine>(make_U(s));
        const SignedAlphabet sa(s);
        CHECK(u->states() == sa.alphabet());
        CHECK(make_I(s).num_states() == static_cast<std::size_t>(2 * n + 1));
        for (Index q = 0; q < sa.base_size(); ++q)
            CHECK(is_identity(compose(PointedMachine(u, q), PointedMachine(u, sa.inverse_of(q)))));
        const MealyMachine d = make_D(s);
        CHECK(d.alphabet() == sa.alphabet());
        CHECK(d.next(0, 0) == 1);
        CHECK(d.next(1, 0) == 0);
    }

    const SignedAlphabet sa(Scope::classic());
    const auto d = std::make_shared<const MealyMachine>(make_D(Scope::classic()));
    CHECK(act(PointedMachine(d, Index{0}), sa, "a") == "c");
    CHECK(act(PointedMachine(d, Index{0}), sa, "a b") == "c c");

    const auto e = std::make_shared<const MealyMachine>(make_E(Scope::classic()));
    const PointedMachine e0(e, Index{0}), e1(e, Index{1});
    CHECK(act(e0, sa, "a'") == "b'");
    CHECK(act(e0, sa, "c") == "c");
    CHECK(is_identity(compose(e0, e0)));
    CHECK(transformations_equal(compose(e0, e1), make_pi(Scope::classic(), Permutation::parse(base_state_alphabet(Scope::classic()), "(a b)"))));
    CHECK(inverse_automaton(*e).table().out == e->table().out);
}

TEST_CASE("pi machines") {
    const Scope s = Scope::classic();
    const SignedAlphabet sa(s);
    const Alphabet base = base_state_alphabet(s);
    const auto ab = make_pi(s, Permutation::parse(base, "(a b)"));
    CHECK(act(ab, sa, "a b' c") == "b a' c");
    CHECK(is_identity(make_pi(s, Permutation::identity(base))));

    const Scope s2 = Scope::single(2);
    const Alphabet base2 = base_state_alphabet(s2);
    testing::Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto tau = Permutation::from_mapping(base2, testing::random_permutation(rng, base2.size()));
        const auto sigma = Permutation::from_mapping(base2, testing::random_permutation(rng, base2.size()));
        // pi_{tau sigma} = pi_tau pi_sigma: sigma acts first.
        CHECK(transformations_equal(compose(make_pi(s2, sigma), make_pi(s2, tau)), make_pi(s2, tau * sigma)));
    }
}

TEST_CASE("flip machine") {
    const PointedMachine h = flip_machine();
    CHECK(apply(h, {0, 1, 1, 0}) == Word{1, 0, 0, 1});
    CHECK(is_identity(compose(h, h)));
}

TEST_CASE("bi-reversibility across the families") {
    std::vector<MealyMachine> ms{aleshin_automaton(), bellaterra_automaton(), make_bellaterra(0)};
    for (int n = 1; n <= 5; ++n) {
        const Scope s = Scope::single(n);
        for (auto m : {make_aleshin(s), make_bellaterra(s), make_I(s), make_U(s), make_D(s), make_E(s)})
            ms.push_back(m);
    }
    for (const auto& m : ms) {
        INFO(m.name());
        CHECK(classify(m).bireversible);
    }
}
