#include <doctest.h>

#include <functional>
#include <set>

#include "mealy/errors.hpp"
#include "mealy/families.hpp"
#include "mealy/orbits.hpp"
#include "mealy/transforms.hpp"
#include "mealy/words.hpp"
#include "support.hpp"

using namespace mealy;

namespace {

/// Orbit partition by union-find over every word of the level, joining w
/// with g(w) for each generator g.
std::vector<std::set<Word>> oracle_orbits(const GeneratorSystem& gs, std::size_t k) {
    const auto words = testing::all_words(gs.alphabet().size(), k);
    std::map<Word, std::size_t> id;
    for (std::size_t i = 0; i < words.size(); ++i)
        id[words[i]] = i;
    std::vector<std::size_t> parent(words.size());
    for (std::size_t i = 0; i < parent.size(); ++i)
        parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    for (std::size_t i = 0; i < words.size(); ++i)
        for (const auto& g : gs.generators())
            parent[find(i)] = find(id.at(mealy::apply(g, words[i])));
    std::map<std::size_t, std::set<Word>> groups;
    for (std::size_t i = 0; i < words.size(); ++i)
        groups[find(i)].insert(words[i]);
    std::vector<std::set<Word>> out;
    for (auto& [root, members] : groups)
        out.push_back(std::move(members));
    return out;
}

std::vector<std::size_t> sorted_sizes(const std::vector<std::set<Word>>& orbits) {
    std::vector<std::size_t> sizes;
    for (const auto& o : orbits)
        sizes.push_back(o.size());
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

GeneratorSystem dual_of(const MealyMachine& m) { return GeneratorSystem::of_machine(dual_automaton(m)); }

bool no_double(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1])
            return false;
    return true;
}

GeneratorSystem d_with_pi(const Scope& s) {
    const auto d = std::make_shared<const MealyMachine>(make_D(s));
    const Alphabet base = base_state_alphabet(s);
    return GeneratorSystem("D+pi", {PointedMachine(d, Index{0}), PointedMachine(d, Index{1}),
                                     make_pi(s, Permutation::parse(base, "(a b)")),
                                     make_pi(s, Permutation::parse(base, "(b c)"))});
}

} // namespace

TEST_CASE("orbits of the dual of A") {
    const auto gs = dual_of(aleshin_automaton());
    const auto r = orbit(gs, parse_word(gs.alphabet(), "a b"));
    CHECK(r.size == 9);
    CHECK(r.members.size() == 9);
    CHECK(r.members.front() == parse_word(gs.alphabet(), "a b"));
    CHECK(std::set<Word>(r.members.begin(), r.members.end()).size() == 9);
    CHECK(is_level_transitive(gs, 3));
    CHECK(orbit(gs, parse_word(gs.alphabet(), "a a c")).size == 27);
    CHECK(orbit_partition(gs, 1) == std::vector<std::size_t>{3});
    CHECK(is_level_transitive(gs, 0));
}

TEST_CASE("orbits of the dual of B") {
    const auto gs = dual_of(bellaterra_automaton());
    CHECK_FALSE(is_level_transitive(gs, 2));
    CHECK(orbit(gs, parse_word(gs.alphabet(), "a b")).size == 6);

    const auto r = orbit(gs, parse_word(gs.alphabet(), "a b c"));
    CHECK(r.size == 12);
    for (const auto& w : r.members)
        CHECK(no_double(w));
}

TEST_CASE("empty seed") {
    for (const auto& gs : {dual_of(aleshin_automaton()), GeneratorSystem::of_machine(make_D(Scope::single(2)))}) {
        const auto r = orbit(gs, {});
        CHECK(r.size == 1);
        CHECK(r.members == std::vector<Word>{Word{}});
    }
}

TEST_CASE("cancelling pairs under D and pi generators") {
    const Scope s = Scope::classic();
    const SignedAlphabet sa(s);
    const auto gs = d_with_pi(s);
    const auto r = orbit(gs, parse_state_word(sa, "a a'"));
    std::set<std::string> got;
    for (const auto& w : r.members) {
        CHECK(format_pattern(pattern_of(sa, w)) == "* *^-1");
        CHECK_FALSE(is_freely_irreducible(sa, w));
        got.insert(format_state_word(sa, w));
    }
    CHECK(got == std::set<std::string>{"a a'", "b b'", "c c'"});

    // Level 2: one orbit per (pattern, reducible?) class.
    CHECK(orbit_partition(gs, 2) == std::vector<std::size_t>{9, 9, 6, 6, 3, 3});
    CHECK(orbit_partition(gs, 2) == sorted_sizes(oracle_orbits(gs, 2)));
}

TEST_CASE("level partition agrees with the union-find oracle") {
    std::vector<std::pair<GeneratorSystem, std::size_t>> cases{
        {dual_of(aleshin_automaton()), 4},
        {dual_of(bellaterra_automaton()), 4},
        {dual_of(make_bellaterra(2)), 3},
        {GeneratorSystem::of_machine(make_D(Scope::classic())), 3},
        {GeneratorSystem::of_machine(make_D(Scope::single(2))), 2},
        {d_with_pi(Scope::classic()), 3},
    };
    for (const auto& [gs, max_k] : cases)
        for (std::size_t k = 0; k <= max_k; ++k) {
            INFO(gs.name() << " k=" << k);
            const auto expect = oracle_orbits(gs, k);
            const auto part = level_partition(gs, k);
            CHECK(part.num_words() == testing::all_words(gs.alphabet().size(), k).size());
            CHECK(orbit_partition(gs, k) == sorted_sizes(expect));
            // Same sets, not just same sizes.
            for (const auto& o : expect) {
                const auto label = part.orbit_of[word_rank(*o.begin(), gs.alphabet().size())];
                CHECK(part.orbit_sizes[label] == o.size());
                for (const auto& w : o)
                    CHECK(part.orbit_of[word_rank(w, gs.alphabet().size())] == label);
            }
        }
}

TEST_CASE("property: D generators preserve patterns") {
    testing::Rng rng(51);
    for (int n = 1; n <= 3; ++n) {
        const Scope s = Scope::single(n);
        const SignedAlphabet sa(s);
        const auto gs = GeneratorSystem::of_machine(make_D(s));
        for (int trial = 0; trial < 20; ++trial) {
            const Word seed = testing::random_word(rng, 1 + testing::pick(rng, 4), sa.size());
            const auto r = orbit(gs, seed);
            for (const auto& w : r.members) {
                CHECK(pattern_of(sa, w) == pattern_of(sa, seed));
                CHECK(is_freely_irreducible(sa, w) == is_freely_irreducible(sa, seed));
            }
            // Any member regenerates the same orbit.
            const auto other = orbit(gs, r.members[testing::pick(rng, r.members.size())]);
            CHECK(std::set<Word>(other.members.begin(), other.members.end())
                  == std::set<Word>(r.members.begin(), r.members.end()));
        }
    }
}

TEST_CASE("word ranks") {
    testing::Rng rng(52);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = 2 + testing::pick(rng, 5), len = testing::pick(rng, 8);
        const Word w = testing::random_word(rng, len, k);
        CHECK(word_unrank(word_rank(w, k), len, k) == w);
    }
    const auto words = testing::all_words(3, 3);
    for (std::size_t i = 0; i < words.size(); ++i)
        CHECK(word_rank(words[i], 3) == i);
    CHECK(level_size(3, 4, 100) == std::optional<std::uint64_t>(81));
    CHECK_FALSE(level_size(3, 5, 100).has_value());
    CHECK_FALSE(level_size(6, 40, std::uint64_t(1) << 62).has_value());
}

TEST_CASE("generator system errors and caps") {
    CHECK_THROWS_AS(GeneratorSystem("empty", {}), InputError);
    const MealyMachine k("K", Alphabet({"0", "1"}), Alphabet({"k"}), {0, 0}, {0, 0});
    CHECK_THROWS_AS(GeneratorSystem::of_machine(k), InputError);
    CHECK_THROWS_AS(GeneratorSystem("mixed", {flip_machine(), PointedMachine(make_D(Scope::classic()), "0")}),
                    InputError);

    const auto gs = dual_of(aleshin_automaton());
    CHECK_THROWS_AS(orbit(gs, parse_word(gs.alphabet(), "a b c"), 10), ResourceError);
    try {
        orbit(gs, parse_word(gs.alphabet(), "a b c"), 10);
    } catch (const ResourceError& e) {
        CHECK(e.cap() == 10);
        CHECK(e.reached() > 10);
    }
    // Members are dropped above member_cap, the size is still exact.
    const auto r = orbit(gs, parse_word(gs.alphabet(), "a b c"), kDefaultOrbitCap, 5);
    CHECK(r.size == 27);
    CHECK(r.members.empty());
}
