#include <map>
#include <set>
#include <string>

#include "mealy/errors.hpp"
#include "mealy/transforms.hpp"
#include "mealy/verify.hpp"
#include "mealy/words.hpp"
#include "verify_common.hpp"

namespace mealy {

using detail::mark_incomplete;
using detail::SuiteTimer;

namespace {

bool has_double_letter(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1])
            return true;
    return false;
}

/// "size x count, ..." in descending size.
std::string size_histogram(const std::map<std::size_t, std::size_t, std::greater<>>& h) {
    std::string s;
    for (const auto& [size, count] : h)
        s += (s.empty() ? "" : ", ") + std::to_string(size) + "x" + std::to_string(count);
    return s.empty() ? "none" : s;
}

void classify_signed_level(VerificationReport& r, OrbitClaim claim, const SignedAlphabet& sa,
                           const GeneratorSystem& gs, std::size_t k, std::size_t cap) {
    const LevelPartition p = level_partition(gs, k, cap);
    const std::size_t base = sa.size();
    const std::string level = "level " + std::to_string(k);

    struct OrbitClass {
        std::string key;
        bool irreducible = false;
        bool seen = false;
        bool consistent = true;
        std::string first, offender;
    };
    std::vector<OrbitClass> orbit_class(p.orbit_sizes.size());
    std::map<std::string, std::set<std::uint32_t>> class_orbits;  // irreducible words only
    std::map<std::string, std::size_t> class_count;

    for (std::uint64_t rank = 0; rank < p.num_words(); ++rank) {
        const StateWord xi = word_unrank(rank, k, base);
        const bool irreducible = is_freely_irreducible(sa, xi);
        const std::string key = claim == OrbitClaim::pattern ? format_pattern(pattern_of(sa, xi))
                                                             : format_marked_pattern(marked_pattern_of(sa, xi));
        const std::uint32_t o = p.orbit_of[rank];
        auto& oc = orbit_class[o];
        if (!oc.seen) {
            oc = {key, irreducible, true, true, format_state_word(sa, xi), {}};
        } else if (oc.consistent && (oc.key != key || oc.irreducible != irreducible)) {
            oc.consistent = false;
            oc.offender = format_state_word(sa, xi);
        }
        if (irreducible) {
            class_orbits[key].insert(o);
            ++class_count[key];
        }
    }

    for (const auto& oc : orbit_class)
        r.expect(oc.consistent, "orbit keeps its pattern and reducibility",
                 oc.first + " ~ " + oc.offender, level);

    for (const auto& [key, orbits] : class_orbits) {
        const std::uint32_t o = *orbits.begin();
        r.expect(orbits.size() == 1, "irreducible words of one pattern form one orbit",
                 "pattern " + key + " at " + level, std::to_string(orbits.size()) + " orbits");
        r.expect(p.orbit_sizes[o] == class_count[key], "orbit of a pattern class has no other members",
                 "pattern " + key + " at " + level,
                 "orbit size " + std::to_string(p.orbit_sizes[o]) + ", class size "
                     + std::to_string(class_count[key]));
    }
    const std::size_t classes_expected = claim == OrbitClaim::pattern
                                             ? std::size_t{1} << k
                                             : all_marked_patterns(sa.scope(), k).size();
    r.expect(class_orbits.size() == classes_expected, "every pattern is followed by irreducible words",
             level, std::to_string(class_orbits.size()) + " of " + std::to_string(classes_expected));
    if (claim == OrbitClaim::pattern)
        for (const auto& v : all_patterns(k)) {
            const auto key = format_pattern(v);
            const auto it = class_count.find(key);
            const std::size_t got = it == class_count.end() ? 0 : it->second;
            r.expect(got == count_freely_irreducible(sa, v), "pattern class size matches the count formula",
                     "pattern " + key + " at " + level, std::to_string(got));
        }

    std::map<std::size_t, std::size_t, std::greater<>> reducible;
    std::size_t irreducible_orbits = 0;
    for (std::size_t o = 0; o < orbit_class.size(); ++o) {
        if (orbit_class[o].irreducible)
            ++irreducible_orbits;
        else
            ++reducible[p.orbit_sizes[o]];
    }
    r.record(level + " orbits", std::to_string(p.orbit_sizes.size()));
    r.record(level + " irreducible orbits", std::to_string(irreducible_orbits));
    r.record(level + " reducible orbit sizes (unasserted)", size_histogram(reducible));
}

void classify_no_double_level(VerificationReport& r, const GeneratorSystem& gs, std::size_t k,
                              std::size_t cap) {
    const LevelPartition p = level_partition(gs, k, cap);
    const std::size_t base = gs.alphabet().size();
    const std::string level = "level " + std::to_string(k);
    std::set<std::uint32_t> orbits;
    std::size_t count = 0;
    for (std::uint64_t rank = 0; rank < p.num_words(); ++rank) {
        if (has_double_letter(word_unrank(rank, k, base)))
            continue;
        orbits.insert(p.orbit_of[rank]);
        ++count;
    }
    std::size_t expected = base;
    for (std::size_t i = 1; i < k; ++i)
        expected *= base - 1;
    r.expect(count == expected, "no-double-letter words are counted by |Q|(|Q|-1)^(k-1)", level,
             std::to_string(count) + " words, expected " + std::to_string(expected));
    r.expect(orbits.size() == 1, "no-double-letter words form one orbit", level,
             std::to_string(orbits.size()) + " orbits");
    if (!orbits.empty())
        r.expect(p.orbit_sizes[*orbits.begin()] == count, "the no-double-letter orbit has no other members",
                 level, "orbit size " + std::to_string(p.orbit_sizes[*orbits.begin()]));
    std::map<std::size_t, std::size_t, std::greater<>> others;
    for (std::size_t o = 0; o < p.orbit_sizes.size(); ++o)
        if (!orbits.count(static_cast<std::uint32_t>(o)))
            ++others[p.orbit_sizes[o]];
    r.record(level + " no-double-letter orbit size", std::to_string(count));
    r.record(level + " double-letter orbit sizes (unasserted)", size_histogram(others));
}

} // namespace

VerificationReport check_orbit_classification(OrbitClaim claim, const Scope& scope, std::size_t max_len,
                                              std::size_t cap) {
    VerificationReport r;
    SuiteTimer timer(r);
    r.suite = "orbits";
    r.param("claim", to_string(claim));
    r.param("scope", scope.label());
    r.param("max_len", std::to_string(max_len));
    r.param("cap", std::to_string(cap));
    if (max_len < 1)
        throw InputError("orbits needs a length bound of at least 1");

    if (claim == OrbitClaim::no_double_letter) {
        if (!scope.is_single() || scope.contains_zero())
            throw InputError("no_double_letter orbits are defined for a single n >= 1");
        const MealyMachine dual = dual_automaton(make_bellaterra(scope));
        const auto gs = GeneratorSystem::of_machine(dual);
        for (std::size_t k = 1; k <= max_len; ++k) {
            try {
                classify_no_double_level(r, gs, k, cap);
            } catch (const ResourceError& e) {
                mark_incomplete(r, e.what());
                break;
            }
        }
        return r;
    }

    if (claim == OrbitClaim::pattern && !scope.is_single())
        throw InputError("pattern orbits are classified for a single n; use marked for unions");
    const SignedAlphabet sa(scope);
    const auto gs = GeneratorSystem::of_machine(make_D(scope));
    for (std::size_t k = 1; k <= max_len; ++k) {
        try {
            classify_signed_level(r, claim, sa, gs, k, cap);
        } catch (const ResourceError& e) {
            mark_incomplete(r, e.what());
            break;
        }
    }
    return r;
}

VerificationReport check_level_transitivity(const Scope& scope, std::size_t max_level, std::size_t cap) {
    VerificationReport r;
    SuiteTimer timer(r);
    r.suite = "transitivity";
    r.param("scope", scope.label());
    r.param("max_level", std::to_string(max_level));
    r.param("cap", std::to_string(cap));

    const MealyMachine dual = dual_automaton(make_aleshin(scope));
    const auto gs = GeneratorSystem::of_machine(dual);
    const std::size_t base = gs.alphabet().size();
    for (std::size_t k = 0; k <= max_level; ++k) {
        const auto total = level_size(base, k, cap);
        if (!total) {
            mark_incomplete(r, "level " + std::to_string(k) + " exceeds the orbit cap");
            break;
        }
        try {
            const auto rep = orbit(gs, Word(k, 0), cap, 0);
            r.expect(rep.size == *total, "one orbit on the level", "level " + std::to_string(k),
                     "orbit of '" + format_word(gs.alphabet(), Word(k, 0)) + "' has " + std::to_string(rep.size) + " of "
                         + std::to_string(*total) + " words");
            r.record("level " + std::to_string(k) + " orbit size", std::to_string(rep.size));
        } catch (const ResourceError& e) {
            mark_incomplete(r, e.what());
            break;
        }
    }
    return r;
}

} // namespace mealy
