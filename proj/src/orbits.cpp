#include "mealy/orbits.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_set>

#include "mealy/errors.hpp"
#include "mealy/transforms.hpp"

namespace mealy {

GeneratorSystem::GeneratorSystem(std::string name, std::vector<PointedMachine> generators)
    : name_(std::move(name)), generators_(std::move(generators)) {
    if (generators_.empty())
        throw InputError("generator system '" + name_ + "' has no generators");
    for (const auto& g : generators_) {
        if (!(g.alphabet() == generators_.front().alphabet()))
            throw InputError("generator system '" + name_ + "': generators act on different alphabets");
        if (!classify(g.machine()).invertible)
            throw InputError("generator system '" + name_ + "': machine '" + g.machine().name()
                             + "' is not invertible");
    }
}

GeneratorSystem GeneratorSystem::of_machine(const MealyMachine& m, std::string name) {
    auto shared = std::make_shared<const MealyMachine>(m);
    std::vector<PointedMachine> gens;
    for (Index q = 0; q < m.num_states(); ++q)
        gens.emplace_back(shared, q);
    return {name.empty() ? "G(" + m.name() + ")" : std::move(name), std::move(gens)};
}

std::optional<std::uint64_t> level_size(std::size_t alphabet_size, std::size_t k, std::uint64_t limit) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (alphabet_size != 0 && size > limit / alphabet_size)
            return std::nullopt;
        size *= alphabet_size;
    }
    if (size > limit)
        return std::nullopt;
    return size;
}

std::uint64_t word_rank(const Word& w, std::size_t alphabet_size) {
    std::uint64_t r = 0;
    for (Index x : w)
        r = r * alphabet_size + x;
    return r;
}

Word word_unrank(std::uint64_t rank, std::size_t k, std::size_t alphabet_size) {
    Word w(k);
    for (std::size_t i = k; i-- > 0;) {
        w[i] = static_cast<Index>(rank % alphabet_size);
        rank /= alphabet_size;
    }
    return w;
}

namespace {

/// Image rank of the word with `rank` under generator `g`, without
/// allocating: the word is decoded into `buf` first.
std::uint64_t apply_ranked(const PointedMachine& g, Word& buf, std::size_t base) {
    const auto& t = g.machine().table();
    Index q = g.initial();
    std::uint64_t r = 0;
    for (Index x : buf) {
        r = r * base + t.out_of(q, x);
        q = t.next_of(q, x);
    }
    return r;
}

void decode(std::uint64_t rank, std::size_t base, Word& buf) {
    for (std::size_t i = buf.size(); i-- > 0;) {
        buf[i] = static_cast<Index>(rank % base);
        rank /= base;
    }
}

void require_over(const GeneratorSystem& gs, const Word& w) {
    for (Index x : w)
        if (x >= gs.alphabet().size())
            throw InputError("seed word is not over the generator system's alphabet");
}

} // namespace

OrbitReport orbit(const GeneratorSystem& gs, const Word& seed, std::size_t cap, std::size_t member_cap) {
    require_over(gs, seed);
    const std::size_t base = gs.alphabet().size();
    const std::size_t k = seed.size();
    if (!level_size(base, k, std::numeric_limits<std::uint64_t>::max() / (base + 1)))
        throw InputError("words of this length cannot be packed into 64-bit ranks");

    OrbitReport rep;
    rep.seed = seed;
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> queue{word_rank(seed, base)};
    seen.insert(queue.front());
    Word buf(k);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& g : gs.generators()) {
            decode(queue[i], base, buf);
            const std::uint64_t img = apply_ranked(g, buf, base);
            ++rep.applications;
            if (seen.insert(img).second) {
                if (queue.size() >= cap)
                    throw ResourceError("orbit of '" + format_word(gs.alphabet(), seed)
                                            + "' exceeded the orbit cap",
                                        cap, queue.size() + 1);
                queue.push_back(img);
            }
        }
    }
    rep.size = queue.size();
    if (rep.size <= member_cap) {
        rep.members.reserve(rep.size);
        for (auto r : queue)
            rep.members.push_back(word_unrank(r, k, base));
    }
    return rep;
}

bool is_level_transitive(const GeneratorSystem& gs, std::size_t k, std::size_t cap) {
    if (k == 0)
        return true;
    const std::size_t base = gs.alphabet().size();
    const auto total = level_size(base, k, cap);
    if (!total)
        throw ResourceError("level exceeds the orbit cap", cap, cap + 1);
    return orbit(gs, Word(k, 0), cap, 0).size == *total;
}

LevelPartition level_partition(const GeneratorSystem& gs, std::size_t k, std::size_t cap) {
    const std::size_t base = gs.alphabet().size();
    const auto total = level_size(base, k, cap);
    if (!total)
        throw ResourceError("level " + std::to_string(k) + " exceeds the enumeration cap", cap, cap + 1);

    constexpr std::uint32_t kUnset = std::uint32_t(-1);
    LevelPartition p;
    p.level = k;
    p.alphabet_size = base;
    p.orbit_of.assign(*total, kUnset);
    std::vector<std::uint64_t> queue;
    Word buf(k);
    for (std::uint64_t start = 0; start < *total; ++start) {
        if (p.orbit_of[start] != kUnset)
            continue;
        const auto id = static_cast<std::uint32_t>(p.orbit_sizes.size());
        queue.assign(1, start);
        p.orbit_of[start] = id;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (const auto& g : gs.generators()) {
                decode(queue[i], base, buf);
                const std::uint64_t img = apply_ranked(g, buf, base);
                if (p.orbit_of[img] == kUnset) {
                    p.orbit_of[img] = id;
                    queue.push_back(img);
                }
            }
        p.orbit_sizes.push_back(queue.size());
    }
    return p;
}

std::vector<std::size_t> orbit_partition(const GeneratorSystem& gs, std::size_t k, std::size_t cap) {
    auto sizes = level_partition(gs, k, cap).orbit_sizes;
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

} // namespace mealy
