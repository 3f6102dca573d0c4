#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mealy/machine.hpp"

namespace mealy {

/// Default cap on orbit sizes and on the number of words in a level
/// enumerated by orbit_partition.
inline constexpr std::size_t kDefaultOrbitCap = 10'000'000;

/**
 * Finite set of invertible tree automorphisms over one alphabet, read as
 * generators of a group (or, equivalently for orbits, of a semigroup).
 */
class GeneratorSystem {
public:
    /// Throws InputError when the alphabets differ or a generator's machine
    /// is not invertible.
    GeneratorSystem(std::string name, std::vector<PointedMachine> generators);

    /// The pointed machines of every state of `m`, in state order.
    static GeneratorSystem of_machine(const MealyMachine& m, std::string name = {});

    const std::string& name() const noexcept { return name_; }
    const Alphabet& alphabet() const noexcept { return generators_.front().alphabet(); }
    const std::vector<PointedMachine>& generators() const noexcept { return generators_; }

private:
    std::string name_;
    std::vector<PointedMachine> generators_;
};

struct OrbitReport {
    Word seed;
    std::size_t size = 0;
    /// Orbit members in BFS order; empty when the orbit exceeds member_cap.
    std::vector<Word> members;
    std::size_t applications = 0;
    /// Set by is_level_transitive style queries: orbit equals the full level.
    std::optional<bool> transitive_on_level;
};

/**
 * Orbit of `seed` under the generators only (no inverses). For invertible
 * generators on a finite level this is the group orbit. Visiting order is
 * deterministic: queue order, then generator order.
 *
 * Throws ResourceError once the orbit grows beyond `cap`.
 */
OrbitReport orbit(const GeneratorSystem& gs, const Word& seed, std::size_t cap = kDefaultOrbitCap,
                  std::size_t member_cap = 100'000);

/// True iff the orbit of one length-k word is the whole level X^k.
bool is_level_transitive(const GeneratorSystem& gs, std::size_t k, std::size_t cap = kDefaultOrbitCap);

/// Orbit label of every word of X^k, words indexed lexicographically.
struct LevelPartition {
    std::size_t level = 0;
    std::size_t alphabet_size = 0;
    std::vector<std::uint32_t> orbit_of;   // word rank -> orbit id
    std::vector<std::size_t> orbit_sizes;  // by orbit id, ids in order of first member

    std::size_t num_words() const noexcept { return orbit_of.size(); }
};

LevelPartition level_partition(const GeneratorSystem& gs, std::size_t k,
                               std::size_t cap = kDefaultOrbitCap);

/// Orbit sizes of X^k, sorted descending; they sum to |X|^k.
std::vector<std::size_t> orbit_partition(const GeneratorSystem& gs, std::size_t k,
                                         std::size_t cap = kDefaultOrbitCap);

/// Lexicographic rank of a word among words of its length, and the inverse.
std::uint64_t word_rank(const Word& w, std::size_t alphabet_size);
Word word_unrank(std::uint64_t rank, std::size_t k, std::size_t alphabet_size);

/// |X|^k, or nullopt if it exceeds `limit`.
std::optional<std::uint64_t> level_size(std::size_t alphabet_size, std::size_t k, std::uint64_t limit);

} // namespace mealy
