#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mealy/families.hpp"

namespace mealy {

/// Words over Q_N^+- are plain Words indexed by a SignedAlphabet.
using StateWord = Word;

enum class Sign : std::uint8_t { positive, negative };

/// Word over {*, *^-1}.
using Pattern = std::vector<Sign>;

/// Letter *_n or *_n^-1 of a marked pattern.
struct Mark {
    int n = 0;
    Sign sign = Sign::positive;
    bool operator==(const Mark&) const = default;
};
using MarkedPattern = std::vector<Mark>;

Pattern pattern_of(const SignedAlphabet& sa, const StateWord& xi);
MarkedPattern marked_pattern_of(const SignedAlphabet& sa, const StateWord& xi);

/// "* *^-1 *"
std::string format_pattern(const Pattern& v);
/// "*_1 *_2^-1"
std::string format_marked_pattern(const MarkedPattern& v);

/// No adjacent pair q q^-1 or q^-1 q. Empty and one-letter words qualify.
bool is_freely_irreducible(const SignedAlphabet& sa, const StateWord& xi);

/// Free reduction to the normal form in the free group on Q_N.
StateWord free_reduce(const SignedAlphabet& sa, const StateWord& xi);

/// Character with value -1 on a_n, b_n and their inverses, +1 elsewhere;
/// chi of the empty word is +1.
int chi(const SignedAlphabet& sa, const StateWord& xi);

/**
 * All freely irreducible words with the marked pattern of `xi` that agree
 * with `xi` except possibly in the last letter, in canonical order. For a
 * single n the marked pattern carries the same information as the pattern.
 * Throws InputError for an empty or freely reducible `xi`.
 */
std::vector<StateWord> z_set(const SignedAlphabet& sa, const StateWord& xi);

/**
 * Lazily enumerates the freely irreducible words that follow a given
 * (marked) pattern, in lexicographic order of symbol indices.
 *
 * Single consumer; independent streams are unrelated objects.
 */
class IrreducibleWords {
public:
    IrreducibleWords(const SignedAlphabet& sa, const Pattern& pattern);
    IrreducibleWords(const SignedAlphabet& sa, const MarkedPattern& pattern);

    /// Next word, or nullopt when exhausted.
    std::optional<StateWord> next();

private:
    bool descend(std::size_t from);

    const SignedAlphabet* sa_;
    std::vector<std::vector<Index>> choices_;  // allowed symbols per position
    std::vector<std::size_t> pos_;             // current choice per position
    StateWord current_;
    bool started_ = false;
    bool done_ = false;
};

/// Number of freely irreducible words following `pattern`, by formula.
std::size_t count_freely_irreducible(const SignedAlphabet& sa, const Pattern& pattern);

/// All 2^k patterns of length k in lexicographic order (* before *^-1).
std::vector<Pattern> all_patterns(std::size_t k);
/// All (2|N|)^k marked patterns of length k over the members of `scope`.
std::vector<MarkedPattern> all_marked_patterns(const Scope& scope, std::size_t k);

/// h_N: erase the component index of a word over {a_n, b_n, c_n}^+-,
/// landing in the classic alphabet {a, b, c}^+-. Throws InputError on q
/// letters.
StateWord collapse_h(const SignedAlphabet& sa, const StateWord& xi);

/// h_n: the section of collapse_h that places a classic word into the
/// a_n, b_n, c_n letters of component `n` of `target`.
StateWord embed_h(const SignedAlphabet& target, int n, const StateWord& classic_word);

/// Parse whitespace-separated state symbols ("a.2 b.1'").
StateWord parse_state_word(const SignedAlphabet& sa, std::string_view text);
std::string format_state_word(const SignedAlphabet& sa, const StateWord& xi);

} // namespace mealy
