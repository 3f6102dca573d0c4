#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mealy {

using Index = std::uint32_t;

/// A word over some alphabet, stored as letter indices.
using Word = std::vector<Index>;

/**
 * Finite ordered set of distinct, nonempty names.
 *
 * Used both for input/output alphabets and for state sets (the dual
 * construction swaps the two, so they share one representation).
 */
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    const std::string& name(Index i) const;
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<Index> find(std::string_view name) const;
    /// Throws InputError for unknown names.
    Index index_of(std::string_view name) const;

    bool contains(Index i) const noexcept { return i < names_.size(); }

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Index> index_;
};

/// Render a word. Letters are concatenated when every name is one character,
/// otherwise separated by single spaces.
std::string format_word(const Alphabet& alphabet, const Word& word);

/// Inverse of format_word. Whitespace-separated tokens are looked up by name;
/// a single token with no whitespace is split into characters when the
/// alphabet has only one-character names.
Word parse_word(const Alphabet& alphabet, std::string_view text);

} // namespace mealy
