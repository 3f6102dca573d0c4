#include "mealy/alphabet.hpp"

#include <algorithm>
#include <sstream>

#include "mealy/errors.hpp"

namespace mealy {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    index_.reserve(names_.size());
    for (Index i = 0; i < names_.size(); ++i) {
        const auto& n = names_[i];
        if (n.empty())
            throw InputError("alphabet contains an empty name");
        if (!index_.emplace(n, i).second)
            throw InputError("duplicate name '" + n + "'");
    }
}

const std::string& Alphabet::name(Index i) const {
    if (i >= names_.size())
        throw InputError("index " + std::to_string(i) + " out of range for alphabet of size "
                         + std::to_string(names_.size()));
    return names_[i];
}

std::optional<Index> Alphabet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Index Alphabet::index_of(std::string_view name) const {
    if (auto i = find(name))
        return *i;
    throw InputError("unknown name '" + std::string(name) + "'");
}

namespace {

bool single_char_names(const Alphabet& a) {
    return std::all_of(a.names().begin(), a.names().end(),
                       [](const std::string& s) { return s.size() == 1; });
}

} // namespace

std::string format_word(const Alphabet& alphabet, const Word& word) {
    const bool compact = single_char_names(alphabet);
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!compact && i > 0)
            out += ' ';
        out += alphabet.name(word[i]);
    }
    return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;)
        tokens.push_back(tok);

    Word word;
    if (tokens.size() == 1 && !alphabet.find(tokens[0]) && single_char_names(alphabet)) {
        for (char c : tokens[0])
            word.push_back(alphabet.index_of(std::string(1, c)));
        return word;
    }
    for (const auto& tok : tokens)
        word.push_back(alphabet.index_of(tok));
    return word;
}

} // namespace mealy
