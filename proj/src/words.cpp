#include "mealy/words.hpp"

#include <sstream>

#include "mealy/errors.hpp"

namespace mealy {

namespace {

Sign sign_of(const SignedAlphabet& sa, Index s) {
    return sa.is_inverse(s) ? Sign::negative : Sign::positive;
}

void check_symbols(const SignedAlphabet& sa, const StateWord& xi) {
    for (Index s : xi)
        if (s >= sa.size())
            throw InputError("state word symbol " + std::to_string(s) + " outside the signed alphabet");
}

std::vector<Index> symbols_matching(const SignedAlphabet& sa, std::optional<int> n, Sign sign) {
    std::vector<Index> out;
    for (Index s = 0; s < sa.size(); ++s)
        if (sign_of(sa, s) == sign && (!n || sa.base(s).n == *n))
            out.push_back(s);
    return out;
}

} // namespace

Pattern pattern_of(const SignedAlphabet& sa, const StateWord& xi) {
    check_symbols(sa, xi);
    Pattern v;
    v.reserve(xi.size());
    for (Index s : xi)
        v.push_back(sign_of(sa, s));
    return v;
}

MarkedPattern marked_pattern_of(const SignedAlphabet& sa, const StateWord& xi) {
    check_symbols(sa, xi);
    MarkedPattern v;
    v.reserve(xi.size());
    for (Index s : xi)
        v.push_back({sa.base(s).n, sign_of(sa, s)});
    return v;
}

std::string format_pattern(const Pattern& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::string(v[i] == Sign::positive ? "*" : "*^-1");
    return s;
}

std::string format_marked_pattern(const MarkedPattern& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? " *_" : "*_") + std::to_string(v[i].n);
        if (v[i].sign == Sign::negative)
            s += "^-1";
    }
    return s;
}

bool is_freely_irreducible(const SignedAlphabet& sa, const StateWord& xi) {
    check_symbols(sa, xi);
    for (std::size_t i = 1; i < xi.size(); ++i)
        if (xi[i] == sa.inverse_of(xi[i - 1]))
            return false;
    return true;
}

StateWord free_reduce(const SignedAlphabet& sa, const StateWord& xi) {
    check_symbols(sa, xi);
    StateWord out;
    for (Index s : xi) {
        if (!out.empty() && out.back() == sa.inverse_of(s))
            out.pop_back();
        else
            out.push_back(s);
    }
    return out;
}

int chi(const SignedAlphabet& sa, const StateWord& xi) {
    check_symbols(sa, xi);
    int v = 1;
    for (Index s : xi) {
        const Role r = sa.base(s).role;
        if (r == Role::a || r == Role::b)
            v = -v;
    }
    return v;
}

std::vector<StateWord> z_set(const SignedAlphabet& sa, const StateWord& xi) {
    if (xi.empty())
        throw InputError("z_set needs a nonempty word");
    if (!is_freely_irreducible(sa, xi))
        throw InputError("z_set needs a freely irreducible word");
    std::vector<StateWord> out;
    const Index last = xi.back();
    for (Index s : symbols_matching(sa, sa.base(last).n, sign_of(sa, last))) {
        if (xi.size() > 1 && s == sa.inverse_of(xi[xi.size() - 2]))
            continue;
        StateWord w = xi;
        w.back() = s;
        out.push_back(std::move(w));
    }
    return out;
}

// --- IrreducibleWords -----------------------------------------------------------

IrreducibleWords::IrreducibleWords(const SignedAlphabet& sa, const Pattern& pattern) : sa_(&sa) {
    for (Sign s : pattern)
        choices_.push_back(symbols_matching(sa, std::nullopt, s));
    pos_.resize(choices_.size());
    current_.resize(choices_.size());
}

IrreducibleWords::IrreducibleWords(const SignedAlphabet& sa, const MarkedPattern& pattern) : sa_(&sa) {
    for (const Mark& m : pattern) {
        auto c = symbols_matching(sa, m.n, m.sign);
        if (c.empty())
            throw InputError("marked pattern refers to *_" + std::to_string(m.n)
                             + ", which is not in scope " + sa.scope().label());
        choices_.push_back(std::move(c));
    }
    pos_.resize(choices_.size());
    current_.resize(choices_.size());
}

bool IrreducibleWords::descend(std::size_t from) {
    // Place position `from` at its next admissible choice (starting at
    // pos_[from]) and every later position at its first; backtrack on dead ends.
    std::size_t i = from;
    std::size_t start = pos_[from];
    while (true) {
        bool placed = false;
        for (std::size_t c = start; c < choices_[i].size(); ++c) {
            const Index sym = choices_[i][c];
            if (i > 0 && sym == sa_->inverse_of(current_[i - 1]))
                continue;
            pos_[i] = c;
            current_[i] = sym;
            placed = true;
            break;
        }
        if (placed) {
            if (i + 1 == choices_.size())
                return true;
            ++i;
            start = 0;
        } else {
            if (i == 0)
                return false;
            --i;
            start = pos_[i] + 1;
        }
    }
}

std::optional<StateWord> IrreducibleWords::next() {
    if (done_)
        return std::nullopt;
    if (choices_.empty()) {
        done_ = true;
        return StateWord{};
    }
    if (!started_) {
        started_ = true;
        if (!descend(0)) {
            done_ = true;
            return std::nullopt;
        }
        return current_;
    }
    const std::size_t last = choices_.size() - 1;
    ++pos_[last];
    if (!descend(last)) {
        done_ = true;
        return std::nullopt;
    }
    return current_;
}

std::size_t count_freely_irreducible(const SignedAlphabet& sa, const Pattern& pattern) {
    if (pattern.empty())
        return 1;
    const std::size_t base = sa.base_size();
    std::size_t count = base;
    for (std::size_t i = 1; i < pattern.size(); ++i)
        count *= pattern[i] == pattern[i - 1] ? base : base - 1;
    return count;
}

std::vector<Pattern> all_patterns(std::size_t k) {
    std::vector<Pattern> out;
    for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
        Pattern v(k);
        for (std::size_t i = 0; i < k; ++i)
            v[i] = (bits >> (k - 1 - i)) & 1 ? Sign::negative : Sign::positive;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<MarkedPattern> all_marked_patterns(const Scope& scope, std::size_t k) {
    std::vector<Mark> marks;
    for (Sign s : {Sign::positive, Sign::negative})
        for (int n : scope.members())
            marks.push_back({n, s});
    std::vector<MarkedPattern> out{MarkedPattern{}};
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<MarkedPattern> grown;
        for (const auto& v : out)
            for (const Mark& m : marks) {
                auto w = v;
                w.push_back(m);
                grown.push_back(std::move(w));
            }
        out = std::move(grown);
    }
    return out;
}

StateWord collapse_h(const SignedAlphabet& sa, const StateWord& xi) {
    check_symbols(sa, xi);
    const SignedAlphabet classic(Scope::classic());
    StateWord out;
    out.reserve(xi.size());
    for (Index s : xi) {
        const Role r = sa.base(s).role;
        if (r == Role::q)
            throw InputError("collapse_h is defined on a, b, c letters only; got '"
                             + sa.alphabet().name(s) + "'");
        out.push_back(classic.symbol(static_cast<Index>(r), sa.is_inverse(s)));
    }
    return out;
}

StateWord embed_h(const SignedAlphabet& target, int n, const StateWord& classic_word) {
    const SignedAlphabet classic(Scope::classic());
    check_symbols(classic, classic_word);
    std::optional<Index> first;
    for (Index b = 0; b < target.base_size(); ++b)
        if (target.base_states()[b].n == n && target.base_states()[b].role == Role::a) {
            first = b;
            break;
        }
    if (!first)
        throw InputError("embed_h: component " + std::to_string(n) + " is not in scope "
                         + target.scope().label());
    StateWord out;
    for (Index s : classic_word)
        out.push_back(target.symbol(*first + classic.base_index(s), classic.is_inverse(s)));
    return out;
}

StateWord parse_state_word(const SignedAlphabet& sa, std::string_view text) {
    std::istringstream in{std::string(text)};
    StateWord xi;
    for (std::string tok; in >> tok;)
        xi.push_back(sa.alphabet().index_of(tok));
    return xi;
}

std::string format_state_word(const SignedAlphabet& sa, const StateWord& xi) {
    std::string s;
    for (std::size_t i = 0; i < xi.size(); ++i)
        s += (i ? " " : "") + sa.alphabet().name(xi[i]);
    return s;
}

} // namespace mealy
