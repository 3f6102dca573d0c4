#include <functional>
#include <memory>
#include <string>

#include "mealy/errors.hpp"
#include "mealy/transforms.hpp"
#include "mealy/verify.hpp"
#include "mealy/words.hpp"
#include "verify_common.hpp"

namespace mealy {

using detail::CappedPrefixes;
using detail::mark_incomplete;
using detail::SuiteTimer;

namespace {

MachinePtr share(MealyMachine m) { return std::make_shared<const MealyMachine>(std::move(m)); }

std::string join_names(const Alphabet& names, const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? " " : "") + names.name(w[i]);
    return s;
}

void require_length(std::size_t max_len, const char* what) {
    if (max_len < 1)
        throw InputError(std::string(what) + " needs a length bound of at least 1");
}

void common_params(VerificationReport& r, const Scope& scope) { r.param("scope", scope.label()); }

/**
 * Depth-first walk over words in the state symbols of `gens` (lexicographic
 * by index), lengths 1..max_len, keeping the product machine of each prefix.
 * `admissible(word, s)` decides whether s may follow `word`.
 */
struct ProductSearch {
    const Table& gens;
    std::size_t max_len;
    std::size_t cap;
    std::function<bool(const Word&, Index)> admissible;
    std::function<void(const Word&, const product::Product&)> visit;
    std::function<void(const Word&, const ResourceError&)> on_cap;

    void run() {
        Table id{1, gens.num_letters, std::vector<Index>(gens.num_letters, 0),
                 std::vector<Index>(gens.num_letters)};
        for (Index x = 0; x < gens.num_letters; ++x)
            id.out[x] = x;
        Word word;
        descend(id, word);
    }

    void descend(const Table& prefix, Word& word) {
        for (Index s = 0; s < gens.num_states; ++s) {
            if (!admissible(word, s))
                continue;
            word.push_back(s);
            try {
                const auto p = product::compose(prefix, 0, gens, s, cap);
                visit(word, p);
                if (word.size() < max_len)
                    descend(p.table, word);
            } catch (const ResourceError& e) {
                on_cap(word, e);
            }
            word.pop_back();
        }
    }
};

} // namespace

// --- freeness ------------------------------------------------------------------

VerificationReport check_freeness(const Scope& scope, std::size_t max_len, std::size_t cap) {
    VerificationReport r;
    SuiteTimer timer(r);
    r.suite = "freeness";
    common_params(r, scope);
    r.param("max_len", std::to_string(max_len));
    r.param("cap", std::to_string(cap));
    require_length(max_len, "freeness");

    const SignedAlphabet sa(scope);
    const MealyMachine u = make_U(scope);
    const MealyMachine d = make_D(scope);
    std::vector<std::size_t> per_length(max_len + 1, 0);
    std::size_t deepest = 0, largest = 0;
    std::string deepest_at;

    ProductSearch search{u.table(), max_len, cap, {}, {}, {}};
    search.admissible = [&](const Word& w, Index s) { return w.empty() || s != sa.inverse_of(w.back()); };
    search.visit = [&](const Word& xi, const product::Product& p) {
        ++per_length[xi.size()];
        largest = std::max(largest, p.table.num_states);
        const auto witness = product::nontrivial_witness(p.table, 0, cap);
        const std::string xi_text = format_state_word(sa, xi);
        if (r.expect(witness.has_value(), "U_xi is not the identity",
                     "xi = " + xi_text + " (composed machine: " + std::to_string(p.table.num_states)
                         + " reachable states, no moved word)")) {
            if (witness->size() > deepest) {
                deepest = witness->size();
                deepest_at = xi_text + " moves " + format_word(u.alphabet(), *witness);
            }
            return;
        }
        // An identity U_xi forces U_{D_x(xi)} = 1 for each letter x as well.
        for (Index x = 0; x < d.num_states(); ++x) {
            const StateWord image = mealy::apply(PointedMachine(share(d), x), xi);
            r.expect(is_identity(compose_word(u, image, cap), cap),
                     "dual image of an identity word is an identity",
                     "xi = " + xi_text + ", D_" + d.state_name(x) + "(xi) = " + format_state_word(sa, image));
        }
    };
    CappedPrefixes capped;
    search.on_cap = [&](const Word& xi, const ResourceError& e) {
        mark_incomplete(r, std::string(e.what()) + " at xi = " + format_state_word(sa, xi));
        capped.add(r, format_state_word(sa, xi));
    };
    search.run();
    capped.finish(r);

    for (std::size_t k = 1; k <= max_len; ++k)
        r.record("words_length_" + std::to_string(k), std::to_string(per_length[k]));
    r.record("deepest_witness_length", std::to_string(deepest));
    if (!deepest_at.empty())
        r.record("deepest_witness", deepest_at);
    r.record("largest_product_states", std::to_string(largest));
    return r;
}

// --- free product of involutions -----------------------------------------------

VerificationReport check_free_product(const Scope& scope, std::size_t max_len, std::size_t cap) {
    VerificationReport r;
    SuiteTimer timer(r);
    r.suite = "free-product";
    common_params(r, scope);
    r.param("max_len", std::to_string(max_len));
    r.param("cap", std::to_string(cap));
    require_length(max_len, "free-product");

    const auto b = share(make_bellaterra(scope));
    try {
        for (Index q = 0; q < b->num_states(); ++q) {
            const PointedMachine bq(b, q);
            const auto w = nontrivial_witness(compose(bq, bq, cap), cap);
            r.expect(!w, "generator squares to the identity", b->state_name(q) + " " + b->state_name(q),
                     w ? "moves " + format_word(b->alphabet(), *w) : "");
        }
    } catch (const ResourceError& e) {
        mark_incomplete(r, e.what());
    }

    std::vector<std::size_t> per_length(max_len + 1, 0);
    std::size_t deepest = 0;
    std::string deepest_at;
    ProductSearch search{b->table(), max_len, cap, {}, {}, {}};
    search.admissible = [](const Word& w, Index s) { return w.empty() || s != w.back(); };
    search.visit = [&](const Word& word, const product::Product& p) {
        ++per_length[word.size()];
        const auto witness = product::nontrivial_witness(p.table, 0, cap);
        const std::string text = join_names(b->states(), word);
        if (r.expect(witness.has_value(), "alternating word is not the identity",
                     "word = " + text + " (composed machine: " + std::to_string(p.table.num_states)
                         + " reachable states)")
            && witness->size() > deepest) {
            deepest = witness->size();
            deepest_at = text + " moves " + format_word(b->alphabet(), *witness);
        }
    };
    CappedPrefixes capped;
    search.on_cap = [&](const Word& word, const ResourceError& e) {
        mark_incomplete(r, std::string(e.what()) + " at word = " + join_names(b->states(), word));
        capped.add(r, join_names(b->states(), word));
    };
    search.run();
    capped.finish(r);

    for (std::size_t k = 1; k <= max_len; ++k)
        r.record("words_length_" + std::to_string(k), std::to_string(per_length[k]));
    r.record("deepest_witness_length", std::to_string(deepest));
    if (!deepest_at.empty())
        r.record("deepest_witness", deepest_at);
    return r;
}

// --- machine identities --------------------------------------------------------

namespace {

class IdentityChecker {
public:
    IdentityChecker(VerificationReport& r, std::size_t cap) : r_(r), cap_(cap) {}

    void equal(const std::string& name, const PointedMachine& lhs, const PointedMachine& rhs) {
        try {
            const auto w = distinguishing_word(lhs, rhs, cap_);
            std::string detail;
            if (w)
                detail = "lhs gives " + format_word(lhs.alphabet(), mealy::apply(lhs, *w)) + ", rhs gives "
                         + format_word(rhs.alphabet(), mealy::apply(rhs, *w));
            r_.expect(!w, name, w ? "input " + format_word(lhs.alphabet(), *w) : "", detail);
        } catch (const ResourceError& e) {
            mark_incomplete(r_, name + ": " + e.what());
        }
    }

    PointedMachine then(const PointedMachine& first, const PointedMachine& second) const {
        return compose(first, second, cap_);
    }

private:
    VerificationReport& r_;
    std::size_t cap_;
};

} // namespace

VerificationReport check_identities(const Scope& scope, std::size_t cap) {
    VerificationReport r;
    SuiteTimer timer(r);
    r.suite = "identities";
    common_params(r, scope);
    r.param("cap", std::to_string(cap));
    if (scope.contains_zero())
        throw InputError("identities: scope must not contain 0 (got " + scope.label() + ")");

    IdentityChecker ck(r, cap);
    // In products XY the right factor acts first: XY = ck.then(Y, X).
    const SignedAlphabet sa(scope);
    const auto d = share(make_D(scope));
    const auto dinv = share(inverse_automaton(*d));
    const auto e = share(make_E(scope));
    const PointedMachine d0(d, Index{0}), d1(d, Index{1}), di0(dinv, Index{0}), di1(dinv, Index{1});
    const PointedMachine e0(e, Index{0}), e1(e, Index{1});
    const PointedMachine one = identity_machine(sa.alphabet());

    const auto tau0 = chain_cycle(scope, false);
    const auto tau1 = chain_cycle(scope, true);
    const auto ab = role_transposition(scope, Role::a, Role::b);
    const auto bc = role_transposition(scope, Role::b, Role::c);
    const auto ac = role_transposition(scope, Role::a, Role::c);
    const auto tail = tail_cycle(scope);
    auto pi = [&](const Permutation& t) { return make_pi(scope, t); };
    auto pn = [](const Permutation& t) { return "pi" + t.to_cycles(); };

    ck.equal("E_0 E_0 = 1", ck.then(e0, e0), one);
    ck.equal("E_1 E_1 = 1", ck.then(e1, e1), one);
    ck.equal("E_0 E_1 = " + pn(ab), ck.then(e1, e0), pi(ab));
    ck.equal("E_1 E_0 = " + pn(ab), ck.then(e0, e1), pi(ab));
    ck.equal("D_0 = " + pn(tau0) + " E_0", d0, ck.then(e0, pi(tau0)));
    ck.equal("D_0 = " + pn(tau1) + " E_1", d0, ck.then(e1, pi(tau1)));
    ck.equal("D_1 = " + pn(tau1) + " E_0", d1, ck.then(e0, pi(tau1)));
    ck.equal("D_1 = " + pn(tau0) + " E_1", d1, ck.then(e1, pi(tau0)));
    ck.equal("D_0 D_1^-1 = " + pn(bc), ck.then(di1, d0), pi(bc));
    ck.equal("D_0^-1 D_1 = " + pn(ab), ck.then(d1, di0), pi(ab));
    ck.equal("E_0 " + pn(ab) + " = " + pn(ab) + " E_0", ck.then(pi(ab), e0), ck.then(e0, pi(ab)));

    const PointedMachine tail_e0 = ck.then(e0, pi(tail));
    ck.equal(pn(tail) + " E_0 = " + pn(ac) + " D_0", tail_e0, ck.then(d0, pi(ac)));
    ck.equal(pn(tail) + " E_0 = E_0 " + pn(tail), tail_e0, ck.then(pi(tail), e0));
    std::size_t m = 1;
    for (int n : scope.members())
        m *= static_cast<std::size_t>(2 * n - 1);
    try {
        PointedMachine power = tail_e0;
        for (std::size_t i = 1; i < m; ++i)
            power = ck.then(power, tail_e0);
        ck.equal("(" + pn(tail) + " E_0)^" + std::to_string(m) + " = E_0", power, e0);
    } catch (const ResourceError& ex) {
        mark_incomplete(r, ex.what());
    }

    // Aleshin/Bellaterra relations through the flip h.
    const auto a = share(make_aleshin(scope));
    const auto ainv = share(inverse_automaton(*a));
    const auto b = share(make_bellaterra(scope));
    const PointedMachine h = flip_machine();
    const PointedMachine hinv(share(inverse_automaton(h.machine())), h.initial());
    const PointedMachine bin_one = identity_machine(a->alphabet());
    ck.equal("h h = 1", ck.then(h, h), bin_one);
    for (Index q = 0; q < a->num_states(); ++q) {
        const std::string qn = a->state_name(q);
        const PointedMachine aq(a, q), iq(ainv, q), bq(b, q);
        ck.equal("A_" + qn + "^-1 A_" + qn + " = 1", ck.then(aq, iq), bin_one);
        ck.equal("A_" + qn + " A_" + qn + "^-1 = 1", ck.then(iq, aq), bin_one);
        ck.equal("B_" + qn + " B_" + qn + " = 1", ck.then(bq, bq), bin_one);
        ck.equal("A_" + qn + " = h B_" + qn, aq, ck.then(bq, h));
        ck.equal("B_" + qn + " = h A_" + qn, bq, ck.then(aq, h));
        const PointedMachine conj = ck.then(ck.then(hinv, aq), h);
        ck.equal("h A_" + qn + " h^-1 = B_" + qn + " h", conj, ck.then(h, bq));
        ck.equal("h A_" + qn + " h^-1 = A_" + qn + "^-1", conj, iq);
    }
    for (Index p = 0; p < a->num_states(); ++p)
        for (Index q = 0; q < a->num_states(); ++q)
            ck.equal("A_" + a->state_name(p) + "^-1 A_" + a->state_name(q) + " = B_" + a->state_name(p)
                         + " B_" + a->state_name(q),
                     ck.then(PointedMachine(a, q), PointedMachine(ainv, p)),
                     ck.then(PointedMachine(b, q), PointedMachine(b, p)));
    return r;
}

// --- duality ---------------------------------------------------------------------

namespace {

/// Calls f on every word over `base` symbols with length 0..max_len,
/// shorter words first, each length in lexicographic order.
template <class F>
void for_each_word(std::size_t base, std::size_t max_len, F&& f) {
    for (std::size_t k = 0; k <= max_len; ++k) {
        Word w(k, 0);
        while (true) {
            f(w);
            std::size_t i = k;
            while (i > 0 && ++w[i - 1] == base)
                w[--i] = 0;
            if (i == 0)
                break;
        }
    }
}

} // namespace

VerificationReport check_duality(const Scope& scope, std::size_t max_xi, std::size_t max_w,
                                 std::size_t max_u) {
    VerificationReport r;
    SuiteTimer timer(r);
    r.suite = "duality";
    common_params(r, scope);
    r.param("max_xi", std::to_string(max_xi));
    r.param("max_w", std::to_string(max_w));
    r.param("max_u", std::to_string(max_u));

    const SignedAlphabet sa(scope);
    const MealyMachine u = make_U(scope);
    const MealyMachine d = make_D(scope);
    const Alphabet& x = u.alphabet();
    for_each_word(sa.size(), max_xi, [&](const Word& xi) {
        for_each_word(x.size(), max_w, [&](const Word& w) {
            const StateWord dual_image = apply_state_word(d, w, xi);
            const Word head = apply_state_word(u, xi, w);
            for_each_word(x.size(), max_u, [&](const Word& tail) {
                Word wu = w;
                wu.insert(wu.end(), tail.begin(), tail.end());
                const Word lhs = apply_state_word(u, xi, wu);
                Word rhs = head;
                const Word rest = apply_state_word(u, dual_image, tail);
                rhs.insert(rhs.end(), rest.begin(), rest.end());
                r.expect(lhs == rhs, "A_xi(wu) = A_xi(w) A_{D_w(xi)}(u)",
                         "xi = " + format_state_word(sa, xi) + ", w = " + format_word(x, w)
                             + ", u = " + format_word(x, tail),
                         "lhs " + format_word(x, lhs) + ", rhs " + format_word(x, rhs));
            });
        });
    });
    return r;
}

// --- chi criterion ------------------------------------------------------------------

VerificationReport check_chi_criterion(const Scope& scope, std::size_t max_len) {
    VerificationReport r;
    SuiteTimer timer(r);
    r.suite = "chi";
    common_params(r, scope);
    r.param("max_len", std::to_string(max_len));
    require_length(max_len, "chi");

    const SignedAlphabet sa(scope);
    const MealyMachine u = make_U(scope);
    std::size_t plus = 0;
    for_each_word(sa.size(), max_len, [&](const StateWord& xi) {
        const bool fixes = apply_state_word(u, xi, {0}) == Word{0} && apply_state_word(u, xi, {1}) == Word{1};
        const int c = chi(sa, xi);
        plus += c == 1;
        r.expect(fixes == (c == 1), "U_xi fixes level one iff chi(xi) = +1",
                 "xi = " + format_state_word(sa, xi),
                 "chi = " + std::to_string(c) + ", fixes level one: " + (fixes ? "yes" : "no"));
    });
    r.record("words_with_chi_plus", std::to_string(plus));
    return r;
}

// --- pattern witnesses -------------------------------------------------------------

VerificationReport check_pattern_witnesses(const Scope& scope, std::size_t max_len) {
    VerificationReport r;
    SuiteTimer timer(r);
    r.suite = "witnesses";
    common_params(r, scope);
    r.param("max_len", std::to_string(max_len));
    require_length(max_len, "witnesses");

    const SignedAlphabet sa(scope);
    const MealyMachine u = make_U(scope);
    auto moves_level_one = [&](const StateWord& xi) { return apply_state_word(u, xi, {0}) != Word{0}; };

    for (std::size_t k = 1; k <= max_len; ++k) {
        if (scope.is_single()) {
            for (const Pattern& v : all_patterns(k)) {
                IrreducibleWords stream(sa, v);
                std::optional<StateWord> plus, minus, mover;
                while (!(plus && minus && mover)) {
                    auto xi = stream.next();
                    if (!xi)
                        break;
                    auto& slot = chi(sa, *xi) == 1 ? plus : minus;
                    if (!slot)
                        slot = *xi;
                    if (!mover && moves_level_one(*xi))
                        mover = *xi;
                }
                const std::string vt = format_pattern(v);
                r.expect(plus && minus, "pattern has freely irreducible words of both chi values",
                         "pattern " + vt);
                r.expect(mover.has_value(), "pattern has a word acting nontrivially on level one",
                         "pattern " + vt);
                r.record("pattern " + vt,
                         "chi+ " + (plus ? format_state_word(sa, *plus) : "-") + "; chi- "
                             + (minus ? format_state_word(sa, *minus) : "-") + "; moves "
                             + (mover ? format_state_word(sa, *mover) : "-"));
            }
        } else {
            for (const MarkedPattern& v : all_marked_patterns(scope, k)) {
                IrreducibleWords stream(sa, v);
                std::optional<StateWord> mover;
                while (auto xi = stream.next())
                    if (moves_level_one(*xi)) {
                        mover = *xi;
                        break;
                    }
                const std::string vt = format_marked_pattern(v);
                r.expect(mover.has_value(), "marked pattern has a word acting nontrivially on level one",
                         "marked pattern " + vt);
                r.record("marked pattern " + vt, "moves " + (mover ? format_state_word(sa, *mover) : "-"));
            }
        }
    }
    return r;
}

} // namespace mealy
