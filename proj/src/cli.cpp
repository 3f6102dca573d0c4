#include "mealy/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mealy/errors.hpp"
#include "mealy/transforms.hpp"
#include "mealy/verify.hpp"

namespace mealy::cli {

FamilySpec parse_family_spec(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        return {std::string(text), Scope::classic()};
    return {std::string(text.substr(0, colon)), Scope::parse(text.substr(colon + 1))};
}

MealyMachine build_family(std::string_view kind, const Scope& scope) {
    if (kind == "aleshin" || kind == "A")
        return make_aleshin(scope);
    if (kind == "bellaterra" || kind == "B")
        return make_bellaterra(scope);
    if (kind == "I")
        return make_I(scope);
    if (kind == "U")
        return make_U(scope);
    if (kind == "D")
        return make_D(scope);
    if (kind == "E")
        return make_E(scope);
    if (kind == "Dhat")
        return dual_automaton(make_bellaterra(scope))
            .renamed(scope.is_classic() ? "Dhat" : "Dhat(" + scope.label() + ")");
    throw InputError("unknown family kind '" + std::string(kind)
                     + "' (expected aleshin, bellaterra, A, B, I, U, D, E or Dhat)");
}

Word resolve_state_word(const MealyMachine& m, std::string_view text) {
    static const std::regex component(R"(\.[0-9]+)");
    std::istringstream in{std::string(text)};
    Word xi;
    for (std::string tok; in >> tok;) {
        if (auto q = m.states().find(tok)) {
            xi.push_back(*q);
            continue;
        }
        std::vector<Index> hits;
        for (Index q = 0; q < m.num_states(); ++q)
            if (std::regex_replace(m.state_name(q), component, "", std::regex_constants::format_first_only)
                == tok)
                hits.push_back(q);
        if (hits.empty())
            throw InputError("unknown state '" + tok + "' of machine '" + m.name() + "'");
        if (hits.size() > 1)
            throw InputError("state '" + tok + "' is ambiguous in machine '" + m.name() + "' (e.g. '"
                             + m.state_name(hits[0]) + "' or '" + m.state_name(hits[1]) + "')");
        xi.push_back(hits.front());
    }
    return xi;
}

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kIncomplete = 3 };

struct MachineSource {
    std::string family;
    std::string file;
};

MealyMachine load_machine(const MachineSource& src) {
    if (!src.file.empty()) {
        std::ifstream in(src.file);
        if (!in)
            throw InputError("cannot read machine file '" + src.file + "'");
        std::ostringstream text;
        text << in.rdbuf();
        return parse_document(text.str());
    }
    const auto spec = parse_family_spec(src.family.empty() ? "aleshin" : src.family);
    return build_family(spec.kind, spec.scope);
}

void add_source(CLI::App* cmd, MachineSource& src) {
    auto* f = cmd->add_option("--family", src.family, "family spec kind[:n|:{n1,n2,...}], e.g. aleshin:2");
    auto* m = cmd->add_option("--machine", src.file, "machine document file");
    f->excludes(m);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_check(const MachineSource& src, const std::string& property, bool structured, std::ostream& out) {
    const MealyMachine m = load_machine(src);
    const auto c = classify(m);
    bool ok = c.defects.empty();
    if (property == "invertible")
        ok = ok && c.invertible;
    else if (property == "reversible")
        ok = ok && c.reversible;
    else if (property == "bireversible")
        ok = ok && c.bireversible;

    auto describe = [&](const ClassificationWitness& w) {
        std::string s = w.description;
        if (w.state)
            s += " [state " + m.state_name(*w.state) + "]";
        if (w.letter)
            s += " [letter " + m.alphabet().name(*w.letter) + "]";
        return s;
    };
    if (structured) {
        nlohmann::ordered_json j;
        j["machine"] = m.name();
        j["property"] = property;
        j["invertible"] = c.invertible;
        j["reversible"] = c.reversible;
        j["bireversible"] = c.bireversible;
        j["witnesses"] = nlohmann::ordered_json::array();
        for (const auto& w : c.witnesses)
            j["witnesses"].push_back({{"property", w.property}, {"description", describe(w)}});
        j["defects"] = c.defects;
        j["passed"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "machine " << m.name() << "\n";
        out << "invertible " << yes_no(c.invertible) << "\n";
        out << "reversible " << yes_no(c.reversible) << "\n";
        out << "bireversible " << yes_no(c.bireversible) << "\n";
        for (const auto& w : c.witnesses)
            out << "witness " << w.property << ": " << describe(w) << "\n";
        for (const auto& d : c.defects)
            out << "defect " << d << "\n";
        out << "status " << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kPass : kFail;
}

struct VerifyArgs {
    std::string suite;
    std::optional<int> n;
    std::string N;
    std::optional<std::size_t> max_len, max_level, cap;
    std::size_t max_w = 3, max_u = 3;
    std::string which = "pattern";
    bool structured = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const Scope scope = a.n ? Scope::single(*a.n) : !a.N.empty() ? Scope::parse(a.N) : Scope::classic();
    const bool unit = scope.is_single() && scope.members().front() == 1;
    const std::size_t pair_cap = a.cap.value_or(default_pair_cap());
    const std::size_t orbit_cap = a.cap.value_or(kDefaultOrbitCap);

    VerificationReport r;
    if (a.suite == "freeness") {
        r = check_freeness(scope, a.max_len.value_or(unit ? 5 : scope.is_single() ? 4 : 3), pair_cap);
    } else if (a.suite == "free-product") {
        r = check_free_product(scope, a.max_len.value_or(unit ? 8 : 5), pair_cap);
    } else if (a.suite == "identities") {
        r = check_identities(scope, pair_cap);
    } else if (a.suite == "duality") {
        r = check_duality(scope, a.max_len.value_or(3), a.max_w, a.max_u);
    } else if (a.suite == "chi") {
        r = check_chi_criterion(scope, a.max_len.value_or(6));
    } else if (a.suite == "orbits") {
        OrbitClaim claim;
        if (a.which == "pattern")
            claim = OrbitClaim::pattern;
        else if (a.which == "marked")
            claim = OrbitClaim::marked;
        else if (a.which == "no_double_letter" || a.which == "no-double-letter")
            claim = OrbitClaim::no_double_letter;
        else
            throw InputError("--which must be pattern, marked or no_double_letter");
        r = check_orbit_classification(claim, scope,
                                       a.max_len.value_or(claim == OrbitClaim::no_double_letter ? 7 : 4),
                                       orbit_cap);
    } else if (a.suite == "transitivity") {
        r = check_level_transitivity(scope, a.max_level.value_or(unit ? 6 : 4), orbit_cap);
    } else if (a.suite == "witnesses") {
        r = check_pattern_witnesses(scope, a.max_len.value_or(scope.is_single() ? 6 : 4));
    } else {
        throw InputError("unknown suite '" + a.suite + "'");
    }
    out << (a.structured ? to_json(r) : to_text(r));
    if (!r.passed())
        return kFail;
    return r.incomplete ? kIncomplete : kPass;
}

int cmd_act(const MachineSource& src, const std::string& xi_text, const std::string& word, std::ostream& out) {
    MealyMachine m = load_machine(src);
    if (classify(m).invertible)
        m = make_signed(m, m.name());
    const Word xi = resolve_state_word(m, xi_text);
    const Word w = parse_word(m.alphabet(), word);
    out << format_word(m.alphabet(), apply_state_word(m, xi, w)) << "\n";
    return kPass;
}

int cmd_transform(const MachineSource& src, const std::string& op, bool dot, std::ostream& out) {
    const MealyMachine m = load_machine(src);
    MealyMachine t = op == "inverse"   ? inverse_automaton(m)
                     : op == "reverse" ? reverse_automaton(m)
                     : op == "dual"    ? dual_automaton(m)
                                       : make_signed(m);
    out << (dot ? to_dot(t) : serialize_document(t));
    return kPass;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mealy automata: Aleshin and Bellaterra families, transformations and verification suites",
                 "mealy"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "help for every subcommand");

    // family
    std::string fam_kind, fam_scope = "classic";
    bool fam_dot = false;
    auto* family = app.add_subcommand("family", "print a family member as a machine document");
    family->add_option("kind", fam_kind, "aleshin|A, bellaterra|B, I, U, D, E, Dhat")->required();
    family->add_option("scope", fam_scope, "n, {n1,n2,...} or classic (default)");
    family->add_flag("--dot", fam_dot, "print a DOT Moore diagram instead");

    // transform
    MachineSource tr_src;
    std::string tr_op;
    bool tr_dot = false;
    auto* transform = app.add_subcommand("transform", "inverse, reverse, dual or signed (m plus inverse) machine");
    transform->add_option("operation", tr_op)
        ->required()
        ->check(CLI::IsMember({"inverse", "reverse", "dual", "signed"}));
    add_source(transform, tr_src);
    transform->add_flag("--dot", tr_dot, "print a DOT Moore diagram instead");

    // act
    MachineSource act_src;
    std::string act_xi, act_word;
    auto* act = app.add_subcommand("act", "apply the state word xi (first letter acts first) to a word");
    add_source(act, act_src);
    act->add_option("--xi", act_xi, "state word, e.g. \"a.2 b.1'\"; inverses end in '")->required();
    act->add_option("--word", act_word, "input word over the alphabet")->required();

    // check
    MachineSource ck_src;
    std::string ck_property = "classify", ck_format = "text";
    auto* check = app.add_subcommand("check", "invertibility, reversibility and bi-reversibility");
    add_source(check, ck_src);
    check->add_option("property", ck_property)
        ->check(CLI::IsMember({"invertible", "reversible", "bireversible", "classify"}));
    check->add_option("--format", ck_format)->check(CLI::IsMember({"text", "structured"}));

    // verify
    VerifyArgs va;
    std::string va_format = "text";
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", va.suite)
        ->required()
        ->check(CLI::IsMember(
            {"freeness", "free-product", "identities", "duality", "chi", "orbits", "transitivity", "witnesses"}));
    auto* opt_n = verify->add_option("--n", va.n, "single series index (default: the classic automata)");
    auto* opt_N = verify->add_option("--N", va.N, "index set of a disjoint union, e.g. {1,2}");
    opt_n->excludes(opt_N);
    verify->add_option("--max-len", va.max_len, "word length bound");
    verify->add_option("--max-level", va.max_level, "tree level bound (transitivity)");
    verify->add_option("--max-w", va.max_w, "length bound for w (duality)")->capture_default_str();
    verify->add_option("--max-u", va.max_u, "length bound for u (duality)")->capture_default_str();
    verify->add_option("--cap", va.cap, "reachable-pair cap (products) or orbit cap (orbits)");
    verify->add_option("--which", va.which, "orbit claim: pattern, marked, no_double_letter")
        ->capture_default_str();
    verify->add_option("--format", va_format)->check(CLI::IsMember({"text", "structured"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (family->parsed()) {
            const MealyMachine m = build_family(fam_kind, Scope::parse(fam_scope));
            out << (fam_dot ? to_dot(m) : serialize_document(m));
            return kPass;
        }
        if (transform->parsed())
            return cmd_transform(tr_src, tr_op, tr_dot, out);
        if (act->parsed())
            return cmd_act(act_src, act_xi, act_word, out);
        if (check->parsed())
            return cmd_check(ck_src, ck_property, ck_format == "structured", out);
        va.structured = va_format == "structured";
        return cmd_verify(va, out);
    } catch (const ResourceError& e) {
        err << "incomplete: " << e.what() << " (cap " << e.cap() << ")\n";
        return kIncomplete;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace mealy::cli
