#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "mealy/cli.hpp"
#include "mealy/errors.hpp"

namespace mealy {

namespace {

constexpr const char* kHeader = "mealy-automaton v1";

void require_token(const std::string& s, const char* what) {
    if (s.empty() || s.front() == '#' || s.find_first_of(" \t\r\n") != std::string::npos)
        throw InputError(std::string("cannot serialize ") + what + " '" + s
                         + "': names must be nonempty, without whitespace, and not start with '#'");
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v)
        s += " " + x;
    return s;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

std::string serialize_document(const MealyMachine& m) {
    for (const auto& x : m.alphabet().names())
        require_token(x, "letter");
    for (const auto& q : m.states().names())
        require_token(q, "state");
    if (m.name().find_first_of("#\r\n") != std::string::npos)
        throw InputError("cannot serialize machine name '" + m.name() + "'");

    std::string s = std::string(kHeader) + "\n";
    s += "name " + m.name() + "\n";
    s += "alphabet" + join(m.alphabet().names()) + "\n";
    s += "states" + join(m.states().names()) + "\n";
    for (Index q = 0; q < m.num_states(); ++q)
        for (Index x = 0; x < m.num_letters(); ++x)
            s += "transition " + m.state_name(q) + " " + m.alphabet().name(x) + " "
                 + m.state_name(m.next(q, x)) + " " + m.alphabet().name(m.out(q, x)) + "\n";
    return s;
}

MealyMachine parse_document(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    bool header = false;
    std::optional<std::string> name;
    std::optional<Alphabet> alphabet, states;
    std::vector<Index> next, out;
    std::vector<char> seen;
    std::size_t transitions = 0;

    auto fail = [&](const std::string& msg) -> InputError {
        return InputError("line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, raw)) {
        ++line_no;
        if (!header) {
            const std::string t = trim(raw);
            if (t.empty() || t.front() == '#')
                continue;
            if (t != kHeader)
                throw fail("expected header '" + std::string(kHeader) + "'");
            header = true;
            continue;
        }
        if (const std::string t = trim(raw); t == "name" || t.rfind("name ", 0) == 0) {
            if (name)
                throw fail("duplicate 'name' line");
            name = trim(strip_comment(t.substr(4)));
            continue;
        }
        const auto tok = tokens(strip_comment(raw));
        if (tok.empty())
            continue;
        try {
            if (tok[0] == "alphabet" || tok[0] == "states") {
                auto& slot = tok[0] == "alphabet" ? alphabet : states;
                if (slot)
                    throw fail("duplicate '" + tok[0] + "' line");
                if (!next.empty() || transitions)
                    throw fail("'" + tok[0] + "' must precede the transitions");
                slot = Alphabet(std::vector<std::string>(tok.begin() + 1, tok.end()));
            } else if (tok[0] == "transition") {
                if (!alphabet || !states)
                    throw fail("transition before the alphabet and states lines");
                if (tok.size() != 5)
                    throw fail("a transition needs: state input next out");
                if (next.empty()) {
                    next.assign(states->size() * alphabet->size(), 0);
                    out.assign(next.size(), 0);
                    seen.assign(next.size(), 0);
                }
                const Index q = states->index_of(tok[1]);
                const Index x = alphabet->index_of(tok[2]);
                const std::size_t at = q * alphabet->size() + x;
                if (seen[at])
                    throw fail("second transition for (" + tok[1] + ", " + tok[2] + ")");
                seen[at] = 1;
                next[at] = states->index_of(tok[3]);
                out[at] = alphabet->index_of(tok[4]);
                ++transitions;
            } else {
                throw fail("unknown record '" + tok[0] + "'");
            }
        } catch (const InputError& e) {
            const std::string msg = e.what();
            if (msg.rfind("line ", 0) == 0)
                throw;
            throw fail(msg);
        }
    }
    if (!header)
        throw InputError("missing header '" + std::string(kHeader) + "'");
    if (!alphabet || !states)
        throw InputError("document needs 'alphabet' and 'states' lines");
    if (transitions != states->size() * alphabet->size()) {
        seen.resize(states->size() * alphabet->size(), 0);
        const auto gap = static_cast<std::size_t>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
        throw InputError("missing transition for (" + states->name(gap / alphabet->size()) + ", "
                         + alphabet->name(gap % alphabet->size()) + ")");
    }
    return {name.value_or(""), std::move(*alphabet), std::move(*states), std::move(next), std::move(out)};
}

std::string to_dot(const MealyMachine& m) {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                q += '\\';
            q += c;
        }
        return q + "\"";
    };
    std::string s = "digraph " + quote(m.name()) + " {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (Index q = 0; q < m.num_states(); ++q)
        s += "  " + quote(m.state_name(q)) + ";\n";
    for (Index q = 0; q < m.num_states(); ++q) {
        // Targets in order of their first letter.
        std::vector<Index> order;
        std::map<Index, std::string> labels;
        for (Index x = 0; x < m.num_letters(); ++x) {
            const Index p = m.next(q, x);
            auto& label = labels[p];
            if (label.empty())
                order.push_back(p);
            else
                label += ",";
            label += m.alphabet().name(x) + "|" + m.alphabet().name(m.out(q, x));
        }
        for (Index p : order)
            s += "  " + quote(m.state_name(q)) + " -> " + quote(m.state_name(p)) + " [label="
                 + quote(labels[p]) + "];\n";
    }
    return s + "}\n";
}

} // namespace mealy
