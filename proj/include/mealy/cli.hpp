#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mealy/families.hpp"
#include "mealy/machine.hpp"

namespace mealy {

/**
 * Versioned text document for one machine:
 *
 *     mealy-automaton v1
 *     name A
 *     alphabet 0 1
 *     states a b c
 *     transition a 0 c 1      # state input next out
 *     ...
 *
 * Blank lines and '#' comments are ignored on input. Output lists
 * transitions by state, then letter, so serialization is byte-stable.
 */
std::string serialize_document(const MealyMachine& m);
/// Throws InputError with the offending line number.
MealyMachine parse_document(std::string_view text);

/// Moore diagram in DOT. Parallel edges share one label "x|y,x'|y'";
/// nodes and edges follow state and letter order.
std::string to_dot(const MealyMachine& m);

namespace cli {

/// "aleshin:2", "B:{0,2}", "U:1"; a bare kind means the classic scope.
struct FamilySpec {
    std::string kind;
    Scope scope;
};
FamilySpec parse_family_spec(std::string_view text);

/// Kinds: aleshin|A, bellaterra|B, I, U, D, E, Dhat (dual of B).
MealyMachine build_family(std::string_view kind, const Scope& scope);

/**
 * Whitespace-separated state symbols of `m`. A symbol that is not a state
 * name may drop the component index: "a" stands for "a.1" and "b'" for
 * "b.2'" when that choice is unique.
 */
Word resolve_state_word(const MealyMachine& m, std::string_view text);

/// Runs the command line (without the program name). Exit codes: 0 pass,
/// 1 failure, 2 usage or input error, 3 incomplete because of a cap.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cli
} // namespace mealy
