#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mealy/families.hpp"
#include "mealy/machine.hpp"
#include "mealy/orbits.hpp"

namespace mealy {

struct CheckFailure {
    std::string check;    // which assertion failed
    std::string witness;  // word or machine pair that reproduces it
    std::string detail;
};

/**
 * Outcome of one verification suite.
 *
 * `checks_run` counts individual assertions. Records are informational
 * key/value pairs (counts, witnesses found, unasserted orbit data) in the
 * order the suite produced them; with the timing excluded, a report depends
 * only on the suite parameters.
 */
struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::size_t checks_run = 0;
    std::vector<CheckFailure> failures;
    std::vector<std::pair<std::string, std::string>> records;
    bool incomplete = false;
    std::string incomplete_reason;
    double seconds = 0.0;

    bool passed() const noexcept { return failures.empty(); }

    void param(std::string key, std::string value) { parameters.emplace_back(std::move(key), std::move(value)); }
    void record(std::string key, std::string value) { records.emplace_back(std::move(key), std::move(value)); }
    void fail(std::string check, std::string witness, std::string detail = {}) {
        failures.push_back({std::move(check), std::move(witness), std::move(detail)});
    }
    /// Count one assertion; record a failure when `ok` is false.
    bool expect(bool ok, const std::string& check, const std::string& witness, const std::string& detail = {});
};

/// Line-oriented text rendering. `with_timing` false gives the
/// deterministic part only.
std::string to_text(const VerificationReport& r, bool with_timing = true);
/// JSON rendering (one object).
std::string to_json(const VerificationReport& r, bool with_timing = true);

/**
 * Every nonempty freely irreducible word xi over Q_N^+- with |xi| <= max_len
 * gives a non-identity U_xi, decided exactly. Words are visited depth first
 * so that each product machine extends its prefix's.
 *
 * A pair-cap overflow marks the report incomplete and skips the subtree.
 */
VerificationReport check_freeness(const Scope& scope, std::size_t max_len,
                                  std::size_t cap = default_pair_cap());

/// Generators of B^(N) square to the identity and every word with distinct
/// adjacent letters, of length 1..max_len, is not the identity.
VerificationReport check_free_product(const Scope& scope, std::size_t max_len,
                                      std::size_t cap = default_pair_cap());

/// Machine identities among D, E, pi and (for the flip h) A and B, each an
/// exact transformation equality.
VerificationReport check_identities(const Scope& scope, std::size_t cap = default_pair_cap());

/// A_xi(wu) = A_xi(w) A_{D_w(xi)}(u) for all xi over Q_N^+- and w, u over
/// {0,1} within the length bounds.
VerificationReport check_duality(const Scope& scope, std::size_t max_xi, std::size_t max_w,
                                 std::size_t max_u);

/// U_xi fixes both one-letter words iff chi(xi) = +1, for all xi with
/// |xi| <= max_len (reducible words included).
VerificationReport check_chi_criterion(const Scope& scope, std::size_t max_len);

enum class OrbitClaim { pattern, marked, no_double_letter };

/**
 * Orbit partitions of level k = 1..max_len:
 *  - pattern / marked: generators D_0, D_1 on (Q_N^+-)^k; the freely
 *    irreducible words of each (marked) pattern form exactly one orbit.
 *    Every orbit must keep its (marked) pattern and reducibility; reducible
 *    orbits are recorded, not classified.
 *  - no_double_letter: generators of the dual of B^(N) on Q_N^k; the words
 *    without two equal adjacent letters form one orbit.
 */
VerificationReport check_orbit_classification(OrbitClaim claim, const Scope& scope, std::size_t max_len,
                                              std::size_t cap = kDefaultOrbitCap);

/// The dual of A^(N) is transitive on the levels 0..max_level of Q_N^*.
VerificationReport check_level_transitivity(const Scope& scope, std::size_t max_level,
                                            std::size_t cap = kDefaultOrbitCap);

/**
 * For a single n: every pattern of length 1..max_len has freely irreducible
 * words of both chi values and one acting nontrivially on the first level.
 * For unions: every marked pattern has a word acting nontrivially on the
 * first level.
 */
VerificationReport check_pattern_witnesses(const Scope& scope, std::size_t max_len);

const char* to_string(OrbitClaim claim);

} // namespace mealy
