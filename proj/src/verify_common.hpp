#pragma once

#include <chrono>
#include <string>

#include "mealy/verify.hpp"

namespace mealy::detail {

/// Writes the elapsed wall time into the report when it goes out of scope.
class SuiteTimer {
public:
    explicit SuiteTimer(VerificationReport& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
    ~SuiteTimer() {
        r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
    SuiteTimer(const SuiteTimer&) = delete;
    SuiteTimer& operator=(const SuiteTimer&) = delete;

private:
    VerificationReport& r_;
    std::chrono::steady_clock::time_point start_;
};

inline void mark_incomplete(VerificationReport& r, const std::string& reason) {
    if (!r.incomplete)
        r.incomplete_reason = reason;
    r.incomplete = true;
}

/// Records the first few subtrees skipped because of the pair cap and the
/// total count.
class CappedPrefixes {
public:
    static constexpr std::size_t kListed = 10;

    void add(VerificationReport& r, const std::string& prefix) {
        if (count_++ < kListed)
            r.record("capped_prefix", prefix);
    }
    void finish(VerificationReport& r) const {
        if (count_ > 0)
            r.record("capped_prefixes", std::to_string(count_));
    }

private:
    std::size_t count_ = 0;
};

} // namespace mealy::detail
