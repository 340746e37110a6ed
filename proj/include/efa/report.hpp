#pragma once

#include "efa/keys.hpp"
#include "efa/scalar.hpp"

#include <string>
#include <vector>

namespace efa {

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "skipped";
    }
}

// One offending instance: the pools and distinguished arguments that were
// contracted, with the two sides that were supposed to agree. Witnesses can
// be replayed; re-evaluating reproduces left/right exactly.
struct Witness {
    Word pool_a;
    Word pool_b;
    Word args_a; // distinguished A-basis arguments
    Word args_b; // distinguished B-basis arguments
    Scalar left;
    Scalar right;
    std::string detail; // extra context (key for axiom 1/2, class for series)
};

struct CheckReport {
    int axiom = 0;
    CheckStatus status = CheckStatus::skipped;
    std::vector<Witness> witnesses;
    unsigned long long terms_enumerated = 0;
    unsigned long long instances_checked = 0;
    unsigned long long instances_skipped = 0;
    std::string note; // convention notes (e.g. axiom 7 normalization)
};

} // namespace efa
