#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gmlie {

struct VerifyCheck {
    std::string name;
    int cases = 0;
    int failures = 0;

    bool pass() const { return failures == 0; }
};

/// Randomized run of the algebraic invariants with `samples` cases per check
/// at truncation order `order` (>= 4).
std::vector<VerifyCheck> run_verify(std::uint64_t seed, int order, int samples);

} // namespace gmlie
