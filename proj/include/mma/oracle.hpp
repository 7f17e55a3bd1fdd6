#pragma once

// Brute-force reference semantics. Enumerates every subset of the argument
// set and applies the textbook definitions directly. Shares no enumeration
// code with the solver in af.cpp; used to cross-check it.

#include <cstdint>
#include <random>
#include <stdexcept>

#include "mma/af.hpp"

namespace mma::oracle {

inline constexpr std::size_t max_args = 20;

class GuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

ExtensionSet oracle_semantics(SemanticsKind kind, const Frame& f);

/// Random Dung frame over arguments "a1".."a<n>"; each ordered pair
/// (self-attacks included) is an attack with probability `density`.
Frame random_frame(std::size_t n, double density, std::mt19937_64& rng);

struct CrossCheckReport {
    std::size_t frames = 0;
    std::size_t mismatches = 0;
    std::vector<std::string> details;
};

/// Compares `semantics` against `oracle_semantics` for all three kinds on
/// `trials` random frames of size 0..max_n, density drawn from
/// {0.1, 0.2, 0.3, 0.4, 0.5}. Trials run in parallel; the report is
/// independent of thread count.
CrossCheckReport cross_check(std::size_t max_n, std::uint64_t seed, std::size_t trials);

/// Every Dung frame over "a1".."a<n>" (all 2^(n*n) attack relations).
CrossCheckReport exhaustive_check(std::size_t n);

} // namespace mma::oracle
