#pragma once

#include <cstdint>
#include <vector>

namespace forge {

// Classic sieve of Eratosthenes, ascending primes <= limit. The independent
// route the Zeta recursion is checked against.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

}  // namespace forge
