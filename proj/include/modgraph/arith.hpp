#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace modgraph {

using Int = std::uint32_t;

inline Int lcm_of(Int a, Int b) { return static_cast<Int>(std::lcm<std::uint64_t>(a, b)); }

/// Positive divisors of n in ascending order.
inline std::vector<Int> divisors(Int n)
{
    std::vector<Int> small, large;
    for (Int d = 1; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline bool is_prime_number(Int n)
{
    if (n < 2)
        return false;
    for (Int d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace modgraph
