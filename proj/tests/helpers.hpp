#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "apg/numeric.hpp"

namespace testing {

inline std::string data(const std::string& file) { return std::string(APG_DATA_DIR) + "/" + file; }

inline const apg::BoundEval& find(const std::vector<apg::BoundEval>& evals, const std::string& name) {
    for (const auto& e : evals)
        if (e.name == name) return e;
    throw std::out_of_range("no evaluation named " + name);
}

inline bool naive_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t naive_phi(std::uint64_t q) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= q; ++k) {
        std::uint64_t a = k, b = q;
        while (b) a %= b, std::swap(a, b);
        if (a == 1) ++count;
    }
    return count;
}

}  // namespace testing
