#pragma once

// Test-only oracle: textbook dense Gaussian elimination over F_p, written
// independently of the library's sparse echelon so the two can be compared.

#include <cstdint>
#include <vector>

#include "slp2/field.hpp"

namespace testutil {

inline int naive_rank(const slp2::PrimeField& F, std::vector<std::vector<std::uint64_t>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] % F.modulus() == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const std::uint64_t inv = F.inv(m[rank][col]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] % F.modulus() == 0) continue;
            const std::uint64_t factor = F.mul(m[r][col] % F.modulus(), inv);
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = F.sub(m[r][c] % F.modulus(),
                                F.mul(factor, m[rank][c] % F.modulus()));
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace testutil
