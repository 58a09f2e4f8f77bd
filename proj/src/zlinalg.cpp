#include "tc4/zlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace tc4 {

std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<Int> factors;
    std::size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // find a nonzero pivot of minimal absolute value
        std::size_t pr = r0, pc = c0;
        Int best = 0;
        for (std::size_t r = r0; r < rows; ++r)
            for (std::size_t c = c0; c < cols; ++c)
                if (m[r][c] != 0 && (best == 0 || std::abs(m[r][c]) < best)) {
                    best = std::abs(m[r][c]);
                    pr = r;
                    pc = c;
                }
        if (best == 0) break;
        std::swap(m[r0], m[pr]);
        for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][c0], m[r][pc]);

        bool clean = true;
        for (std::size_t r = r0 + 1; r < rows; ++r)
            if (m[r][c0] != 0) {
                Int q = m[r][c0] / m[r0][c0];
                for (std::size_t c = c0; c < cols; ++c)
                    m[r][c] -= checked_mul(q, m[r0][c]);
                if (m[r][c0] != 0) clean = false;
            }
        for (std::size_t c = c0 + 1; c < cols; ++c)
            if (m[r0][c] != 0) {
                Int q = m[r0][c] / m[r0][c0];
                for (std::size_t r = r0; r < rows; ++r)
                    m[r][c] -= checked_mul(q, m[r][c0]);
                if (m[r0][c] != 0) clean = false;
            }
        if (!clean) continue;  // smaller remainders appeared; pick a new pivot

        factors.push_back(std::abs(m[r0][c0]));
        ++r0;
        ++c0;
    }
    // enforce the divisibility chain
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (factors[j] % factors[i] != 0) {
                Int g = std::gcd(factors[i], factors[j]);
                Int l = factors[i] / g * factors[j];
                factors[i] = g;
                factors[j] = l;
            }
    std::sort(factors.begin(), factors.end());
    return factors;
}

}  // namespace tc4
