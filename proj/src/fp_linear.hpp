#pragma once

#include <optional>
#include <vector>

namespace pbr::detail {

// Solve rows * x = rhs over F_p. Free variables are set to zero.
inline std::optional<std::vector<int>> solve_mod_p(std::vector<std::vector<int>> rows, std::vector<int> rhs, int p)
{
    const std::size_t m = rows.size();
    const std::size_t nvars = m ? rows[0].size() : 0;
    auto inv = [p](int a) {
        for (int b = 1; b < p; ++b)
            if (a * b % p == 1)
                return b;
        return 0;
    };
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nvars && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && rows[piv][c] == 0)
            ++piv;
        if (piv == m)
            continue;
        std::swap(rows[piv], rows[r]);
        std::swap(rhs[piv], rhs[r]);
        int s = inv(rows[r][c]);
        for (auto& v : rows[r])
            v = v * s % p;
        rhs[r] = rhs[r] * s % p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            int f = rows[i][c];
            for (std::size_t j = 0; j < nvars; ++j)
                rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
            rhs[i] = ((rhs[i] - f * rhs[r]) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (rhs[i] != 0)
            return std::nullopt;
    std::vector<int> x(nvars, 0);
    for (std::size_t i = 0; i < r; ++i)
        x[pivot_col[i]] = rhs[i];
    return x;
}

} // namespace pbr::detail
