#include "parlat/relation.hpp"

#include <stdexcept>
#include <string>

namespace parlat {

FiniteRelationAlgebra::FiniteRelationAlgebra(int n_, std::vector<int> involution_,
                                             const std::vector<std::vector<int>>& gamma,
                                             int unit_)
    : n(n_), involution(std::move(involution_)), unit(unit_) {
    if (n < 1 || n > kMaxCarrier)
        throw std::invalid_argument("carrier size must be in [1, " +
                                    std::to_string(kMaxCarrier) + "]");
    if (static_cast<int>(involution.size()) != n)
        throw std::invalid_argument("involution size mismatch");
    for (int x = 0; x < n; ++x) {
        if (involution[x] < 0 || involution[x] >= n)
            throw std::invalid_argument("involution out of range");
        if (involution[involution[x]] != x)
            throw std::invalid_argument("involution is not an involution");
    }
    if (unit < 0 || unit >= n) throw std::invalid_argument("unit out of range");
    if (involution[unit] != unit)
        throw std::invalid_argument("unit must be a fixed point of the involution");

    if (static_cast<int>(gamma.size()) != n)
        throw std::invalid_argument("gamma row count mismatch");
    gamma_rows.assign(n, 0);
    gamma_cols.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(gamma[x].size()) != n)
            throw std::invalid_argument("gamma column count mismatch");
        for (int y = 0; y < n; ++y) {
            if (gamma[x][y] != 0 && gamma[x][y] != 1)
                throw std::invalid_argument("gamma entries must be 0 or 1");
            if (gamma[x][y]) {
                gamma_rows[x] |= Subset(1) << y;
                gamma_cols[y] |= Subset(1) << x;
            }
        }
    }
    // axiom (i): (x,y) compatible implies (y*, x*) compatible
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (this->gamma(x, y) && !this->gamma(involution[y], involution[x]))
                throw std::invalid_argument("relation not compatible with the involution");
    for (int x = 0; x < n; ++x)
        if (!this->gamma(unit, x) || !this->gamma(x, unit))
            throw std::invalid_argument("unit must multiply every element on both sides");
}

Subset FiniteRelationAlgebra::star(Subset s) const {
    Subset out = 0;
    for (int i = 0; i < n; ++i)
        if (s >> i & 1) out |= Subset(1) << involution[i];
    return out;
}

FiniteRelationAlgebra degree_truncation_algebra(int n) {
    if (n < 1) throw std::invalid_argument("degree bound must be >= 1");
    const int size = n + 1;
    std::vector<int> inv(size);
    for (int i = 0; i < size; ++i) inv[i] = i;
    std::vector<std::vector<int>> gamma(size, std::vector<int>(size, 0));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) gamma[i][j] = i + j <= n ? 1 : 0;
    return FiniteRelationAlgebra(size, std::move(inv), gamma, 0);
}

FiniteRelationAlgebra quasi_algebra(int n, int core) {
    if (core < 1 || core > n) throw std::invalid_argument("core size must be in [1, n]");
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = i;
    std::vector<std::vector<int>> gamma(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gamma[i][j] = (i < core || j < core) ? 1 : 0;
    return FiniteRelationAlgebra(n, std::move(inv), gamma, 0);
}

FiniteRelationAlgebra total_algebra(int n) {
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = i;
    std::vector<std::vector<int>> gamma(n, std::vector<int>(n, 1));
    return FiniteRelationAlgebra(n, std::move(inv), gamma, 0);
}

}  // namespace parlat
