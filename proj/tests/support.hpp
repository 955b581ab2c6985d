#pragma once
// Shared helpers for the doctest suites: the seed (settable with --seed=N or
// EVENLAT_SEED) and small random generators.

#include "evenlat/lattice.hpp"

#include <random>

namespace evt {

using namespace evenlat;

std::uint64_t seed();
std::mt19937_64& rng();

/// Restarts the generator at seed() + salt so each property case is
/// reproducible on its own.
inline void reseed(std::uint64_t salt) { rng().seed(seed() + salt); }

constexpr int kCases = 250;

inline long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline IntMat random_matrix(std::size_t r, std::size_t c, long bound)
{
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = uniform(-bound, bound);
    return m;
}

/// Product of random elementary matrices.
inline IntMat random_unimodular(std::size_t n, int moves = 12)
{
    IntMat u = IntMat::identity(n);
    if (n < 2)
        return uniform(0, 1) ? u : Integer(-1) * u;
    for (int k = 0; k < moves; ++k) {
        std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
        if (j >= i)
            ++j;
        u.add_row_multiple(i, j, Integer(uniform(-2, 2)));
        if (uniform(0, 5) == 0)
            u.swap_rows(i, j);
    }
    return u;
}

inline IntMat random_symmetric(std::size_t n, long bound, bool even)
{
    IntMat g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = even ? 2 * uniform(-bound, bound) : uniform(-bound, bound);
        for (std::size_t j = i + 1; j < n; ++j)
            g(i, j) = g(j, i) = uniform(-bound, bound);
    }
    return g;
}

/// Random nondegenerate even Gram matrix of rank n.
inline IntMat random_even_lattice(std::size_t n, long bound)
{
    for (;;) {
        IntMat g = random_symmetric(n, bound, true);
        if (determinant(g) != 0)
            return g;
    }
}

} // namespace evt
