#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "support.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>

namespace {
std::uint64_t g_seed = 20240611;
}

namespace evt {
std::uint64_t seed() { return g_seed; }
std::mt19937_64& rng()
{
    static std::mt19937_64 r(g_seed);
    return r;
}
} // namespace evt

int main(int argc, char** argv)
{
    if (const char* s = std::getenv("EVENLAT_SEED"))
        g_seed = std::strtoull(s, nullptr, 10);
    for (int i = 1; i < argc; ++i)
        if (std::strncmp(argv[i], "--seed=", 7) == 0)
            g_seed = std::strtoull(argv[i] + 7, nullptr, 10);
    std::cout << "seed " << g_seed << "\n";
    doctest::Context ctx;
    ctx.applyCommandLine(argc, argv);
    return ctx.run();
}
