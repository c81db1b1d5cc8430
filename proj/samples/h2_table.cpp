// Prints h2(n) next to h(n) = j(p_n#) and the conjectured bound p_n^2 - p_n.
//
//   ./h2_table [max_n]   (default 6)

#include <cstdio>
#include <cstdlib>

#include "pairjac/jacobsthal.hpp"
#include "pairjac/paired_jacobsthal.hpp"

int main(int argc, char** argv) {
    const unsigned max_n = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 6;
    std::printf("%3s %6s %8s %8s %10s\n", "n", "p_n", "h(n)", "h2(n)", "p_n^2-p_n");
    for (unsigned n = 1; n <= max_n; ++n) {
        const auto p = pairjac::first_primes(n).back();
        const auto h2 = pairjac::h2_search(n);
        std::printf("%3u %6llu %8llu %8llu %10llu\n", n, static_cast<unsigned long long>(p),
                    static_cast<unsigned long long>(pairjac::h_ordinary(n)),
                    static_cast<unsigned long long>(h2.value), static_cast<unsigned long long>(p * p - p));
    }
}
