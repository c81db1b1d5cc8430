// Smallest tightened Goldbach decompositions for a few even numbers.
//
//   ./goldbach_window 12 60

#include <cstdio>
#include <cstdlib>

#include "pairjac/verifiers.hpp"

int main(int argc, char** argv) {
    const unsigned long long lo = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 12;
    const unsigned long long hi = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 60;
    const auto report = pairjac::verify_goldbach(lo, hi, [](const pairjac::GoldbachWitness& w) {
        std::printf("%llu = %llu + %llu   (k = %u, %llu < q1 < %llu)\n", static_cast<unsigned long long>(w.two_n),
                    static_cast<unsigned long long>(w.q1), static_cast<unsigned long long>(w.q2), w.k_n,
                    static_cast<unsigned long long>(w.p_k), static_cast<unsigned long long>(w.p_k * w.p_k));
    });
    std::printf("%llu witnesses, %zu failures\n", static_cast<unsigned long long>(report.witnesses),
                report.failures.size());
    return report.verified() ? 0 : 1;
}
