// Prints how the exact coprime-pair density approaches 6/pi^2, next to a
// Monte Carlo estimate at the same range.
//
//   pair_convergence [max_exponent]   (default 9, i.e. n up to 10^9)

#include <cstdio>
#include <cstdlib>
#include <memory>

#include <coprime_lab/coprime_lab.hpp>

int main(int argc, char** argv) {
    using namespace coprime_lab;
    const int max_exp = argc > 1 ? std::atoi(argv[1]) : 9;
    if (max_exp < 1 || max_exp > 12) {
        std::fprintf(stderr, "max_exponent must be in [1, 12]\n");
        return 2;
    }

    const double limit = six_over_pi_squared().value;
    const totient_summator phi(std::make_shared<const sieve_tables>(build_sieve(2'000'000)));

    std::printf("%14s %24s %16s %12s %16s\n", "n", "coprime pairs", "exact", "gap", "monte carlo");
    std::uint64_t n = 10;
    for (int e = 1; e <= max_exp; ++e, n *= 10) {
        const auto exact = coprime_pair_count(phi, n);
        const auto mc = estimate_coprime_pair(n, {200'000, 1, 1});
        std::printf("%14llu %24s %16.12f %12.3e %16.6f\n", static_cast<unsigned long long>(n),
                    to_string(exact.numerator).c_str(), exact.value, exact.value - limit, mc.estimate);
    }
    std::printf("%14s %24s %16.12f\n", "limit", "", limit);
}
