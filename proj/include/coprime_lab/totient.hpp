#pragma once

// Summatory totient Phi(n) = phi(1) + ... + phi(n).
//
// Below the crossover the value comes from prefix sums over the sieve. Above
// it we use
//
//     Phi(n) = n(n+1)/2 - sum_{d=2}^{n} Phi(floor(n/d))
//
// with the d-range split into blocks of equal quotient. Every value needed is
// either <= crossover or of the form floor(n/k), so the memo is a flat array
// indexed by floor(n/m).

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "checked.hpp"
#include "sieve.hpp"

namespace coprime_lab {

class totient_summator {
public:
    static constexpr std::uint64_t max_memo_entries = 50'000'000;

    /// Uses prefix sums up to `crossover` (clamped to the sieve limit).
    explicit totient_summator(std::shared_ptr<const sieve_tables> tables, std::uint64_t crossover = 0)
        : tables_(std::move(tables)) {
        if (!tables_) throw invalid_input_error("totient_summator needs sieve tables");
        crossover_ = (crossover == 0 || crossover > tables_->limit()) ? tables_->limit() : crossover;
        prefix_.resize(crossover_ + 1);
        prefix_[0] = 0;
        const auto phi = tables_->phi_table();
        for (std::uint64_t k = 1; k <= crossover_; ++k) prefix_[k] = prefix_[k - 1] + phi[k];
    }

    std::uint64_t crossover() const noexcept { return crossover_; }
    const sieve_tables& tables() const noexcept { return *tables_; }
    const std::shared_ptr<const sieve_tables>& shared_tables() const noexcept { return tables_; }

    /// Exact Phi(n). Throws resource_limit_error when the memo for n would
    /// exceed max_memo_entries.
    u128 operator()(std::uint64_t n) const {
        if (n <= crossover_) return prefix_[n];
        if (n / crossover_ > max_memo_entries)
            throw resource_limit_error("totient_sum(" + std::to_string(n) + ") needs a larger sieve than " +
                                       std::to_string(crossover_));
        std::vector<u128> memo(n / crossover_ + 2, 0);
        std::vector<bool> known(memo.size(), false);
        return large(n, n, memo, known);
    }

private:
    // Phi(m) for m = floor(n/k) > crossover_; memo slot floor(n/m), which is
    // injective on quotient values.
    u128 large(std::uint64_t n, std::uint64_t m, std::vector<u128>& memo, std::vector<bool>& known) const {
        const std::uint64_t v = n / m;
        if (known[v]) return memo[v];
        u128 total = checked::mul(static_cast<u128>(m), static_cast<u128>(m) + 1, "Phi triangular term") / 2;
        for (std::uint64_t d = 2; d <= m;) {
            const std::uint64_t q = m / d;
            const std::uint64_t d_hi = m / q;
            const u128 sub = q <= crossover_ ? u128{prefix_[q]} : large(n, q, memo, known);
            total = checked::sub(total, checked::mul(static_cast<u128>(d_hi - d + 1), sub, "Phi block"),
                                 "Phi recurrence");
            d = d_hi + 1;
        }
        memo[v] = total;
        known[v] = true;
        return total;
    }

    std::shared_ptr<const sieve_tables> tables_;
    std::uint64_t crossover_ = 0;
    std::vector<std::uint64_t> prefix_;
};

}  // namespace coprime_lab
