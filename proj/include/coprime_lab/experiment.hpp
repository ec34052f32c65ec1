#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

namespace coprime_lab {

/// Tag naming what a result measures. Shared by exact, analytic and Monte
/// Carlo routes so records from different routes line up.
enum class experiment {
    pair,
    odd_pair,
    gcd_eq,
    ktuple,
    triple3,
    squarefree,
    kfree,
    visible,
    fgcd,
    prime_density,
    gaussian,
    det,
};

inline constexpr std::array<std::pair<experiment, std::string_view>, 12> experiment_names{{
    {experiment::pair, "pair"},
    {experiment::odd_pair, "odd-pair"},
    {experiment::gcd_eq, "gcd-eq"},
    {experiment::ktuple, "ktuple"},
    {experiment::triple3, "triple3"},
    {experiment::squarefree, "squarefree"},
    {experiment::kfree, "kfree"},
    {experiment::visible, "visible"},
    {experiment::fgcd, "fgcd"},
    {experiment::prime_density, "prime-density"},
    {experiment::gaussian, "gaussian"},
    {experiment::det, "det"},
}};

constexpr std::string_view to_string(experiment e) noexcept {
    for (const auto& [tag, name] : experiment_names)
        if (tag == e) return name;
    return "unknown";
}

constexpr std::optional<experiment> parse_experiment(std::string_view name) noexcept {
    for (const auto& [tag, tag_name] : experiment_names)
        if (tag_name == name) return tag;
    return std::nullopt;
}

}  // namespace coprime_lab
