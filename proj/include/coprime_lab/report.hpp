#pragma once

// Experiment records and their JSON-lines / CSV renderings.
//
// Counts are 128-bit and are written as bare decimal literals, which is why
// the JSON is assembled by hand rather than through a DOM.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "analytic_constants.hpp"
#include "checked.hpp"
#include "exact_densities.hpp"
#include "monte_carlo.hpp"

namespace coprime_lab {

inline constexpr std::string_view tool_version = "0.1.0";

inline constexpr std::string_view csv_header =
    "experiment,n,numerator,denominator,value,reference,abs_gap,ci_low,ci_high,seed,elapsed_ms";

using param_value = std::variant<std::int64_t, double, std::string>;

struct experiment_record {
    std::string experiment;
    std::optional<std::uint64_t> n;  ///< size parameter shown in the CSV n column
    std::vector<std::pair<std::string, param_value>> params;
    std::optional<u128> numerator;
    std::optional<u128> denominator;
    double value = 0.0;
    std::optional<double> reference;
    std::optional<double> abs_gap;
    std::optional<std::pair<double, double>> ci95;
    std::optional<std::uint64_t> seed;
    std::uint64_t elapsed_ms = 0;
    std::string version{tool_version};
};

/// 12 significant digits, trailing zeros dropped. Non-finite values have no
/// JSON spelling and render as null.
inline std::string format_real(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string json_quote(std::string_view s) {
    std::string out = "\"";
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

inline std::string render_param(const param_value& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&v)) return format_real(*d);
    return json_quote(std::get<std::string>(v));
}

inline std::string to_json(const experiment_record& r) {
    std::string s = "{\"experiment\":" + json_quote(r.experiment) + ",\"params\":{";
    for (std::size_t i = 0; i < r.params.size(); ++i) {
        if (i) s += ',';
        s += json_quote(r.params[i].first) + ':' + render_param(r.params[i].second);
    }
    s += '}';
    if (r.numerator) s += ",\"numerator\":" + to_string(*r.numerator);
    if (r.denominator) s += ",\"denominator\":" + to_string(*r.denominator);
    s += ",\"value\":" + format_real(r.value);
    if (r.reference) s += ",\"reference\":" + format_real(*r.reference);
    if (r.abs_gap) s += ",\"abs_gap\":" + format_real(*r.abs_gap);
    if (r.ci95) s += ",\"ci95\":[" + format_real(r.ci95->first) + ',' + format_real(r.ci95->second) + ']';
    if (r.seed) s += ",\"seed\":" + std::to_string(*r.seed);
    s += ",\"elapsed_ms\":" + std::to_string(r.elapsed_ms);
    s += ",\"tool_version\":" + json_quote(r.version) + '}';
    return s;
}

inline std::string to_csv(const experiment_record& r) {
    auto opt_real = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
    std::string s = r.experiment;
    s += ',' + (r.n ? std::to_string(*r.n) : std::string());
    s += ',' + (r.numerator ? to_string(*r.numerator) : std::string());
    s += ',' + (r.denominator ? to_string(*r.denominator) : std::string());
    s += ',' + format_real(r.value);
    s += ',' + opt_real(r.reference);
    s += ',' + opt_real(r.abs_gap);
    s += ',' + (r.ci95 ? format_real(r.ci95->first) : std::string());
    s += ',' + (r.ci95 ? format_real(r.ci95->second) : std::string());
    s += ',' + (r.seed ? std::to_string(*r.seed) : std::string());
    s += ',' + std::to_string(r.elapsed_ms);
    return s;
}

enum class output_format { json, csv };

/// Writes one record per line and flushes after each.
class record_writer {
public:
    record_writer(std::ostream& out, output_format format) : out_(out), format_(format) {}

    void write(const experiment_record& r) {
        if (format_ == output_format::csv && !header_written_) {
            out_ << csv_header << '\n';
            header_written_ = true;
        }
        out_ << (format_ == output_format::json ? to_json(r) : to_csv(r)) << '\n';
        out_.flush();
    }

private:
    std::ostream& out_;
    output_format format_;
    bool header_written_ = false;
};

// ---------------------------------------------------------------------------
// Conversions from module results
// ---------------------------------------------------------------------------

inline experiment_record to_record(const density_result& d) {
    experiment_record r;
    r.experiment = std::string(to_string(d.kind));
    r.n = d.n;
    const char* n_name = d.kind == experiment::visible ? "radius" : d.kind == experiment::prime_density ? "x" : "n";
    r.params.emplace_back(n_name, static_cast<std::int64_t>(d.n));
    switch (d.kind) {
        case experiment::gcd_eq: r.params.emplace_back("t", static_cast<std::int64_t>(d.order)); break;
        case experiment::ktuple: r.params.emplace_back("k", static_cast<std::int64_t>(d.order)); break;
        case experiment::squarefree:
        case experiment::kfree: r.params.emplace_back("j", static_cast<std::int64_t>(d.order)); break;
        default: break;
    }
    r.numerator = d.numerator;
    r.denominator = d.denominator;
    r.value = d.value;
    r.reference = d.reference;
    r.abs_gap = d.abs_gap;
    return r;
}

inline experiment_record to_record(const mc_estimate& e, std::optional<double> reference = std::nullopt) {
    experiment_record r;
    r.experiment = std::string(to_string(e.kind));
    for (const auto& [key, val] : e.params) {
        r.params.emplace_back(key, val);
        if (key == "range_max" || key == "box") r.n = static_cast<std::uint64_t>(val);
    }
    if (e.kind == experiment::det) r.n = static_cast<std::uint64_t>(e.params.at("entry_max"));
    r.params.emplace_back("trials", static_cast<std::int64_t>(e.trials));
    r.params.emplace_back("successes", static_cast<std::int64_t>(e.successes));
    r.params.emplace_back("generator", e.generator);
    r.value = e.estimate;
    r.ci95 = std::pair{e.ci_low, e.ci_high};
    r.seed = e.seed;
    if (reference) {
        r.reference = reference;
        r.abs_gap = std::fabs(e.estimate - *reference);
    }
    return r;
}

inline experiment_record to_record(std::string name, const constant_value& c,
                                   std::vector<std::pair<std::string, param_value>> extra = {}) {
    experiment_record r;
    r.experiment = std::move(name);
    r.params = std::move(extra);
    r.params.emplace_back("abs_error_bound", c.abs_error_bound);
    r.params.emplace_back("method", std::string(to_string(c.method)));
    for (const auto& [key, val] : c.params) r.params.emplace_back(key, static_cast<std::int64_t>(val));
    r.value = c.value;
    return r;
}

}  // namespace coprime_lab
