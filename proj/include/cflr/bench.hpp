#pragma once

// Scaling experiments: instance families over a size ladder, median timings,
// and log-log slope fits.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cflr::bench {

enum class Family { dense_random, sparse_random, worst_case_output, dyck2_clique_gadget, apa_gadget };

Family parse_family(std::string_view name);
const char* family_name(Family f);

struct BenchPlan {
    Family family = Family::worst_case_output;
    std::string preset = "anbn";
    std::vector<std::size_t> ladder;
    std::size_t repetitions = 3;
    std::uint64_t seed = 1;
    double timeout_ms = 10000.0;
    /// true: one on-demand query per instance instead of all pairs.
    bool on_demand = false;
};

/// Throws PreconditionError unless the ladder is strictly increasing and
/// non-empty and repetitions >= 3.
void validate(const BenchPlan& plan);

/// key=value lines (`#` comments). Every `family=` line starts a new plan;
/// other keys: preset, ladder (comma separated), repetitions, seed,
/// timeout_ms, query (all_pairs | on_demand). Throws ParseError.
std::vector<BenchPlan> parse_plans(std::string_view text);

struct BenchRow {
    std::string family;
    std::string preset;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t output_size = 0;
    double median_ms = 0;
    double min_ms = 0;
    std::size_t facts = 0;
    bool timed_out = false;
    std::string digest;
};

struct SlopeFit {
    double slope = 0;
    /// Root-mean-square residual of the fit in log space.
    double residual = 0;
};

struct BenchResult {
    std::vector<BenchRow> rows;
    /// Set when a generator guardrail stopped the family early.
    std::string aborted;
    /// Time vs n over completed rows, when there are at least four.
    bool has_slope = false;
    SlopeFit time_slope;
};

/// Instance digests only: generation without timing.
std::vector<std::string> plan_digests(const BenchPlan& plan);

BenchResult run_bench(const BenchPlan& plan);

/// Ordinary least squares of log(y) on log(x). Throws PreconditionError with
/// fewer than four points or non-positive values.
SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y);

inline constexpr const char* kCsvHeader = "family,preset,n,m,output_size,median_ms,min_ms,facts,timed_out";

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);
/// Whitespace-separated columns n m output_size median_ms min_ms, with a
/// comment header, for plotting.
void write_dat(const BenchResult& result, std::ostream& out);

}  // namespace cflr::bench
