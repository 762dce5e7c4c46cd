#include <cmath>
#include <ostream>
#include <sstream>

#include "cflr/bench.hpp"
#include "cflr/error.hpp"

namespace cflr::bench {

Family parse_family(std::string_view name) {
    if (name == "dense_random") return Family::dense_random;
    if (name == "sparse_random") return Family::sparse_random;
    if (name == "worst_case_output") return Family::worst_case_output;
    if (name == "dyck2_clique_gadget") return Family::dyck2_clique_gadget;
    if (name == "apa_gadget") return Family::apa_gadget;
    throw LookupError("unknown bench family '" + std::string(name) + "'");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::dense_random: return "dense_random";
        case Family::sparse_random: return "sparse_random";
        case Family::worst_case_output: return "worst_case_output";
        case Family::dyck2_clique_gadget: return "dyck2_clique_gadget";
        case Family::apa_gadget: return "apa_gadget";
    }
    return "?";
}

void validate(const BenchPlan& plan) {
    if (plan.ladder.empty()) throw PreconditionError("empty size ladder");
    for (std::size_t i = 1; i < plan.ladder.size(); ++i)
        if (plan.ladder[i] <= plan.ladder[i - 1]) throw PreconditionError("size ladder must be strictly increasing");
    if (plan.repetitions < 3) throw PreconditionError("repetitions must be at least 3");
    if (!(plan.timeout_ms > 0)) throw PreconditionError("timeout_ms must be positive");
}

namespace {

std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::uint64_t to_uint(const std::string& v, std::size_t line) {
    try {
        std::size_t used = 0;
        unsigned long long x = std::stoull(v, &used);
        if (used != v.size() || v[0] == '-') throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ParseError("expected a non-negative integer, got '" + v + "'", line, 1);
    }
}

}  // namespace

std::vector<BenchPlan> parse_plans(std::string_view text) {
    std::vector<BenchPlan> plans;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value", line, 1);
        std::string key = trim(s.substr(0, eq)), value = trim(s.substr(eq + 1));
        if (key == "family") {
            plans.emplace_back();
            try {
                plans.back().family = parse_family(value);
            } catch (const LookupError& e) {
                throw ParseError(e.what(), line, eq + 2);
            }
            continue;
        }
        if (plans.empty()) throw ParseError("'" + key + "' before any family= line", line, 1);
        BenchPlan& p = plans.back();
        if (key == "preset") {
            p.preset = value;
        } else if (key == "ladder") {
            p.ladder.clear();
            std::istringstream items(value);
            std::string item;
            while (std::getline(items, item, ',')) p.ladder.push_back(to_uint(trim(item), line));
        } else if (key == "repetitions") {
            p.repetitions = to_uint(value, line);
        } else if (key == "seed") {
            p.seed = to_uint(value, line);
        } else if (key == "timeout_ms") {
            p.timeout_ms = static_cast<double>(to_uint(value, line));
        } else if (key == "query") {
            if (value != "all_pairs" && value != "on_demand")
                throw ParseError("query must be all_pairs or on_demand", line, eq + 2);
            p.on_demand = value == "on_demand";
        } else {
            throw ParseError("unknown key '" + key + "'", line, 1);
        }
    }
    if (plans.empty()) throw ParseError("plan has no family= line", line ? line : 1, 1);
    for (const auto& p : plans) validate(p);
    return plans;
}

SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw PreconditionError("fit_slope: x and y differ in length");
    if (x.size() < 4) throw PreconditionError("fit_slope: need at least 4 points");
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0) || !(y[i] > 0)) throw PreconditionError("fit_slope: values must be positive");
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
    }
    const double k = static_cast<double>(lx.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= k;
    my /= k;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    if (sxx == 0) throw PreconditionError("fit_slope: all sizes are equal");
    SlopeFit fit;
    fit.slope = sxy / sxx;
    double intercept = my - fit.slope * mx, ss = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        double r = ly[i] - (intercept + fit.slope * lx[i]);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / k);
    return fit;
}

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows)
        out << r.family << ',' << r.preset << ',' << r.n << ',' << r.m << ',' << r.output_size << ',' << r.median_ms
            << ',' << r.min_ms << ',' << r.facts << ',' << (r.timed_out ? 1 : 0) << '\n';
}

void write_dat(const BenchResult& result, std::ostream& out) {
    out << "# n m output_size median_ms min_ms\n";
    for (const auto& r : result.rows) {
        if (r.timed_out) continue;
        out << r.n << ' ' << r.m << ' ' << r.output_size << ' ' << r.median_ms << ' ' << r.min_ms << '\n';
    }
}

}  // namespace cflr::bench
