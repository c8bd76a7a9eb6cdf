#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seifert/classify.hpp"
#include "seifert/star_graph.hpp"

namespace seifert {

// Exhaustive enumeration domain: genus-0 graphs with t_min <= t <= t_max,
// 1 <= d <= d_max, arms drawn (with repetition, non-decreasing) from all
// coprime pairs 2 <= n <= n_max, 0 < q < n. Enumeration order is
// lexicographic in (t, d, arms) with pairs ordered by (n, q); arms sorted
// non-decreasing makes it duplicate-free.
struct SweepBounds {
    int t_min = 3;
    int t_max = 3;
    long d_max = 1;
    long n_max = 2;
};

enum class SweepFilter { qhd_cases, chi_e_lt_1, alpha_gt_minus_2, log_canonical };

const char* to_string(SweepFilter f);
std::optional<SweepFilter> sweep_filter_from_string(const std::string& s);

struct SweepMatch {
    StarGraph graph;
    Rational chi;
    Rational e;
    std::optional<QhdCaseTag> matched_case;   // set by the qhd-cases filter
};

struct SweepResult {
    unsigned long long enumerated = 0;   // all (t, d, arms) tuples visited
    unsigned long long valid = 0;        // those with e > 0
    std::vector<SweepMatch> matches;     // in enumeration order
};

// Serial reference: plain nested loops, kept deliberately simple so the
// parallel driver has something trustworthy to be compared against.
SweepResult sweep_graphs_serial(const SweepBounds& b, SweepFilter f);

// Chunked driver: the (d, first-arm) grid is distributed across OpenMP
// threads and per-chunk results are concatenated in chunk order, so the
// output is identical to the serial reference byte for byte. Falls back to
// the same chunked loop on a single thread without OpenMP.
SweepResult sweep_graphs_parallel(const SweepBounds& b, SweepFilter f);

SweepResult sweep_graphs(const SweepBounds& b, SweepFilter f, bool parallel = true);

// Soundness form of the qhd-cases sweep: instead of trusting the pattern
// guarantee, it records every matched graph whose chi/e fails to be < 1.
// An empty violation list over an exhaustive range is the executable form
// of the guarantee.
struct SoundnessResult {
    unsigned long long enumerated = 0;
    unsigned long long valid = 0;
    unsigned long long matched = 0;
    std::vector<StarGraph> violations;
};

SoundnessResult qhd_soundness_sweep(const SweepBounds& b, bool parallel = true);

} // namespace seifert
