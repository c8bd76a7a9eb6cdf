#include "seifert/sweep.hpp"

#include <utility>

#include "seifert/errors.hpp"
#include "seifert/invariants.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace seifert {

namespace {

// Only genuinely absurd bounds are errors; an empty range (t_max < t_min,
// d_max < 1) enumerates nothing and succeeds.
void check_bounds(const SweepBounds& b) {
    if (b.t_min < 0)
        throw validation_error("sweep: t_min must be >= 0");
    if (b.n_max < 2)
        throw validation_error("sweep: n_max must be >= 2");
}

// All coprime pairs (n, q) with 2 <= n <= n_max and 0 < q < n, ordered by
// (n, q). This is the alphabet arms are drawn from.
std::vector<Arm> arm_pairs(long n_max) {
    std::vector<Arm> pairs;
    for (long n = 2; n <= n_max; ++n)
        for (long q = 1; q < n; ++q)
            if (gcd(Int(n), Int(q)) == 1)
                pairs.push_back(Arm{Int(n), Int(q)});
    return pairs;
}

struct GraphEval {
    bool valid = false;                  // e > 0
    bool matched = false;
    std::optional<QhdCaseTag> tag;
    Rational chi;
    Rational e;
};

GraphEval eval_graph(const StarGraph& sg, SweepFilter f) {
    GraphEval ev;
    ev.e = euler_e(sg);
    if (ev.e.sign() <= 0)
        return ev;
    ev.valid = true;
    ev.chi = chi(sg);
    switch (f) {
        case SweepFilter::qhd_cases:
            ev.tag = qhd_case_pattern(sg);
            ev.matched = ev.tag.has_value();
            break;
        case SweepFilter::chi_e_lt_1:
            ev.matched = ev.chi / ev.e < Rational(1);
            break;
        case SweepFilter::alpha_gt_minus_2:
            ev.matched = Rational(-1) - ev.chi / ev.e > Rational(-2);
            break;
        case SweepFilter::log_canonical:
            ev.matched = ev.chi.sign() <= 0;
            break;
    }
    return ev;
}

// The qhd-cases filter carries a mathematical guarantee (every matched
// graph has chi/e < 1); the ordinary sweep enforces it as an internal
// consistency check while qhd_soundness_sweep collects failures instead.
void enforce_qhd_guarantee(const StarGraph& sg, const GraphEval& ev) {
    if (ev.matched && !(ev.chi / ev.e < Rational(1)))
        throw consistency_error("sweep: matched case with chi/e >= 1 for " + emit_text(sg));
}

// Visits all non-decreasing index sequences of length m over [lo, count) in
// lexicographic order. visit(c) is called with the current sequence.
template <class Visit>
void for_each_multiset(int m, int lo, int count, std::vector<int>& c, Visit&& visit) {
    if (lo >= count)
        return;
    c.assign(static_cast<size_t>(m), lo);
    for (;;) {
        visit(c);
        int i = m - 1;
        while (i >= 0 && c[i] == count - 1)
            --i;
        if (i < 0)
            break;
        ++c[i];
        for (int j = i + 1; j < m; ++j)
            c[j] = c[i];
    }
}

StarGraph make_graph(long d, const std::vector<Arm>& pairs, const std::vector<int>& combo) {
    StarGraph sg;
    sg.genus = 0;
    sg.d = d;
    sg.arms.reserve(combo.size());
    for (int idx : combo)
        sg.arms.push_back(pairs[static_cast<size_t>(idx)]);
    return sg;
}

void record(SweepResult& r, const StarGraph& sg, const GraphEval& ev) {
    ++r.enumerated;
    if (!ev.valid)
        return;
    ++r.valid;
    if (!ev.matched)
        return;
    enforce_qhd_guarantee(sg, ev);
    r.matches.push_back(SweepMatch{sg, ev.chi, ev.e, ev.tag});
}

void append(SweepResult& into, SweepResult&& part) {
    into.enumerated += part.enumerated;
    into.valid += part.valid;
    into.matches.insert(into.matches.end(),
                        std::make_move_iterator(part.matches.begin()),
                        std::make_move_iterator(part.matches.end()));
}

// One parallel work unit for a fixed arm count t >= 1: all graphs with the
// given d whose first (smallest) arm is pairs[p]. The remaining t-1 arms
// range over non-decreasing sequences in [p, count), so chunks partition
// the combo space and concatenating them in (d, p) order reproduces the
// serial enumeration order exactly.
SweepResult run_chunk(int t, long d, int p, const std::vector<Arm>& pairs, SweepFilter f) {
    SweepResult r;
    const int count = static_cast<int>(pairs.size());
    std::vector<int> combo(static_cast<size_t>(t), p);
    std::vector<int> tail;
    auto visit_combo = [&](const std::vector<int>& full) {
        StarGraph sg = make_graph(d, pairs, full);
        record(r, sg, eval_graph(sg, f));
    };
    if (t == 1) {
        visit_combo(combo);
        return r;
    }
    for_each_multiset(t - 1, p, count, tail, [&](const std::vector<int>& rest) {
        for (int j = 1; j < t; ++j)
            combo[static_cast<size_t>(j)] = rest[static_cast<size_t>(j - 1)];
        visit_combo(combo);
    });
    return r;
}

// t = 0 contributes one armless graph per d; kept out of the chunk grid.
SweepResult run_armless(long d_max, SweepFilter f) {
    SweepResult r;
    for (long d = 1; d <= d_max; ++d) {
        StarGraph sg;
        sg.genus = 0;
        sg.d = d;
        record(r, sg, eval_graph(sg, f));
    }
    return r;
}

} // namespace

const char* to_string(SweepFilter f) {
    switch (f) {
        case SweepFilter::qhd_cases: return "qhd-cases";
        case SweepFilter::chi_e_lt_1: return "chi-e-lt-1";
        case SweepFilter::alpha_gt_minus_2: return "alpha-gt-minus2";
        case SweepFilter::log_canonical: return "log-canonical";
    }
    return "?";
}

std::optional<SweepFilter> sweep_filter_from_string(const std::string& s) {
    if (s == "qhd-cases" || s == "qhd_cases")
        return SweepFilter::qhd_cases;
    if (s == "chi-e-lt-1" || s == "chi_e_lt_1")
        return SweepFilter::chi_e_lt_1;
    if (s == "alpha-gt-minus2" || s == "alpha_gt_minus2")
        return SweepFilter::alpha_gt_minus_2;
    if (s == "log-canonical" || s == "log_canonical")
        return SweepFilter::log_canonical;
    return std::nullopt;
}

SweepResult sweep_graphs_serial(const SweepBounds& b, SweepFilter f) {
    check_bounds(b);
    const std::vector<Arm> pairs = arm_pairs(b.n_max);
    const int count = static_cast<int>(pairs.size());
    SweepResult total;
    std::vector<int> combo;
    for (int t = b.t_min; t <= b.t_max; ++t) {
        if (t == 0) {
            append(total, run_armless(b.d_max, f));
            continue;
        }
        for (long d = 1; d <= b.d_max; ++d) {
            for_each_multiset(t, 0, count, combo, [&](const std::vector<int>& c) {
                StarGraph sg = make_graph(d, pairs, c);
                record(total, sg, eval_graph(sg, f));
            });
        }
    }
    return total;
}

SweepResult sweep_graphs_parallel(const SweepBounds& b, SweepFilter f) {
    check_bounds(b);
    const std::vector<Arm> pairs = arm_pairs(b.n_max);
    const int count = static_cast<int>(pairs.size());
    SweepResult total;
    for (int t = b.t_min; t <= b.t_max; ++t) {
        if (t == 0) {
            append(total, run_armless(b.d_max, f));
            continue;
        }
        // Chunk c covers (d, p) = (1 + c / count, c % count).
        const long n_chunks = (b.d_max < 0 ? 0 : b.d_max) * count;
        std::vector<SweepResult> parts(static_cast<size_t>(n_chunks));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long c = 0; c < n_chunks; ++c) {
            const long d = 1 + c / count;
            const int p = static_cast<int>(c % count);
            parts[static_cast<size_t>(c)] = run_chunk(t, d, p, pairs, f);
        }
        for (auto& part : parts)
            append(total, std::move(part));
    }
    return total;
}

SweepResult sweep_graphs(const SweepBounds& b, SweepFilter f, bool parallel) {
    if (parallel)
        return sweep_graphs_parallel(b, f);
    return sweep_graphs_serial(b, f);
}

SoundnessResult qhd_soundness_sweep(const SweepBounds& bounds, bool parallel) {
    SoundnessResult out;
    // The ordinary sweep throws on the first guarantee violation; this
    // variant must keep going and report all of them, so it drives the
    // enumeration itself with a collecting check.
    check_bounds(bounds);
    const std::vector<Arm> pairs = arm_pairs(bounds.n_max);
    const int count = static_cast<int>(pairs.size());
    struct Part {
        unsigned long long enumerated = 0, valid = 0, matched = 0;
        std::vector<StarGraph> violations;
    };
    auto scan_graph = [](Part& part, const StarGraph& sg) {
        ++part.enumerated;
        Rational e = euler_e(sg);
        if (e.sign() <= 0)
            return;
        ++part.valid;
        if (!qhd_case_pattern(sg))
            return;
        ++part.matched;
        if (!(chi(sg) / e < Rational(1)))
            part.violations.push_back(sg);
    };
    auto merge = [&out](Part&& part) {
        out.enumerated += part.enumerated;
        out.valid += part.valid;
        out.matched += part.matched;
        out.violations.insert(out.violations.end(),
                              std::make_move_iterator(part.violations.begin()),
                              std::make_move_iterator(part.violations.end()));
    };
#ifndef _OPENMP
    (void)parallel;
#endif
    for (int t = bounds.t_min; t <= bounds.t_max; ++t) {
        if (t == 0) {
            Part part;
            for (long d = 1; d <= bounds.d_max; ++d) {
                StarGraph sg;
                sg.genus = 0;
                sg.d = d;
                scan_graph(part, sg);
            }
            merge(std::move(part));
            continue;
        }
        const long n_chunks = (bounds.d_max < 0 ? 0 : bounds.d_max) * count;
        std::vector<Part> parts(static_cast<size_t>(n_chunks));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (long c = 0; c < n_chunks; ++c) {
            const long d = 1 + c / count;
            const int p = static_cast<int>(c % count);
            std::vector<int> combo(static_cast<size_t>(t), p);
            std::vector<int> tail;
            Part& part = parts[static_cast<size_t>(c)];
            if (t == 1) {
                scan_graph(part, make_graph(d, pairs, combo));
                continue;
            }
            for_each_multiset(t - 1, p, count, tail, [&](const std::vector<int>& rest) {
                for (int j = 1; j < t; ++j)
                    combo[static_cast<size_t>(j)] = rest[static_cast<size_t>(j - 1)];
                scan_graph(part, make_graph(d, pairs, combo));
            });
        }
        for (auto& part : parts)
            merge(std::move(part));
    }
    return out;
}

} // namespace seifert
