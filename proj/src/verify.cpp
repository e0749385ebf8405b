#include "bch/verify.hpp"

#include <atomic>
#include <optional>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "bch/bose.hpp"
#include "bch/classify.hpp"
#include "bch/lemmas.hpp"
#include "bch/nonnarrow.hpp"
#include "bch/reference.hpp"

namespace bch {

namespace {

std::string tuple_tag(const BchParams& p) {
    std::ostringstream os;
    os << "q=" << to_string(p.q) << " m=" << to_string(p.m) << " lambda=" << to_string(p.lambda);
    return os.str();
}

template <typename... Parts>
std::string line(const Parts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

// q^m - 1 if it stays within the limit, nothing otherwise (also on overflow).
std::optional<Int> modulus_within(Int q, Int m, Int limit) {
    Int value = 1;
    for (Int i = 0; i < m; ++i) {
        if (value > limit / q + 1) return std::nullopt;
        value *= q;
    }
    if (value - 1 > limit) return std::nullopt;
    return value - 1;
}

// All (q, m, lambda) tuples of the grid.
std::vector<BchParams> grid_params(const Grid& grid) {
    std::vector<BchParams> out;
    for (Int q : grid_prime_powers(grid.q_max)) {
        for (Int m = grid.m_min; m <= grid.m_max; ++m) {
            if (!modulus_within(q, m, grid.modulus_limit)) break;
            for (Int lambda : divisors(q - 1)) out.push_back(make_params(q, m, lambda));
        }
    }
    return out;
}

// Membership bitmaps for S and H modulo q^m - 1, one coset sweep.
struct SHMaps {
    std::vector<bool> in_s;
    std::vector<bool> in_h;
};

SHMaps build_sh_maps(Int q, Int m) {
    Int modulus = checked_sub(checked_pow(q, m), 1);
    CosetTable table = build_coset_table(modulus, q);
    SHMaps maps;
    std::size_t size = static_cast<std::size_t>(modulus);
    maps.in_s.assign(size, false);
    maps.in_h.assign(size, false);
    for (Int a = 1; a < modulus; ++a) {
        std::size_t idx = static_cast<std::size_t>(a);
        bool leader = table.leader_of(a) == a;
        maps.in_s[idx] = a % q != 0 && !leader;
        maps.in_h[idx] = m % 2 == 0 && leader && table.size_of(a) == m / 2;
    }
    return maps;
}

Int count_in(const std::vector<bool>& flag, Int lo, Int hi, Int lambda) {
    Int count = 0;
    Int start = ceil_div(lo, lambda) * lambda;
    for (Int a = start; a <= hi; a += lambda)
        if (flag[static_cast<std::size_t>(a)]) ++count;
    return count;
}

std::vector<std::string> sweep_dimension_bose_one(const BchParams& p) {
    std::vector<std::string> bad;
    Int dim_top = delta_max_dimension(p);
    Int bose_top = delta_max_bose(p);
    std::vector<Int> oracle_dims = dimension_oracle_sweep(p, dim_top);
    std::vector<Int> oracle_bose = bose_oracle_sweep(p, bose_top);
    for (Int delta = 2; delta <= dim_top; ++delta) {
        Int got = dimension(p, delta);
        Int want = oracle_dims[static_cast<std::size_t>(delta)];
        if (got != want)
            bad.push_back(line("dimension ", tuple_tag(p), " delta=", delta, ": closed=", got,
                               " oracle=", want));
    }
    for (Int delta = 2; delta <= bose_top; ++delta) {
        Int got = bose_distance(p, delta);
        Int want = oracle_bose[static_cast<std::size_t>(delta)];
        if (got != want)
            bad.push_back(
                line("bose ", tuple_tag(p), " delta=", delta, ": closed=", got, " oracle=", want));
    }
    return bad;
}

std::vector<std::string> sweep_fast_paths_one(const BchParams& p) {
    std::vector<std::string> bad;
    Int q = p.q, lambda = p.lambda;
    bool odd = p.m % 2 == 1;
    Int small_top = odd ? checked_sub(checked_pow(q, p.h + 2), 1) / lambda + 1
                        : checked_sub(checked_pow(q, p.h + 1), 1) / lambda + 1;
    for (Int delta = 2; delta <= small_top; ++delta) {
        Int got = odd ? dimension_odd_small(p, delta) : dimension_even_small(p, delta);
        Int want = dimension(p, delta);
        if (got != want)
            bad.push_back(line(odd ? "dimension_odd_small " : "dimension_even_small ", tuple_tag(p),
                               " delta=", delta, ": fast=", got, " general=", want));
    }
    Int k_lo = odd ? 1 : 0;
    Int k_hi = (2 * p.m - 1) / 3 - p.h;
    for (Int k = k_lo; k <= k_hi; ++k) {
        Int b_top = checked_pow(q, p.m - p.h - k);
        for (Int a = 1; a <= q - 1; ++a) {
            for (Int b = lambda; b <= b_top; ++b) {
                if (b % q == 0) continue;
                Int lam_delta = checked_add(checked_mul(a, checked_pow(q, p.h + k)), b);
                if (lam_delta % lambda != 0) continue;
                Int delta = lam_delta / lambda;
                Int got_dim = dimension_special_ab(p, k, a, b);
                Int want_dim = dimension(p, delta);
                if (got_dim != want_dim)
                    bad.push_back(line("dimension_special_ab ", tuple_tag(p), " k=", k, " a=", a,
                                       " b=", b, ": fast=", got_dim, " general=", want_dim));
                Int got_bose = bose_special_ab(p, k, a, b);
                Int want_bose = bose_distance(p, delta);
                if (got_bose != want_bose)
                    bad.push_back(line("bose_special_ab ", tuple_tag(p), " k=", k, " a=", a, " b=", b,
                                       ": fast=", got_bose, " general=", want_bose));
            }
        }
    }
    return bad;
}

std::vector<std::string> sweep_structure_one(Int q, Int m) {
    std::vector<std::string> bad;
    bool odd = m % 2 == 1;
    Int h = m / 2;
    for (Int k = m - 2 * h; k <= band_k_max(m); ++k) {
        Int lo = checked_pow(q, h + k);
        Int hi = checked_mul(lo, q) - 1;
        Int i_lo = odd ? -k + 1 : -k;
        for (Int a = lo; a <= hi; ++a) {
            Int memberships = 0;
            for (Int i = i_lo; i <= k; ++i)
                if (odd ? in_A(a, q, m, k, i) : in_B(a, q, m, k, i)) ++memberships;
            bool want = odd ? in_S_brute(a, q, m)
                            : in_S_brute(a, q, m) || in_H_brute(a, q, m);
            if (memberships > 1)
                bad.push_back(line("band sets overlap q=", q, " m=", m, " k=", k, " a=", a));
            if ((memberships == 1) != want)
                bad.push_back(line("band decomposition q=", q, " m=", m, " k=", k, " a=", a,
                                   ": pattern=", memberships, " brute=", want ? 1 : 0));
        }
    }
    if (!odd) {
        for (Int k = 0; k <= band_k_max(m); ++k) {
            Int lo = checked_pow(q, h + k);
            Int hi = checked_mul(lo, q) - 1;
            for (Int a = lo; a <= hi; ++a) {
                bool structural = in_H_palindrome(a, q, m, k);
                bool brute = in_H_brute(a, q, m);
                if (structural != brute)
                    bad.push_back(line("H palindrome q=", q, " m=", m, " k=", k, " a=", a,
                                       ": pattern=", structural, " brute=", brute));
            }
        }
    }
    return bad;
}

std::vector<std::string> sweep_lemmas_one(Int q, Int lambda, bool full) {
    std::vector<std::string> bad;
    Int xy_max = full ? 50 : 20;
    Int k_max = full ? 3 : 2;
    auto check = [&bad](Int got, Int want, const std::string& what) {
        if (got != want) bad.push_back(what + ": closed=" + to_string(got) + " brute=" + to_string(want));
    };
    for (Int x = 1; x <= xy_max; ++x)
        for (Int y = 1; y <= xy_max; ++y)
            check(count_shifted_multiples(x, y, lambda, q), count_shifted_multiples_brute(x, y, lambda, q),
                  line("count_shifted_multiples q=", q, " lambda=", lambda, " x=", x, " y=", y));
    for (Int x = 0; x <= xy_max; ++x)
        for (Int y = x; y <= xy_max; ++y)
            check(count_double_multiples(x, y, lambda, q), count_double_multiples_brute(x, y, lambda, q),
                  line("count_double_multiples q=", q, " lambda=", lambda, " x=", x, " y=", y));
    for (Int x = 0; x <= xy_max; ++x)
        for (Int y = 0; y <= xy_max; ++y)
            check(sum_floor_diff(x, y, lambda, q), sum_floor_diff_brute(x, y, lambda, q),
                  line("sum_floor_diff q=", q, " lambda=", lambda, " x=", x, " y=", y));
    for (Int a = 1; a <= q; ++a)
        check(sum_carry_triangle(a, lambda, q), sum_carry_triangle_brute(a, lambda, q),
              line("sum_carry_triangle q=", q, " lambda=", lambda, " a=", a));
    for (Int x = 0; x <= 2 * xy_max; x += 2)
        check(sum_double_vs_single(x, lambda, q), sum_double_vs_single_brute(x, lambda, q),
              line("sum_double_vs_single q=", q, " lambda=", lambda, " x=", x));
    for (Int k = 1; k <= k_max; ++k) {
        for (Int a = 1; a <= q; ++a) {
            check(sum_band_2t(k, a, lambda, q), sum_band_2t_brute(k, a, lambda, q),
                  line("sum_band_2t q=", q, " lambda=", lambda, " k=", k, " a=", a));
            for (Int i = -k + 1; i <= k; ++i)
                check(sum_band_shift(k, a, i, lambda, q, StepKind::ODD_STEP),
                      sum_band_shift_brute(k, a, i, lambda, q, StepKind::ODD_STEP),
                      line("sum_band_shift/odd q=", q, " lambda=", lambda, " k=", k, " a=", a, " i=", i));
            for (Int i = -k; i <= k; ++i) {
                if (i == 0) continue;
                check(sum_band_shift(k, a, i, lambda, q, StepKind::EVEN_STEP),
                      sum_band_shift_brute(k, a, i, lambda, q, StepKind::EVEN_STEP),
                      line("sum_band_shift/even q=", q, " lambda=", lambda, " k=", k, " a=", a, " i=", i));
            }
        }
    }
    if (lambda == 1) {  // lead2 has no lambda in it
        for (Int k = 0; k <= k_max; ++k)
            for (Int a = 1; a <= q; ++a)
                check(sum_N_band(k, a, q), sum_N_band_brute(k, a, q),
                      line("sum_N_band q=", q, " k=", k, " a=", a));
    }
    return bad;
}

std::vector<std::string> sweep_assertions_one(const BchParams& p, const SHMaps& maps) {
    std::vector<std::string> bad;
    Int q = p.q, lambda = p.lambda, h = p.h;
    bool odd = p.m % 2 == 1;
    std::vector<bool> s_union_h;
    if (!odd) {
        s_union_h.resize(maps.in_s.size());
        for (std::size_t i = 0; i < s_union_h.size(); ++i) s_union_h[i] = maps.in_s[i] || maps.in_h[i];
    }
    // per-band counts once per k (they do not depend on delta)
    for (Int k = std::max<Int>(1, p.m - 2 * h); k <= band_k_max(p.m); ++k) {
        Int lo = checked_pow(q, h + k);
        Int hi = checked_mul(lo, q) - 1;
        Int i_lo = odd ? -k + 1 : -k;
        for (Int i = i_lo; i <= k; ++i) {
            if (!odd && i == 0) continue;
            Int brute = 0;
            for (Int a = ceil_div(lo, lambda) * lambda; a <= hi; a += lambda)
                if (odd ? in_A(a, q, p.m, k, i) : in_B(a, q, p.m, k, i)) ++brute;
            Int closed = assertion3_count(p, k, i);
            if (closed != brute)
                bad.push_back(line("assertion3 ", tuple_tag(p), " k=", k, " i=", i, ": closed=", closed,
                                   " brute=", brute));
        }
    }
    if (!odd) {
        for (Int k = 0; k <= band_k_max(p.m); ++k) {
            Int lo = checked_pow(q, h + k);
            Int hi = checked_mul(lo, q) - 1;
            Int brute0 = 0;
            for (Int a = ceil_div(lo, lambda) * lambda; a <= hi; a += lambda)
                if (in_B(a, q, p.m, k, 0)) ++brute0;
            Int closed0 = assertion4_count(p, k);
            if (closed0 != brute0)
                bad.push_back(
                    line("assertion4 ", tuple_tag(p), " k=", k, ": closed=", closed0, " brute=", brute0));
            Int bruteH = count_in(maps.in_h, lo, hi, lambda);
            Int closedH = assertion5_count(p, k);
            if (closedH != bruteH)
                bad.push_back(
                    line("assertion5 ", tuple_tag(p), " k=", k, ": closed=", closedH, " brute=", bruteH));
        }
    }

    Int threshold = checked_sub(checked_pow(q, p.m - h), 1) / lambda + 1;
    for (Int delta = threshold + 1; delta <= delta_max_dimension(p); ++delta) {
        DeltaProfile prof = delta_profile(p, delta);
        AssertionCounts counts = count_assertions(p, delta);
        Int w = *prof.w_delta;
        Int lam_dm1 = prof.lam_dm1;
        Int band_lo = checked_pow(q, h + prof.k_delta);
        const std::vector<bool>& main_map = odd ? maps.in_s : s_union_h;
        Int brute_tail = count_in(main_map, w, lam_dm1, lambda);
        if (counts.tail_segment != brute_tail)
            bad.push_back(line("assertion1 ", tuple_tag(p), " delta=", delta,
                               ": closed=", counts.tail_segment, " brute=", brute_tail));
        Int brute_head = count_in(main_map, band_lo, w - 1, lambda);
        if (counts.band_head != brute_head)
            bad.push_back(line("assertion2 ", tuple_tag(p), " delta=", delta,
                               ": closed=", counts.band_head, " brute=", brute_head));
        if (!odd) {
            Int w_h = checked_mul(*prof.phi + 1, checked_pow(q, h));
            Int brute_tail_h = count_in(maps.in_h, w_h, lam_dm1, lambda);
            if (*counts.tail_segment_h != brute_tail_h)
                bad.push_back(line("assertion1/H ", tuple_tag(p), " delta=", delta,
                                   ": closed=", *counts.tail_segment_h, " brute=", brute_tail_h));
            Int brute_head_h = count_in(maps.in_h, band_lo, w_h - 1, lambda);
            if (*counts.band_head_h != brute_head_h)
                bad.push_back(line("assertion2/H ", tuple_tag(p), " delta=", delta,
                                   ": closed=", *counts.band_head_h, " brute=", brute_head_h));
        }
    }
    return bad;
}

std::vector<std::string> sweep_nonnarrow_one(const BchParams& p) {
    std::vector<std::string> bad;
    Int lo = checked_sub(checked_pow(p.q, p.m - p.h), 1) / p.lambda + 1;
    Int hi = delta_max_bose(p);
    for (Int b = lo; b < hi; ++b) {
        EligibilityReport rep = nonnarrow_report(p, b);
        if (!rep.delta_max) continue;
        Int delta_max = *rep.delta_max;
        std::vector<bool> in_union(static_cast<std::size_t>(p.n), false);
        bool clean = true;
        for (Int a = b; a <= b + delta_max - 2 && clean; ++a) {
            Int x = a % p.n;
            Int added = 0;
            Int y = x;
            do {
                if (!in_union[static_cast<std::size_t>(y)]) {
                    in_union[static_cast<std::size_t>(y)] = true;
                    ++added;
                }
                y = y * p.q % p.n;
            } while (y != x);
            if (added != p.m) {
                bad.push_back(line("nonnarrow ", tuple_tag(p), " b=", b, " a=", a, ": coset adds ",
                                   added, " elements, want m=", p.m));
                clean = false;
            }
        }
        if (!clean) continue;
        // defining set must still grow at delta_max + 1 (the d_B condition)
        Int next = (b + delta_max - 1) % p.n;
        Int y = next;
        bool grows = false;
        do {
            if (!in_union[static_cast<std::size_t>(y)]) grows = true;
            y = y * p.q % p.n;
        } while (y != next);
        if (!grows)
            bad.push_back(line("nonnarrow ", tuple_tag(p), " b=", b,
                               ": defining set stalls at delta_max=", delta_max));
        // cross-check the closed forms at the extremes
        for (Int delta : {Int(2), delta_max}) {
            if (delta < 2 || delta > delta_max) continue;
            Int got = nonnarrow_dimension(p, delta, b);
            Int want = dimension_oracle(p, delta, b);
            if (got != want)
                bad.push_back(line("nonnarrow_dimension ", tuple_tag(p), " b=", b, " delta=", delta,
                                   ": closed=", got, " oracle=", want));
            Int got_bose = nonnarrow_bose(p, delta, b);
            Int want_bose = bose_oracle(p, delta, b);
            if (got_bose != want_bose)
                bad.push_back(line("nonnarrow_bose ", tuple_tag(p), " b=", b, " delta=", delta,
                                   ": closed=", got_bose, " oracle=", want_bose));
        }
    }
    return bad;
}

}  // namespace

std::vector<Int> grid_prime_powers(Int q_max) {
    std::vector<Int> out;
    for (Int q : {2, 3, 4, 5, 7, 8, 9})
        if (q <= q_max) out.push_back(q);
    return out;
}

std::vector<Int> divisors(Int x) {
    std::vector<Int> out;
    for (Int d = 1; d <= x; ++d)
        if (x % d == 0) out.push_back(d);
    return out;
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("BCH_PARALLEL")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<std::string> run_tasks(std::vector<SweepTask> tasks, int workers) {
    std::vector<std::vector<std::string>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            results[i] = tasks[i]();
        }
    };
    int n = std::max(1, workers);
    std::vector<std::thread> pool;
    for (int t = 0; t < n - 1; ++t) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();
    std::vector<std::string> merged;
    for (const auto& r : results) merged.insert(merged.end(), r.begin(), r.end());
    return merged;
}

std::vector<std::string> verify_dimension_bose(const Grid& grid, int workers) {
    std::vector<SweepTask> tasks;
    for (const BchParams& p : grid_params(grid))
        tasks.push_back([p] { return sweep_dimension_bose_one(p); });
    return run_tasks(std::move(tasks), workers);
}

std::vector<std::string> verify_fast_paths(const Grid& grid, int workers) {
    std::vector<SweepTask> tasks;
    for (const BchParams& p : grid_params(grid))
        tasks.push_back([p] { return sweep_fast_paths_one(p); });
    return run_tasks(std::move(tasks), workers);
}

std::vector<std::string> verify_structure(int workers) {
    std::vector<SweepTask> tasks;
    for (Int m : {5, 7, 4, 6}) {
        std::vector<Int> qs = m % 2 == 1 ? std::vector<Int>{2, 3, 4} : std::vector<Int>{2, 3, 4, 5};
        for (Int q : qs)
            tasks.push_back([q, m] { return sweep_structure_one(q, m); });
    }
    return run_tasks(std::move(tasks), workers);
}

std::vector<std::string> verify_lemmas(bool full, int workers) {
    std::vector<SweepTask> tasks;
    for (Int q : grid_prime_powers(full ? 9 : 4))
        for (Int lambda : divisors(q - 1))
            tasks.push_back([q, lambda, full] { return sweep_lemmas_one(q, lambda, full); });
    return run_tasks(std::move(tasks), workers);
}

std::vector<std::string> verify_assertions(const Grid& grid, int workers) {
    // group by (q, m) so each task builds its S/H maps once
    std::vector<SweepTask> tasks;
    for (Int q : grid_prime_powers(grid.q_max)) {
        for (Int m = grid.m_min; m <= grid.m_max; ++m) {
            if (!modulus_within(q, m, grid.modulus_limit)) break;
            tasks.push_back([q, m] {
                SHMaps maps = build_sh_maps(q, m);
                std::vector<std::string> bad;
                for (Int lambda : divisors(q - 1)) {
                    auto one = sweep_assertions_one(make_params(q, m, lambda), maps);
                    bad.insert(bad.end(), one.begin(), one.end());
                }
                return bad;
            });
        }
    }
    return run_tasks(std::move(tasks), workers);
}

std::vector<std::string> verify_nonnarrow(const Grid& grid, int workers) {
    std::vector<SweepTask> tasks;
    for (const BchParams& p : grid_params(grid))
        tasks.push_back([p] { return sweep_nonnarrow_one(p); });
    return run_tasks(std::move(tasks), workers);
}

}  // namespace bch
