// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria run the library's exhaustive sweeps at their full grids,
// so this binary is the project's end-to-end gate.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bch/bose.hpp"
#include "bch/nonnarrow.hpp"
#include "bch/reference.hpp"
#include "bch/verify.hpp"

using bch::Int;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, const std::vector<std::string>& problems,
            double seconds) {
    if (problems.empty()) {
        std::printf("criterion %d [%s]: PASS (%.2f s)\n", number, name.c_str(), seconds);
        return;
    }
    ++g_failures;
    std::printf("criterion %d [%s]: FAIL (%.2f s, %zu problem(s))\n", number, name.c_str(), seconds,
                problems.size());
    std::size_t shown = 0;
    for (const std::string& p : problems) {
        std::printf("    %s\n", p.c_str());
        if (++shown == 20 && problems.size() > 20) {
            std::printf("    ... %zu more\n", problems.size() - shown);
            break;
        }
    }
}

void run_criterion(int number, const std::string& name,
                   const std::function<std::vector<std::string>()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> problems;
    try {
        problems = body();
    } catch (const std::exception& e) {
        problems.push_back(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, name, problems, seconds);
}

std::string run_tool(const std::string& args, int& status) {
    std::string cmd = std::string(BCHTOOL_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return "";
    }
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int rc = pclose(pipe);
    status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return out;
}

struct Expected {
    Int delta;
    Int dim;
    Int bose;
};

// Table I rows, via the CLI's csv output.
std::vector<std::string> criterion_table1() {
    std::vector<std::string> problems;
    struct Family {
        std::string flags;
        Int n;
        std::vector<Expected> rows;
    };
    std::vector<Family> families = {
        {"--q 3 --m 4 --lambda 2 --delta-min 2 --delta-max 8",
         40,
         {{2, 36, 2}, {3, 32, 4}, {4, 32, 4}, {5, 28, 5}, {6, 26, 7}, {7, 26, 7}, {8, 22, 8}}},
        {"--q 3 --m 5 --lambda 2 --delta-min 6 --delta-max 10",
         121,
         {{6, 101, 7}, {7, 101, 7}, {9, 91, 10}, {10, 91, 10}}},
        {"--q 4 --m 4 --lambda 3 --delta-min 4 --delta-max 5", 85, {{4, 73, 5}, {5, 73, 5}}},
    };
    for (const Family& family : families) {
        int status = 0;
        std::string out = run_tool("table " + family.flags + " --format csv", status);
        if (status != 0) {
            problems.push_back("table exited " + std::to_string(status) + " for " + family.flags);
            continue;
        }
        std::map<Int, std::pair<Int, Int>> seen;  // delta -> (dim, bose)
        std::istringstream stream(out);
        std::string line;
        std::getline(stream, line);  // header
        while (std::getline(stream, line)) {
            std::vector<std::string> fields;
            std::string field;
            std::istringstream ls(line);
            while (std::getline(ls, field, ',')) fields.push_back(field);
            if (fields.size() < 7) continue;
            seen[bch::parse_int(fields[4])] = {bch::parse_int(fields[5]), bch::parse_int(fields[6])};
        }
        for (const Expected& e : family.rows) {
            auto it = seen.find(e.delta);
            if (it == seen.end()) {
                problems.push_back("missing row delta=" + bch::to_string(e.delta) + " for " +
                                   family.flags);
            } else if (it->second.first != e.dim || it->second.second != e.bose) {
                problems.push_back("row delta=" + bch::to_string(e.delta) + " for n=" +
                                   bch::to_string(family.n) + ": got dim=" +
                                   bch::to_string(it->second.first) + " bose=" +
                                   bch::to_string(it->second.second) + ", want dim=" +
                                   bch::to_string(e.dim) + " bose=" + bch::to_string(e.bose));
            }
        }
    }
    return problems;
}

std::vector<std::string> criterion_nonnarrow_examples() {
    std::vector<std::string> problems;
    struct Family {
        Int q;
        Int dim;
        std::vector<std::pair<Int, Int>> ranges;
    };
    std::vector<Family> families = {
        {3, 76, {{11, 17}, {21, 25}}},
        {4, 251, {{18, 30}, {35, 46}, {52, 62}}},
    };
    for (const Family& family : families) {
        bch::BchParams p = bch::make_params(family.q, 4, 1);
        std::set<Int> listed;
        for (auto [lo, hi] : family.ranges)
            for (Int b = lo; b <= hi; ++b) listed.insert(b);
        Int b_lo = (bch::checked_pow(p.q, p.m - p.h) - 1) / p.lambda + 1;
        Int b_hi = bch::delta_max_bose(p);
        for (Int b = b_lo; b < b_hi; ++b) {
            bch::EligibilityReport rep = bch::nonnarrow_report(p, b);
            bool fails_inequality = rep.head <= rep.tail;
            if (fails_inequality && rep.delta_max)
                problems.push_back("b=" + bch::to_string(b) + " q=" + bch::to_string(family.q) +
                                   ": eligibility should be none when the inequality fails");
            if (!listed.count(b)) continue;
            if (!rep.delta_max || *rep.delta_max < 2) {
                problems.push_back("b=" + bch::to_string(b) + " q=" + bch::to_string(family.q) +
                                   ": listed example not covered");
                continue;
            }
            Int dim = bch::nonnarrow_dimension(p, 2, b);
            Int db = bch::nonnarrow_bose(p, 2, b);
            if (dim != family.dim || db != 2)
                problems.push_back("b=" + bch::to_string(b) + " q=" + bch::to_string(family.q) +
                                   ": got [" + bch::to_string(p.n) + "," + bch::to_string(dim) +
                                   "," + bch::to_string(db) + "]");
        }
    }
    return problems;
}

}  // namespace

int main() {
    int workers = bch::resolve_workers();
    bch::Grid full_grid;  // q <= 9, m in [4,8], q^m - 1 <= 2^20

    run_criterion(1, "Table I reproduction", criterion_table1);
    run_criterion(2, "non-narrow-sense examples", criterion_nonnarrow_examples);
    run_criterion(3, "formula vs oracle sweep",
                  [&] { return bch::verify_dimension_bose(full_grid, workers); });
    run_criterion(4, "band structure theorems", [&] { return bch::verify_structure(workers); });
    run_criterion(5, "floor-sum identities", [&] { return bch::verify_lemmas(true, workers); });
    run_criterion(6, "assertion counts", [&] {
        bch::Grid grid;
        grid.modulus_limit = Int(1) << 16;
        return bch::verify_assertions(grid, workers);
    });
    run_criterion(7, "fast-path coherence",
                  [&] { return bch::verify_fast_paths(full_grid, workers); });

    if (g_failures == 0) {
        std::printf("acceptance: all 7 criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
