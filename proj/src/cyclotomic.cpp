#include "bch/cyclotomic.hpp"

#include <algorithm>

#include "bch/intmath.hpp"

namespace bch {

namespace {

constexpr Int kOrbitCap = 1000000;  // termination guard for bad inputs

void check_modulus(Int n, Int q) {
    if (n < 1) fail(errc::bad_range, "modulus n must be positive");
    if (q < 2) fail(errc::value_out_of_range, "q must be >= 2");
    if (gcd_int(n, q) != 1)
        fail(errc::not_coprime, "gcd(n, q) != 1 for n=" + to_string(n) + ", q=" + to_string(q));
}

}  // namespace

CosetSummary coset(Int a, Int n, Int q) {
    check_modulus(n, q);
    if (a < 0 || a >= n) fail(errc::bad_range, "coset requires 0 <= a < n");
    CosetSummary out;
    Int x = a;
    Int steps = 0;
    do {
        out.members.push_back(x);
        x = checked_mul(x, q) % n;
        if (++steps > kOrbitCap) fail(errc::bad_range, "orbit did not close within iteration cap");
    } while (x != a);
    out.size = static_cast<Int>(out.members.size());
    std::sort(out.members.begin(), out.members.end());
    out.leader = out.members.front();
    return out;
}

bool is_coset_leader(Int a, Int n, Int q) {
    check_modulus(n, q);
    if (a < 0 || a >= n) fail(errc::bad_range, "is_coset_leader requires 0 <= a < n");
    Int x = checked_mul(a, q) % n;
    Int steps = 0;
    while (x != a) {
        if (x < a) return false;
        x = checked_mul(x, q) % n;
        if (++steps > kOrbitCap) fail(errc::bad_range, "orbit did not close within iteration cap");
    }
    return true;
}

std::vector<Int> leaders_in_range(Int c, Int d, Int n, Int q, std::optional<Int> size_filter) {
    check_modulus(n, q);
    if (c < 0 || c > d || d > n - 1) fail(errc::bad_range, "leaders_in_range requires 0 <= c <= d <= n-1");
    std::vector<Int> out;
    if (c == 0 && d == n - 1) {
        // sieve fast path; equals the per-candidate scan (tested)
        CosetTable table = build_coset_table(n, q);
        for (std::size_t i = 0; i < table.leaders.size(); ++i) {
            if (!size_filter || table.size_of_leader[i] == *size_filter) out.push_back(table.leaders[i]);
        }
        return out;
    }
    for (Int a = c; a <= d; ++a) {
        if (!is_coset_leader(a, n, q)) continue;
        if (size_filter && coset(a, n, q).size != *size_filter) continue;
        out.push_back(a);
    }
    return out;
}

Int coset_size_closed(Int a, Int q, Int m, Int lambda) {
    if (q < 2 || m < 1) fail(errc::value_out_of_range, "coset_size_closed requires q >= 2, m >= 1");
    if (lambda < 1 || (q - 1) % lambda != 0)
        fail(errc::bad_lambda, "lambda must divide q-1");
    Int bound = checked_pow(q, m - m / 3);
    if (a < 1 || a >= bound)
        fail(errc::out_of_theorem_range,
             "coset_size_closed requires 1 <= a < q^(m - floor(m/3)) = " + to_string(bound));
    if (m % 2 == 1) return m;
    Int modulus = checked_sub(checked_pow(q, m), 1);
    Int h = m / 2;
    Int shifted = checked_mul(a, checked_pow(q, h)) % modulus;
    return shifted == a ? m / 2 : m;
}

CosetTable build_coset_table(Int n, Int q) {
    check_modulus(n, q);
    CosetTable table;
    table.n = n;
    table.q = q;
    std::size_t size = static_cast<std::size_t>(n);
    table.leader_index_of.assign(size, 0);
    std::vector<bool> seen(size, false);
    std::vector<Int> orbit;
    for (Int a = 0; a < n; ++a) {
        if (seen[static_cast<std::size_t>(a)]) continue;
        orbit.clear();
        Int x = a;
        do {
            orbit.push_back(x);
            seen[static_cast<std::size_t>(x)] = true;
            x = x * q % n;
        } while (x != a);
        // a is the minimum of its orbit: everything smaller was already seen
        std::uint32_t idx = static_cast<std::uint32_t>(table.leaders.size());
        table.leaders.push_back(a);
        table.size_of_leader.push_back(static_cast<Int>(orbit.size()));
        for (Int member : orbit) table.leader_index_of[static_cast<std::size_t>(member)] = idx;
    }
    return table;
}

std::optional<Int> CosetTable::next_leader(Int x) const {
    auto it = std::lower_bound(leaders.begin(), leaders.end(), x);
    if (it == leaders.end()) return std::nullopt;
    return *it;
}

}  // namespace bch
