#include "bch/int128.hpp"

#include <algorithm>
#include <ostream>

namespace bch {

std::string to_string(Int x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    std::string s;
    while (u != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

Int parse_int(const std::string& s) {
    if (s.empty()) fail(errc::value_out_of_range, "empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) fail(errc::value_out_of_range, "integer literal has no digits");
    Int v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            fail(errc::value_out_of_range, "bad digit in integer literal '" + s + "'");
        v = checked_add(checked_mul(v, 10), s[i] - '0');
    }
    return neg ? -v : v;
}

Int checked_pow(Int q, Int e) {
    if (q < 0 || e < 0) fail(errc::value_out_of_range, "checked_pow expects nonnegative arguments");
    Int r = 1;
    for (Int i = 0; i < e; ++i) r = checked_mul(r, q);
    return r;
}

}  // namespace bch

std::ostream& operator<<(std::ostream& os, __int128 x) { return os << bch::to_string(x); }
