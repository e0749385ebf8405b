#pragma once

#include <stdexcept>
#include <string>

namespace bch {

// Every precondition violation throws bch::error with one of these codes.
enum class errc {
    value_out_of_range,
    length_mismatch,
    overflow,
    not_coprime,
    bad_range,
    out_of_theorem_range,
    odd_m,
    wrong_parity,
    band_mismatch,
    bad_index,
    not_member,
    bad_lambda,
    odd_x,
    unsupported_range,
    q_divides_delta,
    not_an_integer,
    not_eligible,
    not_prime_power,
    arithmetic,  // a closed form produced a non-integer; indicates a bug
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::value_out_of_range: return "value out of range";
        case errc::length_mismatch: return "length mismatch";
        case errc::overflow: return "overflow";
        case errc::not_coprime: return "not coprime";
        case errc::bad_range: return "bad range";
        case errc::out_of_theorem_range: return "out of theorem range";
        case errc::odd_m: return "odd m";
        case errc::wrong_parity: return "wrong parity";
        case errc::band_mismatch: return "band mismatch";
        case errc::bad_index: return "bad index";
        case errc::not_member: return "not a member";
        case errc::bad_lambda: return "bad lambda";
        case errc::odd_x: return "odd x";
        case errc::unsupported_range: return "unsupported range";
        case errc::q_divides_delta: return "q divides delta";
        case errc::not_an_integer: return "not an integer";
        case errc::not_eligible: return "not eligible";
        case errc::not_prime_power: return "not a prime power";
        case errc::arithmetic: return "arithmetic inconsistency";
    }
    return "unknown";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace bch
