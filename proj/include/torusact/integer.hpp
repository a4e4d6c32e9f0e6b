#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "error.hpp"

namespace torusact {

  using Integer = boost::multiprecision::cpp_int;

  inline Integer parse_integer(std::string const& s) {
    if (s.empty()) {
      raise(errc::parse_error, "empty integer literal");
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
      raise(errc::parse_error, "bad integer literal '" + s + "'");
    }
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') {
        raise(errc::parse_error, "bad integer literal '" + s + "'");
      }
    }
    return Integer(s);
  }

  inline Integer abs(Integer const& x) {
    return x < 0 ? Integer(-x) : x;
  }

  inline Integer gcd(Integer const& a, Integer const& b) {
    return boost::multiprecision::gcd(a, b);
  }

  // Floor division for a positive divisor.
  inline Integer floor_div(Integer const& a, Integer const& b) {
    Integer q = a / b;
    if ((a % b != 0) && (a < 0)) {
      --q;
    }
    return q;
  }

  // Power of two with non-negative exponent.
  inline Integer pow2(std::uint64_t e) {
    Integer r = 1;
    r <<= e;
    return r;
  }

  inline bool is_power_of_two(Integer const& n) {
    return n > 0 && (n & (n - 1)) == 0;
  }

  inline std::uint64_t log2_exact(Integer const& n) {
    return boost::multiprecision::msb(n);
  }

}  // namespace torusact
