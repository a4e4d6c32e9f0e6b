#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include "integer.hpp"
#include "rational.hpp"

namespace torusact {

  // Exact dyadic rational numerator / 2^exponent. Always canonical: the
  // exponent is zero or the numerator is odd, so equality is structural.
  class Dyadic {
   public:
    Dyadic() = default;
    Dyadic(long long n) : _num(n) {}  // NOLINT(runtime/explicit)
    Dyadic(Integer n) : _num(std::move(n)) {}  // NOLINT(runtime/explicit)
    Dyadic(Integer n, std::uint64_t e) : _num(std::move(n)), _exp(e) {
      normalize();
    }

    Integer const& numerator() const noexcept {
      return _num;
    }
    std::uint64_t exponent() const noexcept {
      return _exp;
    }

    bool is_zero() const {
      return _num == 0;
    }
    int sign() const {
      return _num.sign();
    }

    Integer floor() const {
      if (_exp == 0) {
        return _num;
      }
      return floor_div(_num, pow2(_exp));
    }

    // Fractional part in [0, 1).
    Dyadic frac() const {
      return *this - Dyadic(floor());
    }

    Dyadic mul_pow2(std::int64_t k) const {
      if (k >= 0) {
        auto shift = static_cast<std::uint64_t>(k);
        if (_exp >= shift) {
          return Dyadic(_num, _exp - shift);
        }
        return Dyadic(Integer(_num << (shift - _exp)), 0);
      }
      return Dyadic(_num, _exp + static_cast<std::uint64_t>(-k));
    }

    Rational to_rational() const {
      return Rational(_num, pow2(_exp));
    }

    double to_double() const {
      return to_rational().to_double();
    }

    // "n/2^e", the canonical serialization.
    std::string to_string() const {
      return _num.str() + "/2^" + std::to_string(_exp);
    }

    friend Dyadic operator+(Dyadic const& a, Dyadic const& b) {
      if (a._exp == b._exp) {
        return Dyadic(a._num + b._num, a._exp);
      }
      if (a._exp > b._exp) {
        return Dyadic(a._num + (b._num << (a._exp - b._exp)), a._exp);
      }
      return Dyadic((a._num << (b._exp - a._exp)) + b._num, b._exp);
    }
    friend Dyadic operator-(Dyadic const& a, Dyadic const& b) {
      return a + (-b);
    }
    friend Dyadic operator*(Dyadic const& a, Dyadic const& b) {
      return Dyadic(a._num * b._num, a._exp + b._exp);
    }
    Dyadic operator-() const {
      Dyadic r;
      r._num = -_num;
      r._exp = _exp;
      return r;
    }
    Dyadic& operator+=(Dyadic const& b) {
      return *this = *this + b;
    }
    Dyadic& operator-=(Dyadic const& b) {
      return *this = *this - b;
    }

    friend bool operator==(Dyadic const& a, Dyadic const& b) {
      return a._exp == b._exp && a._num == b._num;
    }
    friend std::strong_ordering operator<=>(Dyadic const& a, Dyadic const& b) {
      Integer lhs = a._num, rhs = b._num;
      if (a._exp > b._exp) {
        rhs <<= (a._exp - b._exp);
      } else if (b._exp > a._exp) {
        lhs <<= (b._exp - a._exp);
      }
      if (lhs < rhs) {
        return std::strong_ordering::less;
      }
      if (lhs > rhs) {
        return std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }

    std::size_t hash() const {
      std::size_t h = std::hash<std::uint64_t>{}(_exp);
      // low limb plus sign is enough to spread canonical values
      auto low = static_cast<std::uint64_t>(
          static_cast<std::uint64_t>(abs(_num) & Integer(0xFFFFFFFFFFFFFFFFULL)));
      h ^= std::hash<std::uint64_t>{}(low) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
      return h ^ static_cast<std::size_t>(_num.sign() + 1);
    }

   private:
    void normalize() {
      if (_num == 0) {
        _exp = 0;
        return;
      }
      if (_exp == 0) {
        return;
      }
      std::uint64_t tz = boost::multiprecision::lsb(abs(_num));
      std::uint64_t s  = tz < _exp ? tz : _exp;
      if (s > 0) {
        _num >>= s;  // exact, the low s bits are zero
        _exp -= s;
      }
    }

    Integer       _num = 0;
    std::uint64_t _exp = 0;
  };

  // Quotient of dyadics; general division leaves the dyadic ring.
  inline Rational divide(Dyadic const& a, Dyadic const& b) {
    return a.to_rational() / b.to_rational();
  }

  inline std::optional<Dyadic> to_dyadic(Rational const& r) {
    Integer d = r.denominator();
    if (!is_power_of_two(d)) {
      return std::nullopt;
    }
    return Dyadic(r.numerator(), log2_exact(d));
  }

  // a / b when the quotient is dyadic; raises non_dyadic otherwise.
  inline Dyadic exact_div(Dyadic const& a, Dyadic const& b) {
    if (b.is_zero()) {
      raise(errc::bad_input, "division by zero");
    }
    auto q = to_dyadic(divide(a, b));
    if (!q) {
      raise(errc::non_dyadic,
            a.to_string() + " / " + b.to_string() + " is not dyadic");
    }
    return *q;
  }

  // k when d = 2^k exactly.
  inline std::optional<std::int64_t> log2_if_power(Dyadic const& d) {
    auto const& n = d.numerator();
    if (n != 1) {
      if (d.exponent() != 0 || !is_power_of_two(n)) {
        return std::nullopt;
      }
      return static_cast<std::int64_t>(log2_exact(n));
    }
    return -static_cast<std::int64_t>(d.exponent());
  }

  // Accepts "n/2^e", "n/d" with d a power of two, or a bare integer.
  inline Dyadic parse_dyadic(std::string const& s) {
    auto pos = s.find("/2^");
    if (pos != std::string::npos) {
      std::string e = s.substr(pos + 3);
      if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos
          || e.size() > 9) {
        raise(errc::parse_error, "bad dyadic exponent in '" + s + "'");
      }
      return Dyadic(parse_integer(s.substr(0, pos)), std::stoull(e));
    }
    auto q = to_dyadic(parse_rational(s));
    if (!q) {
      raise(errc::non_dyadic, "'" + s + "' is not a dyadic rational");
    }
    return *q;
  }

  inline std::ostream& operator<<(std::ostream& os, Dyadic const& d) {
    return os << d.to_string();
  }

}  // namespace torusact
