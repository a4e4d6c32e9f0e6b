#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>

#include "integer.hpp"

namespace torusact {

  // Exact rational in lowest terms with a positive denominator.
  class Rational {
   public:
    using backend_type = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(long long n) : _value(n) {}  // NOLINT(runtime/explicit)
    Rational(Integer const& n) : _value(n) {}  // NOLINT(runtime/explicit)
    Rational(Integer const& n, Integer const& d) {
      if (d == 0) {
        raise(errc::bad_input, "zero denominator");
      }
      // this backend rejects negative denominators
      _value = d < 0 ? backend_type(Integer(-n), Integer(-d)) : backend_type(n, d);
    }
    explicit Rational(backend_type v) : _value(std::move(v)) {}

    Integer numerator() const {
      return boost::multiprecision::numerator(_value);
    }

    Integer denominator() const {
      return boost::multiprecision::denominator(_value);
    }

    backend_type const& backend() const noexcept {
      return _value;
    }

    bool is_integer() const {
      return denominator() == 1;
    }

    Integer floor() const {
      return floor_div(numerator(), denominator());
    }

    Integer ceil() const {
      return -floor_div(-numerator(), denominator());
    }

    // Representative of the class mod 1 in [0, 1).
    Rational mod1() const {
      return *this - Rational(floor());
    }

    double to_double() const {
      return _value.convert_to<double>();
    }

    std::string to_string() const {
      return numerator().str() + "/" + denominator().str();
    }

    friend Rational operator+(Rational const& a, Rational const& b) {
      return Rational(backend_type(a._value + b._value));
    }
    friend Rational operator-(Rational const& a, Rational const& b) {
      return Rational(backend_type(a._value - b._value));
    }
    friend Rational operator*(Rational const& a, Rational const& b) {
      return Rational(backend_type(a._value * b._value));
    }
    friend Rational operator/(Rational const& a, Rational const& b) {
      if (b._value == 0) {
        raise(errc::bad_input, "division by zero");
      }
      return Rational(backend_type(a._value / b._value));
    }
    Rational operator-() const {
      return Rational(backend_type(-_value));
    }

    friend bool operator==(Rational const& a, Rational const& b) {
      return a._value == b._value;
    }
    friend std::strong_ordering operator<=>(Rational const& a,
                                            Rational const& b) {
      if (a._value < b._value) {
        return std::strong_ordering::less;
      }
      if (a._value > b._value) {
        return std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }

   private:
    backend_type _value;
  };

  // Accepts "p/q" or a bare integer.
  inline Rational parse_rational(std::string const& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      return Rational(parse_integer(s));
    }
    Integer d = parse_integer(s.substr(slash + 1));
    if (d <= 0) {
      raise(errc::parse_error, "non-positive denominator in '" + s + "'");
    }
    return Rational(parse_integer(s.substr(0, slash)), d);
  }

  inline std::ostream& operator<<(std::ostream& os, Rational const& r) {
    return os << r.to_string();
  }

}  // namespace torusact
