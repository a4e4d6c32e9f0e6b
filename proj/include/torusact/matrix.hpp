#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "integer.hpp"

namespace torusact {

  // 2x2 integer matrix [[a, b], [c, d]].
  struct IntMatrix2x2 {
    Integer a = 1, b = 0, c = 0, d = 1;

    static IntMatrix2x2 identity() {
      return {};
    }

    Integer det() const {
      return a * d - b * c;
    }
    Integer trace() const {
      return a + d;
    }

    bool is_hyperbolic() const {
      return det() == 1 && abs(trace()) > 2;
    }

    std::array<Integer, 4> row_major() const {
      return {a, b, c, d};
    }

    std::string to_string() const {
      return a.str() + "," + b.str() + "," + c.str() + "," + d.str();
    }

    friend IntMatrix2x2 operator*(IntMatrix2x2 const& x, IntMatrix2x2 const& y) {
      return {x.a * y.a + x.b * y.c,
              x.a * y.b + x.b * y.d,
              x.c * y.a + x.d * y.c,
              x.c * y.b + x.d * y.d};
    }

    friend bool operator==(IntMatrix2x2 const&, IntMatrix2x2 const&) = default;
  };

  inline std::ostream& operator<<(std::ostream& os, IntMatrix2x2 const& m) {
    return os << "[" << m.to_string() << "]";
  }

  inline IntMatrix2x2 matrix_power(IntMatrix2x2 base, std::uint64_t n) {
    IntMatrix2x2 acc;
    while (n > 0) {
      if (n & 1u) {
        acc = acc * base;
      }
      n >>= 1;
      if (n > 0) {
        base = base * base;
      }
    }
    return acc;
  }

  // Parses "a,b,c,d".
  inline IntMatrix2x2 parse_matrix(std::string const& s) {
    std::array<Integer, 4> e;
    std::size_t            start = 0;
    for (int i = 0; i < 4; ++i) {
      auto comma = s.find(',', start);
      if ((i < 3) != (comma != std::string::npos)) {
        raise(errc::parse_error, "matrix needs four comma separated entries");
      }
      e[i]  = parse_integer(s.substr(start, comma - start));
      start = comma + 1;
    }
    return {e[0], e[1], e[2], e[3]};
  }

  namespace detail {
    // For det B = 1 and trace tau, B^n = s_n B - s_{n-1} I and
    // tr(B^n) = tau s_n - 2 s_{n-1}. Returns (s_{n-1}, s_n).
    inline std::pair<Integer, Integer> chebyshev(Integer const& tau,
                                                 std::uint64_t  n) {
      Integer prev = 0, cur = 1;  // s_0, s_1
      for (std::uint64_t i = 1; i < n; ++i) {
        Integer next = tau * cur - prev;
        prev         = std::move(cur);
        cur          = std::move(next);
      }
      return {prev, cur};
    }

    inline Integer power_trace(Integer const& tau, std::uint64_t n) {
      auto [prev, cur] = chebyshev(tau, n);
      return tau * cur - 2 * prev;
    }
  }  // namespace detail

  struct MatrixRoot {
    std::uint64_t r = 1;
    IntMatrix2x2  root;
  };

  // Largest r such that A = B^r for some B in SL2(Z), together with one such
  // B (positive trace preferred).
  //
  // Cayley-Hamilton pins B down from its trace: B = (A + s_{r-1} I) / s_r.
  // So for each r it is enough to find the integer traces tau with
  // tr(B^r) = tr(A); |tau| >= 3 because B is hyperbolic too, and since
  // tr(B^r) grows with tau the candidates come from a binary search. Every
  // hyperbolic B has tr(B^r) >= tr(M^r) for M of trace 3, which bounds r.
  inline MatrixRoot sl2z_largest_root(IntMatrix2x2 const& A) {
    if (A.det() != 1) {
      raise(errc::not_hyperbolic, "determinant is " + A.det().str() + ", not 1");
    }
    Integer const t = A.trace();
    if (abs(t) <= 2) {
      raise(errc::not_hyperbolic, "trace " + t.str() + " has |trace| <= 2");
    }
    if (t < 0) {
      raise(errc::negative_trace, "trace " + t.str() + " is negative; pass -A");
    }

    std::uint64_t r_max = 1;
    while (detail::power_trace(3, r_max + 1) <= t) {
      ++r_max;
    }

    for (std::uint64_t r = r_max; r >= 2; --r) {
      Integer lo = 3, hi = t;
      while (lo < hi) {
        Integer mid = (lo + hi) / 2;
        if (detail::power_trace(mid, r) < t) {
          lo = mid + 1;
        } else {
          hi = mid;
        }
      }
      if (detail::power_trace(lo, r) != t) {
        continue;
      }
      for (int sign : {1, -1}) {
        if (sign < 0 && r % 2 == 1) {
          break;  // odd powers keep the sign of the trace
        }
        Integer tau         = sign * lo;
        auto [s_prev, s_r]  = detail::chebyshev(tau, r);
        IntMatrix2x2 shifted{A.a + s_prev, A.b, A.c, A.d + s_prev};
        if (shifted.a % s_r != 0 || shifted.b % s_r != 0
            || shifted.c % s_r != 0 || shifted.d % s_r != 0) {
          continue;
        }
        IntMatrix2x2 B{shifted.a / s_r, shifted.b / s_r, shifted.c / s_r,
                       shifted.d / s_r};
        if (B.det() == 1 && matrix_power(B, r) == A) {
          return {r, B};
        }
      }
    }
    return {1, A};
  }

  // Bound 8 r on the order of a finite-order symmetry of the torus bundle
  // with monodromy A.
  inline Integer sol_order_bound(IntMatrix2x2 const& A) {
    return Integer(8) * sl2z_largest_root(A).r;
  }

}  // namespace torusact
