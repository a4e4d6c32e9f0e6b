#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "circle_lift.hpp"
#include "rational.hpp"

namespace torusact {

  struct RotationNumber {
    bool     resolved = false;
    Rational value;  // p/q in [0, 1), meaningful when resolved
    // Exact witness: lift^period(witness) = witness + displacement.
    std::uint64_t period = 0;
    Integer       displacement;
    Rational      witness;
    // Floating estimate and its continued fraction convergents; never
    // authoritative, only filled when unresolved.
    double                estimate = 0.0;
    std::vector<Rational> convergents;
  };

  namespace detail {
    // Looks for x in [0, 1] and an integer s with g(x) = x + s, piece by
    // piece. Returns (s, x).
    inline std::optional<std::pair<Integer, Rational>>
    translate_point(CircleLift const& g) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        Node   a = g.breakpoint(i), b = g.breakpoint(i + 1);
        Dyadic da = a.y - a.x, db = b.y - b.x;
        Dyadic lo = da < db ? da : db;
        Dyadic hi = da < db ? db : da;
        Integer s  = -((-lo).floor());  // ceil(lo)
        if (Dyadic(s) <= hi) {
          if (da == db) {
            return std::make_pair(s, a.x.to_rational());
          }
          Rational t = divide(Dyadic(s) - da, db - da);
          return std::make_pair(
              s, a.x.to_rational() + t * (b.x - a.x).to_rational());
        }
      }
      return std::nullopt;
    }

    inline std::vector<Rational> convergents(double v, std::size_t max_terms) {
      std::vector<Rational> out;
      Integer               h0 = 0, h1 = 1, k0 = 1, k1 = 0;
      double                x = v;
      for (std::size_t i = 0; i < max_terms; ++i) {
        double fl = std::floor(x);
        if (!std::isfinite(fl) || std::fabs(fl) > 1e15) {
          break;
        }
        Integer a(static_cast<long long>(fl));
        Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
        out.emplace_back(h2, k2);
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        double rest = x - fl;
        if (rest < 1e-12) {
          break;
        }
        x = 1.0 / rest;
      }
      return out;
    }

    inline double estimate_rotation(CircleLift const& f,
                                    std::size_t       iterations) {
      std::vector<double> xs, ys;
      for (std::size_t i = 0; i <= f.size(); ++i) {
        Node n = f.breakpoint(i);
        xs.push_back(n.x.to_double());
        ys.push_back(n.y.to_double());
      }
      auto eval = [&](double x) {
        double k = std::floor(x), u = x - k;
        std::size_t i = 0;
        while (i + 2 < xs.size() && xs[i + 1] <= u) {
          ++i;
        }
        double t = (u - xs[i]) / (xs[i + 1] - xs[i]);
        return ys[i] + t * (ys[i + 1] - ys[i]) + k;
      };
      double x = 0.0;
      for (std::size_t n = 0; n < iterations; ++n) {
        x = eval(x);
      }
      double r = x / static_cast<double>(iterations);
      return r - std::floor(r);
    }
  }  // namespace detail

  // Exact rotation number: finds the least q <= max_period with a point x
  // and integer p such that F^q(x) = x + p, solving on each affine piece of
  // the exact q-fold composite. Returns p/q mod 1 in lowest terms.
  inline RotationNumber rotation_number_exact(CircleLift const& f,
                                              std::uint64_t     max_period) {
    if (max_period == 0) {
      raise(errc::bad_input, "max_period must be positive");
    }
    RotationNumber out;
    CircleLift     iterate = f;
    Integer        offset  = 0;
    for (std::uint64_t q = 1; q <= max_period; ++q) {
      if (q > 1) {
        auto next = compose_with_shift(f, iterate);
        iterate   = std::move(next.map);
        offset += next.shift;
      }
      if (auto hit = detail::translate_point(iterate)) {
        Integer p        = hit->first + offset;
        out.resolved     = true;
        out.period       = q;
        out.displacement = p;
        out.witness      = hit->second;
        out.value        = Rational(p, Integer(q)).mod1();
        return out;
      }
    }
    out.estimate    = detail::estimate_rotation(f, 10000);
    out.convergents = detail::convergents(out.estimate, 12);
    return out;
  }

  // Least n <= cutoff with f^n = id, or nullopt when f has infinite order
  // or its order exceeds the cutoff. A finite order map is conjugate to a
  // rotation, so its order is the period of any of its periodic points.
  inline std::optional<std::uint64_t> element_order(CircleLift const& f,
                                                    std::uint64_t     cutoff) {
    if (cutoff == 0) {
      raise(errc::bad_input, "cutoff must be positive");
    }
    auto rot = rotation_number_exact(f, cutoff);
    if (!rot.resolved) {
      return std::nullopt;
    }
    if (power(f, static_cast<std::int64_t>(rot.period)).is_identity()) {
      return rot.period;
    }
    return std::nullopt;
  }

}  // namespace torusact
