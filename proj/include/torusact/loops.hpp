#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace torusact {

  struct Point {
    Rational x, y;

    friend Point operator+(Point const& p, Point const& q) {
      return {p.x + q.x, p.y + q.y};
    }
    friend Point operator-(Point const& p, Point const& q) {
      return {p.x - q.x, p.y - q.y};
    }
    friend bool operator==(Point const&, Point const&) = default;
    friend auto operator<=>(Point const& p, Point const& q) {
      if (auto c = p.x <=> q.x; c != 0) {
        return c;
      }
      return p.y <=> q.y;
    }
  };

  // A PL loop on the torus, given by vertices in the plane joined by straight
  // segments; the last vertex is an integer translate of the first.
  struct TorusLoop {
    std::vector<Point> vertices;
  };

  struct Segment {
    Point a, b;
  };

  inline std::pair<Integer, Integer> loop_homology(TorusLoop const& c) {
    if (c.vertices.size() < 2) {
      raise(errc::not_closed, "a loop needs at least two vertices");
    }
    Point const d = c.vertices.back() - c.vertices.front();
    if (!d.x.is_integer() || !d.y.is_integer()) {
      raise(errc::not_closed, "endpoint is not an integer translate of the start");
    }
    return {d.x.numerator(), d.y.numerator()};
  }

  namespace detail {
    inline Rational cross(Point const& u, Point const& v) {
      return u.x * v.y - u.y * v.x;
    }

    inline int orient(Point const& a, Point const& b, Point const& c) {
      Rational const v = cross(b - a, c - a);
      return v > Rational(0) ? 1 : (v < Rational(0) ? -1 : 0);
    }

    // Cuts a segment where it crosses the integer grid lines and moves every
    // piece into the unit square containing its midpoint.
    inline std::vector<Segment> grid_pieces(Segment const& s) {
      Point const      d = s.b - s.a;
      std::vector<Rational> ts{Rational(0), Rational(1)};
      auto add_crossings = [&](Rational const& from, Rational const& delta) {
        if (delta == Rational(0)) {
          return;
        }
        Rational const to = from + delta;
        Integer        lo = std::min(from, to).floor();
        Integer        hi = std::max(from, to).ceil();
        for (Integer n = lo; n <= hi; ++n) {
          Rational t = (Rational(n) - from) / delta;
          if (t > Rational(0) && t < Rational(1)) {
            ts.push_back(t);
          }
        }
      };
      add_crossings(s.a.x, d.x);
      add_crossings(s.a.y, d.y);
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
      std::vector<Segment> out;
      for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        Point p{s.a.x + ts[i] * d.x, s.a.y + ts[i] * d.y};
        Point q{s.a.x + ts[i + 1] * d.x, s.a.y + ts[i + 1] * d.y};
        Rational const two(2);
        Point const    shift{Rational(((p.x + q.x) / two).floor()),
                          Rational(((p.y + q.y) / two).floor())};
        out.push_back(Segment{p - shift, q - shift});
      }
      return out;
    }

    inline std::vector<Segment> loop_pieces(TorusLoop const& c) {
      std::vector<Segment> out;
      for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
        auto p = grid_pieces(Segment{c.vertices[i], c.vertices[i + 1]});
        out.insert(out.end(), p.begin(), p.end());
      }
      return out;
    }

    enum class Contact { none, point, overlap };

    inline std::pair<Contact, Point> intersect(Segment const& s,
                                               Segment const& t) {
      int const o1 = orient(s.a, s.b, t.a), o2 = orient(s.a, s.b, t.b);
      int const o3 = orient(t.a, t.b, s.a), o4 = orient(t.a, t.b, s.b);
      if (o1 == 0 && o2 == 0) {
        // collinear: compare along the segment direction
        bool const use_x = s.a.x != s.b.x;
        auto key = [&](Point const& p) { return use_x ? p.x : p.y; };
        Point s_lo = s.a, s_hi = s.b, t_lo = t.a, t_hi = t.b;
        if (key(s_hi) < key(s_lo)) {
          std::swap(s_lo, s_hi);
        }
        if (key(t_hi) < key(t_lo)) {
          std::swap(t_lo, t_hi);
        }
        Point const lo = key(s_lo) < key(t_lo) ? t_lo : s_lo;
        Point const hi = key(s_hi) < key(t_hi) ? s_hi : t_hi;
        if (key(hi) < key(lo)) {
          return {Contact::none, {}};
        }
        if (key(hi) == key(lo)) {
          return {Contact::point, lo};
        }
        return {Contact::overlap, {}};
      }
      if (o1 * o2 <= 0 && o3 * o4 <= 0) {
        Point const    d = s.b - s.a, e = t.b - t.a;
        Rational const u = cross(t.a - s.a, e) / cross(d, e);
        return {Contact::point, Point{s.a.x + u * d.x, s.a.y + u * d.y}};
      }
      return {Contact::none, {}};
    }
  }  // namespace detail

  // Exact pairwise test on the pieces of the loop in the unit square against
  // the 3x3 block of their translates. Consecutive pieces may only touch at
  // their shared endpoint.
  inline bool is_embedded(TorusLoop const& c) {
    loop_homology(c);
    for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
      if (c.vertices[i] == c.vertices[i + 1]) {
        return false;
      }
    }
    auto const        pieces = detail::loop_pieces(c);
    std::size_t const n      = pieces.size();
    struct Box {
      Rational lo[2], hi[2];
    };
    std::vector<Box> boxes;
    for (auto const& s : pieces) {
      boxes.push_back(Box{{std::min(s.a.x, s.b.x), std::min(s.a.y, s.b.y)},
                          {std::max(s.a.x, s.b.x), std::max(s.a.y, s.b.y)}});
    }
    // pieces lie in the closed unit square, so a shifted copy can only meet
    // along the line 0 or 1
    Rational const zero(0), one(1);
    auto meets = [&](Box const& p, Box const& q, int axis, int o) {
      if (o == 0) {
        return q.lo[axis] <= p.hi[axis] && p.lo[axis] <= q.hi[axis];
      }
      return o > 0 ? q.lo[axis] == zero && p.hi[axis] == one
                   : q.hi[axis] == one && p.lo[axis] == zero;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        for (int ox = -1; ox <= 1; ++ox) {
          if (!meets(boxes[i], boxes[j], 0, ox)) {
            continue;
          }
          for (int oy = -1; oy <= 1; ++oy) {
            if ((i == j && ox == 0 && oy == 0) || !meets(boxes[i], boxes[j], 1, oy)) {
              continue;
            }
            Point const   o{Rational(ox), Rational(oy)};
            Segment const t{pieces[j].a + o, pieces[j].b + o};
            auto [kind, p] = detail::intersect(pieces[i], t);
            if (kind == detail::Contact::none) {
              continue;
            }
            if (kind == detail::Contact::overlap) {
              return false;
            }
            bool const i_then_j = (i + 1) % n == j;
            bool const j_then_i = (j + 1) % n == i;
            bool const ok = (i_then_j && p == pieces[i].b && p == t.a)
                            || (j_then_i && p == t.b && p == pieces[i].a);
            if (!ok) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  namespace detail {
    // Maximal segments of the loop inside the unit square, oriented and
    // sorted, so that equal point sets give equal lists.
    struct LineRun {
      int      vertical;   // 1 for x = const
      Rational slope;      // dy/dx, or 0 when vertical
      Rational intercept;  // y at x = 0, or x when vertical
      Rational from, to;   // range of the free coordinate

      friend bool operator==(LineRun const&, LineRun const&) = default;
      friend bool operator<(LineRun const& p, LineRun const& q) {
        return std::tie(p.vertical, p.slope, p.intercept, p.from, p.to)
               < std::tie(q.vertical, q.slope, q.intercept, q.from, q.to);
      }
    };

    inline std::vector<LineRun> canonical_runs(std::vector<Segment> const& pieces) {
      std::vector<LineRun> runs;
      for (auto const& s : pieces) {
        LineRun r;
        if (s.a.x == s.b.x) {
          r.vertical  = 1;
          r.intercept = s.a.x;
          r.from      = std::min(s.a.y, s.b.y);
          r.to        = std::max(s.a.y, s.b.y);
        } else {
          r.vertical  = 0;
          r.slope     = (s.b.y - s.a.y) / (s.b.x - s.a.x);
          r.intercept = s.a.y - r.slope * s.a.x;
          r.from      = std::min(s.a.x, s.b.x);
          r.to        = std::max(s.a.x, s.b.x);
        }
        runs.push_back(r);
      }
      std::sort(runs.begin(), runs.end());
      std::vector<LineRun> merged;
      for (auto const& r : runs) {
        if (!merged.empty()) {
          auto& last = merged.back();
          if (last.vertical == r.vertical && last.slope == r.slope
              && last.intercept == r.intercept && r.from <= last.to) {
            last.to = std::max(last.to, r.to);
            continue;
          }
        }
        merged.push_back(r);
      }
      return merged;
    }
  }  // namespace detail

  // Does (x, y) -> (x + amount, y) map the loop onto itself as a subset of
  // the torus?
  inline bool is_invariant_under_rotation(TorusLoop const& c,
                                          Rational const&  amount) {
    if (!is_embedded(c)) {
      raise(errc::not_embedded, "loop is not embedded");
    }
    TorusLoop moved = c;
    for (auto& v : moved.vertices) {
      v.x = v.x + amount;
    }
    return detail::canonical_runs(detail::loop_pieces(c))
           == detail::canonical_runs(detail::loop_pieces(moved));
  }

  struct CurveCheckReport {
    bool                                       invariant = false;
    std::optional<std::pair<Integer, Integer>> homology;
    // q | l for the invariant class (k, l); only set when invariant.
    std::optional<bool> divisible;

    // Invariant loops always have q | l, so a false divisibility can
    // only come from a bug or bad input.
    bool consistent() const {
      return !divisible || *divisible;
    }
  };

  inline CurveCheckReport invariant_curve_check(TorusLoop const& c,
                                                Rational const&  amount) {
    CurveCheckReport rep;
    rep.invariant = is_invariant_under_rotation(c, amount);
    if (rep.invariant) {
      rep.homology      = loop_homology(c);
      Integer const q   = amount.denominator();
      rep.divisible     = rep.homology->second % q == 0;
    }
    return rep;
  }

  // A loop invariant under the rotation by 1/q: q translated copies of one
  // arc from P to P + w, with w = (j/q + a, b) and gcd(j, q) = 1. The arc
  // follows the straight line in direction q w and is pushed sideways by
  // heights in (-1/2, 1/2) of the gap between parallel strands, which keeps
  // the loop embedded when q w is primitive. `params` are increasing values
  // in (0, 1) along the arc; heights[0] is used at the arc's ends.
  inline TorusLoop symmetric_loop(Point const&                 base,
                                  std::int64_t                 q,
                                  std::int64_t                 j,
                                  std::int64_t                 a,
                                  std::int64_t                 b,
                                  std::vector<Rational> const& params,
                                  std::vector<Rational> const& heights) {
    if (heights.size() != params.size() + 1) {
      raise(errc::bad_input, "need one height per parameter plus one");
    }
    Point const w{Rational(Integer(j), Integer(q)) + Rational(a), Rational(b)};
    Rational const K = w.x * Rational(q), L = w.y * Rational(q);
    if (gcd(K.numerator(), L.numerator()) != 1) {
      raise(errc::bad_input, "the loop class must be primitive");
    }
    Rational const norm2 = K * K + L * L;
    Point const    nu{-L / norm2, K / norm2};
    auto at = [&](Rational const& t, Rational const& h) {
      return Point{base.x + t * w.x + h * nu.x, base.y + t * w.y + h * nu.y};
    };
    TorusLoop loop;
    for (std::int64_t i = 0; i < q; ++i) {
      loop.vertices.push_back(at(Rational(i), heights[0]));
      for (std::size_t s = 0; s < params.size(); ++s) {
        loop.vertices.push_back(at(Rational(i) + params[s], heights[s + 1]));
      }
    }
    loop.vertices.push_back(at(Rational(q), heights[0]));
    return loop;
  }

}  // namespace torusact
