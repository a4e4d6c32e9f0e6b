#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "dyadic.hpp"
#include "error.hpp"

namespace torusact {

  struct Node {
    Dyadic x;
    Dyadic y;

    friend bool operator==(Node const&, Node const&) = default;
  };

  // A piecewise-linear orientation preserving circle homeomorphism, stored as
  // its normalized lift F : R -> R with F(x + 1) = F(x) + 1.
  //
  // The nodes interpolate F on [0, 1): the first node sits at x = 0, the
  // x-values increase strictly, and F(0) lies in [0, 1). The piece after the
  // last node ends at (1, F(0) + 1). Interior nodes are exactly the
  // breakpoints, so two lifts are equal iff their node lists are equal.
  class CircleLift {
   public:
    CircleLift() : _nodes{Node{Dyadic(0), Dyadic(0)}} {
      cache_slopes();
    }

    // Validates monotonicity, shifts so that F(0) is in [0, 1) and drops
    // redundant nodes.
    static CircleLift from_nodes(std::vector<Node> nodes) {
      if (nodes.empty()) {
        raise(errc::invalid_lift, "a lift needs at least one node");
      }
      if (!nodes.front().x.is_zero()) {
        raise(errc::invalid_lift, "first node must sit at x = 0");
      }
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].x >= Dyadic(1)) {
          raise(errc::invalid_lift, "node x-values must lie in [0, 1)");
        }
        if (i > 0
            && (nodes[i].x <= nodes[i - 1].x || nodes[i].y <= nodes[i - 1].y)) {
          raise(errc::invalid_lift, "nodes must increase strictly");
        }
      }
      if (nodes.back().y >= nodes.front().y + Dyadic(1)) {
        raise(errc::invalid_lift, "lift is not degree one");
      }
      std::vector<Dyadic> xs, ys;
      xs.reserve(nodes.size());
      ys.reserve(nodes.size());
      for (auto& n : nodes) {
        xs.push_back(std::move(n.x));
        ys.push_back(std::move(n.y));
      }
      return assemble(std::move(xs), std::move(ys)).first;
    }

    // Builds the canonical lift through the points (xs[i], ys[i]); xs must be
    // sorted, distinct, in [0, 1) and start at 0. Returns the normalized lift
    // and the integer n with F_true = F_normalized + n.
    static std::pair<CircleLift, Integer> assemble(std::vector<Dyadic> xs,
                                                   std::vector<Dyadic> ys) {
      Integer shift = ys.front().floor();
      if (shift != 0) {
        Dyadic s(shift);
        for (auto& y : ys) {
          y -= s;
        }
      }
      CircleLift f(NoInit{});
      f._nodes.reserve(xs.size());
      f._nodes.push_back(Node{xs[0], ys[0]});
      Dyadic const one(1);
      for (std::size_t i = 1; i < xs.size(); ++i) {
        Node const& prev = f._nodes.back();
        Dyadic const& nx = (i + 1 < xs.size()) ? xs[i + 1] : one;
        Dyadic const  ny = (i + 1 < xs.size()) ? ys[i + 1] : ys[0] + one;
        // keep the node iff the slope changes across it
        if ((ys[i] - prev.y) * (nx - xs[i]) != (ny - ys[i]) * (xs[i] - prev.x)) {
          f._nodes.push_back(Node{std::move(xs[i]), std::move(ys[i])});
        }
      }
      f.cache_slopes();
      return {std::move(f), std::move(shift)};
    }

    std::vector<Node> const& nodes() const noexcept {
      return _nodes;
    }

    std::size_t size() const noexcept {
      return _nodes.size();
    }

    bool is_identity() const {
      return _nodes.size() == 1 && _nodes[0].y.is_zero();
    }

    // Is F a translation?
    bool is_rigid() const {
      return _nodes.size() == 1;
    }

    // i-th node, with index size() standing for (1, F(0) + 1).
    Node breakpoint(std::size_t i) const {
      if (i < _nodes.size()) {
        return _nodes[i];
      }
      return Node{Dyadic(1), _nodes[0].y + Dyadic(1)};
    }

    // Exponent k when the slope on piece i is 2^k.
    std::optional<std::int64_t> log2_slope(std::size_t i) const {
      return _log2_slope[i];
    }

    Rational slope(std::size_t i) const {
      Node a = breakpoint(i), b = breakpoint(i + 1);
      return divide(b.y - a.y, b.x - a.x);
    }

    // F(x) for any dyadic x.
    Dyadic lift(Dyadic const& x) const {
      Integer k = x.floor();
      Dyadic  u = k == 0 ? x : x - Dyadic(k);
      auto it = std::upper_bound(
          _nodes.begin(), _nodes.end(), u, [](Dyadic const& v, Node const& n) {
            return v < n.x;
          });
      std::size_t i = static_cast<std::size_t>(it - _nodes.begin()) - 1;
      Dyadic r = _nodes[i].y + along(i, u - _nodes[i].x);
      return k == 0 ? r : r + Dyadic(k);
    }

    // F^{-1}(y) for any dyadic y.
    Dyadic lift_inverse(Dyadic const& y) const {
      Integer k = (y - _nodes[0].y).floor();
      Dyadic  v = k == 0 ? y : y - Dyadic(k);
      auto it = std::upper_bound(
          _nodes.begin(), _nodes.end(), v, [](Dyadic const& w, Node const& n) {
            return w < n.y;
          });
      std::size_t i = static_cast<std::size_t>(it - _nodes.begin()) - 1;
      Dyadic r = _nodes[i].x + against(i, v - _nodes[i].y);
      return k == 0 ? r : r + Dyadic(k);
    }

    // Image of the circle point x, reduced mod 1.
    Dyadic operator()(Dyadic const& x) const {
      return lift(x).frac();
    }

    friend bool operator==(CircleLift const& a, CircleLift const& b) {
      return a._nodes == b._nodes;
    }

    // Lexicographic order on node lists; only used for deterministic ties.
    friend bool operator<(CircleLift const& a, CircleLift const& b) {
      return std::lexicographical_compare(
          a._nodes.begin(),
          a._nodes.end(),
          b._nodes.begin(),
          b._nodes.end(),
          [](Node const& p, Node const& q) {
            if (p.x != q.x) {
              return p.x < q.x;
            }
            return p.y < q.y;
          });
    }

    std::size_t hash() const {
      std::size_t h = _nodes.size();
      for (auto const& n : _nodes) {
        h = h * 1000003u ^ n.x.hash();
        h = h * 1000003u ^ n.y.hash();
      }
      return h;
    }

   private:
    struct NoInit {};
    explicit CircleLift(NoInit) {}

    void cache_slopes() {
      _log2_slope.clear();
      _log2_slope.reserve(_nodes.size());
      for (std::size_t i = 0; i < _nodes.size(); ++i) {
        Node a = breakpoint(i), b = breakpoint(i + 1);
        Dyadic dx = b.x - a.x, dy = b.y - a.y;
        auto lx = log2_if_power(dx);
        auto ly = log2_if_power(dy);
        if (lx && ly) {
          _log2_slope.push_back(*ly - *lx);
        } else {
          auto q = to_dyadic(divide(dy, dx));
          _log2_slope.push_back(q ? log2_if_power(*q) : std::nullopt);
        }
      }
    }

    // Rise over a run of length t on piece i.
    Dyadic along(std::size_t i, Dyadic const& t) const {
      if (_log2_slope[i]) {
        return t.mul_pow2(*_log2_slope[i]);
      }
      Node a = breakpoint(i), b = breakpoint(i + 1);
      return exact_div(t * (b.y - a.y), b.x - a.x);
    }

    // Run needed for a rise of t on piece i.
    Dyadic against(std::size_t i, Dyadic const& t) const {
      if (_log2_slope[i]) {
        return t.mul_pow2(-*_log2_slope[i]);
      }
      Node a = breakpoint(i), b = breakpoint(i + 1);
      return exact_div(t * (b.x - a.x), b.y - a.y);
    }

    std::vector<Node>                         _nodes;
    std::vector<std::optional<std::int64_t>> _log2_slope;
  };

  struct ShiftedLift {
    CircleLift map;
    Integer    shift;  // true composite lift = map + shift
  };

  // f o g together with the integer dropped by normalization.
  inline ShiftedLift compose_with_shift(CircleLift const& f,
                                        CircleLift const& g) {
    std::vector<Dyadic> xs;
    xs.reserve(f.size() + g.size());
    for (auto const& n : g.nodes()) {
      xs.push_back(n.x);
    }
    for (auto const& n : f.nodes()) {
      xs.push_back(g.lift_inverse(n.x).frac());
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Dyadic> ys;
    ys.reserve(xs.size());
    for (auto const& x : xs) {
      ys.push_back(f.lift(g.lift(x)));
    }
    auto [map, shift] = CircleLift::assemble(std::move(xs), std::move(ys));
    return {std::move(map), std::move(shift)};
  }

  // f o g.
  inline std::ostream& operator<<(std::ostream& os, CircleLift const& f) {
    os << "{";
    for (auto const& n : f.nodes()) {
      os << "(" << n.x << ", " << n.y << ")";
    }
    return os << "}";
  }

  inline CircleLift compose(CircleLift const& f, CircleLift const& g) {
    return compose_with_shift(f, g).map;
  }

  inline CircleLift inverse(CircleLift const& f) {
    std::vector<Dyadic> xs;
    xs.reserve(f.size() + 1);
    xs.emplace_back(0);
    for (auto const& n : f.nodes()) {
      xs.push_back(n.y.frac());
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Dyadic> ys;
    ys.reserve(xs.size());
    for (auto const& x : xs) {
      ys.push_back(f.lift_inverse(x));
    }
    return CircleLift::assemble(std::move(xs), std::move(ys)).first;
  }

  // f^n by repeated squaring; negative n inverts first.
  inline CircleLift power(CircleLift const& f, std::int64_t n) {
    CircleLift base = n < 0 ? inverse(f) : f;
    auto       e    = static_cast<std::uint64_t>(n < 0 ? -n : n);
    CircleLift acc;
    while (e > 0) {
      if (e & 1u) {
        acc = compose(acc, base);
      }
      e >>= 1;
      if (e > 0) {
        base = compose(base, base);
      }
    }
    return acc;
  }

  // a o b o a^-1 o b^-1.
  inline CircleLift commutator(CircleLift const& a, CircleLift const& b) {
    return compose(compose(a, b), compose(inverse(a), inverse(b)));
  }

  // h o f o h^-1.
  inline CircleLift conjugate(CircleLift const& h, CircleLift const& f) {
    return compose(compose(h, f), inverse(h));
  }

  // Dyadic breakpoints (automatic) and every slope a power of two.
  inline bool is_thompson(CircleLift const& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!f.log2_slope(i)) {
        return false;
      }
    }
    return true;
  }

}  // namespace torusact

template <>
struct std::hash<torusact::CircleLift> {
  std::size_t operator()(torusact::CircleLift const& f) const {
    return f.hash();
  }
};
