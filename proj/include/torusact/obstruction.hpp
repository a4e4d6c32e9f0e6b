#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "matrix.hpp"

namespace torusact {

  struct HyperbolicPiece {
    Integer isometry_order_bound;  // input: bound on finite isometry orders
  };

  struct SolPiece {
    IntMatrix2x2 monodromy;
  };

  struct SeifertPiece {
    Integer                base_order_bound;  // d, an input
    bool                   is_solid_torus = false;
    std::optional<Integer> fiberings;  // nullopt: infinitely many
  };

  using Piece = std::variant<HyperbolicPiece, SolPiece, SeifertPiece>;

  struct JSJGraph {
    std::vector<Piece>   pieces;
    std::size_t          boundary_piece = 0;
    std::vector<Integer> adjacent_fiber_exponents;  // v for each torus between
                                                    // two Seifert pieces
  };

  // One line of a verdict trace: rule name, the piece it applies to (if
  // any), and the value it contributes.
  struct TraceEntry {
    std::string                rule;
    std::optional<std::size_t> piece;
    Integer                    value;
    std::string                note;

    friend bool operator==(TraceEntry const&, TraceEntry const&) = default;
  };

  struct BoundSet {
    Integer j, k, l, t;
    Integer threshold() const {
      Integer fact = 1;
      for (Integer i = 2; i <= j; ++i) {
        fact *= i;
      }
      return t * l * k * fact;
    }
    friend bool operator==(BoundSet const&, BoundSet const&) = default;
  };

  inline void validate(JSJGraph const& g) {
    if (g.pieces.empty()) {
      raise(errc::malformed_graph, "graph has no pieces");
    }
    if (g.boundary_piece >= g.pieces.size()) {
      raise(errc::malformed_graph, "boundary piece index out of range");
    }
    for (std::size_t i = 0; i < g.pieces.size(); ++i) {
      auto const& p   = g.pieces[i];
      std::string where = "piece " + std::to_string(i);
      if (auto h = std::get_if<HyperbolicPiece>(&p)) {
        if (h->isometry_order_bound <= 0) {
          raise(errc::malformed_graph, where + ": isometry bound must be positive");
        }
      } else if (auto s = std::get_if<SolPiece>(&p)) {
        if (!s->monodromy.is_hyperbolic()) {
          raise(errc::malformed_graph, where + ": monodromy is not hyperbolic");
        }
      } else {
        auto const& sf = std::get<SeifertPiece>(p);
        if (sf.base_order_bound <= 0) {
          raise(errc::malformed_graph, where + ": d must be positive");
        }
        if (sf.fiberings && *sf.fiberings <= 0) {
          raise(errc::malformed_graph, where + ": fiberings must be positive");
        }
      }
    }
    for (auto const& v : g.adjacent_fiber_exponents) {
      if (v == 0) {
        raise(errc::malformed_graph, "adjacent Seifert fibers must not be isotopic (v = 0)");
      }
    }
  }

  // The per-piece contributions behind the bounds, in a replayable form.
  inline std::vector<TraceEntry> bound_trace(JSJGraph const& g) {
    validate(g);
    std::vector<TraceEntry> out;
    out.push_back({"pieces", std::nullopt, Integer(g.pieces.size()), ""});
    for (std::size_t i = 0; i < g.pieces.size(); ++i) {
      auto const& p = g.pieces[i];
      if (auto h = std::get_if<HyperbolicPiece>(&p)) {
        out.push_back({"isometry_bound", i, h->isometry_order_bound, ""});
      } else if (auto s = std::get_if<SolPiece>(&p)) {
        IntMatrix2x2 a = s->monodromy;
        std::string  note;
        if (a.trace() < 0) {
          a    = IntMatrix2x2{-a.a, -a.b, -a.c, -a.d};
          note = "monodromy negated to positive trace";
        }
        out.push_back({"sol_bound", i, sol_order_bound(a), note});
      } else {
        auto const& sf   = std::get<SeifertPiece>(p);
        std::string note = "order 2d: f replaced by f^2 on the base";
        if (!sf.fiberings || *sf.fiberings > 1) {
          note += "; several fiberings, bound kept conservative";
        }
        out.push_back({"seifert_factor", i, 2 * sf.base_order_bound, note});
      }
    }
    for (auto const& v : g.adjacent_fiber_exponents) {
      out.push_back({"fiber_exponent", std::nullopt, abs(v), ""});
    }
    return out;
  }

  // j, k, l, t recomputed from trace entries alone.
  inline BoundSet bounds_from_trace(std::vector<TraceEntry> const& trace) {
    BoundSet b{0, 1, 1, 1};
    Integer  product = 1, max_v = 0;
    bool     any_k = false, any_seifert = false, any_v = false;
    for (auto const& e : trace) {
      if (e.rule == "pieces") {
        b.j = e.value;
      } else if (e.rule == "isometry_bound" || e.rule == "sol_bound") {
        b.k   = any_k ? (e.value > b.k ? e.value : b.k) : e.value;
        any_k = true;
      } else if (e.rule == "seifert_factor") {
        product *= e.value;
        any_seifert = true;
      } else if (e.rule == "fiber_exponent") {
        max_v = e.value > max_v ? e.value : max_v;
        any_v = true;
      }
    }
    b.l = any_seifert ? product + 1 : Integer(1);
    b.t = any_v ? max_v + 1 : Integer(1);
    return b;
  }

  inline BoundSet compute_bounds(JSJGraph const& g) {
    return bounds_from_trace(bound_trace(g));
  }

  // An available torsion order, or "unbounded" when arbitrarily high orders
  // are available.
  using TorsionOrder = std::optional<Integer>;

  struct Verdict {
    bool                       ruled_out = false;
    std::string                reason;
    std::optional<std::string> required_conclusion;
    std::vector<TraceEntry>    trace;
  };

  namespace detail {
    inline Verdict torsion_verdict_from_trace(std::vector<TraceEntry> trace,
                                              TorsionOrder const& o1,
                                              TorsionOrder const& o2,
                                              bool                solid_torus) {
      Verdict v;
      BoundSet const b = bounds_from_trace(trace);
      Integer const  threshold = b.threshold();
      trace.push_back({"threshold", std::nullopt, threshold, "t l k j!"});
      if (solid_torus) {
        v.ruled_out           = false;
        v.required_conclusion = "solid torus";
        v.reason              = "a solid torus piece carries the boundary action";
        v.trace               = std::move(trace);
        return v;
      }
      bool beats = true;
      for (auto const* o : {&o1, &o2}) {
        if (!*o) {
          trace.push_back({"order_unbounded", std::nullopt, Integer(0),
                           "arbitrarily high orders exceed every threshold"});
        } else {
          bool const above = **o > threshold;
          trace.push_back({above ? "order_above_threshold" : "order_below_threshold",
                           std::nullopt, **o, ""});
          beats = beats && above;
        }
      }
      v.ruled_out = beats;
      v.reason    = beats ? "both torsion orders exceed t l k j!: an extension "
                            "would force fibers to rotate in two directions"
                          : "an available torsion order does not exceed t l k j!";
      v.trace     = std::move(trace);
      return v;
    }
  }  // namespace detail

  inline bool has_solid_torus_piece(JSJGraph const& g) {
    for (auto const& p : g.pieces) {
      if (auto s = std::get_if<SeifertPiece>(&p); s && s->is_solid_torus) {
        return true;
      }
    }
    return false;
  }

  inline Verdict torsion_extension_verdict(JSJGraph const&     g,
                                           TorsionOrder const& o1,
                                           TorsionOrder const& o2) {
    for (auto const* o : {&o1, &o2}) {
      if (*o && **o <= 0) {
        raise(errc::bad_input, "torsion orders must be positive");
      }
    }
    return detail::torsion_verdict_from_trace(bound_trace(g), o1, o2,
                                              has_solid_torus_piece(g));
  }

  // Recomputes a torsion verdict from its own trace: the bound entries give
  // the threshold and the order entries give the comparisons.
  inline Verdict replay_torsion_verdict(Verdict const& v) {
    std::vector<TraceEntry> bounds;
    std::vector<TorsionOrder> orders;
    for (auto const& e : v.trace) {
      if (e.rule == "threshold") {
        continue;
      }
      if (e.rule == "order_unbounded") {
        orders.emplace_back(std::nullopt);
      } else if (e.rule == "order_above_threshold"
                 || e.rule == "order_below_threshold") {
        orders.emplace_back(e.value);
      } else {
        bounds.push_back(e);
      }
    }
    while (orders.size() < 2) {
      orders.emplace_back(std::nullopt);
    }
    return detail::torsion_verdict_from_trace(
        bounds, orders[0], orders[1], v.required_conclusion.has_value());
  }

  // The additive order of e^n in H^{2n}(BZ/k; Z) = Z/k.
  inline Integer euler_power_order(Integer const& k, Integer const& n) {
    if (k < 2) {
      raise(errc::bad_input, "k must be at least 2");
    }
    if (n < 1) {
      raise(errc::bad_input, "n must be positive");
    }
    return k;
  }

  // True when arbitrarily high torsion orders are claimed, or when every
  // supplied order divides a strictly larger later one.
  inline bool nontorsion_from_unbounded_torsion(std::vector<Integer> const& orders,
                                                bool claim_unbounded) {
    if (claim_unbounded) {
      return true;
    }
    if (orders.size() < 2) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < orders.size(); ++i) {
      bool found = false;
      for (std::size_t j = i + 1; j < orders.size() && !found; ++j) {
        found = orders[j] > orders[i] && orders[i] > 0 && orders[j] % orders[i] == 0;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  // Free rank of Z[alpha, chi] / (alpha chi) with both generators in degree
  // 2: only pure powers survive.
  inline std::uint64_t thompson_cohomology_rank(std::uint64_t degree) {
    if (degree == 0) {
      return 1;
    }
    return degree % 2 == 0 ? 2 : 0;
  }

  inline Verdict euler_injectivity_verdict(bool irreducible,
                                           bool euler_injective,
                                           bool is_solid_torus) {
    Verdict v;
    v.trace.push_back({"irreducible", std::nullopt, Integer(irreducible ? 1 : 0), ""});
    v.trace.push_back({"euler_injective", std::nullopt, Integer(euler_injective ? 1 : 0), ""});
    v.trace.push_back({"solid_torus", std::nullopt, Integer(is_solid_torus ? 1 : 0), ""});
    if (!irreducible || !euler_injective) {
      v.reason = "hypotheses fail: need an irreducible manifold and injective Euler classes";
      return v;
    }
    if (is_solid_torus) {
      v.required_conclusion = "solid torus";
      v.reason              = "the solid torus is the one manifold left open";
      return v;
    }
    v.ruled_out = true;
    v.reason    = "injective Euler classes cannot extend over a manifold other than the solid torus";
    return v;
  }

}  // namespace torusact
