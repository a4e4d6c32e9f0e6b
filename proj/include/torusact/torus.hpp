#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "certificate.hpp"
#include "rotation.hpp"

namespace torusact {

  // (f, g) acting on the torus coordinatewise.
  struct PairMap {
    ThompsonElement first;
    ThompsonElement second;

    friend bool operator==(PairMap const&, PairMap const&) = default;
  };

  inline PairMap compose(PairMap const& p, PairMap const& q) {
    return {compose(p.first, q.first), compose(p.second, q.second)};
  }

  inline PairMap power(PairMap const& p, std::int64_t n) {
    return {power(p.first, n), power(p.second, n)};
  }

  inline bool commutes(PairMap const& p, PairMap const& q) {
    return compose(p, q) == compose(q, p);
  }

  // lcm of the coordinate orders, or nullopt if either exceeds the cutoff.
  inline std::optional<std::uint64_t> pair_order(PairMap const& p,
                                                 std::uint64_t  cutoff) {
    auto a = element_order(p.first, cutoff);
    auto b = element_order(p.second, cutoff);
    if (!a || !b) {
      return std::nullopt;
    }
    return std::lcm(*a, *b);
  }

  struct DeckPairPower {
    std::uint64_t first_exponent  = 0;
    std::uint64_t second_exponent = 0;
    std::uint64_t order           = 0;
  };

  struct CommutationCheck {
    bool first_pair  = false;  // (A_i, C_i) commutes with the power
    bool second_pair = false;  // (B_i, D_i) commutes with the power
  };

  // Everything here is recomputed from r itself.
  struct TorusRotationReport {
    std::int64_t                  m = 0, k = 0;
    PairMap                       r;
    std::uint64_t                 expected_order = 0;  // 8 |k m|
    std::optional<std::uint64_t>  order_r;
    std::pair<RotationNumber, RotationNumber> rotation_pair;
    std::uint64_t                 power_exponent = 0;  // 2 |k m|
    PairMap                       power;
    std::optional<DeckPairPower>  power_in_deck;
    std::vector<CommutationCheck> commutation_checks;

    bool all_checks_pass() const {
      if (!order_r || *order_r != expected_order || !power_in_deck
          || power_in_deck->order != 4 || !rotation_pair.first.resolved
          || !rotation_pair.second.resolved) {
        return false;
      }
      for (auto const& c : commutation_checks) {
        if (!c.first_pair || !c.second_pair) {
          return false;
        }
      }
      return true;
    }
  };

  inline constexpr std::uint64_t torus_cover_degree = 4;

  // Lifts the certificates for g (order 2|m|) and f (order 2|k|) to the
  // 4-fold cover, pads them to a common length with identity pairs, and
  // studies r = (s, t) = prod [(A_i, C_i), (B_i, D_i)].
  inline TorusRotationReport build_torus_rotation(
      CommutatorCertificate const& cert_g,
      CommutatorCertificate const& cert_f,
      std::int64_t                 m,
      std::int64_t                 k) {
    if (m == 0 || k == 0) {
      raise(errc::bad_input, "m and k must be nonzero");
    }
    auto const am = static_cast<std::uint64_t>(m < 0 ? -m : m);
    auto const ak = static_cast<std::uint64_t>(k < 0 ? -k : k);
    if (std::gcd(am, ak) != 1) {
      raise(errc::not_coprime, "gcd(m, k) must be 1");
    }
    if (!verify_certificate(cert_g).verified) {
      raise(errc::not_verified, "certificate for g does not verify");
    }
    if (!verify_certificate(cert_f).verified) {
      raise(errc::not_verified, "certificate for f does not verify");
    }
    auto og = element_order(cert_g.target, 2 * am);
    auto of = element_order(cert_f.target, 2 * ak);
    if (!og || *og != 2 * am) {
      raise(errc::not_verified, "target of the first certificate does not have order 2|m|");
    }
    if (!of || *of != 2 * ak) {
      raise(errc::not_verified, "target of the second certificate does not have order 2|k|");
    }

    std::size_t const len = std::max(cert_g.pairs.size(), cert_f.pairs.size());
    auto const        g   = pad_to(cert_g, len);
    auto const        f   = pad_to(cert_f, len);
    if (g.pairs.size() != f.pairs.size()) {
      raise(errc::length_mismatch, "padding did not equalize certificate lengths");
    }
    auto const lg = lift_certificate(g, torus_cover_degree);
    auto const lf = lift_certificate(f, torus_cover_degree);

    TorusRotationReport rep;
    rep.m              = m;
    rep.k              = k;
    rep.r              = PairMap{lg.product, lf.product};
    rep.expected_order = 8 * am * ak;
    rep.order_r        = pair_order(rep.r, rep.expected_order * 2);
    rep.rotation_pair  = {rotation_number_exact(rep.r.first, 8 * am),
                          rotation_number_exact(rep.r.second, 8 * ak)};
    rep.power_exponent = 2 * am * ak;
    rep.power = power(rep.r, static_cast<std::int64_t>(rep.power_exponent));
    auto e1   = deck_exponent(rep.power.first, torus_cover_degree);
    auto e2   = deck_exponent(rep.power.second, torus_cover_degree);
    if (e1 && e2) {
      std::uint64_t const o1 = torus_cover_degree / std::gcd(*e1, torus_cover_degree);
      std::uint64_t const o2 = torus_cover_degree / std::gcd(*e2, torus_cover_degree);
      rep.power_in_deck      = DeckPairPower{*e1, *e2, std::lcm(o1, o2)};
    }
    for (std::size_t i = 0; i < len; ++i) {
      PairMap const ac{lg.lifted_pairs[i].first, lf.lifted_pairs[i].first};
      PairMap const bd{lg.lifted_pairs[i].second, lf.lifted_pairs[i].second};
      rep.commutation_checks.push_back(
          CommutationCheck{commutes(ac, rep.power), commutes(bd, rep.power)});
    }
    return rep;
  }

}  // namespace torusact
