#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rotation.hpp"
#include "thompson.hpp"
#include "words.hpp"

namespace torusact {

  using ElementPair = std::pair<ThompsonElement, ThompsonElement>;

  // target = [a_1, b_1] o ... o [a_n, b_n], claimed.
  struct CommutatorCertificate {
    ThompsonElement          target;
    std::vector<ElementPair> pairs;

    friend bool operator==(CommutatorCertificate const&,
                           CommutatorCertificate const&) = default;
  };

  inline ThompsonElement product_of_commutators(
      std::vector<ElementPair> const& pairs) {
    ThompsonElement acc;
    for (auto const& [a, b] : pairs) {
      acc = compose(acc, commutator(a, b));
    }
    return acc;
  }

  struct VerificationReport {
    bool                              verified = false;
    ThompsonElement                   product;
    bool                              target_in_thompson = false;
    std::vector<std::pair<bool, bool>> pairs_in_thompson;
  };

  inline VerificationReport verify_certificate(CommutatorCertificate const& c) {
    VerificationReport rep;
    rep.target_in_thompson = is_thompson(c.target.lift());
    bool all_pairs         = true;
    for (auto const& [a, b] : c.pairs) {
      bool ok_a = is_thompson(a.lift()), ok_b = is_thompson(b.lift());
      rep.pairs_in_thompson.emplace_back(ok_a, ok_b);
      all_pairs = all_pairs && ok_a && ok_b;
    }
    rep.product  = product_of_commutators(c.pairs);
    rep.verified = all_pairs && rep.target_in_thompson && rep.product == c.target;
    return rep;
  }

  // ---- combinators on certificates -------------------------------------

  inline CommutatorCertificate concatenate(CommutatorCertificate const& x,
                                           CommutatorCertificate const& y) {
    CommutatorCertificate out{compose(x.target, y.target), x.pairs};
    out.pairs.insert(out.pairs.end(), y.pairs.begin(), y.pairs.end());
    return out;
  }

  // [a, b]^-1 = [b, a], taken in reverse order.
  inline CommutatorCertificate invert(CommutatorCertificate const& c) {
    CommutatorCertificate out{inverse(c.target), {}};
    for (auto it = c.pairs.rbegin(); it != c.pairs.rend(); ++it) {
      out.pairs.emplace_back(it->second, it->first);
    }
    return out;
  }

  // h [a, b] h^-1 = [h a h^-1, h b h^-1].
  inline CommutatorCertificate conjugate(ThompsonElement const&       h,
                                         CommutatorCertificate const& c) {
    CommutatorCertificate out{conjugate(h, c.target), {}};
    for (auto const& [a, b] : c.pairs) {
      out.pairs.emplace_back(conjugate(h, a), conjugate(h, b));
    }
    return out;
  }

  inline CommutatorCertificate pad_to(CommutatorCertificate c,
                                      std::size_t           length) {
    while (c.pairs.size() < length) {
      c.pairs.emplace_back(ThompsonElement(), ThompsonElement());
    }
    return c;
  }

  // ---- lifting ------------------------------------------------------------

  struct DeckPower {
    std::uint64_t power_of_product = 0;  // j with product^j a deck power
    std::uint64_t deck_exponent    = 0;  // e with product^j = deck(d)^e
    std::uint64_t order            = 0;  // order of deck(d)^e
  };

  struct LiftReport {
    RotationNumber               rotation;
    std::optional<std::uint64_t> order;
    bool                         projects_to_target = false;
    std::optional<DeckPower>     deck_power;
  };

  struct LiftedCertificate {
    CommutatorCertificate    base;
    std::uint64_t            degree = 0;
    std::vector<ElementPair> lifted_pairs;
    ThompsonElement          product;
    LiftReport               report;
  };

  // Exponent e with f = deck(d)^e, if f is one.
  inline std::optional<std::uint64_t> deck_exponent(ThompsonElement const& f,
                                                    std::uint64_t          d) {
    if (!f.lift().is_rigid()) {
      return std::nullopt;
    }
    Dyadic const scaled = f.nodes()[0].y * Dyadic(static_cast<long long>(d));
    if (scaled.exponent() != 0) {
      return std::nullopt;
    }
    return static_cast<std::uint64_t>(scaled.numerator());
  }

  // Cutoff for the order of the base target when the report is built.
  inline constexpr std::uint64_t lift_report_order_cutoff = 256;

  inline LiftReport lift_report(ThompsonElement const& product,
                                ThompsonElement const& target,
                                std::uint64_t          d) {
    LiftReport rep;
    // pi o product = target o pi as circle maps iff d F(x) - f(d x) is one
    // constant integer; both sides are affine between the sample points.
    std::vector<Dyadic> xs;
    auto const e = static_cast<std::int64_t>(log2_u64(d));
    for (auto const& n : product.nodes()) {
      xs.push_back(n.x);
    }
    for (auto const& n : target.nodes()) {
      for (std::uint64_t j = 0; j < d; ++j) {
        xs.push_back((n.x + Dyadic(static_cast<long long>(j))).mul_pow2(-e));
      }
    }
    std::optional<Dyadic> gap;
    bool                  ok = true;
    for (auto const& x : xs) {
      Dyadic diff = product.lift().lift(x).mul_pow2(e) - target.lift().lift(x.mul_pow2(e));
      if (diff.exponent() != 0 || (gap && *gap != diff)) {
        ok = false;
      }
      gap = diff;
    }
    rep.projects_to_target = ok;

    auto const base_order = element_order(target, lift_report_order_cutoff);
    if (base_order) {
      ThompsonElement const p = power(product, static_cast<std::int64_t>(*base_order));
      if (auto ex = deck_exponent(p, d)) {
        rep.deck_power = DeckPower{*base_order, *ex, d / std::gcd(*ex, d)};
        rep.order      = *base_order * rep.deck_power->order;
      }
    }
    rep.rotation = rotation_number_exact(
        product, rep.order ? *rep.order : lift_report_order_cutoff);
    return rep;
  }

  // Lifts every pair to the degree d cover on sheet 0. The product of the
  // lifted commutators does not depend on the sheets, since deck(d) is
  // central among lifts.
  inline LiftedCertificate lift_certificate(CommutatorCertificate const& c,
                                            std::uint64_t                d) {
    require_power_of_two(d);
    if (!verify_certificate(c).verified) {
      raise(errc::not_verified, "certificate does not multiply to its target");
    }
    LiftedCertificate out;
    out.base   = c;
    out.degree = d;
    for (auto const& [a, b] : c.pairs) {
      out.lifted_pairs.emplace_back(lift_to_cover(a, d, 0), lift_to_cover(b, d, 0));
    }
    out.product = product_of_commutators(out.lifted_pairs);
    out.report  = lift_report(out.product, c.target, d);
    return out;
  }

  // ---- bounded search -----------------------------------------------------

  struct SearchLimits {
    // Stop after this many group operations; zero means no limit.
    std::uint64_t max_operations = 0;
  };

  struct SearchOutcome {
    std::optional<CommutatorCertificate> certificate;
    bool exhausted = true;  // false when the operation limit cut the search
  };

  namespace detail {
    struct BallEntry {
      ThompsonElement element;
      Word            word;
    };

    // Elements of word length <= radius in breadth first order, one
    // shortlex-least word each. Also returns the ball size at each radius.
    inline std::pair<std::vector<BallEntry>, std::vector<std::size_t>>
    word_ball(std::uint64_t radius) {
      std::vector<BallEntry>         ball{{ThompsonElement(), {}}};
      std::vector<std::size_t>       sizes{1};
      std::unordered_set<CircleLift> seen{ball[0].element.lift()};
      std::size_t                    start = 0;
      static constexpr std::string_view letters = "aAbBcC";
      for (std::uint64_t len = 1; len <= radius; ++len) {
        std::size_t const end = ball.size();
        for (std::size_t i = start; i < end; ++i) {
          for (char l : letters) {
            ThompsonElement x = compose(ball[i].element, letter_element(l));
            if (seen.insert(x.lift()).second) {
              ball.push_back({std::move(x), ball[i].word + l});
            }
          }
        }
        start = end;
        sizes.push_back(ball.size());
      }
      return {std::move(ball), std::move(sizes)};
    }

    class Budget {
     public:
      explicit Budget(std::uint64_t limit) : _limit(limit) {}
      // Charges one operation; false once the limit is spent.
      bool spend() {
        if (_limit == 0) {
          return true;
        }
        if (_used == _limit) {
          _hit = true;
          return false;
        }
        ++_used;
        return true;
      }
      bool hit() const {
        return _hit;
      }

     private:
      std::uint64_t _limit, _used = 0;
      bool          _hit = false;
    };
  }  // namespace detail

  // Looks for the target as a product of commutators [x, y] with x, y in the
  // ball of words of length <= depth. Fewer pairs are tried first and, for a
  // given number of pairs, smaller depths first. Distinct commutators are
  // listed once, in enumeration order; the last factor of a product comes
  // from a hash lookup and the others from a depth first walk, so the first
  // certificate found is deterministic.
  inline SearchOutcome find_certificate(ThompsonElement const& target,
                                        std::uint64_t          max_pairs,
                                        std::uint64_t          max_depth,
                                        SearchLimits           limits = {}) {
    SearchOutcome out;
    if (target.is_identity()) {
      out.certificate = CommutatorCertificate{target, {}};
      return out;
    }
    if (max_pairs == 0 || max_depth == 0) {
      return out;
    }
    detail::Budget budget(limits.max_operations);
    auto const [ball, ball_sizes] = detail::word_ball(max_depth);

    // distinct commutators in order of first appearance, with the pair that
    // produced them; built one radius at a time
    std::vector<std::pair<ThompsonElement, std::pair<std::size_t, std::size_t>>> comms;
    std::unordered_map<CircleLift, std::size_t> index;
    std::vector<std::size_t>                     comms_at_depth{0};
    auto grow = [&](std::uint64_t d) {
      std::size_t const lo = ball_sizes[d - 1], hi = ball_sizes[d];
      for (std::size_t i = 1; i < hi; ++i) {
        for (std::size_t j = (i < lo ? lo : 1); j < hi; ++j) {
          if (i == j) {
            continue;
          }
          if (!budget.spend()) {
            return false;
          }
          ThompsonElement c = commutator(ball[i].element, ball[j].element);
          if (!c.is_identity() && index.emplace(c.lift(), comms.size()).second) {
            comms.emplace_back(std::move(c), std::make_pair(i, j));
          }
        }
      }
      comms_at_depth.push_back(comms.size());
      return true;
    };

    std::vector<std::size_t> chosen;
    // Finds factors for target = prefix o (remaining commutators).
    std::function<bool(ThompsonElement const&, std::uint64_t, std::size_t)> walk =
        [&](ThompsonElement const& rest, std::uint64_t left, std::size_t limit) {
          if (left == 1) {
            if (!budget.spend()) {
              return false;
            }
            auto it = index.find(rest.lift());
            if (it != index.end() && it->second < limit) {
              chosen.push_back(it->second);
              return true;
            }
            return false;
          }
          for (std::size_t c = 0; c < limit; ++c) {
            if (!budget.spend()) {
              return false;
            }
            chosen.push_back(c);
            if (walk(compose(inverse(comms[c].first), rest), left - 1, limit)) {
              return true;
            }
            chosen.pop_back();
            if (budget.hit()) {
              return false;
            }
          }
          return false;
        };

    for (std::uint64_t pairs = 1; pairs <= max_pairs; ++pairs) {
      for (std::uint64_t d = 1; d <= max_depth; ++d) {
        if (comms_at_depth.size() <= d && !grow(d)) {
          out.exhausted = false;
          return out;
        }
        chosen.clear();
        if (walk(target, pairs, comms_at_depth[d])) {
          CommutatorCertificate cert{target, {}};
          for (std::size_t c : chosen) {
            auto const [i, j] = comms[c].second;
            cert.pairs.emplace_back(ball[i].element, ball[j].element);
          }
          out.certificate = std::move(cert);
          return out;
        }
        if (budget.hit()) {
          out.exhausted = false;
          return out;
        }
      }
    }
    return out;
  }

  // ---- constructive certificates ------------------------------------------

  inline std::vector<ElementPair> evaluate_pairs(
      std::vector<std::pair<Word, Word>> const& words) {
    std::vector<ElementPair> out;
    out.reserve(words.size());
    for (auto const& [x, u] : words) {
      ThompsonElement a = evaluate(x), b = evaluate(u);
      if (!commutator(a, b).is_identity()) {
        out.emplace_back(std::move(a), std::move(b));
      }
    }
    return out;
  }

  // Certificate for the element named by a word: pad with relators until all
  // exponent sums vanish, then peel off commutators.
  inline CommutatorCertificate certify_word(Word const& w) {
    CommutatorCertificate out{evaluate(w), {}};
    out.pairs = evaluate_pairs(commutator_words(balance_exponents(w)));
    return out;
  }

  namespace detail {
    inline CommutatorCertificate const& letter_certificate(char l) {
      static std::array<CommutatorCertificate, 6> const table = [] {
        std::array<CommutatorCertificate, 6> t;
        std::string_view const              letters = "aAbBcC";
        for (std::size_t i = 0; i < 6; i += 2) {
          t[i]     = certify_word(Word(1, letters[i]));
          t[i + 1] = invert(t[i]);
        }
        return t;
      }();
      return table[std::string_view("aAbBcC").find(l)];
    }
  }  // namespace detail

  // Certificate for any element of T: factor it into the standard generators
  // and concatenate the certificates of the letters. Short words are
  // certified as a whole, which gives fewer pairs.
  inline constexpr std::size_t whole_word_certificate_limit = 48;

  inline CommutatorCertificate constructive_certificate(
      ThompsonElement const& target) {
    Word const w = factor_into_generators(target);
    CommutatorCertificate out;
    if (w.size() <= whole_word_certificate_limit) {
      out = certify_word(w);
    } else {
      out.target = ThompsonElement();
      for (char l : w) {
        out = concatenate(out, detail::letter_certificate(l));
      }
    }
    if (!(out.target == target)) {
      raise(errc::not_verified, "generator factorization does not reproduce the target");
    }
    return out;
  }

}  // namespace torusact
