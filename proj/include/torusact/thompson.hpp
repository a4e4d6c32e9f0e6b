#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "circle_lift.hpp"

namespace torusact {

  // An element of Thompson's group T: a circle lift with dyadic breakpoints
  // and power-of-two slopes. The predicate is checked on construction and is
  // preserved by every operation below.
  class ThompsonElement {
   public:
    ThompsonElement() = default;

    explicit ThompsonElement(CircleLift f) : _lift(std::move(f)) {
      if (!is_thompson(_lift)) {
        raise(errc::bad_input, "map is not in Thompson's group T");
      }
    }

    static ThompsonElement from_nodes(std::vector<Node> nodes) {
      return ThompsonElement(CircleLift::from_nodes(std::move(nodes)));
    }

    CircleLift const& lift() const noexcept {
      return _lift;
    }
    operator CircleLift const&() const noexcept {  // NOLINT
      return _lift;
    }
    std::vector<Node> const& nodes() const noexcept {
      return _lift.nodes();
    }
    bool is_identity() const {
      return _lift.is_identity();
    }
    Dyadic operator()(Dyadic const& x) const {
      return _lift(x);
    }

    friend bool operator==(ThompsonElement const&,
                           ThompsonElement const&) = default;
    friend bool operator<(ThompsonElement const& a, ThompsonElement const& b) {
      return a._lift < b._lift;
    }

   private:
    struct Trusted {};
    ThompsonElement(CircleLift f, Trusted) : _lift(std::move(f)) {}

    friend ThompsonElement compose(ThompsonElement const&,
                                   ThompsonElement const&);
    friend ThompsonElement inverse(ThompsonElement const&);
    friend ThompsonElement power(ThompsonElement const&, std::int64_t);
    friend ThompsonElement commutator(ThompsonElement const&,
                                      ThompsonElement const&);
    friend ThompsonElement conjugate(ThompsonElement const&,
                                     ThompsonElement const&);
    friend ThompsonElement rigid_rotation(Dyadic const&);
    friend ThompsonElement lift_to_cover(ThompsonElement const&,
                                         std::uint64_t,
                                         std::uint64_t);

    CircleLift _lift;
  };

  inline std::ostream& operator<<(std::ostream& os, ThompsonElement const& f) {
    return os << f.lift();
  }

  inline ThompsonElement compose(ThompsonElement const& f,
                                 ThompsonElement const& g) {
    return {compose(f.lift(), g.lift()), ThompsonElement::Trusted{}};
  }

  inline ThompsonElement inverse(ThompsonElement const& f) {
    return {inverse(f.lift()), ThompsonElement::Trusted{}};
  }

  inline ThompsonElement power(ThompsonElement const& f, std::int64_t n) {
    return {power(f.lift(), n), ThompsonElement::Trusted{}};
  }

  inline ThompsonElement commutator(ThompsonElement const& a,
                                    ThompsonElement const& b) {
    return {commutator(a.lift(), b.lift()), ThompsonElement::Trusted{}};
  }

  inline ThompsonElement conjugate(ThompsonElement const& h,
                                   ThompsonElement const& f) {
    return {conjugate(h.lift(), f.lift()), ThompsonElement::Trusted{}};
  }

  // x -> x + t mod 1.
  inline ThompsonElement rigid_rotation(Dyadic const& t) {
    return {CircleLift::from_nodes({Node{Dyadic(0), t}}),
            ThompsonElement::Trusted{}};
  }

  inline void require_power_of_two(std::uint64_t d) {
    if (d < 2 || (d & (d - 1)) != 0) {
      raise(errc::not_power_of_two,
            "cover degree " + std::to_string(d) + " is not 2^e with e >= 1");
    }
  }

  inline std::uint64_t log2_u64(std::uint64_t d) {
    std::uint64_t e = 0;
    while ((std::uint64_t(1) << e) < d) {
      ++e;
    }
    return e;
  }

  // Generator of the deck group of the degree d cover x -> d x mod 1.
  inline ThompsonElement deck(std::uint64_t d) {
    require_power_of_two(d);
    return rigid_rotation(Dyadic(1, log2_u64(d)));
  }

  // The lift F of f through pi(x) = d x mod 1 with F(0) = (f(0) + sheet) / d.
  // F commutes with deck(d) and keeps dyadic breakpoints and slopes.
  inline ThompsonElement lift_to_cover(ThompsonElement const& f,
                                       std::uint64_t          d,
                                       std::uint64_t          sheet) {
    require_power_of_two(d);
    if (sheet >= d) {
      raise(errc::bad_input, "sheet index must lie in [0, d)");
    }
    auto const          e = static_cast<std::int64_t>(log2_u64(d));
    std::vector<Dyadic> xs, ys;
    xs.reserve(d * f.nodes().size());
    ys.reserve(d * f.nodes().size());
    for (std::uint64_t j = 0; j < d; ++j) {
      Dyadic const jj(static_cast<long long>(j));
      Dyadic const js(static_cast<long long>(j + sheet));
      for (auto const& n : f.nodes()) {
        xs.push_back((n.x + jj).mul_pow2(-e));
        ys.push_back((n.y + js).mul_pow2(-e));
      }
    }
    return {CircleLift::assemble(std::move(xs), std::move(ys)).first,
            ThompsonElement::Trusted{}};
  }

  // Standard generators of T: the two generators of F and the order three
  // element.
  namespace generators {
    inline ThompsonElement a() {
      return ThompsonElement::from_nodes({{Dyadic(0), Dyadic(0)},
                                          {Dyadic(1, 1), Dyadic(1, 2)},
                                          {Dyadic(3, 2), Dyadic(1, 1)}});
    }

    inline ThompsonElement b() {
      return ThompsonElement::from_nodes({{Dyadic(0), Dyadic(0)},
                                          {Dyadic(1, 1), Dyadic(1, 1)},
                                          {Dyadic(3, 2), Dyadic(5, 3)},
                                          {Dyadic(7, 3), Dyadic(3, 2)}});
    }

    inline ThompsonElement c() {
      return ThompsonElement::from_nodes({{Dyadic(0), Dyadic(3, 2)},
                                          {Dyadic(1, 1), Dyadic(1)},
                                          {Dyadic(3, 2), Dyadic(3, 1)}});
    }

    inline std::vector<ThompsonElement> standard() {
      return {a(), b(), c()};
    }
  }  // namespace generators

}  // namespace torusact
