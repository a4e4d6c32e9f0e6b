#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "thompson.hpp"

namespace torusact {

  // Lengths for n intervals with cyclic ratios in {1/2, 1, 2}. With a symmetry
  // s (a power of two dividing n) the pattern repeats s times, each block
  // covering 1/s. A block of p intervals uses u = 2^(a+1) - p lengths 2^-a and
  // w = 2p - 2^(a+1) lengths 2^-(a+1), where 2^a <= p < 2^(a+1); long ones
  // first. For p a power of two this is p equal lengths.
  inline std::vector<Dyadic> default_profile(std::uint64_t n,
                                             std::uint64_t sym = 1) {
    if (n == 0 || sym == 0 || n % sym != 0) {
      raise(errc::bad_profile, "symmetry must divide the interval count");
    }
    if ((sym & (sym - 1)) != 0) {
      raise(errc::bad_profile,
            "symmetry " + std::to_string(sym) + " would need non-dyadic points");
    }
    std::uint64_t const p = n / sym;
    std::uint64_t       a = 0;
    while ((std::uint64_t(1) << (a + 1)) <= p) {
      ++a;
    }
    std::uint64_t const u  = (std::uint64_t(1) << (a + 1)) - p;
    auto const          ls = static_cast<std::int64_t>(log2_u64(sym));
    std::vector<Dyadic> block;
    for (std::uint64_t i = 0; i < p; ++i) {
      std::uint64_t e = i < u ? a : a + 1;
      block.push_back(Dyadic(1, e).mul_pow2(-ls));
    }
    std::vector<Dyadic> out;
    out.reserve(n);
    for (std::uint64_t b = 0; b < sym; ++b) {
      out.insert(out.end(), block.begin(), block.end());
    }
    return out;
  }

  // The element sending the i-th interval of the profile affinely onto the
  // (i + q mod n)-th one. It has order n and rotation number q/n.
  inline ThompsonElement finite_order_element(
      std::uint64_t                            n,
      std::int64_t                             q,
      std::optional<std::uint64_t>             sym     = std::nullopt,
      std::optional<std::vector<Dyadic>> const& profile = std::nullopt) {
    if (n == 0) {
      raise(errc::bad_input, "interval count must be positive");
    }
    auto const nn    = static_cast<std::int64_t>(n);
    auto const shift = static_cast<std::uint64_t>(((q % nn) + nn) % nn);
    if (std::gcd(shift, n) != 1 && n != 1) {
      raise(errc::not_coprime,
            "shift " + std::to_string(q) + " is not coprime to "
                + std::to_string(n));
    }
    std::vector<Dyadic> lengths;
    if (profile) {
      lengths = *profile;
    } else if ((n & (n - 1)) == 0) {
      lengths.assign(n, Dyadic(1, log2_u64(n)));
    } else {
      lengths = default_profile(n, sym.value_or(1));
    }

    if (lengths.size() != n) {
      raise(errc::bad_profile,
            "profile has " + std::to_string(lengths.size())
                + " lengths, expected " + std::to_string(n));
    }
    Dyadic total(0);
    for (auto const& l : lengths) {
      if (l.sign() <= 0) {
        raise(errc::bad_profile, "lengths must be positive");
      }
      total += l;
    }
    if (total != Dyadic(1)) {
      raise(errc::bad_profile, "lengths sum to " + total.to_string());
    }
    for (std::uint64_t i = 0; i < n; ++i) {
      auto const ratio = to_dyadic(divide(lengths[(i + shift) % n], lengths[i]));
      if (!ratio || !log2_if_power(*ratio)) {
        raise(errc::bad_profile,
              "interval " + std::to_string(i)
                  + " maps with a slope that is not a power of two");
      }
    }
    if (sym) {
      std::uint64_t const s = *sym;
      if (s == 0 || n % s != 0) {
        raise(errc::bad_profile, "symmetry must divide the interval count");
      }
      if ((s & (s - 1)) != 0) {
        raise(errc::bad_profile,
              "symmetry " + std::to_string(s) + " would need non-dyadic points");
      }
      std::uint64_t const period = n / s;
      for (std::uint64_t i = 0; i + period < n; ++i) {
        if (lengths[i] != lengths[i + period]) {
          raise(errc::bad_profile, "profile is not invariant under 1/"
                                       + std::to_string(s) + " rotation");
        }
      }
    }

    std::vector<Dyadic> starts(n);
    for (std::uint64_t i = 1; i < n; ++i) {
      starts[i] = starts[i - 1] + lengths[i - 1];
    }
    std::vector<Node> nodes;
    nodes.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      std::uint64_t j = i + shift;
      Dyadic        y = j < n ? starts[j] : starts[j - n] + Dyadic(1);
      nodes.push_back(Node{starts[i], y});
    }
    return ThompsonElement::from_nodes(std::move(nodes));
  }

}  // namespace torusact
