#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "thompson.hpp"

namespace torusact {

  // Random standard dyadic partition of the circle into n intervals, grown
  // by splitting a uniformly chosen interval. Returns interval starts.
  template <class Rng>
  std::vector<Dyadic> random_dyadic_partition(Rng& rng, std::size_t n) {
    std::vector<std::pair<Dyadic, std::uint64_t>> leaves{{Dyadic(0), 0}};
    while (leaves.size() < n) {
      std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
      std::size_t const i = pick(rng);
      auto const [start, depth] = leaves[i];
      leaves[i] = {start, depth + 1};
      leaves.insert(leaves.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                    {start + Dyadic(1, depth + 1), depth + 1});
    }
    std::vector<Dyadic> out;
    for (auto const& l : leaves) {
      out.push_back(l.first);
    }
    return out;
  }

  // Element of T carrying the i-th interval of one random partition onto the
  // (i + k)-th interval of another; at most max_nodes nodes.
  template <class Rng>
  ThompsonElement random_element(Rng& rng, std::size_t max_nodes) {
    std::uniform_int_distribution<std::size_t> size(1, max_nodes < 1 ? 1 : max_nodes);
    std::size_t const n     = size(rng);
    auto const        dom   = random_dyadic_partition(rng, n);
    auto const        ran   = random_dyadic_partition(rng, n);
    std::size_t const shift = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    std::vector<Node> nodes;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = i + shift;
      nodes.push_back(Node{dom[i], j < n ? ran[j] : ran[j - n] + Dyadic(1)});
    }
    return ThompsonElement::from_nodes(std::move(nodes));
  }

  template <class Rng>
  Dyadic random_dyadic_in_unit(Rng& rng, std::uint64_t max_exponent) {
    std::uint64_t const e =
        std::uniform_int_distribution<std::uint64_t>(0, max_exponent)(rng);
    std::uint64_t const top = std::uint64_t(1) << e;
    std::uint64_t const n   = std::uniform_int_distribution<std::uint64_t>(0, top - 1)(rng);
    return Dyadic(Integer(n), e);
  }

}  // namespace torusact
