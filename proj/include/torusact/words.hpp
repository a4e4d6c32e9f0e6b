#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thompson.hpp"

namespace torusact {

  // Words in the standard generators of T. Letters a, b, c are the
  // generators and A, B, C their inverses; a word names the composite of its
  // letters read left to right, so "ab" is a o b.
  using Word = std::string;

  inline bool is_letter(char l) {
    return std::string_view("aAbBcC").find(l) != std::string_view::npos;
  }

  inline char invert_letter(char l) {
    return static_cast<char>(l ^ 0x20);  // swaps case
  }

  inline Word invert_word(Word const& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) {
      l = invert_letter(l);
    }
    return out;
  }

  inline Word repeat_word(Word const& w, std::uint64_t k) {
    Word out;
    out.reserve(w.size() * k);
    for (std::uint64_t i = 0; i < k; ++i) {
      out += w;
    }
    return out;
  }

  // Cancels adjacent inverse letters until none remain.
  inline Word free_reduce(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (char l : w) {
      if (!out.empty() && out.back() == invert_letter(l)) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  inline ThompsonElement letter_element(char l) {
    static std::array<ThompsonElement, 6> const table = [] {
      auto g = generators::standard();
      return std::array<ThompsonElement, 6>{
          g[0], inverse(g[0]), g[1], inverse(g[1]), g[2], inverse(g[2])};
    }();
    switch (l) {
      case 'a': return table[0];
      case 'A': return table[1];
      case 'b': return table[2];
      case 'B': return table[3];
      case 'c': return table[4];
      case 'C': return table[5];
      default: break;
    }
    raise(errc::parse_error, std::string("'") + l + "' is not a generator letter");
  }

  inline ThompsonElement evaluate(Word const& w) {
    ThompsonElement acc;
    for (char l : w) {
      acc = compose(acc, letter_element(l));
    }
    return acc;
  }

  // Exponent sums of a, b and c: the image of the word in Z^3.
  inline std::array<std::int64_t, 3> exponent_sums(Word const& w) {
    std::array<std::int64_t, 3> v{0, 0, 0};
    for (char l : w) {
      auto i = static_cast<std::size_t>((l | 0x20) - 'a');
      v[i] += (l & 0x20) ? 1 : -1;
    }
    return v;
  }

  // Three words equal to the identity in T whose exponent sums form a basis
  // of Z^3. They are found by collision search in the word ball of radius 5
  // and are checked by relator_basis_holds().
  inline std::array<Word, 3> const& relator_basis() {
    static std::array<Word, 3> const basis{"baBCbaBBcA", "AcbCb", "CacaC"};
    return basis;
  }

  inline bool relator_basis_holds() {
    for (auto const& r : relator_basis()) {
      if (!evaluate(r).is_identity()) {
        return false;
      }
    }
    return true;
  }

  // Multiplies w on the right by relators so that every exponent sum
  // vanishes; the element named by the word does not change.
  inline Word balance_exponents(Word const& w) {
    auto const&                                basis = relator_basis();
    std::array<std::array<std::int64_t, 3>, 3> m{};  // columns are relators
    for (std::size_t j = 0; j < 3; ++j) {
      auto v = exponent_sums(basis[j]);
      for (std::size_t i = 0; i < 3; ++i) {
        m[i][j] = v[i];
      }
    }
    auto det3 = [](std::array<std::array<std::int64_t, 3>, 3> const& x) {
      return x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1])
             - x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0])
             + x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0]);
    };
    std::int64_t const det = det3(m);
    if (det != 1 && det != -1) {
      raise(errc::bad_input, "relator exponent sums do not span Z^3");
    }
    auto const target = exponent_sums(w);
    Word       out    = w;
    for (std::size_t j = 0; j < 3; ++j) {  // Cramer's rule, exact for det +-1
      auto mj = m;
      for (std::size_t i = 0; i < 3; ++i) {
        mj[i][j] = target[i];
      }
      std::int64_t const coeff = det3(mj) / det;
      Word const&        piece = coeff > 0 ? invert_word(basis[j]) : basis[j];
      out += repeat_word(piece, static_cast<std::uint64_t>(coeff > 0 ? coeff
                                                                     : -coeff));
    }
    return free_reduce(out);
  }

  // Splits a word with vanishing exponent sums into commutators of words,
  // using x U x^-1 V = [x, U] (U V).
  inline std::vector<std::pair<Word, Word>> commutator_words(Word w) {
    if (exponent_sums(w) != std::array<std::int64_t, 3>{0, 0, 0}) {
      raise(errc::bad_input, "word '" + w + "' has nonzero exponent sums");
    }
    std::vector<std::pair<Word, Word>> out;
    w = free_reduce(w);
    while (!w.empty()) {
      char const  x   = w[0];
      std::size_t pos = w.find(invert_letter(x), 1);
      Word        u   = w.substr(1, pos - 1);
      Word        v   = w.substr(pos + 1);
      out.emplace_back(Word(1, x), u);
      w = free_reduce(u + v);
    }
    return out;
  }

  namespace detail {
    // Rotation of the dyadic tree at the node [1 - 2^-j, 1] of the right
    // spine: a rescaled copy of generator a there, identity elsewhere.
    inline Word spine_rotation_word(std::uint64_t j) {
      if (j == 0) {
        return "a";
      }
      return Word(j - 1, 'A') + "b" + Word(j - 1, 'a');
    }

    inline ThompsonElement spine_rotation(std::uint64_t j) {
      if (j == 0) {
        return generators::a();
      }
      Dyadic const u = Dyadic(1) - Dyadic(1, j);
      Dyadic const h = Dyadic(1, j + 1);  // half the node
      return ThompsonElement::from_nodes({{Dyadic(0), Dyadic(0)},
                                          {u, u},
                                          {u + h, u + h.mul_pow2(-1)},
                                          {u + h + h.mul_pow2(-1), u + h}});
    }

    // Cyclic shift of the n leaves of the right vine by one place forward.
    inline Word vine_shift_word(std::uint64_t n) {
      if (n == 2) {
        return "ac";
      }
      if (n == 3) {
        return "C";
      }
      return Word(n - 4, 'B') + "Cb" + Word(n - 4, 'a');
    }

    struct Leaf {
      Dyadic        start;
      std::uint64_t depth;  // the leaf has length 2^-depth
    };

    // Word for the element of F carrying the leaves of the right vine onto
    // the given leaves of a standard dyadic partition, in order. Rotating at
    // the first spine node whose left child is not a leaf moves the partition
    // towards the vine; the rotations, read backwards, build the map.
    inline Word vine_to_partition_word(std::vector<Leaf> leaves) {
      Word out;
      for (;;) {
        std::size_t const n = leaves.size();
        std::size_t       j = 0;
        while (j + 1 < n && leaves[j].depth == j + 1) {
          ++j;
        }
        if (j + 1 >= n) {
          return out;
        }
        auto const rot_inv = inverse(spine_rotation(j));
        for (auto& leaf : leaves) {
          Dyadic const len = Dyadic(1, leaf.depth);
          Dyadic const s   = rot_inv.lift().lift(leaf.start);
          Dyadic const e   = rot_inv.lift().lift(leaf.start + len);
          leaf.start       = s;
          leaf.depth       = static_cast<std::uint64_t>(-*log2_if_power(e - s));
        }
        out += spine_rotation_word(j);
      }
    }

    // Largest standard dyadic intervals [u, u + 2^-e] tiling [from, to].
    inline std::vector<Leaf> dyadic_tiling(Dyadic from, Dyadic const& to) {
      std::vector<Leaf> out;
      while (from < to) {
        std::uint64_t e = from.is_zero() ? 0 : from.exponent();
        while (from + Dyadic(1, e) > to) {
          ++e;
        }
        out.push_back(Leaf{from, e});
        from += Dyadic(1, e);
      }
      return out;
    }
  }  // namespace detail

  // A word in the standard generators naming f. The domain circle is cut
  // into standard dyadic intervals each mapped affinely onto a standard
  // dyadic interval; with D and R the two partitions and k the index of the
  // image of the first domain leaf, f = phi_R o shift^k o phi_D^-1.
  inline Word factor_into_generators(ThompsonElement const& f) {
    if (f.is_identity()) {
      return {};
    }
    CircleLift const& F = f.lift();
    std::vector<Dyadic> cuts;
    for (auto const& n : F.nodes()) {
      cuts.push_back(n.x);
    }
    cuts.push_back(F.lift_inverse(Dyadic(1)).frac());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.push_back(Dyadic(1));

    std::vector<detail::Leaf> domain, image;
    std::vector<detail::Leaf> todo;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      auto piece = detail::dyadic_tiling(cuts[i], cuts[i + 1]);
      todo.insert(todo.end(), piece.begin(), piece.end());
    }
    // Halve any leaf whose image is not a standard dyadic interval.
    for (std::size_t i = 0; i < todo.size();) {
      auto const&  leaf = todo[i];
      Dyadic const s    = F.lift(leaf.start).frac();
      Dyadic const e    = s + (F.lift(leaf.start + Dyadic(1, leaf.depth))
                            - F.lift(leaf.start));
      auto const   k    = *log2_if_power(e - s);
      Dyadic const len  = e - s;
      if (exact_div(s, len).floor() * len == s && e <= Dyadic(1)) {
        domain.push_back(leaf);
        image.push_back(detail::Leaf{s, static_cast<std::uint64_t>(-k)});
        ++i;
      } else {
        detail::Leaf left{leaf.start, leaf.depth + 1};
        detail::Leaf right{leaf.start + Dyadic(1, leaf.depth + 1),
                           leaf.depth + 1};
        todo[i] = left;
        todo.insert(todo.begin() + static_cast<std::ptrdiff_t>(i) + 1, right);
      }
    }

    std::size_t const n = domain.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
      order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return image[x].start < image[y].start;
    });
    std::vector<detail::Leaf> sorted_image;
    std::size_t               k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sorted_image.push_back(image[order[i]]);
      if (order[i] == 0) {
        k = i;
      }
    }

    Word w = detail::vine_to_partition_word(sorted_image);
    if (k != 0) {
      w += repeat_word(detail::vine_shift_word(n), k);
    }
    w += invert_word(detail::vine_to_partition_word(domain));
    return free_reduce(w);
  }

}  // namespace torusact
