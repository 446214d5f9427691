#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "liftlab/rng.hpp"

namespace liftlab {

/// A bijection of {0..h-1}, stored as its image sequence.
class Permutation {
 public:
  using value_type = std::uint32_t;

  Permutation() = default;

  /// Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<value_type> image);

  static Permutation identity(std::size_t h);

  /// A single h-cycle j -> j+1 mod h.
  static Permutation rotation(std::size_t h);

  /// Fisher-Yates: each of the h! permutations equally likely.
  /// Throws std::invalid_argument for h == 0.
  static Permutation random(std::size_t h, Rng& rng);

  std::size_t size() const { return image_.size(); }
  value_type operator()(value_type j) const { return image_[j]; }
  std::span<const value_type> image() const { return image_; }

  Permutation inverse() const;

  /// j -> next(this(j)).
  Permutation then(const Permutation& next) const;

  std::size_t fixed_points() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<value_type> image_;
};

/// Sorted cycle lengths of `p`; they sum to p.size().
std::vector<std::size_t> cycle_lengths(const Permutation& p);

/// Cycle lengths of the map j -> perms.back()(...perms[1](perms[0](j))),
/// i.e. the walk once around the cycle fibres of a lift. Each length l
/// corresponds to a cycle of length k*l in the lifted cycle when
/// perms.size() == k. Throws std::invalid_argument on mismatched sizes or an
/// empty list.
std::vector<std::size_t> compose_cycle_structure(std::span<const Permutation> perms);

}  // namespace liftlab
