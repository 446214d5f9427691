#include "liftlab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace liftlab {

Permutation::Permutation(std::vector<value_type> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || hit[v]) throw std::invalid_argument("not a permutation");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t h) {
  Permutation p;
  p.image_.resize(h);
  std::iota(p.image_.begin(), p.image_.end(), value_type{0});
  return p;
}

Permutation Permutation::rotation(std::size_t h) {
  Permutation p;
  p.image_.resize(h);
  for (std::size_t j = 0; j < h; ++j) p.image_[j] = static_cast<value_type>((j + 1) % h);
  return p;
}

Permutation Permutation::random(std::size_t h, Rng& rng) {
  if (h == 0) throw std::invalid_argument("permutation size must be positive");
  Permutation p = identity(h);
  for (std::size_t i = h - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(uniform_below(rng, i + 1));
    std::swap(p.image_[i], p.image_[j]);
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.image_.resize(image_.size());
  for (std::size_t j = 0; j < image_.size(); ++j) inv.image_[image_[j]] = static_cast<value_type>(j);
  return inv;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw std::invalid_argument("permutation sizes differ");
  Permutation out;
  out.image_.resize(image_.size());
  for (std::size_t j = 0; j < image_.size(); ++j) out.image_[j] = next.image_[image_[j]];
  return out;
}

std::size_t Permutation::fixed_points() const {
  std::size_t n = 0;
  for (std::size_t j = 0; j < image_.size(); ++j) n += image_[j] == j;
  return n;
}

std::vector<std::size_t> cycle_lengths(const Permutation& p) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (auto j = static_cast<Permutation::value_type>(start); !seen[j]; j = p(j)) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::vector<std::size_t> compose_cycle_structure(std::span<const Permutation> perms) {
  if (perms.empty()) throw std::invalid_argument("empty permutation list");
  Permutation walk = perms.front();
  for (const auto& p : perms.subspan(1)) walk = walk.then(p);
  return cycle_lengths(walk);
}

}  // namespace liftlab
