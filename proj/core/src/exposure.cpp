#include "liftlab/exposure.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace liftlab {

namespace {

void pool_remove(std::vector<std::uint32_t>& pool, std::vector<std::uint32_t>& pos,
                 std::uint32_t value) {
  const std::uint32_t at = pos[value];
  const std::uint32_t last = pool.back();
  pool[at] = last;
  pos[last] = at;
  pool.pop_back();
}

}  // namespace

ExposureState::ExposureState(BaseGraph base, std::size_t h, std::uint64_t seed,
                             ExposureSchedule schedule)
    : base_(std::move(base)), h_(h), schedule_(schedule), rng_(seed) {
  if (h_ == 0) throw std::invalid_argument("lift fibre size must be positive");
  edges_.resize(static_cast<std::size_t>(base_.edge_count()));
  for (auto& es : edges_) {
    es.forward.assign(h_, kUnexposed);
    es.backward.assign(h_, kUnexposed);
  }
  for (int e = 0; e < base_.edge_count(); ++e) {
    if (base_.is_cycle_edge(e)) {
      fill_from(edges_[idx(e)], Permutation::random(h_, rng_));
    } else if (schedule_ == ExposureSchedule::Upfront) {
      const Permutation p = Permutation::random(h_, rng_);
      auto img = p.image();
      auto inv = p.inverse();
      edges_[idx(e)].hidden.assign(img.begin(), img.end());
      edges_[idx(e)].hidden_inverse.assign(inv.image().begin(), inv.image().end());
    }
  }
}

void ExposureState::fill_from(EdgeState& es, const Permutation& p) {
  for (std::uint32_t j = 0; j < h_; ++j) {
    es.forward[j] = p(j);
    es.backward[p(j)] = j;
  }
  es.exposed = h_;
  es.free_tails.clear();
  es.tail_pos.clear();
  es.free_heads.clear();
  es.head_pos.clear();
}

void ExposureState::ensure_pools(EdgeState& es) const {
  if (!es.tail_pos.empty()) return;
  es.free_tails.resize(h_);
  std::iota(es.free_tails.begin(), es.free_tails.end(), std::uint32_t{0});
  es.tail_pos = es.free_tails;
  es.free_heads = es.free_tails;
  es.head_pos = es.free_tails;
}

void ExposureState::record(EdgeState& es, std::uint32_t tail, std::uint32_t head) {
  es.forward[tail] = head;
  es.backward[head] = tail;
  ++es.exposed;
  if (!es.tail_pos.empty()) {
    pool_remove(es.free_tails, es.tail_pos, tail);
    pool_remove(es.free_heads, es.head_pos, head);
  }
}

std::uint32_t ExposureState::expose(int edge, Side side, std::uint32_t index) {
  if (index >= h_) throw std::out_of_range("fibre index out of range");
  EdgeState& es = edges_.at(idx(edge));
  auto& map = side == Side::Tail ? es.forward : es.backward;
  if (map[index] != kUnexposed) throw std::logic_error("pair already exposed");

  std::uint32_t other;
  if (!es.hidden.empty()) {
    other = side == Side::Tail ? es.hidden[index] : es.hidden_inverse[index];
  } else {
    ensure_pools(es);
    auto& pool = side == Side::Tail ? es.free_heads : es.free_tails;
    other = pool[uniform_below(rng_, pool.size())];
  }

  if (side == Side::Tail)
    record(es, index, other);
  else
    record(es, other, index);
  transcript_.push_back({edge, side, index, other});
  return other;
}

void ExposureState::force_permutation(int edge, const Permutation& p) {
  if (!transcript_.empty()) throw std::logic_error("cannot force after exposure began");
  if (p.size() != h_) throw std::invalid_argument("permutation size mismatch");
  EdgeState& es = edges_.at(idx(edge));
  es.hidden.clear();
  es.hidden_inverse.clear();
  es.forward.assign(h_, kUnexposed);
  es.backward.assign(h_, kUnexposed);
  es.exposed = 0;
  fill_from(es, p);
}

LiftGraph ExposureState::expose_all() {
  std::vector<Permutation> perms;
  perms.reserve(edges_.size());
  for (auto& es : edges_) {
    if (es.exposed < h_) {
      if (!es.hidden.empty()) {
        for (std::uint32_t j = 0; j < h_; ++j)
          if (es.forward[j] == kUnexposed) {
            es.forward[j] = es.hidden[j];
            es.backward[es.hidden[j]] = j;
          }
      } else if (es.exposed == 0) {
        Permutation p = Permutation::random(h_, rng_);
        for (std::uint32_t j = 0; j < h_; ++j) {
          es.forward[j] = p(j);
          es.backward[p(j)] = j;
        }
      } else {
        auto& heads = es.free_heads;
        for (std::size_t i = heads.size(); i > 1; --i)
          std::swap(heads[i - 1], heads[uniform_below(rng_, i)]);
        for (std::size_t i = 0; i < heads.size(); ++i) {
          es.forward[es.free_tails[i]] = heads[i];
          es.backward[heads[i]] = es.free_tails[i];
        }
      }
      es.exposed = h_;
      es.free_tails.clear();
      es.free_heads.clear();
      es.tail_pos.clear();
      es.head_pos.clear();
    }
    perms.emplace_back(es.forward);
  }
  return LiftGraph(base_, std::move(perms));
}

}  // namespace liftlab
