#include "kcover/stabilizer_chain.hpp"

#include <limits>
#include <stdexcept>

namespace kcover {

StabilizerChain::StabilizerChain(std::span<Permutation const> generators, std::size_t degree)
    : degree_(degree) {
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw PermutationError("generator degree " + std::to_string(g.degree()) +
                             " does not match group degree " + std::to_string(degree));
    if (g.is_identity()) continue;
    strong_.push_back(g);
    if (fixes_base_prefix(g, base_.size())) base_.push_back(g.first_moved());
  }
  levels_.resize(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) rebuild_level(i);

  // Holt's SCHREIERSIMS: walk levels bottom-up; a non-sifting Schreier
  // generator is added and processing restarts at the level it dropped out.
  std::size_t i = base_.size();
  while (i > 0) {
    std::size_t const level = i - 1;
    bool restarted = false;
    auto const orbit = levels_[level].orbit;
    for (std::size_t oi = 0; oi < orbit.size() && !restarted; ++oi) {
      Point const p = orbit[oi];
      for (std::size_t si = 0; si < strong_.size() && !restarted; ++si) {
        if (!fixes_base_prefix(strong_[si], level)) continue;
        Permutation const &s = strong_[si];
        auto const &up = *levels_[level].transversal[p];
        auto const &uq = *levels_[level].transversal[s(p)];
        Permutation h = up * s * uq.inverse();
        auto [residue, dropped] = sift(std::move(h), level + 1);
        if (residue.is_identity()) continue;
        strong_.push_back(residue);
        if (dropped == base_.size()) {
          base_.push_back(residue.first_moved());
          levels_.emplace_back();
        }
        for (std::size_t l = level + 1; l <= dropped; ++l) rebuild_level(l);
        i = dropped + 1;
        restarted = true;
      }
    }
    if (!restarted) --i;
  }
}

bool StabilizerChain::fixes_base_prefix(Permutation const &p, std::size_t count) const {
  for (std::size_t j = 0; j < count; ++j)
    if (p(base_[j]) != base_[j]) return false;
  return true;
}

void StabilizerChain::rebuild_level(std::size_t i) {
  Level level;
  level.transversal.assign(degree_ + 1, std::nullopt);
  Point const b = base_[i];
  level.transversal[b] = Permutation(degree_);
  level.orbit.push_back(b);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    Point const p = level.orbit[head];
    for (auto const &s : strong_) {
      if (!fixes_base_prefix(s, i)) continue;
      Point const q = s(p);
      if (level.transversal[q]) continue;
      level.transversal[q] = *level.transversal[p] * s;
      level.orbit.push_back(q);
    }
  }
  levels_[i] = std::move(level);
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation h, std::size_t from) const {
  for (std::size_t l = from; l < base_.size(); ++l) {
    Point const p = h(base_[l]);
    auto const &u = levels_[l].transversal[p];
    if (!u) return {std::move(h), l};
    h = h * u->inverse();
  }
  return {std::move(h), base_.size()};
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t result = 1;
  for (auto const &level : levels_) {
    auto const len = level.orbit.size();
    if (result > std::numeric_limits<std::uint64_t>::max() / len)
      throw std::overflow_error("group order exceeds 64 bits");
    result *= len;
  }
  return result;
}

bool StabilizerChain::contains(Permutation const &p) const {
  if (p.degree() != degree_) return false;
  return sift(p, 0).residue.is_identity();
}

}  // namespace kcover
