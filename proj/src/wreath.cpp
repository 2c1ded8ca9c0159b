#include "kcover/wreath.hpp"

#include <stdexcept>
#include <string>

#include "kcover/n_cycles.hpp"

namespace kcover {

WreathContext::WreathContext(std::size_t n, std::shared_ptr<ElementPool const> pool)
    : n_(n), pool_(std::move(pool)) {
  if (n < 3 || n > kMaxWreathDegree)
    throw std::invalid_argument("wreath elements are materialized for 3 <= n <= " +
                                std::to_string(kMaxWreathDegree) + ", got " + std::to_string(n));
  cycles_ = enumerate_n_cycles(n);
  if (n <= 7) {
    cache_ = std::make_shared<RowCache>();
    auto const count = factorial(n);
    cache_->rows.resize(count);
    cache_->flags = std::make_unique<std::once_flag[]>(count);
  }
}

std::size_t WreathContext::cycle_index(Permutation const &alpha) const {
  if (alpha.degree() != n_) throw PermutationError("cycle degree does not match n");
  return n_cycle_index(alpha);
}

Permutation WreathContext::act_on_A(Permutation const &alpha, Permutation const &sigma) const {
  return conjugate(alpha, sigma);
}

std::vector<std::uint32_t> WreathContext::induced(Permutation const &sigma) const {
  std::vector<std::uint32_t> row(arity());
  for (std::size_t i = 0; i < row.size(); ++i)
    row[i] = static_cast<std::uint32_t>(n_cycle_index(conjugate(cycles_[i], sigma)));
  return row;
}

std::span<std::uint32_t const> WreathContext::induced_row(
    Permutation const &sigma, std::vector<std::uint32_t> &scratch) const {
  if (!cache_) {
    scratch = induced(sigma);
    return scratch;
  }
  auto const rank = permutation_rank(sigma);
  std::call_once(cache_->flags[rank], [&] { cache_->rows[rank] = induced(sigma); });
  return cache_->rows[rank];
}

WreathElement WreathContext::multiply(WreathElement const &a, WreathElement const &b) const {
  std::vector<std::uint32_t> scratch;
  auto const row = induced_row(a.sigma, scratch);
  WreathElement r;
  r.base.resize(arity());
  auto const &pool = *pool_;
  for (std::size_t i = 0; i < r.base.size(); ++i) r.base[i] = pool.multiply(a.base[i], b.base[row[i]]);
  r.sigma = a.sigma * b.sigma;
  return r;
}

WreathElement WreathContext::inverse(WreathElement const &a) const {
  WreathElement r;
  r.sigma = a.sigma.inverse();
  std::vector<std::uint32_t> scratch;
  auto const row = induced_row(r.sigma, scratch);
  r.base.resize(arity());
  for (std::size_t i = 0; i < r.base.size(); ++i) r.base[i] = pool_->inverse(a.base[row[i]]);
  return r;
}

WreathElement WreathContext::identity() const {
  return {std::vector<ElemId>(arity(), ElementPool::identity()), Permutation(n_)};
}

void WreathContext::serialize(WreathElement const &a, Key &out) const {
  out.insert(out.end(), a.base.begin(), a.base.end());
  for (auto v : a.sigma.images()) out.push_back(v);
}

WreathElement WreathContext::deserialize(std::span<std::uint32_t const> key) const {
  if (key.size() != key_length()) throw std::invalid_argument("wreath key has the wrong length");
  WreathElement r;
  r.base.assign(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(arity()));
  r.sigma = Permutation(std::vector<Point>(key.begin() + static_cast<std::ptrdiff_t>(arity()), key.end()));
  return r;
}

WreathElement WreathContext::top(Permutation const &sigma) const {
  if (sigma.degree() != n_) throw PermutationError("top-group element has the wrong degree");
  return {std::vector<ElemId>(arity(), ElementPool::identity()), sigma};
}

WreathElement WreathContext::base_element(std::vector<ElemId> f) const {
  if (f.size() != arity()) throw std::invalid_argument("base part has the wrong length");
  return {std::move(f), Permutation(n_)};
}

WreathElement WreathContext::power(WreathElement const &a, unsigned exponent) const {
  WreathElement r = identity();
  for (unsigned i = 0; i < exponent; ++i) r = multiply(r, a);
  return r;
}

}  // namespace kcover
