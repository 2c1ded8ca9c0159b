#include "kcover/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <numeric>
#include <ostream>
#include <sstream>

namespace kcover {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{1});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (auto v : images_) {
    if (v < 1 || v > images_.size() || seen[v])
      throw PermutationError("image array is not a bijection of {1.." +
                             std::to_string(images_.size()) + "}");
    seen[v] = true;
  }
}

Permutation::Permutation(std::initializer_list<Point> images)
    : Permutation(std::vector<Point>(images)) {}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i] - 1] = static_cast<Point>(i + 1);
  return r;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(degree());
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Point Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1) return static_cast<Point>(i + 1);
  return 0;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size() + 1, false);
  for (Point start = 1; start <= images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point p = start; !seen[p]; p = images_[p - 1]) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (Point start = 1; start <= images_.size(); ++start) {
    if (seen[start] || images_[start - 1] == start) continue;
    out += '(';
    for (Point p = start; !seen[p]; p = images_[p - 1]) {
      seen[p] = true;
      if (p != start) out += ',';
      out += std::to_string(p);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(Permutation const &p, Permutation const &q) {
  if (p.degree() != q.degree())
    throw PermutationError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                           std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q(p(static_cast<Point>(i + 1)));
  return Permutation(std::move(images));
}

Permutation conjugate(Permutation const &p, Permutation const &by) {
  if (p.degree() != by.degree())
    throw PermutationError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                           std::to_string(by.degree()));
  // p^by maps i^by to (i^p)^by.
  std::vector<Point> images(p.degree());
  for (Point i = 1; i <= p.degree(); ++i) images[by(i) - 1] = by(p(i));
  return Permutation(std::move(images));
}

std::uint64_t order_of(Permutation const &p) {
  std::uint64_t order = 1;
  for (auto len : p.cycle_type()) order = std::lcm(order, static_cast<std::uint64_t>(len));
  return order;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  auto const fail = [&](std::string_view token, std::string const &why) -> PermutationError {
    return PermutationError("cannot parse cycle notation \"" + std::string(text) + "\": " + why +
                            " at '" + std::string(token) + "'");
  };

  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{1});
  std::vector<bool> used(degree + 1, false);

  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail(text.substr(pos, 1), "expected '('");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw fail(text.substr(pos), "unterminated cycle");
    auto body = text.substr(pos + 1, close - pos - 1);
    std::vector<Point> cycle;
    if (!body.empty()) {
      std::size_t start = 0;
      while (true) {
        auto comma = body.find(',', start);
        auto token = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
        if (token.empty() || token.find_first_not_of("0123456789") != token.npos)
          throw fail(token.empty() ? body : token, "expected a point");
        unsigned long value = token.size() > 9 ? 0 : std::stoul(std::string(token));
        if (value < 1 || value > degree)
          throw fail(token, "point out of range 1.." + std::to_string(degree));
        if (used[value]) throw fail(token, "repeated point");
        used[value] = true;
        cycle.push_back(static_cast<Point>(value));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
  }
  return Permutation(std::move(images));
}

std::ostream &operator<<(std::ostream &os, Permutation const &p) { return os << p.to_cycles(); }

}  // namespace kcover
