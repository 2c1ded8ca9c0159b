#include "kcover/structure_checks.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "kcover/n_cycles.hpp"
#include "kcover/orbit.hpp"

namespace kcover {

CycleClassReport cycle_class_check(std::size_t n) {
  CycleClassReport r;
  r.n = n;
  auto const cycles = enumerate_n_cycles(n);
  std::vector<std::vector<Permutation>> classes(n - 1);
  r.partition = true;
  for (auto const &alpha : cycles) {
    auto const k = classify_Ok(alpha).k;
    if (k < 1 || k > n - 1) {
      r.partition = false;
      continue;
    }
    classes[k - 1].push_back(alpha);
  }
  std::size_t total = 0;
  for (auto const &c : classes) {
    r.class_sizes.push_back(c.size());
    total += c.size();
  }
  r.partition = r.partition && total == cycles.size();

  auto const expected = factorial(n - 2);
  r.sizes_equal = std::all_of(r.class_sizes.begin(), r.class_sizes.end(),
                              [&](std::size_t s) { return s == expected; });

  std::vector<Permutation> l_gens{parse_cycles("(3,4)", n)};
  if (n > 4) {
    std::vector<Point> images(n);
    for (Point i = 1; i <= n; ++i) images[i - 1] = i;
    for (Point i = 3; i < n; ++i) images[i - 1] = i + 1;
    images[n - 1] = 3;
    l_gens.emplace_back(images);
  }
  auto const act = [](Permutation const &a, Permutation const &l) { return conjugate(a, l); };
  r.l_regular = true;
  for (auto const &c : classes)
    if (!is_regular(factorial(n - 2), std::span<Permutation const>(l_gens),
                    std::span<Permutation const>(c), act))
      r.l_regular = false;

  auto const delta = parse_cycles("(1,2)", n);
  r.delta_swaps = true;
  for (std::size_t k = 1; k < n; ++k)
    for (auto const &alpha : classes[k - 1])
      if (classify_Ok(conjugate(alpha, delta)).k != n - k) r.delta_swaps = false;
  return r;
}

GIdentityReport g_identity_check(Construction const &c) {
  GIdentityReport r;
  auto const &ctx = c.wreath();
  r.g_squared_trivial = ctx.multiply(c.g, c.g) == ctx.identity();
  r.l_commutes = std::all_of(c.l_elements.begin(), c.l_elements.end(), [&](Permutation const &l) {
    auto const lt = ctx.top(l);
    return ctx.multiply(lt, c.g) == ctx.multiply(c.g, lt);
  });
  auto const h = c.h_wreath_elements();
  auto const meet = conj_intersection(ctx, std::span<WreathElement const>(h), c.g);
  std::vector<Permutation> tops;
  for (auto const &e : meet) tops.push_back(e.sigma);
  std::sort(tops.begin(), tops.end());
  r.intersection_order = meet.size();
  r.intersection_is_l = tops == c.l_elements;
  r.expected_order = factorial(ctx.n() - 2);
  return r;
}

SElementReport s_element_check(Construction const &c) {
  SElementReport r;
  auto const &ctx = c.wreath();
  auto const &pool = ctx.pool();
  auto const n = ctx.n();
  auto const step = ctx.multiply(c.g, ctx.top(parse_cycles("(2,3)", n)));
  auto const s = ctx.power(step, 3);
  r.in_base = s.in_base();
  if (!r.in_base) return r;

  std::vector<Point> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<Point>(i + 2 > n ? 1 : i + 2);
  Permutation const alpha(a);
  auto const x = pool.element(c.x), y = pool.element(c.y);
  auto const s_alpha = pool.element(s.base[ctx.cycle_index(alpha)]);
  auto const s_alpha_inv = pool.element(s.base[ctx.cycle_index(alpha.inverse())]);
  r.s_alpha = s_alpha.to_cycles();
  r.s_alpha_inv = s_alpha_inv.to_cycles();
  r.s_alpha_ok = s_alpha == y * y * x;
  r.s_alpha_inv_ok = s_alpha_inv == y.inverse() * y.inverse() * x;
  std::vector<Permutation> pair{s_alpha, s_alpha_inv};
  r.generated_order = group_order(pair, pool.group().degree());
  r.generates_t = r.generated_order == pool.group().order();

  if (n >= 7) {
    r.beta_checked = true;
    std::vector<Point> order{1, 4, 2, 5, 3, 6};
    for (Point i = 7; i <= n; ++i) order.push_back(i);
    std::vector<Point> b(n);
    for (std::size_t i = 0; i < n; ++i) b[order[i] - 1] = order[(i + 1) % n];
    r.s_beta_trivial = s.base[ctx.cycle_index(Permutation(b))] == ElementPool::identity();
  }
  return r;
}

Permutation evaluate_word(std::string_view word, Permutation const &x, Permutation const &y) {
  Permutation r(x.degree());
  std::size_t i = 0;
  while (i < word.size()) {
    char const letter = word[i++];
    if (letter != 'x' && letter != 'y')
      throw std::invalid_argument("unexpected letter in word '" + std::string(word) + "'");
    long exponent = 1;
    if (i < word.size() && word[i] == '^') {
      ++i;
      bool negative = false;
      if (i < word.size() && word[i] == '-') {
        negative = true;
        ++i;
      }
      if (i >= word.size() || !std::isdigit(static_cast<unsigned char>(word[i])))
        throw std::invalid_argument("missing exponent in word '" + std::string(word) + "'");
      exponent = 0;
      while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i])))
        exponent = exponent * 10 + (word[i++] - '0');
      if (negative) exponent = -exponent;
    }
    auto const base = letter == 'x' ? x : y;
    auto const factor = exponent < 0 ? base.inverse() : base;
    for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) r = r * factor;
  }
  return r;
}

std::array<K4Literal, 6> const kK4Literals{{
    {"s1", {"y", "y^-1", "y", "y^-1", "x", "x"}, "(1,2)(3,4)"},
    {"s2", {"x", "x", "y^-1", "y", "y", "y^-1"}, "(3,4)(5,6)"},
    {"s3", {"y^-1", "y", "x", "x", "y^-1", "y"}, "(1,2)(5,6)"},
    {"t1", {"yxy", "y^-1xy^-1", "y^2x", "y^-2x", "xy^2", "xy^-2"}, "()"},
    {"t2", {"y^2x", "y^-2x", "yxy", "y^-1xy^-1", "xy^-2", "xy^2"}, "()"},
    {"t3", {"xy^2", "xy^-2", "y^-2x", "y^2x", "yxy", "y^-1xy^-1"}, "()"},
}};

K4LiteralReport k4_literal_check(Construction const &c, ConstructionJob const &job) {
  K4LiteralReport r;
  auto const &ctx = c.wreath();
  auto const k = k4_cayley_generators(c);
  std::array<WreathElement const *, 6> const computed{&k.s1, &k.s2, &k.s3, &k.t1, &k.t2, &k.t3};
  for (std::size_t e = 0; e < kK4Literals.size(); ++e) {
    auto const &lit = kK4Literals[e];
    auto const listing = to_k4_listing(computed[e]->base);
    for (std::size_t i = 0; i < 6; ++i) {
      auto const want = evaluate_word(lit.words[i], job.x, job.y);
      auto const got = ctx.pool().element(listing[i]);
      if (want != got)
        r.mismatches.push_back(std::string(lit.name) + "[" + std::to_string(i + 1) + "]: expected " +
                               std::string(lit.words[i]) + " = " + want.to_cycles() + ", got " +
                               got.to_cycles());
    }
    auto const action = k4_index_action(ctx, computed[e]->sigma);
    if (action != parse_cycles(lit.listing_action, 6))
      r.mismatches.push_back(std::string(lit.name) + " top part: expected " +
                             std::string(lit.listing_action) + ", got " + action.to_cycles());
  }
  return r;
}

}  // namespace kcover
