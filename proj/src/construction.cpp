#include "kcover/construction.hpp"

#include <algorithm>
#include <stdexcept>

#include "kcover/arithmetic.hpp"
#include "kcover/n_cycles.hpp"

namespace kcover {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

ValidationReport validate_job(ConstructionJob const &job) {
  ValidationReport r;
  if (job.n < 4) r.problems.push_back("n must be at least 4, got " + std::to_string(job.n));
  if (job.n > kMaxWreathDegree)
    r.problems.push_back("n must be at most " + std::to_string(kMaxWreathDegree) + ", got " +
                         std::to_string(job.n));
  auto const degree = job.group.degree();
  if (job.x.degree() != degree || job.y.degree() != degree) {
    r.problems.push_back("x and y must have the degree of T (" + std::to_string(degree) + ")");
    return r;
  }
  if (!job.group.contains(job.x)) r.problems.push_back("x = " + job.x.to_cycles() + " is not in T");
  if (!job.group.contains(job.y)) r.problems.push_back("y = " + job.y.to_cycles() + " is not in T");
  if (order_of(job.x) != 2)
    r.problems.push_back("|x| must be 2, got " + std::to_string(order_of(job.x)));
  auto const oy = order_of(job.y);
  if (oy == 2 || !is_prime(oy))
    r.problems.push_back("|y| must be an odd prime, got " + std::to_string(oy));
  std::vector<Permutation> xy{job.x, job.y};
  if (group_order(xy, degree) != job.group.order())
    r.problems.push_back("<x, y> is not all of T");
  return r;
}

WreathElement build_f(WreathContext const &ctx, ElemId x, ElemId y) {
  auto const n = ctx.n();
  auto const y_inv = ctx.pool().inverse(y);
  std::vector<ElemId> f(ctx.arity(), ElementPool::identity());
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto const k = classify_Ok(ctx.cycles()[i]).k;
    if (k == 1)
      f[i] = y;
    else if (k == n - 1)
      f[i] = y_inv;
    else if (k == 2 || k == n - 2)
      f[i] = x;
  }
  return ctx.base_element(std::move(f));
}

namespace {

/// Generators (a1, ..., am) and (a_{m-1}, a_m) of Sym on the given points.
std::vector<Permutation> symmetric_generators(std::size_t degree, Point first, Point last) {
  std::vector<Permutation> gens;
  if (last <= first) return gens;
  std::vector<Point> images(degree);
  for (Point i = 1; i <= degree; ++i) images[i - 1] = i;
  for (Point i = first; i < last; ++i) images[i - 1] = i + 1;
  images[last - 1] = first;
  gens.emplace_back(images);
  std::vector<Point> swap(degree);
  for (Point i = 1; i <= degree; ++i) swap[i - 1] = i;
  std::swap(swap[last - 2], swap[last - 1]);
  Permutation t(swap);
  if (t != gens.front()) gens.push_back(std::move(t));
  return gens;
}

std::vector<Permutation> sorted_elements(std::vector<Permutation> const &gens, std::size_t degree) {
  auto elements = closure(gens, degree, factorial(degree));
  std::sort(elements->begin(), elements->end());
  return *elements;
}

}  // namespace

std::vector<WreathElement> Construction::h_wreath_elements() const {
  std::vector<WreathElement> out;
  out.reserve(h_elements.size());
  for (auto const &h : h_elements) out.push_back(context->top(h));
  return out;
}

Construction build_construction(ConstructionJob job, std::size_t enum_cap) {
  auto report = validate_job(job);
  if (!report.ok()) throw std::invalid_argument("invalid construction job: " + report.problems.front());
  auto const n = job.n;
  job.group.enumerate(enum_cap);
  auto pool = std::make_shared<ElementPool const>(job.group);

  Construction c;
  c.context = std::make_shared<WreathContext const>(n, pool);
  c.x = pool->intern(job.x);
  c.y = pool->intern(job.y);
  c.h_generators = symmetric_generators(n, 2, static_cast<Point>(n));
  c.l_generators = symmetric_generators(n, 3, static_cast<Point>(n));
  c.delta = parse_cycles("(1,2)", n);
  c.f = build_f(*c.context, c.x, c.y);
  c.g = WreathElement{c.f.base, c.delta};
  for (auto const &h : c.h_generators) c.y_generators.push_back(c.context->top(h));
  c.y_generators.push_back(c.g);
  c.h_elements = sorted_elements(c.h_generators, n);
  c.l_elements = sorted_elements(c.l_generators, n);
  return c;
}

WreathElement s_element(Construction const &c) {
  auto const &ctx = c.wreath();
  auto const step = ctx.multiply(c.g, ctx.top(parse_cycles("(2,3)", ctx.n())));
  auto s = ctx.power(step, 3);
  if (!s.in_base()) throw std::logic_error("(g(2,3))^3 has a non-trivial top part");
  return s;
}

K4Generators k4_cayley_generators(Construction const &c) {
  auto const &ctx = c.wreath();
  if (ctx.n() != 4) throw std::invalid_argument("the K_4 Cayley generators need n = 4");
  K4Generators k;
  k.h1 = ctx.top(parse_cycles("(2,3,4)", 4));
  k.h2 = ctx.top(parse_cycles("(3,4)", 4));
  auto const h1_inv = ctx.inverse(k.h1);
  auto const mul = [&](std::initializer_list<WreathElement const *> factors) {
    auto r = ctx.identity();
    for (auto const *f : factors) r = ctx.multiply(r, *f);
    return r;
  };
  k.s1 = mul({&c.g, &k.h2});
  k.s2 = mul({&k.h2, &k.h1, &c.g, &k.h1});
  k.s3 = mul({&k.h2, &h1_inv, &c.g, &h1_inv});
  k.t1 = mul({&k.s1, &k.s2, &k.s3});
  k.t2 = mul({&k.s1, &k.s3, &k.s2});
  k.t3 = mul({&k.s2, &k.s1, &k.s3});
  for (auto const *t : {&k.t1, &k.t2, &k.t3})
    if (!t->in_base()) throw std::logic_error("a product s_i s_j s_k left the base group");
  return k;
}

std::vector<ElemId> to_k4_listing(std::vector<ElemId> const &base) {
  if (base.size() != kK4ListingOrder.size()) throw std::invalid_argument("expected 6 entries");
  std::vector<ElemId> out(base.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = base[kK4ListingOrder[k]];
  return out;
}

Permutation k4_index_action(WreathContext const &ctx, Permutation const &sigma) {
  if (ctx.n() != 4) throw std::invalid_argument("K_4 listing needs n = 4");
  std::array<std::size_t, 6> listing_of{};
  for (std::size_t k = 0; k < 6; ++k) listing_of[kK4ListingOrder[k]] = k;
  auto const row = ctx.induced(sigma);
  std::vector<Point> images(6);
  for (std::size_t k = 0; k < 6; ++k)
    images[k] = static_cast<Point>(listing_of[row[kK4ListingOrder[k]]] + 1);
  return Permutation(std::move(images));
}

}  // namespace kcover
