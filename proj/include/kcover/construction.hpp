#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "kcover/group.hpp"
#include "kcover/permutation.hpp"
#include "kcover/wreath.hpp"

namespace kcover {

/// Input of the cover construction: T = <x, y> with |x| = 2 and |y| an odd
/// prime, covering K_n.
struct ConstructionJob {
  std::size_t n = 0;
  GroupHandle group;
  Permutation x;
  Permutation y;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

ValidationReport validate_job(ConstructionJob const &job);

bool is_prime(std::uint64_t v);

/// The group data of the construction inside X = T wr_A S_n.
struct Construction {
  std::shared_ptr<WreathContext const> context;
  ElemId x = 0;
  ElemId y = 0;
  std::vector<Permutation> h_generators;  // H = Sym{2..n}
  std::vector<Permutation> l_generators;  // L = Sym{3..n}
  Permutation delta;                      // (1,2)
  WreathElement f;                        // base part, sigma = 1
  WreathElement g;                        // (f, delta)
  std::vector<WreathElement> y_generators;  // embedded H generators, then g
  std::vector<Permutation> h_elements;     // all of H, sorted
  std::vector<Permutation> l_elements;     // all of L, sorted

  WreathContext const &wreath() const { return *context; }
  std::vector<WreathElement> h_wreath_elements() const;
};

/// f(a) = y on O_1, y^-1 on O_{n-1}, x on O_2 and O_{n-2}, 1 elsewhere.
WreathElement build_f(WreathContext const &ctx, ElemId x, ElemId y);

/// Requires a validated job. T is enumerated when within `enum_cap`.
Construction build_construction(ConstructionJob job, std::size_t enum_cap = kDefaultEnumerationCap);

/// s = (g (2,3))^3, which lies in the base group.
WreathElement s_element(Construction const &c);

/// Generators of the K_4 Cayley form and of the kernel N = <t1, t2, t3>.
struct K4Generators {
  WreathElement h1, h2;
  WreathElement s1, s2, s3;
  WreathElement t1, t2, t3;
};

K4Generators k4_cayley_generators(Construction const &c);

/// For n = 4, the canonical index of the k-th cycle in the ordering
/// (1234), (1432), (1243), (1342), (1324), (1423) used by the K_4 tuples.
inline constexpr std::array<std::size_t, 6> kK4ListingOrder{0, 5, 1, 3, 2, 4};

/// Reorders a length-6 base part from canonical order into the K_4 listing.
std::vector<ElemId> to_k4_listing(std::vector<ElemId> const &base);

/// Permutation of {1..6} induced on the K_4 listing by sigma in S_4.
Permutation k4_index_action(WreathContext const &ctx, Permutation const &sigma);

}  // namespace kcover
