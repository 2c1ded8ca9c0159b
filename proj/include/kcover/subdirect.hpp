#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcover/automorphism.hpp"
#include "kcover/element_pool.hpp"
#include "kcover/group.hpp"

namespace kcover {

/// A k-tuple over T, one entry per direct factor.
using Tuple = std::vector<ElemId>;

class NotSubdirect : public std::runtime_error {
 public:
  NotSubdirect(std::size_t component, std::string const &what)
      : std::runtime_error(what), component(component) {}
  std::size_t component;  // 0-based
};

/// M <= T^k written as a product of full diagonals, one per block.
///
/// For every generator z of M and every component i of block j,
/// rho_i(z) = link_i(rho_base(j)(z)). Components and blocks are 0-based;
/// blocks are sorted and each block's base is its least component.
struct SubdirectStructure {
  std::size_t k = 0;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of;
  std::vector<std::optional<AutomorphismMap>> links;  // empty for base components

  std::size_t d() const { return blocks.size(); }
  std::size_t base(std::size_t block) const { return blocks[block].front(); }
  bool is_base(std::size_t component) const { return !links[component].has_value(); }
};

/// Applies an automorphism to an element handle.
ElemId apply(AutomorphismMap const &phi, ElementPool const &pool, ElemId t);

/// Linking decomposition of <gens> <= T^k. Throws NotSubdirect when some
/// component projection fails to generate T.
SubdirectStructure subdirect_decompose(ElementPool const &pool, std::span<Tuple const> gens);

bool membership(Tuple const &z, SubdirectStructure const &s, ElementPool const &pool);

/// Same blocks, and each generating set lies in the other's group.
bool structures_equal(SubdirectStructure const &s1, SubdirectStructure const &s2,
                      std::span<Tuple const> gens1, std::span<Tuple const> gens2,
                      ElementPool const &pool);

/// Indices of a subset of `gens` generating the same group, chosen greedily
/// (densest tuples first) and then thinned by dropping any generator whose
/// removal leaves the structure unchanged.
std::vector<std::size_t> prune_generators(ElementPool const &pool, std::span<Tuple const> gens,
                                          SubdirectStructure const &full);

/// Block-invariance under a permutation of the components, given as image
/// indices (0-based).
bool blocks_invariant_under(SubdirectStructure const &s, std::span<std::uint32_t const> action);

/// Text export: the block partition, then for each non-base component the
/// images of T's generators under its linking automorphism. 1-based.
std::string export_structure(SubdirectStructure const &s);

struct DValueReport {
  std::size_t d = 0;
  std::size_t n = 0;
  std::uint64_t arity = 0;             // (n-1)!
  bool divides_arity = false;
  std::uint64_t quotient = 0;          // (n-1)!/d when it divides
  bool bound_applicable = false;       // n >= 7
  std::uint64_t bound = 0;             // ceil(C(n, n/2) / 2)
  bool bound_ok = true;
  bool ok() const { return divides_arity && bound_ok; }
};

DValueReport d_report(SubdirectStructure const &s, std::size_t n);

std::uint64_t binomial(std::size_t n, std::size_t k);

}  // namespace kcover
