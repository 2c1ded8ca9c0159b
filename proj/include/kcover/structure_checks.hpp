#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kcover/construction.hpp"
#include "kcover/permutation.hpp"

namespace kcover {

/// The classes O_1..O_{n-1} of n-cycles and how L = Sym{3..n} and
/// delta = (1,2) act on them.
struct CycleClassReport {
  std::size_t n = 0;
  std::vector<std::size_t> class_sizes;  // index k-1
  bool partition = false;                // every n-cycle lies in exactly one class
  bool sizes_equal = false;              // |O_k| = (n-2)!
  bool l_regular = false;                // on every O_k
  bool delta_swaps = false;              // O_k^delta = O_{n-k}
  bool ok() const { return partition && sizes_equal && l_regular && delta_swaps; }
};

CycleClassReport cycle_class_check(std::size_t n);

struct GIdentityReport {
  bool g_squared_trivial = false;
  bool l_commutes = false;  // [l, g] = 1 for every l in L
  bool intersection_is_l = false;
  std::size_t intersection_order = 0;  // |H cap H^g|
  std::uint64_t expected_order = 0;    // (n-2)!
  bool ok() const {
    return g_squared_trivial && l_commutes && intersection_is_l && intersection_order == expected_order;
  }
};

GIdentityReport g_identity_check(Construction const &c);

struct SElementReport {
  bool in_base = false;
  std::string s_alpha, s_alpha_inv;  // cycle notation
  bool s_alpha_ok = false;           // y^2 x
  bool s_alpha_inv_ok = false;       // y^-2 x
  std::uint64_t generated_order = 0; // |<s(alpha), s(alpha^-1)>|
  bool generates_t = false;
  bool beta_checked = false;         // n >= 7
  bool s_beta_trivial = false;
  bool ok() const {
    return in_base && s_alpha_ok && s_alpha_inv_ok && generates_t && (!beta_checked || s_beta_trivial);
  }
};

/// alpha = (1,2,...,n) and, for n >= 7, beta = (1,4,2,5,3,6,7,...,n).
SElementReport s_element_check(Construction const &c);

/// Evaluates a word such as "y^-1xy^2" in x and y.
Permutation evaluate_word(std::string_view word, Permutation const &x, Permutation const &y);

/// Expected entries of s1..s3 and t1..t3 in the K_4 listing, as words in x
/// and y, with the induced action of the top part on the listing.
struct K4Literal {
  std::string_view name;
  std::array<std::string_view, 6> words;
  std::string_view listing_action;
};

extern std::array<K4Literal, 6> const kK4Literals;

struct K4LiteralReport {
  std::vector<std::string> mismatches;  // "t2[4]: expected ..., got ..."
  bool ok() const { return mismatches.empty(); }
};

K4LiteralReport k4_literal_check(Construction const &c, ConstructionJob const &job);

}  // namespace kcover
