#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qpsurf {

/// Word in the Artin generators of the braid group on `strands` strands.
/// Letter +i is sigma_i, -i its inverse (1 <= i <= strands - 1).
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Parses `s1 s2 S1` (capital = inverse). Throws std::invalid_argument on bad tokens or indices.
BraidWord parse_braid(std::string_view text, int strands);
std::string to_string(const BraidWord& w);

/// perm[k] = final position of the strand starting at position k (0-based).
using Permutation = std::vector<int>;

/// (sigma_1)(sigma_2 sigma_1)...(sigma_{n-1}...sigma_1)
BraidWord garside_element(int n);
/// (sigma_{n-1}...sigma_1)(sigma_{n-1}...sigma_2)...(sigma_{n-1})
BraidWord canonical_factorization(int n);

Permutation permutation_of(const BraidWord& w);
int exponent_sum(const BraidWord& w);

/// Delta^delta_power * factors[0] * factors[1] * ..., each factor a proper simple
/// braid (a permutation braid other than 1 and Delta), left-weighted.
struct NormalForm {
  int strands = 2;
  int delta_power = 0;
  std::vector<Permutation> factors;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm left_normal_form(const BraidWord& w);
/// Positive-letter expansion of the normal form (Delta^-1 written with inverse letters).
BraidWord to_word(const NormalForm& nf);
std::string to_string(const NormalForm& nf);

bool braid_equal(const BraidWord& a, const BraidWord& b);

}  // namespace qpsurf
