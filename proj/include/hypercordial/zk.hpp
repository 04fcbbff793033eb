#pragma once

#include <optional>
#include <vector>

#include "hypercordial/error.hpp"

namespace hypercordial {

// l distinct elements of Z_k with a prescribed sum.
struct SubsetSumWitness {
  int modulus = 2;
  int target = 0;
  std::vector<int> elements;  // sorted ascending, pairwise distinct

  bool operator==(const SubsetSumWitness& other) const = default;
};

// Distinctness, range and modular-sum check, independent of how the witness
// was produced.
bool verify_witness(const SubsetSumWitness& witness);

// Constructive solver. For 1 <= l < k this always succeeds:
//   odd k:  a size-l zero-sum set is Z_k minus inverse pairs {x, k-x} (minus
//           the zero for even l); for a != 0 build the size-(l+1) zero-sum
//           set retaining the pair {a, k-a} and drop k-a.
//   even k: the balanced sum is k/2; a size-l set of sum k/2 is Z_k minus
//           inverse pairs (minus the zero for odd l); for a != k/2 and l > 2
//           build the size-(l+1) half-sum set retaining k/2 - a and drop it;
//           l <= 2 is answered by direct enumeration.
// Pairs are dropped in increasing order of x, never touching a retained
// pair; k/2 is handled by the parity rules above, never as a pair.
// For l == k the full set is the only candidate, so the call succeeds iff
// a == k(k-1)/2 mod k. Throws Error(invalid_size) for l < 1 or l > k and
// Error(infeasible) when no witness exists.
SubsetSumWitness distinct_subset_sum(int k, int l, int a);

// Witness drawn from Z_k minus `forbidden`, found by lexicographic search
// over the reduced ground set; no constructive guarantee. Throws
// Error(invalid_size) for l < 1 or l > k - |forbidden|, Error(infeasible)
// when the search exhausts.
SubsetSumWitness distinct_subset_sum_avoiding(int k, int l, int a,
                                              const std::vector<int>& forbidden);

// Ground truth by exhaustive enumeration of all l-subsets of the ground set.
// Returns the lexicographically first witness, or nullopt when none exists.
std::optional<SubsetSumWitness> oracle_subset_sum(
    int k, int l, int a, const std::vector<int>& forbidden = {});

// Every witness the avoiding search could return, in lexicographic order.
// Plumbing for the labeler, which may need to try alternatives when one
// witness paints a later extension step into a corner.
std::vector<SubsetSumWitness> enumerate_subset_sums(
    int k, int l, int a, const std::vector<int>& forbidden = {});

}  // namespace hypercordial
