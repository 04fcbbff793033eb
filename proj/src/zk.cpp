#include "hypercordial/zk.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hypercordial {

namespace {

int full_sum(int k) {
  // 0 + 1 + ... + (k-1) mod k: 0 for odd k, k/2 for even k.
  return (k % 2 == 1) ? 0 : k / 2;
}

std::vector<int> all_of_zk(int k) {
  std::vector<int> out(k);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// Size-l subset of Z_k whose sum is the balanced value full_sum(k), built by
// dropping inverse pairs {x, k-x} in increasing order of x. The parity rules
// decide whether 0 (and, for even k, k/2) stays in. A protected pair is
// never dropped; the self-paired k/2 is never treated as a pair.
std::vector<int> balanced_subset(int k, int l,
                                 std::optional<std::pair<int, int>> keep_pair) {
  const int pair_count = (k - 1) / 2;  // pairs {x, k-x}, x = 1..pair_count
  std::set<int> chosen;
  int pairs_needed;
  if (k % 2 == 1) {
    if (l % 2 == 1) {
      chosen.insert(0);
      pairs_needed = (l - 1) / 2;
    } else {
      pairs_needed = l / 2;
    }
  } else {
    chosen.insert(k / 2);
    if (l % 2 == 0) {
      chosen.insert(0);
      pairs_needed = (l - 2) / 2;
    } else {
      pairs_needed = (l - 1) / 2;
    }
  }

  int kept = 0;
  if (keep_pair) {
    chosen.insert(keep_pair->first);
    chosen.insert(keep_pair->second);
    ++kept;
  }
  for (int x = pair_count; x >= 1 && kept < pairs_needed; --x) {
    if (keep_pair && (x == keep_pair->first || x == keep_pair->second)) continue;
    chosen.insert(x);
    chosen.insert(k - x);
    ++kept;
  }
  if (kept != pairs_needed || static_cast<int>(chosen.size()) != l)
    throw Error(Errc::internal_contradiction,
                "balanced subset construction out of pairs (k=" +
                    std::to_string(k) + ", l=" + std::to_string(l) + ")");
  return {chosen.begin(), chosen.end()};
}

std::vector<int> erase_element(std::vector<int> set, int value) {
  auto it = std::find(set.begin(), set.end(), value);
  if (it == set.end())
    throw Error(Errc::internal_contradiction,
                "expected element " + std::to_string(value) +
                    " missing from constructed set");
  set.erase(it);
  return set;
}

// All l-combinations of `ground` with the requested sum, lexicographic.
// `limit` bounds how many to collect (0 = all).
std::vector<std::vector<int>> combinations_with_sum(
    const std::vector<int>& ground, int l, int k, int a, std::size_t limit) {
  std::vector<std::vector<int>> found;
  const int size = static_cast<int>(ground.size());
  if (l < 0 || l > size) return found;
  std::vector<int> index(l);
  std::iota(index.begin(), index.end(), 0);
  while (true) {
    int sum = 0;
    for (int i : index) sum += ground[i];
    if (sum % k == a) {
      std::vector<int> out;
      for (int i : index) out.push_back(ground[i]);
      found.push_back(std::move(out));
      if (limit && found.size() == limit) return found;
    }
    if (l == 0) return found;
    int pos = l - 1;
    while (pos >= 0 && index[pos] == size - l + pos) --pos;
    if (pos < 0) return found;
    ++index[pos];
    for (int i = pos + 1; i < l; ++i) index[i] = index[i - 1] + 1;
  }
}

std::optional<std::vector<int>> first_combination_with_sum(
    const std::vector<int>& ground, int l, int k, int a) {
  auto found = combinations_with_sum(ground, l, k, a, 1);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

}  // namespace

bool verify_witness(const SubsetSumWitness& witness) {
  if (witness.modulus < 2) return false;
  if (witness.target < 0 || witness.target >= witness.modulus) return false;
  std::set<int> seen;
  int sum = 0;
  for (int x : witness.elements) {
    if (x < 0 || x >= witness.modulus) return false;
    if (!seen.insert(x).second) return false;
    sum += x;
  }
  return sum % witness.modulus == witness.target;
}

SubsetSumWitness distinct_subset_sum(int k, int l, int a) {
  if (k < 2) throw Error(Errc::invalid_size, "modulus must be at least 2");
  if (l < 1 || l > k)
    throw Error(Errc::invalid_size,
                "subset size " + std::to_string(l) + " not in 1.." +
                    std::to_string(k));
  a = ((a % k) + k) % k;

  SubsetSumWitness witness{k, a, {}};
  if (l == k) {
    if (a != full_sum(k))
      throw Error(Errc::infeasible,
                  "the only size-" + std::to_string(k) + " subset of Z_" +
                      std::to_string(k) + " sums to " +
                      std::to_string(k * (k - 1) / 2) + ", not " +
                      std::to_string(a) + " (mod " + std::to_string(k) + ")");
    witness.elements = all_of_zk(k);
    return witness;
  }

  if (k % 2 == 1) {
    if (a == 0) {
      witness.elements = balanced_subset(k, l, std::nullopt);
    } else {
      std::pair<int, int> keep{std::min(a, k - a), std::max(a, k - a)};
      witness.elements =
          erase_element(balanced_subset(k, l + 1, keep), k - a);
    }
    return witness;
  }

  const int half = k / 2;
  if (a == half) {
    witness.elements = balanced_subset(k, l, std::nullopt);
    return witness;
  }
  if (l <= 2) {
    auto found = first_combination_with_sum(all_of_zk(k), l, k, a);
    if (!found)
      throw Error(Errc::internal_contradiction,
                  "size 1 or 2 witness must exist for l < k");
    witness.elements = *found;
    return witness;
  }
  const int drop = ((half - a) % k + k) % k;
  std::vector<int> base;
  if (drop == half) {
    base = balanced_subset(k, l + 1, std::nullopt);  // k/2 is always kept
  } else {
    std::pair<int, int> keep{std::min(drop, k - drop), std::max(drop, k - drop)};
    base = balanced_subset(k, l + 1, keep);
  }
  witness.elements = erase_element(std::move(base), drop);
  return witness;
}

SubsetSumWitness distinct_subset_sum_avoiding(int k, int l, int a,
                                              const std::vector<int>& forbidden) {
  if (k < 2) throw Error(Errc::invalid_size, "modulus must be at least 2");
  std::set<int> banned(forbidden.begin(), forbidden.end());
  const int ground_size = k - static_cast<int>(banned.size());
  if (l < 1 || l > ground_size)
    throw Error(Errc::invalid_size,
                "subset size " + std::to_string(l) +
                    " not in 1.." + std::to_string(ground_size) +
                    " (ground set after exclusions)");
  a = ((a % k) + k) % k;
  std::vector<int> ground;
  for (int x = 0; x < k; ++x)
    if (!banned.count(x)) ground.push_back(x);
  auto found = first_combination_with_sum(ground, l, k, a);
  if (!found)
    throw Error(Errc::infeasible,
                "no " + std::to_string(l) + " distinct elements of Z_" +
                    std::to_string(k) + " avoiding " +
                    std::to_string(banned.size()) + " values sum to " +
                    std::to_string(a));
  return {k, a, *found};
}

std::optional<SubsetSumWitness> oracle_subset_sum(
    int k, int l, int a, const std::vector<int>& forbidden) {
  if (k < 2) return std::nullopt;
  a = ((a % k) + k) % k;
  std::set<int> banned(forbidden.begin(), forbidden.end());
  std::vector<int> ground;
  for (int x = 0; x < k; ++x)
    if (!banned.count(x)) ground.push_back(x);
  auto found = first_combination_with_sum(ground, l, k, a);
  if (!found) return std::nullopt;
  return SubsetSumWitness{k, a, *found};
}

std::vector<SubsetSumWitness> enumerate_subset_sums(
    int k, int l, int a, const std::vector<int>& forbidden) {
  std::vector<SubsetSumWitness> witnesses;
  if (k < 2) return witnesses;
  a = ((a % k) + k) % k;
  std::set<int> banned(forbidden.begin(), forbidden.end());
  std::vector<int> ground;
  for (int x = 0; x < k; ++x)
    if (!banned.count(x)) ground.push_back(x);
  for (auto& elements : combinations_with_sum(ground, l, k, a, 0))
    witnesses.push_back({k, a, std::move(elements)});
  return witnesses;
}

}  // namespace hypercordial
