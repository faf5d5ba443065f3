#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "necklace/core.hpp"
#include "necklace/rational.hpp"

namespace necklace {

// Exact-versus-asymptotic comparison for the number of distinct necklaces
// of one size. The main term is phi^n / n with phi the golden ratio; the
// correction is of order phi^{n/2} / n, so normalized_error should stay
// bounded as n grows.
struct CountReport {
  int n = 0;
  BigInt exact_count;
  double asymptotic_estimate = 0.0;
  double relative_error = 0.0;    // |exact - estimate| / exact
  double normalized_error = 0.0;  // |exact - estimate| * n / phi^{n/2}
};

// Euler's totient by trial-division factorization.
std::uint64_t totient(std::uint64_t k);

// Exact [z^n] N(z) for 0 <= n <= n_max, where
//
//   N(z) = sum_{k>=1} (phi(k)/k) log((1 - z^k)/(1 - z^k - z^{2k}))
//
// counts distinct cyclic arrangements of blocks "one white bead, then a
// nonempty run of blacks" (one less than OEIS A000358, which also admits
// the all-black cycle). Each k-summand is the k=1 base composed with
// z -> z^k, so only k <= n reaches z^n; the sum runs exactly that far and
// asserts the cutoff. Rational arithmetic must cancel to nonnegative
// integers, anything else raises ConsistencyError.
std::vector<BigInt> necklace_count_coeffs(int n_max);

// All distinct valid necklaces of size n as canonical forms, generated
// from the cyclic compositions of n into parts >= 2 (one part per
// white-plus-black-run block). Guard: n <= 24.
std::set<Necklace> enumerate_valid(int n);

// Same set by the dumb route: filter all 2^n colorings through is_valid
// and canonicalize. Guard: n <= 20. Kept as a mutual check on the
// composition generator.
std::set<Necklace> enumerate_valid_bruteforce(int n);

// Canonical necklaces reachable from the start necklace in n - 2
// insertions, by breadth-first search with per-level deduplication.
// Guard: n <= 14.
std::set<Necklace> reachable(int n);

// (n-1)!, the number of distinct construction processes.
BigInt process_count(int n);

// White-count histogram over every construction process, by exhaustive
// walk of the insertion tree (no deduplication: paths, not states).
// Guard: n <= 10.
std::map<int, BigInt> process_white_histogram(int n);

CountReport asymptotic_report(int n, const BigInt& exact);

// CSV export of count reports: header
// "n,exact_count,estimate,relative_error,normalized_error".
void write_csv(std::ostream& out, const std::vector<CountReport>& reports);

}  // namespace necklace
