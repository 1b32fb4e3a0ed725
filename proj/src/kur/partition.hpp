#pragma once

#include <optional>
#include <vector>

#include "kur/common.hpp"

namespace kur {

enum class PartitionVariant { Integer, Kuramoto, Surd };
enum class PartitionAnswer { Yes, No, NotFound };

// A subset witness.  epsilon is meaningful for the Kuramoto variant only;
// achieved_gap is a diagnostic (0 for exact integer partitions).
struct PartitionSolution {
    std::vector<int> subset;  // indices into the (padded, for Kuramoto) values
    double epsilon = 0.0;
    double achieved_gap = 0.0;
};

struct PartitionResult {
    PartitionAnswer answer = PartitionAnswer::NotFound;
    std::optional<PartitionSolution> solution;
    bool definitive = false;            // No answers from exhaustive search only
    bool unresolved_boundary = false;   // Surd: a gap at exactly 1 could not be decided
    int boundary_rechecks = 0;          // Surd: subsets whose gap sat within 1e-9 of 1
};

inline constexpr long long kDefaultSumBound = 10'000'000;

// Subset-sum dynamic program with witness reconstruction; a miss is
// definitive.  Throws std::invalid_argument when sum(a) exceeds the bound.
std::optional<PartitionSolution> solve_partition_dp(const std::vector<long long>& a,
                                                    long long sum_bound = kDefaultSumBound);

// Enumerates all subsets containing index 0 (m <= 24); oracle counterpart of
// the dynamic program.
std::optional<PartitionSolution> solve_partition_bruteforce(const std::vector<long long>& a);

struct KKResult {
    std::vector<int> subset;
    double gap = 0.0;  // equals the final surviving difference
};

// Largest-differencing (Karmarkar-Karp) two-way partition heuristic.
KKResult kk_differencing(const std::vector<double>& values);

// One summand of the Kuramoto Partition balance: sqrt(b^2 (1-eps^2) /
// (1 + b^2 +- 2 b eps)), the sign chosen by the side of the subset.
double kuramoto_partition_term(long long b, double eps, bool in_subset);

// Signed balance sum_S term - sum_Sc term over the padded values.
double kuramoto_partition_balance(const std::vector<long long>& padded, const std::vector<char>& in_s,
                                  double eps);

// Decides the Kuramoto Partition instance (2 <= b_1 <= ... <= b_n <= n).
// Values are padded with b_i = n up to 3n internally; exhaustive and
// definitive for 3n <= 24, differencing-guided (found-only) beyond.
PartitionResult kuramoto_partition_feasible(int n, const std::vector<long long>& b);

// Decides the Surd Partition instance (1 <= b_1 <= ... <= b_n <= n):
// a subset with |sum_S sqrt(b) - sum_Sc sqrt(b)| < 1.  Exhaustive and
// definitive for n <= 24; gaps within 1e-9 of exactly 1 are re-decided by
// exact integer arithmetic where the expanded square has at most one surd.
PartitionResult surd_partition(int n, const std::vector<long long>& b);

const char* to_string(PartitionAnswer a);
const char* to_string(PartitionVariant v);

}  // namespace kur
