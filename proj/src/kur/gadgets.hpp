#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kur/fixed_point.hpp"
#include "kur/partition.hpp"

namespace kur {

// Maps construction roles to node indices of the companion graph.  Role sets
// are disjoint and jointly cover every node.
struct GadgetDescriptor {
    int x = -1;
    int y = -1;
    std::vector<int> u;                      // one per instance position
    std::vector<int> v;                      // one per instance position
    std::vector<std::vector<int>> cliques;   // per position; empty for the weighted gadget
    std::vector<long long> values;           // instance echo (padded for the unweighted gadget)
    int n_param = 0;                         // Kuramoto n; 0 for the weighted gadget
    double factor = 0.0;                     // weighted v-y weight factor c; 0 otherwise
    double t = 0.0;                          // weighted half-sum parameter
};

struct Gadget {
    WeightedGraph graph;
    GadgetDescriptor desc;
};

// Star-chain gadget on 2m+2 nodes: x-u_i and u_i-v_i of weight a_i, v_i-y of
// weight factor*t*a_i with t = sum(a)/2.
Gadget build_weighted_gadget(const std::vector<long long>& a, double factor = 2.0);

// Phases x=0, y=pi, u_i=+-alpha, v_i=+-2alpha with alpha solved from the
// single-node balance factor*t*sin(pi - 2 alpha) = sin(alpha).  Throws
// InvalidWitnessError when the residual shows S is not a valid partition.
PhaseState weighted_gadget_fixed_point(const Gadget& gadget, const std::vector<int>& subset);

// Same construction without the witness validation (used to seed searches).
PhaseState weighted_gadget_phases(const GadgetDescriptor& desc, const std::vector<int>& subset);

// Interior root of factor*t*sin(pi - 2a) = sin(a) on (0, pi/2).
double weighted_gadget_alpha(double factor, double t);

// Unit-weight emulation: each u_i/v_i becomes a clique of a_i nodes that
// inherits its adjacencies, corresponding groups joined completely.
WeightedGraph build_clique_blowup(const std::vector<long long>& a, long long sum_bound = 100000);

// Unit-weight gadget on 2 + 6n + sum(b_i) nodes: x-u_i, y-v_i, and one
// b_i-clique per position adjacent to both u_i and v_i (b padded with n up
// to 3n values).
Gadget build_unweighted_gadget(int n, const std::vector<long long>& b);

// Phases per the angle construction gamma = 2 arccos(eps),
// alpha_i = arcsin(term), beta_i = gamma/2 - alpha_i (mirrored off-subset).
// Throws InvalidWitnessError when (subset, eps) does not balance.
PhaseState unweighted_gadget_fixed_point(const Gadget& gadget, const std::vector<int>& subset, double eps);

PhaseState unweighted_gadget_phases(const GadgetDescriptor& desc, const std::vector<int>& subset, double eps);

// Reads (subset, eps) back off a non-zero state: eps = cos(theta_y / 2) after
// mirroring so theta_y <= pi; position i joins the subset when u_i sits on
// the positive side.
struct UnweightedWitness {
    std::vector<int> subset;
    double eps = 0.0;
};
UnweightedWitness extract_unweighted_witness(const Gadget& gadget, const PhaseState& s);

// Graph file text followed by '# gadget ...' and '# role ...' comment lines.
std::string serialize_gadget(const Gadget& gadget);

enum class GadgetVariant { Weighted, Unweighted };

struct ReductionReport {
    GadgetVariant variant = GadgetVariant::Weighted;
    std::vector<long long> values;  // instance echo (unpadded)
    int n_param = 0;
    double factor = 0.0;
    PartitionResult partition;
    std::optional<FixedPointRecord> analytic;
    std::vector<FixedPointRecord> records;  // distinct fixed points found by the search
    int stable_zero = 0;
    int stable_nonzero = 0;
    int unstable = 0;
    int marginal = 0;
    int samples = 0;
    int dropped = 0;
    bool determinable = true;  // false when the partition answer is NotFound
    bool consistent = false;
};

// Two-sided empirical check: solve the partition instance, validate the
// analytic witness when it exists, and survey the gadget by multistart.
// Yes-instances must yield a Stable NonZero analytic point; No-instances must
// yield no NonZero Stable record in the search.
ReductionReport verify_reduction_weighted(const std::vector<long long>& a, int samples,
                                          std::uint64_t seed, double factor = 2.0);
ReductionReport verify_reduction_unweighted(int n, const std::vector<long long>& b, int samples,
                                            std::uint64_t seed);

}  // namespace kur
