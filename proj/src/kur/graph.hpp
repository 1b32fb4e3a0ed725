#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kur/common.hpp"

namespace kur {

struct Edge {
    int i = 0;
    int j = 0;
    double w = 0.0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Symmetric, positively weighted simple graph on nodes 0..n-1.
// Edges are stored with i < j and kept sorted by (i, j).
class WeightedGraph {
  public:
    WeightedGraph(int n, std::vector<Edge> edges);

    // Text format:
    //   kuramoto-graph v1
    //   n=<N> m=<M>
    //   <i> <j> <w>     (M lines, 0 <= i < j < N, w > 0)
    // Blank lines and lines starting with '#' are ignored.
    static WeightedGraph parse(std::string_view text);
    static WeightedGraph load(const std::string& path);
    std::string serialize() const;
    void save(const std::string& path) const;

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::pair<int, double>>& neighbors(int i) const { return adj_[static_cast<std::size_t>(i)]; }
    double weighted_degree(int i) const;
    double max_weighted_degree() const;
    bool is_connected() const;

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, double>>> adj_;
};

// Per-node phase angles, always normalized into [0, 2pi).
class PhaseState {
  public:
    PhaseState() = default;
    explicit PhaseState(std::vector<double> theta);

    // Text format:
    //   kuramoto-state v1
    //   n=<N>
    //   <i> <theta_radians>   (N lines, each index exactly once)
    static PhaseState parse(std::string_view text);
    static PhaseState load(const std::string& path);
    std::string serialize() const;
    void save(const std::string& path) const;

    int size() const { return static_cast<int>(theta_.size()); }
    double operator[](int i) const { return theta_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& angles() const { return theta_; }

    PhaseState rotated(double phi) const;
    // Shift all angles so the anchor node sits at 0; differences unchanged.
    PhaseState canonical(int anchor = 0) const;

  private:
    std::vector<double> theta_;
};

// min over a global rotation phi of max_i circdist(a_i + phi, b_i).
// Zero exactly when the states agree modulo a global rotation.
double state_distance(const PhaseState& a, const PhaseState& b);

}  // namespace kur
