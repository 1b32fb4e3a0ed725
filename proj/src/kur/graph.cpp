#include "kur/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace kur {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

// Splits into (line_number, content) pairs, dropping blanks with comments.
std::vector<std::pair<int, std::string>> significant_lines(std::string_view text) {
    std::vector<std::pair<int, std::string>> out;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] != '#')
            out.emplace_back(lineno, line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("graph: node count must be positive");
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::pair{a.i, a.j} < std::pair{b.i, b.j}; });
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const Edge& e = edges_[k];
        if (e.i < 0 || e.j >= n_) throw std::invalid_argument("graph: edge index out of range");
        if (e.i >= e.j) throw std::invalid_argument("graph: edges require i < j");
        if (!(e.w > 0.0) || !std::isfinite(e.w)) throw std::invalid_argument("graph: weights must be positive");
        if (k > 0 && edges_[k - 1].i == e.i && edges_[k - 1].j == e.j)
            throw std::invalid_argument("graph: duplicate edge");
    }
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.i)].emplace_back(e.j, e.w);
        adj_[static_cast<std::size_t>(e.j)].emplace_back(e.i, e.w);
    }
}

WeightedGraph WeightedGraph::parse(std::string_view text) {
    auto lines = significant_lines(text);
    std::size_t at = 0;
    auto need = [&](const char* what) -> std::pair<int, std::string>& {
        if (at >= lines.size())
            throw ParseError("unexpected end of input, expected " + std::string(what));
        return lines[at++];
    };

    auto& magic = need("header 'kuramoto-graph v1'");
    {
        std::istringstream ss(magic.second);
        std::string a, b, rest;
        ss >> a >> b;
        if (!(a == "kuramoto-graph" && b == "v1" && !(ss >> rest)))
            parse_fail(magic.first, "expected header 'kuramoto-graph v1'");
    }

    auto& sizes = need("'n=<N> m=<M>'");
    int n = 0, m = 0;
    if (std::sscanf(sizes.second.c_str(), "n=%d m=%d", &n, &m) != 2)
        parse_fail(sizes.first, "expected 'n=<N> m=<M>'");
    if (n < 1) parse_fail(sizes.first, "node count must be positive");
    if (m < 0) parse_fail(sizes.first, "edge count must be non-negative");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::vector<std::pair<int, int>> seen;
    for (int k = 0; k < m; ++k) {
        auto& ln = need("an edge line '<i> <j> <w>'");
        std::istringstream ss(ln.second);
        Edge e;
        std::string rest;
        if (!(ss >> e.i >> e.j >> e.w) || (ss >> rest))
            parse_fail(ln.first, "expected '<i> <j> <w>'");
        if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n)
            parse_fail(ln.first, "node index out of range");
        if (e.i >= e.j) parse_fail(ln.first, "edges require i < j (no self-loops)");
        if (!(e.w > 0.0) || !std::isfinite(e.w))
            parse_fail(ln.first, "weight must be a positive real");
        for (auto& p : seen)
            if (p.first == e.i && p.second == e.j) parse_fail(ln.first, "duplicate edge");
        seen.emplace_back(e.i, e.j);
        edges.push_back(e);
    }
    if (at != lines.size()) parse_fail(lines[at].first, "trailing content after edge list");
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph WeightedGraph::load(const std::string& path) { return parse(read_file(path)); }

std::string WeightedGraph::serialize() const {
    std::ostringstream out;
    out << "kuramoto-graph v1\n";
    out << "n=" << n_ << " m=" << edges_.size() << "\n";
    for (const Edge& e : edges_)
        out << e.i << " " << e.j << " " << fmt17(e.w) << "\n";
    return out.str();
}

void WeightedGraph::save(const std::string& path) const { write_file(path, serialize()); }

double WeightedGraph::weighted_degree(int i) const {
    double d = 0.0;
    for (auto& [j, w] : adj_[static_cast<std::size_t>(i)]) {
        (void)j;
        d += w;
    }
    return d;
}

double WeightedGraph::max_weighted_degree() const {
    double d = 0.0;
    for (int i = 0; i < n_; ++i) d = std::max(d, weighted_degree(i));
    return d;
}

bool WeightedGraph::is_connected() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto& [v, w] : adj_[static_cast<std::size_t>(u)]) {
            (void)w;
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n_;
}

PhaseState::PhaseState(std::vector<double> theta) : theta_(std::move(theta)) {
    for (double& t : theta_) {
        if (!std::isfinite(t)) throw std::invalid_argument("state: angles must be finite");
        t = wrap_angle(t);
    }
}

PhaseState PhaseState::parse(std::string_view text) {
    auto lines = significant_lines(text);
    std::size_t at = 0;
    auto need = [&](const char* what) -> std::pair<int, std::string>& {
        if (at >= lines.size())
            throw ParseError("unexpected end of input, expected " + std::string(what));
        return lines[at++];
    };

    auto& magic = need("header 'kuramoto-state v1'");
    {
        std::istringstream ss(magic.second);
        std::string a, b, rest;
        ss >> a >> b;
        if (!(a == "kuramoto-state" && b == "v1" && !(ss >> rest)))
            parse_fail(magic.first, "expected header 'kuramoto-state v1'");
    }

    auto& sizes = need("'n=<N>'");
    int n = 0;
    if (std::sscanf(sizes.second.c_str(), "n=%d", &n) != 1 || n < 1)
        parse_fail(sizes.first, "expected 'n=<N>' with N positive");

    std::vector<double> theta(static_cast<std::size_t>(n), 0.0);
    std::vector<char> filled(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
        auto& ln = need("a state line '<i> <theta>'");
        std::istringstream ss(ln.second);
        int i = 0;
        double v = 0.0;
        std::string rest;
        if (!(ss >> i >> v) || (ss >> rest)) parse_fail(ln.first, "expected '<i> <theta>'");
        if (i < 0 || i >= n) parse_fail(ln.first, "node index out of range");
        if (filled[static_cast<std::size_t>(i)]) parse_fail(ln.first, "duplicate node index");
        if (!std::isfinite(v)) parse_fail(ln.first, "angle must be finite");
        filled[static_cast<std::size_t>(i)] = 1;
        theta[static_cast<std::size_t>(i)] = v;
    }
    if (at != lines.size()) parse_fail(lines[at].first, "trailing content after state list");
    return PhaseState(std::move(theta));
}

PhaseState PhaseState::load(const std::string& path) { return parse(read_file(path)); }

std::string PhaseState::serialize() const {
    std::ostringstream out;
    out << "kuramoto-state v1\n";
    out << "n=" << theta_.size() << "\n";
    for (std::size_t i = 0; i < theta_.size(); ++i)
        out << i << " " << fmt17(theta_[i]) << "\n";
    return out.str();
}

void PhaseState::save(const std::string& path) const { write_file(path, serialize()); }

PhaseState PhaseState::rotated(double phi) const {
    std::vector<double> t(theta_);
    for (double& v : t) v = wrap_angle(v + phi);
    return PhaseState(std::move(t));
}

PhaseState PhaseState::canonical(int anchor) const {
    if (anchor < 0 || anchor >= size()) throw std::invalid_argument("canonical: anchor out of range");
    return rotated(-theta_[static_cast<std::size_t>(anchor)]);
}

double state_distance(const PhaseState& a, const PhaseState& b) {
    if (a.size() != b.size()) throw std::invalid_argument("state_distance: length mismatch");
    int n = a.size();
    if (n == 0) return 0.0;
    // Per-node rotations that would align node i exactly.  The optimal global
    // rotation is the midpoint of the shortest arc covering these values, so
    // the distance is half the arc length: any radius-r arc around a candidate
    // phi covers all d_i iff 2r >= spread.
    std::vector<double> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = circular_diff(b[i], a[i]);
    return 0.5 * circular_spread(std::move(d));
}

}  // namespace kur
