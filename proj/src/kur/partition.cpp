#include "kur/partition.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace kur {

namespace {

long long checked_total(const std::vector<long long>& a) {
    if (a.empty()) throw std::invalid_argument("partition: instance must be nonempty");
    long long total = 0;
    for (long long v : a) {
        if (v < 1) throw std::invalid_argument("partition: values must be positive integers");
        total += v;
    }
    return total;
}

}  // namespace

std::optional<PartitionSolution> solve_partition_dp(const std::vector<long long>& a, long long sum_bound) {
    long long total = checked_total(a);
    if (total > sum_bound) throw std::invalid_argument("solve_partition_dp: sum exceeds configured bound");
    if (total % 2 != 0) return std::nullopt;
    const long long target = total / 2;

    // from[s] = index of the item that first reached sum s
    std::vector<int> from(static_cast<std::size_t>(target) + 1, -1);
    std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
    reach[0] = 1;
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
        long long v = a[idx];
        if (v > target) continue;
        for (long long s = target; s >= v; --s) {
            if (!reach[static_cast<std::size_t>(s)] && reach[static_cast<std::size_t>(s - v)]) {
                reach[static_cast<std::size_t>(s)] = 1;
                from[static_cast<std::size_t>(s)] = static_cast<int>(idx);
            }
        }
    }
    if (!reach[static_cast<std::size_t>(target)]) return std::nullopt;

    PartitionSolution sol;
    for (long long s = target; s > 0;) {
        int idx = from[static_cast<std::size_t>(s)];
        sol.subset.push_back(idx);
        s -= a[static_cast<std::size_t>(idx)];
    }
    std::sort(sol.subset.begin(), sol.subset.end());
    return sol;
}

std::optional<PartitionSolution> solve_partition_bruteforce(const std::vector<long long>& a) {
    long long total = checked_total(a);
    const int m = static_cast<int>(a.size());
    if (m > 24) throw std::invalid_argument("solve_partition_bruteforce: too many values");
    if (total % 2 != 0) return std::nullopt;
    const long long target = total / 2;
    // Subsets containing index 0 suffice: the complement of a witness is one too.
    const std::uint32_t limit = 1u << m;
    for (std::uint32_t mask = 1; mask < limit; mask += 2) {
        long long s = 0;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) s += a[static_cast<std::size_t>(i)];
        if (s == target) {
            PartitionSolution sol;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) sol.subset.push_back(i);
            return sol;
        }
    }
    return std::nullopt;
}

KKResult kk_differencing(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("kk_differencing: values must be nonempty");
    struct Item {
        double value;
        int id;  // creation order; original items keep their index
        std::vector<int> pos, neg;
    };
    auto cmp = [](const Item& a, const Item& b) {
        if (a.value != b.value) return a.value < b.value;  // max-heap on value
        return a.id > b.id;                                // older item wins ties
    };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
    int next_id = 0;
    for (double v : values) {
        heap.push(Item{v, next_id, {next_id}, {}});
        ++next_id;
    }
    while (heap.size() > 1) {
        Item big = heap.top();
        heap.pop();
        Item small = heap.top();
        heap.pop();
        Item merged;
        merged.value = big.value - small.value;
        merged.id = next_id++;
        merged.pos = std::move(big.pos);
        merged.pos.insert(merged.pos.end(), small.neg.begin(), small.neg.end());
        merged.neg = std::move(big.neg);
        merged.neg.insert(merged.neg.end(), small.pos.begin(), small.pos.end());
        heap.push(std::move(merged));
    }
    KKResult out;
    out.subset = heap.top().pos;
    out.gap = heap.top().value;
    std::sort(out.subset.begin(), out.subset.end());
    return out;
}

double kuramoto_partition_term(long long b, double eps, bool in_subset) {
    if (b < 1) throw std::invalid_argument("kuramoto_partition_term: b must be positive");
    if (!(eps >= 0.0 && eps < 1.0)) throw std::invalid_argument("kuramoto_partition_term: eps must be in [0, 1)");
    double bd = static_cast<double>(b);
    double num = bd * bd * (1.0 - eps * eps);
    double den = 1.0 + bd * bd + (in_subset ? 2.0 : -2.0) * bd * eps;
    return std::sqrt(num / den);
}

double kuramoto_partition_balance(const std::vector<long long>& padded, const std::vector<char>& in_s,
                                  double eps) {
    if (padded.size() != in_s.size()) throw std::invalid_argument("balance: size mismatch");
    // side sums accumulated separately so symmetric instances cancel exactly
    double side_s = 0.0, side_c = 0.0;
    for (std::size_t i = 0; i < padded.size(); ++i) {
        double t = kuramoto_partition_term(padded[i], eps, in_s[i] != 0);
        (in_s[i] ? side_s : side_c) += t;
    }
    return side_s - side_c;
}

namespace {

void validate_kuramoto_instance(int n, const std::vector<long long>& b) {
    if (n < 2) throw std::invalid_argument("kuramoto partition: n must be at least 2");
    if (static_cast<int>(b.size()) != n)
        throw std::invalid_argument("kuramoto partition: expected n values");
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 2 || b[i] > n)
            throw std::invalid_argument("kuramoto partition: values must satisfy 2 <= b_i <= n");
        if (i > 0 && b[i] < b[i - 1])
            throw std::invalid_argument("kuramoto partition: values must be nondecreasing");
    }
}

std::vector<long long> padded_values(int n, const std::vector<long long>& b) {
    std::vector<long long> padded = b;
    padded.resize(static_cast<std::size_t>(3 * n), n);
    return padded;
}

// Gates of the continuity argument: balance(0) >= 0 and balance(1/n) < 0.
// The balance is strictly decreasing on [0, 1/n], so both gates hold iff a
// unique root exists there; bisect it down to |balance| < 1e-12.
std::optional<double> gate_and_bisect(const std::vector<long long>& padded, const std::vector<char>& in_s,
                                      double hi) {
    double d0 = kuramoto_partition_balance(padded, in_s, 0.0);
    if (!(d0 >= 0.0)) return std::nullopt;
    double d1 = kuramoto_partition_balance(padded, in_s, hi);
    if (!(d1 < 0.0)) return std::nullopt;
    if (d0 == 0.0) return 0.0;
    double lo = 0.0;
    double mid = 0.0;
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        double dm = kuramoto_partition_balance(padded, in_s, mid);
        if (std::fabs(dm) < 1e-12) return mid;
        if (dm > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    throw NumericError("kuramoto partition: bisection failed to meet tolerance");
}

PartitionSolution make_kuramoto_solution(const std::vector<char>& in_s, double eps, double gap) {
    PartitionSolution sol;
    for (std::size_t i = 0; i < in_s.size(); ++i)
        if (in_s[i]) sol.subset.push_back(static_cast<int>(i));
    sol.epsilon = eps;
    sol.achieved_gap = gap;
    return sol;
}

}  // namespace

PartitionResult kuramoto_partition_feasible(int n, const std::vector<long long>& b) {
    validate_kuramoto_instance(n, b);
    const std::vector<long long> padded = padded_values(n, b);
    const int big_n = 3 * n;
    const double hi = 1.0 / static_cast<double>(n);
    PartitionResult res;

    if (big_n <= 24) {
        // Pin element 0 into the named set and test both orientations; the
        // balance flips sign under S <-> S^c with the side formulas swapped,
        // so together the two orientations cover every subset.
        const std::uint32_t limit = 1u << big_n;
        for (std::uint32_t mask = 1; mask < limit; mask += 2) {
            for (int orient = 0; orient < 2; ++orient) {
                std::vector<char> in_s(static_cast<std::size_t>(big_n), 0);
                for (int i = 0; i < big_n; ++i) {
                    bool bit = (mask & (1u << i)) != 0;
                    in_s[static_cast<std::size_t>(i)] = (bit != (orient == 1)) ? 1 : 0;
                }
                if (auto eps = gate_and_bisect(padded, in_s, hi)) {
                    double gap = std::fabs(kuramoto_partition_balance(padded, in_s, *eps));
                    res.answer = PartitionAnswer::Yes;
                    res.solution = make_kuramoto_solution(in_s, *eps, gap);
                    res.definitive = true;
                    return res;
                }
            }
        }
        res.answer = PartitionAnswer::No;
        res.definitive = true;
        return res;
    }

    // Differencing-guided local search: seed with the Karmarkar-Karp split of
    // the eps = 0 terms, then flip pairs looking for a subset whose gates
    // open.  Incomplete: a miss is reported as NotFound, never as No.
    std::vector<double> f0(static_cast<std::size_t>(big_n));
    for (int i = 0; i < big_n; ++i)
        f0[static_cast<std::size_t>(i)] = kuramoto_partition_term(padded[static_cast<std::size_t>(i)], 0.0, true);
    KKResult kk = kk_differencing(f0);
    std::vector<char> in_s(static_cast<std::size_t>(big_n), 0);
    for (int i : kk.subset) in_s[static_cast<std::size_t>(i)] = 1;

    auto try_set = [&](const std::vector<char>& cand) -> bool {
        for (int orient = 0; orient < 2; ++orient) {
            std::vector<char> oriented = cand;
            if (orient == 1)
                for (auto& c : oriented) c = c ? 0 : 1;
            if (auto eps = gate_and_bisect(padded, oriented, hi)) {
                double gap = std::fabs(kuramoto_partition_balance(padded, oriented, *eps));
                res.answer = PartitionAnswer::Yes;
                res.solution = make_kuramoto_solution(oriented, *eps, gap);
                res.definitive = false;
                return true;
            }
        }
        return false;
    };

    if (try_set(in_s)) return res;
    for (int i = 0; i < big_n; ++i) {
        for (int j = i; j < big_n; ++j) {
            std::vector<char> cand = in_s;
            cand[static_cast<std::size_t>(i)] = cand[static_cast<std::size_t>(i)] ? 0 : 1;
            if (j != i) cand[static_cast<std::size_t>(j)] = cand[static_cast<std::size_t>(j)] ? 0 : 1;
            if (try_set(cand)) return res;
        }
    }
    res.answer = PartitionAnswer::NotFound;
    res.definitive = false;
    return res;
}

namespace {

// Exact sign of (sum of signed sqrt(b_i))^2 - 1 when the signed sum collapses
// to at most one irrational class g0 + g1*sqrt(e) (e > 1 square-free part).
// Returns +1/0/-1, or nullopt when more classes survive.
std::optional<int> exact_gap_square_vs_one(const std::vector<long long>& b, const std::vector<int>& sign) {
    // split b = s^2 * e with e square-free
    auto split = [](long long v) {
        long long s = 1, e = v;
        for (long long d = 2; d * d <= e; ++d) {
            while (e % (d * d) == 0) {
                e /= d * d;
                s *= d;
            }
        }
        return std::pair<long long, long long>{s, e};
    };
    long long g_rational = 0;
    long long g_surd = 0, surd_class = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        auto [s, e] = split(b[i]);
        long long signed_s = sign[i] * s;
        if (e == 1) {
            g_rational += signed_s;
        } else if (surd_class == 0 || surd_class == e) {
            surd_class = e;
            g_surd += signed_s;
        } else {
            return std::nullopt;  // two distinct surd classes: not a A + B sqrt(C) form
        }
    }
    // gap^2 - 1 = X + Y sqrt(C) with:
    long long x = g_rational * g_rational + g_surd * g_surd * surd_class - 1;
    long long y = 2 * g_rational * g_surd;
    long long c = surd_class;
    if (y == 0 || c == 0) return x > 0 ? 1 : (x < 0 ? -1 : 0);
    if (x >= 0 && y > 0) return 1;
    if (x <= 0 && y < 0) return -1;
    // mixed signs: compare x^2 against y^2 c (values are tiny; no overflow)
    long long lhs = x * x, rhs = y * y * c;
    int mag = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    return x > 0 ? mag : -mag;
}

void validate_surd_instance(int n, const std::vector<long long>& b) {
    if (n < 1) throw std::invalid_argument("surd partition: n must be positive");
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("surd partition: expected n values");
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 1 || b[i] > n)
            throw std::invalid_argument("surd partition: values must satisfy 1 <= b_i <= n");
        if (i > 0 && b[i] < b[i - 1])
            throw std::invalid_argument("surd partition: values must be nondecreasing");
    }
}

}  // namespace

PartitionResult surd_partition(int n, const std::vector<long long>& b) {
    validate_surd_instance(n, b);
    PartitionResult res;
    std::vector<double> roots(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) roots[i] = std::sqrt(static_cast<double>(b[i]));
    double total = 0.0;
    for (double r : roots) total += r;

    if (n <= 24) {
        const double boundary = 1e-9;
        bool any_unresolved = false;
        const std::uint32_t limit = 1u << n;
        for (std::uint32_t mask = 1; mask < limit; mask += 2) {  // pin index 0; |.| is symmetric
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) s += roots[static_cast<std::size_t>(i)];
            double gap = std::fabs(2.0 * s - total);
            bool accept = false;
            if (gap < 1.0 - boundary) {
                accept = true;
            } else if (gap <= 1.0 + boundary) {
                // floating point cannot call a gap at exactly 1; re-decide exactly
                ++res.boundary_rechecks;
                std::vector<int> sign(b.size());
                for (int i = 0; i < n; ++i) sign[static_cast<std::size_t>(i)] = (mask & (1u << i)) ? 1 : -1;
                auto cmp = exact_gap_square_vs_one(b, sign);
                if (!cmp) {
                    any_unresolved = true;
                } else if (*cmp < 0) {
                    accept = true;
                }
            }
            if (accept) {
                PartitionSolution sol;
                for (int i = 0; i < n; ++i)
                    if (mask & (1u << i)) sol.subset.push_back(i);
                sol.achieved_gap = gap;
                res.answer = PartitionAnswer::Yes;
                res.solution = std::move(sol);
                res.definitive = true;
                return res;
            }
        }
        if (any_unresolved) {
            res.answer = PartitionAnswer::NotFound;
            res.unresolved_boundary = true;
            res.definitive = false;
        } else {
            res.answer = PartitionAnswer::No;
            res.definitive = true;
        }
        return res;
    }

    KKResult kk = kk_differencing(roots);
    if (kk.gap < 1.0 - 1e-9) {
        PartitionSolution sol;
        sol.subset = kk.subset;
        sol.achieved_gap = kk.gap;
        res.answer = PartitionAnswer::Yes;
        res.solution = std::move(sol);
        res.definitive = false;
        return res;
    }
    res.answer = PartitionAnswer::NotFound;
    res.definitive = false;
    return res;
}

const char* to_string(PartitionAnswer a) {
    switch (a) {
        case PartitionAnswer::Yes: return "Yes";
        case PartitionAnswer::No: return "No";
        case PartitionAnswer::NotFound: return "NotFound";
    }
    return "?";
}

const char* to_string(PartitionVariant v) {
    switch (v) {
        case PartitionVariant::Integer: return "integer";
        case PartitionVariant::Kuramoto: return "kuramoto";
        case PartitionVariant::Surd: return "surd";
    }
    return "?";
}

}  // namespace kur
