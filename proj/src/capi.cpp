#include "kuramoto.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "kur/dynamics.hpp"
#include "kur/fixed_point.hpp"
#include "kur/gadgets.hpp"
#include "kur/graph.hpp"
#include "kur/partition.hpp"
#include "kur/stability.hpp"

struct kur_graph {
    kur::WeightedGraph g;
};
struct kur_state {
    kur::PhaseState s;
};
struct kur_fp_list {
    kur::MultistartResult r;
};
struct kur_gadget {
    kur::Gadget g;
    kur_graph graph_view;  // borrowed-pointer target for kur_gadget_graph
};
struct kur_verify_report {
    kur::ReductionReport r;
};

namespace {

thread_local std::string t_last_error;

void set_error(const std::string& msg) { t_last_error = msg; }

// Runs fn, translating exceptions into status codes.
template <typename Fn>
kur_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return KUR_OK;
    } catch (const kur::ParseError& e) {
        set_error(e.what());
        return KUR_ERR_PARSE;
    } catch (const kur::IoError& e) {
        set_error(e.what());
        return KUR_ERR_IO;
    } catch (const kur::InvalidWitnessError& e) {
        set_error(e.what());
        return KUR_ERR_INVALID_WITNESS;
    } catch (const kur::NumericError& e) {
        set_error(e.what());
        return KUR_ERR_NUMERIC;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return KUR_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return KUR_ERR_INVALID_ARGUMENT;
    }
}

kur_status fail_arg(const char* msg) {
    set_error(msg);
    return KUR_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

kur::ModelParams make_params(const kur_graph* g, const double* omega, double k) {
    kur::ModelParams p;
    const int n = g->g.node_count();
    p.omega = omega ? std::vector<double>(omega, omega + n)
                    : std::vector<double>(static_cast<std::size_t>(n), 0.0);
    p.k = k;
    return p;
}

kur_verdict to_c(kur::Verdict v) {
    switch (v) {
        case kur::Verdict::Stable: return KUR_VERDICT_STABLE;
        case kur::Verdict::Unstable: return KUR_VERDICT_UNSTABLE;
        default: return KUR_VERDICT_MARGINAL;
    }
}

kur_classification to_c(kur::Classification c) {
    return c == kur::Classification::Zero ? KUR_CLASS_ZERO : KUR_CLASS_NONZERO;
}

kur_answer to_c(kur::PartitionAnswer a) {
    switch (a) {
        case kur::PartitionAnswer::Yes: return KUR_ANSWER_YES;
        case kur::PartitionAnswer::No: return KUR_ANSWER_NO;
        default: return KUR_ANSWER_NOT_FOUND;
    }
}

}  // namespace

extern "C" {

const char* kur_last_error(void) { return t_last_error.c_str(); }

void kur_string_free(char* s) { delete[] s; }

/* ---- graphs ------------------------------------------------------------ */

kur_status kur_graph_new(int n, int m, const int* is, const int* js, const double* ws, kur_graph** out) {
    if (!out || m < 0 || (m > 0 && (!is || !js || !ws))) return fail_arg("kur_graph_new: bad arguments");
    return guarded([&]() {
        std::vector<kur::Edge> edges(static_cast<std::size_t>(m));
        for (int e = 0; e < m; ++e) edges[static_cast<std::size_t>(e)] = {is[e], js[e], ws[e]};
        *out = new kur_graph{kur::WeightedGraph(n, std::move(edges))};
    });
}

kur_status kur_graph_parse(const char* text, kur_graph** out) {
    if (!text || !out) return fail_arg("kur_graph_parse: bad arguments");
    return guarded([&]() { *out = new kur_graph{kur::WeightedGraph::parse(text)}; });
}

kur_status kur_graph_load(const char* path, kur_graph** out) {
    if (!path || !out) return fail_arg("kur_graph_load: bad arguments");
    return guarded([&]() { *out = new kur_graph{kur::WeightedGraph::load(path)}; });
}

kur_status kur_graph_serialize(const kur_graph* g, char** out_text) {
    if (!g || !out_text) return fail_arg("kur_graph_serialize: bad arguments");
    return guarded([&]() { *out_text = dup_string(g->g.serialize()); });
}

kur_status kur_graph_save(const kur_graph* g, const char* path) {
    if (!g || !path) return fail_arg("kur_graph_save: bad arguments");
    return guarded([&]() { g->g.save(path); });
}

void kur_graph_free(kur_graph* g) { delete g; }

int kur_graph_node_count(const kur_graph* g) { return g ? g->g.node_count() : 0; }

int kur_graph_edge_count(const kur_graph* g) { return g ? g->g.edge_count() : 0; }

kur_status kur_graph_edge(const kur_graph* g, int e, int* i, int* j, double* w) {
    if (!g || e < 0 || e >= g->g.edge_count()) return fail_arg("kur_graph_edge: index out of range");
    const kur::Edge& edge = g->g.edges()[static_cast<std::size_t>(e)];
    if (i) *i = edge.i;
    if (j) *j = edge.j;
    if (w) *w = edge.w;
    return KUR_OK;
}

int kur_graph_is_connected(const kur_graph* g) { return g && g->g.is_connected() ? 1 : 0; }

/* ---- phase states ------------------------------------------------------ */

kur_status kur_state_new(int n, const double* theta, kur_state** out) {
    if (!theta || !out || n < 1) return fail_arg("kur_state_new: bad arguments");
    return guarded([&]() { *out = new kur_state{kur::PhaseState(std::vector<double>(theta, theta + n))}; });
}

kur_status kur_state_parse(const char* text, kur_state** out) {
    if (!text || !out) return fail_arg("kur_state_parse: bad arguments");
    return guarded([&]() { *out = new kur_state{kur::PhaseState::parse(text)}; });
}

kur_status kur_state_load(const char* path, kur_state** out) {
    if (!path || !out) return fail_arg("kur_state_load: bad arguments");
    return guarded([&]() { *out = new kur_state{kur::PhaseState::load(path)}; });
}

kur_status kur_state_serialize(const kur_state* s, char** out_text) {
    if (!s || !out_text) return fail_arg("kur_state_serialize: bad arguments");
    return guarded([&]() { *out_text = dup_string(s->s.serialize()); });
}

kur_status kur_state_save(const kur_state* s, const char* path) {
    if (!s || !path) return fail_arg("kur_state_save: bad arguments");
    return guarded([&]() { s->s.save(path); });
}

void kur_state_free(kur_state* s) { delete s; }

int kur_state_size(const kur_state* s) { return s ? s->s.size() : 0; }

kur_status kur_state_angles(const kur_state* s, double* out) {
    if (!s || !out) return fail_arg("kur_state_angles: bad arguments");
    const auto& a = s->s.angles();
    std::memcpy(out, a.data(), a.size() * sizeof(double));
    return KUR_OK;
}

kur_status kur_state_random(int n, uint64_t seed, kur_state** out) {
    if (!out || n < 1) return fail_arg("kur_state_random: bad arguments");
    return guarded([&]() { *out = new kur_state{kur::PhaseState(kur::random_phases(n, seed))}; });
}

kur_status kur_state_canonical(const kur_state* s, int anchor, kur_state** out) {
    if (!s || !out) return fail_arg("kur_state_canonical: bad arguments");
    return guarded([&]() { *out = new kur_state{s->s.canonical(anchor)}; });
}

kur_status kur_state_distance(const kur_state* a, const kur_state* b, double* out) {
    if (!a || !b || !out) return fail_arg("kur_state_distance: bad arguments");
    return guarded([&]() { *out = kur::state_distance(a->s, b->s); });
}

/* ---- dynamics ----------------------------------------------------------- */

kur_status kur_rhs(const kur_graph* g, const kur_state* s, const double* omega, double k, double* out) {
    if (!g || !s || !out) return fail_arg("kur_rhs: bad arguments");
    return guarded([&]() {
        std::vector<double> r = kur::kuramoto_rhs(g->g, s->s, make_params(g, omega, k));
        std::memcpy(out, r.data(), r.size() * sizeof(double));
    });
}

kur_status kur_energy(const kur_graph* g, const kur_state* s, double* out) {
    if (!g || !s || !out) return fail_arg("kur_energy: bad arguments");
    return guarded([&]() { *out = kur::energy(g->g, s->s); });
}

kur_status kur_mean_frequency(const double* omega, int n, double* out) {
    if (!omega || !out || n < 1) return fail_arg("kur_mean_frequency: bad arguments");
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += omega[i];
    *out = s / n;
    return KUR_OK;
}

kur_status kur_step_rk4(const kur_graph* g, const kur_state* s, const double* omega, double k, double h,
                        kur_state** out) {
    if (!g || !s || !out) return fail_arg("kur_step_rk4: bad arguments");
    return guarded([&]() { *out = new kur_state{kur::step_rk4(g->g, s->s, make_params(g, omega, k), h)}; });
}

kur_status kur_integrate(const kur_graph* g, const kur_state* s0, const double* omega, double k,
                         double h, double tol, long max_steps, kur_trace_fn trace, void* trace_user,
                         kur_state** out_state, int* out_converged, long* out_steps) {
    if (!g || !s0 || !out_state) return fail_arg("kur_integrate: bad arguments");
    return guarded([&]() {
        kur::TraceFn cb;
        if (trace)
            cb = [trace, trace_user](long step, double energy, double dev) {
                trace(trace_user, step, energy, dev);
            };
        kur::IntegrationResult res =
            kur::integrate_to_convergence(g->g, s0->s, make_params(g, omega, k), h, tol, max_steps, cb);
        *out_state = new kur_state{std::move(res.state)};
        if (out_converged) *out_converged = res.converged ? 1 : 0;
        if (out_steps) *out_steps = res.steps;
    });
}

/* ---- fixed points and stability ----------------------------------------- */

kur_status kur_residual(const kur_graph* g, const kur_state* s, const double* omega, double k,
                        double* out) {
    if (!g || !s || !out) return fail_arg("kur_residual: bad arguments");
    return guarded([&]() {
        std::vector<double> r = kur::residual(g->g, s->s, make_params(g, omega, k));
        std::memcpy(out, r.data(), r.size() * sizeof(double));
    });
}

kur_status kur_newton_refine(const kur_graph* g, const kur_state* s0, const double* omega, double k,
                             double tol, int max_iter, kur_fp_list** out) {
    if (!g || !s0 || !out) return fail_arg("kur_newton_refine: bad arguments");
    return guarded([&]() {
        kur::MultistartResult r;
        r.samples = 1;
        r.records.push_back(kur::newton_refine(g->g, s0->s, make_params(g, omega, k), tol, max_iter));
        *out = new kur_fp_list{std::move(r)};
    });
}

kur_status kur_multistart(const kur_graph* g, const double* omega, double k, int samples, uint64_t seed,
                          double tol, kur_fp_list** out) {
    if (!g || !out) return fail_arg("kur_multistart: bad arguments");
    return guarded([&]() {
        *out = new kur_fp_list{kur::multistart_search(g->g, make_params(g, omega, k), samples, seed, tol)};
    });
}

int kur_fp_count(const kur_fp_list* l) { return l ? static_cast<int>(l->r.records.size()) : 0; }

int kur_fp_dropped(const kur_fp_list* l) { return l ? l->r.dropped : 0; }

namespace {
const kur::FixedPointRecord* record_at(const kur_fp_list* l, int idx) {
    if (!l || idx < 0 || static_cast<std::size_t>(idx) >= l->r.records.size()) return nullptr;
    return &l->r.records[static_cast<std::size_t>(idx)];
}
}  // namespace

kur_status kur_fp_state(const kur_fp_list* l, int idx, kur_state** out) {
    const auto* rec = record_at(l, idx);
    if (!rec || !out) return fail_arg("kur_fp_state: bad arguments");
    *out = new kur_state{rec->state};
    return KUR_OK;
}

kur_status kur_fp_residual_norm(const kur_fp_list* l, int idx, double* out) {
    const auto* rec = record_at(l, idx);
    if (!rec || !out) return fail_arg("kur_fp_residual_norm: bad arguments");
    *out = rec->residual_norm;
    return KUR_OK;
}

kur_status kur_fp_spectrum(const kur_fp_list* l, int idx, double* out) {
    const auto* rec = record_at(l, idx);
    if (!rec || !out) return fail_arg("kur_fp_spectrum: bad arguments");
    std::memcpy(out, rec->spectrum.data(), rec->spectrum.size() * sizeof(double));
    return KUR_OK;
}

kur_status kur_fp_verdict(const kur_fp_list* l, int idx, kur_verdict* out) {
    const auto* rec = record_at(l, idx);
    if (!rec || !out) return fail_arg("kur_fp_verdict: bad arguments");
    *out = to_c(rec->verdict);
    return KUR_OK;
}

kur_status kur_fp_classification(const kur_fp_list* l, int idx, kur_classification* out) {
    const auto* rec = record_at(l, idx);
    if (!rec || !out) return fail_arg("kur_fp_classification: bad arguments");
    *out = to_c(rec->classification);
    return KUR_OK;
}

void kur_fp_list_free(kur_fp_list* l) { delete l; }

kur_status kur_stability(const kur_graph* g, const kur_state* s, double tol, double* out_spectrum,
                         int* out_zero_modes, kur_verdict* out_verdict) {
    if (!g || !s) return fail_arg("kur_stability: bad arguments");
    return guarded([&]() {
        kur::StabilityReport rep = kur::stability_verdict(g->g, s->s, tol);
        if (out_spectrum)
            std::memcpy(out_spectrum, rep.spectrum.data(), rep.spectrum.size() * sizeof(double));
        if (out_zero_modes) *out_zero_modes = rep.zero_mode_count;
        if (out_verdict) *out_verdict = to_c(rep.verdict);
    });
}

kur_status kur_cut_check(const kur_graph* g, const kur_state* s, const int* x, int x_len,
                         double* out_sin, double* out_cos) {
    if (!g || !s || !x || x_len < 1) return fail_arg("kur_cut_check: bad arguments");
    return guarded([&]() {
        kur::CutSums sums = kur::cut_check(g->g, s->s, std::vector<int>(x, x + x_len));
        if (out_sin) *out_sin = sums.sin_sum;
        if (out_cos) *out_cos = sums.cos_sum;
    });
}

kur_status kur_edge_angle_check(const kur_graph* g, const kur_state* s, kur_edge_angles* out) {
    if (!g || !s || !out) return fail_arg("kur_edge_angle_check: bad arguments");
    return guarded([&]() {
        switch (kur::edge_angle_check(g->g, s->s)) {
            case kur::EdgeAngleClass::AllAcute: *out = KUR_EDGES_ALL_ACUTE; break;
            case kur::EdgeAngleClass::AllObtuse: *out = KUR_EDGES_ALL_OBTUSE; break;
            default: *out = KUR_EDGES_MIXED; break;
        }
    });
}

/* ---- partition problems ------------------------------------------------- */

kur_status kur_partition_solve(kur_partition_variant variant, const long long* values, int count,
                               int n_param, kur_answer* out_answer, int* out_subset,
                               int* out_subset_len, double* out_epsilon, double* out_gap,
                               int* out_definitive) {
    if (!values || count < 1) return fail_arg("kur_partition_solve: bad arguments");
    return guarded([&]() {
        std::vector<long long> vals(values, values + count);
        kur::PartitionResult res;
        switch (variant) {
            case KUR_PARTITION_INTEGER: {
                auto sol = kur::solve_partition_dp(vals);
                res.answer = sol ? kur::PartitionAnswer::Yes : kur::PartitionAnswer::No;
                res.solution = std::move(sol);
                res.definitive = true;
                break;
            }
            case KUR_PARTITION_KURAMOTO:
                res = kur::kuramoto_partition_feasible(n_param == 0 ? count : n_param, vals);
                break;
            case KUR_PARTITION_SURD:
                res = kur::surd_partition(n_param == 0 ? count : n_param, vals);
                break;
            default:
                throw std::invalid_argument("kur_partition_solve: unknown variant");
        }
        if (out_answer) *out_answer = to_c(res.answer);
        if (out_subset_len) *out_subset_len = res.solution ? static_cast<int>(res.solution->subset.size()) : 0;
        if (out_subset && res.solution)
            std::memcpy(out_subset, res.solution->subset.data(), res.solution->subset.size() * sizeof(int));
        if (out_epsilon) *out_epsilon = res.solution ? res.solution->epsilon : 0.0;
        if (out_gap) *out_gap = res.solution ? res.solution->achieved_gap : 0.0;
        if (out_definitive) *out_definitive = res.definitive ? 1 : 0;
    });
}

kur_status kur_kk_differencing(const double* values, int count, int* out_subset, int* out_subset_len,
                               double* out_gap) {
    if (!values || count < 1) return fail_arg("kur_kk_differencing: bad arguments");
    return guarded([&]() {
        kur::KKResult res = kur::kk_differencing(std::vector<double>(values, values + count));
        if (out_subset_len) *out_subset_len = static_cast<int>(res.subset.size());
        if (out_subset) std::memcpy(out_subset, res.subset.data(), res.subset.size() * sizeof(int));
        if (out_gap) *out_gap = res.gap;
    });
}

kur_status kur_kuramoto_term(long long b, double eps, int in_subset, double* out) {
    if (!out) return fail_arg("kur_kuramoto_term: bad arguments");
    return guarded([&]() { *out = kur::kuramoto_partition_term(b, eps, in_subset != 0); });
}

/* ---- reduction gadgets --------------------------------------------------- */

kur_status kur_gadget_build(kur_gadget_kind kind, const long long* values, int count, int n_param,
                            double factor, kur_gadget** out) {
    if (!values || count < 1 || !out) return fail_arg("kur_gadget_build: bad arguments");
    return guarded([&]() {
        std::vector<long long> vals(values, values + count);
        kur::Gadget g = kind == KUR_GADGET_WEIGHTED
                            ? kur::build_weighted_gadget(vals, factor)
                            : kur::build_unweighted_gadget(n_param == 0 ? count : n_param, vals);
        auto* handle = new kur_gadget{std::move(g), kur_graph{kur::WeightedGraph(1, {})}};
        handle->graph_view.g = handle->g.graph;
        *out = handle;
    });
}

kur_status kur_blowup_build(const long long* values, int count, kur_graph** out) {
    if (!values || count < 1 || !out) return fail_arg("kur_blowup_build: bad arguments");
    return guarded([&]() {
        *out = new kur_graph{kur::build_clique_blowup(std::vector<long long>(values, values + count))};
    });
}

void kur_gadget_free(kur_gadget* g) { delete g; }

const kur_graph* kur_gadget_graph(const kur_gadget* g) { return g ? &g->graph_view : nullptr; }

kur_status kur_gadget_serialize(const kur_gadget* g, char** out_text) {
    if (!g || !out_text) return fail_arg("kur_gadget_serialize: bad arguments");
    return guarded([&]() { *out_text = dup_string(kur::serialize_gadget(g->g)); });
}

int kur_gadget_group_count(const kur_gadget* g) {
    return g ? static_cast<int>(g->g.desc.u.size()) : 0;
}

int kur_gadget_x(const kur_gadget* g) { return g ? g->g.desc.x : -1; }

int kur_gadget_y(const kur_gadget* g) { return g ? g->g.desc.y : -1; }

kur_status kur_gadget_u(const kur_gadget* g, int i, int* out) {
    if (!g || !out || i < 0 || static_cast<std::size_t>(i) >= g->g.desc.u.size())
        return fail_arg("kur_gadget_u: index out of range");
    *out = g->g.desc.u[static_cast<std::size_t>(i)];
    return KUR_OK;
}

kur_status kur_gadget_v(const kur_gadget* g, int i, int* out) {
    if (!g || !out || i < 0 || static_cast<std::size_t>(i) >= g->g.desc.v.size())
        return fail_arg("kur_gadget_v: index out of range");
    *out = g->g.desc.v[static_cast<std::size_t>(i)];
    return KUR_OK;
}

kur_status kur_gadget_clique_size(const kur_gadget* g, int i, int* out) {
    if (!g || !out || i < 0 || static_cast<std::size_t>(i) >= g->g.desc.cliques.size())
        return fail_arg("kur_gadget_clique_size: index out of range");
    *out = static_cast<int>(g->g.desc.cliques[static_cast<std::size_t>(i)].size());
    return KUR_OK;
}

kur_status kur_gadget_clique_node(const kur_gadget* g, int i, int k, int* out) {
    if (!g || !out || i < 0 || static_cast<std::size_t>(i) >= g->g.desc.cliques.size())
        return fail_arg("kur_gadget_clique_node: index out of range");
    const auto& clique = g->g.desc.cliques[static_cast<std::size_t>(i)];
    if (k < 0 || static_cast<std::size_t>(k) >= clique.size())
        return fail_arg("kur_gadget_clique_node: index out of range");
    *out = clique[static_cast<std::size_t>(k)];
    return KUR_OK;
}

kur_status kur_gadget_analytic_state(const kur_gadget* g, const int* subset, int subset_len,
                                     double eps, kur_state** out) {
    if (!g || !out || subset_len < 0 || (subset_len > 0 && !subset))
        return fail_arg("kur_gadget_analytic_state: bad arguments");
    return guarded([&]() {
        std::vector<int> s(subset, subset + subset_len);
        kur::PhaseState state = g->g.desc.n_param > 0
                                    ? kur::unweighted_gadget_fixed_point(g->g, s, eps)
                                    : kur::weighted_gadget_fixed_point(g->g, s);
        *out = new kur_state{std::move(state)};
    });
}

/* ---- reduction verification ---------------------------------------------- */

kur_status kur_verify_reduction(kur_gadget_kind kind, const long long* values, int count, int n_param,
                                double factor, int samples, uint64_t seed, kur_verify_report** out) {
    if (!values || count < 1 || !out) return fail_arg("kur_verify_reduction: bad arguments");
    return guarded([&]() {
        std::vector<long long> vals(values, values + count);
        kur::ReductionReport rep =
            kind == KUR_GADGET_WEIGHTED
                ? kur::verify_reduction_weighted(vals, samples, seed, factor)
                : kur::verify_reduction_unweighted(n_param == 0 ? count : n_param, vals, samples, seed);
        *out = new kur_verify_report{std::move(rep)};
    });
}

void kur_verify_report_free(kur_verify_report* r) { delete r; }

kur_answer kur_verify_answer(const kur_verify_report* r) {
    return r ? to_c(r->r.partition.answer) : KUR_ANSWER_NOT_FOUND;
}

kur_status kur_verify_subset(const kur_verify_report* r, int* out_subset, int* out_len) {
    if (!r) return fail_arg("kur_verify_subset: bad arguments");
    const auto& sol = r->r.partition.solution;
    if (out_len) *out_len = sol ? static_cast<int>(sol->subset.size()) : 0;
    if (out_subset && sol)
        std::memcpy(out_subset, sol->subset.data(), sol->subset.size() * sizeof(int));
    return KUR_OK;
}

double kur_verify_epsilon(const kur_verify_report* r) {
    return r && r->r.partition.solution ? r->r.partition.solution->epsilon : 0.0;
}

int kur_verify_consistent(const kur_verify_report* r, int* out_determinable) {
    if (out_determinable) *out_determinable = r && r->r.determinable ? 1 : 0;
    return r && r->r.consistent ? 1 : 0;
}

int kur_verify_stable_zero(const kur_verify_report* r) { return r ? r->r.stable_zero : 0; }
int kur_verify_stable_nonzero(const kur_verify_report* r) { return r ? r->r.stable_nonzero : 0; }
int kur_verify_unstable(const kur_verify_report* r) { return r ? r->r.unstable : 0; }
int kur_verify_marginal(const kur_verify_report* r) { return r ? r->r.marginal : 0; }
int kur_verify_dropped(const kur_verify_report* r) { return r ? r->r.dropped : 0; }

int kur_verify_analytic(const kur_verify_report* r, double* out_residual, kur_verdict* out_verdict,
                        kur_classification* out_class) {
    if (!r || !r->r.analytic) return 0;
    if (out_residual) *out_residual = r->r.analytic->residual_norm;
    if (out_verdict) *out_verdict = to_c(r->r.analytic->verdict);
    if (out_class) *out_class = to_c(r->r.analytic->classification);
    return 1;
}

kur_status kur_verify_analytic_state(const kur_verify_report* r, kur_state** out) {
    if (!r || !out) return fail_arg("kur_verify_analytic_state: bad arguments");
    if (!r->r.analytic) return fail_arg("kur_verify_analytic_state: no analytic record");
    *out = new kur_state{r->r.analytic->state};
    return KUR_OK;
}

}  // extern "C"
