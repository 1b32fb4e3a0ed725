// Command-line front end for the Kuramoto fixed-point toolkit.  Talks to the
// shared library exclusively through the C API in kuramoto.h.

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kuramoto.h"

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

[[noreturn]] void die(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    std::exit(kExitError);
}

void check(kur_status st, const std::string& context) {
    if (st != KUR_OK) die(context + ": " + kur_last_error());
}

std::vector<long long> parse_value_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            die("cannot parse integer list entry '" + item + "'");
        }
    }
    if (out.empty()) die("expected a comma-separated list of integers");
    return out;
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    for (long long v : parse_value_list(text)) out.push_back(static_cast<int>(v));
    return out;
}

// Omega file: "kuramoto-omega v1" / "n=<N>" / N lines "<i> <value>".
std::vector<double> load_omega(const std::string& path, int n_expected) {
    std::ifstream in(path);
    if (!in) die("cannot open omega file: " + path);
    std::string line;
    int lineno = 0, n = -1;
    std::vector<double> omega;
    std::vector<char> filled;
    auto fail = [&](const std::string& msg) {
        die("omega file " + path + " line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        if (n == -1) {
            if (line != "kuramoto-omega v1") fail("expected header 'kuramoto-omega v1'");
            n = -2;
            continue;
        }
        if (n == -2) {
            if (std::sscanf(line.c_str(), "n=%d", &n) != 1 || n < 1) fail("expected 'n=<N>'");
            omega.assign(static_cast<std::size_t>(n), 0.0);
            filled.assign(static_cast<std::size_t>(n), 0);
            continue;
        }
        int i = 0;
        double v = 0.0;
        if (std::sscanf(line.c_str(), "%d %lf", &i, &v) != 2) fail("expected '<i> <value>'");
        if (i < 0 || i >= n) fail("node index out of range");
        if (filled[static_cast<std::size_t>(i)]) fail("duplicate node index");
        filled[static_cast<std::size_t>(i)] = 1;
        omega[static_cast<std::size_t>(i)] = v;
    }
    if (n < 1) die("omega file " + path + ": missing header");
    for (char f : filled)
        if (!f) die("omega file " + path + ": missing node entries");
    if (n != n_expected) die("omega file " + path + ": node count does not match graph");
    return omega;
}

kur_graph* load_graph(const std::string& path) {
    kur_graph* g = nullptr;
    check(kur_graph_load(path.c_str(), &g), "loading graph " + path);
    return g;
}

void print_state_block(const char* label, kur_state* s) {
    int n = kur_state_size(s);
    std::vector<double> angles(static_cast<std::size_t>(n));
    check(kur_state_angles(s, angles.data()), "reading state");
    std::printf("%s:\n", label);
    for (int i = 0; i < n; ++i) std::printf("  %d %s\n", i, fmt(angles[static_cast<std::size_t>(i)]).c_str());
}

const char* verdict_name(kur_verdict v) {
    switch (v) {
        case KUR_VERDICT_STABLE: return "Stable";
        case KUR_VERDICT_UNSTABLE: return "Unstable";
        default: return "Marginal";
    }
}

const char* class_name(kur_classification c) {
    return c == KUR_CLASS_ZERO ? "Zero" : "NonZero";
}

const char* edge_class_name(kur_edge_angles c) {
    switch (c) {
        case KUR_EDGES_ALL_ACUTE: return "AllAcute";
        case KUR_EDGES_ALL_OBTUSE: return "AllObtuse";
        default: return "Mixed";
    }
}

const char* answer_name(kur_answer a) {
    switch (a) {
        case KUR_ANSWER_YES: return "Yes";
        case KUR_ANSWER_NO: return "No";
        default: return "NotFound";
    }
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out.empty() ? "-" : out;
}

std::string join_lls(const std::vector<long long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

double residual_norm_of(const kur_graph* g, const kur_state* s) {
    int n = kur_graph_node_count(g);
    std::vector<double> r(static_cast<std::size_t>(n));
    check(kur_residual(g, s, nullptr, 1.0, r.data()), "computing residual");
    double rn = 0.0;
    for (double v : r) rn = std::max(rn, std::fabs(v));
    return rn;
}

void trace_print(void*, long step, double energy, double freq_dev) {
    std::printf("trace: step=%ld energy=%s freq-dev=%s\n", step, fmt(energy).c_str(),
                fmt(freq_dev).c_str());
}

// ---- simulate ---------------------------------------------------------------

struct SimulateOpts {
    std::string graph, omega, state, out;
    double k = 1.0, h = 0.05, tol = 1e-10;
    long steps = 200000;
    std::uint64_t seed = 0;
    bool trace = false;
};

int run_simulate(const SimulateOpts& opt) {
    kur_graph* g = load_graph(opt.graph);
    int n = kur_graph_node_count(g);
    std::vector<double> omega;
    if (!opt.omega.empty()) omega = load_omega(opt.omega, n);

    kur_state* start = nullptr;
    if (!opt.state.empty()) {
        check(kur_state_load(opt.state.c_str(), &start), "loading state " + opt.state);
        if (kur_state_size(start) != n) die("state size does not match graph");
    } else {
        check(kur_state_random(n, opt.seed, &start), "drawing random start");
    }

    std::printf("command: simulate\n");
    std::printf("graph: %s\n", opt.graph.c_str());
    std::printf("nodes: %d\n", n);
    std::printf("edges: %d\n", kur_graph_edge_count(g));
    std::printf("k: %s\n", fmt(opt.k).c_str());
    std::printf("h: %s\n", fmt(opt.h).c_str());
    std::printf("tol: %s\n", fmt(opt.tol).c_str());
    std::printf("max-steps: %ld\n", opt.steps);
    if (!opt.omega.empty()) std::printf("omega: %s\n", opt.omega.c_str());
    if (!opt.state.empty())
        std::printf("start: state-file %s\n", opt.state.c_str());
    else
        std::printf("start: random seed=%" PRIu64 "\n", opt.seed);

    kur_state* final_state = nullptr;
    int converged = 0;
    long steps = 0;
    check(kur_integrate(g, start, omega.empty() ? nullptr : omega.data(), opt.k, opt.h, opt.tol,
                        opt.steps, opt.trace ? &trace_print : nullptr, nullptr, &final_state,
                        &converged, &steps),
          "integrating");

    double energy = 0.0;
    check(kur_energy(g, final_state, &energy), "computing energy");
    std::printf("converged: %s\n", converged ? "yes" : "no");
    std::printf("steps: %ld\n", steps);
    std::printf("energy: %s\n", fmt(energy).c_str());
    std::printf("residual: %s\n", fmt(residual_norm_of(g, final_state)).c_str());
    print_state_block("state", final_state);
    if (!opt.out.empty()) {
        check(kur_state_save(final_state, opt.out.c_str()), "writing state " + opt.out);
        std::printf("out: %s\n", opt.out.c_str());
    }

    int code = converged ? kExitPositive : kExitNegative;
    kur_state_free(final_state);
    kur_state_free(start);
    kur_graph_free(g);
    return code;
}

// ---- fixed-points -------------------------------------------------------------

struct FixedPointsOpts {
    std::string graph;
    int samples = 100;
    std::uint64_t seed = 0;
    double tol = 1e-10;
};

int run_fixed_points(const FixedPointsOpts& opt) {
    kur_graph* g = load_graph(opt.graph);
    int n = kur_graph_node_count(g);

    std::printf("command: fixed-points\n");
    std::printf("graph: %s\n", opt.graph.c_str());
    std::printf("nodes: %d\n", n);
    std::printf("samples: %d\n", opt.samples);
    std::printf("seed: %" PRIu64 "\n", opt.seed);
    std::printf("tol: %s\n", fmt(opt.tol).c_str());

    kur_fp_list* list = nullptr;
    check(kur_multistart(g, nullptr, 1.0, opt.samples, opt.seed, opt.tol, &list), "multistart search");

    int count = kur_fp_count(list);
    std::printf("distinct-records: %d\n", count);
    std::printf("dropped-samples: %d\n", kur_fp_dropped(list));

    int stable = 0, stable_nonzero = 0, unstable = 0, marginal = 0;
    std::vector<double> spectrum(static_cast<std::size_t>(n));
    std::vector<double> angles(static_cast<std::size_t>(n));
    for (int i = 0; i < count; ++i) {
        kur_verdict verdict;
        kur_classification cls;
        double rn = 0.0;
        check(kur_fp_verdict(list, i, &verdict), "reading verdict");
        check(kur_fp_classification(list, i, &cls), "reading classification");
        check(kur_fp_residual_norm(list, i, &rn), "reading residual");
        check(kur_fp_spectrum(list, i, spectrum.data()), "reading spectrum");
        kur_state* s = nullptr;
        check(kur_fp_state(list, i, &s), "reading state");
        check(kur_state_angles(s, angles.data()), "reading angles");
        kur_state_free(s);

        if (verdict == KUR_VERDICT_STABLE) {
            ++stable;
            if (cls == KUR_CLASS_NONZERO) ++stable_nonzero;
        } else if (verdict == KUR_VERDICT_UNSTABLE) {
            ++unstable;
        } else {
            ++marginal;
        }

        std::printf("record: %d\n", i + 1);
        std::printf("  verdict: %s\n", verdict_name(verdict));
        std::printf("  classification: %s\n", class_name(cls));
        std::printf("  residual: %s\n", fmt(rn).c_str());
        std::printf("  spectrum-head:");
        for (int e = 0; e < n && e < 5; ++e)
            std::printf(" %s", fmt(spectrum[static_cast<std::size_t>(e)]).c_str());
        std::printf("\n");
        std::printf("  angles:");
        for (int a = 0; a < n; ++a) std::printf(" %s", fmt(angles[static_cast<std::size_t>(a)]).c_str());
        std::printf("\n");
    }
    std::printf("summary: stable=%d stable-nonzero=%d unstable=%d marginal=%d\n", stable,
                stable_nonzero, unstable, marginal);

    int code = stable_nonzero > 0 ? kExitPositive : kExitNegative;
    kur_fp_list_free(list);
    kur_graph_free(g);
    return code;
}

// ---- stability -----------------------------------------------------------------

struct StabilityOpts {
    std::string graph, state;
    double tol = 1e-8;
    std::vector<std::string> cuts;
};

int run_stability(const StabilityOpts& opt) {
    kur_graph* g = load_graph(opt.graph);
    int n = kur_graph_node_count(g);
    kur_state* s = nullptr;
    check(kur_state_load(opt.state.c_str(), &s), "loading state " + opt.state);
    if (kur_state_size(s) != n) die("state size does not match graph");

    std::printf("command: stability\n");
    std::printf("graph: %s\n", opt.graph.c_str());
    std::printf("state: %s\n", opt.state.c_str());
    std::printf("tol: %s\n", fmt(opt.tol).c_str());
    std::printf("residual: %s\n", fmt(residual_norm_of(g, s)).c_str());

    std::vector<double> spectrum(static_cast<std::size_t>(n));
    int zero_modes = 0;
    kur_verdict verdict;
    check(kur_stability(g, s, opt.tol, spectrum.data(), &zero_modes, &verdict), "stability analysis");
    std::printf("spectrum:");
    for (int i = 0; i < n; ++i) std::printf(" %s", fmt(spectrum[static_cast<std::size_t>(i)]).c_str());
    std::printf("\n");
    std::printf("zero-modes: %d\n", zero_modes);
    std::printf("verdict: %s\n", verdict_name(verdict));

    kur_edge_angles edges;
    check(kur_edge_angle_check(g, s, &edges), "edge angle check");
    std::printf("edge-angles: %s\n", edge_class_name(edges));

    for (const std::string& cut_text : opt.cuts) {
        std::vector<int> x = parse_index_list(cut_text);
        double sin_sum = 0.0, cos_sum = 0.0;
        check(kur_cut_check(g, s, x.data(), static_cast<int>(x.size()), &sin_sum, &cos_sum),
              "cut check");
        std::printf("cut %s: sin=%s cos=%s\n", cut_text.c_str(), fmt(sin_sum).c_str(),
                    fmt(cos_sum).c_str());
    }

    int code = verdict == KUR_VERDICT_STABLE ? kExitPositive : kExitNegative;
    kur_state_free(s);
    kur_graph_free(g);
    return code;
}

// ---- partition -----------------------------------------------------------------

struct PartitionOpts {
    std::string variant = "integer";
    std::string values;
    int n = 0;
};

int run_partition(const PartitionOpts& opt) {
    std::vector<long long> values = parse_value_list(opt.values);
    kur_partition_variant variant;
    if (opt.variant == "integer")
        variant = KUR_PARTITION_INTEGER;
    else if (opt.variant == "kuramoto")
        variant = KUR_PARTITION_KURAMOTO;
    else if (opt.variant == "surd")
        variant = KUR_PARTITION_SURD;
    else
        die("unknown variant '" + opt.variant + "' (expected integer|kuramoto|surd)");
    if (opt.n != 0 && opt.n != static_cast<int>(values.size()))
        die("--n must equal the number of values");

    std::printf("command: partition\n");
    std::printf("variant: %s\n", opt.variant.c_str());
    std::printf("values: %s\n", join_lls(values).c_str());

    kur_answer answer;
    std::vector<int> subset(3 * values.size());
    int subset_len = 0, definitive = 0;
    double epsilon = 0.0, gap = 0.0;
    check(kur_partition_solve(variant, values.data(), static_cast<int>(values.size()), opt.n, &answer,
                              subset.data(), &subset_len, &epsilon, &gap, &definitive),
          "solving partition instance");

    std::printf("answer: %s\n", answer_name(answer));
    std::printf("definitive: %s\n", definitive ? "yes" : "no");
    if (answer == KUR_ANSWER_YES) {
        subset.resize(static_cast<std::size_t>(subset_len));
        std::printf("subset: %s\n", join_ints(subset).c_str());
        if (variant == KUR_PARTITION_KURAMOTO) std::printf("epsilon: %s\n", fmt(epsilon).c_str());
        std::printf("gap: %s\n", fmt(gap).c_str());
    } else if (answer == KUR_ANSWER_NOT_FOUND && definitive == 0) {
        std::printf("note: incomplete search; absence not certified\n");
    }
    return answer == KUR_ANSWER_YES ? kExitPositive : kExitNegative;
}

// ---- gadget --------------------------------------------------------------------

struct GadgetOpts {
    std::string variant = "weighted";
    std::string values, out, witness, subset;
    int n = 0;
    double factor = 2.0;
    double eps = -1.0;
};

int run_gadget(const GadgetOpts& opt) {
    std::vector<long long> values = parse_value_list(opt.values);
    const int count = static_cast<int>(values.size());

    std::printf("command: gadget\n");
    std::printf("variant: %s\n", opt.variant.c_str());
    std::printf("values: %s\n", join_lls(values).c_str());

    if (opt.variant == "blowup") {
        if (!opt.witness.empty()) die("--witness is not supported for the blowup variant");
        kur_graph* g = nullptr;
        check(kur_blowup_build(values.data(), count, &g), "building blowup graph");
        std::printf("nodes: %d\n", kur_graph_node_count(g));
        std::printf("edges: %d\n", kur_graph_edge_count(g));
        if (!opt.out.empty()) {
            check(kur_graph_save(g, opt.out.c_str()), "writing graph " + opt.out);
            std::printf("out: %s\n", opt.out.c_str());
        } else {
            char* text = nullptr;
            check(kur_graph_serialize(g, &text), "serializing graph");
            std::fputs(text, stdout);
            kur_string_free(text);
        }
        kur_graph_free(g);
        return kExitPositive;
    }

    bool weighted = opt.variant == "weighted";
    if (!weighted && opt.variant != "unweighted")
        die("unknown variant '" + opt.variant + "' (expected weighted|blowup|unweighted)");
    if (opt.n != 0 && opt.n != count) die("--n must equal the number of values");

    kur_gadget* gadget = nullptr;
    check(kur_gadget_build(weighted ? KUR_GADGET_WEIGHTED : KUR_GADGET_UNWEIGHTED, values.data(),
                           count, opt.n, opt.factor, &gadget),
          "building gadget");
    const kur_graph* graph = kur_gadget_graph(gadget);
    if (weighted) std::printf("factor: %s\n", fmt(opt.factor).c_str());
    std::printf("nodes: %d\n", kur_graph_node_count(graph));
    std::printf("edges: %d\n", kur_graph_edge_count(graph));

    char* text = nullptr;
    check(kur_gadget_serialize(gadget, &text), "serializing gadget");
    if (!opt.out.empty()) {
        std::ofstream out(opt.out, std::ios::binary);
        if (!out) die("cannot write file: " + opt.out);
        out << text;
        std::printf("out: %s\n", opt.out.c_str());
    } else {
        std::fputs(text, stdout);
    }
    kur_string_free(text);

    int code = kExitPositive;
    if (!opt.witness.empty()) {
        // pick a witness subset: explicit --subset or the partition solver
        std::vector<int> subset;
        double eps = 0.0;
        bool have = false;
        if (!opt.subset.empty()) {
            subset = parse_index_list(opt.subset);
            if (!weighted) {
                if (opt.eps < 0.0) die("--eps is required with --subset for the unweighted variant");
                eps = opt.eps;
            }
            have = true;
        } else {
            kur_answer answer;
            std::vector<int> buf(3 * values.size());
            int len = 0;
            double epsilon = 0.0, gap = 0.0;
            check(kur_partition_solve(weighted ? KUR_PARTITION_INTEGER : KUR_PARTITION_KURAMOTO,
                                      values.data(), count, opt.n, &answer, buf.data(), &len, &epsilon,
                                      &gap, nullptr),
                  "solving partition instance");
            std::printf("partition-answer: %s\n", answer_name(answer));
            if (answer == KUR_ANSWER_YES) {
                buf.resize(static_cast<std::size_t>(len));
                subset = buf;
                eps = epsilon;
                have = true;
            }
        }
        if (!have) {
            std::printf("witness: none\n");
            code = kExitNegative;
        } else {
            kur_state* state = nullptr;
            check(kur_gadget_analytic_state(gadget, subset.data(), static_cast<int>(subset.size()),
                                            eps, &state),
                  "constructing analytic fixed point");
            check(kur_state_save(state, opt.witness.c_str()), "writing state " + opt.witness);
            std::printf("witness: %s\n", opt.witness.c_str());
            std::printf("witness-subset: %s\n", join_ints(subset).c_str());
            if (!weighted) std::printf("witness-epsilon: %s\n", fmt(eps).c_str());
            std::printf("witness-residual: %s\n", fmt(residual_norm_of(graph, state)).c_str());
            kur_verdict verdict;
            check(kur_stability(graph, state, 1e-8, nullptr, nullptr, &verdict), "stability analysis");
            std::printf("witness-verdict: %s\n", verdict_name(verdict));

            // phase-angle diagram: node, angle, role columns
            int nodes = kur_graph_node_count(graph);
            std::vector<double> angles(static_cast<std::size_t>(nodes));
            check(kur_state_angles(state, angles.data()), "reading angles");
            std::vector<std::string> role(static_cast<std::size_t>(nodes));
            role[static_cast<std::size_t>(kur_gadget_x(gadget))] = "x";
            role[static_cast<std::size_t>(kur_gadget_y(gadget))] = "y";
            int groups = kur_gadget_group_count(gadget);
            for (int i = 0; i < groups; ++i) {
                int u = 0, v = 0, csize = 0;
                check(kur_gadget_u(gadget, i, &u), "reading roles");
                check(kur_gadget_v(gadget, i, &v), "reading roles");
                role[static_cast<std::size_t>(u)] = "u_" + std::to_string(i + 1);
                role[static_cast<std::size_t>(v)] = "v_" + std::to_string(i + 1);
                check(kur_gadget_clique_size(gadget, i, &csize), "reading roles");
                for (int k = 0; k < csize; ++k) {
                    int c = 0;
                    check(kur_gadget_clique_node(gadget, i, k, &c), "reading roles");
                    role[static_cast<std::size_t>(c)] = "C_" + std::to_string(i + 1);
                }
            }
            std::printf("phase-diagram:\n");
            std::printf("  node angle role\n");
            for (int i = 0; i < nodes; ++i)
                std::printf("  %d %s %s\n", i, fmt(angles[static_cast<std::size_t>(i)]).c_str(),
                            role[static_cast<std::size_t>(i)].c_str());
            kur_state_free(state);
        }
    }
    kur_gadget_free(gadget);
    return code;
}

// ---- verify --------------------------------------------------------------------

struct VerifyOpts {
    std::string variant = "weighted";
    std::string values;
    int n = 0;
    double factor = 2.0;
    int samples = 500;
    std::uint64_t seed = 0;
};

int run_verify(const VerifyOpts& opt) {
    std::vector<long long> values = parse_value_list(opt.values);
    bool weighted = opt.variant == "weighted";
    if (!weighted && opt.variant != "unweighted")
        die("unknown variant '" + opt.variant + "' (expected weighted|unweighted)");
    if (opt.n != 0 && opt.n != static_cast<int>(values.size()))
        die("--n must equal the number of values");

    std::printf("command: verify\n");
    std::printf("variant: %s\n", opt.variant.c_str());
    std::printf("values: %s\n", join_lls(values).c_str());
    if (weighted) std::printf("factor: %s\n", fmt(opt.factor).c_str());
    std::printf("samples: %d\n", opt.samples);
    std::printf("seed: %" PRIu64 "\n", opt.seed);

    kur_verify_report* rep = nullptr;
    check(kur_verify_reduction(weighted ? KUR_GADGET_WEIGHTED : KUR_GADGET_UNWEIGHTED, values.data(),
                               static_cast<int>(values.size()), opt.n, opt.factor, opt.samples,
                               opt.seed, &rep),
          "verifying reduction");

    kur_answer answer = kur_verify_answer(rep);
    std::printf("partition-answer: %s\n", answer_name(answer));
    if (answer == KUR_ANSWER_YES) {
        int len = 0;
        check(kur_verify_subset(rep, nullptr, &len), "reading subset");
        std::vector<int> subset(static_cast<std::size_t>(len));
        check(kur_verify_subset(rep, subset.data(), &len), "reading subset");
        std::printf("partition-subset: %s\n", join_ints(subset).c_str());
        if (!weighted) std::printf("partition-epsilon: %s\n", fmt(kur_verify_epsilon(rep)).c_str());
    }

    double analytic_residual = 0.0;
    kur_verdict analytic_verdict;
    kur_classification analytic_class;
    if (kur_verify_analytic(rep, &analytic_residual, &analytic_verdict, &analytic_class)) {
        std::printf("analytic-residual: %s\n", fmt(analytic_residual).c_str());
        std::printf("analytic-verdict: %s\n", verdict_name(analytic_verdict));
        std::printf("analytic-classification: %s\n", class_name(analytic_class));
    }

    std::printf("search-stable-zero: %d\n", kur_verify_stable_zero(rep));
    std::printf("search-stable-nonzero: %d\n", kur_verify_stable_nonzero(rep));
    std::printf("search-unstable: %d\n", kur_verify_unstable(rep));
    std::printf("search-marginal: %d\n", kur_verify_marginal(rep));
    std::printf("search-dropped: %d\n", kur_verify_dropped(rep));

    int determinable = 0;
    int consistent = kur_verify_consistent(rep, &determinable);
    std::printf("consistent: %s\n", !determinable ? "undeterminable" : (consistent ? "yes" : "no"));

    kur_verify_report_free(rep);
    return determinable && consistent ? kExitPositive : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted Kuramoto model: fixed points, stability, and partition reduction gadgets"};
    app.set_help_flag("--help", "Print help and exit");  // keep -h free for the step size
    app.require_subcommand(1);

    SimulateOpts sim;
    auto* c_sim = app.add_subcommand("simulate", "Integrate the phase dynamics to convergence");
    c_sim->set_help_flag("--help", "Print help and exit");
    c_sim->add_option("--graph", sim.graph, "graph file")->required();
    c_sim->add_option("--omega", sim.omega, "natural frequency file (omit for homogeneous)");
    c_sim->add_option("--state", sim.state, "initial state file (default: random)");
    c_sim->add_option("--k", sim.k, "coupling constant");
    c_sim->add_option("--h", sim.h, "integration step");
    c_sim->add_option("--tol", sim.tol, "frequency convergence tolerance");
    c_sim->add_option("--steps", sim.steps, "maximum steps");
    c_sim->add_option("--seed", sim.seed, "seed for the random start");
    c_sim->add_option("--out", sim.out, "write the final state here");
    c_sim->add_flag("--trace", sim.trace, "print per-step energy and frequency deviation");

    FixedPointsOpts fp;
    auto* c_fp = app.add_subcommand("fixed-points", "Multistart fixed-point survey");
    c_fp->add_option("--graph", fp.graph, "graph file")->required();
    c_fp->add_option("--samples", fp.samples, "number of random starts");
    c_fp->add_option("--seed", fp.seed, "random seed");
    c_fp->add_option("--tol", fp.tol, "residual tolerance");

    StabilityOpts st;
    auto* c_st = app.add_subcommand("stability", "Linear stability analysis of a state");
    c_st->add_option("--graph", st.graph, "graph file")->required();
    c_st->add_option("--state", st.state, "state file")->required();
    c_st->add_option("--tol", st.tol, "zero-mode tolerance");
    c_st->add_option("--cut", st.cuts, "comma-separated node subset for a cut check (repeatable)");

    PartitionOpts pa;
    auto* c_pa = app.add_subcommand("partition", "Solve a partition instance");
    c_pa->add_option("--variant", pa.variant, "integer|kuramoto|surd");
    c_pa->add_option("--values", pa.values, "comma-separated positive integers")->required();
    c_pa->add_option("--n", pa.n, "instance parameter n (must equal the value count)");

    GadgetOpts ga;
    auto* c_ga = app.add_subcommand("gadget", "Construct a reduction gadget graph");
    c_ga->add_option("--variant", ga.variant, "weighted|blowup|unweighted");
    c_ga->add_option("--values", ga.values, "comma-separated positive integers")->required();
    c_ga->add_option("--n", ga.n, "instance parameter n (unweighted variant)");
    c_ga->add_option("--factor", ga.factor, "v-y weight factor (weighted variant)");
    c_ga->add_option("--out", ga.out, "write the graph file here (default: stdout)");
    c_ga->add_option("--witness", ga.witness, "write the analytic fixed-point state here");
    c_ga->add_option("--subset", ga.subset, "explicit witness subset (0-based positions)");
    c_ga->add_option("--eps", ga.eps, "witness epsilon (unweighted variant with --subset)");

    VerifyOpts ve;
    auto* c_ve = app.add_subcommand("verify", "Empirically verify the partition reduction");
    c_ve->add_option("--variant", ve.variant, "weighted|unweighted");
    c_ve->add_option("--values", ve.values, "comma-separated positive integers")->required();
    c_ve->add_option("--n", ve.n, "instance parameter n (unweighted variant)");
    c_ve->add_option("--factor", ve.factor, "v-y weight factor (weighted variant)");
    c_ve->add_option("--samples", ve.samples, "multistart samples");
    c_ve->add_option("--seed", ve.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitError;
    }

    auto t0 = std::chrono::steady_clock::now();
    int code = kExitError;
    if (*c_sim)
        code = run_simulate(sim);
    else if (*c_fp)
        code = run_fixed_points(fp);
    else if (*c_st)
        code = run_stability(st);
    else if (*c_pa)
        code = run_partition(pa);
    else if (*c_ga)
        code = run_gadget(ga);
    else if (*c_ve)
        code = run_verify(ve);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::fprintf(stderr, "wall-time: %.3f s\n", secs);
    return code;
}
