// End-to-end acceptance checks.  Each numbered criterion prints exactly one
// [PASS]/[FAIL] line; the exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/builder.hpp"
#include "core/dp.hpp"
#include "core/gen.hpp"
#include "core/ip.hpp"
#include "core/normal_form.hpp"
#include "core/oracle.hpp"

using namespace copath;

namespace {

int g_failed = 0;

void report(int k, const std::string& what, bool ok, const std::string& detail) {
    if (ok) {
        std::cout << "[PASS] criterion " << k << ": " << what << "\n";
    } else {
        std::cout << "[FAIL] criterion " << k << ": " << what;
        if (!detail.empty())
            std::cout << " — " << detail;
        std::cout << "\n";
        ++g_failed;
    }
    std::cout.flush();
}

void guarded(int k, const std::string& what, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& ex) {
        detail = std::string("exception: ") + ex.what();
    }
    report(k, what, ok, detail);
}

struct Instance {
    CoExpr e;
    TerminalSet t;
};

// random co-expressions of 2..10 vertices with empty, full and mixed
// terminal sets, plus hand-built trees that exercise the order operator
std::vector<Instance> main_corpus() {
    std::vector<Instance> out;
    for (int i = 0; i < 520; ++i) {
        int n = 2 + i % 9;
        int t = i % 3 == 0 ? 0 : i % 3 == 1 ? n : static_cast<int>((i * 13) % (n + 1));
        double prob = n >= 9 ? 0.65 : 0.3 + 0.2 * (i % 3);
        auto [e, ts] = random_cograph(t, n, prob, 1000 + i);
        out.push_back({std::move(e), std::move(ts)});
    }
    const char* ordered[] = {
        "a>b",
        "a>b>c",
        "a>(b+c)",
        "(a+b)>c",
        "(a+b)>(c+d)",
        "(a*b)>(c+d)",
        "a>(b*c)>d",
        "(a>b)*(c+d)",
        "(a+b)>(c>d)",
        "(a+b+c)>(d+e)",
        "x*(c+d)>y",
        "(a+b*(c>d))>(e+f)",
    };
    for (const char* text : ordered) {
        CoExpr probe = parse_coexpr(text);
        int n = probe.vertex_count();
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            Instance ins;
            ins.e = parse_coexpr(text);
            std::vector<std::string> names;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v))
                    names.push_back(ins.e.leaf_names[v]);
            bind_terminals(ins.e, names);
            ins.t = bound_terminals(ins.e);
            out.push_back(std::move(ins));
        }
    }
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good())
        throw input_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DiGraph example1_graph() {
    return hamming_instance(BoardSpec{4, {"1000", "0101", "1010", "1110"}, 3});
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main() {
    std::vector<Instance> corpus = main_corpus();

    guarded(1, "computed cover values match the exhaustive search", [&](std::string& why) {
        int n_checked = 0;
        for (const Instance& ins : corpus) {
            DpValue v = cover_values(ins.e);
            OracleCover o = brute_force_cover(to_digraph(ins.e), ins.t);
            if (v.p != o.p || v.s != o.s) {
                why = to_string(ins.e) + ": got (" + std::to_string(v.p) + ","
                      + std::to_string(v.s) + ") want (" + std::to_string(o.p) + ","
                      + std::to_string(o.s) + ")";
                return false;
            }
            ++n_checked;
        }
        if (n_checked < 500) {
            why = "only " + std::to_string(n_checked) + " instances";
            return false;
        }
        return true;
    });

    guarded(2, "constructed covers are valid and hit the optimum", [&](std::string& why) {
        for (const Instance& ins : corpus) {
            DpValue v = cover_values(ins.e);
            BuildResult r = build_cover(ins.e);
            CoverCheck chk = validate_cover(to_digraph(ins.e), ins.t, r.cover);
            if (!chk.ok) {
                why = to_string(ins.e) + ": " + chk.detail;
                return false;
            }
            if (chk.stats.size != v.p || chk.stats.steiner != v.s) {
                why = to_string(ins.e) + ": stats (" + std::to_string(chk.stats.size) + ","
                      + std::to_string(chk.stats.steiner) + ") want (" + std::to_string(v.p)
                      + "," + std::to_string(v.s) + ")";
                return false;
            }
        }
        return true;
    });

    guarded(3, "constructed covers are clean at the root split", [&](std::string& why) {
        for (const Instance& ins : corpus) {
            auto view = root_split(ins.e);
            if (!view)
                continue;
            BuildResult r = build_cover(ins.e);
            auto vs = check_normal_form(ins.e, *view, r.cover);
            if (!vs.empty()) {
                why = to_string(ins.e) + ": structure " + std::to_string(vs[0].structure)
                      + " (" + vs[0].detail + ")";
                return false;
            }
            const CoNode& node = ins.e.nodes[view->node];
            if (node.kind == OpKind::Series) {
                int a = view->swapped ? node.right : node.left;
                int b = view->swapped ? node.left : node.right;
                std::string reason;
                if (ins.e.nodes[a].tc < ins.e.nodes[b].tc
                    && !check_series_consequence(ins.e, *view, r.cover, &reason)) {
                    why = to_string(ins.e) + ": " + reason;
                    return false;
                }
            }
        }
        return true;
    });

    guarded(4, "no enumerated cover beats paths plus connectors", [&](std::string& why) {
        std::vector<Instance> small;
        for (int i = 0; i < 25; ++i) {
            int n = 2 + i % 5;
            int t = i % 3 == 0 ? n : static_cast<int>((i * 7) % (n + 1));
            auto [e, ts] = random_cograph(t, n, 0.3 + 0.2 * (i % 3), 7000 + i);
            small.push_back({std::move(e), std::move(ts)});
        }
        for (int i = 0; i < 3; ++i) {
            int n = 7 + i % 2;
            auto [e, ts] = random_cograph(n - 2 + i % 2, n, 0.6, 7700 + i);
            small.push_back({std::move(e), std::move(ts)});
        }
        long long seen = 0;
        for (const Instance& ins : small) {
            DpValue v = cover_values(ins.e);
            DiGraph g = to_digraph(ins.e);
            bool ok = true;
            std::string bad;
            enumerate_covers(g, ins.t, 8, [&](const SteinerCover& c, long long steiner) {
                ++seen;
                long long size = static_cast<long long>(c.paths.size());
                if (v.p + v.s > size + steiner && ok) {
                    ok = false;
                    bad = to_string(ins.e) + ": cover with size " + std::to_string(size)
                          + " steiner " + std::to_string(steiner) + " beats ("
                          + std::to_string(v.p) + "," + std::to_string(v.s) + ")";
                }
            });
            if (!ok) {
                why = bad;
                return false;
            }
        }
        if (seen == 0) {
            why = "no covers enumerated";
            return false;
        }
        return true;
    });

    guarded(5, "bipartite path existence flips at a side gap of one", [&](std::string& why) {
        for (int n = 1; n <= 6; ++n)
            for (int m = 1; m <= 6; ++m) {
                CoExpr e = complete_bipartite(n, m);
                bool want = std::abs(n - m) <= 1;
                if (hamiltonian_path_exists(e) != want) {
                    why = "K_{" + std::to_string(n) + "," + std::to_string(m) + "} answered "
                          + (want ? "no" : "yes");
                    return false;
                }
                if (n + m <= 8) {
                    IpModel mod = build_hp_model(to_digraph(e));
                    bool feasible = solve_small(mod, 40).has_value();
                    if (feasible != want) {
                        why = "model for K_{" + std::to_string(n) + "," + std::to_string(m)
                              + "} answered " + (feasible ? "yes" : "no");
                        return false;
                    }
                }
            }
        return true;
    });

    guarded(6, "tournament optima agree between search and model", [&](std::string& why) {
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            int n = 2 + static_cast<int>(seed % 7);
            DiGraph g = random_tournament(n, seed, true);
            auto o = brute_force_hamiltonian(g);
            if (!o) {
                why = "search found no path at seed " + std::to_string(seed);
                return false;
            }
            auto s = solve_small(build_hp_model(g), 40);
            if (!s) {
                why = "model infeasible at seed " + std::to_string(seed);
                return false;
            }
            if (s->objective != o->cost) {
                why = "seed " + std::to_string(seed) + ": model "
                      + std::to_string(s->objective) + " vs search " + std::to_string(o->cost);
                return false;
            }
        }
        return true;
    });

    guarded(7, "the changeover example costs 6 pinned, 9 along the naive order",
            [&](std::string& why) {
                DiGraph g = example1_graph();
                int b0 = g.vertex_id("b0");
                IpModel m = build_hp_model(g, b0);
                auto s = solve_small(m, 40);
                if (!s || s->objective != 6.0) {
                    why = "model objective "
                          + (s ? std::to_string(s->objective) : std::string("infeasible"));
                    return false;
                }
                auto o = brute_force_hamiltonian(g, 10, b0);
                if (!o || o->cost != 6.0) {
                    why = "search cost "
                          + (o ? std::to_string(o->cost) : std::string("none"));
                    return false;
                }
                double naive = 0.0;
                for (int v = 1; v <= 4; ++v)
                    naive += g.weight(v - 1, v);
                if (naive != 9.0) {
                    why = "naive order costs " + std::to_string(naive);
                    return false;
                }
                return true;
            });

    guarded(8, "cover-model objectives encode the optimum as 2Mp + terminals + connectors - p",
            [&](std::string& why) {
                int done = 0;
                for (std::uint64_t seed = 1; done < 100 && seed <= 4000; ++seed) {
                    int n = 2 + static_cast<int>(seed % 5);
                    int t = 1 + static_cast<int>(seed % n);
                    auto [e, ts] = random_cograph(t, n, 0.55, 40000 + seed);
                    DiGraph g = to_digraph(e);
                    if (g.edge_count() + 2 * ts.size() > 40)
                        continue;
                    DpValue v = cover_values(e);
                    IpModel m = build_spc_model(g, ts);
                    auto s = solve_small(m, 40);
                    if (!s) {
                        why = to_string(e) + ": model infeasible";
                        return false;
                    }
                    double want = 2.0 * spc_big_m(g) * static_cast<double>(v.p)
                                  + static_cast<double>(ts.size() + v.s - v.p);
                    if (s->objective != want) {
                        why = to_string(e) + ": objective " + std::to_string(s->objective)
                              + " want " + std::to_string(want);
                        return false;
                    }
                    SteinerCover c = decode_spc(m, *s, g);
                    CoverCheck chk = validate_cover(g, ts, c);
                    if (!chk.ok) {
                        why = to_string(e) + ": decoded cover " + chk.detail;
                        return false;
                    }
                    ++done;
                }
                if (done < 100) {
                    why = "only " + std::to_string(done) + " instances within caps";
                    return false;
                }
                return true;
            });

    guarded(9, "single-path feasibility on lopsided bipartite graphs", [&](std::string& why) {
        std::mt19937_64 rng(5);
        for (int n = 1; n <= 3; ++n) {
            CoExpr e = complete_bipartite(n, 3 * n);
            DiGraph g = to_digraph(e);
            int total = 4 * n;
            std::vector<std::uint32_t> masks;
            if (n <= 2) {
                for (std::uint32_t m = 0; m < (1u << total); ++m)
                    masks.push_back(m);
            } else {
                std::uint32_t aside = (1u << n) - 1;
                for (std::uint32_t bm = 0; bm < (1u << (3 * n)); bm += 7)
                    masks.push_back(aside | (bm << n));
                for (int i = 0; i < 200; ++i)
                    masks.push_back(static_cast<std::uint32_t>(rng()) & ((1u << total) - 1));
            }
            for (std::uint32_t mask : masks) {
                std::vector<std::string> names;
                int on_b = 0;
                for (int v = 0; v < total; ++v)
                    if (mask & (1u << v)) {
                        names.push_back(e.leaf_names[v]);
                        on_b += v >= n;
                    }
                bind_terminals(e, names);
                bool one_path = steiner_path_exists(e);
                if (on_b <= n && !one_path) {
                    why = "n=" + std::to_string(n) + " mask " + std::to_string(mask)
                          + ": few far-side terminals must fit one path";
                    return false;
                }
                auto sp = brute_force_steiner_path(g, bound_terminals(e));
                if (one_path == !sp.has_value()) {
                    why = "n=" + std::to_string(n) + " mask " + std::to_string(mask)
                          + ": value says " + (one_path ? "path" : "no path")
                          + ", search says the opposite";
                    return false;
                }
            }
        }
        return true;
    });

    guarded(10, "values and build scale linearly in the leaf count", [&](std::string& why) {
        std::vector<double> times;
        for (int n : {10000, 100000, 1000000}) {
            auto [e, ts] = random_cograph(n / 2, n, 0.5, 99, CographOpts{0.0, true});
            (void)ts;
            auto t0 = std::chrono::steady_clock::now();
            DpValue v = cover_values(e);
            BuildResult r = build_cover(e);
            double ms = ms_since(t0);
            if (r.p != v.p || r.s != v.s) {
                why = "optimum mismatch at n=" + std::to_string(n);
                return false;
            }
            times.push_back(ms);
        }
        for (size_t i = 1; i < times.size(); ++i) {
            double base = std::max(times[i - 1], 2.0);  // clock floor for tiny runs
            if (times[i] > 20.0 * base) {
                why = "step " + std::to_string(i) + ": " + std::to_string(times[i - 1])
                      + "ms -> " + std::to_string(times[i]) + "ms exceeds 2x linear";
                return false;
            }
        }
        return true;
    });

    guarded(11, "emitted models match their golden bytes", [&](std::string& why) {
        DiGraph single;
        single.add_vertex("a");
        if (emit_lp(build_hp_model(single)) != slurp(std::string(GOLDEN_DIR)
                                                     + "/hp_single_vertex.lp")) {
            why = "single-vertex model drifted";
            return false;
        }
        DiGraph cyc;
        cyc.add_vertex("a");
        cyc.add_vertex("b");
        cyc.add_edge(0, 1, 2.0);
        cyc.add_edge(1, 0, 3.0);
        if (emit_lp(build_hp_model(cyc)) != slurp(std::string(GOLDEN_DIR)
                                                  + "/hp_two_cycle.lp")) {
            why = "two-cycle model drifted";
            return false;
        }
        DiGraph ex = example1_graph();
        if (emit_lp(build_hp_model(ex, ex.vertex_id("b0")))
            != slurp(std::string(GOLDEN_DIR) + "/hp_example1.lp")) {
            why = "changeover model drifted";
            return false;
        }
        return true;
    });

    if (g_failed == 0)
        std::cout << "all criteria passed\n";
    else
        std::cout << g_failed << " criterion(s) failed\n";
    return g_failed == 0 ? 0 : 1;
}
