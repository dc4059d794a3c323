// CLI front end: decide / plan / verify / rigid / oracle / gen / bench.
#include "slidetok/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "slidetok/decision.hpp"
#include "slidetok/error.hpp"
#include "slidetok/instances.hpp"
#include "slidetok/io.hpp"
#include "slidetok/oracle.hpp"
#include "slidetok/planner.hpp"
#include "slidetok/rigidity.hpp"

namespace slidetok {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string format = "text";
    bool quiet = false;
    std::ostream* out = nullptr;

    bool json_mode() const { return format == "json"; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw Error(ErrorCode::IoError, "cannot read " + path);
    }
    return std::move(buf).str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot open " + path);
    }
    out << content;
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot write " + path);
    }
}

std::string set_text(const std::vector<int>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i > 0) s += ", ";
        s += std::to_string(vs[i]);
    }
    s += "}";
    return s;
}

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

json certificate_json(const Decision& d) {
    return std::visit(
        overloaded{
            [](const SizeMismatch& c) {
                return json{{"kind", "size_mismatch"},
                            {"start_size", c.start_size},
                            {"target_size", c.target_size}};
            },
            [](const RigidMismatch& c) {
                return json{{"kind", "rigid_mismatch"},
                            {"start_rigid", c.start_rigid.vertices()},
                            {"target_rigid", c.target_rigid.vertices()}};
            },
            [](const ComponentCountMismatch& c) {
                return json{{"kind", "component_count_mismatch"},
                            {"component", c.component},
                            {"start_count", c.start_count},
                            {"target_count", c.target_count}};
            },
            [](const Feasible& c) {
                json comps = json::array();
                for (const ForestComponent& comp : c.forest.components) {
                    comps.push_back(comp.vertices);
                }
                return json{{"kind", "feasible"},
                            {"deleted", c.forest.deleted},
                            {"components", std::move(comps)},
                            {"tokens_per_component", c.tokens_per_component}};
            },
        },
        d.certificate);
}

std::string certificate_text(const Decision& d) {
    return std::visit(
        overloaded{
            [](const SizeMismatch& c) {
                return "size mismatch: |start| = " +
                       std::to_string(c.start_size) + ", |target| = " +
                       std::to_string(c.target_size);
            },
            [](const RigidMismatch& c) {
                return "rigid sets differ: start " +
                       set_text(c.start_rigid.vertices()) + ", target " +
                       set_text(c.target_rigid.vertices());
            },
            [](const ComponentCountMismatch& c) {
                return "component " + std::to_string(c.component) + " holds " +
                       std::to_string(c.start_count) + " start vs " +
                       std::to_string(c.target_count) + " target tokens";
            },
            [](const Feasible& c) {
                std::string s = "feasible: " +
                                std::to_string(c.forest.components.size()) +
                                " component(s), tokens per component [";
                for (std::size_t i = 0; i < c.tokens_per_component.size(); ++i) {
                    if (i > 0) s += ", ";
                    s += std::to_string(c.tokens_per_component[i]);
                }
                s += "]";
                return s;
            },
        },
        d.certificate);
}

void print_decision(const Options& opts, const Decision& d) {
    if (opts.quiet) return;
    if (opts.json_mode()) {
        json doc{{"verdict", d.yes() ? "yes" : "no"},
                 {"certificate", certificate_json(d)}};
        *opts.out << doc.dump() << "\n";
    } else {
        *opts.out << (d.yes() ? "yes" : "no") << "\n"
                  << certificate_text(d) << "\n";
    }
}

int run_decide(const Options& opts, const std::string& file) {
    Instance inst = parse_instance(read_file(file));
    Decision d = decide(inst);
    print_decision(opts, d);
    return d.yes() ? 0 : 1;
}

int run_plan(const Options& opts, const std::string& file,
             const std::string& out_path, const std::string& dot_dir) {
    Instance inst = parse_instance(read_file(file));
    Decision d = decide(inst);
    if (!d.yes()) {
        print_decision(opts, d);
        return 1;
    }

    auto t0 = std::chrono::steady_clock::now();
    PlanTrace trace = plan(inst);
    auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();

    PlanDocument doc;
    doc.plan = trace.plan;
    doc.meta = PlanMeta{"feasible", trace.stats.move_count,
                        trace.stats.move_count + 1, elapsed};
    std::string text = emit_plan(doc);
    if (!out_path.empty()) {
        write_file(out_path, text);
        if (!opts.quiet) {
            *opts.out << "wrote " << trace.plan.size() << " moves to "
                      << out_path << "\n";
        }
    } else {
        *opts.out << text;
    }

    if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        IndependentSet current = inst.start;
        char name[32];
        for (std::size_t i = 0; i <= trace.plan.size(); ++i) {
            const Move* highlight =
                i < trace.plan.size() ? &trace.plan[i] : nullptr;
            std::snprintf(name, sizeof name, "step_%06zu.dot", i);
            write_file((std::filesystem::path(dot_dir) / name).string(),
                       emit_dot(inst.tree, &current, highlight));
            if (i < trace.plan.size()) {
                current = apply_move(inst.tree, current, trace.plan[i]);
            }
        }
    }
    return 0;
}

int run_verify(const Options& opts, const std::string& inst_file,
               const std::string& plan_file) {
    Instance inst = parse_instance(read_file(inst_file));
    PlanDocument doc = parse_plan(read_file(plan_file));
    std::optional<PlanViolation> violation = verify_plan(inst, doc.plan);
    if (!violation) {
        if (!opts.quiet) {
            if (opts.json_mode()) {
                *opts.out << json{{"ok", true}}.dump() << "\n";
            } else {
                *opts.out << "ok\n";
            }
        }
        return 0;
    }
    if (!opts.quiet) {
        if (opts.json_mode()) {
            json out{{"ok", false},
                     {"violation",
                      json{{"kind", plan_violation_kind_name(violation->kind)},
                           {"move_index", violation->move_index},
                           {"detail", violation->detail}}}};
            *opts.out << out.dump() << "\n";
        } else {
            *opts.out << "violation at move " << violation->move_index << ": "
                      << plan_violation_kind_name(violation->kind) << " ("
                      << violation->detail << ")\n";
        }
    }
    return 1;
}

int run_rigid(const Options& opts, const std::string& file,
              const std::string& which) {
    Instance inst = parse_instance(read_file(file));
    const IndependentSet& set = which == "target" ? inst.target : inst.start;
    RigidReport report = compute_rigid_set(inst.tree, set);
    ForestDecomposition forest = forest_after_deletion(inst.tree, report.rigid);
    if (opts.quiet) return 0;
    if (opts.json_mode()) {
        json comps = json::array();
        for (const ForestComponent& comp : forest.components) {
            comps.push_back(comp.vertices);
        }
        json doc{{"set", which},
                 {"rigid", report.rigid.vertices()},
                 {"movable", report.movable.vertices()},
                 {"deleted", forest.deleted},
                 {"components", std::move(comps)}};
        *opts.out << doc.dump() << "\n";
    } else {
        *opts.out << "rigid: " << set_text(report.rigid.vertices()) << "\n"
                  << "movable: " << set_text(report.movable.vertices()) << "\n"
                  << "deleted: " << set_text(forest.deleted) << "\n";
        for (std::size_t i = 0; i < forest.components.size(); ++i) {
            *opts.out << "component " << i << ": "
                      << set_text(forest.components[i].vertices) << "\n";
        }
    }
    return 0;
}

int run_oracle(const Options& opts, const std::string& file, int cap,
               bool shortest) {
    Instance inst = parse_instance(read_file(file));
    bool yes = oracle_decide(inst, cap);
    std::optional<int> dist;
    if (shortest) dist = oracle_shortest(inst, cap);
    if (!opts.quiet) {
        if (opts.json_mode()) {
            json doc{{"verdict", yes ? "yes" : "no"}};
            if (shortest) {
                doc["shortest"] = dist ? json(*dist) : json(nullptr);
            }
            *opts.out << doc.dump() << "\n";
        } else {
            *opts.out << (yes ? "yes" : "no") << "\n";
            if (shortest) {
                if (dist) {
                    *opts.out << "shortest: " << *dist << "\n";
                } else {
                    *opts.out << "shortest: unreachable\n";
                }
            }
        }
    }
    return yes ? 0 : 1;
}

void emit_generated(const Options& opts, const std::string& out_path,
                    const std::string& content) {
    if (!out_path.empty()) {
        write_file(out_path, content);
    } else {
        *opts.out << content;
    }
}

// Deterministic yes-instance for benchmarking: greedy low-end tokens to
// greedy high-end tokens on a random tree; equal sizes by truncation.
Instance bench_instance(int n, std::uint64_t seed) {
    Instance inst;
    inst.tree = gen_random_tree(n, seed);
    int want = std::max(1, n / 8);

    auto greedy = [&](bool ascending) {
        std::vector<char> blocked(n, 0);
        std::vector<int> chosen;
        for (int i = 0; i < n && static_cast<int>(chosen.size()) < want; ++i) {
            int v = ascending ? i : n - 1 - i;
            if (blocked[v]) continue;
            chosen.push_back(v);
            blocked[v] = 1;
            for (int w : inst.tree.neighbors(v)) blocked[w] = 1;
        }
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    };

    std::vector<int> start = greedy(true);
    std::vector<int> target = greedy(false);
    std::size_t k = std::min(start.size(), target.size());
    start.resize(k);
    target.resize(k);
    inst.start = IndependentSet::from_sorted_unchecked(std::move(start));
    inst.target = IndependentSet::from_sorted_unchecked(std::move(target));
    if (!decide(inst).yes()) inst.target = inst.start;
    return inst;
}

int run_bench(const Options& opts, const std::string& mode,
              const std::vector<int>& sizes, std::uint64_t seed, int repeats) {
    *opts.out << "size,wall_time_us,move_count\n";
    for (int n : sizes) {
        if (n < 1) {
            throw Error(ErrorCode::TooSmall, "bench size must be positive");
        }
        std::uint64_t sub =
            seed ^ (static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ULL);
        Instance inst = bench_instance(n, sub);
        // One warm-up repeat keeps cold caches out of the reported numbers.
        for (int r = 0; r <= repeats; ++r) {
            auto t0 = std::chrono::steady_clock::now();
            std::int64_t moves = 0;
            if (mode == "plan") {
                moves = plan(inst).stats.move_count;
            } else {
                Decision d = decide(inst);
                (void)d;
            }
            auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            if (r == 0) continue;
            *opts.out << n << "," << us << "," << moves << "\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    Options opts;
    opts.out = &out;

    CLI::App app{"sliding-token reconfiguration on trees"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_flag("--quiet", opts.quiet, "suppress normal output");

    std::string file;
    std::string plan_file;
    std::string out_path;
    std::string dot_dir;
    std::string set_choice = "start";
    int cap = kOracleDefaultCap;
    bool shortest = false;

    CLI::App* c_decide =
        app.add_subcommand("decide", "decide whether the target is reachable");
    c_decide->add_option("file", file, "instance document")->required();

    CLI::App* c_plan =
        app.add_subcommand("plan", "construct a reconfiguration sequence");
    c_plan->add_option("file", file, "instance document")->required();
    c_plan->add_option("--out", out_path, "write the plan document here");
    c_plan->add_option("--dot-dir", dot_dir, "write per-step DOT frames here");

    CLI::App* c_verify =
        app.add_subcommand("verify", "replay a plan against an instance");
    c_verify->add_option("instance", file, "instance document")->required();
    c_verify->add_option("plan", plan_file, "plan document")->required();

    CLI::App* c_rigid =
        app.add_subcommand("rigid", "rigid tokens and forest decomposition");
    c_rigid->add_option("file", file, "instance document")->required();
    c_rigid->add_option("--set", set_choice, "which token set to analyze")
        ->check(CLI::IsMember({"start", "target"}))
        ->capture_default_str();

    CLI::App* c_oracle =
        app.add_subcommand("oracle", "brute-force ground truth (small trees)");
    c_oracle->add_option("file", file, "instance document")->required();
    c_oracle->add_option("--cap", cap, "vertex-count cap")
        ->capture_default_str();
    c_oracle->add_flag("--shortest", shortest, "also report the BFS distance");

    CLI::App* c_gen = app.add_subcommand("gen", "generate instance documents");
    c_gen->require_subcommand(1);
    int family_k = 1;
    int rand_n = 1;
    int rand_tokens = 1;
    std::uint64_t seed = 0;
    int exhaustive_n = 1;
    CLI::App* g_path =
        c_gen->add_subcommand("path-family", "quadratic-lower-bound path");
    g_path->add_option("--k", family_k, "token count (path has 8k vertices)")
        ->required();
    g_path->add_option("--out", out_path, "write the document here");
    CLI::App* g_random = c_gen->add_subcommand("random", "random instance");
    g_random->add_option("--n", rand_n, "vertex count")->required();
    g_random->add_option("--tokens", rand_tokens, "tokens per side")
        ->required();
    g_random->add_option("--seed", seed, "RNG seed")->required();
    g_random->add_option("--out", out_path, "write the document here");
    CLI::App* g_exhaustive =
        c_gen->add_subcommand("exhaustive", "every labeled tree, one per line");
    g_exhaustive->add_option("--n", exhaustive_n, "vertex count (at most 8)")
        ->required();
    g_exhaustive->add_option("--out", out_path, "write the documents here");

    CLI::App* c_bench =
        app.add_subcommand("bench", "wall-clock timings over random instances");
    c_bench->require_subcommand(1);
    CLI::App* b_decide = c_bench->add_subcommand("decide", "time decide");
    CLI::App* b_plan = c_bench->add_subcommand("plan", "time plan");
    std::vector<int> sizes;
    int repeats = 3;
    for (CLI::App* b : {b_decide, b_plan}) {
        b->add_option("--sizes", sizes, "comma-separated vertex counts")
            ->required()
            ->delimiter(',');
        b->add_option("--seed", seed, "RNG seed")->capture_default_str();
        b->add_option("--repeats", repeats, "timed repeats per size")
            ->capture_default_str();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_decide) return run_decide(opts, file);
        if (*c_plan) return run_plan(opts, file, out_path, dot_dir);
        if (*c_verify) return run_verify(opts, file, plan_file);
        if (*c_rigid) return run_rigid(opts, file, set_choice);
        if (*c_oracle) return run_oracle(opts, file, cap, shortest);
        if (*c_gen) {
            if (*g_path) {
                emit_generated(opts, out_path,
                               emit_instance(gen_path_family(family_k)));
            } else if (*g_random) {
                emit_generated(
                    opts, out_path,
                    emit_instance(gen_random_instance(rand_n, rand_tokens, seed)));
            } else {
                TreeEnumerator trees(exhaustive_n);
                std::string all;
                Tree t;
                while (trees.next(t)) {
                    Instance inst;
                    inst.tree = std::move(t);
                    all += emit_instance(inst);
                }
                emit_generated(opts, out_path, all);
            }
            return 0;
        }
        if (*c_bench) {
            return run_bench(opts, *b_plan ? "plan" : "decide", sizes, seed,
                             repeats);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace slidetok
