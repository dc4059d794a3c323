#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "slidetok/cli.hpp"
#include "slidetok/error.hpp"
#include "slidetok/instances.hpp"
#include "slidetok/io.hpp"
#include "slidetok/tree.hpp"
#include "testutil.hpp"

using namespace slidetok;
using testutil::make_instance;
using testutil::make_path;
using testutil::thrown_code;
using testutil::tokens;

namespace {

const std::string kCanonicalInstance =
    R"({"schema_version":1,"n":3,"edges":[[0,1],[1,2]],"start":[0,2],"target":[0,2]})"
    "\n";

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(static_cast<bool>(in));
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

/// Unique scratch directory, removed on destruction.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        static int counter = 0;
        const auto stamp = std::chrono::steady_clock::now()
                               .time_since_epoch()
                               .count();
        path = std::filesystem::temp_directory_path() /
               ("slidetok_test_" + std::to_string(++counter) + "_" +
                std::to_string(stamp));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ignore;
        std::filesystem::remove_all(path, ignore);
    }

    std::string file(const std::string& name, const std::string& content) const {
        const std::string full = (path / name).string();
        std::ofstream out(full, std::ios::binary);
        out << content;
        return full;
    }
};

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return CliResult{code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parse_instance reads the canonical document") {
    const Instance inst = parse_instance(kCanonicalInstance);
    CHECK(inst.tree.vertex_count() == 3);
    CHECK(inst.tree.edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(inst.start.vertices() == std::vector<int>{0, 2});
    CHECK(inst.target.vertices() == std::vector<int>{0, 2});
}

TEST_CASE("parse_instance rejects malformed documents") {
    CHECK(thrown_code([] { parse_instance("{"); }) == ErrorCode::SyntaxError);
    CHECK(thrown_code([] { parse_instance("[1,2]"); }) ==
          ErrorCode::SchemaError);
    CHECK(thrown_code([] {
              parse_instance(R"({"schema_version":1,"n":2,"edges":[[0,1]],"start":[]})");
          }) == ErrorCode::SchemaError);  // missing target
    CHECK(thrown_code([] {
              parse_instance(
                  R"({"schema_version":1,"n":2,"edges":[[0,1]],"start":[],"target":[],"extra":0})");
          }) == ErrorCode::SchemaError);  // unknown field
    CHECK(thrown_code([] {
              parse_instance(
                  R"({"schema_version":7,"n":2,"edges":[[0,1]],"start":[],"target":[]})");
          }) == ErrorCode::SchemaError);  // unsupported version
    CHECK(thrown_code([] {
              parse_instance(
                  R"({"schema_version":1,"n":3,"edges":[[0,1],[0,1]],"start":[],"target":[]})");
          }) == ErrorCode::DuplicateEdge);
    CHECK(thrown_code([] {
              parse_instance(
                  R"({"schema_version":1,"n":2,"edges":[[0,2]],"start":[],"target":[]})");
          }) == ErrorCode::InvalidVertex);
    CHECK(thrown_code([] {
              parse_instance(
                  R"({"schema_version":1,"n":3,"edges":[[0,1],[1,2]],"start":[0,1],"target":[]})");
          }) == ErrorCode::NotIndependent);
    CHECK(thrown_code([] {
              parse_instance(
                  R"({"schema_version":1,"n":"3","edges":[],"start":[],"target":[]})");
          }) == ErrorCode::SchemaError);  // non-integer n
    CHECK(thrown_code([] {
              parse_instance(
                  R"({"schema_version":1,"n":3,"edges":[[0,1],[1]],"start":[],"target":[]})");
          }) == ErrorCode::SchemaError);  // edge arity
}

TEST_CASE("emit_instance produces the canonical byte string") {
    const Tree p3 = make_path(3);
    const Instance inst = make_instance(p3, {0, 2}, {0, 2});
    CHECK(emit_instance(inst) == kCanonicalInstance);
}

TEST_CASE("instance round-trips") {
    SUBCASE("emit after parse reproduces the canonical text") {
        CHECK(emit_instance(parse_instance(kCanonicalInstance)) ==
              kCanonicalInstance);
    }

    SUBCASE("parse after emit reproduces the instance") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const Instance a = gen_random_instance(25, 4, seed);
            const Instance b = parse_instance(emit_instance(a));
            CHECK(a.tree.edges() == b.tree.edges());
            CHECK(a.start == b.start);
            CHECK(a.target == b.target);
        }
    }

    SUBCASE("empty token sets and a single vertex") {
        const Tree k1 = Tree::build(1, {});
        const Instance inst{k1, tokens(k1, {}), tokens(k1, {})};
        const std::string text = emit_instance(inst);
        CHECK(text ==
              "{\"schema_version\":1,\"n\":1,\"edges\":[],\"start\":[],"
              "\"target\":[]}\n");
        const Instance back = parse_instance(text);
        CHECK(back.tree.vertex_count() == 1);
        CHECK(back.start.empty());
    }
}

TEST_CASE("plan documents") {
    SUBCASE("emit without meta") {
        PlanDocument doc;
        doc.plan = Plan{{2, 3}, {0, 1}};
        CHECK(emit_plan(doc) ==
              "{\"schema_version\":1,\"moves\":[[2,3],[0,1]]}\n");
    }

    SUBCASE("round-trip with meta is byte-identical") {
        PlanDocument doc;
        doc.plan = Plan{{2, 3}};
        doc.meta = PlanMeta{"feasible", 1, 2, 137};
        const std::string text = emit_plan(doc);
        const PlanDocument back = parse_plan(text);
        REQUIRE(back.meta.has_value());
        CHECK(back.plan == doc.plan);
        CHECK(back.meta->certificate_kind == "feasible");
        CHECK(back.meta->move_count == 1);
        CHECK(back.meta->sequence_length == 2);
        CHECK(back.meta->elapsed_us == 137);
        CHECK(emit_plan(back) == text);
    }

    SUBCASE("round-trip without meta is byte-identical") {
        const std::string text = "{\"schema_version\":1,\"moves\":[]}\n";
        const PlanDocument back = parse_plan(text);
        CHECK(back.plan.empty());
        CHECK_FALSE(back.meta.has_value());
        CHECK(emit_plan(back) == text);
    }

    SUBCASE("schema violations") {
        CHECK(thrown_code([] { parse_plan("nope"); }) ==
              ErrorCode::SyntaxError);
        CHECK(thrown_code([] { parse_plan(R"({"schema_version":1})"); }) ==
              ErrorCode::SchemaError);  // missing moves
        CHECK(thrown_code([] {
                  parse_plan(R"({"schema_version":1,"moves":[[0]]})");
              }) == ErrorCode::SchemaError);
        CHECK(thrown_code([] {
                  parse_plan(
                      R"({"schema_version":1,"moves":[],"meta":{"certificate_kind":"x"}})");
              }) == ErrorCode::SchemaError);  // incomplete meta
        CHECK(thrown_code([] {
                  parse_plan(R"({"schema_version":1,"moves":[],"junk":1})");
              }) == ErrorCode::SchemaError);
    }
}

TEST_CASE("emit_dot") {
    const Tree p3 = make_path(3);

    SUBCASE("bare tree") {
        CHECK(emit_dot(p3) ==
              "graph G {\n"
              "  node [shape=circle];\n"
              "  0;\n  1;\n  2;\n"
              "  0 -- 1;\n  1 -- 2;\n"
              "}\n");
    }

    SUBCASE("tokens filled and a move highlighted") {
        const IndependentSet s = tokens(p3, {0, 2});
        const Move m{0, 1};
        CHECK(emit_dot(p3, &s, &m) ==
              "graph G {\n"
              "  node [shape=circle];\n"
              "  0 [style=filled];\n  1;\n  2 [style=filled];\n"
              "  0 -- 1 [style=bold];\n  1 -- 2;\n"
              "}\n");
    }

    SUBCASE("highlight matches either edge orientation") {
        const Move m{1, 0};
        const std::string dot = emit_dot(p3, nullptr, &m);
        CHECK(dot.find("0 -- 1 [style=bold]") != std::string::npos);
    }
}

TEST_CASE("cli decide") {
    TempDir tmp;
    const std::string yes_file = tmp.file(
        "yes.json",
        emit_instance(make_instance(make_path(4), {0, 2}, {1, 3})));
    const std::string no_file = tmp.file(
        "no.json",
        R"({"schema_version":1,"n":4,"edges":[[0,1],[0,2],[0,3]],"start":[1,2],"target":[1,3]})");

    SUBCASE("yes instance") {
        const CliResult r = cli({"decide", yes_file});
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("yes") == 0);
        CHECK(r.err.empty());
    }

    SUBCASE("no instance prints its certificate") {
        const CliResult r = cli({"decide", no_file});
        CHECK(r.exit_code == 1);
        CHECK(r.out.find("no") == 0);
        CHECK(r.out.find("rigid sets differ") != std::string::npos);
    }

    SUBCASE("json output parses") {
        const CliResult r = cli({"--format", "json", "decide", yes_file});
        CHECK(r.exit_code == 0);
        const auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["verdict"] == "yes");
        CHECK(doc["certificate"]["kind"] == "feasible");
    }

    SUBCASE("quiet still sets the exit code") {
        const CliResult r = cli({"--quiet", "decide", no_file});
        CHECK(r.exit_code == 1);
        CHECK(r.out.empty());
    }
}

TEST_CASE("cli plan, verify, and dot frames") {
    TempDir tmp;
    const Instance inst = make_instance(make_path(4), {0, 2}, {1, 3});
    const std::string inst_file = tmp.file("inst.json", emit_instance(inst));

    SUBCASE("plan to stdout verifies") {
        const CliResult r = cli({"plan", inst_file});
        CHECK(r.exit_code == 0);
        const PlanDocument doc = parse_plan(r.out);
        CHECK_FALSE(verify_plan(inst, doc.plan).has_value());
        REQUIRE(doc.meta.has_value());
        CHECK(doc.meta->certificate_kind == "feasible");
        CHECK(doc.meta->move_count == static_cast<int>(doc.plan.size()));
        CHECK(doc.meta->sequence_length == doc.meta->move_count + 1);
    }

    SUBCASE("plan --out writes a file and verify accepts it") {
        const std::string plan_path = (tmp.path / "plan.json").string();
        const CliResult r = cli({"plan", inst_file, "--out", plan_path});
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("wrote") == 0);
        const CliResult v = cli({"verify", inst_file, plan_path});
        CHECK(v.exit_code == 0);
        CHECK(v.out == "ok\n");
    }

    SUBCASE("plan --dot-dir writes one frame per configuration") {
        const std::string dots = (tmp.path / "frames").string();
        const CliResult r =
            cli({"--quiet", "plan", inst_file, "--out",
                 (tmp.path / "p.json").string(), "--dot-dir", dots});
        CHECK(r.exit_code == 0);
        const PlanDocument doc =
            parse_plan(read_text((tmp.path / "p.json").string()));
        std::size_t frames = 0;
        for (const auto& entry : std::filesystem::directory_iterator(dots)) {
            (void)entry;
            ++frames;
        }
        CHECK(frames == doc.plan.size() + 1);
        CHECK(std::filesystem::exists(
            std::filesystem::path(dots) / "step_000000.dot"));
    }

    SUBCASE("plan on an infeasible instance reports the certificate") {
        const std::string no_file = tmp.file(
            "no.json",
            R"({"schema_version":1,"n":4,"edges":[[0,1],[0,2],[0,3]],"start":[1,2],"target":[1,3]})");
        const CliResult r = cli({"plan", no_file});
        CHECK(r.exit_code == 1);
        CHECK(r.out.find("no") == 0);
    }

    SUBCASE("verify flags a bad plan with its first violation") {
        const std::string bad = tmp.file(
            "bad.json", "{\"schema_version\":1,\"moves\":[[0,1],[2,3]]}\n");
        const CliResult r = cli({"verify", inst_file, bad});
        CHECK(r.exit_code == 1);
        CHECK(r.out.find("violation at move 0: IndependenceViolated") == 0);
    }
}

TEST_CASE("cli rigid") {
    TempDir tmp;
    const std::string file = tmp.file(
        "spider.json",
        emit_instance(make_instance(testutil::make_spider8(), {0, 2, 4},
                                    {0, 2, 7})));
    const CliResult r = cli({"rigid", file});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "rigid: {0, 2}\n"
          "movable: {4}\n"
          "deleted: {0, 1, 2}\n"
          "component 0: {3, 4, 5}\n"
          "component 1: {6, 7}\n");

    const CliResult rt = cli({"rigid", file, "--set", "target"});
    CHECK(rt.exit_code == 0);
    CHECK(rt.out.find("movable: {7}") != std::string::npos);

    const CliResult rj = cli({"--format", "json", "rigid", file});
    const auto doc = nlohmann::json::parse(rj.out);
    CHECK(doc["rigid"] == nlohmann::json({0, 2}));
    CHECK(doc["components"].size() == 2);
}

TEST_CASE("cli oracle") {
    TempDir tmp;
    const std::string file = tmp.file(
        "p4.json", emit_instance(make_instance(make_path(4), {0, 2}, {1, 3})));
    const CliResult r = cli({"oracle", file, "--shortest"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "yes\nshortest: 2\n");

    const std::string big = tmp.file(
        "big.json", emit_instance(make_instance(make_path(20), {0}, {19})));
    const CliResult rb = cli({"oracle", big});
    CHECK(rb.exit_code == 2);
    CHECK(rb.err.find("error:") == 0);
    const CliResult rc = cli({"oracle", big, "--cap", "20"});
    CHECK(rc.exit_code == 0);

    const std::string stuck = tmp.file(
        "stuck.json",
        R"({"schema_version":1,"n":4,"edges":[[0,1],[0,2],[0,3]],"start":[1,2],"target":[1,3]})");
    const CliResult rs = cli({"--format", "json", "oracle", stuck, "--shortest"});
    CHECK(rs.exit_code == 1);
    const auto doc = nlohmann::json::parse(rs.out);
    CHECK(doc["verdict"] == "no");
    CHECK(doc["shortest"].is_null());
}

TEST_CASE("cli gen") {
    TempDir tmp;

    SUBCASE("path-family matches the library generator") {
        const CliResult r = cli({"gen", "path-family", "--k", "2"});
        CHECK(r.exit_code == 0);
        CHECK(r.out == emit_instance(gen_path_family(2)));
    }

    SUBCASE("random is reproducible and parseable") {
        const CliResult a =
            cli({"gen", "random", "--n", "12", "--tokens", "3", "--seed", "5"});
        const CliResult b =
            cli({"gen", "random", "--n", "12", "--tokens", "3", "--seed", "5"});
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        const Instance inst = parse_instance(a.out);
        CHECK(inst.tree.vertex_count() == 12);
        CHECK(inst.start.size() == 3);
    }

    SUBCASE("exhaustive emits one document per labeled tree") {
        const CliResult r = cli({"gen", "exhaustive", "--n", "3"});
        CHECK(r.exit_code == 0);
        std::istringstream lines(r.out);
        std::string line;
        int count = 0;
        while (std::getline(lines, line)) {
            const Instance inst = parse_instance(line);
            CHECK(inst.tree.vertex_count() == 3);
            CHECK(inst.start.empty());
            ++count;
        }
        CHECK(count == 3);
    }

    SUBCASE("--out writes the document to disk") {
        const std::string path = (tmp.path / "gen.json").string();
        const CliResult r =
            cli({"gen", "path-family", "--k", "1", "--out", path});
        CHECK(r.exit_code == 0);
        CHECK(parse_instance(read_text(path)).tree.vertex_count() == 8);
    }
}

TEST_CASE("cli bench emits a CSV table") {
    const CliResult r = cli({"bench", "decide", "--sizes", "16,32",
                             "--repeats", "2", "--seed", "1"});
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "size,wall_time_us,move_count");
    int rows = 0;
    while (std::getline(lines, line)) {
        CHECK(line.find_first_not_of("0123456789,") == std::string::npos);
        ++rows;
    }
    CHECK(rows == 4);  // two sizes x two repeats

    const CliResult rp = cli({"bench", "plan", "--sizes", "16", "--repeats",
                              "1", "--seed", "1"});
    CHECK(rp.exit_code == 0);
    CHECK(rp.out.find("size,wall_time_us,move_count\n") == 0);
}

TEST_CASE("cli error handling") {
    SUBCASE("missing file") {
        const CliResult r = cli({"decide", "/nonexistent/path.json"});
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("error:") == 0);
        CHECK(r.err.find("IoError") != std::string::npos);
    }

    SUBCASE("malformed document") {
        TempDir tmp;
        const std::string bad = tmp.file("bad.json", "{not json");
        const CliResult r = cli({"decide", bad});
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("error:") == 0);
    }

    SUBCASE("usage errors") {
        CHECK(cli({}).exit_code == 2);
        CHECK(cli({"bogus"}).exit_code == 2);
        CHECK(cli({"decide"}).exit_code == 2);  // missing required positional
        CHECK(cli({"gen"}).exit_code == 2);     // missing required subcommand
    }

    SUBCASE("help exits cleanly") {
        const CliResult r = cli({"--help"});
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("decide") != std::string::npos);
    }
}

}  // TEST_SUITE
