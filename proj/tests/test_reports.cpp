#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hurwitz/errors.hpp"
#include "hurwitz/reports.hpp"

using namespace hurwitz;

namespace {

RunConfig psl2_config(int ell, const std::array<std::string, 4>& classes) {
    RunConfig cfg;
    cfg.group_kind = "psl2";
    cfg.group_param = ell;
    cfg.classes = classes;
    return cfg;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("hurwitz_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("run_table: PSL2(5) AABB gives the two expected rows") {
    Pipeline pipeline(psl2_config(5, {"5A", "5A", "5B", "5B"}));
    auto rows = pipeline.table();
    REQUIRE(rows.size() == 2);

    CHECK(rows[0].deg == 2);
    CHECK(rows[0].genus == 0);
    CHECK(rows[0].num == 1);
    CHECK(rows[0].ram == "2^1;-;1^2");
    REQUIRE(rows[0].primes.size() == 1);
    CHECK(rows[0].primes[0].p == 3);
    CHECK_FALSE(rows[0].primes[0].bad);

    CHECK(rows[1].deg == 5);
    CHECK(rows[1].genus == 0);
    CHECK(rows[1].ram == "2^1 3^1;-;1^2 3^1");
    REQUIRE(rows[1].primes.size() == 1);
    const auto& cell = rows[1].primes[0];
    CHECK(cell.p == 3);
    CHECK(cell.bad);
    CHECK(cell.bad_comp == "1x N=3");
    CHECK(cell.gdeg == 2);
}

TEST_CASE("run_table: dihedral n=4 with reflection classes, single row, no odd primes") {
    RunConfig cfg;
    cfg.group_kind = "dihedral";
    cfg.group_param = 4;
    cfg.classes = {"2A", "2A", "2B", "2B"};
    Pipeline pipeline(cfg);
    auto rows = pipeline.table();
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].deg == 2);
    CHECK(rows[0].primes.empty());

    // an empty Nielsen set flows through the whole pipeline
    RunConfig empty_cfg = cfg;
    empty_cfg.classes = {"2A", "2A", "2A", "2A"};
    Pipeline empty_pipeline(empty_cfg);
    CHECK(empty_pipeline.nielsen().d() == 0);
    CHECK(empty_pipeline.table().empty());
    CHECK(emit_report(empty_pipeline.table(), "csv") ==
          "group,ni,ram,deg,genus,num,p,bad_components,gdeg\n");
}

TEST_CASE("emit_report: pretty table contains the worked ramification string") {
    Pipeline pipeline(psl2_config(7, {"7A", "7A", "7B", "7B"}));
    auto text = emit_report(pipeline.table(), "pretty");
    CHECK(text.find("4^2;-;1^4 2^2") != std::string::npos);
    CHECK_THROWS_AS(emit_report(pipeline.table(), "yaml"), precondition_error);
}

TEST_CASE("emit_report: JSON round-trips and CSV has a constant column count") {
    Pipeline pipeline(psl2_config(5, {"5A", "5A", "5B", "5B"}));
    auto rows = pipeline.table();

    auto text = emit_report(rows, "json");
    auto parsed = parse_report_json(text);
    REQUIRE(parsed.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed[i].ram == rows[i].ram);
        CHECK(parsed[i].deg == rows[i].deg);
        CHECK(parsed[i].genus == rows[i].genus);
        CHECK(parsed[i].num == rows[i].num);
        REQUIRE(parsed[i].primes.size() == rows[i].primes.size());
        for (size_t j = 0; j < rows[i].primes.size(); ++j) {
            CHECK(parsed[i].primes[j].p == rows[i].primes[j].p);
            CHECK(parsed[i].primes[j].gdeg == rows[i].primes[j].gdeg);
            CHECK(parsed[i].primes[j].bad_comp == rows[i].primes[j].bad_comp);
        }
    }

    auto csv = emit_report(rows, "csv");
    std::istringstream is(csv);
    std::string line;
    int columns = -1;
    while (std::getline(is, line)) {
        int commas = static_cast<int>(std::count(line.begin(), line.end(), ','));
        if (columns < 0) columns = commas;
        CHECK(commas == columns);
    }
    CHECK(columns == 8);  // 9 columns
}

TEST_CASE("determinism: identical bytes across runs and worker counts") {
    auto run = [&](int workers) {
        RunConfig cfg = psl2_config(7, {"7A", "7A", "7A", "7A"});
        cfg.workers = workers;
        Pipeline pipeline(cfg);
        return emit_report(pipeline.table(), "json");
    };
    auto once = run(1);
    CHECK(once == run(1));
    CHECK(once == run(4));
}

TEST_CASE("config JSON round-trip, unknown keys rejected") {
    RunConfig cfg = psl2_config(11, {"11A", "11A", "11B", "11B"});
    cfg.primes = {3, 5};
    cfg.format = "csv";
    cfg.workers = 2;
    auto text = config_to_json(cfg);
    auto back = config_from_json(text);
    CHECK(back.group_kind == cfg.group_kind);
    CHECK(back.group_param == cfg.group_param);
    CHECK(back.classes == cfg.classes);
    CHECK(back.primes == cfg.primes);
    CHECK(back.format == cfg.format);
    CHECK(back.workers == cfg.workers);
    CHECK_THROWS_AS(config_from_json("{\"group_kind\":\"psl2\",\"surprise\":1}"),
                    precondition_error);
}

TEST_CASE("nielsen cache: store, load, and corruption handling") {
    TempDir tmp;
    RunConfig cfg = psl2_config(5, {"5A", "5A", "5B", "5B"});
    GroupContext ctx = build_group_from_config(cfg);
    auto cv = resolve_class_vector(ctx, cfg.classes);
    auto ns = enumerate_nielsen(ctx, cv);

    std::string key = nielsen_cache_key(ctx.group, cfg.classes);
    cache_nielsen(tmp.path.string(), key, ns);
    auto loaded = load_nielsen(tmp.path.string(), key, ctx, cv);
    REQUIRE(loaded.has_value());
    CHECK(loaded->tuples == ns.tuples);

    // corrupt the payload: the load must become a miss, not bad data
    auto file = tmp.path / ("nielsen_" + key + ".json");
    {
        std::ofstream out(file);
        out << "{\"schema_version\":\"hurwitz-report/1\",\"key\":\"" << key
            << "\",\"d\":1,\"checksum\":\"0000000000000000\",\"tuples\":[]}";
    }
    CHECK_FALSE(load_nielsen(tmp.path.string(), key, ctx, cv).has_value());

    {
        std::ofstream out(file);
        out << "this is not json";
    }
    CHECK_FALSE(load_nielsen(tmp.path.string(), key, ctx, cv).has_value());

    // pipeline round trip through the cache directory
    RunConfig cached_cfg = cfg;
    cached_cfg.cache_dir = tmp.path.string();
    Pipeline first(cached_cfg);
    auto rows_first = first.table();
    Pipeline second(cached_cfg);   // hits the cache written by `first`
    auto rows_second = second.table();
    CHECK(emit_report(rows_first, "json") == emit_report(rows_second, "json"));
}

TEST_CASE("per-prime gdeg in the table equals good_counts of the reduction module") {
    Pipeline pipeline(psl2_config(11, {"11A", "11A", "11B", "11B"}));
    auto rows = pipeline.table();
    for (const auto& row : rows) {
        for (const auto& cell : row.primes) {
            auto [good_ord, good_ss] = good_counts(row.deg, cell.p, cell.dbad);
            CHECK(cell.gdeg == good_ord);
            CHECK(cell.good_supersingular == good_ss);
        }
    }
}

TEST_CASE("a user-supplied prime failing the conditions is annotated, not computed") {
    RunConfig cfg = psl2_config(5, {"5A", "5A", "5B", "5B"});
    cfg.primes = {5};   // p = 5 divides the class orders: condition (b) fails
    Pipeline pipeline(cfg);
    auto rows = pipeline.table();
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) {
        REQUIRE(row.primes.size() == 1);
        CHECK_FALSE(row.primes[0].conditions_ok);
        CHECK(row.primes[0].note == "conditions not satisfied");
    }
    auto pretty = emit_report(rows, "pretty");
    CHECK(pretty.find("conditions not satisfied") != std::string::npos);
}

TEST_CASE("perm-file groups run through the pipeline") {
    TempDir tmp;
    auto file = tmp.path / "d10.gens";
    {
        std::ofstream out(file);
        out << "# dihedral group of order 10 on 5 points\n";
        out << "[1 2 3 4 0]\n";
        out << "[0 4 3 2 1]\n";
    }
    RunConfig cfg;
    cfg.group_kind = "perm";
    cfg.perm_file = file.string();
    cfg.classes = {"2A", "2A", "2A", "2A"};
    GroupContext ctx = build_group_from_config(cfg);
    CHECK(ctx.group.order() == 10);
    CHECK(ctx.group.label == "perm:d10");

    Pipeline pipeline(cfg);
    auto rows = pipeline.table();
    size_t total = 0;
    for (const auto& row : rows) total += static_cast<size_t>(row.deg * row.num);
    CHECK(total == pipeline.nielsen().d());
}

TEST_CASE("bad component strings parse back to level counts") {
    auto parsed = parse_bad_comp("1x N=15, 1x N=3");
    CHECK(parsed == std::map<int, int>{{15, 1}, {3, 1}});
    CHECK(parse_bad_comp("4x N=5") == std::map<int, int>{{5, 4}});
    CHECK_THROWS_AS(parse_bad_comp("nonsense"), precondition_error);
}
