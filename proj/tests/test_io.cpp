#include "stt/equidist.hpp"
#include "stt/errors.hpp"
#include "stt/haar_moments.hpp"
#include "stt/io_json.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace stt;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("fmt_double is stable and precise") {
    CHECK(fmt_double(0.5) == "0.5");
    CHECK(fmt_double(1.0 / 3.0) == fmt_double(1.0 / 3.0));
    CHECK(std::stod(fmt_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("spec files round trip") {
    auto spec = STGroupSpec::pauli_twist();
    auto path = temp_path("stt_spec_roundtrip.json");
    save_st_spec(spec, path);
    auto loaded = load_st_spec(path);
    CHECK(loaded.m == spec.m);
    CHECK(loaded.a == spec.a);
    CHECK(loaded.gamma.mul == spec.gamma.mul);
    CHECK(loaded.action == spec.action);
    for (int s = 0; s < spec.gamma.order(); ++s)
        CHECK(loaded.twists[s][0] == spec.twists[s][0]);
    // identical moment tables follow
    auto t1 = group_trace_moments(spec, 4);
    auto t2 = group_trace_moments(loaded, 4);
    for (size_t i = 0; i < t1.entries.size(); ++i)
        CHECK(*t1.entries[i].exact == *t2.entries[i].exact);
    std::filesystem::remove(path);
}

TEST_CASE("cocycle files load") {
    auto path = temp_path("stt_cocycle.json");
    {
        std::ofstream out(path);
        out << R"({"group": {"order": 2, "mul": [[0,1],[1,0]]},)"
            << R"("values": [[1, 1], [1, {"root": 2, "power": 1}]]})";
    }
    auto c = load_cocycle(path);
    CHECK(verify_cocycle(c));
    CHECK(c.values[1][1] == -Cyclotomic::one());
    std::filesystem::remove(path);
}

TEST_CASE("config loading is strict") {
    auto path = temp_path("stt_config.json");
    SUBCASE("valid config") {
        std::ofstream(path) << R"({"schema_version": 1, "spec": "su2", "seed": 7,)"
                            << R"("num_samples": 1000, "n_max": 4})";
        auto c = load_run_config(path);
        CHECK(c.spec_builtin == "su2");
        REQUIRE(c.seed.has_value());
        CHECK(*c.seed == 7);
        CHECK(c.n_max == 4);
        CHECK(resolve_spec(c).m == 1);
    }
    SUBCASE("unknown keys are errors") {
        std::ofstream(path) << R"({"schema_version": 1, "sped": "su2"})";
        CHECK_THROWS(load_run_config(path));
    }
    SUBCASE("schema_version is required") {
        std::ofstream(path) << R"({"spec": "su2"})";
        CHECK_THROWS(load_run_config(path));
    }
    SUBCASE("malformed json carries a position") {
        std::ofstream(path) << "{broken";
        CHECK_THROWS_AS(load_run_config(path), ParseError);
    }
    SUBCASE("unknown builtin spec") {
        std::ofstream(path) << R"({"schema_version": 1, "spec": "nope"})";
        auto c = load_run_config(path);
        CHECK_THROWS(resolve_spec(c));
    }
    std::filesystem::remove(path);
}

TEST_CASE("moment table serialization") {
    auto spec = STGroupSpec::su2();
    auto table = group_trace_moments(spec, 4);
    table.merge_mc(mc_moments(spec, 4, 1000, 3));
    auto csv = temp_path("stt_moments.csv");
    auto js = temp_path("stt_moments.json");
    write_moment_csv(table, csv);
    write_moment_json(table, js);
    auto text = slurp(csv);
    CHECK(text.find("order,component_class,exact_num,exact_den") == 0);
    CHECK(text.find("\n4,-1,2,1,") != std::string::npos); // E[t^4] = 2
    // byte-identical on rewrite
    auto csv2 = temp_path("stt_moments2.csv");
    write_moment_csv(table, csv2);
    CHECK(slurp(csv2) == text);
    CHECK_FALSE(slurp(js).empty());
    for (auto p : {csv, js, csv2}) std::filesystem::remove(p);
}

TEST_CASE("report serialization") {
    TestReport report;
    report.moments.push_back({2, -1, 1.0, 1.01, 0.01, 1.0, true});
    report.ks = 0.01;
    report.total_samples = 100;
    report.class_sample_sizes = {100};
    auto path = temp_path("stt_report.json");
    write_report_json(report, path);
    auto text = slurp(path);
    CHECK(text.find("\"pass\": true") != std::string::npos);
    CHECK(report_to_text(report).find("verdict pass") != std::string::npos);
    std::filesystem::remove(path);
}
