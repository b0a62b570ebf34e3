#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "severi/cache.hpp"
#include "severi/cli.hpp"

using namespace severi;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name)
{
    std::random_device rd;
    const fs::path dir = fs::temp_directory_path() / (name + "-" + std::to_string(rd()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

long stat_field(const std::string& err, const std::string& name)
{
    const auto pos = err.find(name + "=");
    REQUIRE(pos != std::string::npos);
    return std::stol(err.substr(pos + name.size() + 1));
}

} // namespace

TEST_CASE("severi command")
{
    CHECK(run({"severi", "p2", "--d", "3", "--delta", "1"}).out == "12\n");
    const auto j = nlohmann::json::parse(run({"severi", "f0", "--m", "2", "--n", "2", "--delta", "1", "--json"}).out);
    CHECK(j["value"] == "12");
    CHECK(j["surface"] == "F0");
    CHECK(run({"--json", "severi", "p2", "--d", "4", "--delta", "3"}).out.find("\"675\"") != std::string::npos);
    CHECK(run({"severi", "p2", "--d", "2", "--delta", "0", "--beta", "0,1"}).out == "2\n");
    CHECK(run({"severi", "p2", "--d", "0", "--delta", "0"}).code == kExitDomain);
    CHECK(run({"severi", "p2", "--d", "3", "--delta", "0", "--beta", "1"}).code == kExitDomain);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"severi", "p2", "--delta", "1"}).code == kExitUsage);
    CHECK(run({"nonsense"}).code == kExitUsage);
    CHECK(run({"severi", "p2", "--d", "x", "--delta", "1"}).code == kExitUsage);
    CHECK(run({"threshold", "hirzebruch", "--e", "1", "--m", "2", "--delta", "1"}).code == kExitUsage);
    CHECK(run({"threshold", "hirzebruch", "--e", "1", "--m", "2", "--p", "1", "--n", "3", "--delta", "1"}).code ==
          kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("threshold command")
{
    CHECK(run({"threshold", "p2", "--delta", "3"}).out == "{\"goettsche_d_min\":3,\"kst_d_min\":3}\n");
    const auto p2 = nlohmann::json::parse(run({"threshold", "p2", "--delta", "3", "--d", "2"}).out);
    CHECK(p2["verdict"] == "fails");
    CHECK(p2["bounds"]["goettsche_d_min"] == 3);

    const auto h = run({"threshold", "hirzebruch", "--e", "1", "--m", "2", "--p", "1", "--delta", "2"});
    const auto hj = nlohmann::json::parse(h.out);
    CHECK(hj["conclusions"] == nlohmann::json::array({"degree_formula_holds", "plus_holds"}));
    CHECK(hj["component_structure"]["e_component_codim"] == 2);
    // n = p + em
    CHECK(run({"threshold", "hirzebruch", "--e", "1", "--m", "2", "--n", "3", "--delta", "2"}).out == h.out);

    const auto x = run({"threshold", "delpezzo", "--r", "6", "--class", "-2K", "--delta", "2"});
    REQUIRE(x.code == kExitOk);
    CHECK(nlohmann::json::parse(x.out)["verdict"] == "plus_holds");
    CHECK(run({"threshold", "delpezzo", "--r", "6", "--class=-2K", "--delta", "2"}).out == x.out);
    CHECK(run({"threshold", "delpezzo", "--r", "7", "--class", "3", "--delta", "2"}).code == kExitDomain);

    const auto explained = run({"threshold", "hirzebruch", "--e", "1", "--m", "2", "--p", "1", "--delta", "1",
                                "--explain"});
    CHECK(explained.out.find("E-stratum: codim 2 > 1") != std::string::npos);
}

TEST_CASE("fit and verify")
{
    const fs::path dir = fresh_dir("severi-fit");
    const std::string file = (dir / "u.json").string();
    const auto fit = run({"fit", "--delta-max", "3", "--out", file});
    REQUIRE(fit.code == kExitOk);
    CHECK(fit.out.find("G_1 = 3w1+2w2+w4\n") != std::string::npos);

    const auto yes = run({"verify", "--surface", "p2", "--class", "5", "--delta", "3", "--series", file});
    CHECK(nlohmann::json::parse(yes.out)["match"] == true);
    const auto no = run({"verify", "--surface", "p2", "--class", "2", "--delta", "3", "--series", file});
    const auto nj = nlohmann::json::parse(no.out);
    CHECK(nj["match"] == false);
    CHECK(nj["recursion_value"] == "0");
    const auto quad = run({"verify", "--surface", "f0", "--class", "3,3", "--delta", "2", "--series", file});
    CHECK(nlohmann::json::parse(quad.out)["match"] == true);

    CHECK(run({"verify", "--surface", "p2", "--class", "5", "--delta", "4", "--series", file}).code == kExitDomain);
    CHECK(run({"verify", "--surface", "x6", "--class", "5", "--delta", "1", "--series", file}).code == kExitDomain);
    CHECK(run({"verify", "--surface", "p2", "--class", "5", "--delta", "1", "--series", "/nonexistent"}).code ==
          kExitDomain);

    CHECK(run({"fit", "--delta-max", "3", "--inputs", "p2:2", "--inputs", "p2:3", "--inputs", "p2:4",
               "--inputs", "f0:2,2"})
              .code == kExitDomain);
    const auto forced = run({"fit", "--delta-max", "3", "--inputs", "p2:2", "--inputs", "p2:3", "--inputs",
                             "p2:4", "--inputs", "f0:2,2", "--force"});
    CHECK(forced.code == kExitOk);
    CHECK(forced.out.find("warning") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("fit reports universality violations")
{
    // An F0 bidegree below its threshold breaks the consistency of the fit.
    const auto r = run({"fit", "--delta-max", "3", "--inputs", "p2:3", "--inputs", "p2:4", "--inputs", "p2:5",
                        "--inputs", "f0:2,2", "--inputs", "f0:1,3", "--force"});
    CHECK(r.code == kExitInternal);
    CHECK(r.err.find("universality-violation") != std::string::npos);
}

TEST_CASE("audit")
{
    const auto a = run({"audit", "--surface", "X6", "--class", "-2K", "--json"});
    REQUIRE(a.code == kExitOk);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j[0]["minus_one_classes"].size() == 27);
    CHECK(j[0]["class"]["dim"] == 9);
    CHECK(j[0]["K2"].get<int>() + j[0]["c2"].get<int>() == 12);
    const auto all = run({"audit"});
    CHECK(all.out.find("X6: rank 7") != std::string::npos);
    CHECK(run({"audit", "--surface", "Y2"}).code == kExitDomain);
}

TEST_CASE("identical invocations give identical bytes")
{
    const std::vector<std::string> args{"--json", "table", "p2", "--d-max", "6", "--delta-max", "6", "--jobs", "4"};
    const auto first = run(args);
    CHECK(first.code == kExitOk);
    CHECK(run(args).out == first.out);
    auto serial = args;
    serial.back() = "1";
    CHECK(run(serial).out == first.out);
}

TEST_CASE("cache round trip")
{
    const fs::path dir = fresh_dir("severi-cache");
    const std::vector<std::string> args{"severi", "p2", "--d", "6", "--delta", "4", "--stats", "--cache-dir",
                                        dir.string()};
    const auto cold = run(args);
    REQUIRE(cold.code == kExitOk);
    const auto warm = run(args);
    CHECK(warm.out == cold.out);
    CHECK(stat_field(warm.err, "expansions") < stat_field(cold.err, "expansions"));
    CHECK(stat_field(warm.err, "preloaded") > 0);
    // nothing new to append on the warm run
    std::ifstream in(dir / "severi-cache.jsonl");
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) {
        ++lines;
    }
    CHECK(lines == static_cast<std::size_t>(stat_field(warm.err, "preloaded")));
    fs::remove_all(dir);
}

TEST_CASE("corrupted cache lines are skipped")
{
    const fs::path dir = fresh_dir("severi-corrupt");
    {
        std::ofstream out(dir / "severi-cache.jsonl");
        out << "not json\n"
            << "{\"key\":\"p2|3|1||3\"}\n"
            << "{\"key\":\"p2|3|1|0|3\",\"value\":\"5\"}\n"
            << "{\"key\":\"p2|3|1||3\",\"value\":\"-4\"}\n"
            << "{\"key\":\"p2|3|1||2\",\"value\":\"4\"}\n"
            << "{\"key\":\"p2|2|0||2\",\"value\":\"1\"}\n";
    }
    const auto r = run({"severi", "p2", "--d", "3", "--delta", "1", "--stats", "--cache-dir", dir.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "12\n");
    std::size_t warnings = 0;
    for (std::size_t pos = r.err.find("warning"); pos != std::string::npos; pos = r.err.find("warning", pos + 1)) {
        ++warnings;
    }
    CHECK(warnings == 5);
    CHECK(stat_field(r.err, "preloaded") == 1);
    fs::remove_all(dir);
}

TEST_CASE("conflicting cache records abort")
{
    const fs::path dir = fresh_dir("severi-conflict");
    {
        std::ofstream out(dir / "severi-cache.jsonl");
        out << "{\"key\":\"p2|3|1||3\",\"value\":\"12\"}\n"
            << "{\"key\":\"p2|3|1||3\",\"value\":\"13\"}\n";
    }
    const auto r = run({"severi", "p2", "--d", "3", "--delta", "1", "--cache-dir", dir.string()});
    CHECK(r.code == kExitInternal);
    CHECK(r.err.find("cache conflict") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("cache keys")
{
    CHECK(valid_cache_key("p2|3|1||3"));
    CHECK(valid_cache_key("f0|2|2|1||2"));
    CHECK_FALSE(valid_cache_key("p2|3|1||2"));
    CHECK_FALSE(valid_cache_key("p2|3|1|0|3"));
    CHECK_FALSE(valid_cache_key("p2|0|0||"));
    CHECK_FALSE(valid_cache_key("x"));
}
