#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <asmkit/cli.hpp>

using namespace asmkit;
using asmkit::cli::Json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "asmkit");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
    const auto r = invoke(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return Json::parse(r.out);
}

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("asmkit-test-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "-" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::remove_all(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string str() const { return path_.string(); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST(Cli, RefineAsm) {
    const auto j = invoke_json({"refine", "--class", "asm", "--n", "4"});
    EXPECT_EQ(j["schema"], "asmkit/1");
    EXPECT_EQ(j["counts"], Json({"7", "14", "14", "7"}));
}

TEST(Cli, RefineUturnAtYOne) {
    const auto j = invoke_json({"refine", "--class", "uasm", "--n", "2", "--y", "1"});
    EXPECT_EQ(j["counts"], Json({"2", "4", "4", "2"}));
    const auto poly = invoke_json({"refine", "--class", "uasm", "--n", "2"});
    for (int r = 1; r <= 4; ++r) EXPECT_EQ(poly["counts"][r - 1], cli::detail::poly_json(au_refined(2, r))) << r;
}

TEST(Cli, Enumerate) {
    const auto j = invoke_json({"enumerate", "--class", "asm", "--n", "5"});
    EXPECT_EQ(j["total"], "429");
    const auto w = invoke_json({"enumerate", "--class", "uasm", "--n", "2", "--x", "2", "--y", "3"});
    EXPECT_EQ(w["total"], "12");
    EXPECT_EQ(w["weighted_total"], "64");
}

TEST(Cli, Table) {
    const auto j = invoke_json({"table", "--class", "vsasm", "--max-n", "3"});
    std::vector<std::string> totals;
    for (const auto& row : j["rows"]) totals.push_back(row["formula"].get<std::string>());
    EXPECT_EQ(totals, (std::vector<std::string>{"1", "3", "26"}));
}

TEST(Cli, PartitionAgrees) {
    const auto j = invoke_json({"partition", "--boundary", "dwbc", "--n", "2", "--x", "2,3", "--y", "5,7", "--a", "1/3"});
    EXPECT_TRUE(j["agree"].get<bool>());
    const auto u = invoke_json({"partition", "--boundary", "uturn", "--n", "2", "--b", "2", "--x", "2,5", "--y", "7", "--a", "2/7"});
    EXPECT_TRUE(u["agree"].get<bool>());
}

TEST(Cli, VerifyPasses) {
    const auto r = invoke({"verify", "--suite", "partition", "--max-n", "2", "--seed", "42"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["seed"], "42");
    for (const auto& rep : j["reports"]) EXPECT_EQ(rep["verdict"], "pass") << rep["tag"];
}

TEST(Cli, FailingCheckIsReported) {
    CheckSpec bad{"BROKEN", 1, 2, [](CaseContext& c) -> std::optional<std::string> {
                      if (c.n == 2) return "n=2 differs";
                      return std::nullopt;
                  }};
    CountCache counts;
    const auto reports = run_checks({bad}, 0, 1, 1, 1, counts);
    ASSERT_EQ(reports.size(), 1u);
    EXPECT_FALSE(reports[0].pass);
    EXPECT_NE(reports[0].witness.find("n=2 differs"), std::string::npos);
    EXPECT_EQ(static_cast<int>(cli::Exit::verify_failed), 1);
}

TEST(Cli, InvalidConfigExitsTwo) {
    EXPECT_EQ(invoke({"enumerate", "--class", "asm", "--n", "0"}).code, 2);
    EXPECT_EQ(invoke({"enumerate", "--class", "matrix", "--n", "2"}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"partition", "--boundary", "dwbc", "--n", "2", "--a", "foo"}).code, 2);
    EXPECT_EQ(invoke({"partition", "--boundary", "uturn", "--n", "1"}).code, 2);
    EXPECT_EQ(invoke({"partition", "--boundary", "dwbc", "--n", "2", "--x", "1,2,3"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--samples", "0"}).code, 2);
    EXPECT_EQ(invoke({"refine", "--class", "asm", "--n", "3", "--format", "xml"}).code, 2);
}

TEST(Cli, ResourceCapExitsThree) {
    const auto r = invoke({"enumerate", "--class", "asm", "--n", "9"});
    EXPECT_EQ(r.code, 3);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(invoke({"refine", "--class", "uasm", "--n", "6"}).code, 3);
}

TEST(Cli, CsvAndText) {
    const auto csv = invoke({"refine", "--class", "asm", "--n", "4", "--format", "csv"});
    ASSERT_EQ(csv.code, 0);
    EXPECT_NE(csv.out.find("7\n"), std::string::npos);
    EXPECT_EQ(csv.out.find('{'), std::string::npos);
    const auto text = invoke({"verify", "--suite", "identities", "--max-n", "2", "--format", "text"});
    ASSERT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("PASS EQ1"), std::string::npos);
    EXPECT_NE(text.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, DeterministicAcrossThreads) {
    const std::vector<std::string> base = {"verify", "--suite", "all", "--max-n", "2", "--seed", "7", "--samples", "3"};
    auto with = [&](const char* t) {
        auto args = base;
        args.insert(args.end(), {"--threads", t});
        return invoke(args);
    };
    const auto a = with("1"), b = with("1"), c = with("4");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_EQ(invoke({"census", "x"}).code, 2);
}

TEST(Cli, CacheHitEqualsFresh) {
    TempDir dir;
    const std::vector<std::string> args = {"refine", "--class", "vsasm", "--n", "3"};
    const auto fresh = invoke(args);
    auto cached_args = args;
    cached_args.insert(cached_args.end(), {"--cache-dir", dir.str()});
    const auto miss = invoke(cached_args);
    ASSERT_TRUE(std::filesystem::exists(dir.path()));
    std::size_t files = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir.path())) {
        EXPECT_EQ(e.path().extension(), ".json");
        ++files;
    }
    EXPECT_GE(files, 1u);
    const auto hit = invoke(cached_args);
    EXPECT_EQ(fresh.out, miss.out);
    EXPECT_EQ(fresh.out, hit.out);
}

TEST(Cli, CacheIgnoresMismatchedKey) {
    TempDir dir;
    const std::vector<std::string> args = {"enumerate", "--class", "asm", "--n", "4", "--cache-dir", dir.str()};
    const auto first = invoke(args);
    for (const auto& e : std::filesystem::directory_iterator(dir.path())) {
        std::ofstream out(e.path());
        out << R"({"key":{"schema":"asmkit/0"},"value":{"total":"1"}})";
    }
    EXPECT_EQ(invoke(args).out, first.out);
}
