#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mldeg/cli.hpp"
#include "mldeg/coeff_table.hpp"
#include "mldeg/lascoux.hpp"

using namespace mldeg;
using json = nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out, err;
    json j() const { return json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("mldeg_cli_test_" + name);
    std::filesystem::remove(p);
    return p.string();
}

}  // namespace

TEST(CliPsi, Examples) {
    EXPECT_EQ(run({"psi", "--set", "{0,3}"}).j()["result"], "7");
    auto r = run({"psi", "--set", "{0,3}", "--path", "oracle"});
    EXPECT_EQ(r.j()["result"], "7");
    EXPECT_EQ(r.j()["paths"][0], "oracle");
    EXPECT_EQ(run({"psi", "--set", "{}"}).j()["result"], "1");
    // an unquoted {0,3} reaches the program as two words
    EXPECT_EQ(run({"psi", "--set", "0", "3"}).j()["result"], "7");
}

TEST(CliPsi, AllPathsOnWorkedExamples) {
    const std::vector<std::pair<std::string, std::string>> cases = {{"{0,2}", "3"}, {"{0,3}", "7"}, {"{1,2}", "3"}, {"{1,3}", "10"}, {"{2,3}", "10"}};
    for (const auto& [set, value] : cases)
        for (std::string path : {"pfaffian", "pascal", "recursion", "oracle"})
            EXPECT_EQ(run({"psi", "--set", set, "--path", path}).j()["result"], value) << set << " " << path;
}

TEST(CliPsi, OtherKinds) {
    EXPECT_EQ(run({"psi", "--kind", "alpha", "--set", "{1,2}"}).j()["result"], "1");
    EXPECT_EQ(run({"psi", "--kind", "dA", "--set", "{1}", "--set2", "{1}"}).j()["result"], to_string(d_A(IndexSet{1}, IndexSet{1})));
    EXPECT_EQ(run({"psi", "--kind", "dA", "--set", "{0}", "--set2", "{0}", "--complement", "2"}).j()["result"], "2");
    EXPECT_EQ(run({"psi", "--set", "{1}", "--complement", "4"}).j()["result"], to_string(psi(IndexSet{0, 2, 3})));
    EXPECT_EQ(run({"psi", "--kind", "sIJ", "--set", "{1,3}", "--set2", "{0,2}", "--path", "oracle"}).j()["result"],
              to_string(s_ij(IndexSet{1, 3}, IndexSet{0, 2})));
}

TEST(CliDelta, Examples) {
    EXPECT_EQ(run({"delta", "--type", "sym", "-m", "2", "-n", "3", "-r", "2"}).j()["result"], "6");
    EXPECT_EQ(run({"delta", "--type", "sym", "-m", "6", "-n", "3", "-r", "0"}).j()["result"], "1");
    EXPECT_EQ(run({"delta", "--type", "sym", "-m", "1", "-n", "5", "-r", "1"}).j()["result"], "0");
    auto both = run({"delta", "--type", "a", "-m", "3", "-n", "3", "-r", "2", "--path", "both"});
    EXPECT_EQ(both.code, 0);
    EXPECT_TRUE(both.j()["agree"].get<bool>());
    EXPECT_EQ(both.j()["paths"].size(), 2u);
    EXPECT_EQ(run({"delta", "--poly", "-m", "2", "--corank", "1"}).j()["result"]["coefficients"], json::array({"0", "-1", "1"}));
}

TEST(CliPhi, Examples) {
    EXPECT_EQ(run({"phi", "--type", "sym", "-n", "3", "-d", "3"}).j()["result"], "4");
    EXPECT_EQ(run({"phi", "--type", "sym", "--poly", "-d", "2"}).j()["result"]["coefficients"], json::array({"-1", "1"}));
    EXPECT_EQ(run({"phi", "--type", "sym", "--poly", "-d", "1"}).j()["result"]["coefficients"], json::array({"1"}));
    EXPECT_EQ(run({"phi", "-n", "4", "-d", "10"}).j()["result"], "1");
}

TEST(CliPhi, CsvTable) {
    auto r = run({"phi", "--table", "3", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "d,coeff_0,coeff_1,coeff_2\n1,1,0,0\n2,-1,1,0\n3,1,-2,1\n");
    auto big = run({"phi", "--table", "5", "--format", "csv"});
    EXPECT_NE(big.out.find("-1,19/6,-3,5/6"), std::string::npos);
    EXPECT_EQ(run({"phi", "-n", "3", "-d", "2", "--format", "csv"}).code, 2);
}

TEST(CliCheck, SuitesAndExitCodes) {
    auto r = run({"check", "nrs-sym", "--nmax", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.j()["passed"].get<bool>());
    EXPECT_EQ(run({"check", "duality", "--nmax", "6"}).code, 0);
    EXPECT_EQ(run({"check", "leading", "--sum-max", "8"}).code, 0);
    auto d = run({"check", "d-expansion"});
    EXPECT_EQ(d.code, 1);
    EXPECT_EQ(d.j()["result"][0]["failure_count"], 127);
    EXPECT_EQ(run({"check", "d-expansion-parity"}).code, 0);
    EXPECT_EQ(run({"check", "no-such-suite"}).code, 2);
}

TEST(CliExitCodes, Usage) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"psi", "--set", "{0,a}"}).code, 2);
    EXPECT_EQ(run({"psi", "--set", "{3,1}"}).code, 2);
    EXPECT_EQ(run({"psi", "--set", "{0}", "--path", "determinant"}).code, 2);
    EXPECT_EQ(run({"psi", "--kind", "dA", "--set", "{0}"}).code, 2);
    EXPECT_EQ(run({"delta", "--type", "x", "-m", "1", "-n", "2", "-r", "1"}).code, 2);
    EXPECT_EQ(run({"delta", "-m", "1", "-n", "2", "-r", "3"}).code, 2);
    EXPECT_EQ(run({"delta", "-m", "1", "-n", "2", "-r", "2", "--path", "nrs"}).code, 2);
    EXPECT_EQ(run({"--jobs", "0", "phi", "-n", "2", "-d", "1"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliDeterminism, JobsDoNotChangeOutput) {
    const std::vector<std::vector<std::string>> queries = {
        {"delta", "--type", "sym", "-m", "12", "-n", "6", "-r", "3", "--path", "both"},
        {"delta", "--type", "a", "-m", "7", "-n", "4", "-r", "2", "--path", "both"},
        {"delta", "--type", "d", "-m", "9", "-n", "4", "-r", "2", "--path", "both"},
        {"phi", "-n", "6", "-d", "9"},
        {"phi", "--table", "6"},
        {"check", "typeD", "--nmax-ad", "3"},
    };
    for (const auto& q : queries) {
        std::vector<std::string> four = {"--jobs", "4"};
        four.insert(four.end(), q.begin(), q.end());
        CliRun a = run(q), b = run(four);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out) << q[0];
    }
}

TEST(CliCache, RoundTripAndVerify) {
    const std::string path = temp_path("cache.tsv");
    CliRun first = run({"--cache", path, "delta", "-m", "8", "-n", "5", "-r", "2"});
    ASSERT_EQ(first.code, 0);
    CoeffTable a, b;
    a.load(path);
    ASSERT_GT(a.size(), 0u);
    // reload, save to a fresh file and reload again: identical table
    const std::string copy = temp_path("cache_copy.tsv");
    a.save(copy);  // nothing unsaved, only the header
    CoeffTable c;
    for (const auto& r : a.records()) c.put(r.family, r.key, r.value);
    c.save(copy);
    b.load(copy);
    auto ra = a.records(), rb = b.records();
    ASSERT_EQ(ra.size(), rb.size());
    for (std::size_t k = 0; k < ra.size(); ++k) {
        EXPECT_EQ(ra[k].key, rb[k].key);
        EXPECT_EQ(ra[k].value, rb[k].value);
    }
    // a second run reuses the file and appends nothing new
    auto size_before = std::filesystem::file_size(path);
    CliRun second = run({"--cache", path, "delta", "-m", "8", "-n", "5", "-r", "2"});
    EXPECT_EQ(second.out, first.out);
    EXPECT_EQ(std::filesystem::file_size(path), size_before);
    EXPECT_EQ(run({"--cache", path, "--verify-cache", "phi", "-n", "3", "-d", "2"}).code, 0);
}

TEST(CliCache, CorruptionIsCaught) {
    const std::string path = temp_path("bad.tsv");
    ASSERT_EQ(run({"--cache", path, "delta", "-m", "8", "-n", "5", "-r", "2"}).code, 0);
    CoeffTable t;
    t.load(path);
    // every value off by one: any sample sees it, and the direct path no
    // longer agrees with the closed form
    {
        std::ofstream out(path, std::ios::trunc);
        out << CoeffTable::header << "\n";
        for (const auto& r : t.records())
            out << family_name(r.family) << "\t" << r.key << "\t" << BigInt(r.value + 1) << "\n";
    }
    EXPECT_EQ(run({"--cache", path, "--verify-cache", "phi", "-n", "3", "-d", "2"}).code, 3);
    CliRun both = run({"--cache", path, "delta", "-m", "8", "-n", "5", "-r", "2", "--path", "both"});
    EXPECT_EQ(both.code, 3);
    EXPECT_NE(both.err.find("disagreement"), std::string::npos);
    std::ofstream(path, std::ios::trunc) << "# something else\n";
    EXPECT_EQ(run({"--cache", path, "phi", "-n", "3", "-d", "2"}).code, 2);
}
