// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "xx0/cli/commands.hpp"

namespace xx0::cli {
namespace {

RunConfig make(std::string sub, std::string kind) {
    RunConfig c;
    c.subcommand = std::move(sub);
    c.kind = std::move(kind);
    c.threads = 2;
    return c;
}

std::string render(const Table& t, const std::string& format) {
    std::ostringstream os;
    t.write(os, format);
    return os.str();
}

TEST(Table, CsvAndJsonCarryTheSameValues) {
    RunConfig c = make("correlator", "ferro");
    c.M = {7};
    c.N = {2};
    c.n = {0, 1, 2};
    c.beta = {0.0, 1.0};
    const Table t = run_command(c).table;
    const ordered_json j = ordered_json::parse(render(t, "json"));
    std::istringstream csv(render(t, "csv"));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "kind,M,N,n,beta,method,value_re,value_im,status,warnings");
    for (std::size_t r = 0; r < j.size(); ++r) {
        std::getline(csv, line);
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        EXPECT_EQ(std::stod(cells[6]), j[r]["value_re"].get<double>());
        EXPECT_EQ(std::stoi(cells[3]), j[r]["n"].get<int>());
    }
}

TEST(Table, QuotesAndFormatting) {
    Table t({"a", "b"});
    t.add({Cell::text("x,y"), Cell::real(0.1)});
    EXPECT_EQ(render(t, "csv"), "a,b\n\"x,y\",0.1\n");
    EXPECT_EQ(format_double(-0.0), "0");
    EXPECT_EQ(format_double(1.0 / 3.0), "0.333333333333333");
}

TEST(Correlator, GridAndBoundaryRows) {
    RunConfig c = make("correlator", "ferro");
    c.M = {7};
    c.N = {2};
    c.n = {0, 1, 2};
    c.beta = {0.0, 1.0};
    const CommandOutput out = run_command(c);
    ASSERT_EQ(out.table.size(), 6u);
    for (const auto& row : out.table.rows()) {
        EXPECT_EQ(row[8].s, "ok");
        if (row[3].i == 0) { EXPECT_EQ(row[6].d, 1.0); }
    }
}

TEST(Correlator, BudgetRowsAreMarked) {
    RunConfig c = make("correlator", "domain_wall");
    c.M = {9};
    c.N = {3};
    c.n = {1};
    c.method = "spectral_sum";
    c.budget = 5;
    const CommandOutput out = run_command(c);
    EXPECT_EQ(out.status, 0);
    EXPECT_EQ(out.table.rows()[0][8].s, "budget_exceeded");
}

TEST(Correlator, MethodsAgree) {
    RunConfig c = make("correlator", "domain_wall");
    c.M = {6};
    c.N = {3};
    c.n = {1, 2};
    c.beta = {0.5};
    const Table det = run_command(c).table;
    c.method = "oracle";
    const Table orc = run_command(c).table;
    for (std::size_t r = 0; r < det.size(); ++r) EXPECT_NEAR(det.rows()[r][6].d, orc.rows()[r][6].d, 1e-12);
}

TEST(Count, FrozenOutputs) {
    RunConfig c = make("count", "macmahon");
    c.L = {2};
    c.N = {2};
    c.P = {2};
    EXPECT_EQ(run_command(c).table.to_json()[0]["value"], "20");
    c.kind = "zq";
    c.L = c.N = c.P = {1};
    EXPECT_EQ(run_command(c).table.to_json()[0]["value"].dump(), R"({"0":"1","1":"1"})");
}

TEST(Count, SymmetricArguments) {
    RunConfig a = make("count", "zq"), b = make("count", "zq");
    a.L = {1};
    a.N = {2};
    a.P = {3};
    b.L = {3};
    b.N = {1};
    b.P = {2};
    EXPECT_EQ(run_command(a).table.to_json()[0]["value"], run_command(b).table.to_json()[0]["value"]);
}

TEST(Count, Prop3Rows) {
    RunConfig c = make("count", "prop3");
    c.L = {1, 2};
    c.N = {3};
    c.P = {4, 5};
    const Table t = run_command(c).table;
    ASSERT_EQ(t.size(), 4u);
    for (const auto& r : t.rows()) EXPECT_TRUE(r[3].b);
    EXPECT_EQ(t.rows()[0][5].s, "10");
}

TEST(Asym, ColumnsAndMarking) {
    RunConfig c = make("asym", "ferro");
    c.M = {12};
    c.N = {2};
    c.n = {1};
    c.beta = {4.0, 8.0};
    const Table t = run_command(c).table;
    ASSERT_EQ(t.size(), 2u);
    EXPECT_NEAR(t.rows()[1][9].d - t.rows()[0][9].d, -2.0 * std::log(2.0), 1e-12);
    EXPECT_NEAR(t.rows()[0][7].d, 2.0 * log_bigint(a_cspp(2, 11)), 1e-12);
    EXPECT_EQ(t.rows()[0][11].s, "ok");
    c.budget = 3;
    EXPECT_EQ(run_command(c).table.rows()[0][11].s, "asym-only");
    EXPECT_EQ(run_command(c).table.rows()[0][5].kind, Cell::Kind::null);
}

TEST(Verify, FilterAndFault) {
    RunConfig c = make("verify", "");
    c.suites = {"prop3"};
    const CommandOutput ok = run_command(c);
    EXPECT_EQ(ok.status, 0);
    for (const auto& r : ok.table.rows()) EXPECT_EQ(r[0].s, "prop3");
    c.suites = {"binet_cauchy"};
    c.faults = {"kernel"};
    const CommandOutput bad = run_command(c);
    EXPECT_EQ(bad.status, 1);
    EXPECT_FALSE(bad.table.rows()[0][5].b);
    c.suites = {"nope"};
    EXPECT_THROW(run_command(c), DomainError);
}

TEST(RunConfig, Validation) {
    RunConfig c = make("count", "macmahon");
    c.P = {};
    EXPECT_THROW(run_command(c), DomainError);
    c = make("count", "macmahon");
    c.format = "xml";
    EXPECT_THROW(run_command(c), DomainError);
}

#ifdef XX0_CLI_PATH
struct CliRun {
    int status;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(XX0_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    CliRun r{-1, {}};
    if (!p) return r;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

TEST(Binary, ExitCodes) {
    EXPECT_EQ(run_cli("count macmahon --L 2 --N 2 --P 2 --format csv").out, "kind,L,N,P,value\nmacmahon,2,2,2,20\n");
    EXPECT_EQ(run_cli("count macmahon --L x").status, 2);
    EXPECT_EQ(run_cli("frobnicate").status, 2);
    EXPECT_EQ(run_cli("verify --suite prop3 --Lmax 3").status, 0);
    EXPECT_EQ(run_cli("verify --suite binet_cauchy --inject-fault kernel").status, 1);
}

TEST(Binary, ByteIdenticalReruns) {
    const CliRun a = run_cli("correlator ferro --M 6 --N 2 --n 0:3 --beta 0,0.5,2 --format csv");
    const CliRun b = run_cli("correlator ferro --M 6 --N 2 --n 0:3 --beta 0,0.5,2 --format csv --threads 1");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
}
#endif

} // namespace
} // namespace xx0::cli
