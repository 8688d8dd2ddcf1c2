#include "bpswf/bouwkamp.hpp"
#include "bpswf/tridiagonal.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("bpswf_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    CliResult run(const std::string &args) const {
        const auto out = dir_ / "stdout.txt";
        const auto err = dir_ / "stderr.txt";
        const std::string cmd = std::string(BPSWF_CLI) + " " + args + " > " + out.string() + " 2> " + err.string();
        const int raw = std::system(cmd.c_str());
        return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
    }

    fs::path dir_;
};

std::vector<std::vector<std::string>> parse_csv(const std::string &text, std::string *header = nullptr) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    bool seen_header = false;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (!seen_header) {
            seen_header = true;
            if (header)
                *header = line;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_F(Cli, EigenvaluesAtZeroBandwidth) {
    const auto r = run("eigenvalues --alpha 0 --c 0 --N 3");
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out, "# schema_version=1\n"
                     "alpha,c,n,k,chi\n"
                     "0,0,1,0,4\n"
                     "0,0,1,1,18\n"
                     "0,0,2,0,10\n"
                     "0,0,3,0,18\n");
}

TEST_F(Cli, EigenvaluesFrozenRegression) {
    const auto r = run("eigenvalues --alpha 0 --c 2 --N 3");
    ASSERT_EQ(r.status, 0) << r.err;
    const auto got = parse_csv(r.out);
    const auto frozen = parse_csv(slurp(fs::path(BPSWF_TEST_DATA) / "eigenvalues_alpha0_c2_N3.csv"));
    ASSERT_EQ(got.size(), frozen.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i][2], frozen[i][2]);
        EXPECT_EQ(got[i][3], frozen[i][3]);
        const double chi = std::stod(got[i][4]);
        EXPECT_NEAR(chi, std::stod(frozen[i][4]), 1e-12 * chi);
        // independent check: a Bouwkamp matrix of twice the order
        const int n = std::stoi(got[i][2]), k = std::stoi(got[i][3]);
        const auto a = bpswf::build_matrix(n, 0.0, 2.0, 2 * bpswf::truncation_index(n, 3, 0.0));
        EXPECT_NEAR(chi, bpswf::eigen_tridiagonal(a)[static_cast<std::size_t>(k)].value, 1e-10 * chi);
    }
}

TEST_F(Cli, InvalidParametersExitTwo) {
    EXPECT_EQ(run("eigenvalues --alpha -1 --c 2 --N 3").status, 2);
    EXPECT_EQ(run("eigenvalues --alpha 0 --c -2 --N 3").status, 2);
    EXPECT_EQ(run("eigenvalues --alpha 0").status, 2);
    EXPECT_EQ(run("coeffs --alpha 0 --c 1 --n 0 --k 0").status, 2);
    EXPECT_EQ(run("field --alpha 0 --c 1 --n 1 --k 0 --ell 4").status, 2);
    EXPECT_EQ(run("field --alpha 0 --c 1 --n 1 --k 0 --grid cube:4x4").status, 2);
    EXPECT_EQ(run("verify --alpha 0 --c 1 --checks nonsense").status, 2);
    EXPECT_EQ(run("no-such-command").status, 2);
    const auto r = run("eigenvalues --alpha 0 --c 1 --out /nonexistent-dir/x.csv");
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST_F(Cli, CoefficientsAtZeroBandwidthAreUnitVector) {
    const auto r = run("coeffs --alpha 0 --c 0 --n 1 --k 2");
    ASSERT_EQ(r.status, 0) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0][0], "2");
    EXPECT_EQ(rows[0][1], "1");
}

TEST_F(Cli, CoefficientsNormAndTail) {
    std::string header;
    const auto r = run("coeffs --alpha 0 --c 2 --n 2 --k 1");
    ASSERT_EQ(r.status, 0) << r.err;
    const auto rows = parse_csv(r.out, &header);
    EXPECT_EQ(header, "j,beta_j");
    double sum = 0.0;
    for (const auto &row : rows)
        sum += std::stod(row[1]) * std::stod(row[1]);
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_LE(std::abs(std::stod(rows.back()[1])), 1e-12);
    // the largest coefficient sits at j = k and is positive under the sign convention
    EXPECT_GT(std::stod(rows[0][1]), 0.0);
}

TEST_F(Cli, FieldSliceCountsAndTangency) {
    const auto out = dir_ / "field.csv";
    const auto r = run("field --alpha 0 --c 2 --n 1 --k 0 --ell 1 --grid slice-z:64x64 --out " + out.string());
    ASSERT_EQ(r.status, 0) << r.err;
    std::string header;
    const auto rows = parse_csv(slurp(out), &header);
    EXPECT_EQ(header, "x,y,z,vx,vy,vz");

    std::size_t dropped = 0;
    std::stringstream es(r.err);
    std::string line;
    while (std::getline(es, line)) {
        ASSERT_EQ(line.rfind("# dropped ", 0), 0u) << line;
        dropped += std::stoul(line.substr(10));
    }
    EXPECT_EQ(rows.size() + dropped, 64u * 64u);

    for (const auto &row : rows) {
        double xv = 0.0;
        for (int i = 0; i < 3; ++i)
            xv += std::stod(row[static_cast<std::size_t>(i)]) * std::stod(row[static_cast<std::size_t>(i + 3)]);
        EXPECT_LE(std::abs(xv), 1e-10);
    }
}

TEST_F(Cli, FieldDropsAxisPointsForVectorsOnly) {
    const auto vec = run("field --alpha 0 --c 1 --n 2 --k 0 --ell 2 --grid slice-y:5x5");
    ASSERT_EQ(vec.status, 0);
    EXPECT_NE(vec.err.find("on the polar axis"), std::string::npos);
    const auto sca = run("field --alpha 0 --c 1 --n 2 --k 0 --ell 2 --grid slice-y:5x5 --scalar");
    ASSERT_EQ(sca.status, 0);
    EXPECT_EQ(sca.err.find("on the polar axis"), std::string::npos);
    EXPECT_EQ(parse_csv(sca.out).size(), parse_csv(vec.out).size() + 5);
}

TEST_F(Cli, FieldRegenerationIsByteIdentical) {
    const std::string args = "field --alpha 1 --c 10 --n 2 --k 1 --ell 3 --grid ball3d:9x9x9 --out ";
    ASSERT_EQ(run(args + (dir_ / "a.csv").string()).status, 0);
    ASSERT_EQ(run(args + (dir_ / "b.csv").string()).status, 0);
    const auto a = slurp(dir_ / "a.csv");
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(dir_ / "b.csv"));
}

TEST_F(Cli, VerifyIdentitiesPass) {
    const auto r = run("verify --alpha 0 --c 1 --N 2 --checks identities");
    EXPECT_EQ(r.status, 0) << r.err;
    const auto report = nlohmann::json::parse(r.out);
    EXPECT_EQ(report["schema_version"], 1);
    EXPECT_TRUE(report["pass"].get<bool>());
    EXPECT_LE(report["checks"]["identities"]["residual"].get<double>(), 1e-12);
    EXPECT_EQ(report["checks"].size(), 1u);
}

TEST_F(Cli, VerifyGramDiagonal) {
    const auto r = run("verify --alpha 0 --c 2 --N 2 --checks gram-vector");
    ASSERT_EQ(r.status, 0) << r.err;
    const auto report = nlohmann::json::parse(r.out);
    const auto diag = report["checks"]["gram-vector"]["diagonal"].get<std::vector<double>>();
    const std::vector<double> expect{2, 2, 2, 6, 6, 6, 6, 6};
    ASSERT_EQ(diag.size(), expect.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        EXPECT_NEAR(diag[i], expect[i], 1e-8);
    EXPECT_EQ(report["quadrature"]["m_r"], 48);
    EXPECT_EQ(report["quadrature"]["m_phi"], 96);
}

TEST_F(Cli, VerifyTinyQuadratureFailsConvergenceGate) {
    const auto r = run("verify --alpha 0 --c 2 --N 2 --checks convergence --quad-mr 2");
    EXPECT_EQ(r.status, 1) << r.err;
    const auto report = nlohmann::json::parse(r.out);
    EXPECT_FALSE(report["checks"]["convergence"]["pass"].get<bool>());
    EXPECT_EQ(report["quadrature"]["m_r"], 2);
}
