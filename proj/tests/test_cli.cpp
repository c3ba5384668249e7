#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
    std::string cmd = std::string(BBNET_CLI_PATH) + " " + args;
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("bbnet_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("cli generate + estimate + analyze round trip") {
    TempDir tmp;
    std::string edges = tmp.file("g.tsv");
    std::string gen = "generate --model birth-burst --n 1500 --gamma 2 --alpha 0.8 --c 4 "
                      "--beta 0.3 --seed 7 --out " + edges;
    REQUIRE(run(gen) == 0);
    CHECK(fs::exists(edges));
    CHECK(fs::exists(edges + ".meta"));

    // identical argv twice gives identical bytes
    std::string edges2 = tmp.file("g2.tsv");
    REQUIRE(run("generate --model birth-burst --n 1500 --gamma 2 --alpha 0.8 --c 4 "
                "--beta 0.3 --seed 7 --out " + edges2) == 0);
    std::string a = slurp(edges), b = slurp(edges2);
    // provenance headers echo the --out path; compare the data payload
    auto strip = [](const std::string& s) {
        std::istringstream in(s);
        std::string line, out;
        while (std::getline(in, line))
            if (!line.empty() && line[0] != '#') out += line + "\n";
        return out;
    };
    CHECK(strip(a) == strip(b));
    CHECK_FALSE(strip(a).empty());

    std::string growth_out = tmp.file("growth.txt");
    REQUIRE(run("estimate growth --edges " + edges + " --out " + growth_out) == 0);
    std::string growth = slurp(growth_out);
    auto pos = growth.find("beta_hat=");
    REQUIRE(pos != std::string::npos);
    double beta_hat = std::stod(growth.substr(pos + 9));
    CHECK(beta_hat > 0.2);
    CHECK(beta_hat < 0.4);

    std::string dist_out = tmp.file("dist.csv");
    REQUIRE(run("analyze degree-dist --edges " + edges + " --out " + dist_out) == 0);
    std::string dist = slurp(dist_out);
    CHECK(dist.find("bin_lower,bin_upper,count,density") != std::string::npos);

    std::string hubs_out = tmp.file("hubs.csv");
    REQUIRE(run("analyze hubs --edges " + edges + " --top 4 --out " + hubs_out) == 0);
    CHECK(slurp(hubs_out).find("node,time,degree,fraction") != std::string::npos);

    std::string bursts_out = tmp.file("bursts.csv");
    REQUIRE(run("analyze bursts --edges " + edges + " --top 4 --out " + bursts_out) == 0);

    std::string alpha_out = tmp.file("alpha.txt");
    REQUIRE(run("estimate alpha --edges " + edges + " --snapshot-a 1000 --snapshot-b 1497 "
                "--kmin 5 --meta " + edges + ".meta --out " + alpha_out) == 0);
    CHECK(slurp(alpha_out).find("alpha_hat=") != std::string::npos);

    std::string fit_out = tmp.file("fitness.csv");
    REQUIRE(run("estimate fitness --edges " + edges + " --snapshot-a 1000 --snapshot-b 1497 "
                "--kmin 5 --out " + fit_out) == 0);
    CHECK(slurp(fit_out).find("node,eta") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    CHECK(run("generate --bogus-flag 2>/dev/null") == 1);
    CHECK(run("2>/dev/null") == 1);  // missing subcommand
    CHECK(run("analyze degree-dist --edges /nonexistent/file.tsv 2>/dev/null") == 2);
}

TEST_CASE("cli compare emits the three-model table") {
    TempDir tmp;
    std::string out = tmp.file("compare.csv");
    REQUIRE(run("compare --n 1200 --gamma 2 --alpha 0.8 --c 4 --beta 0.3 --seed 3 --out " + out) == 0);
    std::string table = slurp(out);
    CHECK(table.find("model,slope,curvature,top_phi,plateau_passed,phase") != std::string::npos);
    CHECK(table.find("ba,") != std::string::npos);
    CHECK(table.find("fitness,") != std::string::npos);
    CHECK(table.find("birth-burst,") != std::string::npos);
}
