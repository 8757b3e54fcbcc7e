#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

namespace fs = std::filesystem;

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() /
                     ("recurlab_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    const fs::path out = work_dir() / "out.txt";
    const fs::path err = work_dir() / "err.txt";
    const std::string cmd = std::string(RECURLAB_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int rc = std::system(cmd.c_str());
    RunResult res;
    if (WIFEXITED(rc)) res.code = WEXITSTATUS(rc);
    res.out = slurp(out);
    res.err = slurp(err);
    return res;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string l;
    while (std::getline(is, l)) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("cli: classify") {
    const auto hyp = run_cli("mobius classify --map coeffs:1,0,0.5,0,0.5,0,1,0");
    REQUIRE(hyp.code == 0);
    const json j = json::parse(hyp.out);
    REQUIRE(j["tag"] == "hyperbolic-automorphism");
    REQUIRE(std::abs(j["denjoy_wolff"][0].get<double>() - 1.0) <= 1e-9);
    REQUIRE(std::abs(j["denjoy_wolff"][1].get<double>()) <= 1e-9);

    const auto rot = run_cli("mobius classify --map rotation:1/4");
    REQUIRE(rot.code == 0);
    const json r = json::parse(rot.out);
    REQUIRE(r["tag"] == "elliptic-automorphism");
    REQUIRE(r["denjoy_wolff"].is_null());
    bool has_inf = false;
    for (const auto& fp : r["fixed_points"])
        if (fp.is_string() && fp == "infinity") has_inf = true;
    REQUIRE(has_inf);

    const auto fam = run_cli("mobius classify --map family:3");
    REQUIRE(fam.code == 0);
    REQUIRE(json::parse(fam.out)["tag"] == "parabolic-non-automorphism");

    REQUIRE(run_cli("mobius classify --map nonsense").code != 0);
    REQUIRE(run_cli("").code != 0);  // a subcommand is required
}

TEST_CASE("cli: derivative scan") {
    const auto res = run_cli("hardy parabolic-scan --kmax 2 --horizon 5");
    REQUIRE(res.code == 0);
    const auto ls = lines(res.out);
    REQUIRE(ls.size() == 11);  // header + 2 orders x 5 indices
    REQUIRE(ls[0] == "n,m,value_re,value_im,bound");
    REQUIRE(ls[1].rfind("1,1,", 0) == 0);
    double v = 0.0, b = 0.0;
    std::sscanf(ls[1].c_str(), "1,1,%lf,%*f,%lf", &v, &b);
    REQUIRE(std::abs(v - 4.0 / 9.0) <= 1e-15);
    REQUIRE(b >= v);
}

TEST_CASE("cli: residual scan from json inputs") {
    const fs::path op = work_dir() / "op.json";
    const fs::path vec = work_dir() / "vec.json";
    spit(op, R"({"rows": [[[0, 1]]]})");
    spit(vec, R"({"rows": [[1, 0]]})");
    const auto res = run_cli("detect scan --op " + op.string() + " --vec " + vec.string() +
                             " --horizon 10 --tol 1e-6");
    REQUIRE(res.code == 0);
    const auto ls = lines(res.out);
    REQUIRE(ls[0] == "n,residual");
    REQUIRE(ls.size() == 3);  // improving record: n = 1, then the exact return at 4
    REQUIRE(ls[2].rfind("4,", 0) == 0);
    REQUIRE(res.err.find("found n=4") != std::string::npos);

    const auto missing = run_cli("detect scan --op /no/such/file.json --vec " + vec.string());
    REQUIRE(missing.code == 2);
    REQUIRE(missing.err.find("cannot open") != std::string::npos);

    spit(op, R"({"rows": "oops"})");
    REQUIRE(run_cli("detect scan --op " + op.string() + " --vec " + vec.string()).code == 2);
}

TEST_CASE("cli: triangular window decision") {
    const fs::path mat = work_dir() / "sparse.json";
    spit(mat, R"({"nrows": 2, "entries": [
        {"i": 0, "j": 0, "re": 1, "im": 0},
        {"i": 1, "j": 0, "re": 1, "im": 0},
        {"i": 1, "j": 1, "re": 0, "im": 1}]})");
    const auto res = run_cli("omega decide --matrix " + mat.string() +
                             " --window 2 --eps 0.05 --horizon 1000000");
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    REQUIRE(j["verdict"] == "Recurrent");
    REQUIRE(j["n"] == 4);
    REQUIRE(j["max_raw_residual"] == 0.0);
}

TEST_CASE("cli: cantor staircase report") {
    const auto res = run_cli("circle cantor --c 1/2 --level 2 --delta 1/8 --horizon 3");
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    REQUIRE(j["piece_length"] == "13/72");
    REQUIRE(j["level_identity"]["lhs"] == j["level_identity"]["rhs"]);
    REQUIRE(j["remaining"].size() == 4);
    REQUIRE(j["nonreturn"]["escaping"].size() == 3);
    for (const auto& row : j["nonreturn"]["escaping"]) REQUIRE(row["mass"] == "13/24");
    REQUIRE(j["nonreturn"]["min_mass"] == "13/24");
}

TEST_CASE("cli: sparse series table") {
    const auto res = run_cli("lacunary build");
    REQUIRE(res.code == 0);
    const auto ls = lines(res.out);
    REQUIRE(ls.size() == 5);
    REQUIRE(ls[0] == "p,m,coefficient,ln_r_lo,ln_r_hi,floor_bound,min_abs,ok");
    const char* exponents[] = {"2", "64", "2048", "65536"};
    for (int p = 1; p <= 4; ++p) {
        const auto fields = lines(res.out);  // reuse split on commas below
        std::istringstream is(ls[static_cast<std::size_t>(p)]);
        std::string field;
        std::getline(is, field, ',');
        REQUIRE(field == std::to_string(p));
        std::getline(is, field, ',');
        REQUIRE(field == exponents[p - 1]);
        std::string last;
        while (std::getline(is, field, ',')) last = field;
        REQUIRE(last == "1");  // the audit flag
    }
}

TEST_CASE("cli: tuple decision and composition residuals") {
    const auto rec = run_cli("algebra decide --values 0,1 --eps 0.001");
    REQUIRE(rec.code == 0);
    REQUIRE(rec.err.find("verdict=Recurrent n=4") != std::string::npos);
    const auto ls = lines(rec.out);
    REQUIRE(ls[0] == "n,residual");
    REQUIRE(ls.back().rfind("4,", 0) == 0);

    const auto blocked = run_cli("algebra decide --values 1.5,0");
    REQUIRE(blocked.code == 0);
    REQUIRE(blocked.err.find("verdict=NotRecurrent") != std::string::npos);
    REQUIRE(lines(blocked.out).size() == 1);  // header only, no residual ladder

    const auto comp = run_cli("algebra comp --map rotation:3/7 --horizon 7");
    REQUIRE(comp.code == 0);
    const auto cls = lines(comp.out);
    REQUIRE(cls.size() == 8);
    REQUIRE(cls[0] == "n,residual,lower_bound");
    double resid = 1.0;
    std::sscanf(cls[7].c_str(), "7,%lf", &resid);
    REQUIRE(resid <= 1e-12);
}

TEST_CASE("cli: output file and config file") {
    const fs::path out = work_dir() / "cls.json";
    const auto res = run_cli("--output " + out.string() + " mobius classify --map rotation:1/4");
    REQUIRE(res.code == 0);
    REQUIRE(res.out.empty());
    REQUIRE(json::parse(slurp(out))["tag"] == "elliptic-automorphism");

    const fs::path cfg = work_dir() / "opts.ini";
    spit(cfg, "[mobius.classify]\nmap=rotation:1/4\n");
    const auto viacfg = run_cli("--config " + cfg.string() + " mobius classify");
    REQUIRE(viacfg.code == 0);
    REQUIRE(json::parse(viacfg.out)["tag"] == "elliptic-automorphism");
}
