#include "motkit/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>

using namespace motkit;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(MOTKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string write_temp(const std::string& name, const json& j) {
    std::string path = "/tmp/motkit_cli_test_" + name + ".json";
    std::ofstream out(path);
    out << j.dump(2);
    return path;
}

json strip_timing(json j) {
    j.erase("timing");
    return j;
}

}  // namespace

TEST_CASE("monodromy and decompose subcommands") {
    Motive m(2, 2,
             {{PiMonomial::pi(), PiMonomial(Rat(2), 0)},
              {PiMonomial(Rat(3), -4), PiMonomial::pi(2)}});
    std::string path = write_temp("m1", json(m));

    RunResult r = run_cli("monodromy --motive " + path);
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["command"] == "monodromy");
    CHECK(rep["results"]["mu"] ==
          json(std::vector<std::vector<long>>{{1, 0}, {-4, 2}}));

    RunResult d = run_cli("decompose --motive " + path);
    REQUIRE(d.exit_code == 0);
    json drep = json::parse(d.out);
    Motive u1 = drep["results"]["u1"].get<Motive>();
    Motive u2 = drep["results"]["u2"].get<Motive>();
    CHECK(motive_mul(u1, u2) == m);
    CHECK(drep["verdicts"][0]["pass"] == true);
}

TEST_CASE("eta-class and kato-pair subcommands") {
    Motive m = tate_motive(Rat(2), 5, 2, 3);
    std::string path = write_temp("m2", json(m));

    RunResult e = run_cli("eta-class --motive " + path + " --n 5");
    REQUIRE(e.exit_code == 0);
    KummerClass k = json::parse(e.out)["results"]["class"].get<KummerClass>();
    CHECK(k == eta_class(m, 5));

    RunResult kp = run_cli("kato-pair --motive " + path + " --n 5");
    REQUIRE(kp.exit_code == 0);
    KatoPair pair = json::parse(kp.out)["results"]["pair"].get<KatoPair>();
    CHECK(pair.classical.cls[0][0] == PiMonomial(Rat(2), 0));
    CHECK(pair.N == std::vector<std::vector<long>>{{3}});
}

TEST_CASE("model-algebra subcommand emits the finite algebra") {
    Motive tate(1, 1, {{PiMonomial::pi()}});
    std::string path = write_temp("m3", json(tate));
    RunResult r = run_cli("model-algebra --motive " + path + " --n 5");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    ModelAlgebra alg = rep["results"]["algebra"].get<ModelAlgebra>();
    for (long a = 0; a < 5; ++a) CHECK(alg.b[0][a] == PiMonomial(Rat(1), a));
    CHECK(rep["verdicts"][0]["pass"] == true);
    CHECK(rep["verdicts"][1]["pass"] == true);
    // round trip through JSON is lossless
    CHECK(json(alg) == rep["results"]["algebra"]);

    RunResult limited =
        run_cli("model-algebra --motive " + path + " --n 5 --limit-points 2");
    CHECK(limited.exit_code == 1);
}

TEST_CASE("dieudonne subcommand") {
    MonodromyMatrix mu;
    mu.mu = {{13}};
    std::string path = write_temp("mu1", json(mu));
    RunResult r = run_cli("dieudonne --mu " + path + " --p 5 --m 2");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    DieudonneData dd = rep["results"]["data"].get<DieudonneData>();
    CHECK(dd.Nop == ModMatrix{{0, 0}, {13, 0}});
    for (const auto& v : rep["verdicts"]) CHECK(v["pass"] == true);

    RunResult bad = run_cli("dieudonne --mu " + path + " --p 4 --m 2");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("verify subcommand and determinism") {
    RunResult a = run_cli("verify --suite tate --seed 7");
    REQUIRE(a.exit_code == 0);
    json rep = json::parse(a.out);
    CHECK(rep["seed"] == 7);
    CHECK(rep["verdicts"][0]["pass"] == true);

    RunResult b = run_cli("verify --suite tate --seed 7");
    CHECK(strip_timing(json::parse(a.out)) == strip_timing(json::parse(b.out)));

    RunResult bad = run_cli("verify --suite nope");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("input errors exit with code 1") {
    CHECK(run_cli("monodromy --motive /tmp/motkit_does_not_exist.json").exit_code == 1);
    std::string path = "/tmp/motkit_cli_test_bad.json";
    std::ofstream(path) << "{ not json";
    CHECK(run_cli("monodromy --motive " + path).exit_code == 1);
}

TEST_CASE("emitted artifacts re-parse to equal values") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<long> e(-9, 9), c(1, 50);
    for (int t = 0; t < 20; ++t) {
        PiMonomial x(Rat(c(rng), c(rng)), e(rng));
        CHECK(json(x).get<PiMonomial>() == x);
    }
    Motive m = tate_motive(Rat(3, 7), 8, 1, 5);
    CHECK(json(m).get<Motive>() == m);
    KatoPair kp = kato_pair(m, 8);
    CHECK(json(kp).get<KatoPair>() == kp);
    KElement k(Poly{Rat(0), Rat(1), Rat(1)}, Poly{Rat(0), Rat(0), Rat(1)});
    CHECK(json(k).get<KElement>() == k);
}
