// End-to-end checks of the installed binary: exit codes, report contents,
// byte-level determinism. argv: [1] = path to the brq binary, [2] = fixture dir.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

std::string g_bin;
std::string g_fixtures;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string out_path = "cli_out.tmp";
    std::string cmd = g_bin + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream f(out_path);
    std::ostringstream os;
    os << f.rdbuf();
    r.output = os.str();
    return r;
}

std::string fixture(const std::string& name) { return g_fixtures + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("lattice-info on H") {
    RunResult r = run("lattice-info " + fixture("h_lattice.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"unimodular\": true"));
    CHECK(contains(r.output, "\"even\": true"));
}

TEST_CASE("i/o failures exit with code 2") {
    CHECK(run("lattice-info no_such_file.json").exit_code == 2);
    CHECK(run("brauer " + fixture("bad.json")).exit_code == 2);
}

TEST_CASE("validation failures exit with code 3") {
    CHECK(run("brauer " + fixture("not_rho_stable.json")).exit_code == 3);
    CHECK(run("census --k-max 4").exit_code == 3);
    CHECK(run("census --k-max 1").exit_code == 3);
    CHECK(run("").exit_code == 3);  // missing subcommand
}

TEST_CASE("brauer decisions") {
    RunResult generic = run("brauer " + fixture("delta_e.json"));
    CHECK(generic.exit_code == 0);
    CHECK(contains(generic.output, "\"vanishes\": false"));
    CHECK(contains(generic.output, "\"consistency\": true"));

    RunResult extra = run("brauer " + fixture("delta_e_e3f.json"));
    CHECK(extra.exit_code == 0);
    CHECK(contains(extra.output, "\"vanishes\": true"));

    RunResult picard_only = run("brauer --method picard " + fixture("delta_e_2e2f.json"));
    CHECK(picard_only.exit_code == 0);
    CHECK(contains(picard_only.output, "\"vanishes\": true"));
    CHECK(contains(picard_only.output, "\"clause\": \"Cor 5.7\""));

    // The form method needs delta(E) in the spec; it is there, so this works.
    RunResult form_only = run("brauer --method form " + fixture("delta_e.json"));
    CHECK(form_only.exit_code == 0);
    CHECK(contains(form_only.output, "\"clause\": \"Prop 3.5\""));
}

TEST_CASE("check-lemmas passes; corrupt hook fails with code 1") {
    RunResult good = run("--samples 200 check-lemmas");
    CHECK(good.exit_code == 0);
    CHECK(contains(good.output, "\"all_pass\": true"));
    RunResult bad = run("--samples 200 check-lemmas --corrupt-model");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "\"all_pass\": false"));
}

TEST_CASE("census output is byte-identical across runs") {
    RunResult a = run("--out census_a.tmp census --k-max 11");
    RunResult b = run("--out census_b.tmp census --k-max 11");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    std::string one = slurp("census_a.tmp");
    CHECK(!one.empty());
    CHECK(one == slurp("census_b.tmp"));
    CHECK(contains(one, "\"norm\": -22"));
}

TEST_CASE("omega verdicts") {
    RunResult in = run("omega " + fixture("omega_in.json"));
    CHECK(in.exit_code == 0);
    CHECK(contains(in.output, "\"verdict\": \"in Omega\""));

    RunResult out = run("omega " + fixture("omega_root.json"));
    CHECK(out.exit_code == 0);
    CHECK(contains(out.output, "\"verdict\": \"not in Omega\""));
    CHECK(contains(out.output, "failing_root"));

    RunResult hyper =
        run("omega --lambda-check 0,0,0,0,0,0,0,0,1,-1,0,0 " + fixture("omega_in.json"));
    CHECK(hyper.exit_code == 0);
    CHECK(contains(hyper.output, "\"on_hyperplane\": true"));
}

TEST_CASE("table format renders") {
    RunResult r = run("--format table lattice-info " + fixture("h_lattice.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "rank: 2"));
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: test_cli <brq-binary> <fixture-dir>\n");
        return 1;
    }
    g_bin = argv[1];
    g_fixtures = argv[2];
    doctest::Context ctx;
    return ctx.run();
}
