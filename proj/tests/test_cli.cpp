#include "treemorph/io.hpp"

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;
using namespace treemorph;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    static const fs::path dir = fs::temp_directory_path() / "treemorph_cli_test";
    fs::create_directories(dir);
    std::string cmd = "cd '" + dir.string() + "' && '" TREEMORPH_CLI "' " + args + " > stdout.txt 2> stderr.txt";
    int status = std::system(cmd.c_str());
    std::ifstream in(dir / "stdout.txt");
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

fs::path work(const std::string& name) { return fs::temp_directory_path() / "treemorph_cli_test" / name; }

}  // namespace

TEST_CASE("gen, transform, verify, render") {
    REQUIRE(run("gen --kind random_general --n 12 --seed 4 -o ps.json").code == 0);
    REQUIRE(run("gen --kind random_tree --ps ps.json --seed 1 -o t.json").code == 0);
    REQUIRE(run("transform --alg star_by_rotations --ps ps.json --tree t.json -o tr.json").code == 0);
    Json tr = read_json_file(work("tr.json").string());
    CHECK(tr["theorem"] == "star_by_rotations");
    CHECK(tr.contains("bound"));
    CHECK(run("verify --ps ps.json --trace tr.json").code == 0);

    REQUIRE(run("render --ps ps.json --trace tr.json -o frame").code == 0);
    long steps = static_cast<long>(tr["steps"].size());
    char name[32];
    std::snprintf(name, sizeof name, "frame-%03ld.svg", steps);
    CHECK(fs::exists(work("frame-000.svg")));
    CHECK(fs::exists(work(name)));

    // A corrupted step fails verification with a domain error.
    if (steps > 0) {
        tr["steps"][0]["pairs"][0][1] = Json::array({"0", "0"});
        write_text_file(work("bad.json").string(), canonical_dump(tr));
        CHECK(run("verify --ps ps.json --trace bad.json").code == 1);
    }
}

TEST_CASE("labeled pipeline on a convex set") {
    REQUIRE(run("gen --kind convex_regular --n 7 -o c.json").code == 0);
    REQUIRE(run("gen --kind random_tree --ps c.json --seed 2 --labeled -o a.json").code == 0);
    REQUIRE(run("gen --kind random_tree --ps c.json --seed 3 --labeled -o b.json").code == 0);
    REQUIRE(run("transform --alg labeled_cx_slides --ps c.json --tree a.json --target b.json -o l.json").code == 0);
    CHECK(run("verify --ps c.json --trace l.json --target b.json").code == 0);
    CHECK(run("verify --ps c.json --trace l.json --target a.json").code == 1);
    REQUIRE(run("rlg build --ps c.json --tree a.json -o r.json").code == 0);
    REQUIRE(run("rlg reconstruct --rlg r.json --n 7 -o back.json").code == 0);
}

TEST_CASE("graph commands") {
    REQUIRE(run("gen --kind convex_regular --n 6 -o h.json").code == 0);
    Run d = run("diameter --ps h.json --kind rotation");
    REQUIRE(d.code == 0);
    CHECK(d.out.rfind("n,position,kind", 0) == 0);
    CHECK(d.out.find("6,convex,rotation,0,0,0,273,6,") != std::string::npos);
    CHECK(run("enum --ps h.json").out == "273\n");
    CHECK(run("diameter --ps h.json --kind slide --cap 10").code == 1);
}

TEST_CASE("exit codes") {
    CHECK(run("").code == 2);
    CHECK(run("transform --alg nonsense --ps h.json").code == 2);
    CHECK(run("gen --kind convex_regular").code != 0);
    CHECK(run("verify --ps missing.json --trace missing.json").code == 1);
}
