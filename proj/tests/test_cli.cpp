#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run
{
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch()
{
    static fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("fincat-cli-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path & p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run(const std::string & args)
{
    auto out = scratch() / "stdout.txt";
    auto err = scratch() / "stderr.txt";
    std::string cmd = std::string(FINCAT_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
    int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path write(const std::string & name, const std::string & text)
{
    auto p = scratch() / name;
    std::ofstream(p) << text;
    return p;
}

} // namespace

TEST_CASE("reproduce")
{
    auto r = run("reproduce remark-6.8");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "pass");
    CHECK(run("reproduce cor-7.3-uniform --format text").code == 0);
    CHECK(run("reproduce no-such-item").code == 2);
}

TEST_CASE("classify reports the A3 example")
{
    auto r = run("classify --backend grp --universe s3-subgroups");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto & c : j["reports"])
        if (c["morphism"]["dom"] == "A3" && c["morphism"]["cod"] == "S3") {
            found = true;
            CHECK(c["essential"] == true);
            CHECK(c["subobject_essential"] == false);
            CHECK(c["stable_essential"] == false);
        }
    CHECK(found);
}

TEST_CASE("spec summaries")
{
    auto r = run("spec --backend ab --universe z4-chain");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"exact\": true") != std::string::npos);
    CHECK(run("spec --backend grp --universe s3-subgroups --format text").code == 0);
}

TEST_CASE("output is byte identical across runs")
{
    auto a = run("spec --backend grp --universe s3-subgroups --seed 7");
    auto b = run("spec --backend grp --universe s3-subgroups --seed 7");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    auto file = scratch() / "report.json";
    CHECK(run("classify --backend ab --universe z4-chain --out " + file.string()).code == 0);
    auto first = slurp(file);
    CHECK(run("classify --backend ab --universe z4-chain --out " + file.string()).code == 0);
    CHECK(first == slurp(file));
    CHECK_FALSE(first.empty());
}

TEST_CASE("input errors exit with 2")
{
    auto broken = write("broken.json", R"({"kind": "group", "size": })");
    auto r = run("classify --backend grp --input " + broken.string());
    CHECK(r.code == 2);
    CHECK(r.err.find("at byte 27") != std::string::npos);

    auto unknown = write("unknown.json", R"({"kind":"group","cayley":[[0,1],[1,0]],"colour":"red"})");
    CHECK(run("classify --backend grp --input " + unknown.string()).code == 2);

    CHECK(run("classify --backend ab --universe s3-subgroups").code == 2);
    CHECK(run("classify --backend rings").code == 2);
    CHECK(run("classify --bound-size 0").code == 2);
    CHECK(run("").code == 2);
}

TEST_CASE("resource bounds exit with 3")
{
    auto big = write("big.json", R"({"kind":"pointed_set","name":"P17","size":17})");
    CHECK(run("classify --backend pset --input " + big.string()).code == 3);

    auto s5 = write("s5.json",
                    R"({"kind":"group","presentation":{"permutations":[[1,0,2,3,4],[1,2,3,4,0]],"degree":5}})");
    CHECK(run("classify --backend grp --input " + s5.string()).code == 3);
}

TEST_CASE("property failures exit with 1 and print a witness")
{
    auto r = run("laws --backend grp --universe s4-subgroups --mono-class normal");
    CHECK(r.code == 1);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("witness"));
    CHECK(j["witness"]["law_id"] == "S.composition");
    CHECK(j["witness"]["status"] == "fail");

    CHECK(run("laws --backend grp --universe s4-subgroups").code == 0);
}
