#include "paireddom/cli.hpp"
#include "paireddom/generators.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace paireddom;
using nlohmann::json;

namespace {

struct Outcome
{
    int code = -1;
    std::string out;
    std::string err;

    json doc() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "paireddom");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    Outcome o;
    o.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

class Workspace
{
public:
    Workspace() : dir_(std::filesystem::temp_directory_path() / "paireddom_cli_test")
    {
        std::filesystem::remove_all(dir_);
        std::filesystem::create_directories(dir_);
    }
    ~Workspace() { std::filesystem::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) const
    {
        const auto p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    std::filesystem::path dir_;
};

} // namespace

TEST_CASE("solve on P_6 with each algorithm")
{
    Workspace ws;
    const auto p6 = ws.write("p6.edges", serialize(gen_path(6)));

    const auto brute = invoke({"solve", p6, "--algo", "brute", "--json"});
    CHECK(brute.code == 0);
    CHECK(brute.doc()["result"]["size"] == 4);
    CHECK(brute.doc()["verified"] == true);

    const auto approx = invoke({"solve", p6, "--algo", "approx", "--json"});
    CHECK(approx.code == 0);
    const auto a = approx.doc();
    CHECK(a["result"]["size"] == 6);
    CHECK(a["result"]["ratio_bound"] == 2.0);
    CHECK(a["result"]["gamma_pr_lower_bound"] == 4);
    CHECK(a["verified"] == true);

    const auto exact = invoke({"solve", p6});
    CHECK(exact.code == 0);
    CHECK(exact.out.find("gamma_pr = 4") != std::string::npos);
}

TEST_CASE("solve refuses non-AT-free input with a witness")
{
    Workspace ws;
    const auto c6 = ws.write("c6.edges", serialize(gen_cycle(6)));
    const auto r = invoke({"solve", c6, "--algo", "exact", "--json"});
    CHECK(r.code == cli::exit_precondition);
    const auto doc = r.doc();
    CHECK(doc["error"]["reason"] == "not AT-free");
    CHECK(doc["error"]["witness"]["triple"] == json::array({0, 2, 4}));
    CHECK(doc["error"]["witness"]["paths"].size() == 3);

    // Brute force still answers.
    const auto b = invoke({"solve", c6, "--algo", "brute", "--json"});
    CHECK(b.code == 0);
    CHECK(b.doc()["result"]["gamma_pr"] == 4);
    CHECK(b.doc()["result"]["at_free"] == false);
}

TEST_CASE("malformed and unsupported inputs exit with 2")
{
    Workspace ws;
    const auto bad = invoke({"solve", ws.write("bad.edges", "0 1\n1 x\n"), "--json"});
    CHECK(bad.code == 2);
    CHECK(bad.doc()["error"]["reason"] == "parse-error");

    const auto loop = invoke({"solve", ws.write("loop.edges", "0 1\n1 1\n"), "--json"});
    CHECK(loop.code == 2);
    CHECK(loop.doc()["error"]["reason"] == "self-loop");

    const auto split = invoke({"solve", ws.write("split.edges", "0 1\n2 3\n"), "--json"});
    CHECK(split.code == 2);
    CHECK(split.doc()["error"]["reason"] == "disconnected");

    CHECK(invoke({"solve", ws.path("missing.edges")}).code == 2);
    CHECK(invoke({"solve"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"solve", ws.path("x"), "--algo", "fast"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("oracle caps come from the environment")
{
    Workspace ws;
    const auto p10 = ws.write("p10.edges", serialize(gen_path(10)));
    ::setenv("PAIREDDOM_CAPS", "pd=8", 1);
    const auto capped = invoke({"solve", p10, "--algo", "brute", "--json"});
    ::setenv("PAIREDDOM_CAPS", "pd=oops", 1);
    const auto broken = invoke({"solve", p10, "--algo", "brute", "--json"});
    ::unsetenv("PAIREDDOM_CAPS");
    CHECK(capped.code == 2);
    CHECK(capped.doc()["error"]["reason"] == "cap-exceeded");
    CHECK(broken.code == 2);
    CHECK(invoke({"solve", p10, "--algo", "brute"}).code == 0);
}

TEST_CASE("check verdicts on P_4")
{
    Workspace ws;
    const auto p4 = ws.write("p4.edges", serialize(gen_path(4)));

    const auto ok = invoke({"check", p4, "--set", "1,2", "--json"});
    CHECK(ok.code == 0);
    CHECK(ok.doc()["result"]["valid"] == true);
    CHECK(ok.doc()["result"]["pairing"] == json::array({json::array({1, 2})}));

    const auto nd = invoke({"check", p4, "--set", "0,1", "--json"});
    CHECK(nd.code == 0);
    CHECK(nd.doc()["result"]["reason"] == "not-dominating");
    CHECK(nd.doc()["result"]["undominated"] == 3);

    const auto npm = invoke({"check", p4, "--set", "0, 2"});
    CHECK(npm.out.find("no-perfect-matching") != std::string::npos);

    CHECK(invoke({"check", p4, "--set", "1,9"}).code == 2);
    CHECK(invoke({"check", p4, "--set", "1,a"}).code == 2);
}

TEST_CASE("reduce writes both files and reports the bound")
{
    Workspace ws;
    const auto cat = catalog_cubic();
    const auto k4 = ws.write("k4.edges", serialize(cat[0].graph));
    const auto prefix = ws.path("k4g");
    const auto r = invoke({"reduce", k4, "--out", prefix});
    CHECK(r.code == 0);
    CHECK(r.out.find("upper bound 22 certified") != std::string::npos);
    CHECK(r.out.find("lower bound not machine-checked") != std::string::npos);
    REQUIRE(std::filesystem::exists(prefix + ".edges"));
    REQUIRE(std::filesystem::exists(prefix + ".roles.json"));
    CHECK(load_graph_file(prefix + ".edges").order() == 56);

    const auto prism = ws.write("prism.edges", serialize(cat[1].graph));
    const auto j = invoke({"reduce", prism, "--out", ws.path("prism_g"), "--json"});
    CHECK(j.doc()["result"]["upper_bound"] == 32);
    CHECK(j.doc()["result"]["upper_bound_certified"] == true);

    const auto p3 = ws.write("p3.edges", serialize(gen_path(3)));
    const auto bad = invoke({"reduce", p3, "--out", ws.path("p3g"), "--json"});
    CHECK(bad.code == 2);
    CHECK(bad.doc()["error"]["message"].get<std::string>().find("vertex 0 has degree 1") != std::string::npos);
}

TEST_CASE("sweep tables")
{
    const auto path = invoke({"sweep", "--family", "path", "--n-max", "12", "--json"});
    CHECK(path.code == 0);
    const auto doc = path.doc();
    CHECK(doc["result"]["rows"].size() == 11);
    CHECK(doc["result"]["disagreements"] == 0);
    CHECK(doc["result"]["max_ratio"].get<double>() <= 2.0);
    for (const auto& row : doc["result"]["rows"])
        CHECK(row["agree"] == true);

    const auto cycle = invoke({"sweep", "--family", "cycle", "--n-max", "10", "--json"});
    CHECK(cycle.code == 0);
    const auto cycle_doc = cycle.doc();
    std::size_t unsupported = 0;
    for (const auto& row : cycle_doc["result"]["rows"])
        if (row["status"] == "unsupported input") {
            ++unsupported;
            CHECK(row["n"].get<int>() >= 6);
            CHECK(row["gamma_pr"].is_number());
        }
    CHECK(unsupported == 5);

    const auto csv = invoke({"sweep", "--family", "interval", "--count", "20", "--n-max", "10", "--seed", "1"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("id,family,n,m,", 0) == 0);

    CHECK(invoke({"sweep", "--family", "path", "--n-max", "40"}).code == 2);
    CHECK(invoke({"sweep", "--family", "path", "--n-min", "9", "--n-max", "4"}).code == 2);
}

TEST_CASE("reports are byte-identical across runs unless timing is requested")
{
    Workspace ws;
    const auto g = ws.write("g.edges", serialize(gen_interval_graph(11, 5)));
    CHECK(invoke({"solve", g, "--json"}).out == invoke({"solve", g, "--json"}).out);
    const auto timed = invoke({"solve", g, "--json", "--timing"}).doc();
    CHECK(timed.contains("timing_ms"));
    CHECK_FALSE(invoke({"solve", g, "--json"}).doc().contains("timing_ms"));
}
