#include "bck/cli.hpp"
#include "bck/construct.hpp"
#include "bck/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bck;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(std::filesystem::temp_directory_path() / "bck_cli_test")
    {
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }

    std::string file(const std::string& name, const std::string& contents = {}) const
    {
        const auto p = path_ / name;
        if (!contents.empty())
            std::ofstream(p) << contents;
        return p.string();
    }
    std::string str() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

} // namespace

TEST_CASE("verify, cd and props")
{
    TempDir tmp;
    const auto pi = tmp.file("pi.bck", "bck 1\n3\n0 0 0\n1 0 0\n2 2 0\n");
    const auto bad = tmp.file("bad.bck", "bck 1\n2\n0 1\n1 0\n");
    const auto malformed = tmp.file("malformed.bck", "bck 1\n2\n0 0\n1 5\n");

    auto r = run({"verify", pi});
    CHECK(r.code == 0);
    CHECK(r.out == "valid\n");

    r = run({"verify", bad});
    CHECK(r.code == 1);
    CHECK(r.out == "invalid: BCK4 violated at x=1\n");

    r = run({"verify", malformed});
    CHECK(r.code == 1);
    CHECK(r.err.find("entry out of range at row 2") != std::string::npos);

    r = run({"cd", pi});
    CHECK(r.code == 0);
    CHECK(r.out == "7/9 = 7/9\n");

    r = run({"cd", bad});
    CHECK(r.code == 1);
    CHECK(r.err.find("BCK4") != std::string::npos);

    r = run({"props", pi});
    CHECK(r.out == "commutative: no\nbounded: yes (top = 2)\npositive-implicative: yes\n");

    r = run({"cd", tmp.file("missing.bck")});
    CHECK(r.code == 1);
}

TEST_CASE("build and cd agree on the minimum degree")
{
    TempDir tmp;
    for (std::size_t n = 3; n <= 50; ++n) {
        const auto path = tmp.file("m.bck");
        REQUIRE(run({"build", "mn", std::to_string(n), "-o", path}).code == 0);
        const auto r = run({"cd", path});
        const auto k = 3 * n - 2;
        CHECK(r.out == std::to_string(k) + "/" + std::to_string(n * n) + " = " + Ratio(k, n * n).to_string() + "\n");
        CHECK(run({"verify", path}).out == "valid\n");
    }
    const auto r = run({"build", "bn", "4"});
    CHECK(r.code == 0);
    CHECK(parse_bck(r.out) == b_star(4).table());
    CHECK(run({"build", "xx", "4"}).code == 2);
}

TEST_CASE("eval and op")
{
    TempDir tmp;
    auto r = run({"eval", "((PI+T)+2)"});
    CHECK(r.code == 0);
    CHECK(parse_bck(r.out) == ConstructionExpr::parse("((PI+T)+2)").evaluate().table());
    CHECK(run({"eval", "(PI+"}).code == 1);

    const auto two = tmp.file("two.bck", emit_bck(standard_algebras().two.table()));
    const auto pi = tmp.file("pi.bck", emit_bck(standard_algebras().pi.table()));
    r = run({"op", "extend", two});
    CHECK(parse_bck(r.out) == standard_algebras().pi.table());

    const auto out = tmp.file("u.bck");
    CHECK(run({"op", "union", pi, two, "-o", out}).code == 0);
    CHECK(run({"cd", out}).out == "14/16 = 7/8\n");
    CHECK(run({"op"}).code == 2);
}

TEST_CASE("family, cdset and synth")
{
    auto r = run({"family", "4", "--exprs"});
    CHECK(r.out == "1\t10/16\t5/8\t(PI+T)\n2\t12/16\t3/4\t(TC+T)\n3\t14/16\t7/8\t(PI+2)\n");
    CHECK(run({"family", "2"}).code == 1);

    r = run({"cdset", "4"});
    CHECK(r.out == "10/16 = 5/8\n12/16 = 3/4\n14/16 = 7/8\n");

    r = run({"synth", "2/5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("order: 10\n") != std::string::npos);
    CHECK(r.out.find("k: 30\n") != std::string::npos);
    CHECK(r.out.find("index: 7\n") != std::string::npos);
    CHECK(r.out.find("expression: (((((((PI+2)+T)+2)+T)+T)+T)+T)\n") != std::string::npos);
    CHECK(r.out.find("display: ((((((PI⊔2)⊕⊤)⊔2)⊕⊤)⊕⊤)⊕⊤)⊕⊤\n") != std::string::npos);
    CHECK(r.out.find("degree: 40/100 = 2/5\n") != std::string::npos);
    CHECK(r.out.find("trace: 7 -> 14 -> 17 -> 28 -> 31 -> 34 -> 37 -> 40\n") != std::string::npos);
    CHECK(r.out.find("note:") == std::string::npos);

    r = run({"synth", "1/2"});
    CHECK(r.out.find("order: 8\n") != std::string::npos);
    CHECK(r.out.find("note: order 2q = 4") != std::string::npos);

    r = run({"synth", "1/1"});
    CHECK(r.out.find("expression: TC\n") != std::string::npos);

    CHECK(run({"synth", "3/2"}).code == 1);
    CHECK(run({"synth", "0/2"}).code == 1);
    CHECK(run({"synth", "a/b"}).code == 2);
}

TEST_CASE("enum, census, iso, subalg, hasse")
{
    TempDir tmp;
    CHECK(run({"enum", "4", "--count-only"}).out == "14\n");
    CHECK(run({"enum", "4", "--count-only", "--noncommutative"}).out == "9\n");

    const auto dir = tmp.str() + "/catalog";
    auto r = run({"enum", "3", "-o", dir});
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(dir + "/manifest.tsv"));
    CHECK(run({"verify", dir + "/0002.bck"}).out == "valid\n");

    r = run({"census", "4"});
    CHECK(r.out == "10/16\t5/8\t1\n12/16\t3/4\t5\n14/16\t7/8\t3\n16/16\t1/1\t5\n");

    r = run({"enum", "7", "--count-only"});
    CHECK(r.code == 1);
    CHECK(r.err.find("BCK_ENUM_MAX_ORDER") != std::string::npos);

    const auto pi = tmp.file("pi.bck", emit_bck(standard_algebras().pi.table()));
    const auto tc = tmp.file("tc.bck", emit_bck(standard_algebras().tc.table()));
    const auto ext = tmp.file("ext.bck", emit_bck(extend_top(standard_algebras().two).table()));
    CHECK(run({"iso", pi, tc}).out == "not isomorphic\n");
    CHECK(run({"iso", pi, ext}).out == "isomorphic: 0->0 1->1 2->2\n");

    CHECK(run({"subalg", pi}).out == "{0, 1}\n");
    r = run({"hasse", pi});
    CHECK(r.out == emit_hasse_dot(standard_algebras().pi));
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"cd"}).code == 2);
    CHECK(run({"family", "x"}).code == 2);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("synth") != std::string::npos);
}

TEST_CASE("commands are deterministic")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"family", "6", "--exprs"}, {"synth", "3/7"}, {"census", "5"}, {"enum", "4"}}) {
        CHECK(run(args).out == run(args).out);
    }
}
