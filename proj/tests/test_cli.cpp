#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "trisect/atlas.hpp"
#include "trisect/cli.hpp"
#include "trisect/io.hpp"
#include "trisect/moves.hpp"

using namespace trisect;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = {})
{
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir()
    {
        path_ = fs::temp_directory_path() / ("trisect-cli-" + std::to_string(std::random_device{}()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const
    {
        const fs::path p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string example(const std::string& name) const { return write(name + ".tris", serialize_diagram(builtin(name))); }

private:
    fs::path path_;
};

} // namespace

TEST_CASE("cli: examples and example")
{
    const auto r = invoke({"examples"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "s4-g0\ns4-g3\ncp2\ncp2-mirror\ns1xs3\ncp2-sum-cp2mirror\ns2xs2-g2-model\n");

    const auto e = invoke({"example", "cp2"});
    CHECK(e.code == cli::kOk);
    CHECK(parse_diagram(e.out) == builtin("cp2"));

    CHECK(invoke({"example", "nope"}).code == cli::kUsage);
}

TEST_CASE("cli: invariants report")
{
    TempDir tmp;
    const auto r = invoke({"invariants", tmp.example("cp2")});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "g=1 k=0 chi=3 sigma=1\n"
                   "h1=0\n"
                   "handles=1 0 1 0 1\n"
                   "q_ab=[[1]]\n"
                   "q_bc=[[-1]]\n"
                   "q_ca=[[-1]]\n");

    const auto s = invoke({"invariants", tmp.example("s1xs3")});
    CHECK(s.out.find("g=1 k=1 chi=0 sigma=0\nh1=Z\n") == 0);

    const auto bad = invoke({"invariants", tmp.write("bad.tris", "tris v1\ngenus 1\nalpha\n2 0\nbeta\n0 1\ngamma\n1 1\n")});
    CHECK(bad.code == cli::kNegative);
    CHECK(bad.err.find("primitive") != std::string::npos);
}

TEST_CASE("cli: validate")
{
    TempDir tmp;
    const auto ok = invoke({"validate", tmp.example("s4-g3")});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out.find("verdict: valid (g=3 k=1 chi=2)") != std::string::npos);

    const auto bad = invoke({"validate", tmp.write("k.tris", "tris v1\ngenus 1\nalpha\n1 0\nbeta\n1 0\ngamma\n0 1\n")});
    CHECK(bad.code == cli::kNegative);
    CHECK(bad.out.find("unequal-k") != std::string::npos);

    const auto parse = invoke({"validate", tmp.write("p.tris", "tris v1\ngenus 1\nalpha\n1 0 0\n")});
    CHECK(parse.code == cli::kUsage);
    CHECK(parse.err.find("line 4") != std::string::npos);

    CHECK(invoke({"validate", "/nonexistent/file.tris"}).code == cli::kUsage);
    CHECK(invoke({"validate", "-"}, serialize_diagram(builtin("cp2"))).code == cli::kOk);
}

TEST_CASE("cli: transforming commands print diagrams")
{
    TempDir tmp;
    const auto s4 = tmp.example("s4-g0");
    const auto st = invoke({"stabilize", s4});
    CHECK(st.code == cli::kOk);
    CHECK(parse_diagram(st.out) == builtin("s4-g3"));

    const auto st2 = invoke({"stabilize", tmp.example("cp2"), "-n", "2"});
    CHECK(parameters(parse_diagram(st2.out)) == Parameters{7, 2});

    const auto model = tmp.example("s2xs2-g2-model");
    const auto sl = invoke({"slide", model, "--system", "alpha", "--target", "1", "--source", "2", "--sign", "+"});
    CHECK(sl.code == cli::kOk);
    CHECK(parse_diagram(sl.out) == handle_slide(builtin("s2xs2-g2-model"), {Label::alpha, 0, 1, 1}));
    CHECK(invoke({"slide", model, "--system", "alpha", "--target", "1", "--source", "3", "--sign", "+"}).code ==
          cli::kUsage);
    CHECK(invoke({"slide", model, "--system", "delta", "--target", "1", "--source", "2", "--sign", "+"}).code ==
          cli::kUsage);

    const auto cp2 = tmp.example("cp2");
    const auto df = invoke({"diffeo", cp2, "--matrix", tmp.write("j.txt", "0 1\n-1 0\n")});
    CHECK(df.code == cli::kOk);
    CHECK(parse_diagram(df.out) == apply_diffeomorphism(builtin("cp2"), form_matrix(1)));
    CHECK(invoke({"diffeo", cp2, "--matrix", tmp.write("d.txt", "2 0\n0 1\n")}).code == cli::kUsage);

    const auto sum = invoke({"sum", cp2, tmp.example("cp2-mirror")});
    CHECK(parse_diagram(sum.out) == builtin("cp2-sum-cp2mirror"));

    const auto rev = invoke({"reverse", cp2});
    CHECK(signature(parse_diagram(rev.out)) == -1);
}

TEST_CASE("cli: stabilize then invariants")
{
    TempDir tmp;
    for (const auto& name : builtin_names()) {
        const auto before = invariants(builtin(name));
        const auto st = invoke({"stabilize", tmp.example(name)});
        const auto after = invariants(parse_diagram(st.out));
        CHECK(after.params == Parameters{before.params.genus + 3, before.params.k + 1});
        CHECK(after.euler == before.euler);
        CHECK(after.signature == before.signature);
        CHECK(after.h1 == before.h1);
    }
}

TEST_CASE("cli: compare exit codes")
{
    TempDir tmp;
    const auto c = invoke({"compare", tmp.example("cp2"), tmp.example("cp2-mirror")});
    CHECK(c.code == cli::kNegative);
    CHECK(c.out.find("signature") != std::string::npos);

    const auto model = builtin("s2xs2-g2-model");
    const auto slid = tmp.write("slid.tris", serialize_diagram(handle_slide(model, {Label::beta, 1, 0, 1})));
    const auto eq = invoke({"compare", slid, tmp.example("s2xs2-g2-model"), "--depth", "2", "--nodes", "1000"});
    CHECK(eq.code == cli::kOk);
    CHECK(eq.out.find("slide-equivalent") == 0);

    CHECK(invoke({"compare", tmp.example("s4-g3"), tmp.example("s4-g3")}).code == cli::kOk);

    auto far = handle_slide(builtin("s4-g3"), {Label::alpha, 0, 1, 1});
    far = handle_slide(far, {Label::gamma, 2, 1, 1});
    const auto unk = invoke({"compare", tmp.example("s4-g3"), tmp.write("far.tris", serialize_diagram(far)), "--depth",
                             "1"});
    CHECK(unk.code == cli::kUndecided);
}

TEST_CASE("cli: params")
{
    const auto b = invoke({"params", "bundle-s2", "--fiber-genus", "0"});
    CHECK(b.code == cli::kOk);
    CHECK(b.out == "g=5 k=1 chi=4\n");
    CHECK(invoke({"params", "fiber-s1", "--genus", "2"}).out == "g=13 k=5 chi=0\n");
    CHECK(invoke({"params", "bundle-s2", "--fiber-genus", "-1"}).code == cli::kUsage);
    CHECK(invoke({"params"}).code == cli::kUsage);
}

TEST_CASE("cli: usage errors")
{
    CHECK(invoke({}).code == cli::kUsage);
    CHECK(invoke({"frobnicate"}).code == cli::kUsage);
    CHECK(invoke({"--help"}).code == cli::kOk);
}
