#include "doctest.h"
#include "support.hpp"

#include "cli.hpp"
#include "ore/random.hpp"
#include "ore/sweeps.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace testing_support;
using nlohmann::json;

namespace {

struct Captured {
    int code;
    std::string out;
    std::string err;
};

Captured run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = ore::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse and format round-trip on every backend") {
    for (const auto& [label, k] : standard_backends()) {
        CAPTURE(label);
        Rng rng(17);
        for (int trial = 0; trial < 1000; ++trial) {
            Element a = random_element(*k, rng);
            REQUIRE(k->parse(k->format(a)) == a);
            if (trial % 10 == 0) {
                SkewPolynomial f = random_polynomial_upto(k, rng, 3);
                REQUIRE(SkewPolynomial::parse(k, f.to_string()) == f);
            }
        }
    }
}

TEST_CASE("literal examples") {
    auto h = hq();
    CHECK(h->parse("1+2i-3j+k/2") == h->parse("k/2 - 3j + 2i + 1"));
    CHECK(h->format(h->parse("1+2i-3j+k/2")) == "1+2i-3j+k/2");
    CHECK(SkewPolynomial::parse(h, "t^2 + [j]") ==
          SkewPolynomial(h, {h->parse("j"), h->zero(), h->one()}));
    CHECK(f4()->parse("w^2+w+1").is_zero());
}

TEST_CASE("documented command examples") {
    auto r = run_cli({"is-wedderburn", "--ring", "HQ", "t^2+[1]"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("IS_W\nroots: {i, -i}", 0) == 0);

    r = run_cli({"rgcd", "--ring", "HQ", "t-[i]", "t^2+[1]"});
    CHECK(r.out == "t - [i]\n");

    r = run_cli({"metro", "solve", "--ring", "Qu", "--D", "ddx", "--a", "u", "--b", "u", "--c", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("x = -u\n", 0) == 0);

    r = run_cli({"metro", "solve", "--ring", "HQ", "--a", "0+i", "--b", "2", "--c", "1", "--json"});
    auto doc = json::parse(r.out);
    CHECK(doc["result"]["strategy"] == "linear-algebra");
    CHECK(doc["result"]["uniqueness"] == "UNIQUE");
}

TEST_CASE("json documents carry ring, inputs, result and certificate") {
    auto r = run_cli({"is-wedderburn", "--ring", "HQ", "--json", "(t-[j])*(t-[i])"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["command"] == "is-wedderburn");
    CHECK(doc["ring"] == "HQ[S=id,D=zero]");
    CHECK(doc["inputs"]["f"] == "t^2 - [i+j]*t - [k]");
    CHECK(doc["result"]["verdict"] == "NOT_W");
    CHECK(doc["certificate"]["roots"] == json::array({"i"}));
    CHECK(doc["certificate"]["zero_set_polynomial"] == "t - [i]");
    CHECK(doc["certificate"]["verified"] == true);

    for (std::vector<std::string> args :
         {std::vector<std::string>{"lattice", "build", "--ring", "F4", "--S", "frob", "--json"},
          {"roots", "--ring", "F8", "--S", "frob", "--D", "inner:w", "--json", "t^3 + [w]*t + 1"}}) {
        CAPTURE(args.front());
        auto a = run_cli(args), b = run_cli(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(json::parse(a.out).is_object());
    }
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"is-wedderburn", "--ring", "HQ", "(t-[j])(t-[i])"}).code == 0);
    CHECK(run_cli({"is-wedderburn", "--ring", "HQ", "--strict", "(t-[j])(t-[i])"}).code == 1);
    CHECK(run_cli({"is-wedderburn", "--ring", "HQ", "--strict", "t^2+1"}).code == 0);
    CHECK(run_cli({"metro", "solve", "--ring", "HQ", "--strict", "--a", "i", "--b", "i", "--c", "1"}).code == 1);
    CHECK(run_cli({"lattice", "check", "--ring", "F4", "--S", "frob", "--strict"}).code == 0);

    auto bad = run_cli({"eval", "--ring", "HQ", "t^2+[1", "i"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("SYNTAX_ERROR") != std::string::npos);
    CHECK(run_cli({"eval", "--ring", "HQ", "t", "x"}).code == 2);
    CHECK(run_cli({"roots", "--ring", "Qx", "--S", "frob", "t"}).code == 2);
    CHECK(run_cli({"roots", "--ring", "Qu", "--S", "xsq", "t"}).code == 2);
    CHECK(run_cli({"roots", "--ring", "Qx", "--S", "xsq", "--D", "ddx", "t"}).code == 2);
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);

    auto json_err = run_cli({"conj", "--ring", "HQ", "--json", "i", "0"});
    CHECK(json_err.code == 2);
    CHECK(json::parse(json_err.out)["error"]["code"] == "ZERO_CONJUGATOR");
}

TEST_CASE("command coverage") {
    CHECK(run_cli({"eval", "--ring", "HQ", "t^2+1", "k"}).out == "0\n");
    CHECK(run_cli({"conj", "--ring", "HQ", "--", "-i", "j"}).out == "i\n");
    CHECK(run_cli({"phi", "--ring", "HQ", "t-[i]", "j"}).out == "-i\n");
    CHECK(run_cli({"phi", "--ring", "HQ", "--strict", "t-[i]", "i"}).code == 1);
    CHECK(run_cli({"roots", "--ring", "F4", "--S", "frob", "t^2+1"}).out == "{1, w, w+1}\n");
    CHECK(run_cli({"roots", "--ring", "HQ", "--domain", "i,-i,j,1", "t^2+1"}).out == "{-i, j, i}\n");
    CHECK(run_cli({"minpoly", "--ring", "HQ", "i", "j"}).out == "t^2 + [1]\n");
    CHECK(run_cli({"minpoly", "--ring", "F4", "--S", "frob", "1,w"}).out == "t^2 + [1]\n");
    CHECK(run_cli({"rank", "--ring", "HQ", "i,j,k"}).out == "2\n");
    CHECK(run_cli({"rank", "--ring", "HQ"}).out == "0\n");
    CHECK(run_cli({"pbasis", "--ring", "HQ", "i", "j", "k"}).out == "{i, j}\n");
    CHECK(run_cli({"closure-member", "--ring", "HQ", "k", "i", "j"}).out == "P-dependent\n");
    CHECK(run_cli({"closure-member", "--ring", "F4", "--S", "frob", "--strict", "0", "1", "w"}).code == 1);
    CHECK(run_cli({"split", "--ring", "HQ", "t^2+1"}).out == "(t + [i])(t - [i])\n");
    CHECK(run_cli({"dual", "--ring", "HQ", "i", "j"}).code == 0);
    CHECK(run_cli({"dual", "--ring", "HQ", "i", "j", "k"}).code == 2);
    CHECK(run_cli({"expspace", "--ring", "HQ", "t^2+1", "i"}).out.rfind("dimension over C_a: 2", 0) == 0);
    CHECK(run_cli({"vandermonde-check", "--ring", "HQ", "t^2+1"}).out.rfind("holds", 0) == 0);
    CHECK(run_cli({"vandermonde-check", "--ring", "HQ", "--strict", "(t-[j])(t-[i])"}).code == 1);
    CHECK(run_cli({"rank-theorems", "union", "--ring", "HQ", "--domain", "i,-i,j,-j,k,-k", "i", "j,k"}).out == "3 = 3\n");
    CHECK(run_cli({"rank-theorems", "phi", "--ring", "HQ", "--domain", "i,-i,j,-j,k,-k", "t-[i]", "j,k"}).out == "1 = 1\n");
    CHECK(run_cli({"rank-theorems", "product", "--ring", "HQ", "t-[j]", "t-[i]"}).out == "1 <= 2\n");
    CHECK(run_cli({"rank-theorems", "phi", "--ring", "HQ", "--domain", "i,j", "t-[i]", "i,j"}).code == 2);
    CHECK(run_cli({"factor-theorem", "--ring", "F4", "--S", "frob", "--strict", "t^3+t"}).code == 0);
    CHECK(run_cli({"product-theorem", "--ring", "F4", "--S", "frob", "--strict", "t-1", "t-1"}).code == 0);
    CHECK(run_cli({"llcm", "--ring", "HQ", "t-[i]", "t-[j]"}).out == "t^2 + [1]\n");
    CHECK(run_cli({"lattice", "build", "--ring", "F4", "--S", "frob", "--kind", "w", "--dot"}).out.rfind("digraph", 0) == 0);
    CHECK(run_cli({"lattice", "build", "--ring", "HQ"}).code == 2);
    auto eq = run_cli({"metro", "equiv", "--ring", "HQ", "--json", "--a", "i", "--b", "i", "--c", "j"});
    CHECK(json::parse(eq.out)["result"]["agree"] == true);
    CHECK(run_cli({"paper-examples"}).code == 0);
}

TEST_CASE("batch runs one command per line") {
    const std::string path = "cli_batch_test.txt";
    {
        std::ofstream f(path);
        f << "# comment\n"
          << "rgcd --ring HQ \"t-[i]\" \"t^2+[1]\"\n\n"
          << "is-wedderburn --ring HQ \"(t-[j])(t-[i])\"\n";
    }
    auto r = run_cli({"batch", path});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("t - [i]\nNOT_W\n", 0) == 0);
    CHECK(run_cli({"batch", path, "--strict"}).code == 1);
    auto j = run_cli({"batch", path, "--json"});
    CHECK(j.out.find("\"command\": \"rgcd\"") != std::string::npos);
    std::remove(path.c_str());
    CHECK(run_cli({"batch", "missing-file.txt"}).code == 2);
    CHECK(ore::cli::split_command_line("a \"b c\"  d") == std::vector<std::string>{"a", "b c", "d"});
}
