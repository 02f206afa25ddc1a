#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace chisholm;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string temp(const std::string& name) { return (fs::temp_directory_path() / ("chisholm_cli_" + name)).string(); }

void write(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

} // namespace

TEST_CASE("fit prints the [1/1] grids of exp") {
    const auto r = run({"fit", "exp", "-M", "1"});
    REQUIRE(r.code == 0);
    const auto j = io::parse(r.out);
    // Generator exp is exp((x+y)/2).
    CHECK(j.at("num") == io::parse(R"([["1", "1/4"], ["1/4", "1/16"]])"));
    CHECK(j.at("den") == io::parse(R"([["1", "-1/4"], ["-1/4", "1/16"]])"));
    CHECK(r.err.find("6 = 2M^2+4M") != std::string::npos);
}

TEST_CASE("fit from a series file") {
    const auto series = temp("exp_sum.json");
    write(series, R"({"center": [0, 0], "degree": 3, "terms": [[0,0,"1"],[1,0,"1"],[0,1,"1"],[2,0,"1/2"],[1,1,"1"],[0,2,"1/2"],
                     [3,0,"1/6"],[2,1,"1/2"],[1,2,"1/2"],[0,3,"1/6"]]})");
    const auto r = run({"fit", "-i", series, "-M", "1"});
    REQUIRE(r.code == 0);
    const auto j = io::parse(r.out);
    CHECK(j.at("num") == io::parse(R"([["1", "1/2"], ["1/2", "1/4"]])"));
    CHECK(j.at("den") == io::parse(R"([["1", "-1/2"], ["-1/2", "1/4"]])"));
    fs::remove(series);
}

TEST_CASE("exit codes") {
    SECTION("usage") {
        CHECK(run({}).code == cli::exit_usage);
        CHECK(run({"fit", "exp"}).code == cli::exit_usage);
        CHECK(run({"fit", "exp", "-M", "1", "--bogus"}).code == cli::exit_usage);
        CHECK(run({"fit", "exp", "-M", "1", "--backend", "fast"}).code == cli::exit_usage);
        CHECK(run({"error-table", "exp", "-M", "1", "--grid", "a,b"}).code == cli::exit_usage);
        CHECK(run({"--help"}).code == cli::exit_ok);
    }
    SECTION("insufficient terms") {
        const auto r = run({"fit", "exp", "-M", "2", "--degree", "4"});
        CHECK(r.code == cli::exit_insufficient_terms);
        CHECK(r.err.find("Equations may not give solutions") != std::string::npos);
    }
    SECTION("singular") {
        const auto path = temp("singular.json");
        write(path, R"({"center": [0, 0], "degree": 3, "terms": [[0,0,"1"],[2,0,"1"],[0,2,"1"]]})");
        const auto r = run({"fit", "-i", path, "-M", "1"});
        CHECK(r.code == cli::exit_singular);
        CHECK(r.err.find("does not exist") != std::string::npos);
        fs::remove(path);
    }
    SECTION("not normalized, with the offset hint") {
        const auto r = run({"fit", "li22", "-M", "2"});
        CHECK(r.code == cli::exit_not_normalized);
        CHECK(r.err.find("--offset") != std::string::npos);
        CHECK(r.err.find("1+x+y") != std::string::npos);
        CHECK(run({"fit", "li22", "-M", "2", "--offset", "1+x+y", "--rotate-pm"}).code == cli::exit_ok);
    }
    SECTION("parse") {
        const auto path = temp("broken.json");
        write(path, "{\"center\": [0, 0], \"degree\": ");
        CHECK(run({"fit", "-i", path, "-M", "1"}).code == cli::exit_parse);
        CHECK(run({"fit", "-i", temp("missing.json"), "-M", "1"}).code == cli::exit_parse);
        CHECK(run({"fit", "exp", "-M", "1", "--offset", "1+q"}).code == cli::exit_parse);
        fs::remove(path);
    }
    SECTION("pole") {
        const auto series = temp("geometric.json");
        const auto fit = temp("geometric_fit.json");
        write(series, R"({"center": [0, 0], "degree": 3, "terms": [[0,0,"1"],[1,0,"1"],[0,1,"1"],[2,0,"1"],[1,1,"1"],[0,2,"1"],
                         [3,0,"1"],[2,1,"1"],[1,2,"1"],[0,3,"1"]]})");
        REQUIRE(run({"fit", "-i", series, "-M", "1", "-o", fit}).code == 0);
        CHECK(run({"eval", "-i", fit, "-p", "1,0"}).code == cli::exit_pole);
        CHECK(run({"eval", "-i", fit, "-p", "0.5,0.5"}).out == "0.5,0.5 4\n");
        fs::remove(series);
        fs::remove(fit);
    }
    SECTION("parameter pole") {
        CHECK(run({"gen", "2f1", "--params", "c=-2"}).code == cli::exit_parameter_pole);
        CHECK(run({"fit", "f2", "-M", "1", "--params", "c1=0"}).code == cli::exit_parameter_pole);
    }
    SECTION("order cap") {
        CHECK(run({"fit", "exp", "-M", "26"}).code == cli::exit_order_cap);
        ::setenv("CHISHOLM_MAX_ORDER", "3", 1);
        CHECK(run({"fit", "exp", "-M", "4"}).code == cli::exit_order_cap);
        CHECK(run({"fit", "exp", "-M", "3"}).code == cli::exit_ok);
        ::setenv("CHISHOLM_MAX_ORDER", "zero", 1);
        CHECK(run({"fit", "exp", "-M", "3"}).code == cli::exit_usage);
        ::unsetenv("CHISHOLM_MAX_ORDER");
    }
    SECTION("other") {
        CHECK(run({"gen", "nope"}).code == cli::exit_failure);
        CHECK(run({"gen", "exp", "--degree", "2"}).code == cli::exit_failure);
    }
}

TEST_CASE("fit file round trip is bitwise identical to in-process evaluation") {
    const auto fit = temp("log_fit.json");
    const auto r = run({"fit", "log", "-M", "6", "--offset", "1", "-o", fit});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("written to") != std::string::npos);

    const auto in_process = fit_prepared(log_one_plus_sum(13), 6, Preprocess{parse_offset("1"), false});
    const auto j = io::load(fit);
    CHECK(std::get<ChisholmApproximant<Rational>>(io::read_chisholm(j)) == in_process.ca);

    const Complex50 x(Float50(3.1)), y(Float50(3.1));
    const auto e = run({"eval", "-i", fit, "-p", "3.1,3.1", "--precision", "45"});
    REQUIRE(e.code == 0);
    CHECK(e.out == "3.1,3.1 " + cli::format_value(in_process(x, y), 45) + "\n");

    // Complex points.
    const auto c = run({"eval", "-i", fit, "-p", "0.5+0.25i,-0.1i"});
    REQUIRE(c.code == 0);
    CHECK(c.out.find('i') != std::string::npos);
    fs::remove(fit);
}

TEST_CASE("error tables are deterministic and follow the reference") {
    const std::vector<std::string> args = {"error-table", "exp", "-M", "10", "--grid", "0,3,6,9"};
    const auto a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("point,CA,reference,% error\n", 0) == 0);
    // 16 rows plus the header.
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 17);
    CHECK(a.out.find("\"(9,9)\",8103.083927") != std::string::npos);

    const auto md = run({"error-table", "sin", "-M", "10", "--offset", "1", "--grid", "4.6", "--format", "markdown"});
    REQUIRE(md.code == 0);
    CHECK(md.out.find("| (4.6,4.6) | -0.9936946941 |") != std::string::npos);

    const auto rect = run({"error-table", "cm2", "-M", "10", "--rotate-pm", "--grid", "1.9:2.1"});
    REQUIRE(rect.code == 0);
    CHECK(rect.out.find("0.01957320") != std::string::npos);
}

TEST_CASE("empty grid gives an empty table") {
    const auto r = run({"error-table", "exp", "-M", "2", "--grid", ""});
    REQUIRE(r.code == 0);
    CHECK(r.out == "point,CA,reference,% error\n");
}

TEST_CASE("gen writes a readable series") {
    const auto r = run({"gen", "exp", "--center", "3,6", "--degree", "5"});
    REQUIRE(r.code == 0);
    const auto s = std::get<DoubleSeries<double>>(io::read_series(io::parse(r.out)));
    CHECK(s.center() == std::pair<double, double>{3.0, 6.0});
    CHECK(s.at(0, 0) == Catch::Approx(90.0171313005));

    const auto p = run({"gen", "f1", "--params", "a=0.5,b1=1/3", "--degree", "4"});
    REQUIRE(p.code == 0);
    CHECK(std::get<DoubleSeries<Rational>>(io::read_series(io::parse(p.out))) ==
          appell_f1(Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7), 4));
    CHECK(run({"gen", "f1", "--params", "zz=1"}).code == cli::exit_failure);
}

TEST_CASE("float backend") {
    const auto r = run({"fit", "exp", "-M", "4", "--backend", "float"});
    REQUIRE(r.code == 0);
    CHECK(r.err.find("max |taylor residual|") != std::string::npos);
    CHECK(io::all_exact(io::parse(r.out)) == false);
}

TEST_CASE("Pade verbs") {
    const auto fit = temp("pade.json");
    REQUIRE(run({"pade-fit", "2f1", "-M", "10", "-o", fit}).code == 0);
    const auto e = run({"pade-eval", "-i", fit, "-p", "0.5-0.8660254037844386i"});
    REQUIRE(e.code == 0);
    CHECK(e.out.find("0.706209057") != std::string::npos);
    CHECK(e.out.find("-0.807253874") != std::string::npos);
    CHECK(run({"pade-fit", "exp", "-M", "2"}).code == cli::exit_usage);
    CHECK(run({"fit", "2f1", "-M", "2"}).code == cli::exit_usage);
    fs::remove(fit);
}

TEST_CASE("demos") {
    const auto g = run({"demo", "2f1"});
    REQUIRE(g.code == 0);
    CHECK(g.out.find("0.7062090573-0.8072538749i") != std::string::npos);

    const auto li = run({"demo", "li22", "--orders", "5", "--format", "csv"});
    REQUIRE(li.code == 0);
    CHECK(li.out.find("0.726068215009552") != std::string::npos);
    CHECK(li.out.find("0.690568727620971") != std::string::npos);
    CHECK(li.out.find(",121,") != std::string::npos);

    const auto is = run({"demo", "ising"});
    REQUIRE(is.code == 0);
    CHECK(is.out.find("1.022807183") != std::string::npos);
    CHECK(is.out.find("1.705228240") != std::string::npos);

    CHECK(run({"demo", "nope"}).code == cli::exit_usage);
}

TEST_CASE("preprocessing is stored with the approximant") {
    const auto fit = temp("li22_fit.json");
    REQUIRE(run({"fit", "li22", "-M", "5", "--offset", "1+x+y", "--rotate-pm", "-o", fit}).code == 0);
    const auto j = io::load(fit);
    CHECK(j.at("preprocess").at("offset") == "1+x+y");
    CHECK(j.at("preprocess").at("rotate_pm") == true);
    const auto e = run({"eval", "-i", fit, "-p", "1,1", "--precision", "15"});
    REQUIRE(e.code == 0);
    CHECK(e.out == "1,1 0.726068215009552\n");
    fs::remove(fit);
}

TEST_CASE("argument helpers") {
    CHECK(cli::parse_exact("1.23") == Rational(123, 100));
    CHECK(cli::parse_exact("-4e-2") == Rational(-1, 25));
    CHECK(cli::parse_exact("2/6") == Rational(1, 3));
    CHECK_THROWS_AS(cli::parse_exact("x"), cli::usage_error);
    CHECK(cli::parse_complex("1-2i") == Complex(1, -2));
    CHECK(cli::parse_complex("-i") == Complex(0, -1));
    CHECK(cli::parse_complex("1e-3+1e-3i") == Complex(1e-3, 1e-3));
    CHECK(cli::parse_grid("1,2:3") == std::vector<std::pair<double, double>>{{1, 3}, {2, 3}});
    CHECK(cli::parse_grid("1,2").size() == 4);
    CHECK_THROWS_AS(cli::parse_grid("1:2:3"), cli::usage_error);
}
