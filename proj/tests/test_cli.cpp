#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "run.hpp"

using namespace pmqed::cli;

namespace {

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const char* name)
        : path(std::filesystem::temp_directory_path() / name)
    {
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("grid parsing")
{
    const GridSpec g = parse_grid("0:1:5");
    const auto pts = g.points();
    REQUIRE(pts.size() == 5);
    CHECK(pts[0] == doctest::Approx(0.0));
    CHECK(pts[2] == doctest::Approx(0.5));
    CHECK(pts[4] == doctest::Approx(1.0));

    const GridSpec single = parse_grid("0.3");
    CHECK(single.count == 1);
    CHECK(single.points()[0] == doctest::Approx(0.3));

    CHECK_THROWS_AS(parse_grid("0:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("a:b:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0:1:0"), std::invalid_argument);
}

TEST_CASE("level parsing")
{
    CHECK(parse_level("g0").is_ground());
    CHECK(parse_level("2+").n() == 2);
    CHECK(parse_level("2+").branch() == pmqed::Branch::plus);
    CHECK(parse_level("10-").n() == 10);
    CHECK_THROWS_AS(parse_level("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(parse_level("+"), std::invalid_argument);
}

TEST_CASE("table1 mode writes four data rows")
{
    TempFile tmp("pmqed_cli_table1.csv");
    RunConfig config;
    config.mode = RunConfig::Mode::table1;
    config.timestamp = false;
    config.output = tmp.path.string();

    std::stringstream err;
    CHECK(run(config, err) == 0);

    const std::string text = slurp(tmp.path);
    CHECK(text.find("name,transition,alpha,omega0_cm,pdm_shift_cm,crt_shift_cm") !=
          std::string::npos);
    int data_rows = 0;
    std::stringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty() && line[0] != '#' && line.find("name,") != 0)
            ++data_rows;
    CHECK(data_rows == 4);
    CHECK(text.find("SrF") != std::string::npos);
}

TEST_CASE("deterministic output without timestamps")
{
    TempFile a("pmqed_cli_det_a.csv"), b("pmqed_cli_det_b.csv");
    RunConfig config;
    config.mode = RunConfig::Mode::validate;
    config.timestamp = false;

    std::stringstream err;
    config.output = a.path.string();
    CHECK(run(config, err) == 0);
    config.output = b.path.string();
    CHECK(run(config, err) == 0);
    CHECK(slurp(a.path) == slurp(b.path));
    CHECK(slurp(a.path).find("alpha_bound,8.7179") != std::string::npos);
}

TEST_CASE("exit codes: invalid config vs computation failure")
{
    std::stringstream err;

    RunConfig bad_level;
    bad_level.mode = RunConfig::Mode::populations;
    bad_level.level = "bogus";
    TempFile t1("pmqed_cli_bad.csv");
    bad_level.output = t1.path.string();
    bad_level.timestamp = false;
    CHECK(run(bad_level, err) == 1);

    // f=1 at resonance puts a perturbation denominator at exactly zero.
    RunConfig degen;
    degen.mode = RunConfig::Mode::bs_shift;
    degen.f = 1.0;
    degen.engine = pmqed::Engine::dsp;
    TempFile t2("pmqed_cli_degen.csv");
    degen.output = t2.path.string();
    degen.timestamp = false;
    CHECK(run(degen, err) == 2);
    CHECK(slurp(t2.path).find("# error: code=near-degeneracy") != std::string::npos);
}

TEST_CASE("bs-shift mode emits both engines")
{
    TempFile tmp("pmqed_cli_bs.csv");
    RunConfig config;
    config.mode = RunConfig::Mode::bs_shift;
    config.f = 0.05;
    config.alpha = 1.0;
    config.timestamp = false;
    config.output = tmp.path.string();

    std::stringstream err;
    CHECK(run(config, err) == 0);
    const std::string text = slurp(tmp.path);
    CHECK(text.find("dsp,bs_total") != std::string::npos);
    CHECK(text.find("dsp,bs_pdm") != std::string::npos);
    CHECK(text.find("dsp,bs_crt") != std::string::npos);
    CHECK(text.find("exact,bs_total") != std::string::npos);
}
