#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "pmqed/molecules.hpp"

using namespace pmqed;

TEST_CASE("alpha derivation from dipole moments")
{
    const MoleculeRecord srf{"SrF", "X2Sigma-A2Pi", 3.482, 2.059, 6.227, 1.52e4};
    CHECK(derive_alpha(srf) == doctest::Approx(-0.114).epsilon(5e-3));

    const MoleculeRecord dp7{"diphenyl", "(1-7)", 10.67, 14.07, 3.37, 2.88e4};
    CHECK(derive_alpha(dp7) == doctest::Approx(0.504).epsilon(5e-3));

    const MoleculeRecord flat{"x", "t", 2.0, 2.0, 1.0, 1.0e4};
    CHECK(derive_alpha(flat) == 0.0);
}

TEST_CASE("record validation")
{
    MoleculeRecord r{"x", "t", 1.0, 2.0, 3.0, 1.0e4};
    CHECK_NOTHROW(r.validate());
    r.mu_ge = 0.0;
    CHECK_THROWS_AS(r.validate(), std::invalid_argument);
    r.mu_ge = 3.0;
    r.omega0_cm = -1.0;
    CHECK_THROWS_AS(r.validate(), std::invalid_argument);
}

TEST_CASE("cavity coupling formula: structure and worked volume")
{
    CHECK(coupling_from_cavity(0.0, 1.52e4, 1e-26) == 0.0);

    const double base = coupling_from_cavity(6.227, 1.52e4, 1e-26);
    CHECK(coupling_from_cavity(2 * 6.227, 1.52e4, 1e-26) ==
          doctest::Approx(2 * base).epsilon(1e-13));
    CHECK(coupling_from_cavity(6.227, 1.52e4, 4e-26) ==
          doctest::Approx(base / 2).epsilon(1e-13));

    // Volume that puts SrF at f = 0.05 (lambda = 760 cm^-1), and the round trip.
    const double v = volume_for_coupling(6.227, 1.52e4, 760.0);
    CHECK(v == doctest::Approx(3.2275814e-26).epsilon(1e-6));
    CHECK(coupling_from_cavity(6.227, 1.52e4, v) == doctest::Approx(760.0).epsilon(1e-12));
}

TEST_CASE("system parameters for a molecule")
{
    const MoleculeRecord srf = find_molecule(builtin_catalog(), "SrF");
    const SystemParams p = params_for(srf, 0.05, 0.0);
    CHECK(p.omega_c == doctest::Approx(1.52e4));
    CHECK(p.omega_0 == doctest::Approx(1.52e4));
    CHECK(p.lambda == doctest::Approx(760.0));
    CHECK(p.alpha == doctest::Approx(-0.114).epsilon(5e-3));

    const SystemParams det = params_for(srf, 0.05, 500.0);
    CHECK(det.omega_0 - det.omega_c == doctest::Approx(500.0));
    CHECK(det.f() == doctest::Approx(0.05));
}

TEST_CASE("builtin catalog covers the four transitions")
{
    const auto& cat = builtin_catalog();
    CHECK(cat.size() == 4);
    const MoleculeRecord& dp4 = find_molecule(cat, "diphenyl:(1-4)");
    CHECK(derive_alpha(dp4) == doctest::Approx(0.297).epsilon(5e-3));
    CHECK(dp4.omega0_cm == doctest::Approx(3.85e4));
    CHECK_THROWS_AS(find_molecule(cat, "no-such-molecule"), std::invalid_argument);
}

TEST_CASE("catalog serialization round trip")
{
    const auto& cat = builtin_catalog();
    std::stringstream buf;
    write_catalog(buf, cat);

    const auto back = read_catalog(buf);
    REQUIRE(back.size() == cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
        CHECK(back[i].name == cat[i].name);
        CHECK(back[i].transition == cat[i].transition);
        CHECK(back[i].mu_gg == doctest::Approx(cat[i].mu_gg));
        CHECK(back[i].mu_ee == doctest::Approx(cat[i].mu_ee));
        CHECK(back[i].mu_ge == doctest::Approx(cat[i].mu_ge));
        CHECK(back[i].omega0_cm == doctest::Approx(cat[i].omega0_cm));
    }
}

TEST_CASE("catalog files: comments, header and file IO")
{
    std::stringstream in;
    in << "# test catalog\n"
       << "name,transition,mu_gg,mu_ee,mu_ge,omega0_cm\n"
       << "# inline comment\n"
       << "Foo,(a-b),1.0,2.0,3.0,10000\n";
    const auto recs = read_catalog(in);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].name == "Foo");
    CHECK(recs[0].mu_ee == doctest::Approx(2.0));

    const auto path = std::filesystem::temp_directory_path() / "pmqed_cat_test.csv";
    write_catalog_file(path.string(), builtin_catalog());
    const auto loaded = read_catalog_file(path.string());
    CHECK(loaded.size() == builtin_catalog().size());
    std::filesystem::remove(path);

    CHECK_THROWS(read_catalog_file("/nonexistent/pmqed.csv"));
}
