#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace symprod;
using namespace symprod::testing;
using nlohmann::json;

namespace {

TEST(ManifoldJson, K3DerivesBettiAndBTable) {
    const ManifoldData x = manifold_from_json(json::parse(R"({"name":"K3","dim_c":2,"hodge":[[1,0,1],[0,20,0],[1,0,1]],"calabi_yau":true})"));
    EXPECT_EQ(x.betti, GradedDims::from_betti({1, 0, 22, 0, 1}));
    EXPECT_EQ(x.dim_real, 4);
    EXPECT_TRUE(x.is_complex());
    ASSERT_TRUE(x.hodgeB);
    EXPECT_EQ(*x.hodgeB, *x.hodge);
}

TEST(ManifoldJson, Point) {
    const ManifoldData x = manifold_from_json(json::parse(R"({"name":"pt","dim_c":0,"hodge":[[1]]})"));
    EXPECT_EQ(x.betti, GradedDims::from_betti({1}));
    EXPECT_EQ(x.euler(), 1);
}

TEST(ManifoldJson, RealManifold) {
    const ManifoldData x = manifold_from_json(json::parse(R"({"name":"S4","dim_real":4,"betti":[1,0,0,0,1]})"));
    EXPECT_FALSE(x.is_complex());
    EXPECT_FALSE(x.hodge);
    EXPECT_TRUE(x.satisfies_poincare_duality());
}

TEST(ManifoldJson, Errors) {
    for (const char* text : {
             R"({"name":"a","dim_c":2,"hodge":[[1,0,1],[0,20,0],[1,0,1]],"betti":[1,0,21,0,1]})",  // betti consistency
             R"({"name":"b","dim_c":1,"hodge":[[1,0],[0]]})",                                       // ragged
             R"({"name":"c","dim_real":3,"betti":[1,0,0,1]})",                                      // odd dimension
             R"({"name":"d","dim_real":2,"betti":[1,0,1,1]})",                                      // degree out of range
             R"({"name":"e","dim_c":1})",                                                           // no data
             R"({"name":"f","dim_real":4,"hodge":[[1]]})",                                          // hodge without dim_c
             R"({"name":"g","dim_c":1,"dim_real":4,"hodge":[[1,0],[0,1]]})",                        // inconsistent dims
             R"({"name":"h","dim_c":1,"hodge":[[1,-1],[0,1]]})",                                    // negative
             R"([1,2,3])",
         }) {
        EXPECT_THROW(manifold_from_json(json::parse(text)), InputError) << text;
    }
}

TEST(ManifoldJson, PairingBlocks) {
    const ManifoldData x = manifold_from_json(json::parse(
        R"({"name":"P1xP1","dim_c":2,"hodge":[[1,0,0],[0,2,0],[0,0,1]],
            "pairing":[{"degree":0,"matrix":[[1]]},{"degree":2,"matrix":[[0,"1/1"],[1,0]]}]})"));
    ASSERT_TRUE(x.pairing);
    EXPECT_EQ(x.pairing->size(), 2u);
    EXPECT_EQ(manifold_pairing(x)(1, 2), 1);
    EXPECT_THROW(manifold_from_json(json::parse(
                     R"({"name":"bad","dim_c":0,"hodge":[[1]],"pairing":[{"degree":0,"matrix":[["x"]]}]})")),
                 InputError);
}

TEST(Catalog, ListsEightManifolds) {
    EXPECT_EQ(catalog_names(), catalog_list());
    for (const auto& name : catalog_names()) EXPECT_NO_THROW(load_catalog(name)) << name;
    EXPECT_THROW(load_catalog("enriques"), InputError);
}

TEST(Catalog, EntriesHaveExpectedInvariants) {
    EXPECT_EQ(catalog("p1").euler(), 2);
    EXPECT_EQ(catalog("elliptic").euler(), 0);
    EXPECT_EQ(catalog("genus2").euler(), -2);
    EXPECT_EQ(catalog("p2").euler(), 3);
    EXPECT_EQ(catalog("k3").euler(), 24);
    EXPECT_EQ(catalog("abelian_surface").euler(), 0);
    EXPECT_EQ(catalog("p1xp1").euler(), 4);
    EXPECT_EQ(catalog("point").euler(), 1);
    for (const char* cy : {"elliptic", "k3", "abelian_surface"}) EXPECT_TRUE(catalog(cy).calabi_yau) << cy;
    for (const auto& name : catalog_list()) EXPECT_TRUE(catalog(name.c_str()).satisfies_poincare_duality()) << name;
}

TEST(Catalog, EnvironmentOverride) {
    const auto dir = std::filesystem::temp_directory_path() / "symprod_catalog_test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "only.json") << R"({"name":"only","dim_c":0,"hodge":[[1]]})";
    setenv("SYMPROD_CATALOG", dir.c_str(), 1);
    EXPECT_EQ(catalog_names(), std::vector<std::string>{"only"});
    EXPECT_EQ(load_manifold("only").name, "only");
    unsetenv("SYMPROD_CATALOG");
    std::filesystem::remove_all(dir);
    EXPECT_EQ(catalog_names().size(), 8u);
}

TEST(LoadManifold, PathOrName) {
    const auto path = std::filesystem::path(SYMPROD_CATALOG_DIR) / "k3.json";
    EXPECT_EQ(load_manifold(path.string()).name, "K3");
    EXPECT_EQ(load_manifold("k3").name, "K3");
    EXPECT_THROW(load_manifold("/nonexistent/x.json"), InputError);
    const auto bad = std::filesystem::temp_directory_path() / "symprod_bad.json";
    std::ofstream(bad) << "{ not json";
    EXPECT_THROW(load_manifold_file(bad), InputError);
    std::filesystem::remove(bad);
}

} // namespace
