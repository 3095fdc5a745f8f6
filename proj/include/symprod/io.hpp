#pragma once

// Manifold files (JSON) and the bundled catalog.

#include <symprod/errors.hpp>
#include <symprod/manifold.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace symprod {

namespace detail {

using nlohmann::json;

inline Rational json_rational(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
        try {
            Rational r(v.get<std::string>());
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
        }
    }
    throw InputError("pairing entry must be an integer or a \"a/b\" string, got " + v.dump());
}

inline std::vector<std::vector<std::int64_t>> json_table(const json& v, const char* what) {
    if (!v.is_array()) throw InputError(std::string(what) + " must be an array of rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : v) {
        if (!row.is_array()) throw InputError(std::string(what) + " must be an array of rows");
        std::vector<std::int64_t> r;
        for (const auto& e : row) {
            if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
                throw InputError(std::string(what) + " entries must be nonnegative integers");
            r.push_back(e.get<std::int64_t>());
        }
        if (!rows.empty() && r.size() != rows.front().size())
            throw InputError(std::string(what) + " must be rectangular");
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace detail

/// Builds ManifoldData from the JSON schema
/// {name, dim_c?, dim_real?, betti?, hodge?, hodgeB?, calabi_yau?, pairing?}.
inline ManifoldData manifold_from_json(const nlohmann::json& j) {
    using detail::json;
    if (!j.is_object()) throw InputError("manifold file must hold a JSON object");
    ManifoldData x;
    x.name = j.value("name", std::string("unnamed"));

    if (j.contains("dim_c")) {
        if (!j["dim_c"].is_number_integer() || j["dim_c"].get<int>() < 0)
            throw InputError(x.name + ": dim_c must be a nonnegative integer");
        x.kind = ManifoldKind::complex;
        x.dim_c = j["dim_c"].get<int>();
        x.dim_real = 2 * *x.dim_c;
        if (j.contains("dim_real") && j["dim_real"] != x.dim_real)
            throw InputError(x.name + ": dim_real must equal 2*dim_c");
    } else {
        if (!j.contains("dim_real") || !j["dim_real"].is_number_integer())
            throw InputError(x.name + ": dim_real required when dim_c is absent");
        x.dim_real = j["dim_real"].get<int>();
    }

    if (j.contains("hodge")) {
        if (!x.dim_c) throw InputError(x.name + ": hodge table needs dim_c");
        x.hodge = BigradedDims::from_table(detail::json_table(j["hodge"], "hodge"));
    }
    if (j.contains("hodgeB")) {
        if (!x.dim_c) throw InputError(x.name + ": hodgeB table needs dim_c");
        x.hodgeB = BigradedDims::from_table(detail::json_table(j["hodgeB"], "hodgeB"));
    }
    if (j.contains("betti")) {
        if (!j["betti"].is_array()) throw InputError(x.name + ": betti must be an array");
        std::vector<std::int64_t> b;
        for (const auto& e : j["betti"]) {
            if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
                throw InputError(x.name + ": Betti numbers must be nonnegative integers");
            b.push_back(e.get<std::int64_t>());
        }
        x.betti = GradedDims::from_betti(b);
    } else if (x.hodge) {
        x.betti = x.hodge->total_degree();
    } else {
        throw InputError(x.name + ": one of betti or hodge is required");
    }

    x.calabi_yau = j.value("calabi_yau", false);
    if (x.calabi_yau && !x.hodgeB) x.hodgeB = derive_B_table(x);

    if (j.contains("pairing")) {
        std::vector<PairingBlock> blocks;
        for (const auto& b : j["pairing"]) {
            if (!b.contains("degree") || !b.contains("matrix"))
                throw InputError(x.name + ": pairing blocks need degree and matrix");
            PairingBlock block{b["degree"].get<int>(), {}};
            for (const auto& row : b["matrix"]) {
                std::vector<Rational> r;
                for (const auto& e : row) r.push_back(detail::json_rational(e));
                block.matrix.push_back(std::move(r));
            }
            blocks.push_back(std::move(block));
        }
        x.pairing = std::move(blocks);
    }

    x.validate();
    return x;
}

inline ManifoldData load_manifold_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open manifold file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path.string() + ": " + e.what());
    }
    try {
        return manifold_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

/// SYMPROD_CATALOG if set, else the directory compiled in as SYMPROD_CATALOG_DIR.
inline std::filesystem::path catalog_dir() {
    if (const char* env = std::getenv("SYMPROD_CATALOG"); env && *env) return env;
#ifdef SYMPROD_CATALOG_DIR
    return SYMPROD_CATALOG_DIR;
#else
    return "catalog";
#endif
}

/// Catalog entry names (file stems), sorted.
inline std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    const auto dir = catalog_dir();
    if (!std::filesystem::is_directory(dir)) throw InputError("catalog directory " + dir.string() + " not found");
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".json") names.push_back(entry.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

inline ManifoldData load_catalog(const std::string& name) {
    const auto path = catalog_dir() / (name + ".json");
    if (!std::filesystem::exists(path)) throw InputError("no catalog entry named " + name);
    return load_manifold_file(path);
}

/// A path to a file, or failing that a catalog name.
inline ManifoldData load_manifold(const std::string& where) {
    if (std::filesystem::is_regular_file(where)) return load_manifold_file(where);
    const auto path = catalog_dir() / (where + ".json");
    if (std::filesystem::is_regular_file(path)) return load_manifold_file(path);
    throw InputError("no manifold file or catalog entry " + where);
}

} // namespace symprod
