// symprod: command-line front end.
//
//   symprod series <kind> --manifold PATH [--order N] [--mode brute|closed|both]
//   symprod fock-verify --manifold PATH [--max-charge L]
//   symprod verify-all --manifold PATH [--order N]
//   symprod catalog list
//   symprod kinds
//
// Exit codes: 0 all checks pass, 1 verification mismatch, 2 input/usage error.

#include <symprod/symprod.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace symprod;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

int print_checks(const std::vector<CheckResult>& checks) {
    int failed = 0;
    for (const auto& c : checks) {
        std::cout << status_str(c.status) << "  " << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
        if (c.status == CheckStatus::fail) ++failed;
    }
    std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << "\n";
    return failed == 0 ? kOk : kMismatch;
}

int cmd_series(const std::string& kind_name, const std::string& manifold, std::optional<int> order_opt,
               const std::string& mode) {
    const auto kind = parse_kind(kind_name);
    if (!kind) throw UsageError("unknown series kind " + kind_name + " (see `symprod kinds`)");
    if (order_opt && *order_opt < 0) throw UsageError("order must be nonnegative");
    const ManifoldData x = load_manifold(manifold);
    const int order = order_opt.value_or(default_order(*kind, x));
    std::cout << "series " << kind_name << " --manifold " << x.name << " --order " << order << " --mode " << mode
              << "\n";

    if (mode == "brute") {
        const Series s = brute_series(*kind, x, order);
        std::cout << s.str() << "\n";
        return kOk;
    }
    if (mode == "closed") {
        const Series s = closed_series(*kind, x, order);
        std::cout << s.str() << "\n";
        if (!s.is_integral()) {
            std::cout << "non-integral coefficients\n";
            return kMismatch;
        }
        return kOk;
    }
    const VerifyResult r = verify(*kind, x, order);
    std::cout << "brute:  " << r.brute.str() << "\n";
    std::cout << "closed: " << r.closed.str() << "\n";
    if (!r.equal) {
        const Monomial& m = *r.first_difference;
        std::cout << "verdict: mismatch at " << to_string(m, r.brute.trunc_var()) << " (brute "
                  << to_string(r.brute.coeff(m)) << ", closed " << to_string(r.closed.coeff(m)) << ")\n";
        return kMismatch;
    }
    if (!r.integral) {
        std::cout << "verdict: equal but non-integral\n";
        return kMismatch;
    }
    std::cout << "verdict: equal\n";
    return kOk;
}

int cmd_fock_verify(const std::string& manifold, int max_charge) {
    if (max_charge < 0) throw UsageError("max-charge must be nonnegative");
    const ManifoldData x = load_manifold(manifold);
    std::cout << "fock-verify --manifold " << x.name << " --max-charge " << max_charge << "\n";
    return print_checks(check_relations(x, max_charge));
}

int cmd_verify_all(const std::string& manifold, std::optional<int> order) {
    if (order && *order < 0) throw UsageError("order must be nonnegative");
    const ManifoldData x = load_manifold(manifold);
    std::cout << "verify-all --manifold " << x.name;
    if (order) std::cout << " --order " << *order;
    std::cout << "\n";
    return print_checks(verify_all(x, order));
}

int cmd_catalog_list() {
    for (const auto& name : catalog_names()) {
        const ManifoldData x = load_catalog(name);
        std::cout << name << "  " << x.name << "  dim_real=" << x.dim_real;
        if (x.dim_c) std::cout << " dim_c=" << *x.dim_c;
        if (x.calabi_yau) std::cout << " calabi_yau";
        std::cout << "\n";
    }
    return kOk;
}

int cmd_kinds() {
    for (const auto& info : kKinds)
        std::cout << info.name << "\n  brute:  " << info.lhs << "\n  closed: " << info.formula << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orbifold cohomology of symmetric products: generating functions and Fock space"};
    app.require_subcommand(1);

    std::string kind, manifold, mode = "closed";
    std::optional<int> order_opt;
    int max_charge = 3;

    auto* series = app.add_subcommand("series", "Print a generating series");
    series->add_option("kind", kind, "Series kind")->required();
    series->add_option("--manifold", manifold, "Manifold file or catalog name")->required();
    series->add_option("--order", order_opt, "Truncation order (default: per kind)");
    series->add_option("--mode", mode, "brute, closed or both")->check(CLI::IsMember({"brute", "closed", "both"}));

    auto* fock = app.add_subcommand("fock-verify", "Check the Heisenberg relations on the truncated Fock space");
    fock->add_option("--manifold", manifold, "Manifold file or catalog name")->required();
    fock->add_option("--max-charge", max_charge, "Truncation charge");

    auto* all = app.add_subcommand("verify-all", "Run every applicable series check");
    all->add_option("--manifold", manifold, "Manifold file or catalog name")->required();
    all->add_option("--order", order_opt, "Truncation order (default: per kind)");

    auto* catalog = app.add_subcommand("catalog", "Bundled manifolds");
    catalog->add_subcommand("list", "List catalog entries");
    catalog->require_subcommand(1);

    auto* kinds = app.add_subcommand("kinds", "List series kinds and their formulas");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*series) return cmd_series(kind, manifold, order_opt, mode);
        if (*fock) return cmd_fock_verify(manifold, max_charge);
        if (*all) return cmd_verify_all(manifold, order_opt);
        if (*catalog) return cmd_catalog_list();
        if (*kinds) return cmd_kinds();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
