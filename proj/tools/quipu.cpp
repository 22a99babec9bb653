// Command-line front end: exact charpolys, high-precision radii, family and
// brute-force minimizer searches, certificates and limit tables.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <nlohmann/json.hpp>

#include "quipu/charpoly.hpp"
#include "quipu/families.hpp"
#include "quipu/report.hpp"
#include "quipu/spectral.hpp"
#include "quipu/verify.hpp"

using namespace quipu;

namespace {

enum ExitCode { EXIT_OK = 0, EXIT_CHECK_FAILED = 1, EXIT_PARSE = 2, EXIT_NUMERIC = 3 };

struct Options {
    unsigned precision = 100;
    std::string tol_text = "1e-40";
    std::string format = "plain"; // plain | json | csv
    int cap = 18;
    bool full = false;
    std::string family = "P";
};

unsigned print_digits(const Options& opt) {
    return opt.full ? working_precision() : std::min<unsigned>(working_precision(), 50);
}

Scalar parse_tol(const Options& opt) {
    Scalar t(opt.tol_text);
    Scalar floor_t = pow(Scalar(10), -static_cast<int>(working_precision()) + 20);
    if (t < floor_t)
        throw std::runtime_error("tolerance " + opt.tol_text + " is unreachable at " +
                                 std::to_string(working_precision()) + " digits");
    return t;
}

// A tree argument is either an edge-list file path or a k-vector string.
Tree tree_from_arg(const std::string& arg) {
    if (std::filesystem::exists(arg))
        return read_edge_list_file(arg);
    return from_kvector(KVector::parse(arg));
}

int cmd_charpoly(const Options& opt, const std::string& input) {
    Tree t = tree_from_arg(input);
    IntPolynomial phi = charpoly_tree(t);
    if (opt.format == "json")
        std::cout << phi.to_json() << "\n";
    else
        std::cout << phi.pretty("x") << "\n";
    return EXIT_OK;
}

int cmd_rho(const Options& opt, const std::string& input) {
    Tree t = tree_from_arg(input);
    SpectralResult r = rho_tree(t, parse_tol(opt));
    if (opt.format == "json")
        std::cout << r.to_json(print_digits(opt)) << "\n";
    else
        std::cout << to_decimal(r.value, print_digits(opt)) << "\n";
    return EXIT_OK;
}

int cmd_family_min(const Options& opt, int n, int e, bool all_ties) {
    MinimizerReport rep = family_min(n, e, family_from_name(opt.family), parse_tol(opt));
    if (opt.format == "json") {
        std::cout << rep.to_json(print_digits(opt)) << "\n";
    } else if (opt.format == "csv") {
        std::cout << MinimizerReport::csv_header() << "\n" << rep.csv_row(print_digits(opt)) << "\n";
    } else {
        std::cout << "n=" << n << " e=" << e << " D=" << rep.diam << "\n";
        size_t shown = all_ties ? rep.argmin.size() : 1;
        for (size_t i = 0; i < shown && i < rep.argmin.size(); ++i)
            std::cout << "argmin " << rep.argmin[i].str() << "\n";
        if (!all_ties && rep.argmin.size() > 1)
            std::cout << "(" << rep.argmin.size() << " members tie)\n";
        std::cout << "rho " << to_decimal(rep.rho.value, print_digits(opt)) << "\n";
    }
    return EXIT_OK;
}

int cmd_brute_min(const Options& opt, int n, int diam, const std::string& scope) {
    SearchScope sc = scope == "graphs" ? SearchScope::AllGraphsSmall : SearchScope::AllTrees;
    MinimizerReport rep = brute_min(n, diam, parse_tol(opt), sc, opt.cap);
    if (opt.format == "json") {
        std::cout << rep.to_json(print_digits(opt)) << "\n";
    } else if (opt.format == "csv") {
        std::cout << MinimizerReport::csv_header() << "\n" << rep.csv_row(print_digits(opt)) << "\n";
    } else {
        std::cout << "n=" << n << " D=" << diam << " scope=" << scope_name(rep.scope) << "\n";
        for (const auto& code : rep.argmin_codes)
            std::cout << "argmin " << code << "\n";
        std::cout << "rho " << to_decimal(rep.rho.value, print_digits(opt)) << "\n";
    }
    return EXIT_OK;
}

int cmd_verify(const Options& opt, int n, int e, const std::string& kv_text) {
    std::vector<KVector> targets;
    if (!kv_text.empty()) {
        targets.push_back(KVector::parse(kv_text));
    } else {
        targets = family_min(n, e, FamilyId::P, parse_tol(opt)).argmin;
    }
    bool all_ok = true;
    for (const auto& kv : targets) {
        CertificateReport rep = certify_minimizer(n, e, kv, parse_tol(opt));
        all_ok = all_ok && rep.all_satisfied();
        if (opt.format == "json") {
            std::cout << rep.to_json(print_digits(opt)) << "\n";
        } else {
            std::cout << kv.str() << " rho=" << to_decimal(rep.rho.value, print_digits(opt))
                      << (rep.all_satisfied() ? " certificate-ok" : " certificate-FAILED") << "\n";
            for (const auto& c : rep.checks)
                if (!c.satisfied && !c.diagnostic)
                    std::cout << "  failed " << c.id << "[" << c.index
                              << "] slack=" << to_decimal(c.slack, 20) << "\n";
        }
    }
    return all_ok ? EXIT_OK : EXIT_CHECK_FAILED;
}

int cmd_limits(const Options& opt, const std::string& kind_text, long k, std::vector<long> sizes) {
    LimitSeries kind;
    if (kind_text == "double-prime")
        kind = LimitSeries::DoublePrimeIKJ;
    else if (kind_text == "prime")
        kind = LimitSeries::PrimeKJ;
    else if (kind_text == "two-gap-swap")
        kind = LimitSeries::CorollaryKI;
    else
        throw std::invalid_argument("limit kind must be double-prime, prime or two-gap-swap");
    if (sizes.empty())
        sizes = {10, 20, 40};
    LimitTable table = limit_convergence(kind, k, sizes, parse_tol(opt));
    if (opt.format == "json")
        std::cout << table.to_json(print_digits(opt)) << "\n";
    else
        std::cout << table.to_csv(print_digits(opt));
    return EXIT_OK;
}

int cmd_table(const Options& opt, int e, int n_lo, int n_hi) {
    auto rows = reproduction_table(e, n_lo, n_hi, parse_tol(opt));
    if (opt.format == "json")
        std::cout << table_to_json(rows, print_digits(opt)) << "\n";
    else
        std::cout << table_to_csv(rows, print_digits(opt));
    for (const auto& r : rows)
        if (r.has_prediction && !r.match)
            return EXIT_CHECK_FAILED;
    return EXIT_OK;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"spectral radius toolkit for trees of given order and diameter"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--precision", opt.precision, "working precision in decimal digits")
        ->envname("QUIPU_PRECISION")
        ->check(CLI::Range(30u, 100000u));
    app.add_option("--tol", opt.tol_text, "root-solving tolerance (default 1e-40)");
    app.add_option("--format", opt.format, "output format: plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--cap", opt.cap, "enumeration cap for brute-force searches");
    app.add_flag("--full", opt.full, "print scalars at full working precision");
    app.add_option("--family", opt.family, "family for family-min: P, P1 or P2")
        ->check(CLI::IsMember({"P", "P1", "P2"}));

    std::string input, kv_text, scope = "trees", kind_text;
    int n = 0, e = 0, diam = 0, n_lo = 0, n_hi = 0;
    long k = 0;
    bool all_ties = true;
    std::vector<long> sizes;

    auto* c_charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial");
    c_charpoly->add_option("input", input, "edge-list file or k-vector like P:e=6:k=3,4")->required();

    auto* c_rho = app.add_subcommand("rho", "spectral radius of a tree");
    c_rho->add_option("input", input)->required();

    auto* c_fmin = app.add_subcommand("family-min", "minimal-radius members of a family");
    c_fmin->add_option("n", n)->required();
    c_fmin->add_option("e", e)->required();
    c_fmin->add_flag("--all-ties,!--no-all-ties", all_ties, "list every tied argmin (default on)");

    auto* c_bmin = app.add_subcommand("brute-min", "minimizer over all trees of order n, diameter D");
    c_bmin->add_option("n", n)->required();
    c_bmin->add_option("D", diam)->required();
    c_bmin->add_option("--scope", scope)->check(CLI::IsMember({"trees", "graphs"}));

    auto* c_verify = app.add_subcommand("verify", "inequality certificate at the family minimizer");
    c_verify->add_option("n", n)->required();
    c_verify->add_option("e", e)->required();
    c_verify->add_option("kvector", kv_text, "certify this member instead of the searched minimum");

    auto* c_limits = app.add_subcommand("limits", "limit-radius convergence table");
    c_limits->add_option("kind", kind_text, "double-prime, prime or two-gap-swap")->required();
    c_limits->add_option("k", k)->required();
    c_limits->add_option("--sizes", sizes, "increasing sizes (default 10 20 40)");

    auto* c_table = app.add_subcommand("table", "prediction-vs-search table for e in {6,7,8}");
    c_table->add_option("e", e)->required();
    c_table->add_option("n_lo", n_lo)->required();
    c_table->add_option("n_hi", n_hi)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? EXIT_OK : EXIT_PARSE;
    }

    try {
        set_precision(opt.precision);
        if (c_charpoly->parsed())
            return cmd_charpoly(opt, input);
        if (c_rho->parsed())
            return cmd_rho(opt, input);
        if (c_fmin->parsed())
            return cmd_family_min(opt, n, e, all_ties);
        if (c_bmin->parsed())
            return cmd_brute_min(opt, n, diam, scope);
        if (c_verify->parsed())
            return cmd_verify(opt, n, e, kv_text);
        if (c_limits->parsed())
            return cmd_limits(opt, kind_text, k, sizes);
        if (c_table->parsed())
            return cmd_table(opt, e, n_lo, n_hi);
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return EXIT_PARSE;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return EXIT_NUMERIC;
    }
    return EXIT_PARSE;
}
