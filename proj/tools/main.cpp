// Command-line front end: exact orbifold Hodge polynomials and generating
// series for wreath product quotients, Hilbert scheme comparisons, and the
// second-quantized elliptic genus expansion.
//
// Exit codes: 0 success / all comparisons equal, 1 verification mismatch,
// 2 malformed input or arguments.

#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wreath/elliptic.hpp"
#include "wreath/error.hpp"
#include "wreath/fixtures.hpp"
#include "wreath/group.hpp"
#include "wreath/hilbert.hpp"
#include "wreath/json_io.hpp"
#include "wreath/orbifold.hpp"
#include "wreath/selftest.hpp"
#include "wreath/wreath_types.hpp"

using namespace wreath;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

void print_series(std::ostream& os, const SeriesQ& s, bool euler) {
    for (int q = 0; q <= s.qmax(); ++q) {
        os << "  q^" << q << ": " << s.coeff(q).str() << "\n";
        if (euler) os << "  q^" << q << " at x=y=1: " << s.coeff(q).eval_pm(1, 1).str() << "\n";
    }
}

json type_json(const FiniteGroup& G, const WreathType& t) {
    json arr = json::array();
    for (int c = 0; c < G.num_classes(); ++c) {
        auto parts = t.parts_of(c);
        if (parts.empty()) continue;
        arr.push_back({{"class", G.classes()[c].rep}, {"parts", parts}});
    }
    return arr;
}

struct ClassesOptions {
    std::string group_path;
    int n = 1;
    long long cap = kDefaultElementCap;
    bool as_json = false;
};

int run_classes(const ClassesOptions& opt) {
    FiniteGroup G = load_group_file(opt.group_path);
    WreathGroup W = build_wreath(G, opt.n, opt.cap);

    if (opt.as_json) {
        json classes = json::array();
        for (const auto& cls : W.group.classes()) {
            WreathType t = type_of(G, W.elements[cls.rep]);
            classes.push_back({{"rep", cls.rep},
                               {"element", W.elements[cls.rep].str()},
                               {"size", cls.members.size()},
                               {"centralizer", cls.centralizer_order},
                               {"type", type_json(G, t)}});
        }
        json out = {{"group", W.group.name()},
                    {"order", W.group.order()},
                    {"classes", classes}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "group " << W.group.name() << ": order " << W.group.order() << ", "
              << W.group.num_classes() << " conjugacy classes\n";
    std::cout << std::left << std::setw(8) << "rep" << std::setw(28) << "element" << std::setw(8)
              << "size" << std::setw(10) << "|Z|" << "type\n";
    for (const auto& cls : W.group.classes()) {
        WreathType t = type_of(G, W.elements[cls.rep]);
        std::cout << std::left << std::setw(8) << cls.rep << std::setw(28)
                  << W.elements[cls.rep].str() << std::setw(8) << cls.members.size()
                  << std::setw(10) << cls.centralizer_order << t.str(G) << "\n";
    }
    return kExitOk;
}

struct HodgeOptions {
    std::string path;
    int qmax = 4;
    bool direct = false, product = false, both = false;
    bool euler = false;
    bool as_json = false;
};

int run_hodge(const HodgeOptions& opt) {
    OrbifoldData o = load_orbifold_file(opt.path);
    BigradedPoly h = orbifold_hodge_poly(o);

    bool want_product = opt.product || opt.both || !opt.direct;
    bool want_direct = opt.direct || opt.both;

    SeriesQ product(opt.qmax, 0), direct(opt.qmax, 0);
    if (want_product) product = wreath_series_product(o, opt.qmax);
    if (want_direct) direct = wreath_series_direct(o, opt.qmax);

    if (opt.as_json) {
        json out = {{"name", o.name()}, {"dim", o.dim()}, {"hodge", poly_to_json_terms(h)}};
        if (want_product) out["product"] = series_to_json(product);
        if (want_direct) out["direct"] = series_to_json(direct);
        if (opt.euler && want_product) {
            json euler = json::array();
            for (int q = 0; q <= opt.qmax; ++q)
                euler.push_back(product.coeff(q).eval_pm(1, 1).str());
            out["euler"] = euler;
        }
        std::cout << out.dump(2) << "\n";
        if (opt.both && product != direct) return kExitMismatch;
        return kExitOk;
    }

    std::cout << "orbifold " << o.name() << " (dim " << o.dim() << ")\n";
    std::cout << "h(Y,G; x,y) = " << h.str() << "\n";
    if (want_product) {
        std::cout << "wreath series, product form, to q^" << opt.qmax << ":\n";
        print_series(std::cout, product, opt.euler);
    }
    if (want_direct) {
        std::cout << "wreath series, direct summation, to q^" << opt.qmax << ":\n";
        print_series(std::cout, direct, opt.euler);
    }
    if (opt.both) {
        bool all_equal = true;
        for (int q = 0; q <= opt.qmax; ++q) {
            std::string diff = first_poly_diff(product.coeff(q), direct.coeff(q));
            std::cout << "diff q^" << q << ": " << (diff.empty() ? "match" : diff) << "\n";
            if (!diff.empty()) all_equal = false;
        }
        if (!all_equal) return kExitMismatch;
    }
    return kExitOk;
}

struct HilbertOptions {
    std::string path;
    int qmax = 4;
    bool euler = false;
    bool as_json = false;
};

int run_hilbert(const HilbertOptions& opt) {
    SurfaceHodge X = load_surface_file(opt.path);
    SeriesQ s = goettsche_series(X, opt.qmax);
    if (opt.as_json) {
        json out = {{"name", X.name}, {"compact", X.compact}, {"series", series_to_json(s)}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "surface " << X.name << (X.compact ? " (compact)" : " (virtual)") << "\n";
    std::cout << "hilbert scheme series to q^" << opt.qmax << ":\n";
    print_series(std::cout, s, opt.euler);
    return kExitOk;
}

struct VerifyOptions {
    std::string orbifold_path, resolution_path;
    int qmax = 4;
    bool cor1 = false;
};

int run_verify(const VerifyOptions& opt) {
    OrbifoldData o = load_orbifold_file(opt.orbifold_path);
    CompareReport rep;
    if (opt.cor1) {
        OrbifoldData x = load_orbifold_file(opt.resolution_path);
        rep = verify_cor1(o, x, opt.qmax);
    } else {
        SurfaceHodge x = load_surface_file(opt.resolution_path);
        rep = verify_samehodge(o, x, opt.qmax);
    }
    std::cout << rep.str();
    std::cout << (rep.passed() ? "verified: all compared coefficients equal\n"
                               : "verification FAILED\n");
    return rep.passed() ? kExitOk : kExitMismatch;
}

struct EllipticOptions {
    std::string path;
    int pmax = 4;
    int qmax = 4;
    std::string q0_check_path;
    bool as_json = false;
};

int run_elliptic(const EllipticOptions& opt) {
    GenusTable T = load_genus_file(opt.path);
    SeriesQ s = dmvv_expand(T, opt.pmax, opt.qmax);

    if (opt.as_json) {
        json out = {{"name", T.name}, {"d", T.d}, {"series", series_to_json(s)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "genus table " << T.name << " (d=" << T.d << ", rows to q^" << T.qmax_in
                  << ")\n";
        std::cout << "second-quantized expansion to p^" << opt.pmax << ", q^" << opt.qmax << ":\n";
        for (int p = 0; p <= opt.pmax; ++p)
            for (int q = 0; q <= opt.qmax; ++q) {
                const BigradedPoly& c = s.coeff(q, p);
                if (c.is_zero() && !(p == 0 && q == 0)) continue;
                std::cout << "  p^" << p << " q^" << q << ": " << c.str() << "\n";
            }
    }

    if (!opt.q0_check_path.empty()) {
        OrbifoldData o = load_orbifold_file(opt.q0_check_path);
        CompareReport rep = verify_q0_consistency(o, opt.pmax);
        std::cout << rep.str();
        std::cout << (rep.passed() ? "q=0 consistency verified\n" : "q=0 consistency FAILED\n");
        if (!rep.passed()) return kExitMismatch;
    }
    return kExitOk;
}

int run_selftest_cmd() {
    auto results = run_selftest();
    bool all_ok = true;
    for (const auto& r : results) {
        std::cout << (r.ok ? "ok   " : "FAIL ") << std::left << std::setw(36) << r.name
                  << std::fixed << std::setprecision(2) << r.seconds << " s\n";
        if (!r.ok) {
            all_ok = false;
            std::cout << "     first counterexample: " << r.detail << "\n";
        }
    }
    return all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact orbifold Hodge series for wreath product quotients"};
    app.require_subcommand(1);

    ClassesOptions classes_opt;
    CLI::App* classes = app.add_subcommand("classes", "conjugacy class table of G wr S_n");
    classes->add_option("--group", classes_opt.group_path, "group JSON file")->required();
    classes->add_option("--n", classes_opt.n, "wreath power (default 1)");
    classes->add_option("--cap", classes_opt.cap, "element count cap");
    classes->add_flag("--json", classes_opt.as_json, "JSON output");

    HodgeOptions hodge_opt;
    CLI::App* hodge = app.add_subcommand("hodge", "orbifold Hodge polynomial and wreath series");
    hodge->add_option("file", hodge_opt.path, "orbifold JSON file")->required();
    hodge->add_option("--qmax", hodge_opt.qmax, "truncation degree (default 4)");
    hodge->add_flag("--product", hodge_opt.product, "closed product form (default)");
    hodge->add_flag("--direct", hodge_opt.direct, "direct summation over types");
    hodge->add_flag("--both", hodge_opt.both, "both forms plus a per-degree diff");
    hodge->add_flag("--euler", hodge_opt.euler, "also print the x=y=1 specialization");
    hodge->add_flag("--json", hodge_opt.as_json, "JSON output");

    HilbertOptions hilbert_opt;
    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert scheme Hodge series of a surface");
    hilbert->add_option("file", hilbert_opt.path, "surface JSON file")->required();
    hilbert->add_option("--qmax", hilbert_opt.qmax, "truncation degree (default 4)");
    hilbert->add_flag("--euler", hilbert_opt.euler, "also print the x=y=1 specialization");
    hilbert->add_flag("--json", hilbert_opt.as_json, "JSON output");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "compare orbifold and resolution series");
    verify->add_option("--orbifold", verify_opt.orbifold_path, "orbifold JSON file")->required();
    verify->add_option("--resolution", verify_opt.resolution_path,
                       "surface JSON file (orbifold JSON with --cor1)")->required();
    verify->add_option("--qmax", verify_opt.qmax, "truncation degree (default 4)");
    verify->add_flag("--cor1", verify_opt.cor1,
                     "higher-dimensional comparison against a trivially twisted orbifold");

    EllipticOptions elliptic_opt;
    CLI::App* elliptic = app.add_subcommand("elliptic", "second-quantized elliptic genus product");
    elliptic->add_option("file", elliptic_opt.path, "genus table JSON file")->required();
    elliptic->add_option("--pmax", elliptic_opt.pmax, "p truncation (default 4)");
    elliptic->add_option("--qmax", elliptic_opt.qmax, "q truncation (default 4)");
    elliptic->add_option("--q0-check", elliptic_opt.q0_check_path,
                         "orbifold JSON file for the q=0 consistency check");
    elliptic->add_flag("--json", elliptic_opt.as_json, "JSON output");

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in verification sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (classes->parsed()) return run_classes(classes_opt);
        if (hodge->parsed()) return run_hodge(hodge_opt);
        if (hilbert->parsed()) return run_hilbert(hilbert_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        if (elliptic->parsed()) return run_elliptic(elliptic_opt);
        if (selftest->parsed()) return run_selftest_cmd();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
