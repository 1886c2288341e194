#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liext/catalog.hpp"
#include "liext/enumerate.hpp"
#include "liext/extending.hpp"
#include "liext/io.hpp"
#include "liext/twder.hpp"

using namespace liext;

namespace {

/// Distinguishes bad input (exit 2) from a failed mathematical verdict
/// (exit 1). Everything thrown while arguments and files are being loaded is
/// wrapped into this type.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Runs the input-loading part of a verb; any library error here is the
/// user's input's fault.
template <typename Fn>
auto load(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

struct GlobalOptions {
    std::string format = "plain";
    std::string field = "Q";
    std::uint64_t seed = 12345;  // reserved for randomized subcommands

    bool machine() const { return format == "machine"; }
    FieldSpec field_spec() const {
        return load([&] { return FieldSpec::parse(field); });
    }
};

std::string coords(const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ' ';
        out += v[i].str();
    }
    return out;
}

/// One-line matrix display: rows joined by " / ".
std::string matrix_inline(const Matrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r > 0) out += " / ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ' ';
            out += m.at(r, c).str();
        }
    }
    return out;
}

void print_header(const GlobalOptions& opt, const LieAlgebra& l) {
    if (opt.machine()) {
        std::cout << "name=" << l.name() << '\n'
                  << "field=" << l.field().str() << '\n'
                  << "dim=" << l.dim() << '\n';
    } else {
        std::cout << "algebra " << l.name() << ": dim " << l.dim() << " over " << l.field().str()
                  << '\n';
    }
}

void print_report(const GlobalOptions& opt, const AxiomReport& report) {
    if (opt.machine()) {
        for (const AxiomCheck& c : report.checks())
            std::cout << c.label << '=' << (c.passed ? 1 : 0) << '\n';
    } else {
        std::cout << report.str();
    }
}

LieAlgebra resolve(const GlobalOptions& opt, const std::string& arg) {
    return load([&] { return resolve_algebra(arg, opt.field_spec()); });
}

Vec lambda_from_arg(const LieAlgebra& l, const std::string& arg) {
    return load([&] {
        Vec v = parse_scalar_list(arg, l.field());
        if (v.size() != l.dim())
            throw Error("--lambda needs " + std::to_string(l.dim()) + " coordinates, got " +
                        std::to_string(v.size()));
        return v;
    });
}

int run_check(const GlobalOptions& opt, const std::string& arg) {
    const LieAlgebra l = resolve(opt, arg);
    const AxiomReport report = check_lie(l);
    print_header(opt, l);
    print_report(opt, report);
    if (opt.machine())
        std::cout << "check=" << (report.passed() ? 1 : 0) << '\n';
    else
        std::cout << "check " << (report.passed() ? "pass" : "fail") << '\n';
    return report.passed() ? 0 : 1;
}

int run_der(const GlobalOptions& opt, const std::string& arg) {
    const LieAlgebra l = resolve(opt, arg);
    const SubspaceBasis der = derivations(l);
    const SubspaceBasis inn = inner_derivations(l);
    print_header(opt, l);
    if (opt.machine()) {
        std::cout << "der_dim=" << der.dim() << '\n'
                  << "inn_dim=" << inn.dim() << '\n'
                  << "out_dim=" << der.dim() - inn.dim() << '\n';
        for (std::size_t k = 0; k < der.dim(); ++k)
            std::cout << "der" << k + 1 << '=' << coords(der.vectors()[k]) << '\n';
    } else {
        std::cout << "dim Der = " << der.dim() << '\n'
                  << "dim Inn = " << inn.dim() << '\n'
                  << "dim Out = " << der.dim() - inn.dim() << '\n';
        for (std::size_t k = 0; k < der.dim(); ++k)
            std::cout << "der " << k + 1 << ": "
                      << matrix_inline(unflatten_endo(der.vectors()[k], l.dim(), l.field()))
                      << '\n';
    }
    return 0;
}

int run_twder(const GlobalOptions& opt, const std::string& arg, const std::string& lambda_arg,
              const std::string& scan_arg) {
    const LieAlgebra l = resolve(opt, arg);
    print_header(opt, l);
    if (!lambda_arg.empty()) {
        const Vec lambda = lambda_from_arg(l, lambda_arg);
        const SubspaceBasis ds = dspace_for_lambda(l, lambda);
        if (opt.machine()) {
            std::cout << "lambda=" << coords(lambda) << '\n' << "dim_d=" << ds.dim() << '\n';
            for (std::size_t k = 0; k < ds.dim(); ++k)
                std::cout << 'd' << k + 1 << '=' << coords(ds.vectors()[k]) << '\n';
        } else {
            std::cout << "lambda: " << coords(lambda) << '\n' << "dim D = " << ds.dim() << '\n';
            for (std::size_t k = 0; k < ds.dim(); ++k)
                std::cout << "D " << k + 1 << ": "
                          << matrix_inline(unflatten_endo(ds.vectors()[k], l.dim(), l.field()))
                          << '\n';
        }
        return 0;
    }
    const SubspaceBasis lambdas = lambda_space(l);
    if (!scan_arg.empty()) {
        const Vec qs = load([&] { return parse_scalar_list(scan_arg, l.field()); });
        const Vec ray =
            lambdas.dim() > 0 ? lambdas.vectors()[0] : zero_vec(l.dim(), l.field());
        if (!opt.machine()) std::cout << "lambda ray: " << coords(ray) << '\n';
        for (std::size_t i = 0; i < qs.size(); ++i) {
            const std::size_t dim = dspace_for_lambda(l, scale(qs[i], ray)).dim();
            if (opt.machine())
                std::cout << "scan" << i + 1 << "_q=" << qs[i].str() << '\n'
                          << "scan" << i + 1 << "_dim=" << dim << '\n';
            else
                std::cout << "q = " << qs[i].str() << ": dim D = " << dim << '\n';
        }
        return 0;
    }
    if (opt.machine()) {
        std::cout << "lambda_dim=" << lambdas.dim() << '\n';
        for (std::size_t k = 0; k < lambdas.dim(); ++k)
            std::cout << "lambda" << k + 1 << '=' << coords(lambdas.vectors()[k]) << '\n';
    } else {
        std::cout << "lambda dim = " << lambdas.dim() << '\n';
        for (std::size_t k = 0; k < lambdas.dim(); ++k)
            std::cout << "lambda " << k + 1 << ": " << coords(lambdas.vectors()[k]) << '\n';
    }
    return 0;
}

int run_codim1(const GlobalOptions& opt, const std::string& arg, const std::string& lambda_arg,
               const std::string& d_file) {
    const LieAlgebra l = resolve(opt, arg);
    const Vec lambda = lambda_from_arg(l, lambda_arg);
    const Matrix d = load([&] {
        Matrix m = parse_matrix_rows(read_text_file(d_file), l.field());
        if (m.rows() != l.dim() || m.cols() != l.dim())
            throw Error("--D must be a " + std::to_string(l.dim()) + " x " +
                        std::to_string(l.dim()) + " matrix");
        return m;
    });
    const AxiomReport report = check_twisted_derivation(l, lambda, d);
    if (!report.passed()) {
        print_report(opt, report);
        std::cout << "error: not a twisted derivation\n";
        return 1;
    }
    std::cout << serialize_algebra(codim1_product(l, lambda, d));
    return 0;
}

int run_product(const std::string& kind, const std::string& datum_file) {
    const ExtendingDatum d = load([&] { return parse_datum(read_text_file(datum_file)); });
    const LieAlgebra v =
        LieAlgebra::from_tensor(d.g().name() + ".v" + std::to_string(d.dimv()), d.vbracket());
    auto require_zero = [&](const Tensor3& t, const std::string& what) {
        if (!t.is_zero())
            throw UsageError("a " + kind + " product needs zero " + what +
                             " tables, but the file sets them");
    };
    const LieAlgebra e = [&]() -> LieAlgebra {
        if (kind == "unified") return unified_product(d);
        if (kind == "twisted") {
            require_zero(d.laction(), "action");
            require_zero(d.raction(), "action");
            return twisted_product(d.g(), v, d.cocycle());
        }
        if (kind == "crossed") {
            require_zero(d.laction(), "left-action");
            return crossed_product(d.g(), v, d.raction(), d.cocycle());
        }
        require_zero(d.cocycle(), "cocycle");
        return bicrossed_product(d.g(), v, d.laction(), d.raction());
    }();
    std::cout << serialize_algebra(e);
    return 0;
}

int run_extract(const GlobalOptions& opt, const std::string& arg, std::size_t gdim) {
    const LieAlgebra e = resolve(opt, arg);
    if (gdim < 1 || gdim >= e.dim())
        throw UsageError("--gdim must lie strictly between 0 and dim = " +
                         std::to_string(e.dim()));
    std::cout << serialize_datum(extract_datum(e, gdim));
    return 0;
}

int run_equiv_twder(const GlobalOptions& opt, const std::string& arg, const std::string& file_a,
                    const std::string& file_b) {
    const LieAlgebra l = resolve(opt, arg);
    const TwistedDerivation a = load([&] { return parse_twder_pair(read_text_file(file_a), l); });
    const TwistedDerivation b = load([&] { return parse_twder_pair(read_text_file(file_b), l); });
    const TwistedDerivation* pairs[2] = {&a, &b};
    const char* labels[2] = {"A", "B"};
    for (int i = 0; i < 2; ++i) {
        const AxiomReport report = check_twisted_derivation(l, pairs[i]->lambda, pairs[i]->d);
        if (!report.passed()) {
            std::cout << "pair " << labels[i] << ":\n";
            print_report(opt, report);
            std::cout << "error: not a twisted derivation\n";
            return 1;
        }
    }
    const std::optional<EquivalenceWitness> w = twder_equivalent(l, a, b);
    if (opt.machine()) {
        std::cout << "equivalent=" << (w ? 1 : 0) << '\n';
        if (w) std::cout << "q=" << w->q.str() << '\n' << "g0=" << coords(w->g0) << '\n';
    } else {
        if (w)
            std::cout << "equivalent q = " << w->q.str() << " g0 = " << coords(w->g0) << '\n';
        else
            std::cout << "not equivalent\n";
    }
    return w ? 0 : 1;
}

int run_classify(const GlobalOptions& opt, const std::string& arg) {
    const LieAlgebra l = resolve(opt, arg);
    const ClassificationReport report = classify_codim1(l);
    print_header(opt, l);
    if (opt.machine()) {
        std::cout << "lambda_dim=" << report.lambda_basis.dim() << '\n';
        for (std::size_t i = 0; i < report.samples.size(); ++i) {
            const ClassificationSample& s = report.samples[i];
            std::cout << "sample" << i + 1 << "_q=" << s.multiplier.str() << '\n'
                      << "sample" << i + 1 << "_lambda=" << coords(s.lambda) << '\n'
                      << "sample" << i + 1 << "_dim=" << s.dspace_dim << '\n';
        }
        std::cout << "enumerated=" << (report.enumerated ? 1 : 0) << '\n';
        if (report.enumerated)
            std::cout << "twder_count=" << report.twder_count << '\n'
                      << "classes_scaled=" << report.class_count_scaled << '\n'
                      << "classes_shift=" << report.class_count_shift << '\n';
    } else {
        std::cout << "lambda dim = " << report.lambda_basis.dim() << '\n';
        for (const ClassificationSample& s : report.samples)
            std::cout << "sample q = " << s.multiplier.str() << " lambda = " << coords(s.lambda)
                      << ": dim D = " << s.dspace_dim << '\n';
        if (report.enumerated)
            std::cout << "twder count = " << report.twder_count << '\n'
                      << "classes scaled = " << report.class_count_scaled << '\n'
                      << "classes shift = " << report.class_count_shift << '\n';
        else
            std::cout << "census skipped\n";
    }
    return 0;
}

int run_enumerate(const GlobalOptions& opt, int p, const std::string& gname, std::size_t dimv,
                  const std::string& relation, std::size_t threads) {
    const SearchSpec spec = load([&] {
        const FieldSpec field = FieldSpec::prime(p);
        SearchSpec s{catalog(gname, field), dimv};
        s.threads = threads == 0 ? 1 : threads;
        return s;
    });
    Census census;
    if (relation.empty()) {
        census = enumerate_extending_structures(spec).census;
    } else {
        census = orbit_census(spec, relation == "equiv" ? Relation::equiv : Relation::cohom);
    }
    if (opt.machine()) {
        std::cout << "raw=" << census.raw_count << '\n'
                  << "valid=" << census.valid_count << '\n'
                  << "cross=" << census.cross_check_failures << '\n';
        if (relation == "equiv") std::cout << "orbits_equiv=" << census.orbit_count_equiv << '\n';
        if (relation == "cohom") std::cout << "orbits_cohom=" << census.orbit_count_cohom << '\n';
    } else {
        std::cout << "base " << spec.g.name() << ": dim " << spec.g.dim() << " over "
                  << spec.g.field().str() << ", dimV " << dimv << '\n'
                  << "raw = " << census.raw_count << '\n'
                  << "valid = " << census.valid_count << '\n'
                  << "cross = " << census.cross_check_failures << '\n';
        if (relation == "equiv") std::cout << "orbits equiv = " << census.orbit_count_equiv << '\n';
        if (relation == "cohom") std::cout << "orbits cohom = " << census.orbit_count_cohom << '\n';
    }
    return 0;
}

int run_catalog(const GlobalOptions& opt, const std::string& name) {
    const LieAlgebra l = load([&] { return catalog(name, opt.field_spec()); });
    std::cout << serialize_algebra(l);
    return 0;
}

/// Maps the verb body's outcome onto the exit-code contract: 0 pass, 1 failed
/// mathematical verdict (report printed on stdout), 2 bad input.
int dispatch(const std::function<int()>& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const AxiomError& e) {
        std::cout << e.report().str();
        std::cout << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cout << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for Lie algebra extending structures"};
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_option("--format", opt.format, "output style")
        ->check(CLI::IsMember({"plain", "machine"}))
        ->capture_default_str();
    app.add_option("--field", opt.field, "field for catalog algebras (Q or F<p>)")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized subcommands")
        ->capture_default_str();

    int rc = 0;

    std::string check_arg;
    CLI::App* check = app.add_subcommand("check", "verify the alternating and Jacobi laws");
    check->add_option("algebra", check_arg, "catalog name or algebra file")->required();
    check->callback([&] { rc = dispatch([&] { return run_check(opt, check_arg); }); });

    std::string der_arg;
    CLI::App* der = app.add_subcommand("der", "derivation, inner, and outer dimensions");
    der->add_option("algebra", der_arg, "catalog name or algebra file")->required();
    der->callback([&] { rc = dispatch([&] { return run_der(opt, der_arg); }); });

    std::string twder_arg, twder_lambda, twder_scan;
    CLI::App* twder = app.add_subcommand("twder", "twisted-derivation spaces");
    twder->add_option("algebra", twder_arg, "catalog name or algebra file")->required();
    CLI::Option* lam =
        twder->add_option("--lambda", twder_lambda, "functional coordinates, comma-separated");
    twder->add_option("--scan", twder_scan, "multipliers along the first lambda ray")
        ->excludes(lam);
    twder->callback(
        [&] { rc = dispatch([&] { return run_twder(opt, twder_arg, twder_lambda, twder_scan); }); });

    std::string codim1_arg, codim1_lambda, codim1_dfile;
    CLI::App* codim1 = app.add_subcommand("codim1", "build the one-line extension of an algebra");
    codim1->add_option("algebra", codim1_arg, "catalog name or algebra file")->required();
    codim1->add_option("--lambda", codim1_lambda, "functional coordinates")->required();
    codim1->add_option("--D", codim1_dfile, "matrix file for the endomorphism")->required();
    codim1->callback([&] {
        rc = dispatch([&] { return run_codim1(opt, codim1_arg, codim1_lambda, codim1_dfile); });
    });

    std::string product_kind, product_file;
    CLI::App* product = app.add_subcommand("product", "assemble a product from a datum file");
    product->add_option("--kind", product_kind, "unified, twisted, crossed, or bicrossed")
        ->required()
        ->check(CLI::IsMember({"unified", "twisted", "crossed", "bicrossed"}));
    product->add_option("datum", product_file, "extending-datum file")->required();
    product->callback([&] { rc = dispatch([&] { return run_product(product_kind, product_file); }); });

    std::string extract_arg;
    std::size_t extract_gdim = 0;
    CLI::App* extract = app.add_subcommand("extract", "read the datum of a coordinate subalgebra");
    extract->add_option("algebra", extract_arg, "catalog name or algebra file")->required();
    extract->add_option("--gdim", extract_gdim, "dimension of the leading block")->required();
    extract->callback(
        [&] { rc = dispatch([&] { return run_extract(opt, extract_arg, extract_gdim); }); });

    std::string equiv_arg, equiv_a, equiv_b;
    CLI::App* equiv = app.add_subcommand("equiv-twder", "decide equivalence of two pairs");
    equiv->add_option("algebra", equiv_arg, "catalog name or algebra file")->required();
    equiv->add_option("pairA", equiv_a, "twisted-derivation pair file")->required();
    equiv->add_option("pairB", equiv_b, "twisted-derivation pair file")->required();
    equiv->callback(
        [&] { rc = dispatch([&] { return run_equiv_twder(opt, equiv_arg, equiv_a, equiv_b); }); });

    std::string classify_arg;
    CLI::App* classify = app.add_subcommand("classify-codim1", "survey one-line extensions");
    classify->add_option("algebra", classify_arg, "catalog name or algebra file")->required();
    classify->callback([&] { rc = dispatch([&] { return run_classify(opt, classify_arg); }); });

    int enum_p = 0;
    std::string enum_g, enum_relation;
    std::size_t enum_dimv = 1, enum_threads = 1;
    CLI::App* enumerate = app.add_subcommand("enumerate", "exhaustive search over a prime field");
    enumerate->add_option("--p", enum_p, "prime field size")->required();
    enumerate->add_option("--g", enum_g, "catalog name for the base algebra")->required();
    enumerate->add_option("--dimv", enum_dimv, "complement dimension")->required();
    enumerate->add_option("--relation", enum_relation, "orbit relation to count")
        ->check(CLI::IsMember({"equiv", "cohom"}));
    enumerate->add_option("--threads", enum_threads, "worker count")->capture_default_str();
    enumerate->callback([&] {
        rc = dispatch(
            [&] { return run_enumerate(opt, enum_p, enum_g, enum_dimv, enum_relation, enum_threads); });
    });

    std::string catalog_name;
    CLI::App* cat = app.add_subcommand("catalog", "print a catalog algebra as a file");
    cat->add_option("name", catalog_name, "catalog entry")->required();
    cat->callback([&] { rc = dispatch([&] { return run_catalog(opt, catalog_name); }); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}
