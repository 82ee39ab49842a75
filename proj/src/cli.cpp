#include "trisect/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trisect/atlas.hpp"
#include "trisect/io.hpp"
#include "trisect/moves.hpp"

namespace trisect::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in)
{
    std::ostringstream os;
    if (path == "-") {
        os << in.rdbuf();
        return os.str();
    }
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open '" + path + "'");
    os << f.rdbuf();
    return os.str();
}

TrisectionDiagram load(const std::string& path, std::istream& in)
{
    try {
        return parse_diagram(read_source(path, in));
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void print_validation(const ValidationReport& r, std::ostream& out)
{
    out << "genus " << r.genus << '\n';
    for (const auto& s : r.systems)
        out << "system " << to_string(s.label) << ": rank " << s.rank << ", primitive "
            << (s.saturated ? "yes" : "no") << ", isotropic " << (s.isotropic ? "yes" : "no") << '\n';
    for (const auto& p : r.pairs) {
        out << "pair " << to_string(p.labels[0]) << '/' << to_string(p.labels[1]) << ": invariant factors (";
        for (std::size_t i = 0; i < p.q_invariant_factors.size(); ++i)
            out << (i ? "," : "") << p.q_invariant_factors[i];
        out << "), k " << p.k << ", double H1 "
            << to_string(AbelianGroup{p.double_free_rank, p.double_torsion}) << '\n';
    }
    if (r.valid) {
        out << "verdict: valid (g=" << r.genus << " k=" << *r.k << " chi=" << *r.euler << ")\n";
    } else {
        out << "verdict: invalid\n";
        for (const auto& d : r.diagnostics) out << "  " << to_string(d.kind) << ": " << d.message << '\n';
    }
    out << "note: homological necessary conditions only\n";
}

void print_invariants(const TrisectionDiagram& d, std::ostream& out)
{
    const Invariants inv = invariants(d);
    const auto h = handle_counts(d);
    const auto t = intersection_triple(d);
    out << "g=" << inv.params.genus << " k=" << inv.params.k << " chi=" << inv.euler << " sigma=" << inv.signature
        << '\n';
    out << "h1=" << to_string(inv.h1) << '\n';
    out << "handles=" << h[0] << ' ' << h[1] << ' ' << h[2] << ' ' << h[3] << ' ' << h[4] << '\n';
    out << "q_ab=" << t.q_ab << '\n';
    out << "q_bc=" << t.q_bc << '\n';
    out << "q_ca=" << t.q_ca << '\n';
}

void print_params(const FibrationParams& p, std::ostream& out)
{
    out << "g=" << p.genus << " k=" << p.k << " chi=" << p.euler << '\n';
}

} // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Trisection diagram calculator", "trisect"};
    app.require_subcommand(1);

    std::string file, file2, name, system = "alpha", sign = "+", matrix_file;
    int count = 1;
    std::size_t target = 0, source = 0, depth = 3, nodes = 100000;
    long long genus = 0;

    auto* validate_cmd = app.add_subcommand("validate", "Check a diagram");
    validate_cmd->add_option("file", file)->required();

    auto* invariants_cmd = app.add_subcommand("invariants", "Print g, k, chi, sigma, H1, handles, intersection triple");
    invariants_cmd->add_option("file", file)->required();

    auto* stabilize_cmd = app.add_subcommand("stabilize", "Stabilize a diagram");
    stabilize_cmd->add_option("file", file)->required();
    stabilize_cmd->add_option("-n", count, "Number of stabilizations")->check(CLI::NonNegativeNumber);

    auto* slide_cmd = app.add_subcommand("slide", "Slide one curve over another in the same system");
    slide_cmd->add_option("file", file)->required();
    slide_cmd->add_option("--system", system)->required()->check(CLI::IsMember({"alpha", "beta", "gamma"}));
    slide_cmd->add_option("--target", target, "1-based curve index")->required()->check(CLI::PositiveNumber);
    slide_cmd->add_option("--source", source, "1-based curve index")->required()->check(CLI::PositiveNumber);
    slide_cmd->add_option("--sign", sign)->required()->check(CLI::IsMember({"+", "-"}));

    auto* diffeo_cmd = app.add_subcommand("diffeo", "Apply a symplectic matrix to every class");
    diffeo_cmd->add_option("file", file)->required();
    diffeo_cmd->add_option("--matrix", matrix_file)->required();

    auto* sum_cmd = app.add_subcommand("sum", "Connected sum");
    sum_cmd->add_option("file1", file)->required();
    sum_cmd->add_option("file2", file2)->required();

    auto* reverse_cmd = app.add_subcommand("reverse", "Reverse orientation");
    reverse_cmd->add_option("file", file)->required();

    auto* example_cmd = app.add_subcommand("example", "Print a built-in diagram");
    example_cmd->add_option("name", name)->required();

    auto* examples_cmd = app.add_subcommand("examples", "List built-in diagrams");

    auto* compare_cmd = app.add_subcommand("compare", "Compare two diagrams up to slides");
    compare_cmd->add_option("file1", file)->required();
    compare_cmd->add_option("file2", file2)->required();
    compare_cmd->add_option("--depth", depth, "Maximum number of slides");
    compare_cmd->add_option("--nodes", nodes, "Maximum number of visited diagrams");

    auto* params_cmd = app.add_subcommand("params", "Trisection parameters of fibered 4-manifolds");
    params_cmd->require_subcommand(1);
    auto* fiber_cmd = params_cmd->add_subcommand("fiber-s1", "Mapping torus of a 3-manifold");
    fiber_cmd->add_option("--genus", genus, "Heegaard genus of the fiber")->required()->check(CLI::NonNegativeNumber);
    auto* bundle_cmd = params_cmd->add_subcommand("bundle-s2", "Surface bundle over S^2");
    bundle_cmd->add_option("--fiber-genus", genus, "Genus of the fiber surface")
        ->required()
        ->check(CLI::NonNegativeNumber);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*validate_cmd) {
            const auto r = validate(load(file, in));
            print_validation(r, out);
            return r.valid ? kOk : kNegative;
        }
        if (*invariants_cmd) {
            print_invariants(load(file, in), out);
            return kOk;
        }
        if (*stabilize_cmd) {
            auto d = load(file, in);
            require_valid(d);
            for (int i = 0; i < count; ++i) d = stabilize(d);
            out << serialize_diagram(d);
            return kOk;
        }
        if (*slide_cmd) {
            const SlideMove m{*parse_label(system), target - 1, source - 1, sign == "+" ? 1 : -1};
            out << serialize_diagram(handle_slide(load(file, in), m));
            return kOk;
        }
        if (*diffeo_cmd) {
            const auto d = load(file, in);
            IntMatrix s;
            try {
                s = parse_matrix(read_source(matrix_file, in));
            } catch (const ParseError& e) {
                throw UsageError(matrix_file + ": " + e.what());
            }
            out << serialize_diagram(apply_diffeomorphism(d, s));
            return kOk;
        }
        if (*sum_cmd) {
            out << serialize_diagram(connect_sum(load(file, in), load(file2, in)));
            return kOk;
        }
        if (*reverse_cmd) {
            out << serialize_diagram(reverse_orientation(load(file, in)));
            return kOk;
        }
        if (*example_cmd) {
            out << serialize_diagram(builtin(name));
            return kOk;
        }
        if (*examples_cmd) {
            for (const auto& n : builtin_names()) out << n << '\n';
            return kOk;
        }
        if (*compare_cmd) {
            const auto v = compare(load(file, in), load(file2, in), {depth, nodes});
            out << to_string(v) << '\n';
            if (std::holds_alternative<DistinctByInvariant>(v)) return kNegative;
            if (std::holds_alternative<Unknown>(v)) return kUndecided;
            return kOk;
        }
        if (*fiber_cmd) {
            print_params(mapping_torus_params(genus), out);
            return kOk;
        }
        if (*bundle_cmd) {
            print_params(bundle_over_s2_params(genus), out);
            return kOk;
        }
    } catch (const InvalidDiagram& e) {
        err << "error: " << e.what() << '\n';
        return kNegative;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace trisect::cli
