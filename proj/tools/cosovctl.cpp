#include <CLI11.hpp>

#include <iostream>

#include "cosov/io.hpp"

using namespace cosov;

namespace {

const char* errc_name(errc c) {
    switch (c) {
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::singular: return "Singular";
        case errc::inconsistent: return "Inconsistent";
        case errc::genset_mismatch: return "GenSetMismatch";
        case errc::missing_image: return "MissingImage";
        case errc::degree_exceeded: return "DegreeExceeded";
        case errc::missing_inverse: return "MissingInverse";
        case errc::missing_value: return "MissingValue";
        case errc::inverse_check_failed: return "InverseCheckFailed";
        case errc::intertwiner_check_failed: return "IntertwinerCheckFailed";
        case errc::algebra_mismatch: return "AlgebraMismatch";
        case errc::not_a_group: return "NotAGroup";
        case errc::degenerate: return "Degenerate";
        case errc::beta_missing: return "BetaMissing";
        case errc::no_solution: return "NoSolution";
        case errc::no_invertible_solution: return "NoInvertibleSolution";
        case errc::unknown_label: return "UnknownLabel";
        case errc::not_sovereign: return "NotSovereign";
        case errc::parse_error: return "ParseError";
        case errc::schema_error: return "SchemaError";
        default: return "InvalidArgument";
    }
}

std::vector<Scalar> parse_csv(const FieldDesc& f, const std::string& csv) {
    std::vector<Scalar> out;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        std::string item =
            comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
        out.push_back(parse_scalar(f, item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

void emit(const WorkbenchInput& in, const std::string& out_path) {
    if (out_path.empty())
        std::cout << canonical_dump(workbench_to_json(in));
    else
        save_workbench(in, out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic verification workbench for cosovereign Hopf algebras"};
    app.require_subcommand(1);

    std::string file, format = "text", kind, out_path, var, entries_csv, values_csv;
    std::string corep_label, char_label;
    int degree = 0, cap = -1;
    size_t size_n = 0, tensor_n = 0, tensor_N = 0;

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite on an input file");
    verify->add_option("file", file)->required();
    verify->add_option("--degree", degree, "fixed degree bound (0 = auto escalation)");
    verify->add_option("--cap", cap, "degree cap for auto escalation");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* build = app.add_subcommand("build", "Serialize a built-in construction");
    build->add_option("kind", kind)->required()->check(
        CLI::IsMember({"hf", "sle", "eq", "hn", "sweedler"}));
    build->add_option("-o,--output", out_path, "output file (default: stdout)");
    build->add_option("--var", var, "field variable name (default: rationals)");
    build->add_option("--size", size_n, "matrix size for kind hf");
    build->add_option("--entries", entries_csv, "comma-separated matrix entries (row-major)");
    build->add_option("--n", tensor_n, "dimension parameter for kinds sle, eq, hn");
    build->add_option("--N", tensor_N, "tensor arity for kind sle");
    build->add_option("--values", values_csv, "comma-separated tensor values (index-major)");

    CLI::App* dims_cmd = app.add_subcommand("dims", "Print left/right dimensions of a corep");
    dims_cmd->add_option("file", file)->required();
    dims_cmd->add_option("--corep", corep_label)->required();
    dims_cmd->add_option("--char", char_label)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (*verify) {
            WorkbenchInput in = load_workbench(file);
            if (degree > 0) in.options.degree_bound = degree;
            if (cap > 0) in.options.degree_cap = cap;
            VerifyOutcome out = run_verification(in);
            if (format == "json")
                std::cout << report_to_json(out.report, out.degree_used).dump(2) << "\n";
            else
                std::cout << report_to_text(out.report, out.degree_used);
            return report_exit_code(out.report);
        }
        if (*build) {
            FieldDesc f = var.empty() ? FieldDesc::rationals() : FieldDesc::rational_functions(var);
            if (kind == "hf") {
                if (size_n == 0 || entries_csv.empty())
                    fail(errc::invalid_argument, "kind hf needs --size and --entries");
                std::vector<Scalar> e = parse_csv(f, entries_csv);
                if (e.size() != size_n * size_n)
                    fail(errc::invalid_argument, "kind hf needs size^2 entries");
                Matrix m(size_n, size_n, f);
                for (size_t i = 0; i < size_n; ++i)
                    for (size_t j = 0; j < size_n; ++j) m.at(i, j) = e[i * size_n + j];
                emit(build_hf_input(m), out_path);
            } else if (kind == "sle") {
                if (tensor_n == 0 || tensor_N == 0 || values_csv.empty())
                    fail(errc::invalid_argument, "kind sle needs --n, --N and --values");
                ETensor e{tensor_n, tensor_N, f, parse_csv(f, values_csv)};
                size_t total = 1;
                for (size_t i = 0; i < tensor_N; ++i) total *= tensor_n;
                if (e.values.size() != total)
                    fail(errc::invalid_argument, "kind sle needs n^N values");
                emit(build_sle_input(e), out_path);
            } else if (kind == "eq") {
                if (tensor_n == 0) fail(errc::invalid_argument, "kind eq needs --n");
                emit(build_eq_input(tensor_n), out_path);
            } else if (kind == "hn") {
                if (tensor_n == 0) fail(errc::invalid_argument, "kind hn needs --n");
                emit(build_hn_input(tensor_n), out_path);
            } else {
                emit(build_sweedler_input(), out_path);
            }
            return 0;
        }
        WorkbenchInput in = load_workbench(file);
        DimensionPair d = dims_for(in, corep_label, char_label);
        std::cout << "left: " << d.left.to_string() << ", right: " << d.right.to_string() << "\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
