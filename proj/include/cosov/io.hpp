#pragma once

#include <json.hpp>

#include "cosov/cobraid.hpp"
#include "cosov/corep.hpp"
#include "cosov/sle.hpp"

namespace cosov {

/// Degree policy for a verification run: a fixed bound, or automatic
/// escalation in +2 steps up to the cap (degree_bound = 0).
struct VerifyOptions {
    int degree_bound = 0;
    int degree_cap = 6;
};

struct NamedCharacter {
    GenCharacter chi;
    bool sovereign = false; // when set, the sovereign identity is verified
};

/// One self-contained input: exactly one object section plus optional
/// characters, coreps, a cobraiding table and a cotwist seed.
struct WorkbenchInput {
    FieldDesc field = FieldDesc::rationals();
    std::optional<FinHopf> finite_hopf;
    std::optional<PresentedHopf> presentation_hopf;
    std::optional<Matrix> hf_matrix;
    std::optional<ETensor> sle_tensor;
    std::map<std::string, NamedCharacter> characters;
    std::map<std::string, MatrixCorep> coreps; // presented-style objects only
    std::optional<std::vector<Scalar>> cobraiding_table;
    std::optional<std::vector<Scalar>> cobraiding_inverse;
    std::optional<std::string> cotwist_character;
    VerifyOptions options;
};

/// Expression parser for the canonical scalar text form ("(q^2+2*q+1)/q",
/// "-2/3", ...). Precedence: ^ over unary minus over * / over + -.
/// Throws errc::parse_error.
Scalar parse_scalar(const FieldDesc& f, const std::string& text);

/// JSON (de)serialization. The rendering is canonical: objects have sorted
/// keys and every Scalar is rendered by Scalar::to_string, so
/// parse -> serialize round trips are byte-identical.
WorkbenchInput parse_workbench(const nlohmann::json& j);
nlohmann::json workbench_to_json(const WorkbenchInput& in);
std::string canonical_dump(const nlohmann::json& j);

/// File helpers; errc::parse_error on unreadable or malformed files,
/// errc::schema_error on structurally invalid inputs.
WorkbenchInput load_workbench(const std::string& path);
void save_workbench(const WorkbenchInput& in, const std::string& path);

struct VerifyOutcome {
    Report report;
    int degree_used = 0;
};

/// Dispatches the full verification suite for the object type, escalating
/// the degree bound per the options.
VerifyOutcome run_verification(const WorkbenchInput& in);

/// 0 = all Pass, 1 = any Fail, 2 = no Fail but some Inconclusive.
int report_exit_code(const Report& rep);

std::string report_to_text(const Report& rep, int degree_used);
nlohmann::json report_to_json(const Report& rep, int degree_used);

/// Exact left/right dimensions of a named corep under a named character;
/// the character must verify as sovereign at the degree cap. Throws
/// errc::unknown_label / errc::not_sovereign.
DimensionPair dims_for(const WorkbenchInput& in, const std::string& corep_label,
                       const std::string& char_label);

/// Builders backing `cosovctl build`; each output re-verifies cleanly.
WorkbenchInput build_hf_input(const Matrix& f);
WorkbenchInput build_sle_input(const ETensor& e);
WorkbenchInput build_eq_input(size_t n);
WorkbenchInput build_hn_input(size_t n);
WorkbenchInput build_sweedler_input();

} // namespace cosov
