#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cosov/io.hpp"

using namespace cosov;
using nlohmann::json;

namespace {
const FieldDesc Q = FieldDesc::rationals();
const FieldDesc Qq = FieldDesc::rational_functions("q");

WorkbenchInput presented_sweedler_input() {
    WorkbenchInput in;
    PresentedHopf h = builtin_sweedler_presented();
    in.field = h.field();
    NCPoly one = NCPoly::one(h.gens(), Q);
    NCPoly g = NCPoly::generator(h.gens(), Q, 0);
    NCPoly x = NCPoly::generator(h.gens(), Q, 1);
    in.coreps.emplace("V2", MatrixCorep{2, {one, x, NCPoly::zero(h.gens(), Q), g}, "V2"});
    in.characters.emplace("eps", NamedCharacter{counit_character(h), false});
    in.characters.emplace(
        "phi", NamedCharacter{GenCharacter{{Scalar::from_int(Q, -1), Scalar::zero(Q)}}, true});
    std::vector<Scalar> table{-Scalar::one(Q), Scalar::zero(Q), Scalar::zero(Q), Scalar::one(Q)};
    in.cobraiding_table = table;
    in.cobraiding_inverse = table;
    in.cotwist_character = "phi";
    in.presentation_hopf = std::move(h);
    return in;
}

Matrix diag_1q() {
    Matrix f(2, 2, Qq);
    f.at(0, 0) = Scalar::one(Qq);
    f.at(1, 1) = Scalar::variable(Qq);
    return f;
}
} // namespace

TEST_CASE("scalar text round trips through the expression parser") {
    Scalar q = Scalar::variable(Qq);
    std::vector<Scalar> samples{
        Scalar::zero(Q),
        Scalar::one(Q),
        Scalar::from_rational(Q, mpq_class(-2, 3)),
        Scalar::from_rational(Q, mpq_class(7, 12)),
        q,
        q + Scalar::one(Qq),
        (q + Scalar::one(Qq)) * (Scalar::one(Qq) + q.inverse()),
        (q * q - Scalar::one(Qq)) / (q + Scalar::from_int(Qq, 3)),
        -(q * q * q) + Scalar::from_rational(Qq, mpq_class(1, 2)),
        q.inverse(),
        Scalar::from_int(Qq, -5) * q / Scalar::from_int(Qq, 3),
    };
    for (const Scalar& s : samples) REQUIRE(parse_scalar(s.field(), s.to_string()) == s);
}

TEST_CASE("expression precedence: power over unary minus over product over sum") {
    CHECK(parse_scalar(Q, "2+3*4^2") == Scalar::from_int(Q, 50));
    CHECK(parse_scalar(Q, "-2^2") == Scalar::from_int(Q, -4));
    CHECK(parse_scalar(Q, "(2+3)*4") == Scalar::from_int(Q, 20));
    CHECK(parse_scalar(Q, "8/2/2") == Scalar::from_int(Q, 2));
    CHECK(parse_scalar(Q, "1-2-3") == Scalar::from_int(Q, -4));
    Scalar q = Scalar::variable(Qq);
    CHECK(parse_scalar(Qq, "(q-1)/(q^2-1)") == (q + Scalar::one(Qq)).inverse());
    CHECK(parse_scalar(Qq, "-q^2") == -(q * q));
    CHECK(parse_scalar(Qq, " q + 1 ") == q + Scalar::one(Qq));
}

TEST_CASE("malformed scalar expressions raise ParseError") {
    for (const char* bad : {"q+", "x", "1/0", "q^(2)", "2**3", "(q", "", "3..4", "q 2"}) {
        try {
            parse_scalar(Qq, bad);
            CHECK_MESSAGE(false, bad);
        } catch (const Error& e) {
            CHECK(e.code() == errc::parse_error);
        }
    }
    // the variable of a different field is unknown over the rationals
    try {
        parse_scalar(Q, "q");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::parse_error);
    }
}

TEST_CASE("canonical serialization round trips byte-identically") {
    std::vector<WorkbenchInput> corpus;
    corpus.push_back(build_sweedler_input());
    corpus.push_back(build_hn_input(2));
    corpus.push_back(build_eq_input(2));
    corpus.push_back(build_eq_input(3));
    corpus.push_back(build_hf_input(Matrix::identity(2, Q)));
    corpus.push_back(build_hf_input(diag_1q()));
    {
        Matrix swap(2, 2, Q);
        swap.at(0, 1) = Scalar::one(Q);
        swap.at(1, 0) = Scalar::one(Q);
        corpus.push_back(build_hf_input(swap));
    }
    corpus.push_back(presented_sweedler_input());
    for (const WorkbenchInput& in : corpus) {
        std::string first = canonical_dump(workbench_to_json(in));
        WorkbenchInput reparsed = parse_workbench(json::parse(first));
        std::string second = canonical_dump(workbench_to_json(reparsed));
        REQUIRE(first == second);
    }
}

TEST_CASE("verification outcomes and the exit-code mapping") {
    {
        VerifyOutcome out = run_verification(build_sweedler_input());
        CHECK(out.report.all_pass());
        CHECK(report_exit_code(out.report) == 0);
        bool note_found = false;
        for (const auto& n : out.report.notes)
            if (n.find("is_involutory = false") != std::string::npos) note_found = true;
        CHECK(note_found);
    }
    {
        // negative control: the counit marked sovereign must fail by name
        WorkbenchInput in = build_sweedler_input();
        in.characters.at("eps").sovereign = true;
        VerifyOutcome out = run_verification(in);
        CHECK(report_exit_code(out.report) == 1);
        bool named_failure = false;
        for (const auto& c : out.report.checks)
            if (c.name == "verify_sovereign" && c.status == CheckStatus::fail &&
                c.detail.find("eps") != std::string::npos)
                named_failure = true;
        CHECK(named_failure);
    }
    {
        WorkbenchInput in = build_hf_input(diag_1q());
        VerifyOutcome out = run_verification(in);
        CHECK(out.report.all_pass());
        bool dims_note = false;
        for (const auto& n : out.report.notes)
            if (n.find("(q+1, (q+1)/q)") != std::string::npos) dims_note = true;
        CHECK(dims_note);
    }
    {
        VerifyOutcome out = run_verification(presented_sweedler_input());
        CHECK(out.report.all_pass());
        CHECK(report_exit_code(out.report) == 0);
    }
    {
        // a deliberately wrong antipode is neither provable nor refutable:
        // the run ends inconclusive at the cap (exit 2)
        WorkbenchInput in;
        PresentedHopf h = builtin_sweedler_presented();
        in.field = h.field();
        h.antipode[1] = NCPoly::generator(h.gens(), Q, 1);
        h.antipode_inv.reset();
        // rebuild without refuters: parsed inputs never carry them
        h.pres = std::make_shared<Presentation>(h.gens(), h.field(), h.pres->relations());
        in.presentation_hopf = std::move(h);
        in.options.degree_cap = 4;
        VerifyOutcome out = run_verification(in);
        CHECK_FALSE(out.report.any_fail());
        CHECK(out.report.count(CheckStatus::inconclusive) > 0);
        CHECK(report_exit_code(out.report) == 2);
        CHECK(out.degree_used == 4); // escalated to the cap before giving up
    }
}

TEST_CASE("schema validation") {
    json base = workbench_to_json(build_sweedler_input());
    {
        json two = base;
        two["hf_matrix"] = workbench_to_json(build_hf_input(Matrix::identity(1, Q)))["hf_matrix"];
        try {
            parse_workbench(two);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == errc::schema_error);
        }
    }
    {
        json none = base;
        none.erase("finite_hopf");
        try {
            parse_workbench(none);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == errc::schema_error);
        }
    }
    {
        json bad = base;
        bad["characters"]["eps"]["values"] = {"1", "1"}; // wrong arity
        try {
            parse_workbench(bad);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == errc::schema_error);
        }
    }
    {
        json bad = workbench_to_json(presented_sweedler_input());
        bad["coreps"]["V2"]["entries"][1][0]["word"] = {"nope"};
        try {
            parse_workbench(bad);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == errc::schema_error);
        }
    }
    {
        json bad = workbench_to_json(presented_sweedler_input());
        bad.erase("cobraiding"); // cotwist now lacks its cobraiding
        try {
            parse_workbench(bad);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == errc::schema_error);
        }
    }
}

TEST_CASE("dims resolution and its error conditions") {
    WorkbenchInput hf = build_hf_input(diag_1q());
    DimensionPair d = dims_for(hf, "u", "phi_F");
    Scalar q = Scalar::variable(Qq);
    CHECK(d.left == q + Scalar::one(Qq));
    CHECK(d.right == Scalar::one(Qq) + q.inverse());
    DimensionPair t = dims_for(hf, "trivial", "phi_F");
    CHECK(t.left.is_one());
    CHECK(t.right.is_one());

    try {
        dims_for(hf, "w", "phi_F");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::unknown_label);
    }
    try {
        dims_for(hf, "u", "nope");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::unknown_label);
    }

    WorkbenchInput sw = build_sweedler_input();
    DimensionPair r = dims_for(sw, "regular", "phi");
    CHECK(r.left.is_zero());
    CHECK(r.right.is_zero());
    try {
        dims_for(sw, "regular", "eps");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_sovereign);
    }
}

TEST_CASE("report renderings agree with the summary counts") {
    VerifyOutcome out = run_verification(build_eq_input(2));
    json j = report_to_json(out.report, out.degree_used);
    CHECK(j["summary"]["pass"].get<size_t>() == out.report.count(CheckStatus::pass));
    CHECK(j["summary"]["fail"].get<size_t>() == 0);
    CHECK(j["checks"].size() == out.report.checks.size());
    std::string text = report_to_text(out.report, out.degree_used);
    CHECK(text.find("summary:") != std::string::npos);
    CHECK(text.find("verify_sovereign") != std::string::npos);
}
