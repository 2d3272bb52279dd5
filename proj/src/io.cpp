#include "cosov/io.hpp"

#include <fstream>
#include <sstream>

namespace cosov {

using nlohmann::json;

// ---- scalar expression parsing --------------------------------------------

namespace {

class ScalarParser {
  public:
    ScalarParser(const FieldDesc& f, const std::string& s) : field_(f), text_(s) {}

    Scalar parse() {
        Scalar v = expr();
        skip();
        if (pos_ != text_.size())
            fail(errc::parse_error, "trailing characters in scalar expression: " + text_);
        return v;
    }

  private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                Scalar d = factor();
                if (d.is_zero()) fail(errc::parse_error, "division by zero in: " + text_);
                v /= d;
            } else {
                return v;
            }
        }
    }

    Scalar factor() {
        if (eat('-')) return -factor();
        return power();
    }

    Scalar power() {
        Scalar base = primary();
        if (!eat('^')) return base;
        skip();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail(errc::parse_error, "exponent must be a nonnegative integer");
        unsigned long e = std::stoul(text_.substr(start, pos_ - start));
        Scalar v = Scalar::one(field_);
        for (unsigned long i = 0; i < e; ++i) v *= base;
        return v;
    }

    Scalar primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) fail(errc::parse_error, "missing ')' in: " + text_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return Scalar::from_rational(field_, mpq_class(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (field_.kind != FieldDesc::Kind::RationalFunctions || name != field_.variable)
                fail(errc::parse_error, "unknown symbol '" + name + "' in scalar expression");
            return Scalar::variable(field_);
        }
        fail(errc::parse_error, "unexpected character in scalar expression: " + text_);
    }

    FieldDesc field_;
    const std::string& text_;
    size_t pos_ = 0;
};

[[noreturn]] void schema_fail(const std::string& msg) { fail(errc::schema_error, msg); }

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema_fail(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string need_string(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_string()) schema_fail(std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

size_t need_size(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_unsigned() || v.get<size_t>() == 0)
        schema_fail(std::string("key '") + key + "' must be a positive integer");
    return v.get<size_t>();
}

Scalar scalar_from_json(const FieldDesc& f, const json& j) {
    if (!j.is_string()) schema_fail("scalars must be strings");
    return parse_scalar(f, j.get<std::string>());
}

std::vector<Scalar> scalar_list(const FieldDesc& f, const json& j, size_t expected,
                                const char* what) {
    if (!j.is_array() || j.size() != expected)
        schema_fail(std::string(what) + " must be an array of " + std::to_string(expected) +
                    " scalars");
    std::vector<Scalar> out;
    out.reserve(expected);
    for (const auto& e : j) out.push_back(scalar_from_json(f, e));
    return out;
}

json scalar_list_json(const std::vector<Scalar>& v) {
    json arr = json::array();
    for (const auto& s : v) arr.push_back(s.to_string());
    return arr;
}

// ---- field ----------------------------------------------------------------

FieldDesc field_from_json(const json& j) {
    std::string kind = need_string(j, "kind");
    if (kind == "rationals") return FieldDesc::rationals();
    if (kind == "rational_functions")
        return FieldDesc::rational_functions(need_string(j, "variable"));
    schema_fail("field.kind must be 'rationals' or 'rational_functions'");
}

json field_to_json(const FieldDesc& f) {
    json j;
    if (f.kind == FieldDesc::Kind::Rationals) {
        j["kind"] = "rationals";
    } else {
        j["kind"] = "rational_functions";
        j["variable"] = f.variable;
    }
    return j;
}

// ---- words, polynomials, tensors ------------------------------------------

json word_to_json(const GenSet& gens, const Word& w) {
    json arr = json::array();
    for (uint16_t g : w) arr.push_back(gens.name(g));
    return arr;
}

Word word_from_json(const GenSet& gens, const json& j) {
    if (!j.is_array()) schema_fail("words must be arrays of generator names");
    Word w;
    for (const auto& e : j) {
        if (!e.is_string()) schema_fail("words must be arrays of generator names");
        try {
            w.push_back(static_cast<uint16_t>(gens.index(e.get<std::string>())));
        } catch (const Error&) {
            schema_fail("unknown generator '" + e.get<std::string>() + "'");
        }
    }
    return w;
}

json poly_to_json(const GenSet& gens, const NCPoly& p) {
    json arr = json::array();
    for (const auto& [w, c] : p.terms())
        arr.push_back({{"coeff", c.to_string()}, {"word", word_to_json(gens, w)}});
    return arr;
}

NCPoly poly_from_json(const GenSetPtr& gens, const FieldDesc& f, const json& j) {
    if (!j.is_array()) schema_fail("polynomials must be arrays of terms");
    NCPoly p(gens, f);
    for (const auto& t : j)
        p.add_term(word_from_json(*gens, need(t, "word")),
                   scalar_from_json(f, need(t, "coeff")));
    return p;
}

json tensor_to_json(const GenSet& gens, const TensorPoly& t) {
    json arr = json::array();
    for (const auto& [legs, c] : t.terms())
        arr.push_back({{"coeff", c.to_string()},
                       {"left", word_to_json(gens, legs.first)},
                       {"right", word_to_json(gens, legs.second)}});
    return arr;
}

TensorPoly tensor_from_json(const GenSetPtr& gens, const FieldDesc& f, const json& j) {
    if (!j.is_array()) schema_fail("tensors must be arrays of terms");
    TensorPoly t(gens, f);
    for (const auto& e : j)
        t.add_term(word_from_json(*gens, need(e, "left")), word_from_json(*gens, need(e, "right")),
                   scalar_from_json(f, need(e, "coeff")));
    return t;
}

// ---- matrices and structured objects ---------------------------------------

Matrix matrix_from_json(const FieldDesc& f, const json& j) {
    size_t rows = need_size(j, "rows"), cols = need_size(j, "cols");
    std::vector<Scalar> entries = scalar_list(f, need(j, "entries"), rows * cols, "matrix entries");
    Matrix m(rows, cols, f);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) m.at(i, k) = entries[i * cols + k];
    return m;
}

json matrix_to_json(const Matrix& m) {
    std::vector<Scalar> entries;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t k = 0; k < m.cols(); ++k) entries.push_back(m.at(i, k));
    return {{"cols", m.cols()}, {"entries", scalar_list_json(entries)}, {"rows", m.rows()}};
}

FinHopf finhopf_from_json(const FieldDesc& f, const json& j) {
    const json& basis = need(j, "basis");
    if (!basis.is_array() || basis.empty()) schema_fail("finite_hopf.basis must be nonempty");
    FinHopf a;
    a.field = f;
    a.dim = basis.size();
    for (const auto& b : basis) a.basis_names.push_back(b.get<std::string>());
    size_t n = a.dim;
    a.mult = scalar_list(f, need(j, "mult"), n * n * n, "finite_hopf.mult");
    a.comult = scalar_list(f, need(j, "comult"), n * n * n, "finite_hopf.comult");
    a.unit = scalar_list(f, need(j, "unit"), n, "finite_hopf.unit");
    a.counit = scalar_list(f, need(j, "counit"), n, "finite_hopf.counit");
    std::vector<Scalar> s = scalar_list(f, need(j, "antipode"), n * n, "finite_hopf.antipode");
    a.antipode = Matrix(n, n, f);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) a.antipode.at(i, k) = s[i * n + k];
    if (j.contains("antipode_inverse")) {
        std::vector<Scalar> si =
            scalar_list(f, j.at("antipode_inverse"), n * n, "finite_hopf.antipode_inverse");
        Matrix m(n, n, f);
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) m.at(i, k) = si[i * n + k];
        a.antipode_inv = std::move(m);
    }
    check_shapes(a);
    return a;
}

json finhopf_to_json(const FinHopf& a) {
    json j;
    json basis = json::array();
    for (size_t i = 0; i < a.dim; ++i) basis.push_back(a.basis_name(i));
    j["basis"] = basis;
    j["mult"] = scalar_list_json(a.mult);
    j["comult"] = scalar_list_json(a.comult);
    j["unit"] = scalar_list_json(a.unit);
    j["counit"] = scalar_list_json(a.counit);
    auto flat = [](const Matrix& m) {
        std::vector<Scalar> out;
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t k = 0; k < m.cols(); ++k) out.push_back(m.at(i, k));
        return out;
    };
    j["antipode"] = scalar_list_json(flat(a.antipode));
    if (a.antipode_inv) j["antipode_inverse"] = scalar_list_json(flat(*a.antipode_inv));
    return j;
}

PresentedHopf preshopf_from_json(const FieldDesc& f, const json& j) {
    const json& gnames = need(j, "generators");
    if (!gnames.is_array() || gnames.empty())
        schema_fail("presentation_hopf.generators must be a nonempty array");
    std::vector<std::string> names;
    for (const auto& g : gnames) names.push_back(g.get<std::string>());
    auto gens = std::make_shared<const GenSet>(names);
    size_t n = gens->size();

    const json& rels = need(j, "relations");
    if (!rels.is_array()) schema_fail("presentation_hopf.relations must be an array");
    std::vector<NCPoly> relations;
    for (const auto& r : rels) relations.push_back(poly_from_json(gens, f, r));

    PresentedHopf h;
    h.pres = std::make_shared<Presentation>(gens, f, std::move(relations));
    const json& com = need(j, "comult");
    if (!com.is_array() || com.size() != n)
        schema_fail("presentation_hopf.comult needs one tensor per generator");
    for (const auto& t : com) h.comult.push_back(tensor_from_json(gens, f, t));
    h.counit = scalar_list(f, need(j, "counit"), n, "presentation_hopf.counit");
    const json& ant = need(j, "antipode");
    if (!ant.is_array() || ant.size() != n)
        schema_fail("presentation_hopf.antipode needs one polynomial per generator");
    for (const auto& p : ant) h.antipode.push_back(poly_from_json(gens, f, p));
    if (j.contains("antipode_inverse")) {
        const json& anti = j.at("antipode_inverse");
        if (!anti.is_array() || anti.size() != n)
            schema_fail("presentation_hopf.antipode_inverse needs one polynomial per generator");
        std::vector<NCPoly> inv;
        for (const auto& p : anti) inv.push_back(poly_from_json(gens, f, p));
        h.antipode_inv = std::move(inv);
    }
    return h;
}

json preshopf_to_json(const PresentedHopf& h) {
    const GenSet& gens = *h.gens();
    json j;
    j["generators"] = json(gens.names());
    json rels = json::array();
    for (const auto& r : h.pres->relations()) rels.push_back(poly_to_json(gens, r));
    j["relations"] = rels;
    json com = json::array();
    for (const auto& t : h.comult) com.push_back(tensor_to_json(gens, t));
    j["comult"] = com;
    j["counit"] = scalar_list_json(h.counit);
    json ant = json::array();
    for (const auto& p : h.antipode) ant.push_back(poly_to_json(gens, p));
    j["antipode"] = ant;
    if (h.antipode_inv) {
        json anti = json::array();
        for (const auto& p : *h.antipode_inv) anti.push_back(poly_to_json(gens, p));
        j["antipode_inverse"] = anti;
    }
    return j;
}

ETensor etensor_from_json(const FieldDesc& f, const json& j) {
    ETensor e;
    e.field = f;
    e.n = need_size(j, "n");
    e.N = need_size(j, "N");
    size_t total = 1;
    for (size_t i = 0; i < e.N; ++i) total *= e.n;
    e.values = scalar_list(f, need(j, "values"), total, "sle_tensor.values");
    return e;
}

json etensor_to_json(const ETensor& e) {
    // values are index-major: the last index varies fastest
    return {{"N", e.N}, {"n", e.n}, {"values", scalar_list_json(e.values)}};
}

/// The presented Hopf algebra an input's dependent sections refer to, if any.
std::optional<PresentedHopf> working_hopf(const WorkbenchInput& in) {
    if (in.presentation_hopf) return *in.presentation_hopf;
    if (in.hf_matrix) return build_HF(*in.hf_matrix).hopf;
    if (in.sle_tensor) return build_SLE(*in.sle_tensor).hopf;
    return std::nullopt;
}

} // namespace

Scalar parse_scalar(const FieldDesc& f, const std::string& text) {
    return ScalarParser(f, text).parse();
}

// ---- workbench (de)serialization -------------------------------------------

WorkbenchInput parse_workbench(const json& j) {
    if (!j.is_object()) schema_fail("input must be a JSON object");
    WorkbenchInput in;
    in.field = field_from_json(need(j, "field"));

    int sections = 0;
    if (j.contains("finite_hopf")) {
        in.finite_hopf = finhopf_from_json(in.field, j.at("finite_hopf"));
        ++sections;
    }
    if (j.contains("presentation_hopf")) {
        in.presentation_hopf = preshopf_from_json(in.field, j.at("presentation_hopf"));
        ++sections;
    }
    if (j.contains("hf_matrix")) {
        in.hf_matrix = matrix_from_json(in.field, j.at("hf_matrix"));
        ++sections;
    }
    if (j.contains("sle_tensor")) {
        in.sle_tensor = etensor_from_json(in.field, j.at("sle_tensor"));
        ++sections;
    }
    if (sections != 1)
        schema_fail("exactly one of finite_hopf / presentation_hopf / hf_matrix / sle_tensor "
                    "is required");

    // construction problems (e.g. a singular matrix) surface as-is
    std::optional<PresentedHopf> h = working_hopf(in);
    size_t value_count = h ? h->gens()->size() : in.finite_hopf->dim;

    if (j.contains("characters")) {
        const json& chars = j.at("characters");
        if (!chars.is_object()) schema_fail("characters must be an object keyed by label");
        for (const auto& [label, body] : chars.items()) {
            NamedCharacter nc;
            nc.chi.values =
                scalar_list(in.field, need(body, "values"), value_count, "character values");
            if (body.contains("sovereign")) {
                if (!body.at("sovereign").is_boolean())
                    schema_fail("character.sovereign must be a boolean");
                nc.sovereign = body.at("sovereign").get<bool>();
            }
            in.characters.emplace(label, std::move(nc));
        }
    }

    if (j.contains("coreps")) {
        if (!h) schema_fail("coreps require a presented-style object section");
        const json& coreps = j.at("coreps");
        if (!coreps.is_object()) schema_fail("coreps must be an object keyed by label");
        for (const auto& [label, body] : coreps.items()) {
            MatrixCorep v;
            v.size = need_size(body, "size");
            v.label = label;
            const json& entries = need(body, "entries");
            if (!entries.is_array() || entries.size() != v.size * v.size)
                schema_fail("corep '" + label + "' needs size^2 entries");
            for (const auto& e : entries)
                v.entries.push_back(poly_from_json(h->gens(), in.field, e));
            in.coreps.emplace(label, std::move(v));
        }
    }

    if (j.contains("cobraiding")) {
        if (!h) schema_fail("cobraiding requires a presented-style object section");
        const json& cb = j.at("cobraiding");
        size_t n = h->gens()->size();
        in.cobraiding_table = scalar_list(in.field, need(cb, "table"), n * n, "cobraiding table");
        if (cb.contains("inverse_table"))
            in.cobraiding_inverse =
                scalar_list(in.field, cb.at("inverse_table"), n * n, "cobraiding inverse table");
    }

    if (j.contains("cotwist")) {
        if (!in.cobraiding_table) schema_fail("cotwist requires a cobraiding section");
        std::string label = need_string(j.at("cotwist"), "character");
        if (!in.characters.count(label))
            schema_fail("cotwist character '" + label + "' is not declared");
        in.cotwist_character = label;
    }

    if (j.contains("options")) {
        const json& o = j.at("options");
        if (o.contains("degree_bound")) in.options.degree_bound = o.at("degree_bound").get<int>();
        if (o.contains("degree_cap")) in.options.degree_cap = o.at("degree_cap").get<int>();
        if (in.options.degree_bound < 0 || in.options.degree_cap < 1)
            schema_fail("options degrees out of range");
    }
    return in;
}

json workbench_to_json(const WorkbenchInput& in) {
    json j;
    j["schema"] = "cosov-workbench-1";
    j["field"] = field_to_json(in.field);
    if (in.finite_hopf) j["finite_hopf"] = finhopf_to_json(*in.finite_hopf);
    if (in.presentation_hopf) j["presentation_hopf"] = preshopf_to_json(*in.presentation_hopf);
    if (in.hf_matrix) j["hf_matrix"] = matrix_to_json(*in.hf_matrix);
    if (in.sle_tensor) j["sle_tensor"] = etensor_to_json(*in.sle_tensor);
    if (!in.characters.empty()) {
        json chars;
        for (const auto& [label, nc] : in.characters)
            chars[label] = {{"sovereign", nc.sovereign},
                            {"values", scalar_list_json(nc.chi.values)}};
        j["characters"] = chars;
    }
    if (!in.coreps.empty()) {
        std::optional<PresentedHopf> h = working_hopf(in);
        json coreps;
        for (const auto& [label, v] : in.coreps) {
            json entries = json::array();
            for (const auto& e : v.entries) entries.push_back(poly_to_json(*h->gens(), e));
            coreps[label] = {{"entries", entries}, {"size", v.size}};
        }
        j["coreps"] = coreps;
    }
    if (in.cobraiding_table) {
        json cb;
        cb["table"] = scalar_list_json(*in.cobraiding_table);
        if (in.cobraiding_inverse) cb["inverse_table"] = scalar_list_json(*in.cobraiding_inverse);
        j["cobraiding"] = cb;
    }
    if (in.cotwist_character) j["cotwist"] = {{"character", *in.cotwist_character}};
    j["options"] = {{"degree_bound", in.options.degree_bound},
                    {"degree_cap", in.options.degree_cap}};
    return j;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

WorkbenchInput load_workbench(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(errc::parse_error, "cannot open input file: " + path);
    json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    return parse_workbench(j);
}

void save_workbench(const WorkbenchInput& in, const std::string& path) {
    std::ofstream f(path);
    if (!f) fail(errc::parse_error, "cannot open output file: " + path);
    f << canonical_dump(workbench_to_json(in));
}

// ---- verification dispatch --------------------------------------------------

namespace {

/// Attach every character that exactly kills the relations as a 1x1
/// refutation witness, so parsed inputs regain certified negatives.
void attach_character_refuters(const WorkbenchInput& in, PresentedHopf& h) {
    if (!h.pres->refuters().empty()) return; // already equipped (or done earlier)
    std::vector<GenCharacter> candidates{counit_character(h)};
    for (const auto& [label, nc] : in.characters) candidates.push_back(nc.chi);
    for (const auto& chi : candidates) {
        if (chi.values.size() != h.gens()->size()) continue;
        bool kills = true;
        for (const auto& r : h.pres->relations())
            if (!char_eval(chi, h.field(), r).is_zero()) kills = false;
        if (!kills) continue;
        std::vector<Matrix> images;
        for (const auto& v : chi.values) {
            Matrix m(1, 1, h.field());
            m.at(0, 0) = v;
            images.push_back(std::move(m));
        }
        h.pres->attach_refuter(MatrixRep{std::move(images)});
    }
}

void run_presented_sections(Report& rep, const PresentedHopf& h, const WorkbenchInput& in,
                            int d) {
    for (const auto& [label, nc] : in.characters) {
        CheckResult c = check_character(h, nc.chi);
        c.name = "character";
        c.detail = c.detail.empty() ? label : label + ": " + c.detail;
        rep.add(c);
        if (nc.sovereign) {
            CheckResult s = verify_sovereign_pres(h, nc.chi, d);
            s.name = "verify_sovereign";
            s.detail = s.detail.empty() ? label : label + ": " + s.detail;
            rep.add(s);
        }
    }
    for (const auto& [label, v] : in.coreps) {
        CheckResult c = check_corep(h, v, d);
        c.name = "corep";
        c.detail = c.detail.empty() ? label : label + ": " + c.detail;
        rep.add(c);
    }
    if (in.cobraiding_table) {
        Cobraiding cob =
            make_cobraiding(h, *in.cobraiding_table,
                            in.cobraiding_inverse ? *in.cobraiding_inverse
                                                  : std::vector<Scalar>{});
        rep.merge(check_cobraiding(cob, d));
        rep.add(check_lambda_beta_inverse(cob, d));
        rep.add(check_s2_convolution(cob, d));
        if (in.cotwist_character) {
            const GenCharacter& chi = in.characters.at(*in.cotwist_character).chi;
            try {
                CotwistData tau = thm_A3_forward(cob, chi);
                rep.merge(check_cotwist(cob, tau, d));
            } catch (const Error& e) {
                rep.add(CheckResult::fail("cotwist.seed_character", e.what(), d));
            }
        }
    }
}

Report run_at_degree(const WorkbenchInput& in, int d) {
    Report rep;
    if (in.finite_hopf) {
        const FinHopf& a = *in.finite_hopf;
        rep.merge(verify_fin_hopf(a));
        rep.notes.push_back(std::string("is_involutory = ") +
                            (is_involutory(a) ? "true" : "false"));
        for (const auto& [label, nc] : in.characters) {
            CheckResult c = check_character_fd(a, nc.chi);
            c.name = "character";
            c.detail = c.detail.empty() ? label : label + ": " + c.detail;
            rep.add(c);
            if (nc.sovereign) {
                CheckResult s = verify_sovereign_fd(a, nc.chi);
                s.name = "verify_sovereign";
                s.detail = s.detail.empty() ? label : label + ": " + s.detail;
                rep.add(s);
            }
        }
        return rep;
    }
    if (in.presentation_hopf) {
        PresentedHopf h = *in.presentation_hopf;
        attach_character_refuters(in, h);
        rep.merge(verify_presented_hopf(h, d));
        run_presented_sections(rep, h, in, d);
        return rep;
    }
    if (in.hf_matrix) {
        HFAlgebra h = build_HF(*in.hf_matrix);
        rep.merge(verify_HF(h, d));
        DimensionPair dim = dims(h.hopf, h.corep_u, h.phi);
        rep.notes.push_back("dims(u) = (" + dim.left.to_string() + ", " + dim.right.to_string() +
                            ")");
        run_presented_sections(rep, h.hopf, in, d);
        return rep;
    }
    SLEAlgebra a = build_SLE(*in.sle_tensor);
    rep.merge(verify_presented_hopf(a.hopf, d));
    rep.add(check_corep(a.hopf, a.corep_a, d));
    if (a.phi_beta) {
        CheckResult s = sovereign_char_beta(a, d);
        s.name = "verify_sovereign";
        s.detail = s.detail.empty() ? "phi_beta" : "phi_beta: " + s.detail;
        rep.add(s);
        DimensionPair dim = dims(a.hopf, a.corep_a, *a.phi_beta);
        rep.notes.push_back("dims(a) = (" + dim.left.to_string() + ", " + dim.right.to_string() +
                            ")");
    } else {
        rep.notes.push_back("no multiplicative sovereign character candidate (beta missing)");
    }
    run_presented_sections(rep, a.hopf, in, d);
    return rep;
}

int start_degree(const WorkbenchInput& in) {
    std::optional<PresentedHopf> h = working_hopf(in);
    if (!h) return 0;
    return std::max<int>(2, static_cast<int>(h->pres->max_relation_degree()));
}

} // namespace

VerifyOutcome run_verification(const WorkbenchInput& in) {
    if (in.finite_hopf) return {run_at_degree(in, 0), 0};
    if (in.options.degree_bound > 0)
        return {run_at_degree(in, in.options.degree_bound), in.options.degree_bound};
    int cap = in.options.degree_cap;
    int d = std::min(start_degree(in), cap);
    for (;;) {
        Report rep = run_at_degree(in, d);
        if (rep.any_fail() || rep.count(CheckStatus::inconclusive) == 0 || d >= cap)
            return {std::move(rep), d};
        d = std::min(d + 2, cap);
    }
}

int report_exit_code(const Report& rep) {
    if (rep.any_fail()) return 1;
    if (rep.count(CheckStatus::inconclusive) > 0) return 2;
    return 0;
}

std::string report_to_text(const Report& rep, int degree_used) {
    std::ostringstream out;
    for (const auto& c : rep.checks) {
        out << to_string(c.status) << "\t" << c.name;
        if (!c.detail.empty()) out << "  [" << c.detail << "]";
        if (c.degree >= 0) out << "  (degree " << c.degree << ")";
        out << "\n";
    }
    for (const auto& n : rep.notes) out << "note: " << n << "\n";
    out << "summary: " << rep.count(CheckStatus::pass) << " pass, "
        << rep.count(CheckStatus::fail) << " fail, " << rep.count(CheckStatus::inconclusive)
        << " inconclusive (degree used " << degree_used << ")\n";
    return out.str();
}

json report_to_json(const Report& rep, int degree_used) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"degree", c.degree},
                          {"detail", c.detail},
                          {"name", c.name},
                          {"status", to_string(c.status)}});
    return {{"checks", checks},
            {"degree_used", degree_used},
            {"notes", rep.notes},
            {"summary",
             {{"fail", rep.count(CheckStatus::fail)},
              {"inconclusive", rep.count(CheckStatus::inconclusive)},
              {"pass", rep.count(CheckStatus::pass)}}}};
}

// ---- dims -------------------------------------------------------------------

DimensionPair dims_for(const WorkbenchInput& in, const std::string& corep_label,
                       const std::string& char_label) {
    int cap = in.options.degree_cap;
    if (in.finite_hopf) {
        const FinHopf& a = *in.finite_hopf;
        if (corep_label != "regular")
            fail(errc::unknown_label, "finite-dimensional inputs expose the corep 'regular'");
        auto it = in.characters.find(char_label);
        if (it == in.characters.end())
            fail(errc::unknown_label, "unknown character '" + char_label + "'");
        if (!check_character_fd(a, it->second.chi).ok() ||
            !verify_sovereign_fd(a, it->second.chi).ok())
            fail(errc::not_sovereign, "character '" + char_label + "' is not sovereign");
        return dims_fd(a, regular_corep(a), it->second.chi);
    }

    PresentedHopf h = *working_hopf(in);
    std::map<std::string, MatrixCorep> coreps = in.coreps;
    std::map<std::string, GenCharacter> chars;
    for (const auto& [label, nc] : in.characters) chars.emplace(label, nc.chi);
    coreps.emplace("trivial", trivial_corep(h));
    if (in.hf_matrix) {
        HFAlgebra hf = build_HF(*in.hf_matrix);
        coreps.emplace("u", hf.corep_u);
        coreps.emplace("v", hf.corep_v);
        chars.emplace("phi_F", hf.phi);
    }
    if (in.sle_tensor) {
        SLEAlgebra a = build_SLE(*in.sle_tensor);
        coreps.emplace("a", a.corep_a);
        if (a.phi_beta) chars.emplace("phi_beta", *a.phi_beta);
    }

    auto cit = coreps.find(corep_label);
    if (cit == coreps.end()) fail(errc::unknown_label, "unknown corep '" + corep_label + "'");
    auto xit = chars.find(char_label);
    if (xit == chars.end()) fail(errc::unknown_label, "unknown character '" + char_label + "'");
    if (!check_character(h, xit->second).ok() ||
        !verify_sovereign_pres(h, xit->second, cap).ok())
        fail(errc::not_sovereign, "character '" + char_label + "' is not verified sovereign");
    return dims(h, cit->second, xit->second);
}

// ---- builders ---------------------------------------------------------------

WorkbenchInput build_hf_input(const Matrix& f) {
    (void)build_HF(f); // validates invertibility (errc::singular)
    WorkbenchInput in;
    in.field = f.field();
    in.hf_matrix = f;
    return in;
}

WorkbenchInput build_sle_input(const ETensor& e) {
    (void)build_SLE(e); // validates nondegeneracy (errc::degenerate)
    WorkbenchInput in;
    in.field = e.field;
    in.sle_tensor = e;
    return in;
}

WorkbenchInput build_eq_input(size_t n) { return build_sle_input(build_Eq(n)); }

WorkbenchInput build_hn_input(size_t n) {
    PresentedHopf h = builtin_Hn(n);
    WorkbenchInput in;
    in.field = h.field();
    in.presentation_hopf = std::move(h);
    return in;
}

WorkbenchInput build_sweedler_input() {
    WorkbenchInput in;
    FinHopf a = builtin_sweedler();
    in.field = a.field;
    const FieldDesc& f = a.field;
    NamedCharacter eps{counit_character_fd(a), false};
    NamedCharacter phi{GenCharacter{{Scalar::one(f), Scalar::from_int(f, -1), Scalar::zero(f),
                                     Scalar::zero(f)}},
                       true};
    in.finite_hopf = std::move(a);
    in.characters.emplace("eps", std::move(eps));
    in.characters.emplace("phi", std::move(phi));
    return in;
}

} // namespace cosov
