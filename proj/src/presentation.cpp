#include "cosov/presentation.hpp"

#include <algorithm>
#include <map>

namespace cosov {

Matrix eval_matrix_rep(const MatrixRep& rep, const FieldDesc& f, const NCPoly& p) {
    if (rep.images.empty()) fail(errc::invalid_argument, "empty matrix representation");
    size_t n = rep.images[0].rows();
    Matrix out(n, n, f);
    for (const auto& [w, s] : p.terms()) {
        Matrix prod = Matrix::identity(n, f);
        for (uint16_t g : w) {
            if (g >= rep.images.size()) fail(errc::missing_image, "refuter lacks generator image");
            prod = prod * rep.images[g];
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) out.at(i, j) += prod.at(i, j) * s;
    }
    return out;
}

namespace {

using WordRow = std::map<Word, Scalar, WordLess>;

void row_add(WordRow& row, const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = row.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) row.erase(it);
    }
}

// Echelon basis of the truncated ideal span. Pivot of a row is its largest
// word. Full reduction (eliminating pivot words anywhere) computes the
// canonical normal form modulo the span.
class SpanBasis {
  public:
    void insert(WordRow row) {
        reduce_leading(row);
        if (row.empty()) return;
        Word lead = row.rbegin()->first;
        Scalar c = row.rbegin()->second;
        WordRow norm;
        for (auto& [k, v] : row) norm.emplace(k, v / c);
        rows_.emplace(std::move(lead), std::move(norm));
    }

    // Eliminate leading terms only; membership test.
    void reduce_leading(WordRow& row) const {
        while (!row.empty()) {
            auto it = rows_.find(row.rbegin()->first);
            if (it == rows_.end()) return;
            subtract(row, row.rbegin()->second, it->second);
        }
    }

    // Eliminate pivot words anywhere; canonical coset representative.
    WordRow normal_form(WordRow row) const {
        while (true) {
            auto hit = row.end();
            for (auto it = row.begin(); it != row.end(); ++it) {
                if (rows_.count(it->first)) {
                    hit = it;
                    break;
                }
            }
            if (hit == row.end()) return row;
            subtract(row, hit->second, rows_.at(hit->first));
        }
    }

    const WordRow& normal_form_of_word(const Word& w) const {
        auto it = word_nf_.find(w);
        if (it != word_nf_.end()) return it->second;
        WordRow row;
        row.emplace(w, Scalar::one(field_));
        return word_nf_.emplace(w, normal_form(std::move(row))).first->second;
    }

    void set_field(const FieldDesc& f) { field_ = f; }

  private:
    static void subtract(WordRow& row, const Scalar& c, const WordRow& basis_row) {
        for (const auto& [k, v] : basis_row) row_add(row, k, -(c * v));
    }

    std::map<Word, WordRow, WordLess> rows_;
    FieldDesc field_ = FieldDesc::rationals();
    mutable std::map<Word, WordRow, WordLess> word_nf_;
};

// Rewriting fast path: orient each relation by its leading word and rewrite
// occurrences anywhere in a term; replacements are strictly smaller in the
// word order, so this terminates. Reaching zero certifies membership.
bool rewrite_to_zero(NCPoly cur, const std::vector<NCPoly>& relations) {
    struct Rule {
        Word lead;
        Scalar lead_coeff;
        const NCPoly* rel;
    };
    std::vector<Rule> rules;
    for (const auto& r : relations)
        rules.push_back({r.terms().rbegin()->first, r.terms().rbegin()->second, &r});
    auto reduce_once = [&rules](NCPoly& p) {
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            const Word w = it->first;
            const Scalar coeff = it->second;
            for (const auto& rule : rules) {
                if (rule.lead.empty() || rule.lead.size() > w.size()) continue;
                for (size_t pos = 0; pos + rule.lead.size() <= w.size(); ++pos) {
                    if (!std::equal(rule.lead.begin(), rule.lead.end(), w.begin() + pos)) continue;
                    Word x(w.begin(), w.begin() + pos);
                    Word y(w.begin() + pos + rule.lead.size(), w.end());
                    NCPoly xry = NCPoly::monomial(p.gens(), x, Scalar::one(p.field())) *
                                 (*rule.rel) *
                                 NCPoly::monomial(p.gens(), y, Scalar::one(p.field()));
                    p -= xry.scaled(coeff / rule.lead_coeff);
                    return true;
                }
            }
        }
        return false;
    };
    while (!cur.is_zero()) {
        if (!reduce_once(cur)) return false;
    }
    return true;
}

Membership refute(const NCPoly& p, const Presentation& pres) {
    for (const auto& rep : pres.refuters()) {
        if (!eval_matrix_rep(rep, pres.field(), p).is_zero()) return Membership::not_member;
    }
    return Membership::inconclusive;
}

Matrix eval_word(const MatrixRep& rep, const FieldDesc& f, const Word& w) {
    Matrix prod = Matrix::identity(rep.images[0].rows(), f);
    for (uint16_t g : w) {
        if (g >= rep.images.size()) fail(errc::missing_image, "refuter lacks generator image");
        prod = prod * rep.images[g];
    }
    return prod;
}

// Evaluate t under rep (x) rep; a nonzero image refutes tensor membership.
Membership tensor_refute(const TensorPoly& t, const Presentation& pres) {
    for (const auto& rep : pres.refuters()) {
        size_t n = rep.images[0].rows();
        Matrix acc(n * n, n * n, pres.field());
        for (const auto& [k, s] : t.terms()) {
            Matrix a = eval_word(rep, pres.field(), k.first);
            Matrix b = eval_word(rep, pres.field(), k.second);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    for (size_t kk = 0; kk < n; ++kk)
                        for (size_t l = 0; l < n; ++l)
                            acc.at(i * n + kk, j * n + l) += a.at(i, j) * b.at(kk, l) * s;
        }
        if (!acc.is_zero()) return Membership::not_member;
    }
    return Membership::inconclusive;
}

} // namespace

class MembershipCache {
  public:
    SpanBasis& span_basis(const Presentation& pres, int d) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = span_.find(d);
        if (it != span_.end()) return it->second;
        auto& basis = span_[d];
        basis.set_field(pres.field());
        const auto& gens = *pres.gens();
        for (const auto& r : pres.relations()) {
            int room = d - static_cast<int>(r.degree());
            if (room < 0) continue;
            auto xs = words_up_to(gens.size(), static_cast<size_t>(room));
            for (const auto& x : xs) {
                for (const auto& y : xs) {
                    if (static_cast<int>(x.size() + y.size()) > room) continue;
                    WordRow row;
                    for (const auto& [w, s] : r.terms()) row_add(row, concat(concat(x, w), y), s);
                    basis.insert(std::move(row));
                }
            }
        }
        return basis;
    }

  private:
    std::mutex mutex_;
    std::map<int, SpanBasis> span_;
};

Presentation::Presentation(GenSetPtr gens, FieldDesc field, std::vector<NCPoly> relations)
    : gens_(std::move(gens)),
      field_(std::move(field)),
      relations_(std::move(relations)),
      cache_(std::make_shared<MembershipCache>()) {
    for (const auto& r : relations_) {
        if (r.is_zero()) fail(errc::invalid_argument, "zero relation");
        if (r.degree() < 1) fail(errc::invalid_argument, "relation of degree 0");
    }
}

size_t Presentation::max_relation_degree() const {
    size_t d = 1;
    for (const auto& r : relations_) d = std::max(d, r.degree());
    return d;
}

void Presentation::attach_refuter(MatrixRep rep) {
    for (const auto& r : relations_) {
        if (!eval_matrix_rep(rep, field_, r).is_zero())
            fail(errc::invalid_argument, "refuter does not kill all relations");
    }
    refuters_.push_back(std::move(rep));
}

bool Presentation::same_presentation(const Presentation& a, const Presentation& b) {
    if (!(*a.gens_ == *b.gens_) || !(a.field_ == b.field_)) return false;
    // compare relation sets after scaling each to leading coefficient 1
    auto normalize = [](const std::vector<NCPoly>& rels) {
        std::vector<std::string> keys;
        for (const auto& r : rels) keys.push_back(r.scaled(r.terms().rbegin()->second.inverse()).to_string());
        std::sort(keys.begin(), keys.end());
        return keys;
    };
    return normalize(a.relations_) == normalize(b.relations_);
}

MembershipResult ideal_membership(const NCPoly& p, const Presentation& pres, int d) {
    if (p.is_zero()) return {Membership::member, d};
    if (static_cast<int>(p.degree()) > d)
        fail(errc::degree_exceeded, "candidate degree exceeds bound");
    if (rewrite_to_zero(p, pres.relations())) return {Membership::member, d};
    WordRow row;
    for (const auto& [w, s] : p.terms()) row_add(row, w, s);
    auto& basis = pres.cache().span_basis(pres, d);
    basis.reduce_leading(row);
    if (row.empty()) return {Membership::member, d};
    return {refute(p, pres), d};
}

MembershipResult tensor_ideal_membership(const TensorPoly& t, const Presentation& pres, int d) {
    if (t.is_zero()) return {Membership::member, d};
    for (const auto& [k, s] : t.terms()) {
        if (static_cast<int>(k.first.size()) > d || static_cast<int>(k.second.size()) > d)
            fail(errc::degree_exceeded, "tensor leg degree exceeds bound");
    }
    // t lies in I (x) F + F (x) I iff it dies under the tensor square of the
    // quotient map, computed leg-by-leg via span normal forms.
    auto& basis = pres.cache().span_basis(pres, d);
    std::map<std::pair<Word, Word>, Scalar> residual;
    for (const auto& [k, s] : t.terms()) {
        const WordRow& lnf = basis.normal_form_of_word(k.first);
        const WordRow& rnf = basis.normal_form_of_word(k.second);
        for (const auto& [lw, lc] : lnf)
            for (const auto& [rw, rc] : rnf) {
                Scalar c = s * lc * rc;
                if (c.is_zero()) continue;
                auto [it, inserted] = residual.emplace(std::make_pair(lw, rw), c);
                if (!inserted) {
                    it->second += c;
                    if (it->second.is_zero()) residual.erase(it);
                }
            }
    }
    if (residual.empty()) return {Membership::member, d};
    return {tensor_refute(t, pres), d};
}

} // namespace cosov
