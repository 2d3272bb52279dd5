#include "cosov/ncpoly.hpp"

#include <sstream>

namespace cosov {

GenSet::GenSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second)
            fail(errc::invalid_argument, "duplicate generator name: " + names_[i]);
    }
}

size_t GenSet::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) fail(errc::unknown_label, "unknown generator: " + name);
    return it->second;
}

bool GenSet::has(const std::string& name) const { return index_.count(name) > 0; }

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

std::string word_to_string(const GenSet& gens, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        out += gens.name(w[i]);
    }
    return out;
}

std::vector<Word> words_up_to(size_t num_gens, size_t max_degree) {
    std::vector<Word> out{Word{}};
    size_t level_begin = 0;
    for (size_t d = 1; d <= max_degree; ++d) {
        size_t level_end = out.size();
        for (size_t i = level_begin; i < level_end; ++i)
            for (uint16_t g = 0; g < num_gens; ++g) {
                Word w = out[i];
                w.push_back(g);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

NCPoly NCPoly::one(GenSetPtr gens, const FieldDesc& f) {
    NCPoly p(std::move(gens), f);
    p.terms_.emplace(Word{}, Scalar::one(f));
    return p;
}

NCPoly NCPoly::monomial(GenSetPtr gens, Word w, Scalar c) {
    NCPoly p(std::move(gens), c.field());
    if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
    return p;
}

NCPoly NCPoly::generator(GenSetPtr gens, const FieldDesc& f, size_t index) {
    return monomial(std::move(gens), Word{static_cast<uint16_t>(index)}, Scalar::one(f));
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

namespace {
void require_compatible(const NCPoly& a, const NCPoly& b) {
    if (!(*a.gens() == *b.gens())) fail(errc::genset_mismatch, "operands over different generators");
    if (!(a.field() == b.field())) fail(errc::field_mismatch, "operands over different fields");
}
} // namespace

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    require_compatible(a, b);
    NCPoly c = a;
    for (const auto& [w, s] : b.terms()) c.add_term(w, s);
    return c;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) {
    require_compatible(a, b);
    NCPoly c = a;
    for (const auto& [w, s] : b.terms()) c.add_term(w, -s);
    return c;
}

NCPoly NCPoly::operator-() const {
    NCPoly c(gens_, field_);
    for (const auto& [w, s] : terms_) c.terms_.emplace(w, -s);
    return c;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
    NCPoly out(gens_, field_);
    if (c.is_zero()) return out;
    for (const auto& [w, s] : terms_) out.terms_.emplace(w, s * c);
    return out;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    require_compatible(a, b);
    NCPoly c(a.gens(), a.field());
    for (const auto& [wa, sa] : a.terms())
        for (const auto& [wb, sb] : b.terms()) c.add_term(concat(wa, wb), sa * sb);
    return c;
}

std::string NCPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, s] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << s.to_string();
        if (!w.empty()) os << "*" << word_to_string(*gens_, w);
    }
    return os.str();
}

TensorPoly TensorPoly::tensor(const NCPoly& a, const NCPoly& b) {
    TensorPoly t(a.gens(), a.field());
    for (const auto& [wa, sa] : a.terms())
        for (const auto& [wb, sb] : b.terms()) t.add_term(wa, wb, sa * sb);
    return t;
}

void TensorPoly::add_term(const Word& l, const Word& r, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(l, r);
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorPoly operator+(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly c = a;
    for (const auto& [k, s] : b.terms()) c.add_term(k.first, k.second, s);
    return c;
}

TensorPoly operator-(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly c = a;
    for (const auto& [k, s] : b.terms()) c.add_term(k.first, k.second, -s);
    return c;
}

TensorPoly TensorPoly::operator-() const {
    TensorPoly c(gens_, field_);
    for (const auto& [k, s] : terms_) c.terms_.emplace(k, -s);
    return c;
}

TensorPoly TensorPoly::scaled(const Scalar& c) const {
    TensorPoly out(gens_, field_);
    if (c.is_zero()) return out;
    for (const auto& [k, s] : terms_) out.terms_.emplace(k, s * c);
    return out;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly c(a.gens(), a.field());
    for (const auto& [ka, sa] : a.terms())
        for (const auto& [kb, sb] : b.terms())
            c.add_term(concat(ka.first, kb.first), concat(ka.second, kb.second), sa * sb);
    return c;
}

NCPoly apply_algebra_map(const std::vector<NCPoly>& images, const NCPoly& p) {
    NCPoly out(images.empty() ? p.gens() : images[0].gens(),
               p.field());
    for (const auto& [w, s] : p.terms()) {
        NCPoly prod = NCPoly::one(out.gens(), p.field());
        for (uint16_t g : w) {
            if (g >= images.size()) fail(errc::missing_image, "no image for generator");
            prod = prod * images[g];
        }
        out += prod.scaled(s);
    }
    return out;
}

NCPoly apply_anti_map(const std::vector<NCPoly>& images, const NCPoly& p) {
    NCPoly out(images.empty() ? p.gens() : images[0].gens(), p.field());
    for (const auto& [w, s] : p.terms()) {
        NCPoly prod = NCPoly::one(out.gens(), p.field());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            if (*it >= images.size()) fail(errc::missing_image, "no image for generator");
            prod = prod * images[*it];
        }
        out += prod.scaled(s);
    }
    return out;
}

TensorPoly apply_tensor_map(const std::vector<TensorPoly>& images, GenSetPtr gens,
                            const FieldDesc& f, const NCPoly& p) {
    TensorPoly out(gens, f);
    for (const auto& [w, s] : p.terms()) {
        TensorPoly prod = TensorPoly::tensor(NCPoly::one(gens, f), NCPoly::one(gens, f));
        for (uint16_t g : w) {
            if (g >= images.size()) fail(errc::missing_image, "no tensor image for generator");
            prod = prod * images[g];
        }
        out = out + prod.scaled(s);
    }
    return out;
}

Scalar apply_scalar_map_word(const std::vector<Scalar>& values, const FieldDesc& f, const Word& w) {
    Scalar prod = Scalar::one(f);
    for (uint16_t g : w) {
        if (g >= values.size()) fail(errc::missing_value, "no value for generator");
        prod *= values[g];
    }
    return prod;
}

Scalar apply_scalar_map(const std::vector<Scalar>& values, const FieldDesc& f, const NCPoly& p) {
    Scalar out = Scalar::zero(f);
    for (const auto& [w, s] : p.terms()) out += s * apply_scalar_map_word(values, f, w);
    return out;
}

} // namespace cosov
