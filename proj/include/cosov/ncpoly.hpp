#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cosov/scalar.hpp"

namespace cosov {

/// Ordered set of named generators. The order fixes the monomial order.
class GenSet {
  public:
    explicit GenSet(std::vector<std::string> names);

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    /// Index of a generator name; throws errc::unknown_label if absent.
    size_t index(const std::string& name) const;
    bool has(const std::string& name) const;

    bool operator==(const GenSet& o) const { return names_ == o.names_; }

  private:
    std::vector<std::string> names_;
    std::map<std::string, size_t> index_;
};

using GenSetPtr = std::shared_ptr<const GenSet>;

/// Monomial: a finite word in generator indices; empty word is the unit.
using Word = std::vector<uint16_t>;

/// Degree-then-lexicographic word order.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

Word concat(const Word& a, const Word& b);
std::string word_to_string(const GenSet& gens, const Word& w);

/// All words of degree <= max_degree, in word order.
std::vector<Word> words_up_to(size_t num_gens, size_t max_degree);

/// Free-algebra element: finitely many words with nonzero coefficients.
class NCPoly {
  public:
    NCPoly(GenSetPtr gens, FieldDesc field) : gens_(std::move(gens)), field_(std::move(field)) {}

    static NCPoly zero(GenSetPtr gens, const FieldDesc& f) { return NCPoly(std::move(gens), f); }
    static NCPoly one(GenSetPtr gens, const FieldDesc& f);
    static NCPoly monomial(GenSetPtr gens, Word w, Scalar c);
    static NCPoly generator(GenSetPtr gens, const FieldDesc& f, size_t index);

    const GenSetPtr& gens() const { return gens_; }
    const FieldDesc& field() const { return field_; }
    const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

    void add_term(const Word& w, const Scalar& c);
    Scalar coeff(const Word& w) const;

    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

    friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly operator-() const;
    NCPoly scaled(const Scalar& c) const;
    NCPoly& operator+=(const NCPoly& b) { return *this = *this + b; }
    NCPoly& operator-=(const NCPoly& b) { return *this = *this - b; }

    std::string to_string() const;

  private:
    GenSetPtr gens_;
    FieldDesc field_;
    std::map<Word, Scalar, WordLess> terms_;
};

/// Element of the two-fold tensor square of the free algebra.
class TensorPoly {
  public:
    TensorPoly(GenSetPtr gens, FieldDesc field) : gens_(std::move(gens)), field_(std::move(field)) {}

    static TensorPoly tensor(const NCPoly& a, const NCPoly& b);

    const GenSetPtr& gens() const { return gens_; }
    const FieldDesc& field() const { return field_; }
    const std::map<std::pair<Word, Word>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& l, const Word& r, const Scalar& c);

    bool operator==(const TensorPoly& o) const { return terms_ == o.terms_; }

    friend TensorPoly operator+(const TensorPoly& a, const TensorPoly& b);
    friend TensorPoly operator-(const TensorPoly& a, const TensorPoly& b);
    friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);
    TensorPoly operator-() const;
    TensorPoly scaled(const Scalar& c) const;

  private:
    GenSetPtr gens_;
    FieldDesc field_;
    std::map<std::pair<Word, Word>, Scalar> terms_;
};

/// Multiplicative-and-linear extension of generator images (unit -> unit).
NCPoly apply_algebra_map(const std::vector<NCPoly>& images, const NCPoly& p);
/// Linear extension reversing word order before substituting.
NCPoly apply_anti_map(const std::vector<NCPoly>& images, const NCPoly& p);

/// Multiplicative extension with tensor-valued generator images.
TensorPoly apply_tensor_map(const std::vector<TensorPoly>& images, GenSetPtr gens,
                            const FieldDesc& f, const NCPoly& p);

/// Multiplicative extension of scalar generator values (a character's action).
Scalar apply_scalar_map(const std::vector<Scalar>& values, const FieldDesc& f, const NCPoly& p);
Scalar apply_scalar_map_word(const std::vector<Scalar>& values, const FieldDesc& f, const Word& w);

} // namespace cosov
