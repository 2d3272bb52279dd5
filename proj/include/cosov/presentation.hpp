#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "cosov/matrix.hpp"
#include "cosov/ncpoly.hpp"
#include "cosov/verdict.hpp"

namespace cosov {

/// A matrix representation of a presented algebra: one square matrix per
/// generator, with every relation evaluating to the zero matrix. Used as a
/// sound non-membership certificate.
struct MatrixRep {
    std::vector<Matrix> images;
};

Matrix eval_matrix_rep(const MatrixRep& rep, const FieldDesc& f, const NCPoly& p);

class MembershipCache;

/// Generators plus relation polynomials, with a degree-truncated two-sided
/// ideal membership oracle (sound, incomplete).
class Presentation {
  public:
    Presentation(GenSetPtr gens, FieldDesc field, std::vector<NCPoly> relations);

    const GenSetPtr& gens() const { return gens_; }
    const FieldDesc& field() const { return field_; }
    const std::vector<NCPoly>& relations() const { return relations_; }
    size_t max_relation_degree() const;

    /// Attach a verified non-membership refuter; throws if any relation has
    /// a nonzero image.
    void attach_refuter(MatrixRep rep);
    const std::vector<MatrixRep>& refuters() const { return refuters_; }

    /// Literal equality of generator names and normalized relation sets.
    static bool same_presentation(const Presentation& a, const Presentation& b);

    MembershipCache& cache() const { return *cache_; }

  private:
    GenSetPtr gens_;
    FieldDesc field_;
    std::vector<NCPoly> relations_;
    std::vector<MatrixRep> refuters_;
    mutable std::shared_ptr<MembershipCache> cache_;
};

using PresentationPtr = std::shared_ptr<Presentation>;

/// Membership of p in the two-sided ideal of the relations, truncated at
/// degree bound d. member/not_member are certified; inconclusive is not a
/// refutation.
MembershipResult ideal_membership(const NCPoly& p, const Presentation& pres, int d);

/// Membership of t in I (x) F + F (x) I, both tensor legs truncated at d.
MembershipResult tensor_ideal_membership(const TensorPoly& t, const Presentation& pres, int d);

} // namespace cosov
