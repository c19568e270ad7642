// Finite model of operators on a scale of weighted l^2 spaces.
//
// The scale is indexed by integers s in {-n..n}. The norm of x in level s is
// ||diag(h^s) x||_2 with strictly increasing weights h_k >= 1, so a *larger*
// index is a *smaller* space and the involution is s -> -s. The (q -> p)
// operator norm of a matrix A is the largest singular value of
// diag(h^p) A diag(h^-q), computed by power iteration.
//
// An operator is admissible between levels q -> p when that norm stays
// under the bound cap; J(A) is the set of admissible (q,p) pairs. It is a
// coherent staircase: raising q (shrinking the domain space) or lowering p
// (growing the target) preserves admissibility. D(A) projects J on q,
// I(A) on p.
//
// Note on order conventions: lattice statements about the multiplier sets
// L_s = {C : s in D(C)} and R_s = {B : s in I(B)} are monotone in the
// *space-inclusion* order, which the weight convention reverses relative to
// numeric index order: R_s grows as the level space H_s grows, i.e. as the
// numeric index decreases.
#pragma once

#include "parlat/relation.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace parlat {

enum class WeightKind { Linear, Quadratic, Exponential, Custom };

struct HilbertScale {
    int half_range = 1;            // index set {-half_range .. half_range}
    int dim = 2;                   // truncation dimension
    std::vector<double> weights;   // h_k >= 1, strictly increasing

    static HilbertScale make(int half_range, int dim, WeightKind kind = WeightKind::Linear,
                             std::vector<double> custom = {});

    double level_norm(const Eigen::VectorXcd& x, int s) const;
    bool valid_index(int s) const { return s >= -half_range && s <= half_range; }
    std::vector<int> indices() const;
};

struct ScaleOperator {
    Eigen::MatrixXcd matrix;
    int declared_order = 0;
    double bound_cap = 10.0;

    static ScaleOperator diagonal_power(const HilbertScale& scale, int order,
                                        double cap = 10.0);
    static ScaleOperator identity(const HilbertScale& scale, double cap = 10.0);
    static ScaleOperator shift(const HilbertScale& scale, int offset, double cap = 10.0);
};

struct OpNorm {
    double value = 0.0;
    bool converged = true;
};

// Largest singular value of diag(h^p) A diag(h^-q), power iteration on the
// normal matrix to relative tolerance 1e-8 (capped iterations, flagged).
OpNorm op_norm(const HilbertScale& scale, const Eigen::MatrixXcd& matrix, int q, int p);

struct IndexSets {
    std::vector<std::pair<int, int>> admissible;  // (q, p) pairs under the cap
    std::vector<int> domain;                      // D(A)
    std::vector<int> range;                       // I(A)
    bool plateau_warning = false;  // some norm within 1% of the cap
};

// Computes J(A) under the operator's cap and asserts staircase coherence.
// A coherence violation with a norm near the cap throws a plateau
// diagnostic (the cap cuts through a norm plateau and the classification
// is not stable).
IndexSets index_sets(const HilbertScale& scale, const ScaleOperator& op);

// Conjugate transpose; same declared order and cap. The admissibility
// diagram mirrors: (q,p) in J(A) iff (-p,-q) in J(A*).
ScaleOperator adjoint(const ScaleOperator& op);

// Defined iff the factorization channel I(B) n D(A) is nonempty; the
// composite matrix with summed declared order. Undefined is a value.
std::optional<ScaleOperator> partial_compose(const HilbertScale& scale,
                                             const ScaleOperator& a,
                                             const ScaleOperator& b);

struct MultiplierSets {
    std::vector<int> left_members;   // indices into the sample: s in D(op)
    std::vector<int> right_members;  // indices into the sample: s in I(op)
};

MultiplierSets multiplier_sets(const HilbertScale& scale,
                               const std::vector<ScaleOperator>& sample, int s);

// The three-level scale {-1, 0, 1} modeling a Hilbert triplet, with a
// default truncation dimension.
HilbertScale triplet_configuration(int dim = 16);

// Classification of an operator against the triplet: membership in the
// ambient model, in the analogue of the universal right multipliers
// (bounded on the small space), its adjoint class (bounded on the big
// space), the core where both hold, and the left multipliers of the core.
struct TripletClass {
    bool in_model = false;     // J(A) nonempty
    bool in_ra = false;        // 1 in I(A): maps into the small space
    bool in_la = false;        // -1 in D(A): defined on the big space
    bool in_core = false;      // in_ra and adjoint in_ra
    bool left_of_ra = false;   // 1 in D(A): defined on the small space
};
TripletClass classify_on_triplet(const HilbertScale& scale, const ScaleOperator& op);

}  // namespace parlat
