#pragma once

// Exact realizations of partial crossed products and matrix algebras over
// them, and term-by-term checks of the isomorphism psi, the conditional
// expectation E, the corner embedding c and corner fullness.

#include "partact/decomposition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace partact {

/// Finite-dimensional *-algebra with sparse rational structure constants.
class RationalAlgebra {
public:
    RationalAlgebra(std::vector<std::string> labels, std::vector<SparseVector> products,
                    std::vector<SparseVector> stars, std::optional<Vector> unit);

    std::size_t dimension() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const SparseVector& basis_product(std::size_t i, std::size_t j) const { return products_[i * dimension() + j]; }
    const SparseVector& basis_star(std::size_t i) const { return stars_[i]; }
    const std::optional<Vector>& unit() const { return unit_; }

    Vector multiply(const Vector& a, const Vector& b) const;
    Vector star(const Vector& a) const;
    Vector basis(std::size_t i) const { return unit_vector(dimension(), i); }

private:
    std::vector<std::string> labels_;
    std::vector<SparseVector> products_;
    std::vector<SparseVector> stars_;
    std::optional<Vector> unit_;
};

struct AlgebraCheck {
    bool associative = false;
    bool involutive = false;       // (a*)* = a
    bool anti_multiplicative = false;  // (ab)* = b* a*
    bool unit_ok = false;          // true when no unit is declared
    std::string witness;
    bool ok() const { return associative && involutive && anti_multiplicative && unit_ok; }
};
AlgebraCheck check_algebra(const RationalAlgebra& alg);

/// Basis {(x, g) : x in X_g}, ordered by g then x; (x,g)(y,h) = (x,gh) when
/// y = sigma_{g^-1}(x), else 0; (x,g)* = (sigma_{g^-1}(x), g^-1).
struct CrossedProduct {
    RationalAlgebra algebra;
    std::vector<std::pair<Point, Element>> basis;
    std::vector<std::vector<std::size_t>> index;  // [g][x] -> basis index or npos
    std::size_t index_of(Point x, Element g) const { return index[g][x]; }
    /// f in C(X) as sum_x f(x) (x, 1).
    Vector coefficient(const Vector& f) const;
};
CrossedProduct realize_crossed_product(const PartialAction& pa);

/// M_s(B): basis (b, j, k) at index (j s + k) dim(B) + b.
RationalAlgebra matrix_algebra(const RationalAlgebra& b, std::size_t s);
inline std::size_t matrix_index(std::size_t dim_b, std::size_t s, std::size_t b, std::size_t j, std::size_t k) {
    return (j * s + k) * dim_b + b;
}

/// Linear map stored by the images of the domain basis vectors.
struct LinearMapQ {
    std::size_t domain_dim = 0;
    std::size_t codomain_dim = 0;
    std::vector<SparseVector> columns;
    Vector apply(const Vector& v) const;
    std::size_t rank() const;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool ok() const;
    void add(std::string name, bool pass, std::string witness = {});
};

/// Representatives and base tuple for one summand; defaults to the
/// certificate's minimal choices.
struct SummandChoice {
    std::optional<Tuple> base;
    std::optional<std::vector<Element>> reps;
};

struct PsiResult {
    Tuple base;
    std::size_t m = 0;
    Subgroup stabilizer;
    std::vector<Point> summand_points;  // original indices
    CrossedProduct source;              // of the restriction to X_{G.t}
    CrossedProduct coefficient;         // C(X_t) x| H as a G-partial crossed product
    RationalAlgebra target;             // M_{m+1}(coefficient)
    LinearMapQ map;
    VerificationReport report;
};

/// psi for the summand containing t, with t as base. Throws
/// NotDecomposableError or std::invalid_argument when t is not a point type.
PsiResult build_psi(const PartialAction& pa, const Tuple& t, const SummandChoice& choice = {});

struct VerifyOptions {
    std::uint64_t seed = 0x5eed;
    std::size_t enumerate_limit = 256;  // enumerate rep choices up to this count
    std::size_t samples = 32;           // otherwise sample this many
};

struct ExpectationResult {
    QMatrix matrix;  // on functions on X
    VerificationReport report;
};
/// E = sum of E_t over summands.
ExpectationResult build_expectation(const PartialAction& pa, const VerifyOptions& options = {});
/// E for explicit base tuples and representatives per summand.
QMatrix expectation_matrix(const PartialAction& pa, const std::vector<OrbitSummand>& summands);

struct CornerResult {
    CrossedProduct crossed;
    LinearMapQ map;     // functions on X -> crossed product
    Vector projection;  // p = c(1)
    VerificationReport report;
};
CornerResult build_corner(const PartialAction& pa, const VerifyOptions& options = {});
LinearMapQ corner_map(const PartialAction& pa, const CrossedProduct& cp, const std::vector<OrbitSummand>& summands);

/// Whether the two-sided ideal generated by p is the whole algebra.
/// Throws std::invalid_argument unless p is a self-adjoint idempotent.
bool check_fullness(const RationalAlgebra& alg, const Vector& p);
/// Rank of span{a p b}.
std::size_t ideal_rank(const RationalAlgebra& alg, const Vector& p);

struct FreenessResult {
    bool free = false;
    bool full = false;
    bool agree() const { return free == full; }
    std::optional<Element> witness_element;
    std::optional<Point> witness_point;
};
/// Compares is_free with fullness of the corner, stratum by stratum.
FreenessResult freeness_equivalence(const PartialAction& pa);

/// Every check for a decomposable action.
VerificationReport verify_decomposable(const PartialAction& pa, const VerifyOptions& options = {});

}  // namespace partact
