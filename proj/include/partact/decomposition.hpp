#pragma once

// Decomposition-property detection, stratification of arbitrary finite
// partial actions by point-type size, explicit globalization of
// decomposable actions, and equivariant unit systems.

#include "partact/partial_action.hpp"
#include "partact/tuple_space.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace partact {

class NotDecomposableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Which tuple of each Lt-orbit serves as the base tuple.
enum class SectionChoice { minimal, maximal };

/// One G-invariant summand X_{G.t}: the orbit of a base tuple t, its orbit
/// data, and the points whose type lies in that orbit.
struct OrbitSummand {
    OrbitData data;                      // base tuple t = data.tuple
    std::vector<Tuple> tuple_orbit;      // x_j^-1 t, indexed by j
    std::vector<Point> points;           // X_{G.t}, sorted
    std::vector<Point> base_points;      // X_t, sorted
    std::vector<std::size_t> component;  // per entry of `points`: the j with type = x_j^-1 t
    Tuple key() const;                   // minimal tuple of the orbit
    std::size_t component_of(Point x) const;
};

struct DecompositionCertificate {
    std::size_t n = 0;
    std::vector<OrbitSummand> summands;  // ordered by key()
};

struct DecompositionRefutation {
    std::size_t n = 0;
    Point witness = 0;
    std::size_t witness_type_size = 0;
};

using DecompositionResult = std::variant<DecompositionCertificate, DecompositionRefutation>;

/// Pointwise criterion |type(x)| = n for all x. A positive answer is
/// re-checked against the ideal form (covering by X_t over T_n(G) and
/// X_t cap X_g empty for g not in t); disagreement throws std::logic_error.
DecompositionResult check_decomposition(const PartialAction& pa, std::size_t n,
                                        SectionChoice section = SectionChoice::minimal);
/// Common point-type size, or nullopt when types differ (any n for 0 points: returns 1).
std::optional<std::size_t> decomposition_parameter(const PartialAction& pa);
/// Certificate for the detected parameter; throws NotDecomposableError.
DecompositionCertificate require_decomposable(const PartialAction& pa,
                                              SectionChoice section = SectionChoice::minimal);

/// Summands built from caller-chosen base tuple and representatives.
OrbitSummand make_summand(const PartialAction& pa, const std::vector<Tuple>& types, const OrbitData& data);

/// Literal form of the n-decomposition conditions over all of T_n(G).
struct IdealFormCheck {
    bool covers = false;    // union of X_t over T_n(G) is X
    bool disjoint = false;  // X_t cap X_g empty for g not in t
};
IdealFormCheck check_ideal_form(const PartialAction& pa, std::size_t n);

struct Stratum {
    std::size_t k = 0;
    std::vector<Point> points;  // original indices, sorted
    PartialAction action;       // restriction, points renumbered in order
    DecompositionCertificate certificate;
};

/// A^(k) -> A^(k-1) with kernel supported on Y_k.
struct ExtensionStep {
    std::size_t k = 0;
    std::vector<Point> support;   // points of A^(k): type size <= k
    std::vector<Point> kernel;    // Y_k
    std::vector<Point> quotient;  // type size < k
};

struct Stratification {
    std::vector<Stratum> strata;               // nonempty strata, k descending
    std::vector<ExtensionStep> extension_chain;  // k = |G| down to 2
};

Stratification stratify(const PartialAction& pa);

struct StratificationCheck {
    bool partition = false;
    bool invariant = false;
    bool strata_decomposable = false;
    bool chain_conditions = false;  // kernels k-decomposable, no (k+1)-tuples survive, A^(1) trivial
    bool split_consistent = false;  // kernel of step k equals stratum k
    bool reassembles = false;
    bool ok() const {
        return partition && invariant && strata_decomposable && chain_conditions && split_consistent && reassembles;
    }
};
StratificationCheck verify_stratification(const PartialAction& pa, const Stratification& s);

/// Points of an invariant subset are closed under every sigma_g.
bool is_invariant(const PartialAction& pa, const std::vector<Point>& subset);

struct EnvelopeSummand {
    Tuple base;
    Subgroup stabilizer;
    std::vector<Element> coset_reps;  // representatives of H\G, ascending
    std::vector<Point> base_points;   // X_t in the original action
    std::size_t offset = 0;           // first envelope point of this summand
    std::size_t size() const { return coset_reps.size() * base_points.size(); }
};

/// Envelope point (offset + c*|X_t| + i) is the class [r_c, y_i] of
/// G x X_t modulo h.(g, y) = (h g, sigma_h(y)); beta_g [k, y] = [k g^-1, y].
struct GlobalizedAction {
    PartialAction envelope;
    std::vector<Point> embedding;  // original point -> envelope point
    std::vector<EnvelopeSummand> summands;
};

/// Throws NotDecomposableError unless pa is decomposable.
GlobalizedAction globalize(const PartialAction& pa, SectionChoice section = SectionChoice::minimal);
/// Globalizes each stratum and concatenates.
GlobalizedAction globalize_stratified(const PartialAction& pa);

struct EnvelopingCheck {
    bool envelope_global = false;
    bool embedding_injective = false;
    bool domains_match = false;   // iota(X_g) = iota(X) cap beta_g(iota(X))
    bool maps_extend = false;     // beta_g o iota = iota o sigma_g on X_{g^-1}
    bool translates_cover = false;
    std::string violation;        // first failure, empty when ok
    bool ok() const {
        return envelope_global && embedding_injective && domains_match && maps_extend && translates_cover;
    }
};
EnvelopingCheck check_enveloping(const PartialAction& pa, const GlobalizedAction& glob);

/// Equivariant bijection between two envelopes commuting with the
/// embeddings, if one exists.
std::optional<std::vector<Point>> envelope_isomorphism(const GlobalizedAction& a, const GlobalizedAction& b);

/// e_g for each g, as functions on X, built summand-wise from the unit of
/// C(X_t) by averaging over H and translating by x_j^-1.
struct UnitSystem {
    std::vector<Vector> units;  // indexed by group element
    bool matches_domain_indicators = false;
    std::size_t relations_checked = 0;
    std::vector<std::pair<Element, Element>> failures;  // (g, h) where the relation fails
    bool ok() const { return matches_domain_indicators && failures.empty(); }
};
/// Throws NotDecomposableError on non-decomposable input.
UnitSystem equivariant_unit_system(const PartialAction& pa);

}  // namespace partact
