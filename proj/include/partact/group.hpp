#pragma once

// Finite groups given by Cayley tables. Element 0 is always the identity.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace partact {

using Element = std::uint32_t;

class GroupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FiniteGroup {
public:
    /// Validates `table` as a group law with identity 0. Throws GroupError
    /// naming a witness (element or triple) on failure.
    static FiniteGroup from_table(std::vector<std::vector<Element>> table, std::string name = "table");

    /// Z/n with element i = i.
    static FiniteGroup cyclic(std::size_t n);
    /// Symmetries of the n-gon (order 2n): index i + n*e stands for r^i s^e.
    static FiniteGroup dihedral(std::size_t n);
    /// Permutations of {0..n-1} in lexicographic order; a*b = a after b.
    static FiniteGroup symmetric(std::size_t n);
    /// Order 8: indices 0..7 are 1, -1, i, -i, j, -j, k, -k.
    static FiniteGroup quaternion8();

    std::size_t order() const { return order_; }
    Element identity() const { return 0; }
    Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
    Element inv(Element a) const { return inverse_[a]; }
    Element conj(Element g, Element h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1
    bool is_abelian() const;
    std::size_t element_order(Element a) const;
    const std::string& name() const { return name_; }

    std::vector<std::vector<Element>> table() const;

    bool operator==(const FiniteGroup& other) const { return table_ == other.table_; }

private:
    FiniteGroup() = default;

    std::size_t order_ = 0;
    std::vector<Element> table_;
    std::vector<Element> inverse_;
    std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Sorted member list of a subgroup of some ambient FiniteGroup.
class Subgroup {
public:
    Subgroup() = default;
    explicit Subgroup(std::vector<Element> members);

    const std::vector<Element>& members() const { return members_; }
    std::size_t order() const { return members_.size(); }
    bool contains(Element g) const;
    bool operator==(const Subgroup&) const = default;
    auto operator<=>(const Subgroup&) const = default;

private:
    std::vector<Element> members_;
};

/// Smallest subgroup containing `gens`, by closure.
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Element>& gens);

/// True iff `members` is closed under product and inverse and contains 0.
bool is_subgroup(const FiniteGroup& g, const std::vector<Element>& members);

/// Cosets Hx (H acting on the left). Each block is sorted; blocks are ordered
/// by their minimal element, which is also the chosen representative.
std::vector<std::vector<Element>> left_cosets(const FiniteGroup& g, const Subgroup& h);
std::vector<Element> coset_representatives(const FiniteGroup& g, const Subgroup& h);
/// Minimal element of Hx.
Element coset_representative(const FiniteGroup& g, const Subgroup& h, Element x);

std::size_t conjugacy_class_count(const FiniteGroup& g);
/// Classes of H under conjugation by H.
std::size_t conjugacy_class_count(const FiniteGroup& g, const Subgroup& h);

/// Subgroup g H g^-1.
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Element by);

/// Short isomorphism-type label for small groups ("triv", "C4", "V4", "S3",
/// "D4", "Q8", "A4", "S4", ...). Falls back to "G<order>c<classes>".
std::string describe_subgroup(const FiniteGroup& g, const Subgroup& h);

/// Parses `family:<name>:<n>` (cyclic, dihedral, symmetric, quaternion).
FiniteGroup group_from_family(const std::string& spec);

}  // namespace partact
