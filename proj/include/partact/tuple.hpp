#pragma once

// A tuple is a finite subset of the group containing the identity. Point
// types of partial actions and the points of the tuple spaces are tuples.

#include "partact/group.hpp"

#include <compare>
#include <string>
#include <vector>

namespace partact {

class Tuple {
public:
    Tuple() = default;
    /// Sorts and deduplicates; does not require the identity (see valid()).
    explicit Tuple(std::vector<Element> members);

    const std::vector<Element>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(Element g) const;
    bool valid() const { return !members_.empty() && members_.front() == 0; }

    /// The set g*tuple.
    Tuple translate(const FiniteGroup& g, Element by) const;

    bool operator==(const Tuple&) const = default;
    /// Lexicographic on the sorted member lists.
    std::strong_ordering operator<=>(const Tuple& other) const;

    std::string to_string() const;

private:
    std::vector<Element> members_;
};

}  // namespace partact
