#include "partact/tuple.hpp"

#include <algorithm>

namespace partact {

Tuple::Tuple(std::vector<Element> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Tuple::contains(Element g) const { return std::binary_search(members_.begin(), members_.end(), g); }

Tuple Tuple::translate(const FiniteGroup& g, Element by) const {
    std::vector<Element> out;
    out.reserve(members_.size());
    for (Element x : members_) out.push_back(g.mul(by, x));
    return Tuple(std::move(out));
}

std::strong_ordering Tuple::operator<=>(const Tuple& other) const {
    return std::lexicographical_compare_three_way(members_.begin(), members_.end(), other.members_.begin(),
                                                  other.members_.end());
}

std::string Tuple::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(members_[i]);
    }
    return s + "}";
}

}  // namespace partact
