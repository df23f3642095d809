#include "partact/instance_format.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace partact {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

InvalidInstanceError::InvalidInstanceError(ValidationReport report)
    : std::runtime_error("instance violates the partial action axioms (" +
                         std::to_string(report.violations.size()) + " violation(s))"),
      report_(std::move(report)) {}

namespace {

class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    std::size_t column() const { return pos_ + 1; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column(), what); }

    std::string word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != ':' &&
               text_[pos_] != '=')
            ++pos_;
        if (start == pos_) fail("expected a word");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string token() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a token");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t number() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a non-negative integer");
        if (pos_ - start > 9) fail("integer too large");
        return static_cast<std::size_t>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    }

    void expect(std::string_view lit) {
        skip_space();
        if (text_.substr(pos_, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
        pos_ += lit.size();
    }

    bool peek(std::string_view lit) {
        skip_space();
        return text_.substr(pos_, lit.size()) == lit;
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

// Reads `n` table rows starting at lines[first]; returns the group.
FiniteGroup read_table(const std::vector<std::string_view>& lines, std::size_t& next, std::size_t n,
                       std::size_t line_offset) {
    std::vector<std::vector<Element>> rows;
    while (rows.size() < n) {
        if (next >= lines.size())
            throw ParseError(lines.size() + line_offset, 1,
                             "table ended after " + std::to_string(rows.size()) + " of " + std::to_string(n) +
                                 " rows");
        const auto body = strip_comment(lines[next]);
        ++next;
        if (blank(body)) continue;
        LineCursor cur(body, next + line_offset);
        std::vector<Element> row;
        while (!cur.at_end()) row.push_back(static_cast<Element>(cur.number()));
        if (row.size() != n) cur.fail("table row has " + std::to_string(row.size()) + " entries, expected " +
                                      std::to_string(n));
        rows.push_back(std::move(row));
    }
    return FiniteGroup::from_table(std::move(rows));
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t next = 0;
    while (next < lines.size() && blank(strip_comment(lines[next]))) ++next;
    if (next >= lines.size()) throw ParseError(1, 1, "empty group specification");
    const auto first = strip_comment(lines[next]);
    LineCursor cur(first, next + 1);
    cur.skip_space();
    if (cur.peek("family:")) {
        const std::string spec = cur.token();
        if (!cur.at_end()) cur.fail("trailing characters after group specification");
        for (std::size_t i = next + 1; i < lines.size(); ++i)
            if (!blank(strip_comment(lines[i]))) throw ParseError(i + 1, 1, "trailing content after group spec");
        try {
            return group_from_family(spec);
        } catch (const GroupError& e) {
            throw ParseError(next + 1, 1, e.what());
        }
    }
    // Explicit table: the number of entries in the first row fixes the order.
    std::size_t n = 0;
    {
        LineCursor count(first, next + 1);
        while (!count.at_end()) {
            count.number();
            ++n;
        }
    }
    try {
        FiniteGroup g = read_table(lines, next, n, 0);
        for (std::size_t i = next; i < lines.size(); ++i)
            if (!blank(strip_comment(lines[i]))) throw ParseError(i + 1, 1, "trailing content after table");
        return g;
    } catch (const GroupError& e) {
        throw ParseError(next, 1, e.what());
    }
}

PartialAction parse_instance_unchecked(std::string_view text) {
    const auto lines = split_lines(text);
    std::optional<FiniteGroup> group;
    std::optional<std::size_t> points;
    std::optional<PartialAction> pa;
    std::set<Element> domain_seen;

    auto ensure_ready = [&](LineCursor& cur) -> PartialAction& {
        if (!group) cur.fail("'group' must precede domain and map lines");
        if (!points) cur.fail("'points' must precede domain and map lines");
        if (!pa) pa.emplace(std::make_shared<const FiniteGroup>(*group), *points);
        return *pa;
    };

    std::size_t next = 0;
    while (next < lines.size()) {
        const std::size_t lineno = next + 1;
        const auto body = strip_comment(lines[next]);
        ++next;
        if (blank(body)) continue;
        LineCursor cur(body, lineno);
        const std::string keyword = cur.word();
        if (keyword == "group") {
            if (group) cur.fail("duplicate 'group' line");
            if (cur.peek("table")) {
                cur.expect("table");
                const std::size_t n = cur.number();
                if (n == 0) cur.fail("table order must be positive");
                if (!cur.at_end()) cur.fail("trailing characters after 'group table <n>'");
                try {
                    group = read_table(lines, next, n, 0);
                } catch (const GroupError& e) {
                    throw ParseError(lineno, 1, e.what());
                }
            } else {
                const std::string spec = cur.token();
                if (!cur.at_end()) cur.fail("trailing characters after group specification");
                try {
                    group = group_from_family(spec);
                } catch (const GroupError& e) {
                    throw ParseError(lineno, 1, e.what());
                }
            }
        } else if (keyword == "points") {
            if (points) cur.fail("duplicate 'points' line");
            points = cur.number();
            if (!cur.at_end()) cur.fail("trailing characters after point count");
        } else if (keyword == "domain" || keyword == "map") {
            PartialAction& action = ensure_ready(cur);
            cur.expect("g");
            cur.expect("=");
            const std::size_t col = cur.column();
            const std::size_t g = cur.number();
            if (g >= group->order())
                throw ParseError(lineno, col, "group element " + std::to_string(g) + " out of range");
            cur.expect(":");
            if (keyword == "domain") {
                if (!domain_seen.insert(static_cast<Element>(g)).second)
                    cur.fail("duplicate domain line for g=" + std::to_string(g));
                std::vector<Point> dom;
                std::set<std::size_t> seen;
                while (!cur.at_end()) {
                    const std::size_t pcol = cur.column();
                    const std::size_t x = cur.number();
                    if (x >= *points)
                        throw ParseError(lineno, pcol, "point " + std::to_string(x) + " out of range");
                    if (!seen.insert(x).second)
                        throw ParseError(lineno, pcol, "duplicate point " + std::to_string(x) + " in domain");
                    dom.push_back(static_cast<Point>(x));
                }
                action.set_domain(static_cast<Element>(g), std::move(dom));
            } else {
                while (!cur.at_end()) {
                    const std::size_t pcol = cur.column();
                    const std::size_t a = cur.number();
                    cur.expect("->");
                    const std::size_t b = cur.number();
                    if (a >= *points || b >= *points)
                        throw ParseError(lineno, pcol,
                                         "map pair (" + std::to_string(a) + "," + std::to_string(b) +
                                             ") out of range for " + std::to_string(*points) + " points");
                    try {
                        action.set_map(static_cast<Element>(g), static_cast<Point>(a), static_cast<Point>(b));
                    } catch (const std::invalid_argument& e) {
                        throw ParseError(lineno, pcol, e.what());
                    }
                }
            }
        } else {
            throw ParseError(lineno, 1, "unknown keyword '" + keyword + "'");
        }
    }
    if (!group) throw ParseError(lines.size(), 1, "missing 'group' line");
    if (!points) throw ParseError(lines.size(), 1, "missing 'points' line");
    if (!pa) pa.emplace(std::make_shared<const FiniteGroup>(*group), *points);
    return std::move(*pa);
}

PartialAction parse_instance(std::string_view text) {
    PartialAction pa = parse_instance_unchecked(text);
    auto report = validate_partial_action(pa);
    if (!report.valid()) throw InvalidInstanceError(std::move(report));
    return pa;
}

std::string group_spec_string(const FiniteGroup& g) {
    const std::string& name = g.name();
    auto try_family = [&](const std::string& spec) -> std::optional<std::string> {
        try {
            if (group_from_family(spec) == g) return spec;
        } catch (const GroupError&) {
        }
        return std::nullopt;
    };
    if (name.size() > 1) {
        const std::string arg = name.substr(1);
        const bool digits = arg.find_first_not_of("0123456789") == std::string::npos;
        std::optional<std::string> spec;
        if (name == "Q8") spec = try_family("family:quaternion:8");
        else if (digits && name[0] == 'C') spec = try_family("family:cyclic:" + arg);
        else if (digits && name[0] == 'D') spec = try_family("family:dihedral:" + arg);
        else if (digits && name[0] == 'S') spec = try_family("family:symmetric:" + arg);
        if (spec) return *spec;
    }
    std::ostringstream os;
    os << "table " << g.order() << "\n";
    for (const auto& row : g.table()) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
        os << "\n";
    }
    std::string s = os.str();
    s.pop_back();
    return s;
}

std::string serialize_instance(const PartialAction& pa) {
    std::ostringstream os;
    const auto& g = pa.group();
    os << "group " << group_spec_string(g) << "\n";
    os << "points " << pa.point_count() << "\n";
    for (Element e = 1; e < g.order(); ++e) {
        os << "domain g=" << e << ":";
        for (Point x : pa.domain(e)) os << " " << x;
        os << "\n";
    }
    for (Element e = 1; e < g.order(); ++e) {
        os << "map g=" << e << ":";
        for (Point x = 0; x < pa.point_count(); ++x)
            if (pa.image(e, x) != kNoPoint) os << " " << x << "->" << pa.image(e, x);
        os << "\n";
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace partact
