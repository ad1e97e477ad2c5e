/// Text file formats (DomainFile, ConditionFile) and JSON serialization.
///
/// DomainFile:    header "n=<k>", then one order per line as space-separated
///                labels, most preferred first, lines sorted.
/// ConditionFile: header "n=<k>", then one line per triple in lex order:
///                "i j k : <symbol>", symbol one of 1N3..3N2 or "-".
#pragma once

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "aspd/conditions.hpp"
#include "aspd/richness.hpp"
#include "aspd/voting.hpp"

namespace aspd {

class io_error : public std::runtime_error {
public:
    io_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

inline int parse_header(const std::string& text, int line_no) {
    if (text.rfind("n=", 0) != 0) throw io_error(line_no, "malformed header, expected \"n=<k>\"");
    try {
        std::size_t used = 0;
        int n = std::stoi(text.substr(2), &used);
        if (used != text.size() - 2 || n < 1) throw io_error(line_no, "malformed header value");
        return n;
    } catch (const io_error&) {
        throw;
    } catch (const std::exception&) {
        throw io_error(line_no, "malformed header value");
    }
}

}  // namespace detail

inline void emit_domain(std::ostream& os, const Domain& d) {
    os << "n=" << d.n() << "\n";
    for (const Order& o : d.orders) {
        for (std::size_t i = 0; i < o.size(); ++i) os << (i ? " " : "") << o[i];
        os << "\n";
    }
}

inline Domain parse_domain(std::istream& is) {
    std::string line;
    int line_no = 1;
    if (!std::getline(is, line)) throw io_error(1, "empty file");
    const int n = detail::parse_header(line, 1);
    std::vector<Order> orders;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ss(line);
        Order o;
        int x;
        while (ss >> x) o.push_back(x);
        if (!ss.eof()) throw io_error(line_no, "unparsable order line");
        if (!is_permutation_of(o, ascending_alphabet(n)))
            throw io_error(line_no, "line is not a permutation of 1.." + std::to_string(n));
        if (std::find(orders.begin(), orders.end(), o) != orders.end())
            throw io_error(line_no, "duplicate order");
        orders.push_back(std::move(o));
    }
    if (orders.empty()) throw io_error(line_no, "no orders");
    return make_domain(ascending_alphabet(n), std::move(orders));
}

inline void emit_conditions(std::ostream& os, const ConditionAssignment& ca) {
    os << "n=" << ca.n << "\n";
    std::vector<Triple> tris = all_triples(ca.n);
    for (std::size_t i = 0; i < tris.size(); ++i)
        os << tris[i].a << " " << tris[i].b << " " << tris[i].c << " : "
           << sym_name(ca.symbols[i]) << "\n";
}

inline ConditionAssignment parse_conditions(std::istream& is) {
    std::string line;
    int line_no = 1;
    if (!std::getline(is, line)) throw io_error(1, "empty file");
    const int n = detail::parse_header(line, 1);
    std::vector<Triple> tris = all_triples(n);
    ConditionAssignment ca = empty_assignment(n);
    std::size_t count = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ss(line);
        int a, b, c;
        std::string colon, sym_text;
        if (!(ss >> a >> b >> c >> colon >> sym_text) || colon != ":")
            throw io_error(line_no, "unparsable condition line");
        if (count >= tris.size()) throw io_error(line_no, "too many condition lines");
        if (Triple{a, b, c} != tris[count])
            throw io_error(line_no, "triple out of order, expected " + std::to_string(tris[count].a) +
                                        " " + std::to_string(tris[count].b) + " " +
                                        std::to_string(tris[count].c));
        auto sym = sym_parse(sym_text);
        if (!sym) throw io_error(line_no, "unknown symbol \"" + sym_text + "\"");
        ca.symbols[count++] = *sym;
    }
    if (count != tris.size())
        throw io_error(line_no, "expected " + std::to_string(tris.size()) + " condition lines, got " +
                                    std::to_string(count));
    return ca;
}

inline std::string domain_to_string(const Domain& d) {
    std::ostringstream os;
    emit_domain(os, d);
    return os.str();
}

inline std::string conditions_to_string(const ConditionAssignment& ca) {
    std::ostringstream os;
    emit_conditions(os, ca);
    return os.str();
}

inline Domain domain_from_string(const std::string& text) {
    std::istringstream is(text);
    return parse_domain(is);
}

inline ConditionAssignment conditions_from_string(const std::string& text) {
    std::istringstream is(text);
    return parse_conditions(is);
}

// --- JSON ---

inline nlohmann::json to_json(const Domain& d) {
    nlohmann::json j;
    j["n"] = d.n();
    j["size"] = d.size();
    j["orders"] = d.orders;
    return j;
}

inline nlohmann::json to_json(const RichnessReport& rep, const Domain& d) {
    nlohmann::json j;
    nlohmann::json ranges = nlohmann::json::object();
    nlohmann::json rvals = nlohmann::json::object();
    for (Alt a : d.alphabet) {
        ranges[std::to_string(a)] = rep.ranges.at(a);
        rvals[std::to_string(a)] = rep.r_values.at(a);
    }
    j["ranges"] = ranges;
    j["r_values"] = rvals;
    j["richness"] = rep.richness;
    j["terminals"] = rep.terminals;
    if (rep.pivot)
        j["skewed_pivot"] = *rep.pivot;
    else
        j["skewed_pivot"] = nullptr;
    return j;
}

inline nlohmann::json to_json(const IIAVerdict& v) {
    nlohmann::json j;
    j["outcome"] = v.holds ? "holds-at-scale" : "violated";
    j["max_voters"] = v.max_voters;
    if (!v.holds) {
        nlohmann::json cx;
        cx["profile"] = v.profile;
        if (!v.deleted.empty()) cx["deleted"] = v.deleted;
        if (!v.paired_profile.empty()) {
            cx["paired_profile"] = v.paired_profile;
            cx["x"] = v.x;
            cx["y"] = v.y;
        }
        cx["winners_before"] = v.winners_before;
        cx["winners_after"] = v.winners_after;
        j["counterexample"] = cx;
    }
    return j;
}

}  // namespace aspd
