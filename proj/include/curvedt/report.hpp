#pragma once

// Machine- and human-readable output: JSON documents with canonical key
// order, and plain tables rendered as aligned text or CSV. Every number is
// exact; integers that do not fit in 64 bits are emitted as decimal strings.

#include "curvedt/pipeline.hpp"
#include "curvedt/strata.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace curvedt {

using json = nlohmann::json;

inline json integer_json(const Integer& z) {
    if (auto small = to_int64(z))
        return *small;
    return z.get_str();
}

/// [{den, eu2, ev2, num}] sorted by (eu2, ev2).
inline json to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms())
        out.push_back({{"eu2", m.eu2}, {"ev2", m.ev2}, {"num", integer_json(c.get_num())}, {"den", integer_json(c.get_den())}});
    return out;
}

/// [{den, e2, num}] sorted by e2.
inline json to_json(const UniPoly& p) {
    json out = json::array();
    for (const auto& [e2, c] : p.terms())
        out.push_back({{"e2", e2}, {"num", integer_json(c.get_num())}, {"den", integer_json(c.get_den())}});
    return out;
}

inline json to_json(const std::vector<Integer>& values) {
    json out = json::array();
    for (const auto& z : values)
        out.push_back(integer_json(z));
    return out;
}

inline json to_json(const DTResult& r, const std::vector<Integer>& betti) {
    return {{"genus", r.genus},         {"rank", r.gamma.rank},          {"degree", r.gamma.degree},
            {"dim", r.dim},             {"hdt", to_json(r.hdt)},         {"ih_epoly", to_json(r.ih_epoly)},
            {"betti", to_json(betti)}};
}

inline json to_json(const DTResult& r) { return to_json(r, r.betti); }

inline json to_json(const StratumType& t) {
    json parts = json::array();
    for (const auto& p : t.parts)
        parts.push_back({{"rank", p.gamma.rank}, {"degree", p.gamma.degree}, {"multiplicity", p.multiplicity}});
    return parts;
}

inline json to_json(const SmallnessReport& r) {
    json strata = json::array();
    for (const auto& s : r.strata)
        strata.push_back({{"parts", to_json(s.type)},
                          {"codim", s.codim},
                          {"d0", s.d0},
                          {"bound", to_string(s.bound)},
                          {"maximal", s.maximal},
                          {"pass", s.pass}});
    return {{"genus", r.genus},
            {"rank", r.gamma.rank},
            {"degree", r.gamma.degree},
            {"in_small_range", r.in_small_range},
            {"strata", strata},
            {"verdict", r.verdict}};
}

/// Canonical text: sorted keys (nlohmann's default object map), no
/// whitespace, no floating point. Parsing and re-dumping is byte-identical.
inline std::string canonical_dump(const json& j) { return j.dump(); }

// ---------------------------------------------------------------------------

namespace detail {

inline std::string half_exponent(int e2) {
    if (e2 % 2 == 0)
        return std::to_string(e2 / 2);
    return std::to_string(e2) + "/2";
}

inline std::string power(const char* var, int e2) {
    if (e2 == 0)
        return "";
    if (e2 == 2)
        return var;
    return std::string(var) + "^(" + half_exponent(e2) + ")";
}

inline std::string signed_term(const Rational& c, const std::string& mono, bool first) {
    std::string out;
    const bool negative = c < 0;
    if (first)
        out = negative ? "-" : "";
    else
        out = negative ? " - " : " + ";
    Rational a = abs(c);
    if (mono.empty())
        return out + to_string(a);
    if (a != 1)
        out += to_string(a) + "*";
    return out + mono;
}

} // namespace detail

/// Terms by ascending total degree, then u-heavier terms first.
inline std::string format_poly(const LaurentPoly& p) {
    if (p.is_zero())
        return "0";
    auto terms = p.terms();
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.total() != b.first.total())
            return a.first.total() < b.first.total();
        return a.first.eu2 > b.first.eu2;
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        std::string mono = detail::power("u", m.eu2);
        const std::string vpart = detail::power("v", m.ev2);
        if (!mono.empty() && !vpart.empty())
            mono += "*";
        mono += vpart;
        out += detail::signed_term(c, mono, first);
        first = false;
    }
    return out;
}

inline std::string format_poly(const UniPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e2, c] : p.terms()) {
        out += detail::signed_term(c, detail::power("y", e2), first);
        first = false;
    }
    return out;
}

inline std::string join(const std::vector<Integer>& values, std::size_t count, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < std::min(count, values.size()); ++i) {
        if (i)
            out += sep;
        out += values[i].get_str();
    }
    return out;
}

struct ReportTable {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }

    void print_text(std::ostream& os) const {
        std::vector<std::size_t> width(headers.size(), 0);
        for (std::size_t c = 0; c < headers.size(); ++c)
            width[c] = headers[c].size();
        for (const auto& row : rows)
            for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
                width[c] = std::max(width[c], row[c].size());
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                os << cells[c];
                if (c + 1 < cells.size())
                    os << std::string(width[c] - cells[c].size() + 2, ' ');
            }
            os << '\n';
        };
        line(headers);
        for (const auto& row : rows)
            line(row);
    }

    void print_csv(std::ostream& os) const {
        auto cell = [](const std::string& s) {
            if (s.find_first_of(",\"\n") == std::string::npos)
                return s;
            std::string q = "\"";
            for (char ch : s)
                q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            return q + "\"";
        };
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c)
                os << (c ? "," : "") << cell(cells[c]);
            os << '\n';
        };
        line(headers);
        for (const auto& row : rows)
            line(row);
    }
};

} // namespace curvedt
