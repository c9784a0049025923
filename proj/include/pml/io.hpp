#pragma once

// Serialization: poset files, family literals, labelings, orbit
// decompositions, check reports, tables, and CSP reports.  JSON output uses
// ordered maps so byte-identical reruns are guaranteed.

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pml/analysis.hpp"
#include "pml/dynamics.hpp"
#include "pml/labeling.hpp"
#include "pml/orbits.hpp"
#include "pml/poset.hpp"
#include "pml/verify.hpp"

namespace pml {

using Json = nlohmann::ordered_json;

inline Json poset_to_json(const Poset& p) {
    Json j;
    j["n"] = p.size();
    auto covers = Json::array();
    for (auto& [lo, hi] : p.covers()) covers.push_back(Json::array({lo, hi}));
    j["covers"] = covers;
    return j;
}

inline Poset poset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
        fail(ErrorCode::InvalidParameter, "poset JSON needs fields 'n' and 'covers'");
    std::vector<std::pair<int, int>> covers;
    for (auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2)
            fail(ErrorCode::InvalidParameter, "each cover must be a [lo, hi] pair");
        covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    return Poset(j.at("n").get<int>(), std::move(covers));
}

inline Poset load_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidParameter, "cannot open poset file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::InvalidParameter, "bad JSON in '" + path + "': " + e.what());
    }
    return poset_from_json(j);
}

// Family literals: chain:5, star:2,2,3, comb:4, zipper:2, t3:3.
// Anything else is treated as a path to a poset JSON file.
inline Poset parse_poset_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string family = spec.substr(0, colon);
        std::string args = spec.substr(colon + 1);
        auto parse_ints = [&]() {
            std::vector<int> out;
            std::size_t start = 0;
            while (true) {
                std::size_t comma = args.find(',', start);
                std::string part = args.substr(start, comma - start);
                try {
                    std::size_t used = 0;
                    int v = std::stoi(part, &used);
                    if (used != part.size()) throw std::invalid_argument(part);
                    out.push_back(v);
                } catch (const std::exception&) {
                    fail(ErrorCode::InvalidParameter,
                         "bad number '" + part + "' in poset spec '" + spec + "'");
                }
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            return out;
        };
        auto one_int = [&]() {
            auto v = parse_ints();
            if (v.size() != 1)
                fail(ErrorCode::InvalidParameter,
                     "family '" + family + "' takes a single parameter");
            return v[0];
        };
        if (family == "chain") return chain(one_int());
        if (family == "star") return extended_star(parse_ints());
        if (family == "comb") return comb(one_int());
        if (family == "zipper") return zipper(one_int());
        if (family == "t3") return three_leaf_tree(one_int());
        fail(ErrorCode::InvalidParameter, "unknown poset family '" + family + "'");
    }
    return load_poset_file(spec);
}

inline Json labeling_to_json(const Labels& labels, int m) {
    Json j;
    j["m"] = m;
    j["labels"] = std::vector<int>(labels.begin(), labels.end());
    return j;
}

inline PackedLabeling labeling_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("labels"))
        fail(ErrorCode::InvalidParameter, "labeling JSON needs fields 'm' and 'labels'");
    PackedLabeling out;
    out.m = j.at("m").get<int>();
    for (auto& v : j.at("labels")) out.labels.push_back(v.get<std::uint8_t>());
    return out;
}

inline std::string labels_to_text(const State& state) {
    std::string out;
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(state[i]);
    }
    return out;
}

inline Json decomposition_to_json(const Poset& p, const OrbitDecomposition& decomp) {
    Json j;
    j["poset"] = poset_to_json(p);
    if (decomp.m) j["m"] = *decomp.m;
    else j["m"] = nullptr;
    j["operator"] = operator_name(decomp.op);
    auto orbits = Json::array();
    for (auto& orbit : decomp.orbits) {
        Json o;
        o["size"] = orbit.size();
        o["representative"] = std::vector<int>(orbit.front().begin(), orbit.front().end());
        orbits.push_back(o);
    }
    j["orbits"] = orbits;
    Json multiset = Json::object();
    for (auto& [size, count] : decomp.size_multiset())
        multiset[std::to_string(size)] = count;
    j["multiset"] = multiset;
    j["order"] = decomp.order.str();
    return j;
}

inline Json check_report_to_json(const CheckReport& report) {
    Json j;
    j["check"] = report.check;
    j["subject"] = report.subject;
    j["pass"] = report.pass();
    auto clauses = Json::array();
    for (auto& c : report.clauses) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.details.empty()) cj["details"] = c.details;
        clauses.push_back(cj);
    }
    j["clauses"] = clauses;
    if (!report.notes.empty()) j["notes"] = report.notes;
    return j;
}

inline std::string check_report_to_text(const CheckReport& report) {
    std::ostringstream out;
    out << (report.pass() ? "[PASS] " : "[FAIL] ") << report.check << " (" << report.subject
        << ")\n";
    for (auto& c : report.clauses) {
        out << "  " << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
        if (!c.details.empty()) out << ": " << c.details;
        out << "\n";
    }
    for (auto& n : report.notes) out << "  note: " << n << "\n";
    return out.str();
}

inline Json table_report_to_json(const TableReport& report) {
    Json rows = Json::array();
    for (auto& row : report.rows) {
        Json rj;
        rj["poset"] = row.poset;
        rj["m"] = row.m;
        Json multiset = Json::object();
        for (auto& [size, count] : row.multiset) multiset[std::to_string(size)] = count;
        rj["multiset"] = multiset;
        rj["order"] = row.order.str();
        if (row.has_reference) {
            rj["status"] = row.match ? (row.note.empty() ? "match" : "match (source corrected)")
                                     : "MISMATCH";
        } else {
            rj["status"] = "no reference";
        }
        if (!row.note.empty()) rj["note"] = row.note;
        rows.push_back(rj);
    }
    Json j;
    j["rows"] = rows;
    j["all_match"] = report.all_match();
    return j;
}

inline std::string table_report_to_text(const TableReport& report, bool tsv = false) {
    std::ostringstream out;
    if (tsv) {
        out << "poset\tm\tmultiset\torder\tstatus\n";
        for (auto& row : report.rows) {
            std::string status = !row.has_reference ? "no-reference"
                                 : !row.match       ? "MISMATCH"
                                 : row.note.empty() ? "match"
                                                    : "match(source-corrected)";
            out << row.poset << "\t" << row.m << "\t" << multiset_to_string(row.multiset) << "\t"
                << row.order.str() << "\t" << status << "\n";
        }
        return out.str();
    }
    std::string current;
    for (auto& row : report.rows) {
        if (row.poset != current) {
            current = row.poset;
            out << current << "\n";
        }
        out << "  m=" << std::setw(2) << row.m << "  " << multiset_to_string(row.multiset)
            << "   order " << row.order.str();
        if (row.has_reference) {
            out << (row.match ? "   [match]" : "   [MISMATCH]");
            if (!row.note.empty()) out << "  (" << row.note << ")";
        }
        out << "\n";
    }
    return out.str();
}

inline std::string csp_report_to_tsv(const CspReport& report) {
    std::ostringstream out;
    out << "d\tfixed_points\tf_value\tmatch\n";
    for (auto& row : report.rows) {
        std::ostringstream value;
        value << std::setprecision(10) << row.value.real();
        if (std::abs(row.value.imag()) > 1e-12)
            value << (row.value.imag() < 0 ? "-" : "+") << std::abs(row.value.imag()) << "i";
        out << row.d << "\t" << row.fixed_points << "\t" << value.str() << "\t"
            << (row.match ? "yes" : "NO") << "\n";
    }
    return out.str();
}

inline Json csp_report_to_json(const CspReport& report) {
    Json j;
    j["action_order"] = report.action_order;
    j["holds"] = report.holds;
    auto rows = Json::array();
    for (auto& row : report.rows) {
        Json rj;
        rj["d"] = row.d;
        rj["fixed_points"] = row.fixed_points;
        rj["value_re"] = row.value.real();
        rj["value_im"] = row.value.imag();
        rj["match"] = row.match;
        rows.push_back(rj);
    }
    j["rows"] = rows;
    return j;
}

}  // namespace pml
