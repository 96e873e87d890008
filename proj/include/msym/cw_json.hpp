#pragma once

// JSON exchange format for CW complexes:
//
//   {"cells":    {"0": [ids...], "1": [ids...], ...},
//    "boundary": {id: [face ids...], ...},
//    "labels":   {name: [ids...], ...}}
//
// Face lists are mod-2 reduced: a face id may appear at most once. Cells
// with empty boundary may be omitted from "boundary". "labels" is optional.

#include "msym/complex.hpp"
#include "msym/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace msym {

inline nlohmann::json to_json(const ChainComplexF2& c) {
    nlohmann::json cells = nlohmann::json::object();
    nlohmann::json boundary = nlohmann::json::object();
    for (int k = 0; k <= c.dimension(); ++k) {
        cells[std::to_string(k)] = c.cells(k);
        if (k == 0) continue;
        for (const auto& id : c.cells(k)) boundary[id] = c.faces(id);
    }
    nlohmann::json labels = nlohmann::json::object();
    for (const auto& [name, ids] : c.labels()) labels[name] = ids;
    return {{"cells", cells}, {"boundary", boundary}, {"labels", labels}};
}

inline ChainComplexF2 complex_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("CW file: top level must be an object");
    if (!j.contains("cells") || !j.at("cells").is_object()) throw ParseError("CW file: missing \"cells\" object");
    const nlohmann::json empty = nlohmann::json::object();
    const auto& bd = j.contains("boundary") ? j.at("boundary") : empty;
    if (!bd.is_object()) throw ParseError("CW file: \"boundary\" must be an object");

    std::map<int, std::vector<std::string>> by_dim;
    for (const auto& [key, ids] : j.at("cells").items()) {
        int dim = -1;
        std::size_t used = 0;
        try {
            dim = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || dim < 0) throw ParseError("CW file: bad dimension key \"" + key + "\"");
        if (!ids.is_array()) throw ParseError("CW file: cells of dimension " + key + " must be an array");
        for (const auto& id : ids) {
            if (!id.is_string()) throw ParseError("CW file: non-string cell id in dimension " + key);
            by_dim[dim].push_back(id.get<std::string>());
        }
    }

    std::set<std::string> known;
    for (const auto& [dim, ids] : by_dim) known.insert(ids.begin(), ids.end());
    for (const auto& [id, faces] : bd.items()) {
        if (!known.contains(id)) throw ParseError("CW file: boundary given for unknown cell '" + id + "'");
        if (!faces.is_array()) throw ParseError("CW file: boundary of cell '" + id + "' must be an array");
    }

    ComplexBuilder b;
    for (const auto& [dim, ids] : by_dim) {
        for (const auto& id : ids) {
            std::vector<std::string> faces;
            if (bd.contains(id)) {
                std::set<std::string> seen;
                for (const auto& f : bd.at(id)) {
                    if (!f.is_string()) throw ParseError("CW file: non-string face in boundary of cell '" + id + "'");
                    auto fs = f.get<std::string>();
                    if (!seen.insert(fs).second)
                        throw ParseError("CW file: cell '" + id + "' repeats face '" + fs + "' (faces must be mod-2 reduced)");
                    faces.push_back(std::move(fs));
                }
            }
            b.add_cell(dim, id, std::move(faces));
        }
    }
    if (j.contains("labels")) {
        if (!j.at("labels").is_object()) throw ParseError("CW file: \"labels\" must be an object");
        for (const auto& [name, ids] : j.at("labels").items()) {
            if (!ids.is_array()) throw ParseError("CW file: label '" + name + "' must be an array");
            std::vector<std::string> v;
            for (const auto& id : ids) {
                if (!id.is_string()) throw ParseError("CW file: non-string id in label '" + name + "'");
                v.push_back(id.get<std::string>());
            }
            b.add_label(name, std::move(v));
        }
    }
    try {
        return b.build();
    } catch (const InvalidComplex& e) {
        throw ParseError(std::string("CW file: ") + e.what());
    }
}

inline ChainComplexF2 parse_complex(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("CW file: invalid JSON: ") + e.what());
    }
    return complex_from_json(j);
}

inline ChainComplexF2 load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_complex(ss.str());
}

}  // namespace msym
