#include "silt/algebra_io.hpp"

#include <fstream>
#include <sstream>

namespace silt {

using nlohmann::json;

namespace {

const json& member(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw Error(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::string label_of(const json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw Error(where + ": expected a label (string or integer)");
}

} // namespace

AlgebraPresentation presentation_from_json(const json& j) {
    AlgebraPresentation p;
    if (j.contains("field")) {
        const json& fj = j.at("field");
        const json& pj = member(fj, "p", "field");
        if (!pj.is_number_unsigned()) throw Error("field: \"p\" must be a positive integer");
        p.field = Field(pj.get<std::uint32_t>());
    }
    const json& qj = member(j, "quiver", "algebra");
    const json& vj = member(qj, "vertices", "quiver");
    if (!vj.is_array()) throw Error("quiver: \"vertices\" must be an array");
    for (const auto& v : vj) p.quiver.vertices.push_back(label_of(v, "quiver.vertices"));
    if (qj.contains("arrows")) {
        std::size_t idx = 0;
        for (const auto& aj : qj.at("arrows")) {
            const std::string where = "arrow " + std::to_string(idx++);
            if (!aj.is_array() || aj.size() != 3) throw Error(where + ": expected [label, source, target]");
            Arrow a;
            a.label = label_of(aj[0], where);
            try {
                a.source = p.quiver.vertex_index(label_of(aj[1], where));
                a.target = p.quiver.vertex_index(label_of(aj[2], where));
            } catch (const Error& e) {
                throw Error(where + " ('" + a.label + "'): " + e.what());
            }
            p.quiver.arrows.push_back(std::move(a));
        }
    }
    p.quiver.validate();
    if (j.contains("relations")) {
        std::size_t ri = 0;
        for (const auto& rj : j.at("relations")) {
            const std::string where = "relation " + std::to_string(ri++);
            if (!rj.is_array()) throw Error(where + ": expected a list of [coeff, [arrows]] terms");
            Relation rel;
            for (const auto& tj : rj) {
                if (!tj.is_array() || tj.size() != 2 || !tj[0].is_number_integer() || !tj[1].is_array())
                    throw Error(where + ": each term must be [integer coefficient, [arrow labels]]");
                RelationTerm t{tj[0].get<std::int64_t>(), {}};
                for (const auto& lj : tj[1]) {
                    std::string label = label_of(lj, where);
                    try {
                        t.arrows.push_back(p.quiver.arrow_index(label));
                    } catch (const Error& e) {
                        throw Error(where + ": " + e.what());
                    }
                }
                rel.push_back(std::move(t));
            }
            p.relations.push_back(std::move(rel));
        }
    }
    if (j.contains("nilpotency_bound")) {
        const json& nj = j.at("nilpotency_bound");
        if (!nj.is_number_unsigned()) throw Error("\"nilpotency_bound\" must be a positive integer");
        p.nilpotency_bound = nj.get<std::size_t>();
    }
    return p;
}

json presentation_to_json(const AlgebraPresentation& p) {
    json arrows = json::array();
    for (const auto& a : p.quiver.arrows)
        arrows.push_back({a.label, p.quiver.vertices[a.source], p.quiver.vertices[a.target]});
    json rels = json::array();
    for (const auto& rel : p.relations) {
        json terms = json::array();
        for (const auto& t : rel) {
            json labels = json::array();
            for (auto a : t.arrows) labels.push_back(p.quiver.arrows[a].label);
            terms.push_back({t.coefficient, labels});
        }
        rels.push_back(std::move(terms));
    }
    return {{"field", {{"p", p.field.prime()}}},
            {"quiver", {{"vertices", p.quiver.vertices}, {"arrows", arrows}}},
            {"relations", rels},
            {"nilpotency_bound", p.nilpotency_bound}};
}

AlgebraPresentation read_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(path + ": " + e.what());
    }
    return presentation_from_json(j);
}

} // namespace silt
