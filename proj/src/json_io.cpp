#include "hbk/json_io.hpp"

namespace hbk {

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const FieldCtx& ctx, const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw parse_error("matrix JSON must be an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    Matrix m(ctx, rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[static_cast<size_t>(i)].size()) != cols)
            throw parse_error("ragged matrix JSON");
        for (int c = 0; c < cols; ++c) {
            const json& cell = j[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (cell.is_number_integer())
                m.at(i, c) = FieldElem::from_int(ctx, cell.get<long>());
            else if (cell.is_string())
                m.at(i, c) = FieldElem::parse(ctx, cell.get<std::string>());
            else
                throw parse_error("matrix entries must be strings or integers");
        }
    }
    return m;
}

json lattice_to_json(const LatticeClass& l) {
    json j;
    j["n"] = l.n();
    j["basis"] = matrix_to_json(l.basis());
    j["context"] = {{"rank", l.vc().field.d}, {"coarse", l.vc().s}};
    return j;
}

LatticeClass lattice_from_json(const ValCtx& fallback, const json& j) {
    if (!j.is_object() || !j.contains("basis"))
        throw parse_error("lattice JSON must be an object with a \"basis\" field");
    ValCtx vc = fallback;
    if (j.contains("context")) {
        const json& c = j["context"];
        int rank = c.value("rank", fallback.field.d);
        int coarse = c.value("coarse", rank);
        if (rank != fallback.field.d)
            throw parse_error("lattice context rank does not match the session tower");
        vc = ValCtx(fallback.field, coarse);
    }
    Matrix basis = matrix_from_json(vc.field, j["basis"]);
    if (j.contains("n") && j["n"].get<int>() != basis.rows())
        throw parse_error("lattice JSON size tag does not match basis");
    return LatticeClass(vc, std::move(basis));
}

json point_to_json(const ApartmentPoint& x) {
    json coords = json::array();
    for (int i = 0; i < x.n(); ++i) coords.push_back(x.coord(i).str());
    return json{{"coords", coords}};
}

ApartmentPoint point_from_json(const json& j, int expected_dim) {
    const json* arr = nullptr;
    if (j.is_array()) arr = &j;
    else if (j.is_object() && j.contains("coords")) arr = &j["coords"];
    if (!arr || !arr->is_array() || arr->empty())
        throw parse_error("apartment point JSON must carry a nonempty \"coords\" array");
    std::vector<LexVal> coords;
    for (const auto& cell : *arr) {
        if (!cell.is_string()) throw parse_error("apartment coordinates must be strings");
        coords.push_back(LexVal::parse(cell.get<std::string>(), expected_dim));
    }
    return ApartmentPoint(std::move(coords));
}

json weyl_to_json(const AffineWeylElem& w) {
    json perm = json::array();
    json trans = json::array();
    for (int j = 0; j < w.n(); ++j) {
        perm.push_back(w.perm()[static_cast<size_t>(j)] + 1);
        trans.push_back(w.trans()[static_cast<size_t>(j)].str());
    }
    return json{{"perm", perm}, {"trans", trans}};
}

json bound_to_json(const HalfApartmentBound& b) {
    json out = json::array();
    for (int i = 1; i <= b.n(); ++i)
        for (int j = 1; j <= b.n(); ++j) {
            if (i == j) continue;
            out.push_back(json{{"i", i}, {"j", j}, {"lambda", b.bound(i, j).str()}});
        }
    return out;
}

json edge_to_json(const CoarseEdge& e) {
    return json{{"from", lattice_to_json(e.from)}, {"to", lattice_to_json(e.to)}};
}

} // namespace hbk
