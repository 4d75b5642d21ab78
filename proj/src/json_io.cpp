#include "lagsub/json_io.hpp"

#include <algorithm>

#include "lagsub/error.hpp"

namespace lagsub {

Json root_to_json(const Root& r) { return Json(r.coeffs); }

Root root_from_json(const Json& j, const RootSystem& rs) {
    if (!j.is_array()) throw ParseError("root: expected an integer array");
    std::vector<int> c;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError("root: entries must be integers");
        c.push_back(e.get<int>());
    }
    Root r(std::move(c));
    if (r.coeffs.size() != static_cast<std::size_t>(rs.rank()))
        throw ParseError("root " + r.str() + ": expected " + std::to_string(rs.rank()) +
                         " coefficients");
    rs.index_of(r); // NotARoot on junk
    return r;
}

Json rational_to_json(const Rational& x) { return Json(x.str()); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational(j.get<std::string>());
    throw ParseError("rational: expected a string like \"-3/2\" or an integer");
}

Json vec_to_json(const Vec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(rational_to_json(x));
    return arr;
}

Vec vec_from_json(const Json& j, std::size_t expected_dim) {
    if (!j.is_array()) throw ParseError("vector: expected an array");
    Vec v;
    for (const auto& e : j) v.push_back(rational_from_json(e));
    if (v.size() != expected_dim)
        throw ParseError("vector: expected " + std::to_string(expected_dim) + " entries, got " +
                         std::to_string(v.size()));
    return v;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix: expected an array of rows");
    if (j.empty()) return Matrix(0, 0);
    std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    Matrix m(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) m.set_row(i, vec_from_json(j[i], cols));
    return m;
}

Json subspace_to_json(const Subspace& s) {
    Json out;
    out["ambient_dim"] = s.ambient_dim();
    out["dim"] = s.dim();
    out["rref_basis"] = matrix_to_json(s.basis());
    return out;
}

Json double_element_to_json(const DoubleElement& v) {
    return Json{{"x", vec_to_json(v.x.coeffs)}, {"alpha", vec_to_json(v.alpha.coeffs)}};
}

DoubleElement double_element_from_json(const Json& j, const SemidirectDouble& dbl) {
    if (!j.is_object() || !j.contains("x") || !j.contains("alpha"))
        throw ParseError("double element: expected {\"x\": [...], \"alpha\": [...]}");
    return {GElement(vec_from_json(j.at("x"), dbl.n())),
            GStarElement(vec_from_json(j.at("alpha"), dbl.n()))};
}

Json group_element_to_json(const GroupElement& g) {
    Json word = Json::array();
    for (const GenStep& s : g.word()) {
        if (s.kind == GenStep::Kind::Unipotent)
            word.push_back(Json{{"unipotent", Json{{"root", root_to_json(s.root)},
                                                   {"t", rational_to_json(s.t)}}}});
        else {
            Json c = Json::array();
            for (const auto& ci : s.c) c.push_back(rational_to_json(ci));
            word.push_back(Json{{"torus", c}});
        }
    }
    return word;
}

GroupElement group_element_from_json(const Json& j, const LieAlgebra& algebra) {
    if (!j.is_array()) throw ParseError("group element: expected a generator word array");
    GroupElement g = algebra.identity_group_element();
    for (const auto& step : j) {
        if (step.contains("unipotent")) {
            const Json& u = step.at("unipotent");
            Root r = root_from_json(u.at("root"), algebra.roots());
            g = g.times(algebra.unipotent(r, rational_from_json(u.at("t"))));
        } else if (step.contains("torus")) {
            std::vector<Rational> c;
            for (const auto& ci : step.at("torus")) c.push_back(rational_from_json(ci));
            g = g.times(algebra.torus(c));
        } else {
            throw ParseError("group element: each step needs \"unipotent\" or \"torus\"");
        }
    }
    return g;
}

Json ideal_to_json(const RootSystem& rs, const IdealDescriptor& d) {
    Json roots = Json::array();
    for (const Root& r : d.roots) roots.push_back(root_to_json(r));
    return Json{{"type", rs.cartan().type_string()}, {"roots", roots}};
}

IdealDescriptor ideal_from_json(const Json& j, const RootSystem& rs) {
    if (!j.is_object() || !j.contains("roots"))
        throw ParseError("ideal: expected {\"type\": ..., \"roots\": [[...], ...]}");
    if (j.contains("type") && j.at("type").get<std::string>() != rs.cartan().type_string())
        throw ParseError("ideal: type field " + j.at("type").get<std::string>() +
                         " does not match " + rs.cartan().type_string());
    IdealDescriptor d;
    for (const auto& e : j.at("roots")) {
        Root r = root_from_json(e, rs);
        if (!r.is_positive()) throw NotARoot(r.str() + " is not a positive root");
        d.roots.push_back(r);
    }
    std::sort(d.roots.begin(), d.roots.end());
    d.roots.erase(std::unique(d.roots.begin(), d.roots.end()), d.roots.end());
    return d;
}

Json cocycle_to_json(const Cocycle& f) {
    Json basis = Json::array();
    for (const GElement& v : f.domain().basis()) basis.push_back(vec_to_json(v.coeffs));
    return Json{{"subalgebra", Json{{"basis", basis}}}, {"F", matrix_to_json(f.F())}};
}

Json certificate_to_json(const ClosureCertificate& c, const RootSystem& rs) {
    Json out;
    out["verdict"] = c.closed() ? "Closed" : "NotClosed";
    switch (c.reason) {
    case ClosureCertificate::Reason::None: break;
    case ClosureCertificate::Reason::NonzeroCocycle: out["reason"] = "nonzero cocycle"; break;
    case ClosureCertificate::Reason::NonAbelian: out["reason"] = "subalgebra is not abelian"; break;
    case ClosureCertificate::Reason::NotBorelIdeal:
        out["reason"] = "not an ideal of any Borel subalgebra";
        break;
    }
    if (c.borel_witness) {
        Json images = Json::array();
        for (int i = 0; i < rs.rank(); ++i)
            images.push_back(root_to_json(c.borel_witness->apply(rs, Root::simple(i, rs.rank()))));
        out["borel_witness"] = Json{{"simple_root_images", images}};
    }
    if (c.alpha_witness) {
        out["alpha_witness"] = vec_to_json(c.alpha_witness->coeffs);
        out["nonabelian_pair"] = Json::array({c.pair_i + 1, c.pair_j + 1});
    }
    if (c.f_witness) out["f_witness"] = matrix_to_json(*c.f_witness);
    if (!c.detail.empty()) out["detail"] = c.detail;
    return out;
}

Json orbit_row_to_json(const RootSystem& rs, const OrbitRow& row) {
    Json lambda = Json::array();
    for (const Root& r : row.ideal.roots) lambda.push_back(root_to_json(r));
    Json j_set = Json::array();
    for (int i : row.parabolic_j) j_set.push_back(i + 1); // 1-based simple-root labels
    return Json{{"type", rs.cartan().type_string()}, {"lambda", lambda},
                {"dim_a", row.dim_a},                {"parabolic_J", j_set},
                {"orbit_dim", row.orbit_dim},        {"certified_closed", row.certified_closed}};
}

} // namespace lagsub
