#include "vci/json_io.hpp"

namespace vci {

namespace {

Json scalar_pair(const Scalar& a, const Scalar& b) { return Json::array({a.str(), b.str()}); }

Json bidegree_json(Bidegree d) { return Json::array({d.a, d.b}); }

Bidegree bidegree_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw JsonError("bidegree must be a pair");
    return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

Json poly_to_json(const Poly& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms()) {
        terms.push_back({{"coeff", t.coeff.str()},
                         {"exp", Json::array({t.mono.e[Monomial::kX0], t.mono.e[Monomial::kX1],
                                              t.mono.e[Monomial::kY0], t.mono.e[Monomial::kY1]})}});
    }
    return terms;
}

Poly poly_from_json(const Json& j, FieldDesc fd) {
    if (!j.is_array()) throw JsonError("polynomial must be an array of terms");
    std::vector<Term> ts;
    for (const auto& tj : j) {
        if (!tj.contains("coeff") || !tj.contains("exp")) throw JsonError("term needs coeff/exp");
        const Json& e = tj["exp"];
        if (!e.is_array() || e.size() != 4) throw JsonError("exp must have four entries");
        Monomial m;
        m.e[Monomial::kX0] = e[0].get<int>();
        m.e[Monomial::kX1] = e[1].get<int>();
        m.e[Monomial::kY0] = e[2].get<int>();
        m.e[Monomial::kY1] = e[3].get<int>();
        for (int i = 1; i < 5; ++i)
            if (m.e[i] < 0) throw JsonError("negative exponent");
        ts.push_back({m, Scalar::parse(tj["coeff"].get<std::string>(), fd)});
    }
    return Poly::from_terms(std::move(ts), fd);
}

Json point_set_to_json(const PointSet& x) {
    Json pts = Json::array();
    for (const auto& p : x.points)
        pts.push_back(Json::array({scalar_pair(p.x.c0, p.x.c1), scalar_pair(p.y.c0, p.y.c1)}));
    return Json{{"field", x.field.name()}, {"points", pts}};
}

PointSet point_set_from_json(const Json& j) {
    if (!j.contains("field") || !j.contains("points")) throw JsonError("need field and points");
    FieldDesc fd = FieldDesc::parse(j["field"].get<std::string>());
    std::vector<BiProjPoint> pts;
    for (const auto& pj : j["points"]) {
        if (!pj.is_array() || pj.size() != 2) throw JsonError("point must be a coordinate pair");
        auto coord = [&](const Json& cj) {
            if (!cj.is_array() || cj.size() != 2) throw JsonError("coordinate must be a pair");
            return ProjPoint::make(Scalar::parse(cj[0].get<std::string>(), fd),
                                   Scalar::parse(cj[1].get<std::string>(), fd));
        };
        pts.push_back({coord(pj[0]), coord(pj[1])});
    }
    return PointSet::make(std::move(pts), fd);
}

Json ideal_to_json(const Ideal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.generators) gens.push_back(poly_to_json(g));
    return Json{{"field", ideal.field.name()}, {"generators", gens}};
}

Ideal ideal_from_json(const Json& j) {
    if (!j.contains("field") || !j.contains("generators"))
        throw JsonError("need field and generators");
    FieldDesc fd = FieldDesc::parse(j["field"].get<std::string>());
    std::vector<Poly> gens;
    for (const auto& gj : j["generators"]) gens.push_back(poly_from_json(gj, fd));
    return Ideal::make(std::move(gens), fd);
}

Json certificate_to_json(const VciCertificate& cert) {
    KoszulShape ks = koszul_shape(cert);
    return Json{{"field", cert.f.field().name()},
                {"f", poly_to_json(cert.f)},
                {"g", poly_to_json(cert.g)},
                {"degrees", Json::array({bidegree_json(cert.f_deg), bidegree_json(cert.g_deg)})},
                {"koszul_twists",
                 Json::array({bidegree_json(ks.start), bidegree_json(ks.middle.first),
                              bidegree_json(ks.middle.second), bidegree_json(ks.end)})}};
}

VciCertificate certificate_from_json(const Json& j, FieldDesc fd) {
    if (!j.contains("f") || !j.contains("g")) throw JsonError("certificate needs f and g");
    if (j.contains("field")) fd = FieldDesc::parse(j["field"].get<std::string>());
    VciCertificate cert;
    cert.f = poly_from_json(j["f"], fd);
    cert.g = poly_from_json(j["g"], fd);
    if (j.contains("degrees")) {
        const Json& d = j["degrees"];
        if (!d.is_array() || d.size() != 2) throw JsonError("degrees must be a pair");
        cert.f_deg = bidegree_from(d[0]);
        cert.g_deg = bidegree_from(d[1]);
    } else {
        auto fb = cert.f.bidegree(), gb = cert.g.bidegree();
        if (!fb || !gb) throw JsonError("certificate forms must be bihomogeneous");
        cert.f_deg = *fb;
        cert.g_deg = *gb;
    }
    return cert;
}

Json refutation_to_json(const Refutation& r) {
    Json j{{"criterion", criterion_name(r.criterion)}, {"m", r.m}, {"n", r.n}};
    if (r.s >= 0) j["s"] = r.s;
    if (r.t >= 0) j["t"] = r.t;
    if (r.c >= 0) j["c"] = r.c;
    if (r.d >= 0) j["d"] = r.d;
    if (r.residual_x >= 0) j["residual_x"] = r.residual_x;
    if (r.residual_y >= 0) j["residual_y"] = r.residual_y;
    if (r.witness_point)
        j["witness"] = Json::array(
            {scalar_pair(r.witness_point->x.c0, r.witness_point->x.c1),
             scalar_pair(r.witness_point->y.c0, r.witness_point->y.c1)});
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

Json verdict_to_json(const VciVerdict& v) {
    Json j{{"status", status_name(v.status)}};
    if (v.certificate) j["certificate"] = certificate_to_json(*v.certificate);
    if (v.refutation) {
        j["criterion"] = criterion_name(v.refutation->criterion);
        j["witness"] = refutation_to_json(*v.refutation);
    }
    if (v.extension_required) j["extension_required"] = true;
    j["trace"] = v.trace;
    return j;
}

}  // namespace vci
