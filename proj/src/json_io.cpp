#include "dp2/json_io.hpp"

namespace dp2::io {

json encode(FieldPtr F) {
    json j;
    j["p"] = F->p();
    j["k"] = F->k();
    j["modulus"] = F->modulus();
    if (F->base() != nullptr) {
        j["base"] = encode(F->base());
        j["base_image"] = encode(F->base_generator_image());
    }
    return j;
}

json encode(const FieldElement& a) {
    json j = json::array();
    for (int64_t c : a.coeffs()) j.push_back(c);
    return j;
}

json encode(const BinaryForm& b) {
    json j = json::array();
    if (b.is_zero()) return j;
    for (int i = 0; i <= b.degree(); ++i) j.push_back(encode(b.coeff(i)));
    return j;
}

json encode(const TernaryForm& t) {
    json j = json::array();
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
        json term;
        term["e"] = {it->first[0], it->first[1], it->first[2]};
        term["c"] = encode(it->second);
        j.push_back(term);
    }
    return j;
}

json encode_surface(const DelPezzo2& X) {
    json j;
    j["field"] = encode(X.field());
    j["c"] = encode(X.field()->one());
    j["f"] = encode(X.f());
    j["g"] = encode(X.g());
    return j;
}

json encode_curve(const TernaryForm& h, const PlanePoint& Q) {
    json j;
    j["h"] = encode(h);
    j["Q"] = {encode(Q.x()), encode(Q.y()), encode(Q.z())};
    j["d"] = h.degree();
    return j;
}

json encode_point(const PlanePoint& Q) {
    return {encode(Q.x()), encode(Q.y()), encode(Q.z())};
}

json encode_point(const SurfacePoint& P) {
    return {encode(P.x()), encode(P.y()), encode(P.z()), encode(P.w())};
}

json encode_map(const RationalMapToX& rho) {
    json j;
    j["field"] = encode(rho.field);
    j["rho"] = {encode(rho.rho[0]), encode(rho.rho[1]), encode(rho.rho[2]),
                encode(rho.rho[3])};
    j["field_of_definition"] = rho.ext_degree;
    j["path"] = rho.path;
    return j;
}

json encode_theta(const Parametrization& theta) {
    return {encode(theta.theta()[0]), encode(theta.theta()[1]),
            encode(theta.theta()[2])};
}

json encode_profile(const ContactProfile& profile) {
    json j;
    j["H"] = encode(profile.H);
    j["unit"] = encode(profile.unit);
    json dec = json::array();
    for (const auto& [s, m] : profile.decomposition)
        dec.push_back({{"factor", encode(s)}, {"multiplicity", m}});
    j["decomposition"] = dec;
    json pts = json::array();
    for (const auto& cls : profile.branch_points)
        pts.push_back({{"factor", encode(cls.factor)},
                       {"extension_degree", cls.ext_degree},
                       {"multiplicity", cls.multiplicity},
                       {"above_Q", cls.above_q},
                       {"orbits", cls.orbit_count}});
    j["branch_points"] = pts;
    j["Q_on_branch"] = profile.q_on_branch;
    j["even_everywhere"] = profile.even_everywhere;
    j["odd_geometric_count"] = profile.odd_geometric_count;
    j["above_Q_total_multiplicity"] = profile.above_q_total_multiplicity;
    j["d"] = profile.d;
    return j;
}

json encode_classification(const CaseClassification& cls) {
    json j;
    switch (cls.kind) {
        case CaseClassification::Kind::SplitCase: j["case"] = "split"; break;
        case CaseClassification::Kind::ConicCase: j["case"] = "conic"; break;
        case CaseClassification::Kind::NotApplicable:
            j["case"] = "not_applicable";
            j["reason"] = cls.reason;
            break;
    }
    j["d"] = cls.d;
    return j;
}

json encode_smoothness(const SmoothnessCertificate& cert) {
    json j;
    j["smooth"] = cert.smooth;
    j["attempts"] = cert.attempts;
    j["candidates"] = cert.candidate_count;
    j["extension_bound"] = cert.extension_bound;
    j["euler_skips_b"] = cert.euler_skips_b;
    j["partials_resultant"] = encode(cert.partials_resultant);
    j["detail"] = cert.detail;
    return j;
}

json encode_verification(const MapVerification& report) {
    json j;
    j["equation_holds"] = report.equation_holds;
    j["nonconstant"] = report.nonconstant;
    j["pass"] = report.pass();
    j["residual"] = encode(report.residual);
    j["component_degree"] = report.component_degree;
    j["reduced_degree"] = report.reduced_degree;
    j["image_on_curve"] = report.image_on_curve;
    if (report.image_degree_ratio) j["image_degree_ratio"] = *report.image_degree_ratio;
    return j;
}

json encode_certificate(const DelPezzo2& X, const MarkedCurve& C,
                        const Parametrization& theta, const CaseClassification& cls,
                        const RationalMapToX& rho) {
    json j;
    j["surface"] = encode_surface(X);
    j["curve"] = encode_curve(C.h(), C.Q());
    j["theta"] = encode_theta(theta);
    j["case"] = cls.kind == CaseClassification::Kind::SplitCase ? "split" : "conic";
    j["rho"] = {encode(rho.rho[0]), encode(rho.rho[1]), encode(rho.rho[2]),
                encode(rho.rho[3])};
    j["field_of_definition"] = rho.ext_degree;
    j["conclusion"] = "nonconstant P^1 -> X verified; unirational by [STVA13, Thm 17]";
    return j;
}

json encode_search(const SearchResult& result, const DelPezzo2& X) {
    json j;
    j["dimension"] = result.system.dimension;
    j["conditions"] = result.system.conditions;
    j["verified_rank"] = result.system.verified_rank;
    json stats;
    stats["candidates"] = result.stats.candidates;
    stats["rejected_multiplicity"] = result.stats.rejected_multiplicity;
    stats["rejected_integral"] = result.stats.rejected_integral;
    stats["rejected_ordinary"] = result.stats.rejected_ordinary;
    stats["rejected_contact"] = result.stats.rejected_contact;
    stats["rejected_classification"] = result.stats.rejected_classification;
    stats["rejected_validation"] = result.stats.rejected_validation;
    j["stats"] = stats;
    json hits = json::array();
    for (const auto& hit : result.hits) {
        json hj;
        hj["curve"] = encode_curve(hit.h, hit.curve.Q());
        hj["theta"] = encode_theta(hit.theta);
        hj["profile"] = encode_profile(hit.profile);
        hj["classification"] = encode_classification(hit.classification);
        if (hit.map) {
            hj["certificate"] = encode_certificate(X, hit.curve, hit.theta,
                                                   hit.classification, *hit.map);
            if (hit.split_square_class)
                hj["split_square_class_is_square"] = *hit.split_square_class;
        }
        hits.push_back(hj);
    }
    j["hits"] = hits;
    return j;
}

// ----------------------------------------------------------------- decode

namespace {

[[noreturn]] void malformed(const std::string& what) { throw MalformedInput(what); }

int64_t get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) malformed(std::string("missing integer field '") + key + "'");
    return j[key].get<int64_t>();
}

}  // namespace

FieldPtr decode_field(const json& j) {
    if (!j.is_object()) malformed("field must be an object");
    int64_t p = get_int(j, "p");
    int k = j.contains("k") ? static_cast<int>(get_int(j, "k")) : 1;
    std::vector<int64_t> modulus;
    if (j.contains("modulus")) {
        if (!j["modulus"].is_array()) malformed("modulus must be an array");
        for (const auto& c : j["modulus"]) modulus.push_back(c.get<int64_t>());
    } else if (k == 1) {
        modulus = {0, 1};
    } else if (p == 3 && k == 2) {
        modulus = {-1, -1, 1};  // the default F_9 presentation
    } else {
        malformed("modulus required for extension fields");
    }
    try {
        if (j.contains("base")) {
            FieldPtr base = decode_field(j["base"]);
            if (!j.contains("base_image")) malformed("extension field without base_image");
            Coeffs img;
            for (const auto& c : j["base_image"]) img.push_back(c.get<int64_t>());
            for (auto& c : img) c = ((c % p) + p) % p;
            return FieldDescriptor::make_extension_of(base, k, modulus, img);
        }
        return FieldDescriptor::make(p, k, modulus);
    } catch (const CharTwo&) {
        throw;
    } catch (const InvalidField& e) {
        malformed(e.what());
    }
}

FieldElement decode_element(const json& j, FieldPtr F) {
    if (j.is_number_integer()) return F->from_int(j.get<int64_t>());
    if (!j.is_array()) malformed("element must be an array of residues");
    Coeffs c;
    for (const auto& v : j) c.push_back(v.get<int64_t>());
    while (static_cast<int>(c.size()) < F->k()) c.push_back(0);
    if (static_cast<int>(c.size()) != F->k()) malformed("element has too many coefficients");
    return F->element(c);
}

BinaryForm decode_binary(const json& j, FieldPtr F) {
    if (!j.is_array()) malformed("binary form must be a coefficient array");
    if (j.empty()) return BinaryForm::zero(F);
    std::vector<FieldElement> c;
    for (const auto& v : j) c.push_back(decode_element(v, F));
    return BinaryForm(F, static_cast<int>(c.size()) - 1, std::move(c));
}

TernaryForm decode_ternary(const json& j, FieldPtr F, int expected_degree) {
    if (!j.is_array()) malformed("ternary form must be an array of terms");
    int degree = expected_degree;
    if (degree < 0) {
        for (const auto& term : j) {
            if (!term.contains("e") || !term["e"].is_array() || term["e"].size() != 3)
                malformed("ternary term needs a 3-entry exponent array");
            int d = 0;
            for (const auto& e : term["e"]) d += e.get<int>();
            degree = std::max(degree, d);
        }
        if (degree < 0) malformed("cannot infer the degree of an empty ternary form");
    }
    TernaryForm t(F, degree);
    for (const auto& term : j) {
        if (!term.contains("e") || !term.contains("c")) malformed("ternary term needs 'e' and 'c'");
        TernaryForm::Exponents e{term["e"][0].get<int>(), term["e"][1].get<int>(),
                                 term["e"][2].get<int>()};
        if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree)
            malformed("ternary exponents do not match the degree");
        t.set_coeff(e, t.coeff(e) + decode_element(term["c"], F));
    }
    return t;
}

DelPezzo2 decode_surface(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("g"))
        malformed("surface needs 'field' and 'g'");
    FieldPtr F = decode_field(j["field"]);
    FieldElement c = j.contains("c") ? decode_element(j["c"], F) : F->one();
    TernaryForm f = j.contains("f") ? decode_ternary(j["f"], F, 2)
                                    : TernaryForm::zero(F, 2);
    TernaryForm g = decode_ternary(j["g"], F, 4);
    try {
        return DelPezzo2::normal_form(c, f, g);
    } catch (const Error& e) {
        malformed(e.what());
    }
}

CurveInput decode_curve(const json& j, FieldPtr F) {
    if (!j.is_object() || !j.contains("h") || !j.contains("Q"))
        malformed("curve needs 'h' and 'Q'");
    int d = j.contains("d") ? static_cast<int>(get_int(j, "d")) : -1;
    TernaryForm h = decode_ternary(j["h"], F, d);
    if (!j["Q"].is_array() || j["Q"].size() != 3) malformed("Q must have 3 coordinates");
    PlanePoint Q(decode_element(j["Q"][0], F), decode_element(j["Q"][1], F),
                 decode_element(j["Q"][2], F));
    return CurveInput{h, Q};
}

RationalMapToX decode_map(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("rho"))
        malformed("map needs 'field' and 'rho'");
    FieldPtr F = decode_field(j["field"]);
    if (!j["rho"].is_array() || j["rho"].size() != 4)
        malformed("rho must list four binary forms");
    RationalMapToX rho;
    rho.field = F;
    for (int i = 0; i < 4; ++i)
        rho.rho[static_cast<size_t>(i)] = decode_binary(j["rho"][static_cast<size_t>(i)], F);
    rho.ext_degree = j.contains("field_of_definition")
                         ? static_cast<int>(get_int(j, "field_of_definition"))
                         : 1;
    return rho;
}

}  // namespace dp2::io
