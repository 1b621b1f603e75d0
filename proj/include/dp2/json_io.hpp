#pragma once

#include <json.hpp>

#include "dp2/search.hpp"

namespace dp2::io {

using json = nlohmann::json;

// encoders (deterministic: sorted keys, exponents descending)
json encode(FieldPtr F);
json encode(const FieldElement& a);
json encode(const BinaryForm& b);
json encode(const TernaryForm& t);
json encode_surface(const DelPezzo2& X);
json encode_curve(const TernaryForm& h, const PlanePoint& Q);
json encode_point(const PlanePoint& Q);
json encode_point(const SurfacePoint& P);
json encode_map(const RationalMapToX& rho);
json encode_theta(const Parametrization& theta);
json encode_profile(const ContactProfile& profile);
json encode_classification(const CaseClassification& cls);
json encode_smoothness(const SmoothnessCertificate& cert);
json encode_verification(const MapVerification& report);
/// The full certificate object: surface, curve, theta, case, rho,
/// field_of_definition, conclusion.
json encode_certificate(const DelPezzo2& X, const MarkedCurve& C,
                        const Parametrization& theta, const CaseClassification& cls,
                        const RationalMapToX& rho);
json encode_search(const SearchResult& result, const DelPezzo2& X);

// decoders; throw MalformedInput
FieldPtr decode_field(const json& j);
FieldElement decode_element(const json& j, FieldPtr F);
BinaryForm decode_binary(const json& j, FieldPtr F);
TernaryForm decode_ternary(const json& j, FieldPtr F, int expected_degree = -1);
DelPezzo2 decode_surface(const json& j);
struct CurveInput {
    TernaryForm h;
    PlanePoint Q;
};
CurveInput decode_curve(const json& j, FieldPtr F);
RationalMapToX decode_map(const json& j);

}  // namespace dp2::io
