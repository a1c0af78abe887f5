#pragma once

#include "json.hpp"

#include "semidual/basechange.hpp"

namespace semidual {

using json = nlohmann::ordered_json;

json to_json(const ExtInt& v);
json to_json(const QRPtr& R);
json to_json(const FPModule& M);
json to_json(const Complex& X);
json to_json(const Fingerprint& f);
json to_json(const Bounds& b);
json to_json(const Window& w);
json to_json(const DObj& A);
json to_json(const GDimReport& r);
json to_json(const SemidualVerdict& v);
json to_json(const RingMap& phi);
json to_json(const GradeProfile& g);
json to_json(const ChangeReport& r);
json to_json(const DescentReport& r);
json to_json(const SeriesTransfer& s);
json to_json(const LaurentPoly& p);

// {lo, hi, ranks, twists, differentials[, relations]}; entries are polynomial text.
Complex complex_from_json(const QRPtr& R, const json& j);

}  // namespace semidual
