#ifndef ALPHASPEC_JSON_IO_HPP
#define ALPHASPEC_JSON_IO_HPP

#include "alphaspec/classes.hpp"
#include "alphaspec/eigensolve.hpp"
#include "alphaspec/invariants.hpp"
#include "alphaspec/joins.hpp"
#include "alphaspec/verify.hpp"

#include <json.hpp>

namespace alphaspec {

// nlohmann::json keeps object keys sorted, so serialized output is
// byte-deterministic once array orders are fixed (they are).

nlohmann::json to_json(const SpectrumReport& report);
nlohmann::json to_json(const InvariantReport& report, const Rational& alpha);
nlohmann::json to_json(const CospectralClass& cls);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const CospectralCertificate& cert);

} // namespace alphaspec

#endif
