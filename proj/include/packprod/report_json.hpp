#pragma once

#include "packprod/simplex.hpp"
#include "packprod/verifier.hpp"

#include "json.hpp"

namespace packprod {

/// Integral rationals become JSON integers, everything else a "p/q" string.
nlohmann::json rational_json(const Rational& value);
nlohmann::json set_json(const VertexSet& s);

nlohmann::json instance_json(const Instance& in);
/// `elapsed` adds the wall-clock field; it is off by default so reruns are byte-identical.
nlohmann::json report_json(const CheckReport& report, bool elapsed = false);
/// {run: {seed, budget}, reports: [...], summary: {pass, fail, skip}, exploratory: [...]}
nlohmann::json suite_json(const SuiteResult& result, bool elapsed = false);

} // namespace packprod
