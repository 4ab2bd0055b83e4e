#pragma once
/**
 * JSON serialization of the library's result types.  All objects carry a
 * "schema" field; nlohmann::json keeps object keys sorted, so identical
 * invocations serialize byte-identically.
 */

#include <json.hpp>

#include "kacspin/analysis.hpp"
#include "kacspin/diagram.hpp"
#include "kacspin/liftgroup.hpp"
#include "kacspin/spinreps.hpp"

namespace kacspin {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "kacspin/1";

Json matrix_json(const Matrix& m);
std::string matrix_csv(const Matrix& m);
Json flt_matrix_json(const std::vector<double>& m, int dim);

Json check_report_json(const CheckReport& r);
Json validation_json(const GCM& g, const ValidationReport& v);
Json realization_json(const Realization& re);
Json rep_summary_json(const SpinRep& r);
Json transport_json(const TransportResult& t);
Json witness_json(const WitnessResult& w);
Json decomposition_json(const DecompositionReport& d, bool include_bases);
Json lift_json(const LiftReport& l);
Json group_element_json(const GroupElement& e, bool include_matrix);

}  // namespace kacspin
