#ifndef BRQ_JSON_IO_HPP
#define BRQ_JSON_IO_HPP

#include "brq/census.hpp"
#include "brq/verify.hpp"

#include <nlohmann/json_fwd.hpp>

namespace brq {

using nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits, as decimal
// strings otherwise; both forms are accepted on input.
json json_from_int(const Int& x);
Int int_from_json(const json& j);
Rat rat_from_json(const json& j);  // number or "p/q" string

json json_from_vec(const Vec& v);
json json_from_matrix(const IntMat& m);
IntMat matrix_from_json(const json& j);

Lattice lattice_from_json(const json& j);
json lattice_to_json(const Lattice& l);

InvolutiveLattice involutive_from_json(const json& j);

PicardSpec picard_spec_from_json(const json& j);
PeriodPoint period_point_from_json(const json& j);

json decision_report_to_json(const DecisionReport& r);
json census_to_json(const std::vector<HypersurfaceRecord>& records);
json omega_report_to_json(const OmegaReport& r);
json check_results_to_json(const std::vector<CheckResult>& results);
json torsion_profile_to_json(const TorsionProfile& p);
json abelian_group_to_json(const FiniteAbelianGroup& g);
json signature_to_json(const Signature& s);

}  // namespace brq

#endif
