#pragma once

// JSON reports for verdicts, certificates and oracle results.

#include "icx/alignment.hpp"
#include "icx/bounds.hpp"
#include "icx/io.hpp"
#include "icx/oracle.hpp"
#include "icx/scheme.hpp"
#include "icx/unicast.hpp"

namespace icx {

Json rates_to_json(const RateVector& rates);
Json report_to_json(const VerificationReport& r);
Json simulation_to_json(const SimulationResult& r);
Json audit_to_json(const DimensionAudit& a);
Json partition_to_json(const AlignmentPartition& p);
Json feasibility_to_json(const FeasibilityVerdict& v);
Json certificate_to_json(const BoundCertificate& c);
Json capacity_to_json(const SymmetricCapacity& c);
Json oracle_to_json(const OracleResult& r);
Json unicast_map_to_json(const UnicastMap& m);
Json chain_steps_to_json(const std::vector<ChainStep>& steps);

}  // namespace icx
