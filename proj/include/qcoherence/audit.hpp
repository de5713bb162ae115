#pragma once

#include <vector>

#include "qcoherence/timescales.hpp"

namespace qcoh {

/// One measured discrepancy factor between a published closed form and the
/// derivation chain it claims to follow. `value` is the mean over the scanned
/// grid; `constancy_spread` is (max - min)/|mean| and must stay at rounding
/// level for a factor that really is a pure number.
struct AuditFactor {
    double value = 0.0;
    double constancy_spread = 0.0;
};

/// The four printed-versus-chained factors, measured, never corrected.
/// Field names are part of the serialized schema.
struct AuditReport {
    AuditFactor eq7_factor;           // printed temperature ratio / gated-model chain
    AuditFactor eq9_constant_gap;     // 4.5 coefficient / exact plateau 2 coth(1/2)
    AuditFactor eq16_exponent_factor; // ground-state overlap exponent / printed exponent q
    AuditFactor eq17_residual;        // quasi-static printed coherence / exp(-q)
};

/// Evaluate each printed/chained pair across the grids and report the ratio
/// plus its spread. Grids must be non-empty with every theta positive.
/// Operand errors propagate unchanged.
AuditReport run_audit(const std::vector<double>& theta_grid,
                      const std::vector<ChannelScenario>& scenario_grid);

}  // namespace qcoh
