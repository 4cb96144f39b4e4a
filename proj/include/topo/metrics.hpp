#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "topo/dataset.hpp"
#include "topo/field.hpp"
#include "topo/model.hpp"

namespace topo {

inline constexpr double kDefaultLambda = 0.1;
inline constexpr double kDefaultEssentialPenalty = 1.0;
inline constexpr double kBceClamp = 1e-7;

/// Mean squared error over elements. Shapes must match.
double mse(const Field2D& pred, const Field2D& truth);

/// Fraction of elements whose rounded values agree; 0.5 rounds up.
double binaryAccuracy(const Field2D& pred, const Field2D& truth);

/// Mean binary cross-entropy with predictions clamped to
/// [kBceClamp, 1 - kBceClamp]. Truth values act as soft labels.
double binaryCrossEntropy(const Field2D& pred, const Field2D& truth);

struct ComplianceErrorResult {
    double value = 0.0;
    bool unstable = false;   // a solve failed; value is meaningless then
};

/// |C(pred) - C(truth)| / C(truth) from two solves of the shared load case
/// on the continuous densities (optionally rounded first). A singular or
/// non-convergent solve marks the sample unstable instead of throwing.
ComplianceErrorResult complianceError(const Field2D& pred, const Field2D& truth,
                                      const GridDomain& grid, const MaterialModel& mat,
                                      const LoadCase& lc, bool round_densities = false);

/// Sum over homology dimensions 0 and 1 of the bottleneck distance between
/// the prediction's and the truth's persistence diagrams. An essential-count
/// mismatch in a dimension contributes max(finite part, essential_penalty)
/// instead of infinity so the loss stays finite.
double topologyLoss(const Field2D& pred, const Field2D& truth,
                    double essential_penalty = kDefaultEssentialPenalty);

/// Combined loss BCE + lambda * topologyLoss. lambda must lie in [0, 1];
/// lambda == 0 short-circuits to exactly the BCE value.
double totalLoss(const Field2D& pred, const Field2D& truth,
                 double lambda = kDefaultLambda,
                 double essential_penalty = kDefaultEssentialPenalty);

struct SampleMetrics {
    int index = 0;
    double mse = 0.0;
    double binary_accuracy = 0.0;
    double compliance_error = 0.0;
    bool unstable = false;
    double bce = 0.0;
    double bottleneck_dim0 = 0.0;
    double bottleneck_dim1 = 0.0;
    int betti0_error = 0;
    int betti1_error = 0;
    double l_topology = 0.0;
    double total_loss = 0.0;
};

struct MetricsReport {
    int nelx = 0;
    int nely = 0;
    std::size_t count = 0;
    std::size_t unstable_count = 0;
    double lambda = kDefaultLambda;
    bool rounded = false;

    // Arithmetic means over samples; compliance statistics exclude unstable
    // samples. The deviation is the population standard deviation.
    double mse_mean = 0.0;
    double binary_accuracy_mean = 0.0;
    double compliance_error_mean = 0.0;
    double compliance_error_std = 0.0;
    double bce_mean = 0.0;
    double bottleneck_dim0_mean = 0.0;
    double bottleneck_dim1_mean = 0.0;
    double betti0_error_mean = 0.0;
    double betti1_error_mean = 0.0;
    double l_topology_mean = 0.0;
    double total_loss_mean = 0.0;

    std::vector<SampleMetrics> rows;
};

struct EvaluateOptions {
    double lambda = kDefaultLambda;
    double essential_penalty = kDefaultEssentialPenalty;
    bool round_densities = false;
    int jobs = 0;             // 0 = all cores
};

/// All metrics for one prediction/sample pair (the building block of the
/// batch evaluations).
SampleMetrics evaluateSample(const Field2D& pred, const SampleRecord& rec,
                             const GridDomain& grid, const MaterialModel& mat,
                             const EvaluateOptions& opt, int index);

/// Batch evaluation, OpenMP-parallel across samples. preds[i] pairs with
/// dataset sample i; count and shapes must match exactly.
MetricsReport evaluateBatch(const DatasetReader& data, const std::vector<Field2D>& preds,
                            const MaterialModel& mat, const EvaluateOptions& opt);

/// Serial reference twin of evaluateBatch, kept for testing/benchmarks.
MetricsReport evaluateBatchSerial(const DatasetReader& data, const std::vector<Field2D>& preds,
                                  const MaterialModel& mat, const EvaluateOptions& opt);

/// Aggregates rows into the report means (shared by both batch drivers).
MetricsReport aggregateMetrics(std::vector<SampleMetrics> rows, int nelx, int nely,
                               const EvaluateOptions& opt);

void writePerSampleCsv(std::ostream& os, const MetricsReport& r);
void writeSummaryCsv(std::ostream& os, const MetricsReport& r);
nlohmann::json reportToJson(const MetricsReport& r);

} // namespace topo
