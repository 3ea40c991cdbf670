#ifndef CHEMTREE_QSPR_HPP
#define CHEMTREE_QSPR_HPP

#include <string>
#include <vector>

#include "chemtree/indices.hpp"
#include "chemtree/tree.hpp"

namespace chemtree {

/// A linear boiling-point model over the molecular descriptors
/// {cbrt(root-distance), n1..n4, sub-root-degree-2 indicator, second
/// Zagreb}. Inactive terms carry coefficient exactly 0. Three built-in
/// presets: "basic", "reg1" (no root-distance term) and "reg2" (no
/// second-Zagreb term).
struct RegressionModel {
    double b0 = 0.0;  // intercept
    double b1 = 0.0;  // cbrt of the root-distance sum
    double b2 = 0.0;  // sub-root-degree-2 indicator
    double b3 = 0.0;  // second Zagreb index
    DegreeCostVector c;

    struct ActiveTerms {
        bool wio_cuberoot = false;
        bool s2 = false;
        bool m2 = false;
        bool n1 = false;
        bool n2 = false;
        bool n3 = false;
        bool n4 = false;

        bool operator==(const ActiveTerms&) const = default;
        int count() const;
    };
    ActiveTerms active;

    static RegressionModel basic();
    static RegressionModel regression1();
    static RegressionModel regression2();
    static RegressionModel preset(const std::string& name);  // basic|reg1|reg2

    /// Throws unless every inactive coefficient is exactly 0.
    void validate() const;
};

struct DescriptorVector {
    long long wio = 0;
    double wio_cuberoot = 0.0;
    int n1 = 0;
    int n2 = 0;
    int n3 = 0;
    int n4 = 0;
    int s2 = 0;
    long long m2 = 0;
};

/// All regression descriptors of a molecule; order must be >= 3.
DescriptorVector descriptors(const PendentRootedTree& tree);

/// Predicted boiling point in degrees Celsius.
double predict(const RegressionModel& model, const PendentRootedTree& tree);

struct DataRecord {
    std::string name;
    std::string skeleton;  // rooted tree encoding of order >= 3
    double bp_celsius = 0.0;
};

struct PrecisionStats {
    double correlation = 0.0;
    double sd = 0.0;  // sqrt(sum of squared residuals / (N-1)), degrees C
};

/// Ordinary least squares for the requested active-term set (plus the
/// intercept), solved by column-pivoted QR. Constant observations short
/// circuit to an intercept-only model. Throws on insufficient data or a
/// rank-deficient design matrix (the dependent columns are named).
RegressionModel fit(const std::vector<DataRecord>& data,
                    const RegressionModel::ActiveTerms& active);

/// Pearson correlation of predictions against observations and the
/// residual standard deviation. Needs >= 2 records and non-constant
/// observations.
PrecisionStats precision(const RegressionModel& model, const std::vector<DataRecord>& data);

struct DatasetLoadResult {
    std::vector<DataRecord> records;
    std::vector<std::string> warnings;  // e.g. duplicate canonical skeletons (both kept)
};

/// CSV with header `name,skeleton,bp_celsius`; fields may be
/// double-quoted (required when a skeleton contains commas). Parse
/// failures report line and column.
DatasetLoadResult load_dataset(const std::string& path);
void save_dataset(const std::string& path, const std::vector<DataRecord>& records);

/// Model JSON: {"b0":..,"b1":..,"b2":..,"b3":..,"c":[c1,c2,c3,c4],"active":[...]}
/// with active tokens from {wio3,n1,n2,n3,n4,s2,m2}.
std::string model_to_json(const RegressionModel& model);
RegressionModel model_from_json(const std::string& text);

}  // namespace chemtree

#endif
