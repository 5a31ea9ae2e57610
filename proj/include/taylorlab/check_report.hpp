#pragma once

#include <string>
#include <utility>
#include <vector>

namespace taylorlab {

/// Outcome of a numerical identity check.
struct CheckReport
{
    std::string name;
    bool pass = false;
    double measured_gap = 0.0;
    double threshold = 0.0;
    /// Named auxiliary values (both sides of an identity, counts, ...).
    std::vector<std::pair<std::string, double>> values;

    /// Passes iff gap ≤ threshold (NaN fails).
    static CheckReport from_gap(std::string name, double gap, double threshold)
    {
        CheckReport r;
        r.name = std::move(name);
        r.measured_gap = gap;
        r.threshold = threshold;
        r.pass = gap <= threshold;
        return r;
    }
};

}  // namespace taylorlab
