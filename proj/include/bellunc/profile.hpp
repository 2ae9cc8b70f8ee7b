#pragma once

namespace bellunc {

// The ten second-order statistics of four observables A, B (one side) and
// C, D (other side): six pairwise correlations and four variances.
struct CorrelationProfile {
    double eAC = 0.0;
    double eAD = 0.0;
    double eBC = 0.0;
    double eBD = 0.0;
    double eAB = 0.0;
    double eCD = 0.0;
    double varA = 0.0;
    double varB = 0.0;
    double varC = 0.0;
    double varD = 0.0;

    friend bool operator==(const CorrelationProfile&, const CorrelationProfile&) = default;
};

// Throws InputError on a non-finite field or a variance below -slack.
void validate(const CorrelationProfile& p, double slack = 1e-12);

}  // namespace bellunc
