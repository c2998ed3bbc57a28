#ifndef ZSQM_DETAIL_JET_HPP
#define ZSQM_DETAIL_JET_HPP

#include <array>
#include <cmath>

namespace zsqm::detail {

// Truncated Taylor series (jet) at a point, coefficients c[0..ORDER-1] of
// sum c_k t^k. Enough arithmetic to push theta-type series through exp/log.
constexpr int kJetOrder = 12;

struct Jet {
    std::array<double, kJetOrder> c{};

    static Jet constant(double v) {
        Jet j;
        j.c[0] = v;
        return j;
    }
    static Jet linear(double slope, double v0 = 0.0) {
        Jet j;
        j.c[0] = v0;
        j.c[1] = slope;
        return j;
    }
};

inline Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k < kJetOrder; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

inline Jet operator*(const Jet& a, double s) {
    Jet r;
    for (int k = 0; k < kJetOrder; ++k) r.c[k] = a.c[k] * s;
    return r;
}

inline Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int i = 0; i < kJetOrder; ++i) {
        if (a.c[i] == 0.0) continue;
        for (int j = 0; j + i < kJetOrder; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

// exp(a): solves (e^a)' = a' e^a coefficient-wise.
inline Jet jet_exp(const Jet& a) {
    Jet r;
    r.c[0] = std::exp(a.c[0]);
    for (int k = 0; k + 1 < kJetOrder; ++k) {
        double s = 0.0;
        for (int j = 0; j <= k; ++j) s += (j + 1) * a.c[j + 1] * r.c[k - j];
        r.c[k + 1] = s / (k + 1);
    }
    return r;
}

// log(a), a.c[0] > 0: solves a log(a)' = a'.
inline Jet jet_log(const Jet& a) {
    Jet r;
    r.c[0] = std::log(a.c[0]);
    for (int k = 0; k + 1 < kJetOrder; ++k) {
        double s = (k + 1) * a.c[k + 1];
        for (int j = 1; j <= k; ++j) s -= a.c[j] * (k + 1 - j) * r.c[k + 1 - j];
        r.c[k + 1] = s / ((k + 1) * a.c[0]);
    }
    return r;
}

} // namespace zsqm::detail

#endif
