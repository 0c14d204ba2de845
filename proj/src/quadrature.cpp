#include "cesaro/quadrature.hpp"

#include <map>
#include <mutex>

namespace cesaro {

namespace {

GaussRule compute_gauss_legendre(int order) {
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_order
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
    static std::mutex mtx;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

double gamma_lower_mass(std::size_t n, double x) {
    if (x <= 0.0) return 0.0;
    if (n == 0) return 1.0;
    // Q(n, x) = e^{-x} sum_{j<n} x^j/j!, via log-sum-exp from the largest term
    const double lx = std::log(x);
    double max_lt = -std::numeric_limits<double>::infinity();
    std::vector<double> lt(n);
    for (std::size_t j = 0; j < n; ++j) {
        lt[j] = -x + j * lx - std::lgamma(static_cast<double>(j) + 1.0);
        max_lt = std::max(max_lt, lt[j]);
    }
    if (max_lt < -745.0) return 1.0;
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::exp(lt[j] - max_lt);
    double q = std::exp(max_lt) * s;
    return std::min(1.0, std::max(0.0, 1.0 - q));
}

double gamma_tail_cutoff(double shape, double tol) {
    if (!(shape > 0.0)) throw std::invalid_argument("gamma_tail_cutoff: shape must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("gamma_tail_cutoff: tol must be positive");
    const double log_tol = std::log(tol);
    double t = shape + 8.0 * std::sqrt(shape) + 16.0;
    while (shape * std::log(t / shape) + shape - t >= log_tol) t *= 1.25;
    return t;
}

}  // namespace cesaro
