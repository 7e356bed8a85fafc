#include "paratensor/conditions/common.hpp"

#include <random>

#include "paratensor/error.hpp"

namespace paratensor::conditions {

ScalarFit fit_scalar(const FrameTensor& lhs, const FrameTensor& rhs) {
    ScalarFit fit;
    const auto pivot = rhs.first_nonzero();
    if (!pivot) {
        fit.rhs_zero = true;
        fit.witness = find_witness(lhs);
        fit.holds = !fit.witness.has_value();
        return fit;
    }
    const Expr L = lhs.at(*pivot) / rhs.at(*pivot);
    fit.witness = find_witness(lhs - rhs.scaled(L));
    fit.holds = !fit.witness.has_value();
    fit.L = L;
    return fit;
}

bool has_zero_differential(const Expr& e, std::size_t dim) {
    for (std::size_t a = 0; a < dim; ++a)
        if (!e.diff(a).is_zero()) return false;
    return true;
}

std::vector<std::vector<symexpr::Rational>> sample_points(std::size_t dim, std::size_t count, std::uint64_t seed,
                                                          const std::vector<Expr>& nonvanishing) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<std::vector<symexpr::Rational>> points;
    std::size_t attempts = 0;
    while (points.size() < count) {
        if (++attempts > 1000 * (count + 1)) throw DomainError("could not find sample points avoiding singularities");
        std::vector<symexpr::Rational> p(dim);
        for (auto& c : p) c = symexpr::make_rational(num(rng), den(rng));
        bool ok = true;
        for (const auto& e : nonvanishing) {
            if (e.denominator().evaluate(p) == 0 || e.numerator().evaluate(p) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) points.push_back(std::move(p));
    }
    return points;
}

}  // namespace paratensor::conditions
