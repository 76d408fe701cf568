#include "bdt/quotient_model.hpp"

#include <algorithm>

#include "bdt/errors.hpp"
#include "bdt/odometer.hpp"
#include "bdt/operator_model.hpp"

namespace bdt {

LevelFunction::LevelFunction(RadixSchedule schedule, std::size_t level,
                             std::vector<std::complex<double>> values)
    : schedule_(std::move(schedule)), level_(level), values_(std::move(values)) {
    if (values_.size() != schedule_.n_index(level_)) {
        throw ValidityError("level-" + std::to_string(level_) + " function needs n_k = " +
                            std::to_string(schedule_.n_index(level_)) + " values, got " +
                            std::to_string(values_.size()));
    }
}

LevelFunction LevelFunction::constant(RadixSchedule schedule, std::size_t level,
                                      std::complex<double> c) {
    const u64 n = schedule.n_index(level);
    return LevelFunction(std::move(schedule), level, std::vector<std::complex<double>>(n, c));
}

LevelFunction LevelFunction::indicator(const DigitWord& beta) {
    auto f = constant(beta.schedule(), beta.length(), 0.0);
    f.values_[beta.value()] = 1.0;
    return f;
}

namespace {

void require_compatible(const LevelFunction& a, const LevelFunction& b) {
    if (a.level() != b.level() || !(a.schedule() == b.schedule())) {
        throw ValidityError("level functions live at different levels or schedules");
    }
}

} // namespace

LevelFunction LevelFunction::operator*(const LevelFunction& other) const {
    require_compatible(*this, other);
    auto out = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] *= other.values_[i];
    return out;
}

LevelFunction LevelFunction::operator+(const LevelFunction& other) const {
    require_compatible(*this, other);
    auto out = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] += other.values_[i];
    return out;
}

LevelFunction LevelFunction::conj() const {
    auto out = *this;
    for (auto& v : out.values_) v = std::conj(v);
    return out;
}

double LevelFunction::sup_norm() const {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
}

LevelFunction refine(const LevelFunction& f, std::size_t to_level) {
    if (to_level < f.level()) {
        throw RangeError("cannot refine level " + std::to_string(f.level()) + " down to " +
                         std::to_string(to_level));
    }
    const u64 n = f.schedule().n_index(to_level);
    const u64 period = f.values().size();
    std::vector<std::complex<double>> values(n);
    for (u64 m = 0; m < n; ++m) values[m] = f.values()[m % period];
    return LevelFunction(f.schedule(), to_level, std::move(values));
}

LevelFunction induced_automorphism(const LevelFunction& f) {
    const auto& v = f.values();
    std::vector<std::complex<double>> out(v.size());
    std::rotate_copy(v.begin(), v.end() - 1, v.end(), out.begin());
    return LevelFunction(f.schedule(), f.level(), std::move(out));
}

std::vector<std::size_t> quotient_difference_support(const DigitWord& beta, std::size_t dim,
                                                     double eps) {
    const auto diff = theta(e_beta_diag(beta, dim)) - e_beta_diag(prefix_increment(beta), dim);
    std::vector<std::size_t> support;
    for (std::size_t r = 0; r < dim; ++r) {
        bool nonzero = false;
        for (std::size_t c = 0; c < dim && !nonzero; ++c) {
            nonzero = std::abs(diff(r, c)) > eps || std::abs(diff(c, r)) > eps;
        }
        if (nonzero) support.push_back(r);
    }
    return support;
}

bool quotient_compatibility(const DigitWord& beta, std::size_t dim, double eps) {
    const u64 n = beta.schedule().n_index(beta.length());
    if (dim < 2 * n) {
        throw PreconditionError("quotient compatibility needs N >= 2 n_k");
    }
    const auto support = quotient_difference_support(beta, dim, eps);
    return std::all_of(support.begin(), support.end(), [](std::size_t j) { return j == 0; });
}

nlohmann::json to_json(const LevelFunction& f) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : f.values()) values.push_back({v.real(), v.imag()});
    return {{"level", f.level()}, {"schedule", f.schedule().to_string()}, {"values", values}};
}

LevelFunction level_function_from_json(const nlohmann::json& j) {
    try {
        auto schedule = RadixSchedule::parse(j.at("schedule").get<std::string>());
        std::vector<std::complex<double>> values;
        for (const auto& v : j.at("values")) {
            values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
        }
        return LevelFunction(std::move(schedule), j.at("level").get<std::size_t>(), std::move(values));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed level function JSON: ") + e.what());
    } catch (const ValidityError& e) {
        throw InputError(e.what());
    }
}

} // namespace bdt
