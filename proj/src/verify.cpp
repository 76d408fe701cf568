#include "bdt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>

#include "bdt/compactification.hpp"
#include "bdt/errors.hpp"
#include "bdt/odometer.hpp"
#include "bdt/operator_model.hpp"
#include "bdt/quotient_model.hpp"
#include "bdt/sampling.hpp"

namespace bdt {

namespace {

using sampling::Rng;
using json = nlohmann::json;

constexpr u64 kExhaustiveBound = 10'000;

struct Check {
    std::string name;
    bool exact; // residual counts failures
    std::function<std::pair<double, json>(const VerifyConfig&, Rng&)> run;
};

std::size_t exhaustive_level(const VerifyConfig& c) {
    return std::min<std::size_t>(6, c.schedule.max_level_within(kExhaustiveBound));
}

std::size_t desk_level(const VerifyConfig& c) {
    return std::min(c.max_level, exhaustive_level(c));
}

// ---------------------------------------------------------------- mixedradix

std::pair<double, json> round_trip(const VerifyConfig& c, Rng&) {
    const std::size_t top = exhaustive_level(c);
    double failures = 0;
    for (std::size_t k = 0; k <= top; ++k) {
        for (u64 n = 0; n < c.schedule.n_index(k); ++n) {
            if (from_digits(to_digits(n, k, c.schedule)) != n) ++failures;
        }
    }
    return {failures, json{{"max_level", top}}};
}

std::pair<double, json> prefix_coherence(const VerifyConfig& c, Rng&) {
    const std::size_t top = exhaustive_level(c);
    double failures = 0;
    for (std::size_t k = 0; k < top; ++k) {
        const u64 nk = c.schedule.n_index(k);
        for (u64 n = 0; n < c.schedule.n_index(k + 1); ++n) {
            if (to_digits(n, k + 1, c.schedule).head(k) != to_digits(n % nk, k, c.schedule)) ++failures;
        }
    }
    return {failures, json{{"max_level", top}}};
}

std::pair<double, json> canonical_idempotence(const VerifyConfig& c, Rng& rng) {
    double failures = 0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const auto word = sampling::digit_word(rng, c.schedule, t % 9);
        const Tail tail = t % 2 ? Tail::Max : Tail::Zeros;
        const auto once = CantorPoint::canonical_prefix(word, tail);
        if (CantorPoint::canonical_prefix(once, tail) != once) ++failures;
        if (!(CantorPoint(word, tail) == CantorPoint(once, tail))) ++failures;
    }
    return {failures, json{{"trials", c.trials}}};
}

std::pair<double, json> cantor_equality(const VerifyConfig& c, Rng& rng) {
    double failures = 0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const auto p = sampling::cantor_point(rng, c.schedule, 3);
        const auto q = sampling::cantor_point(rng, c.schedule, 3);
        bool digitwise = true;
        for (std::size_t k = 0; k <= 64; ++k) {
            if (truncate(p, k) != truncate(q, k)) digitwise = false;
        }
        if ((p == q) != digitwise) ++failures;
    }
    return {failures, json{{"trials", c.trials}, {"resolution", 64}}};
}

// ---------------------------------------------------------------- odometer

std::pair<double, json> oracle_equivalence(const VerifyConfig& c, Rng&) {
    const std::size_t top = exhaustive_level(c);
    double failures = 0;
    for (std::size_t k = 1; k <= top; ++k) {
        const u64 nk = c.schedule.n_index(k);
        for (u64 v = 0; v < nk; ++v) {
            const CantorPoint p(to_digits(v, k, c.schedule), Tail::Zeros);
            if (truncate(odometer_total(p), k).value() != (v + 1) % nk) ++failures;
        }
    }
    return {failures, json{{"max_level", top}}};
}

std::pair<double, json> wrap_case(const VerifyConfig& c, Rng&) {
    double failures = 0;
    const auto top = CantorPoint::max(c.schedule);
    if (!(odometer_total(top) == CantorPoint::zeros(c.schedule))) ++failures;
    if (!(odometer_inverse(CantorPoint::zeros(c.schedule)) == top)) ++failures;
    try {
        (void)odometer_partial(top);
        ++failures;
    } catch (const DomainError&) {
    }
    return {failures, json::object()};
}

std::pair<double, json> inverse_law(const VerifyConfig& c, Rng& rng) {
    double failures = 0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const auto p = sampling::cantor_point(rng, c.schedule, 8);
        if (!(odometer_inverse(odometer_total(p)) == p)) ++failures;
        if (!(odometer_total(odometer_inverse(p)) == p)) ++failures;
        if (!p.is_all_max() && !(odometer_partial(p) == odometer_total(p))) ++failures;
    }
    return {failures, json{{"trials", c.trials}}};
}

std::pair<double, json> visit_order(const VerifyConfig& c, Rng& rng) {
    const std::size_t top = desk_level(c);
    double failures = 0;
    for (std::size_t k = 0; k <= top; ++k) {
        const u64 nk = c.schedule.n_index(k);
        // prefix_increment is one n_k-cycle on K_k
        auto word = DigitWord(c.schedule, std::vector<u64>(k, 0));
        std::vector<bool> seen(nk, false);
        for (u64 i = 0; i < nk; ++i) {
            const u64 v = word.value();
            if (seen[v]) ++failures;
            seen[v] = true;
            word = prefix_increment(word);
        }
        if (word.value() != 0) ++failures;
        const auto start = XPoint::cantor(sampling::cantor_point(rng, c.schedule, k + 2));
        if (!visits_each_cylinder_once(orbit(start, 3 * nk), k, c.schedule)) ++failures;
    }
    return {failures, json{{"max_level", top}}};
}

std::pair<double, json> birkhoff(const VerifyConfig& c, Rng& rng) {
    const std::size_t top = desk_level(c);
    double worst = 0.0;
    double failures = 0;
    for (std::size_t k = 0; k <= top; ++k) {
        const u64 nk = c.schedule.n_index(k);
        const u64 steps = 10 * nk;
        const Rational bound(static_cast<std::int64_t>(nk), static_cast<std::int64_t>(steps));
        for (int s = 0; s < 5; ++s) {
            const auto start = XPoint::cantor(sampling::cantor_point(rng, c.schedule, k + 2));
            const auto record = orbit(start, steps);
            for (u64 count : visit_counts(record, k, c.schedule)) {
                const Rational freq(static_cast<std::int64_t>(count),
                                    static_cast<std::int64_t>(record.points.size()));
                const Rational dev = abs(freq - Rational(1, static_cast<std::int64_t>(nk)));
                worst = std::max(worst, boost::rational_cast<double>(dev));
                if (dev > bound) ++failures;
            }
        }
    }
    return {failures, json{{"max_level", top}, {"starts", 5}, {"worst_deviation", worst}}};
}

std::pair<double, json> image_avoids_zero(const VerifyConfig& c, Rng& rng) {
    double failures = 0;
    const auto record = orbit(XPoint::nat(0), c.trials);
    for (std::size_t i = 1; i < record.points.size(); ++i) {
        if (record.points[i] == XPoint::nat(0)) ++failures;
    }
    for (std::size_t t = 0; t < c.trials; ++t) {
        const auto x = t % 2 ? XPoint::nat(std::uniform_int_distribution<u64>(0, 1u << 30)(rng))
                             : XPoint::cantor(sampling::cantor_point(rng, c.schedule, 6));
        if (step_x(x) == XPoint::nat(0)) ++failures;
    }
    return {failures, json{{"trials", c.trials}}};
}

// ---------------------------------------------------------------- compactification

std::pair<double, json> basis_property(const VerifyConfig& c, Rng& rng) {
    double failures = 0;
    const std::size_t top = desk_level(c);
    for (std::size_t t = 0; t < 20; ++t) {
        const auto gamma = sampling::cantor_point(rng, c.schedule, top + 2);
        for (std::size_t k = 0; k <= top; ++k) {
            const auto v = v_k_neighborhood(gamma, k);
            const auto idem = neighborhood_idempotent(v);
            const auto diag = (TruncatedOperator::identity(c.dim) - f_k_diag(k, c.dim)) *
                              e_beta_diag(truncate(gamma, k), c.dim);
            for (u64 n = 0; n < c.dim; ++n) {
                const bool member = membership(XPoint::nat(n), v);
                if (member != idem.contains(n)) ++failures;
                if (member != (std::abs(diag(n, n) - 1.0) == 0.0)) ++failures;
            }
            if (!membership(XPoint::cantor(gamma), v)) ++failures;
        }
    }
    return {failures, json{{"max_level", top}, {"dim", c.dim}}};
}

std::pair<double, json> nested(const VerifyConfig& c, Rng& rng) {
    double failures = 0;
    const std::size_t top = desk_level(c);
    for (std::size_t t = 0; t < 20; ++t) {
        const auto gamma = sampling::cantor_point(rng, c.schedule, top + 2);
        for (std::size_t k = 0; k < top; ++k) {
            const auto outer = v_k_neighborhood(gamma, k);
            const auto inner = v_k_neighborhood(gamma, k + 1);
            const u64 bound = 4 * c.schedule.n_index(k + 1) + k + 1;
            for (u64 n = 0; n < bound; ++n) {
                if (membership(XPoint::nat(n), inner) && !membership(XPoint::nat(n), outer)) ++failures;
            }
            for (u64 v = 0; v < c.schedule.n_index(k + 2); ++v) {
                for (Tail tail : {Tail::Zeros, Tail::Max}) {
                    const auto zeta = XPoint::cantor(CantorPoint(to_digits(v, k + 2, c.schedule), tail));
                    if (membership(zeta, inner) && !membership(zeta, outer)) ++failures;
                }
            }
        }
    }
    return {failures, json{{"max_level", top}}};
}

std::pair<double, json> separation(const VerifyConfig& c, Rng& rng) {
    double failures = 0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const auto p = sampling::cantor_point(rng, c.schedule, 4);
        const auto q = sampling::cantor_point(rng, c.schedule, 4);
        if (p == q) continue;
        bool separated = false;
        for (std::size_t k = 0; k <= 64 && !separated; ++k) {
            // Cantor parts of V_k(p) and V_k(q) are cylinders: disjoint iff the
            // truncations differ.
            separated = truncate(p, k) != truncate(q, k);
        }
        if (!separated) ++failures;
    }
    return {failures, json{{"trials", c.trials}}};
}

std::pair<double, json> density(const VerifyConfig& c, Rng&) {
    double failures = 0;
    const std::size_t top = desk_level(c);
    for (std::size_t k = 0; k <= top; ++k) {
        const u64 nk = c.schedule.n_index(k);
        for (u64 v = 0; v < std::min<u64>(nk, 100); ++v) {
            const auto gamma = CantorPoint(to_digits(v, k, c.schedule), Tail::Zeros);
            const auto nb = v_k_neighborhood(gamma, k);
            bool found = false;
            for (u64 n = 0; n <= k + nk && !found; ++n) found = membership(XPoint::nat(n), nb);
            if (!found) ++failures;
        }
    }
    return {failures, json{{"max_level", top}}};
}

std::pair<double, json> idempotent_closure(const VerifyConfig& c, Rng& rng) {
    double failures = 0;
    const std::size_t top = desk_level(c);
    auto draw = [&]() {
        std::uniform_int_distribution<u64> small(0, 40);
        NatSet a, b;
        for (int i = 0; i < 3; ++i) {
            a.insert(small(rng));
            b.insert(small(rng));
        }
        if (std::bernoulli_distribution(0.25)(rng)) return BasicIdempotent::finite(a);
        const std::size_t len = std::uniform_int_distribution<std::size_t>(0, top)(rng);
        return BasicIdempotent::cylinder(sampling::digit_word(rng, c.schedule, len), a, b);
    };
    for (std::size_t t = 0; t < c.trials; ++t) {
        const auto p = draw();
        const auto q = draw();
        const auto pq = multiply(p, q);
        if (!pq.is_finite()) {
            const auto& cyl = pq.as_cylinder();
            for (u64 n : cyl.add) {
                if (in_residue_class(cyl.beta, n)) ++failures;
            }
            for (u64 n : cyl.remove) {
                if (!in_residue_class(cyl.beta, n)) ++failures;
            }
        }
        for (u64 n = 0; n < 200; ++n) {
            if (pq.contains(n) != (p.contains(n) && q.contains(n))) ++failures;
        }
    }
    return {failures, json{{"trials", c.trials}}};
}

// ---------------------------------------------------------------- operator_model

std::vector<std::size_t> shift_periods(const VerifyConfig& c) {
    std::vector<std::size_t> periods;
    for (std::size_t k = 0; k <= desk_level(c); ++k) periods.push_back(c.schedule.n_index(k));
    return periods;
}

std::pair<double, json> circle_covariance(const VerifyConfig& c, Rng& rng) {
    double worst = 0.0;
    const auto periods = shift_periods(c);
    for (std::size_t w = 0; w < 10; ++w) {
        const auto weights = sampling::periodic_weights(rng, periods[w % periods.size()]);
        const auto s = weighted_shift(weights, c.dim);
        for (int t = 0; t < 20; ++t) {
            const cplx z = sampling::unit_complex(rng);
            worst = std::max(worst, max_abs_diff(circle_conjugate(z, s), z * s));
        }
    }
    return {worst, json{{"dim", c.dim}, {"weights", 10}, {"angles", 20}}};
}

std::pair<double, json> fourier_exactness(const VerifyConfig& c, Rng& rng) {
    const auto x = sampling::dense_matrix(rng, c.dim);
    const long n = static_cast<long>(c.dim);
    double worst = 0.0;
    TruncatedOperator sum(c.dim);
    for (long d = -(n - 1); d <= n - 1; ++d) {
        const auto comp = spectral_component(x, d);
        for (long r = 0; r < n; ++r) {
            for (long col = 0; col < n; ++col) {
                const cplx expected = (r - col == d) ? x(r, col) : cplx{};
                worst = std::max(worst, std::abs(comp(r, col) - expected));
            }
        }
        sum += comp;
    }
    worst = std::max(worst, max_abs_diff(sum, x));
    return {worst, json{{"dim", c.dim}, {"samples", 2 * c.dim - 1}}};
}

std::pair<double, json> fixed_point_diagonal(const VerifyConfig& c, Rng& rng) {
    const auto periods = shift_periods(c);
    std::vector<TruncatedOperator> letters;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto s = weighted_shift(sampling::periodic_weights(rng, periods[i % periods.size()]), c.dim);
        letters.push_back(s);
        letters.push_back(s.adjoint());
    }
    double worst = 0.0;
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::uniform_int_distribution<std::size_t> length(1, 6);
    for (std::size_t t = 0; t < c.trials; ++t) {
        auto word = letters[pick(rng)];
        for (std::size_t l = length(rng); l > 1; --l) word = word * letters[pick(rng)];
        worst = std::max(worst, off_band(spectral_component(word, 0), 0));
    }
    return {worst, json{{"dim", c.dim}, {"words", c.trials}, {"max_length", 6}}};
}

std::pair<double, json> band_additivity(const VerifyConfig& c, Rng& rng) {
    double worst = 0.0;
    const long n = static_cast<long>(c.dim);
    std::uniform_int_distribution<long> deg(-3, 3);
    for (int t = 0; t < 20; ++t) {
        const long p = deg(rng), q = deg(rng);
        TruncatedOperator x(c.dim), y(c.dim);
        for (long r = 0; r < n; ++r) {
            if (r - p >= 0 && r - p < n) x(r, r - p) = sampling::box_complex(rng);
            if (r - q >= 0 && r - q < n) y(r, r - q) = sampling::box_complex(rng);
        }
        worst = std::max(worst, off_band(x * y, p + q));
    }
    // One shift times diagonals stays in band 1.
    const auto s = weighted_shift(sampling::periodic_weights(rng, 2), c.dim);
    const auto a = sampling::diagonal_matrix(rng, c.dim);
    const auto b = sampling::diagonal_matrix(rng, c.dim);
    worst = std::max(worst, off_band(a * s * b, 1));
    return {worst, json{{"dim", c.dim}}};
}

std::pair<double, json> theta_range(const VerifyConfig& c, Rng& rng) {
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        worst = std::max(worst, std::abs(theta(sampling::diagonal_matrix(rng, c.dim))(0, 0)));
        worst = std::max(worst, std::abs(theta(sampling::dense_matrix(rng, c.dim))(0, 0)));
    }
    return {worst, json{{"dim", c.dim}}};
}

std::pair<double, json> theta_delta(const VerifyConfig& c, Rng&) {
    double worst = 0.0;
    for (std::size_t n = 0; n + 1 < c.dim; ++n) {
        worst = std::max(worst, max_abs_diff(theta(delta_diag(n, c.dim)), delta_diag(n + 1, c.dim)));
    }
    return {worst, json{{"dim", c.dim}}};
}

std::pair<double, json> regularity(const VerifyConfig& c, Rng& rng) {
    double worst = 0.0;
    const std::size_t draws = std::min<std::size_t>(c.trials, 100);
    for (std::size_t t = 0; t < draws; ++t) {
        const auto a = sampling::diagonal_matrix(rng, c.dim);
        const auto b = sampling::diagonal_matrix(rng, c.dim);
        const auto x = sampling::band_one_matrix(rng, c.dim);
        const auto y = sampling::band_one_matrix(rng, c.dim);
        worst = std::max(worst, regularity_check(a, b, x, y, {c.eps}).max());
    }
    return {worst, json{{"dim", c.dim}, {"draws", draws}}};
}

std::pair<double, json> transport(const VerifyConfig& c, Rng&) {
    double failures = 0;
    const std::size_t top = desk_level(c);
    const std::size_t dim = 4 * c.schedule.n_index(top);
    for (std::size_t k = 0; k <= top; ++k) {
        const u64 nk = c.schedule.n_index(k);
        for (u64 v = 0; v < nk; ++v) {
            const auto beta = to_digits(v, k, c.schedule);
            const auto support = support_transport(beta, dim, {c.eps});
            std::vector<std::size_t> expected;
            for (std::size_t j = k + 1; j < dim; ++j) {
                if (j % nk == (v + 1) % nk) expected.push_back(j);
            }
            if (support != expected) ++failures;
            if (!transport_matches_odometer(beta, support)) ++failures;
        }
    }
    return {failures, json{{"max_level", top}, {"dim", dim}}};
}

// ---------------------------------------------------------------- quotient_model

std::pair<double, json> refine_commutes(const VerifyConfig& c, Rng& rng) {
    double worst = 0.0;
    const std::size_t top = exhaustive_level(c);
    for (std::size_t k = 0; k < top; ++k) {
        for (std::size_t k2 = k + 1; k2 <= top; ++k2) {
            std::vector<cplx> values(c.schedule.n_index(k));
            for (auto& v : values) v = sampling::box_complex(rng);
            const LevelFunction f(c.schedule, k, values);
            const auto lhs = refine(induced_automorphism(f), k2);
            const auto rhs = induced_automorphism(refine(f, k2));
            for (std::size_t i = 0; i < lhs.values().size(); ++i) {
                worst = std::max(worst, std::abs(lhs.values()[i] - rhs.values()[i]));
            }
        }
    }
    return {worst, json{{"max_level", top}}};
}

std::pair<double, json> automorphism_isometric(const VerifyConfig& c, Rng& rng) {
    double worst = 0.0;
    for (std::size_t k = 0; k <= desk_level(c); ++k) {
        auto draw = [&] {
            std::vector<cplx> values(c.schedule.n_index(k));
            for (auto& v : values) v = sampling::box_complex(rng);
            return LevelFunction(c.schedule, k, values);
        };
        const auto f = draw(), g = draw();
        const auto sf = induced_automorphism(f), sg = induced_automorphism(g);
        worst = std::max(worst, std::abs(sf.sup_norm() - f.sup_norm()));
        auto diff = [](const LevelFunction& a, const LevelFunction& b) {
            double m = 0.0;
            for (std::size_t i = 0; i < a.values().size(); ++i) {
                m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
            }
            return m;
        };
        worst = std::max(worst, diff(induced_automorphism(f * g), sf * sg));
        worst = std::max(worst, diff(induced_automorphism(f + g), sf + sg));
        worst = std::max(worst, diff(induced_automorphism(f.conj()), sf.conj()));
    }
    return {worst, json{{"max_level", desk_level(c)}}};
}

std::pair<double, json> compatibility(const VerifyConfig& c, Rng&) {
    double failures = 0;
    const std::size_t top = desk_level(c);
    for (std::size_t k = 0; k <= top; ++k) {
        const u64 nk = c.schedule.n_index(k);
        for (u64 v = 0; v < nk; ++v) {
            const auto beta = to_digits(v, k, c.schedule);
            for (std::size_t dim : {static_cast<std::size_t>(2 * nk), c.dim}) {
                if (dim < 2 * nk) continue;
                if (!quotient_compatibility(beta, dim, c.eps)) ++failures;
            }
        }
    }
    return {failures, json{{"max_level", top}, {"dim", c.dim}}};
}

std::pair<double, json> orbit_minimality(const VerifyConfig& c, Rng&) {
    double failures = 0;
    const std::size_t top = desk_level(c);
    for (std::size_t k = 0; k <= top; ++k) {
        const u64 nk = c.schedule.n_index(k);
        auto f = LevelFunction::indicator(DigitWord(c.schedule, std::vector<u64>(k, 0)));
        std::vector<bool> seen(nk, false);
        for (u64 i = 0; i < nk; ++i) {
            const auto& v = f.values();
            const auto it = std::find(v.begin(), v.end(), cplx{1.0, 0.0});
            const auto idx = static_cast<std::size_t>(it - v.begin());
            if (idx != i % nk || seen[idx]) ++failures;
            seen[idx] = true;
            f = induced_automorphism(f);
        }
    }
    return {failures, json{{"max_level", top}}};
}

std::vector<Check> all_checks() {
    return {
        {"mixedradix.round_trip", true, round_trip},
        {"mixedradix.prefix_coherence", true, prefix_coherence},
        {"mixedradix.canonical_idempotence", true, canonical_idempotence},
        {"mixedradix.cantor_equality", true, cantor_equality},
        {"odometer.oracle_equivalence", true, oracle_equivalence},
        {"odometer.wrap_case", true, wrap_case},
        {"odometer.inverse_law", true, inverse_law},
        {"odometer.visit_order", true, visit_order},
        {"odometer.birkhoff", true, birkhoff},
        {"odometer.image_avoids_zero", true, image_avoids_zero},
        {"compactification.basis_property", true, basis_property},
        {"compactification.nested", true, nested},
        {"compactification.separation", true, separation},
        {"compactification.density", true, density},
        {"compactification.idempotent_closure", true, idempotent_closure},
        {"operator.circle_covariance", false, circle_covariance},
        {"operator.fourier_exactness", false, fourier_exactness},
        {"operator.fixed_point_diagonal", false, fixed_point_diagonal},
        {"operator.band_additivity", false, band_additivity},
        {"operator.theta_range", false, theta_range},
        {"operator.theta_delta", false, theta_delta},
        {"operator.regularity", false, regularity},
        {"operator.support_transport", true, transport},
        {"quotient.refine_commutes", false, refine_commutes},
        {"quotient.automorphism_isometric", false, automorphism_isometric},
        {"quotient.compatibility", true, compatibility},
        {"quotient.orbit_minimality", true, orbit_minimality},
    };
}

} // namespace

VerifyReport run_verification(const VerifyConfig& config) {
    if (config.dim < 2) throw InputError("--dim must be at least 2");
    if (config.eps < 0) throw InputError("--eps must be nonnegative");
    const auto checks = all_checks();
    VerifyReport report;
    report.schedule = config.schedule.to_string();
    report.checks.resize(checks.size());

    const long count = static_cast<long>(checks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        const auto& check = checks[static_cast<std::size_t>(i)];
        CheckResult& out = report.checks[static_cast<std::size_t>(i)];
        out.name = check.name;
        Rng rng = sampling::make_rng(config.seed, static_cast<u64>(i));
        try {
            auto [residual, params] = check.run(config, rng);
            out.residual = residual;
            out.params = std::move(params);
            out.pass = check.exact ? residual == 0.0 : residual <= config.eps;
        } catch (const std::exception& e) {
            out.residual = std::numeric_limits<double>::infinity();
            out.params = json{{"error", e.what()}};
            out.pass = false;
        }
    }
    report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& r) { return r.pass; });
    return report;
}

nlohmann::json VerifyReport::to_json() const {
    json checks_json = json::array();
    for (const auto& c : checks) {
        // JSON has no infinity; a check that threw reports a null residual.
        json residual = std::isfinite(c.residual) ? json(c.residual) : json(nullptr);
        checks_json.push_back({{"check", c.name}, {"params", c.params}, {"residual", residual}, {"pass", c.pass}});
    }
    return {{"schedule", schedule}, {"checks", checks_json}, {"pass", pass}};
}

void print_table(std::ostream& os, const VerifyReport& report) {
    std::size_t width = 5;
    for (const auto& c : report.checks) width = std::max(width, c.name.size());
    os << "schedule " << report.schedule << '\n';
    for (const auto& c : report.checks) {
        os << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width))
           << c.name << std::right << "  residual " << std::setprecision(3) << std::scientific
           << c.residual << std::defaultfloat << '\n';
    }
    os << (report.pass ? "all checks passed" : "some checks FAILED") << '\n';
}

} // namespace bdt
