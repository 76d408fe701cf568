#include "bdt/compactification.hpp"

#include "bdt/errors.hpp"

namespace bdt {

bool in_residue_class(const DigitWord& beta, u64 n) {
    return n % beta.schedule().n_index(beta.length()) == beta.value();
}

BasicIdempotent BasicIdempotent::finite(NatSet set) { return BasicIdempotent(FiniteSet{std::move(set)}); }

BasicIdempotent BasicIdempotent::cylinder(DigitWord beta, NatSet add, NatSet remove) {
    std::erase_if(add, [&](u64 n) { return in_residue_class(beta, n); });
    std::erase_if(remove, [&](u64 n) { return !in_residue_class(beta, n); });
    return BasicIdempotent(ModifiedCylinder{std::move(beta), std::move(add), std::move(remove)});
}

bool BasicIdempotent::contains(u64 n) const {
    if (is_finite()) return as_finite().set.contains(n);
    const auto& c = as_cylinder();
    if (c.add.contains(n)) return true;
    if (c.remove.contains(n)) return false;
    return in_residue_class(c.beta, n);
}

BasicIdempotent e_beta(const DigitWord& beta) { return BasicIdempotent::cylinder(beta); }

Support support_in_x(const BasicIdempotent& p, u64 bound) {
    Support out;
    if (p.is_finite()) {
        for (u64 n : p.as_finite().set) {
            if (n < bound) out.naturals.push_back(n);
        }
        return out;
    }
    const auto& c = p.as_cylinder();
    const u64 period = c.beta.schedule().n_index(c.beta.length());
    NatSet naturals;
    for (u64 n = c.beta.value(); n < bound; n += period) {
        if (!c.remove.contains(n)) naturals.insert(n);
        if (bound - n <= period) break;
    }
    for (u64 n : c.add) {
        if (n < bound) naturals.insert(n);
    }
    out.naturals.assign(naturals.begin(), naturals.end());
    out.cylinder = c.beta;
    return out;
}

namespace {

const RadixSchedule* schedule_of(const BasicIdempotent& p) {
    return p.is_finite() ? nullptr : &p.as_cylinder().beta.schedule();
}

} // namespace

BasicIdempotent multiply(const BasicIdempotent& p, const BasicIdempotent& q) {
    const RadixSchedule* sp = schedule_of(p);
    const RadixSchedule* sq = schedule_of(q);
    if (sp && sq && !(*sp == *sq)) {
        throw ValidityError("cannot multiply idempotents over different radix schedules");
    }
    if (p.is_finite() || q.is_finite()) {
        const BasicIdempotent& f = p.is_finite() ? p : q;
        const BasicIdempotent& other = p.is_finite() ? q : p;
        NatSet out;
        for (u64 n : f.as_finite().set) {
            if (other.contains(n)) out.insert(n);
        }
        return BasicIdempotent::finite(std::move(out));
    }

    const auto& a = p.as_cylinder();
    const auto& b = q.as_cylinder();
    // Off the finitely many modified coordinates each factor is its residue
    // class, so the product is determined by the classes plus those points.
    NatSet candidates;
    for (const NatSet* s : {&a.add, &a.remove, &b.add, &b.remove}) candidates.insert(s->begin(), s->end());

    const DigitWord* longer = nullptr;
    if (a.beta.is_prefix_of(b.beta)) longer = &b.beta;
    else if (b.beta.is_prefix_of(a.beta)) longer = &a.beta;

    if (!longer) {
        // Digit words that disagree somewhere have disjoint residue classes.
        NatSet out;
        for (u64 n : candidates) {
            if (p.contains(n) && q.contains(n)) out.insert(n);
        }
        return BasicIdempotent::finite(std::move(out));
    }
    NatSet add, remove;
    for (u64 n : candidates) {
        bool value = p.contains(n) && q.contains(n);
        bool in_class = in_residue_class(*longer, n);
        if (value && !in_class) add.insert(n);
        if (!value && in_class) remove.insert(n);
    }
    return BasicIdempotent::cylinder(*longer, std::move(add), std::move(remove));
}

Neighborhood v_k_neighborhood(const CantorPoint& center, std::size_t k) { return {center, k}; }

bool membership(const XPoint& x, const Neighborhood& v) {
    const RadixSchedule& schedule = v.center.schedule();
    if (x.is_nat()) {
        u64 n = x.as_nat();
        if (n < v.level) return false;
        // The first k digits of n are the digits of n mod n_k.
        DigitWord digits = to_digits(n % schedule.n_index(v.level), v.level, schedule);
        for (std::size_t i = 0; i < v.level; ++i) {
            if (digits[i] != v.center.digit(i)) return false;
        }
        return true;
    }
    const CantorPoint& zeta = x.as_cantor();
    for (std::size_t i = 0; i < v.level; ++i) {
        if (zeta.digit(i) != v.center.digit(i)) return false;
    }
    return true;
}

BasicIdempotent neighborhood_idempotent(const Neighborhood& v) {
    DigitWord beta = truncate(v.center, v.level);
    NatSet below;
    for (u64 n = 0; n < v.level; ++n) below.insert(n);
    return BasicIdempotent::cylinder(std::move(beta), {}, std::move(below));
}

std::vector<std::optional<std::size_t>> convergence_indices(const std::vector<u64>& seq,
                                                            const CantorPoint& target,
                                                            std::size_t k_max) {
    std::vector<std::optional<std::size_t>> out;
    out.reserve(k_max + 1);
    for (std::size_t k = 0; k <= k_max; ++k) {
        Neighborhood v = v_k_neighborhood(target, k);
        std::size_t first = seq.size();
        while (first > 0 && membership(XPoint::nat(seq[first - 1]), v)) --first;
        out.push_back(first < seq.size() ? std::optional<std::size_t>(first) : std::nullopt);
    }
    return out;
}

bool converges_to(const std::vector<u64>& seq, const CantorPoint& target, std::size_t k_max) {
    for (const auto& index : convergence_indices(seq, target, k_max)) {
        if (!index) return false;
    }
    return true;
}

nlohmann::json to_json(const BasicIdempotent& p) {
    using nlohmann::json;
    if (p.is_finite()) return json{{"type", "finite"}, {"set", p.as_finite().set}};
    const auto& c = p.as_cylinder();
    json beta = json::array();
    for (u64 d : c.beta.digits()) beta.push_back(d);
    return json{{"type", "cylinder"}, {"beta", beta}, {"add", c.add}, {"remove", c.remove}};
}

BasicIdempotent idempotent_from_json(const nlohmann::json& j, const RadixSchedule& schedule) {
    try {
        const std::string type = j.at("type").get<std::string>();
        if (type == "finite") return BasicIdempotent::finite(j.at("set").get<NatSet>());
        if (type == "cylinder") {
            DigitWord beta(schedule, j.at("beta").get<std::vector<u64>>());
            return BasicIdempotent::cylinder(std::move(beta), j.at("add").get<NatSet>(),
                                             j.at("remove").get<NatSet>());
        }
        throw InputError("unknown idempotent type '" + type + "'");
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed idempotent JSON: ") + e.what());
    } catch (const ValidityError& e) {
        throw InputError(e.what());
    }
}

} // namespace bdt
