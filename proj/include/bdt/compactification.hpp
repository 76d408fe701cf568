#pragma once

// The topology of X = N u K: basic idempotents of the diagonal algebra,
// their supports, the neighborhoods V_k(gamma), and convergence of
// sequences of naturals to Cantor points.

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "bdt/mixedradix.hpp"

namespace bdt {

using NatSet = std::set<u64>;

// An idempotent with finitely many non-zero coordinates.
struct FiniteSet {
    NatSet set;
    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
};

// e_beta modified on finitely many coordinates. Canonical: `add` is disjoint
// from the residue class of beta and `remove` is contained in it.
struct ModifiedCylinder {
    DigitWord beta;
    NatSet add;
    NatSet remove;
    friend bool operator==(const ModifiedCylinder&, const ModifiedCylinder&) = default;
};

class BasicIdempotent {
public:
    static BasicIdempotent finite(NatSet set);
    // Canonicalizes `add` and `remove` against the residue class of beta.
    static BasicIdempotent cylinder(DigitWord beta, NatSet add = {}, NatSet remove = {});

    bool is_finite() const { return std::holds_alternative<FiniteSet>(form_); }
    const FiniteSet& as_finite() const { return std::get<FiniteSet>(form_); }
    const ModifiedCylinder& as_cylinder() const { return std::get<ModifiedCylinder>(form_); }

    // Value of the sequence at n (0 or 1).
    bool contains(u64 n) const;

    friend bool operator==(const BasicIdempotent&, const BasicIdempotent&) = default;

private:
    explicit BasicIdempotent(FiniteSet f) : form_(std::move(f)) {}
    explicit BasicIdempotent(ModifiedCylinder c) : form_(std::move(c)) {}

    std::variant<FiniteSet, ModifiedCylinder> form_;
};

// n lies in the residue class value(beta) mod n_{|beta|}.
bool in_residue_class(const DigitWord& beta, u64 n);

// e_beta: the indicator of the residue class of beta.
BasicIdempotent e_beta(const DigitWord& beta);

// Support in X. The N part is enumerated below `bound`; the K part is the
// cylinder of `cylinder` (none for finite idempotents).
struct Support {
    std::vector<u64> naturals;
    std::optional<DigitWord> cylinder;
};

Support support_in_x(const BasicIdempotent& p, u64 bound);

// Pointwise product. Both operands must share a radix schedule.
BasicIdempotent multiply(const BasicIdempotent& p, const BasicIdempotent& q);

// V_k(gamma).
struct Neighborhood {
    CantorPoint center;
    std::size_t level;
};

Neighborhood v_k_neighborhood(const CantorPoint& center, std::size_t k);

// Membership per the neighborhood basis of the compactification: a Cantor
// point must agree with the center on k digits; a natural n additionally
// needs n >= k.
bool membership(const XPoint& x, const Neighborhood& v);

// The idempotent (1 - f_k) e_{gamma|k}, whose support is V_k(gamma).
BasicIdempotent neighborhood_idempotent(const Neighborhood& v);

// For each k <= k_max: the first index i such that seq[i..] all lie in
// V_k(target), or nullopt when the last entry does not.
std::vector<std::optional<std::size_t>> convergence_indices(const std::vector<u64>& seq,
                                                            const CantorPoint& target,
                                                            std::size_t k_max);

// True iff for every k <= k_max some nonempty tail of seq lies in V_k(target).
bool converges_to(const std::vector<u64>& seq, const CantorPoint& target, std::size_t k_max);

nlohmann::json to_json(const BasicIdempotent& p);
BasicIdempotent idempotent_from_json(const nlohmann::json& j, const RadixSchedule& schedule);

} // namespace bdt
