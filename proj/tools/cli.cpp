#include "cli.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bdt/compactification.hpp"
#include "bdt/errors.hpp"
#include "bdt/odometer.hpp"
#include "bdt/operator_model.hpp"
#include "bdt/verify.hpp"

namespace bdt::cli {

namespace {

using json = nlohmann::json;

struct Flags {
    std::string schedule;
    u64 seed = kDefaultSeed;
    bool json = false;
    std::size_t dim = 0; // 0: subcommand default
    double eps = 1e-12;
    std::optional<u64> steps;
    std::optional<std::size_t> k;
    std::optional<u64> n;
    std::string start = "zeros";
    // Subcommand-specific extras.
    std::string word;
    std::string point;
    std::string seq;
    std::size_t trials = 200;
    bool partial = false;
    bool dump = false;
};

// Usage problems detected after CLI11 parsing (bad schedule text, missing
// flag combinations) map to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

RadixSchedule schedule_of(const Flags& f) {
    try {
        return RadixSchedule::parse(f.schedule);
    } catch (const InputError& e) {
        throw UsageError(std::string("--schedule: ") + e.what());
    }
}

XPoint start_of(const Flags& f, const RadixSchedule& s) {
    try {
        return parse_point(f.start, s);
    } catch (const InputError& e) {
        throw UsageError(std::string("--start: ") + e.what());
    }
}

CantorPoint cantor_start_of(const Flags& f, const RadixSchedule& s) {
    const XPoint x = start_of(f, s);
    if (!x.is_cantor()) throw UsageError("--start must name a Cantor point here");
    return x.as_cantor();
}

std::size_t require_k(const Flags& f) {
    if (!f.k) throw UsageError("--k is required");
    return *f.k;
}

std::vector<u64> parse_seq(const std::string& text) {
    std::vector<u64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoull(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError("--seq: cannot parse '" + item + "'");
        }
    }
    return out;
}

json digits_json(const DigitWord& w) {
    json a = json::array();
    for (u64 d : w.digits()) a.push_back(d);
    return a;
}

// ---------------------------------------------------------------- subcommands

int cmd_digits(const Flags& f, std::ostream& out) {
    const auto s = schedule_of(f);
    if (!f.word.empty()) {
        DigitWord w = [&] {
            try {
                return parse_digits(f.word, s);
            } catch (const InputError& e) {
                throw UsageError(std::string("--word: ") + e.what());
            }
        }();
        const u64 value = from_digits(w);
        if (f.json) out << json{{"digits", digits_json(w)}, {"value", value}}.dump() << '\n';
        else out << value << '\n';
        return 0;
    }
    const std::size_t k = require_k(f);
    DigitWord w = DigitWord::empty(s);
    if (f.n) {
        w = to_digits(*f.n, k, s);
    } else {
        w = truncate(cantor_start_of(f, s), k);
    }
    if (f.json) out << json{{"digits", digits_json(w)}, {"value", w.value()}}.dump() << '\n';
    else out << w.to_string() << '\n';
    return 0;
}

int cmd_orbit(const Flags& f, std::ostream& out) {
    const auto s = schedule_of(f);
    const XPoint start = start_of(f, s);
    const u64 steps = f.steps.value_or(10);
    const OrbitRecord record = [&] {
        if (!f.partial) return orbit(start, steps);
        OrbitRecord r{start, steps, {start}};
        for (u64 i = 0; i < steps; ++i) {
            const XPoint x = r.points.back();
            r.points.push_back(x.is_nat() ? step_x(x) : XPoint::cantor(odometer_partial(x.as_cantor())));
        }
        return r;
    }();
    if (f.json) {
        json pts = json::array();
        for (const auto& x : record.points) pts.push_back(x.to_string());
        out << json{{"schedule", s.to_string()}, {"start", start.to_string()}, {"steps", steps},
                    {"points", pts}}
                   .dump()
            << '\n';
    } else {
        write_orbit(out, record);
    }
    return 0;
}

int cmd_visits(const Flags& f, std::ostream& out) {
    const auto s = schedule_of(f);
    const std::size_t k = require_k(f);
    const XPoint start = start_of(f, s);
    const u64 nk = s.n_index(k);
    const u64 steps = f.steps.value_or(3 * nk);
    const auto record = orbit(start, steps);
    const auto counts = visit_counts(record, k, s);
    const bool once = visits_each_cylinder_once(record, k, s);
    if (f.json) {
        json rows = json::array();
        for (u64 c = 0; c < nk; ++c) {
            rows.push_back({{"cylinder", digits_json(to_digits(c, k, s))}, {"visits", counts[c]}});
        }
        out << json{{"schedule", s.to_string()}, {"k", k}, {"steps", steps}, {"cylinders", rows},
                    {"each_window_visits_all_once", once}}
                   .dump()
            << '\n';
        return 0;
    }
    out << "cylinder  visits\n";
    for (u64 c = 0; c < nk; ++c) {
        out << std::left << std::setw(8) << to_digits(c, k, s).to_string() << std::right << "  "
            << counts[c] << '\n';
    }
    out << "every window of " << nk << " consecutive points visits each cylinder once: "
        << (once ? "yes" : "no") << '\n';
    return 0;
}

int cmd_neighborhood(const Flags& f, std::ostream& out) {
    const auto s = schedule_of(f);
    const std::size_t k = require_k(f);
    const CantorPoint center = cantor_start_of(f, s);
    const auto v = v_k_neighborhood(center, k);
    const u64 bound = f.n.value_or(k + 2 * s.n_index(k));
    const auto support = support_in_x(neighborhood_idempotent(v), bound);

    std::optional<bool> member;
    if (!f.point.empty()) {
        try {
            member = membership(parse_point(f.point, s), v);
        } catch (const InputError& e) {
            throw UsageError(std::string("--point: ") + e.what());
        }
    }
    if (f.json) {
        json j{{"schedule", s.to_string()}, {"center", center.to_string()}, {"k", k},
               {"cylinder", truncate(center, k).to_string()}, {"naturals_below", bound},
               {"naturals", support.naturals}};
        if (member) j["member"] = *member;
        out << j.dump() << '\n';
    } else {
        out << "V_" << k << "(" << center.to_string() << ")\n";
        out << "  Cantor part: cylinder [" << truncate(center, k).to_string() << "]\n";
        out << "  naturals below " << bound << ":";
        for (u64 n : support.naturals) out << ' ' << n;
        out << '\n';
        if (member) out << "  " << f.point << (*member ? " is a member\n" : " is not a member\n");
    }
    if (f.dump) {
        const std::size_t dim = f.dim ? f.dim : 16;
        const auto idem = (TruncatedOperator::identity(dim) - f_k_diag(k, dim)) *
                          e_beta_diag(truncate(center, k), dim);
        out << "(1 - f_k) e_beta at N = " << dim << ":\n";
        print_grid(out, idem);
        out << "theta of it:\n";
        print_grid(out, theta(idem));
    }
    return 0;
}

int cmd_converge(const Flags& f, std::ostream& out) {
    const auto s = schedule_of(f);
    const std::size_t k_max = require_k(f);
    if (f.seq.empty()) throw UsageError("--seq is required");
    const auto seq = parse_seq(f.seq);
    const CantorPoint target = cantor_start_of(f, s);
    const auto idx = convergence_indices(seq, target, k_max);
    const bool ok = converges_to(seq, target, k_max);
    if (f.json) {
        json levels = json::array();
        for (const auto& i : idx) levels.push_back(i ? json(*i) : json(nullptr));
        out << json{{"schedule", s.to_string()}, {"target", target.to_string()}, {"k_max", k_max},
                    {"tail_start", levels}, {"converges", ok}}
                   .dump()
            << '\n';
        return 0;
    }
    for (std::size_t k = 0; k < idx.size(); ++k) {
        out << "k=" << k << "  ";
        if (idx[k]) out << "inside V_k from index " << *idx[k] << '\n';
        else out << "last entry outside V_k\n";
    }
    out << (ok ? "converges" : "does not converge") << '\n';
    return 0;
}

int cmd_measure(const Flags& f, std::ostream& out) {
    const auto s = schedule_of(f);
    const std::size_t k = require_k(f);
    const XPoint start = start_of(f, s);
    const u64 nk = s.n_index(k);
    const u64 steps = f.steps.value_or(10 * nk);
    if (steps == 0) throw UsageError("--steps must be positive");
    // T steps visit T points: x, f(x), ..., f^{T-1}(x).
    const auto counts = visit_counts(orbit(start, steps - 1), k, s);
    const auto T = static_cast<std::int64_t>(steps);
    const Rational bound(static_cast<std::int64_t>(nk), T);
    bool all_within = true;
    json rows = json::array();
    std::ostringstream table;
    table << "cylinder  measure   visits  frequency  |deviation|\n";
    for (u64 c = 0; c < nk; ++c) {
        const auto word = to_digits(c, k, s);
        const Rational mu = cylinder_measure(word);
        const Rational freq(static_cast<std::int64_t>(counts[c]), T);
        const Rational dev = abs(freq - mu);
        all_within = all_within && dev <= bound;
        rows.push_back({{"cylinder", digits_json(word)},
                        {"measure", std::to_string(mu.numerator()) + "/" + std::to_string(mu.denominator())},
                        {"visits", counts[c]},
                        {"frequency", boost::rational_cast<double>(freq)},
                        {"deviation", boost::rational_cast<double>(dev)}});
        table << std::left << std::setw(8) << word.to_string() << "  " << std::setw(8)
              << (std::to_string(mu.numerator()) + "/" + std::to_string(mu.denominator())) << "  "
              << std::setw(6) << counts[c] << "  " << std::setw(9) << boost::rational_cast<double>(freq)
              << "  " << boost::rational_cast<double>(dev) << std::right << '\n';
    }
    if (f.json) {
        out << json{{"schedule", s.to_string()}, {"k", k}, {"steps", steps},
                    {"bound", boost::rational_cast<double>(bound)}, {"cylinders", rows},
                    {"within_bound", all_within}}
                   .dump()
            << '\n';
    } else {
        out << table.str();
        out << "bound n_k/T = " << nk << "/" << steps << "; all deviations within bound: "
            << (all_within ? "yes" : "no") << '\n';
    }
    return 0;
}

int cmd_verify(const Flags& f, std::ostream& out) {
    VerifyConfig config{schedule_of(f)};
    config.dim = f.dim ? f.dim : 64;
    config.eps = f.eps;
    config.seed = f.seed;
    config.trials = f.trials;
    config.max_level = f.k.value_or(3);
    const auto report = run_verification(config);
    if (f.json) out << report.to_json().dump(2) << '\n';
    else print_table(out, report);
    return report.pass ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mixed-radix odometer on N u K and its weighted-shift operator model", "bdt"};
    app.require_subcommand(1);
    Flags f;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--schedule", f.schedule, "Radices q0,q1,...[*]; trailing * cycles")->required();
        sub->add_flag("--json", f.json, "Emit JSON");
    };
    auto* digits = app.add_subcommand("digits", "Mixed-radix digits of --n (or of --start) at level --k; --word decodes");
    common(digits);
    digits->add_option("--n", f.n, "Natural number to encode");
    digits->add_option("--k", f.k, "Number of digits");
    digits->add_option("--start", f.start, "Cantor point to truncate");
    digits->add_option("--word", f.word, "Digit word d0,d1,... to decode");

    auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of --start under the extended odometer");
    common(orbit_cmd);
    orbit_cmd->add_option("--start", f.start, "zeros | max | nat:<n> | d0,d1,...|Z or |M");
    orbit_cmd->add_option("--steps", f.steps, "Number of steps (default 10)");
    orbit_cmd->add_flag("--partial", f.partial, "Use the partial odometer (undefined at max)");

    auto* visits = app.add_subcommand("visits", "Level-k cylinder visit counts along an orbit");
    common(visits);
    visits->add_option("--start", f.start, "Start point");
    visits->add_option("--k", f.k, "Cylinder level");
    visits->add_option("--steps", f.steps, "Number of steps (default 3 n_k)");

    auto* nbhd = app.add_subcommand("neighborhood", "The basic neighborhood V_k of a Cantor point");
    common(nbhd);
    nbhd->add_option("--start", f.start, "Center (Cantor point)");
    nbhd->add_option("--k", f.k, "Level");
    nbhd->add_option("--n", f.n, "Enumerate naturals below this bound");
    nbhd->add_option("--point", f.point, "Point to test for membership");
    nbhd->add_flag("--dump", f.dump, "Print (1 - f_k) e_beta and its theta image as grids");
    nbhd->add_option("--dim", f.dim, "Matrix size for --dump (default 16)");

    auto* conv = app.add_subcommand("converge", "Does a sequence of naturals converge to a Cantor point");
    common(conv);
    conv->add_option("--seq", f.seq, "Comma-separated naturals");
    conv->add_option("--start", f.start, "Target Cantor point");
    conv->add_option("--k", f.k, "Resolution k_max");

    auto* verify = app.add_subcommand("verify", "Run the full invariant suite");
    common(verify);
    verify->add_option("--dim", f.dim, "Truncation size N (default 64)");
    verify->add_option("--eps", f.eps, "Tolerance for numerical checks (default 1e-12)");
    verify->add_option("--seed", f.seed, "Seed for randomized checks (default 1729)");
    verify->add_option("--k", f.k, "Maximum level for exhaustive checks (default 3)");
    verify->add_option("--trials", f.trials, "Random trials per check (default 200)");

    auto* measure = app.add_subcommand("measure", "Cylinder measures vs. empirical orbit frequencies");
    common(measure);
    measure->add_option("--start", f.start, "Start point");
    measure->add_option("--k", f.k, "Cylinder level");
    measure->add_option("--steps", f.steps, "Orbit length T (default 10 n_k)");

    std::vector<std::string> argv_store{"bdt"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*digits) return cmd_digits(f, out);
        if (*orbit_cmd) return cmd_orbit(f, out);
        if (*visits) return cmd_visits(f, out);
        if (*nbhd) return cmd_neighborhood(f, out);
        if (*conv) return cmd_converge(f, out);
        if (*verify) return cmd_verify(f, out);
        if (*measure) return cmd_measure(f, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace bdt::cli
