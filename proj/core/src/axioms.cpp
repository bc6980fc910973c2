#include "supcone/axioms.hpp"

#include <algorithm>
#include <functional>

#include "supcone/text.hpp"

namespace supcone {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::uint64_t trial_seed(std::uint64_t suite_seed, const std::string& check, long trial) {
    return suite_seed ^ fnv1a64(check) ^
           (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1));
}

Rational gen_rational(const GenConfig& cfg, SplitMix64& rng) {
    long num = rng.int_in(-cfg.value_range, cfg.value_range);
    long den = rng.int_in(1, cfg.value_range);
    return Rational(num, den);
}

Poly gen_ramp_poly(const GenConfig& cfg, SplitMix64& rng, bool upward) {
    int deg = static_cast<int>(rng.int_in(1, 2));
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i) c[static_cast<std::size_t>(i)] = gen_rational(cfg, rng);
    long lead = rng.int_in(1, cfg.value_range);
    if (!upward && rng.chance(Rational(1, 2))) lead = -lead;
    c[static_cast<std::size_t>(deg)] = Rational(lead);
    return Poly(std::move(c));
}

namespace {

ExtReal gen_leaf_value(const GenConfig& cfg, SplitMix64& rng) {
    if (rng.chance(cfg.inf_probability)) return ExtReal::pos_inf();
    return ExtReal(gen_rational(cfg, rng));
}

TreeFn gen_leaf(const GenConfig& cfg, SplitMix64& rng) {
    if (rng.chance(cfg.ramp_probability)) {
        bool dir = rng.below(2) == 1;
        bool upward = cfg.model == ModelX::Bounded || rng.chance(Rational(1, 2));
        Poly p = gen_ramp_poly(cfg, rng, upward);
        if (rng.chance(Rational(1, 3))) {
            std::vector<ExtReal> prefix(static_cast<std::size_t>(rng.int_in(1, 3)));
            for (auto& v : prefix) v = gen_leaf_value(cfg, rng);
            return TreeFn::ramp_sequence(dir, prefix, std::move(p));
        }
        return TreeFn::ramp(dir, std::move(p));
    }
    return TreeFn::constant(gen_leaf_value(cfg, rng));
}

TreeFn gen_tree(const GenConfig& cfg, SplitMix64& rng, int depth) {
    if (depth < cfg.max_depth && rng.chance(Rational(1, 2)))
        return TreeFn::split(gen_tree(cfg, rng, depth + 1), gen_tree(cfg, rng, depth + 1));
    return gen_leaf(cfg, rng);
}

}  // namespace

TreeFn gen_member_fn(const GenConfig& cfg, SplitMix64& rng) {
    return gen_tree(cfg, rng, 0);
}

TreeFn gen_positive_fn(const GenConfig& cfg, SplitMix64& rng) {
    return fn_join(gen_member_fn(cfg, rng), TreeFn());
}

TreeFn gen_ground_fn(const GenConfig& cfg, SplitMix64& rng) {
    GenConfig ground = cfg;
    ground.inf_probability = Rational(0);
    if (cfg.model == ModelX::Bounded) ground.ramp_probability = Rational(0);
    return gen_member_fn(ground, rng);
}

FlatFn gen_flatfn(const GenConfig& cfg, SplitMix64& rng) {
    FlatFn f;
    f.depth = static_cast<std::size_t>(rng.int_in(0, std::min(cfg.max_depth, 4)));
    f.values.assign(std::size_t{1} << f.depth, ExtReal(0));
    for (auto& v : f.values) v = gen_leaf_value(cfg, rng);
    return f;
}

SupElement gen_element(const GenConfig& cfg) {
    SplitMix64 rng(cfg.seed);
    return gen_element(cfg, rng);
}

SupElement gen_element(const GenConfig& cfg, SplitMix64& rng) {
    for (int attempt = 0; attempt < 10; ++attempt) {
        TreeFn t = gen_member_fn(cfg, rng);
        MemberCheck m = member(t, cfg.model);
        if (m.witness) return SupElement(std::move(t), std::move(*m.witness), cfg.model);
    }
    return SupElement(TreeFn(), TreeFn(), cfg.model);
}

namespace {

// Every canonical eventually-constant address with prefix length <= depth;
// separates tree functions and covers all resolving cells of that depth.
const std::vector<BranchPoint>& sample_points(std::size_t depth) {
    static const std::vector<BranchPoint> points = [] {
        std::vector<BranchPoint> out;
        std::vector<std::string> words{""};
        for (std::size_t l = 1; l <= 10; ++l) {
            std::vector<std::string> next;
            for (const auto& w : words)
                if (w.size() == l - 1) {
                    next.push_back(w + "0");
                    next.push_back(w + "1");
                }
            words.insert(words.end(), next.begin(), next.end());
        }
        for (const auto& w : words)
            for (char tail : {'0', '1'}) {
                if (!w.empty() && w.back() == tail) continue;
                out.emplace_back(w, tail);
            }
        return out;
    }();
    (void)depth;
    return points;
}

TreeFn suite_meet(FaultInjection fault, const TreeFn& a, const TreeFn& b) {
    TreeFn m = fn_meet(a, b);
    if (fault == FaultInjection::CorruptMeet)
        m = fn_add(m, TreeFn::constant(ExtReal(1)));
    return m;
}

std::string show(const TreeFn& t) { return print_fn(t); }

using CheckFn = std::function<std::optional<std::string>(const GenConfig&, SplitMix64&,
                                                         FaultInjection)>;

std::optional<std::string> check_order(const GenConfig& cfg, SplitMix64& rng,
                                       FaultInjection) {
    SupElement a = gen_element(cfg, rng);
    SupElement c = gen_element(cfg, rng);
    SupElement b = cone_add(a, SupElement::adopt(gen_positive_fn(cfg, rng), cfg.model));
    Rational lambda = boost::multiprecision::abs(gen_rational(cfg, rng));

    TreeFn ac = fn_add(a.fn(), c.fn());
    TreeFn bc = fn_add(b.fn(), c.fn());
    TreeFn la = fn_scalar(lambda, a.fn());
    TreeFn lb = fn_scalar(lambda, b.fn());
    if (auto bad = leq_violation(ac, bc))
        return "a+c > b+c at " + point_str(*bad) + " for a=" + show(a.fn()) +
               " b=" + show(b.fn()) + " c=" + show(c.fn());
    if (auto bad = leq_violation(la, lb))
        return "la > lb at " + point_str(*bad) + " lambda=" + rational_str(lambda) +
               " a=" + show(a.fn()) + " b=" + show(b.fn());
    for (const BranchPoint& p : sample_points(10)) {
        if (eval_at(ac, p) > eval_at(bc, p))
            return "pointwise a+c > b+c at " + p.str() + " a=" + show(a.fn()) +
                   " b=" + show(b.fn()) + " c=" + show(c.fn());
        if (eval_at(la, p) > eval_at(lb, p))
            return "pointwise la > lb at " + p.str();
    }
    return std::nullopt;
}

std::optional<std::string> check_lattice(const GenConfig& cfg, SplitMix64& rng,
                                         FaultInjection fault) {
    SupElement a = gen_element(cfg, rng);
    SupElement b = gen_element(cfg, rng);
    TreeFn m = suite_meet(fault, a.fn(), b.fn());
    TreeFn j = fn_join(a.fn(), b.fn());
    if (!fn_le(m, a.fn()) || !fn_le(m, b.fn()))
        return "meet is not a lower bound: a=" + show(a.fn()) + " b=" + show(b.fn());
    if (!fn_le(a.fn(), j) || !fn_le(b.fn(), j))
        return "join is not an upper bound: a=" + show(a.fn()) + " b=" + show(b.fn());
    if (!(suite_meet(fault, a.fn(), j) == a.fn()))
        return "absorption a /\\ (a \\/ b) != a: a=" + show(a.fn()) + " b=" + show(b.fn());
    if (!(fn_join(a.fn(), m) == a.fn()))
        return "absorption a \\/ (a /\\ b) != a: a=" + show(a.fn()) + " b=" + show(b.fn());
    if (!(suite_meet(fault, a.fn(), a.fn()) == a.fn()))
        return "meet is not idempotent: a=" + show(a.fn());
    if (!(m == suite_meet(fault, b.fn(), a.fn())))
        return "meet is not commutative: a=" + show(a.fn()) + " b=" + show(b.fn());
    return std::nullopt;
}

std::optional<std::string> check_greatest(const GenConfig& cfg, SplitMix64& rng,
                                          FaultInjection) {
    SupElement a = gen_element(cfg, rng);
    TreeFn top = TreeFn::constant(ExtReal::pos_inf());
    if (!fn_le(a.fn(), top)) return "element above the top: " + show(a.fn());
    if (!(fn_join(a.fn(), top) == top)) return "join with top is not top";
    if (!member(top, cfg.model).witness) return "top is not a cone member";
    return std::nullopt;
}

std::optional<std::string> check_ideal(const GenConfig& cfg, SplitMix64& rng,
                                       FaultInjection) {
    SupElement a = gen_element(cfg, rng);
    TreeFn h = gen_ground_fn(cfg, rng);
    TreeFn v = fn_meet(a.fn(), h);  // a cone member below h
    if (!member(v, cfg.model).witness)
        return "meet with a ground element left the cone: a=" + show(a.fn()) +
               " h=" + show(h);
    if (!in_model(v, cfg.model))
        return "cone member below X is not in X: v=" + show(v) + " h=" + show(h);
    return std::nullopt;
}

std::optional<std::string> check_oc_finite(const GenConfig& cfg, SplitMix64& rng,
                                           FaultInjection) {
    long n = rng.int_in(2, 5);
    std::vector<SupElement> family;
    for (long i = 0; i < n; ++i) family.push_back(gen_element(cfg, rng));
    SupElement s = cone_sup(family);
    for (const auto& e : family)
        if (auto bad = leq_violation(e.fn(), s.fn()))
            return "sup misses a member at " + point_str(*bad);
    SupElement above = cone_add(s, SupElement::adopt(gen_positive_fn(cfg, rng), cfg.model));
    if (!fn_le(s.fn(), above.fn())) return "sup is above a larger upper bound";

    SupElement i = cone_inf(family);
    for (const auto& e : family)
        if (auto bad = leq_violation(i.fn(), e.fn()))
            return "inf exceeds a member at " + point_str(*bad);
    if (!in_model(i.witness(), cfg.model)) return "inf witness left X";
    return std::nullopt;
}

std::optional<std::string> check_o_dense(const GenConfig& cfg, SplitMix64& rng,
                                         FaultInjection) {
    SupElement u = gen_element(cfg, rng);
    long height = 6;
    std::size_t full_depth = fn_meet(TreeFn::constant(ExtReal(height)), u.fn()).depth();
    std::vector<TreeFn> family = order_dense_witness(u, full_depth, height);
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!in_model(family[i], cfg.model)) return "truncation left X: " + show(family[i]);
        if (auto bad = leq_violation(family[i], u.fn()))
            return "truncation exceeds u at " + point_str(*bad);
        if (i && !fn_le(family[i - 1], family[i])) return "family is not increasing";
    }
    if (!in_model(u.fn(), cfg.model)) {
        // at full depth the top of the chain is exactly the height truncation
        if (!(family.back() == fn_meet(TreeFn::constant(ExtReal(height)), u.fn())))
            return "flattened truncation is not exact at full depth: u=" + show(u.fn());
    }
    return std::nullopt;
}

std::optional<std::string> check_dist(const GenConfig& cfg, SplitMix64& rng,
                                      FaultInjection fault) {
    SupElement u = gen_element(cfg, rng);
    SupElement v = gen_element(cfg, rng);
    TreeFn f = gen_ground_fn(cfg, rng);
    TreeFn lhs = fn_add(u.fn(), suite_meet(fault, f, v.fn()));
    TreeFn rhs = fn_meet(fn_add(u.fn(), f), fn_add(u.fn(), v.fn()));
    if (!(lhs == rhs))
        return "u + (f /\\ v) != (u+f) /\\ (u+v): u=" + show(u.fn()) + " f=" + show(f) +
               " v=" + show(v.fn());
    return std::nullopt;
}

std::optional<std::string> check_sup_sup(const GenConfig& cfg, SplitMix64& rng,
                                         FaultInjection) {
    long n = rng.int_in(2, 4);
    std::vector<TreeFn> a_family;
    for (long i = 0; i < n; ++i) a_family.push_back(gen_element(cfg, rng).fn());
    TreeFn s = fn_sup(a_family);
    // A second family with the same supremum.
    std::vector<TreeFn> b_family{s};
    long extra = rng.int_in(0, 2);
    for (long i = 0; i < extra; ++i)
        b_family.push_back(fn_meet(s, gen_element(cfg, rng).fn()));
    TreeFn f = gen_ground_fn(cfg, rng);

    auto cap = [&f](const std::vector<TreeFn>& fam) {
        std::vector<TreeFn> out;
        out.reserve(fam.size());
        for (const auto& t : fam) out.push_back(fn_meet(t, f));
        return fn_sup(out);
    };
    if (!(cap(a_family) == cap(b_family)))
        return "sup(A /\\ f) != sup(B /\\ f) with sup A = sup B = " + show(s) +
               " f=" + show(f);
    return std::nullopt;
}

struct CheckEntry {
    const char* name;
    CheckFn fn;
};

const std::vector<CheckEntry>& registry() {
    static const std::vector<CheckEntry> checks{
        {"order", check_order},         {"lattice", check_lattice},
        {"greatest", check_greatest},   {"ideal", check_ideal},
        {"oc-finite", check_oc_finite}, {"o-dense", check_o_dense},
        {"dist", check_dist},           {"sup-sup", check_sup_sup},
    };
    return checks;
}

}  // namespace

std::vector<std::string> suite_check_names() {
    std::vector<std::string> names;
    for (const auto& c : registry()) names.emplace_back(c.name);
    return names;
}

std::string Failure::replay_command(const GenConfig& cfg) const {
    return "supcone axioms --model " + model_name(cfg.model) + " --seed " +
           std::to_string(cfg.seed) + " --trials 1 --check " + check + " --trial " +
           std::to_string(trial);
}

bool SuiteReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.failures.empty()) return false;
    return true;
}

std::string SuiteReport::str() const {
    std::string out;
    out += "model: " + model_name(config.model) + "\n";
    out += "seed: " + std::to_string(config.seed) + "\n";
    for (const auto& c : checks) {
        out += "check: " + c.name + "\n";
        out += "  trials: " + std::to_string(c.trials) + "\n";
        out += "  failures: " + std::to_string(c.failures.size()) + "\n";
        for (const auto& f : c.failures) {
            out += "  counterexample(trial " + std::to_string(f.trial) + "): " +
                   f.message + "\n";
            out += "  replay: " + f.replay_command(config) + "\n";
        }
    }
    out += all_passed() ? "result: PASS\n" : "result: FAIL\n";
    return out;
}

SuiteReport run_suite(const GenConfig& cfg, long trials, FaultInjection fault,
                      const std::string& only_check, std::optional<long> only_trial) {
    SuiteReport report;
    report.config = cfg;
    for (const auto& entry : registry()) {
        if (!only_check.empty() && only_check != entry.name) continue;
        CheckReport cr;
        cr.name = entry.name;
        for (long t = 0; t < trials; ++t) {
            long trial = only_trial ? *only_trial : t;
            SplitMix64 rng(trial_seed(cfg.seed, entry.name, trial));
            ++cr.trials;
            if (auto message = entry.fn(cfg, rng, fault))
                cr.failures.push_back(Failure{entry.name, cfg.seed, trial, *message});
        }
        report.checks.push_back(std::move(cr));
    }
    return report;
}

}  // namespace supcone
