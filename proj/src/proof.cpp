#include "mishit/proof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mishit/errors.hpp"
#include "mishit/invariants.hpp"

namespace mishit {

double log_in_base(double x, LogBase base) {
    return base == LogBase::natural ? std::log(x) : std::log2(x);
}

mpz_class ramsey_binomial_bound(int omega, int t) {
    if (omega < 1 || t < 1)
        throw std::invalid_argument("ramsey_binomial_bound: requires omega >= 1, t >= 1");
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(omega + t - 1),
                 static_cast<unsigned long>(t - 1));
    return out;
}

double hw_bound(int d, const mpq_class& tau_star, LogBase base) {
    if (d < 0) throw std::invalid_argument("hw_bound: d must be nonnegative");
    if (tau_star < 1) throw std::invalid_argument("hw_bound: tau* must be >= 1");
    double ts = mpq_get_d(tau_star.get_mpq_t());
    return 2.0 * d * ts * log_in_base(11.0 * ts, base);
}

namespace {

// Exact integer coefficient, rounded once into double; +inf when it exceeds
// the double range (the comparisons downstream treat that as a huge bound).
double mpz_to_double(const mpz_class& z) {
    if (mpz_sizeinbase(z.get_mpz_t(), 2) > 1020)
        return std::numeric_limits<double>::infinity();
    return mpz_get_d(z.get_mpz_t());
}

}  // namespace

double main_bound(int t, int omega, LogBase base) {
    if (t < 2 || omega < 2)
        throw std::invalid_argument("main_bound: requires t >= 2, omega >= 2");
    mpz_class coeff;  // 10 * t^t * omega^(3t-3)
    mpz_ui_pow_ui(coeff.get_mpz_t(), static_cast<unsigned long>(t),
                  static_cast<unsigned long>(t));
    mpz_class wpow;
    mpz_ui_pow_ui(wpow.get_mpz_t(), static_cast<unsigned long>(omega),
                  static_cast<unsigned long>(3 * t - 3));
    coeff *= 10 * wpow;
    return mpz_to_double(coeff) * log_in_base(static_cast<double>(omega), base);
}

bool check_final_arithmetic(int t, int omega, LogBase base) {
    if (t < 2 || omega < 2)
        throw std::invalid_argument("check_final_arithmetic: requires t >= 2, omega >= 2");
    mpz_class wagon = wagon_bound(omega, t);
    mpz_class lhs_coeff = 2 * ramsey_binomial_bound(omega, t) * wagon;
    double lhs = mpz_to_double(lhs_coeff) * log_in_base(mpz_to_double(11 * wagon), base);
    return lhs <= main_bound(t, omega, base);
}

ShatterWitness witness_from_shattered(const Graph& g, const MaxISFamily& fam, uint64_t s) {
    ShatterCheck check = is_shattered(fam, s);
    if (!check.shattered)
        throw std::invalid_argument("witness_from_shattered: set is not shattered");

    ShatterWitness w;
    w.s = s;
    w.realizer = check.realizer;
    w.d = popcount(s);
    if (w.d == 0) return w;

    auto diagnostic = [&](const std::string& what) {
        std::ostringstream os;
        os << "witness construction failed: " << what << "; graph6=" << to_graph6(g)
           << " S=" << format_set(s) << " realizers=[";
        for (size_t i = 0; i < w.realizer.size(); ++i) {
            if (i) os << ",";
            os << w.realizer[i];
        }
        os << "]";
        return WitnessError(os.str());
    };

    // S must be independent: it is the trace of its own realizer.
    std::vector<int> verts = set_to_vertices(s);
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) throw diagnostic("S not independent");

    const size_t full = (size_t{1} << w.d) - 1;
    uint64_t u_mask = 0;
    for (int i = 0; i < w.d; ++i) {
        int vi = verts[i];
        uint64_t member = fam.sets[w.realizer[full & ~(size_t{1} << i)]];
        int ui = -1;
        for (uint64_t c = member & g.adj[vi]; c;) {
            int cand = pop_lowest(c);
            bool valid = !(s & bit(cand));
            for (int j = 0; valid && j < w.d; ++j)
                if (j != i && g.has_edge(cand, verts[j])) valid = false;
            if (valid) {
                ui = cand;
                break;  // ascending scan: smallest valid candidate
            }
        }
        if (ui < 0) throw diagnostic("no u_i for v_i=" + std::to_string(vi));
        if (u_mask & bit(ui)) throw diagnostic("u_i not distinct");
        u_mask |= bit(ui);
        w.u.push_back(ui);
    }
    if (u_mask & s) throw diagnostic("u overlaps S");

    // The pairs {v_i, u_i} form a matching of size d; with t = im(G)+1 the
    // induced graph on {u_1..u_d} must have no independent set of size t.
    int t = induced_matching_number(g).value + 1;
    if (alpha(induced_subgraph(g, u_mask)).value >= t)
        throw diagnostic("G[u] has an independent set of size t");
    return w;
}

namespace {

// Uniform integer in [0, bound) assembled bitwise from the engine; rejection
// keeps it exact and deterministic per seed.
mpz_class uniform_below(std::mt19937_64& rng, const mpz_class& bound) {
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    while (true) {
        mpz_class x = 0;
        size_t got = 0;
        while (got < bits) {
            size_t take = std::min<size_t>(64, bits - got);
            uint64_t word = rng() & (take == 64 ? ~uint64_t{0} : (uint64_t{1} << take) - 1);
            mpz_class chunk(static_cast<unsigned long>(word));
            x = (x << take) | chunk;
            got += take;
        }
        if (x < bound) return x;
    }
}

}  // namespace

SampleResult epsilon_net_sample(const MaxISFamily& fam, const RationalWeights& weights,
                                int d, uint64_t seed, int max_attempts, LogBase base) {
    if (fam.sets.empty()) throw std::invalid_argument("epsilon_net_sample: empty family");
    if (d < 0) throw std::invalid_argument("epsilon_net_sample: d must be nonnegative");
    if (static_cast<int>(weights.weights.size()) != fam.ground_n)
        throw std::invalid_argument("epsilon_net_sample: weight vector size mismatch");
    for (uint64_t set : fam.sets) {
        mpq_class covered = 0;
        for (uint64_t m = set; m;) covered += weights.weights[pop_lowest(m)];
        if (covered < 1)
            throw std::invalid_argument("epsilon_net_sample: weights not primal-feasible");
    }

    SampleResult out;
    double ts = mpq_get_d(weights.total.get_mpq_t());
    double m_real = 2.0 * d * ts * log_in_base(11.0 * ts, base);
    out.draws = std::max<size_t>(1, static_cast<size_t>(std::ceil(m_real)));

    // Integer cumulative thresholds over a common denominator, so each draw
    // lands on vertex v with probability exactly weights[v]/tau*.
    mpz_class denom = 1;
    for (const auto& w : weights.weights)
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), w.get_den_mpz_t());
    std::vector<mpz_class> cumulative;
    cumulative.reserve(weights.weights.size() + 1);
    cumulative.push_back(0);
    for (const auto& w : weights.weights) {
        mpz_class scaled = w.get_num() * (denom / w.get_den());
        cumulative.push_back(cumulative.back() + scaled);
    }
    mpz_class total = cumulative.back();
    if (total <= 0) throw std::invalid_argument("epsilon_net_sample: zero total weight");

    std::mt19937_64 rng(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        uint64_t picked = 0;
        for (size_t i = 0; i < out.draws; ++i) {
            mpz_class x = uniform_below(rng, total);
            // Vertex v owns [cumulative[v], cumulative[v+1]).
            size_t lo = 0, hi = cumulative.size() - 1;
            while (lo + 1 < hi) {
                size_t mid = (lo + hi) / 2;
                if (cumulative[mid] <= x) lo = mid;
                else hi = mid;
            }
            picked |= bit(static_cast<int>(lo));
        }
        int misses = 0;
        for (uint64_t set : fam.sets)
            if (!(set & picked)) ++misses;
        out.attempts = attempt;
        if (misses == 0) {
            out.success = true;
            out.transversal = picked;
            return out;
        }
        out.miss_counts.push_back(misses);
    }
    return out;
}

namespace {

// Pass check for an integer left side against a floating right side: the
// right side is padded one ulp toward passing, and results within 1e-9
// relative of the boundary are flagged rather than silently decided.
LinkResult compare_real_link(long lhs, double rhs) {
    LinkResult r;
    if (!std::isfinite(rhs)) {
        r.status = rhs > 0 ? LinkStatus::pass : LinkStatus::fail;
        return r;
    }
    double padded = std::nextafter(rhs, std::numeric_limits<double>::infinity());
    r.status = static_cast<double>(lhs) <= padded ? LinkStatus::pass : LinkStatus::fail;
    double diff = std::abs(static_cast<double>(lhs) - rhs);
    if (diff <= 1e-9 * std::max(1.0, std::abs(rhs))) r.note = "near-boundary";
    return r;
}

}  // namespace

ChainReport verify_chain(const Graph& g, LogBase base, std::optional<int> t_override,
                         size_t family_cap) {
    g.validate();
    ChainReport rep;
    rep.log_base = base;
    rep.n = g.n;

    VertexSetValue a = alpha(g);
    rep.alpha = a.value;
    rep.omega = omega(g).value;
    rep.im = induced_matching_number(g).value;
    rep.t = rep.im + 1;
    if (t_override) {
        if (*t_override <= rep.im)
            throw std::invalid_argument(
                "verify_chain: t override must exceed the induced matching number");
        rep.t = *t_override;
    }

    MaxISFamily fam = enumerate_max_independent_sets(g, family_cap);
    rep.family_size = fam.size();
    rep.h = hitting_number(fam).size;
    RationalWeights lp = fractional_transversal(fam);
    rep.tau_star = lp.total;
    VcResult vc = vc_dimension(fam);
    rep.vc_d = vc.d;
    rep.shattered = vc.shattered;

    rep.n_over_alpha = mpq_class(g.n, rep.alpha);
    rep.n_over_alpha.canonicalize();
    rep.bound_wagon = wagon_bound(rep.omega, rep.t);
    rep.bound_ramsey = ramsey_binomial_bound(rep.omega, rep.t);
    rep.bound_hw = hw_bound(rep.vc_d, rep.tau_star, base);

    // L1: tau* <= n/alpha, exact.
    rep.links[0].status =
        rep.tau_star <= rep.n_over_alpha ? LinkStatus::pass : LinkStatus::fail;

    // L2, L3 need chi; an exceeded budget skips them rather than guessing.
    try {
        rep.chi = chromatic_number(g).value;
    } catch (const BudgetError&) {
        rep.links[1] = {LinkStatus::skip, "chi-budget-exceeded"};
        rep.links[2] = {LinkStatus::skip, "chi-budget-exceeded"};
    }
    if (rep.chi) {
        rep.links[1].status =
            rep.n_over_alpha <= *rep.chi ? LinkStatus::pass : LinkStatus::fail;
        rep.links[2].status =
            mpz_class(*rep.chi) <= rep.bound_wagon ? LinkStatus::pass : LinkStatus::fail;
    }

    // L4: d < C(omega+t-1, t-1), exact integers.
    rep.links[3].status =
        mpz_class(rep.vc_d) < rep.bound_ramsey ? LinkStatus::pass : LinkStatus::fail;

    // L5: inapplicable at d = 0 (a one-member family's bound degenerates
    // to 0 while h = 1).
    if (rep.vc_d >= 1) rep.links[4] = compare_real_link(rep.h, rep.bound_hw);
    else rep.links[4] = {LinkStatus::skip, "degenerate-d0"};

    // L6: inapplicable at omega = 1 (log omega = 0; edgeless graph).
    if (rep.omega >= 2) {
        rep.bound_main = main_bound(rep.t, rep.omega, base);
        rep.links[5] = compare_real_link(rep.h, *rep.bound_main);
    } else {
        rep.links[5] = {LinkStatus::skip, "degenerate-omega1"};
    }

    // L7: the proof's witness construction on a maximum shattered set.
    try {
        witness_from_shattered(g, fam, vc.shattered);
        rep.links[6].status = LinkStatus::pass;
    } catch (const WitnessError& e) {
        rep.links[6] = {LinkStatus::fail, e.what()};
    }
    return rep;
}

}  // namespace mishit
