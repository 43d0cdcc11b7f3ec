#include "bsac/witness.hpp"

#include "bsac/errors.hpp"

namespace bsac {

namespace {

void append_power(Word& w, std::uint32_t gen, std::uint32_t gen_inv, std::int64_t k) {
    const std::uint32_t letter = k < 0 ? gen_inv : gen;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) w.push_back(letter);
}

}  // namespace

WitnessFamily build_witnesses(std::int64_t k, std::int64_t j, const GeneratingSet& gens) {
    if (j < 1 || k <= j) throw PreconditionError("build_witnesses requires k > j >= 1");
    const BaseP& p = gens.p();
    const GroupElement a{PFraction(1), 0};

    WitnessFamily W;
    W.k = k;
    W.j = j;
    W.g0 = gens.f_star_gen();
    const GroupElement& g0 = gens[W.g0];
    const std::int64_t ck = gens.c_max() * k;

    W.T = conjugate(a, power(g0, k, p), p);
    W.S = conjugate(a, power(g0, -k, p), p);
    if (W.T != GroupElement{PFraction(p.pow(static_cast<std::uint64_t>(ck))), 0} ||
        W.S != GroupElement{scale_p_pow(PFraction(1), -ck, p), 0}) {
        throw std::logic_error("conjugates of (1,0) disagree with (p^{ck},0) / (p^{-ck},0)");
    }
    W.ST = multiply(W.S, W.T, p);
    if (W.ST != multiply(W.T, W.S, p)) throw std::logic_error("S_k and T_k do not commute");
    W.alpha = multiply(W.ST, power(g0, -j, p), p);
    W.beta = multiply(W.ST, power(g0, j, p), p);
    W.radius = 4 * k + 2 * gens.ell() - j;

    const Ball a_ball = ball(gens.ell(), gens);
    W.a_word = a_ball.geodesic_word(a_ball.index_of(a));

    const std::uint32_t g0_inv = gens.inverse_index(W.g0);
    auto build = [&](std::int64_t sign) {
        Word w;
        append_power(w, W.g0, g0_inv, sign * k);
        w.insert(w.end(), W.a_word.begin(), W.a_word.end());
        append_power(w, W.g0, g0_inv, -2 * sign * k);
        w.insert(w.end(), W.a_word.begin(), W.a_word.end());
        append_power(w, W.g0, g0_inv, sign * (k - j));
        return w;
    };
    W.alpha_word = build(1);
    W.beta_word = build(-1);
    if (word_product(W.alpha_word, gens.gens(), p) != W.alpha ||
        word_product(W.beta_word, gens.gens(), p) != W.beta) {
        throw std::logic_error("witness words do not evaluate to alpha / beta");
    }
    return W;
}

WitnessReport witness_audit(const WitnessFamily& W, const GeneratingSet& gens, const Constants& K,
                            const WitnessAuditOptions& options) {
    const BaseP& p = gens.p();
    WitnessReport report;
    report.family = W;

    // d(alpha, beta): each generator shifts the t-exponent by at most c, and
    // alpha^-1 beta = g0^{2j} has a word of length 2j.
    const std::int64_t dc = W.beta.c - W.alpha.c;
    report.distance_lower = (dc + gens.c_max() - 1) / gens.c_max();
    if (multiply(inverse(W.alpha, p), W.beta, p) != power(gens[W.g0], 2 * W.j, p)) {
        throw std::logic_error("alpha^-1 beta differs from g0^{2j}");
    }
    report.distance_upper = 2 * W.j;

    Ball B(gens, BallOptions{options.memory_budget_bytes});
    try {
        B.extend_to(W.radius);
    } catch (const BudgetExceeded& e) {
        report.completed_radius = e.completed_radius();
        report.note = e.what();
        return report;
    }
    report.completed_radius = B.radius();

    report.alpha_length = B.length_of(W.alpha);
    report.beta_length = B.length_of(W.beta);
    const WordMetric metric(B);
    if (options.confirm_distance_by_search) {
        report.distance_searched = metric.distance(W.alpha, W.beta, report.distance_upper).length;
    }
    if (!report.alpha_length || !report.beta_length) {
        report.note = "alpha or beta outside B(" + std::to_string(W.radius) + ")";
        return report;
    }

    const BallGraph graph(B);
    InsideBallSearch search(graph);
    const auto path = search.shortest_path(B.index_of(W.alpha), B.index_of(W.beta), W.radius);
    report.inside_distance = static_cast<std::int64_t>(path.size()) - 1;
    for (std::uint32_t v : path) report.inside_path.push_back(B.element(v));

    for (std::size_t pos = 0; pos < path.size(); ++pos) {
        const GroupElement& v = B.element(path[pos]);
        if (2 * (v.c < 0 ? -v.c : v.c) > gens.c_max()) continue;
        const GroupElement shift{PFraction(0), -v.c};
        Word projection;
        if (auto idx = B.index_of(shift); idx != Ball::npos) {
            projection = B.geodesic_word(idx);
        } else {
            const Ball eps_ball = ball(gens.eps(), gens);
            projection = eps_ball.geodesic_word(eps_ball.index_of(shift));
        }
        GroupElement P = multiply(v, shift, p);
        // d(P, ST) <= eps + L + j through P', alpha and g0^j, so this search
        // radius always finds it.
        const std::int64_t max_r = gens.eps() + *report.inside_distance + W.j;
        WordLength d = metric.distance(P, W.ST, max_r);
        DistanceLowerBound lb = distance_lower_bound(P, W.ST, K);
        report.midpoint = Midpoint{v, pos, v.c, std::move(projection), std::move(P), std::move(d), std::move(lb)};
        break;
    }
    report.complete = report.midpoint.has_value();
    return report;
}

GrowthCertificate certify_growth(std::int64_t k, std::int64_t j, const Constants& K) {
    const BaseP& p = K.p;
    const std::int64_t ck = K.c * k;
    const PFraction T(p.pow(static_cast<std::uint64_t>(ck)));
    const PFraction S = scale_p_pow(PFraction(1), -ck, p);
    const GroupElement ST{add(S, T, p), 0};
    mpz_class threshold = p.abs_pow(static_cast<std::uint64_t>(ck - 1));

    mpq_class abs_gap = abs_value(ST.f, p) - threshold;
    mpz_class denom_gap = denom(ST.f, p) - threshold;
    GrowthCertificate cert{.k = k,
                           .j = j,
                           .ST = ST,
                           .threshold = threshold,
                           .midpoint_bound = midpoint_bound_holds(K, j, k),
                           .abs_gap = abs_gap,
                           .denom_gap = denom_gap,
                           .abs_branch = abs_gap >= threshold,
                           .denom_branch = denom_gap >= threshold,
                           .bound = DistanceLowerBound(mpq_class(threshold), K)};
    return cert;
}

}  // namespace bsac
