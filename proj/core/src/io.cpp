#include "bsac/io.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace bsac::io {

using nlohmann::json;

namespace {

std::string fixed(double x) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << x;
    return s.str();
}

std::int64_t parse_int(std::string_view s, const char* what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument(std::string("malformed ") + what + " '" + std::string(s) + "'");
    }
    return v;
}

mpz_class parse_big(std::string_view s) {
    mpz_class z;
    std::string str(s);
    if (!str.empty() && str.front() == '+') str.erase(0, 1);
    if (str.empty() || z.set_str(str, 10) != 0) {
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    }
    return z;
}

std::string opt(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

std::string rational(const mpq_class& q) { return q.get_str(); }

json to_json(const PFraction& f) { return {{"num", f.num().get_str()}, {"exp", f.exp()}}; }

json to_json(const GroupElement& g) { return {{"f", to_json(g.f)}, {"c", g.c}}; }

json to_triple(const GroupElement& g) { return {{"num", g.f.num().get_str()}, {"exp", g.f.exp()}, {"c", g.c}}; }

PFraction fraction_from_json(const json& j, const BaseP& p) {
    const json& num = j.at("num");
    mpz_class n = num.is_string() ? parse_big(num.get<std::string>()) : mpz_class(num.get<long>());
    const auto e = j.value("exp", std::int64_t{0});
    if (e < 0) throw std::invalid_argument("exp must be nonnegative");
    return normalize(std::move(n), static_cast<std::uint64_t>(e), p);
}

GroupElement element_from_json(const json& j, const BaseP& p) {
    if (j.contains("f")) return {fraction_from_json(j.at("f"), p), j.at("c").get<std::int64_t>()};
    return {fraction_from_json(j, p), j.at("c").get<std::int64_t>()};
}

GroupElement parse_element_flag(std::string_view text, const BaseP& p) {
    const auto colon = text.rfind(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("element '" + std::string(text) + "' must have the form num/exp:c");
    }
    const std::string_view frac = text.substr(0, colon);
    const std::int64_t c = parse_int(text.substr(colon + 1), "t-exponent");
    const auto slash = frac.find('/');
    std::int64_t e = 0;
    std::string_view num = frac;
    if (slash != std::string_view::npos) {
        num = frac.substr(0, slash);
        e = parse_int(frac.substr(slash + 1), "exponent");
        if (e < 0) throw std::invalid_argument("exponent must be nonnegative");
    }
    return {normalize(parse_big(num), static_cast<std::uint64_t>(e), p), c};
}

json to_json(const Word& w) { return json(std::vector<std::uint32_t>(w.begin(), w.end())); }

json to_json(const WordLength& len) {
    json j{{"status", len.found() ? "found" : "not_found"}, {"max_r", len.max_r}};
    if (len.found()) j["length"] = *len.length;
    return j;
}

json to_json(const DistanceLowerBound& lb) {
    return {{"delta", rational(lb.delta())}, {"ceil", lb.ceil()}, {"approx", fixed(lb.approx())}};
}

json to_json(const Constants& K) {
    return {{"p", K.p.value()},
            {"c", K.c},
            {"f_star_abs", rational(K.f_star_abs)},
            {"f_dstar", K.f_dstar.get_str()},
            {"ell", K.ell},
            {"eps", K.eps},
            {"kappa_argmax", K.kappa_argmax},
            {"kappa_pow4", rational(K.kappa_pow4)},
            {"kappa_upper", rational(K.kappa_upper)},
            {"kappa_exact", K.kappa_exact},
            {"geometric", rational(K.geometric)},
            {"M_prime", rational(K.m_prime)},
            {"M", rational(K.M)},
            {"M_approx", fixed(K.M.get_d())},
            {"j", choose_j(K)}};
}

json to_json(const GeneratingSet& gens) {
    json list = json::array();
    for (const auto& g : gens.gens()) list.push_back(to_triple(g));
    return {{"p", gens.p().value()},
            {"generators", list},
            {"supplied", gens.supplied_count()},
            {"added_by_closure", gens.size() - gens.supplied_count()},
            {"f_star_gen", gens.f_star_gen()}};
}

json to_json(const SizeBoundReport& r) {
    json v = json::array();
    for (const auto& x : r.violations) v.push_back({{"g", to_json(x.g)}, {"clause", x.clause}});
    return {{"n", r.n},
            {"checked", r.checked},
            {"max_dichotomy_ratio4", rational(r.max_dichotomy_ratio4)},
            {"dichotomy_argmax", to_json(r.dichotomy_argmax)},
            {"max_joint_ratio2", rational(r.max_joint_ratio2)},
            {"joint_argmax", to_json(r.joint_argmax)},
            {"violations", v},
            {"passed", r.passed()}};
}

json to_json(const LipschitzReport& r) {
    json v = json::array();
    for (const auto& x : r.violations) {
        v.push_back({{"g", to_json(x.g)}, {"h", to_json(x.h)}, {"clause", x.clause}});
    }
    return {{"r", r.r},
            {"n", r.n},
            {"pairs", r.pairs_checked},
            {"max_ratio2", rational(r.max_ratio2)},
            {"argmax_g", to_json(r.argmax_g)},
            {"argmax_h", to_json(r.argmax_h)},
            {"violations", v},
            {"passed", r.passed()}};
}

json to_json(const DetourRow& row) {
    json j{{"n", row.n}, {"k", row.k}, {"N", row.N}, {"pairs", row.pairs}, {"max_pair_distance", row.max_pair_distance}};
    j["witness_g"] = row.witness_g ? to_json(*row.witness_g) : json(nullptr);
    j["witness_h"] = row.witness_h ? to_json(*row.witness_h) : json(nullptr);
    return j;
}

json to_json(const WitnessReport& r, const GeneratingSet& gens) {
    const auto& W = r.family;
    json fam{{"k", W.k},
             {"j", W.j},
             {"g0", W.g0},
             {"T", to_json(W.T)},
             {"S", to_json(W.S)},
             {"ST", to_json(W.ST)},
             {"alpha", to_json(W.alpha)},
             {"beta", to_json(W.beta)},
             {"radius", W.radius},
             {"a_word", to_json(W.a_word)},
             {"alpha_word", to_json(W.alpha_word)},
             {"beta_word", to_json(W.beta_word)}};
    auto opt_json = [](const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); };
    json path = json::array();
    for (const auto& g : r.inside_path) path.push_back(to_json(g));
    json mid = nullptr;
    if (r.midpoint) {
        const auto& m = *r.midpoint;
        mid = {{"p_prime", to_json(m.p_prime)},
               {"path_position", m.path_position},
               {"level", m.level},
               {"projection_word", to_json(m.projection_word)},
               {"P", to_json(m.P)},
               {"distance_to_ST", to_json(m.distance_to_st)},
               {"lower_bound", to_json(m.lower_bound)}};
    }
    json gen_list = json::array();
    for (const auto& g : gens.gens()) gen_list.push_back(to_triple(g));
    return {{"family", fam},
            {"generators", gen_list},
            {"alpha_length", opt_json(r.alpha_length)},
            {"beta_length", opt_json(r.beta_length)},
            {"distance_lower", r.distance_lower},
            {"distance_upper", r.distance_upper},
            {"distance_searched", opt_json(r.distance_searched)},
            {"inside_distance", opt_json(r.inside_distance)},
            {"inside_path", path},
            {"midpoint", mid},
            {"completed_radius", r.completed_radius},
            {"complete", r.complete},
            {"note", r.note}};
}

json to_json(const GrowthCertificate& cert) {
    return {{"k", cert.k},
            {"j", cert.j},
            {"ST", to_json(cert.ST)},
            {"threshold", cert.threshold.get_str()},
            {"midpoint_bound", cert.midpoint_bound},
            {"abs_gap", rational(cert.abs_gap)},
            {"denom_gap", cert.denom_gap.get_str()},
            {"abs_branch", cert.abs_branch},
            {"denom_branch", cert.denom_branch},
            {"lower_bound", to_json(cert.bound)},
            {"holds", cert.holds()}};
}

// ---------------------------------------------------------------------------

void write_ball_csv(std::ostream& out, const Ball& ball) {
    out << "num,exp,c,length\n";
    for (std::uint32_t i : ball.canonical_indices()) {
        const auto& g = ball.element(i);
        out << g.f.num().get_str() << ',' << g.f.exp() << ',' << g.c << ',' << ball.length(i) << '\n';
    }
}

void write_detour_csv(std::ostream& out, const std::vector<DetourRow>& rows) {
    out << "n,k,N,witness_g,witness_h\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << r.N << ',' << (r.witness_g ? to_flag_string(*r.witness_g) : "") << ','
            << (r.witness_h ? to_flag_string(*r.witness_h) : "") << '\n';
    }
}

void write_word_length_csv(std::ostream& out, const GroupElement& g, const WordLength& len) {
    out << "num,exp,c,status,length,max_r\n";
    out << g.f.num().get_str() << ',' << g.f.exp() << ',' << g.c << ',' << (len.found() ? "found" : "not_found")
        << ',' << opt(len.length) << ',' << len.max_r << '\n';
}

void write_constants_csv(std::ostream& out, const Constants& K) {
    out << "name,value\n";
    const json doc = to_json(K);
    for (const auto& [key, value] : doc.items()) {
        out << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

void write_size_bound_csv(std::ostream& out, const std::vector<SizeBoundReport>& reports) {
    out << "n,checked,violations,max_dichotomy_ratio4,max_joint_ratio2\n";
    for (const auto& r : reports) {
        out << r.n << ',' << r.checked << ',' << r.violations.size() << ',' << rational(r.max_dichotomy_ratio4) << ','
            << rational(r.max_joint_ratio2) << '\n';
    }
}

void write_lipschitz_csv(std::ostream& out, const LipschitzReport& r) {
    out << "r,n,pairs,violations,max_ratio2\n";
    out << r.r << ',' << r.n << ',' << r.pairs_checked << ',' << r.violations.size() << ',' << rational(r.max_ratio2)
        << '\n';
}

void write_witness_csv(std::ostream& out, const WitnessReport& r) {
    const auto& W = r.family;
    out << "field,value\n";
    out << "k," << W.k << "\nj," << W.j << "\nradius," << W.radius << '\n';
    out << "T," << to_flag_string(W.T) << "\nS," << to_flag_string(W.S) << "\nST," << to_flag_string(W.ST) << '\n';
    out << "alpha," << to_flag_string(W.alpha) << "\nbeta," << to_flag_string(W.beta) << '\n';
    out << "alpha_length," << opt(r.alpha_length) << "\nbeta_length," << opt(r.beta_length) << '\n';
    out << "distance_lower," << r.distance_lower << "\ndistance_upper," << r.distance_upper << '\n';
    out << "distance_searched," << opt(r.distance_searched) << '\n';
    out << "inside_distance," << opt(r.inside_distance) << '\n';
    if (r.midpoint) {
        const auto& m = *r.midpoint;
        out << "midpoint," << to_flag_string(m.p_prime) << "\nlevel," << m.level << "\nP," << to_flag_string(m.P)
            << '\n';
        out << "distance_P_ST," << opt(m.distance_to_st.length) << '\n';
        out << "lower_bound_ceil," << m.lower_bound.ceil() << "\nlower_bound_approx," << fixed(m.lower_bound.approx())
            << '\n';
    }
    out << "completed_radius," << r.completed_radius << "\ncomplete," << (r.complete ? "true" : "false") << '\n';
}

}  // namespace bsac::io
