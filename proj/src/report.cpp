#include "birsphere/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "birsphere/errors.hpp"
#include "birsphere/parse.hpp"

namespace bs {

namespace {

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

std::string get_string(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

TowerReal parse_real(const std::string& s) {
    CoeffScalar c = parse_scalar(s);
    if (!c.is_real()) throw ParseError("'" + s + "' is not real");
    return c.re;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Json rotation_json(const RotationNormalForm& r) {
    return {{"k", r.k}, {"n", r.n}, {"angle", "2*pi*" + std::to_string(r.k) + "/" + std::to_string(r.n)}};
}

}  // namespace

Json to_json(const ProjMat& a) {
    const Mat2& m = a.lift();
    return Json::array({Json::array({m.a.str(), m.b.str()}), Json::array({m.c.str(), m.d.str()})});
}

Json to_json(const BaseMobius& m) {
    switch (m.kind()) {
        case BaseMobius::Kind::Identity: return "id";
        case BaseMobius::Kind::Neg: return "neg";
        case BaseMobius::Kind::Interval: {
            // b = 2t/(1+t^2) with t = (1 - sqrt(1-b^2))/b
            const TowerReal& b = m.parameter();
            if (auto r = tower_sqrt(TowerReal(1) - b * b)) return {{"interval_t", ((TowerReal(1) - *r) / b).str()}};
            return {{"interval_b", b.str()}};
        }
        case BaseMobius::Kind::Involution: return {{"involution_b", m.parameter().str()}};
    }
    return nullptr;
}

Json to_json(const SphereMap& g) { return {{"fiber", to_json(g.fiber)}, {"base", to_json(g.base)}}; }

Json to_json(const HyperellipticModel& m) {
    return {{"m", m.m.str()}, {"sign", sign_str(m.sign)}, {"curve", "w^2 = " + m.rhs().str()}, {"genus", m.genus()}};
}

Json to_json(const RealAlgebraic& x) {
    return {{"minpoly", x.minpoly().str()},
            {"interval", Json::array({to_string(x.interval().first), to_string(x.interval().second)})}};
}

Json to_json(const H2Class& c) {
    Json gens = Json::array();
    for (const auto& g : c.gens) gens.push_back(to_json(g));
    return {{"sign", sign_str(c.sign)}, {"gens", gens}, {"class", c.str()}};
}

Json to_json(const SpherePoint& p) {
    Json a = Json::array();
    for (const auto& c : p) a.push_back(c.str());
    return a;
}

SphereMap sphere_map_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("element must be a JSON object");
    if (j.contains("builtin")) return builtin(get_string(j["builtin"], "builtin"));
    if (!j.contains("fiber")) throw ParseError("element needs a \"fiber\" matrix");
    const Json& f = j["fiber"];
    if (!f.is_array() || f.size() != 2 || !f[0].is_array() || !f[1].is_array() || f[0].size() != 2 || f[1].size() != 2)
        throw ParseError("fiber must be a 2x2 array of polynomial strings");
    std::string text = "[[" + get_string(f[0][0], "entry") + ", " + get_string(f[0][1], "entry") + "], [" +
                       get_string(f[1][0], "entry") + ", " + get_string(f[1][1], "entry") + "]]";
    SphereMap g;
    g.fiber = ProjMat::parse(text);
    if (!j.contains("base")) return g;
    const Json& b = j["base"];
    if (b.is_string()) {
        std::string s = b.get<std::string>();
        if (s == "id") g.base = BaseMobius::identity();
        else if (s == "neg") g.base = BaseMobius::neg();
        else throw ParseError("unknown base '" + s + "'");
    } else if (b.is_object() && b.contains("interval_t")) {
        TowerReal t = parse_real(get_string(b["interval_t"], "interval_t"));
        if ((t * t - TowerReal(1)).is_zero()) throw DomainError("BadParameter", "interval_t must satisfy t^2 != 1");
        g.base = BaseMobius::interval(TowerReal(2) * t / (TowerReal(1) + t * t));
    } else if (b.is_object() && b.contains("interval_b")) {
        g.base = BaseMobius::interval(parse_real(get_string(b["interval_b"], "interval_b")));
    } else if (b.is_object() && b.contains("involution_b")) {
        TowerReal c = parse_real(get_string(b["involution_b"], "involution_b"));
        g.base = BaseMobius(TowerReal(1), -c, c, TowerReal(-1));
    } else {
        throw ParseError("base must be \"id\", \"neg\" or an interval/involution object");
    }
    return g;
}

HyperellipticModel model_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("sign")) throw ParseError("model needs \"m\" and \"sign\"");
    PolyC m = parse_poly(get_string(j["m"], "m"));
    std::string s = get_string(j["sign"], "sign");
    if (s != "+" && s != "-") throw ParseError("sign must be + or -");
    if (!is_real(m)) throw ParseError("model polynomial must be real");
    return model_of(to_real(m).scaled(TowerReal(s == "+" ? 1 : -1)));
}

SphereMap read_element(const std::string& arg) {
    std::string text = arg;
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        return sphere_map_from_json(j);
    }
    if (first != std::string::npos && text[first] != '[' && text.rfind("diag", first) != first) return builtin(text);
    return {ProjMat::parse(text), BaseMobius::identity()};
}

SpherePoint parse_sphere_point(const std::string& s) {
    SpherePoint p;
    std::size_t start = 0;
    for (int k = 0; k < 4; ++k) {
        auto comma = s.find(',', start);
        if ((k < 3) == (comma == std::string::npos)) throw ParseError("point must be w,x,y,z");
        p[k] = parse_scalar(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        start = comma + 1;
    }
    return p;
}

namespace {

Json lattice_report(const std::string& input) {
    auto colon = input.find(':');
    std::string surf = input.substr(0, colon), name = input.substr(colon + 1);
    Json r;
    r["input"] = input;
    r["caveats"] = Json::array();
    if (surf == "dp2") {
        if (name != "geiser") throw DomainError("UnknownAutomorphism", "degree 2 data supports only geiser");
        PicLattice L = lattice_make(2);
        int rank = invariant_rank(L, {geiser_matrix(L), L.sigma});
        r["family"] = rank == 1 ? "1" : "out-of-scope";
        r["moduli"] = {{"surface_degree", 2}, {"invariant_rank", rank}};
        r["caveats"].push_back("lattice-level data: the surface itself is not constructed");
        return r;
    }
    PicLattice L = lattice_make(4);
    LMat m = shipped_matrix(name);
    if (!is_lattice_aut(L, m)) throw DomainError("NotAutomorphism", name + " is not an automorphism of the lattice");
    int rank = invariant_rank(L, {m, L.sigma});
    Json pairs = Json::array();
    for (auto [target, swapped] : pair_action(L, m))
        pairs.push_back({{"to", "P" + std::to_string(target + 1)}, {"swapped", swapped}});
    r["moduli"] = {{"surface_degree", 4}, {"invariant_rank", rank}, {"pair_action", pairs}};
    if (rank == 1) {
        r["family"] = "2";
    } else {
        r["family"] = "out-of-scope";
        r["caveats"].push_back("invariant rank " + std::to_string(rank) +
                               ": a real conic bundle is preserved, classify its action on the sphere instead");
    }
    return r;
}

Json classify_trivial(const SphereMap& g, int max_order, Json r) {
    TrivialBaseReport t = classify_trivialbase(g.fiber, max_order);
    r["family"] = t.family;
    Json moduli = Json::object(), certs = Json::object();
    if (t.rotation) {
        moduli["angle"] = rotation_json(*t.rotation);
        certs["rotation_conjugator"] = to_json(t.rotation->conjugator);
    }
    if (t.model) moduli["model"] = to_json(*t.model);
    if (t.locus) moduli["real_locus"] = to_string(*t.locus);
    if (t.parameter) moduli["t_squared"] = t.parameter->str();
    if (t.certificate) certs["to_upsilon"] = to_json(t.certificate->conjugator);
    r["moduli"] = moduli;
    r["certificates"] = certs;
    for (const auto& c : t.caveats) r["caveats"].push_back(c);
    return r;
}

Json classify_pair(const SphereMap& g, Json r) {
    EtaReport e = classify_eta(g);
    r["family"] = e.family;
    r["moduli"] = {{"h2", to_json(e.invariant)}, {"real_fixed_points", e.real_fixed_points}};
    r["certificates"] = Json::object();
    if (e.base_conjugator) r["certificates"]["base_conjugator"] = to_json(*e.base_conjugator);
    r["undecided"] = e.undecided;
    for (const auto& c : e.caveats) r["caveats"].push_back(c);
    return r;
}

}  // namespace

Json classify_report(const std::string& input, int max_order) {
    if (input.rfind("dp4:", 0) == 0 || input.rfind("dp2:", 0) == 0) return lattice_report(input);
    return classify_report(read_element(input), max_order);
}

Json classify_report(const SphereMap& g, int max_order) {
    Json r;
    r["input"] = to_json(g);
    r["caveats"] = Json::array();
    r["undecided"] = false;
    if (!reality_check(g)) throw DomainError("NotReal", g.str() + " does not commute with the real structure");
    if (g.base.kind() == BaseMobius::Kind::Interval) {
        r["family"] = "out-of-scope";
        r["reality_only"] = true;
        r["caveats"].push_back("base action " + g.base.str() + " has infinite order; only the reality condition is checked");
        return r;
    }
    auto ord = sphere_order(g, max_order);
    if (!ord) throw DomainError("NotFiniteOrder", "no order up to " + std::to_string(max_order));
    if (!is_prime(*ord)) throw DomainError("NotPrimeOrder", "order " + std::to_string(*ord) + " is not prime");
    r["order"] = *ord;
    if (g.base.is_identity()) return classify_trivial(g, max_order, r);
    return classify_pair(g, r);
}

namespace {

bool same_moduli(const TrivialBaseReport& a, const TrivialBaseReport& b, Json& r) {
    if (a.family != b.family) return false;
    if (a.rotation) return a.rotation->n == b.rotation->n && (a.rotation->k == b.rotation->k || a.rotation->k == b.rotation->n - b.rotation->k);
    if (a.family == "4") return true;
    if (a.family == "rational-special") return a.parameter == b.parameter;
    auto cmp = basis_equiv_moduli(*a.model, *b.model);
    if (cmp.verdict == ModuliVerdict::UndecidedExact)
        throw Undecided("branch divisors could not be compared inside the tower");
    if (cmp.b) r["base_map"] = {{"b", to_json(*cmp.b)}, {"flip", cmp.flip}};
    return cmp.verdict == ModuliVerdict::Equivalent;
}

}  // namespace

Json conj_report(const SphereMap& a, const SphereMap& b, int max_order) {
    Json r;
    r["caveats"] = Json::array();
    r["certificate"] = nullptr;
    Json ca = classify_report(a, max_order), cb = classify_report(b, max_order);
    r["families"] = Json::array({ca["family"], cb["family"]});
    if (a == b) {
        r["conjugate"] = true;
        r["fiberwise"] = true;
        r["certificate"] = to_json(ProjMat::identity());
        return r;
    }
    bool triv_a = a.base.is_identity(), triv_b = b.base.is_identity();
    if (ca["family"] == "out-of-scope" || cb["family"] == "out-of-scope")
        throw DomainError("NotPrimeOrder", "conjugacy needs elements of finite prime order");
    if (triv_a != triv_b || ca["order"] != cb["order"]) {
        r["conjugate"] = false;
        r["fiberwise"] = false;
        return r;
    }
    if (triv_a) {
        auto ta = classify_trivialbase(a.fiber, max_order), tb = classify_trivialbase(b.fiber, max_order);
        if (ta.rotation && tb.rotation) {
            bool same = same_moduli(ta, tb, r);
            r["conjugate"] = same;
            r["fiberwise"] = same;
            if (same) {
                // J_b^-1 R J_a, with the angle sign fixed by tau when needed
                ProjMat ja = ta.rotation->conjugator, jb = tb.rotation->conjugator;
                if (ta.rotation->k != tb.rotation->k) ja = tau() * ja;
                ProjMat c = pgl_inv(jb) * ja;
                if (c * a.fiber * pgl_inv(c) != b.fiber) throw std::logic_error("rotation certificate failed");
                r["certificate"] = to_json(c);
            }
            return r;
        }
        bool fiberwise = ta.model && tb.model && conj_decision(a.fiber, b.fiber);
        r["fiberwise"] = fiberwise;
        if (fiberwise) {
            auto cert = construct_conjugator(a.fiber, b.fiber);
            if (!cert.verify(a.fiber, b.fiber)) throw std::logic_error("conjugacy certificate failed");
            r["certificate"] = to_json(cert.conjugator);
            r["conjugate"] = true;
            return r;
        }
        r["conjugate"] = same_moduli(ta, tb, r);
        if (r["conjugate"].get<bool>()) r["caveats"].push_back("conjugate through a base map; no fiber certificate is produced");
        return r;
    }
    auto ea = classify_eta(a), eb = classify_eta(b);
    r["fiberwise"] = false;
    bool bir = ea.invariant == eb.invariant;
    r["bir_conjugate"] = bir;
    if (!bir || ea.family != eb.family) {
        r["conjugate"] = false;
        return r;
    }
    if (ea.family == "8") {
        r["conjugate"] = true;
        return r;
    }
    throw Undecided("same H2 class " + ea.invariant.str() + " on the linear stratum; Aut-level conjugacy is not decided");
}

}  // namespace bs
