#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "birsphere/errors.hpp"
#include "birsphere/parse.hpp"
#include "birsphere/report.hpp"

using namespace bs;

namespace {

int max_order_from_env() {
    const char* s = std::getenv("BIRSPHERE_MAX_ORDER");
    if (!s) return 24;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 1 || v > 1000) throw ParseError("BIRSPHERE_MAX_ORDER must be an integer in [1, 1000]");
    return static_cast<int>(v);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Q parse_q(const std::string& s) {
    CoeffScalar c = parse_scalar(s);
    if (!c.is_rational()) throw ParseError("'" + s + "' is not rational");
    return c.re.rational_value();
}

// JSON array of rows (numbers or rational strings) or CSV lines.
LMat read_lattice_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    LMat m;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        for (const auto& row : j) {
            std::vector<Q> r;
            for (const auto& x : row) {
                if (x.is_number_integer()) r.emplace_back(x.get<long>());
                else if (x.is_string()) r.push_back(parse_q(x.get<std::string>()));
                else throw ParseError("matrix entries must be integers or rational strings");
            }
            m.push_back(r);
        }
    } else {
        std::string line;
        std::istringstream lines(text);
        while (std::getline(lines, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::vector<Q> r;
            std::istringstream cells(line);
            std::string cell;
            while (std::getline(cells, cell, ',')) r.push_back(parse_q(cell));
            m.push_back(r);
        }
    }
    return m;
}

int surface_degree(const std::string& s) {
    if (s == "dp8") return 8;
    if (s == "dp6") return 6;
    if (s == "dp4") return 4;
    if (s == "dp2") return 2;
    throw ParseError("surface must be dp8, dp6, dp4 or dp2");
}

LMat named_lattice_op(const PicLattice& L, const std::string& name) {
    if (name == "identity") return lmat_identity(L.rank());
    if (name == "sigma") return L.sigma;
    if (name == "geiser") return geiser_matrix(L);
    if (L.degree != 4) throw DomainError("UnknownAutomorphism", name + " is defined on degree 4 only");
    return shipped_matrix(name);
}

struct PicardArgs {
    std::string surface, op, matrix_file, check, count, mu;
    bool image_rho = false;
};

void run_picard(const PicardArgs& a) {
    PicLattice L = lattice_make(surface_degree(a.surface));
    if (a.image_rho) {
        if (a.mu.empty()) throw ParseError("--image-rho needs --mu");
        std::cout << (image_rho_check(parse_scalar(a.mu)) ? "true" : "false") << "\n";
        return;
    }
    if (!a.count.empty()) {
        if (a.count == "minus-one") std::cout << minus_one_classes(L).size() << "\n";
        else if (a.count == "conics") std::cout << 2 * conic_classes(L).size() << "\n";
        else throw ParseError("--count must be minus-one or conics");
        return;
    }
    if (a.op.empty() == a.matrix_file.empty()) throw ParseError("give exactly one of --op, --matrix, --count, --image-rho");
    LMat m = a.op.empty() ? read_lattice_matrix(a.matrix_file) : named_lattice_op(L, a.op);
    std::string check = a.check.empty() ? "rank" : a.check;
    if (check == "aut") {
        std::cout << (is_lattice_aut(L, m) ? "true" : "false") << "\n";
    } else if (check == "rank") {
        std::cout << invariant_rank(L, {m, L.sigma}) << "\n";
    } else if (check == "pairs") {
        Json out = Json::array();
        for (auto [target, swapped] : pair_action(L, m))
            out.push_back({{"to", "P" + std::to_string(target + 1)}, {"swapped", swapped}});
        emit(out);
    } else {
        throw ParseError("--check must be rank, aut or pairs");
    }
}

void run_member(const std::string& group, const std::string& input) {
    SphereMap g = read_element(input);
    bool r;
    if (group == "G") r = reality_check(g);
    else if (!g.base.is_identity()) throw DomainError("NotTrivialBase", "H and H0 membership is defined for base id");
    else if (!membership_G(g.fiber)) r = false;
    else r = group == "H" ? membership_H(g.fiber) : membership_H0(g.fiber);
    std::cout << (r ? "true" : "false") << "\n";
}

void run_fix(const std::string& input) {
    SphereMap g = read_element(input);
    if (!g.base.is_identity()) throw DomainError("NotTrivialBase", "fixed curves are computed for base id");
    if (!membership_G(g.fiber)) throw DomainError("NotInG", g.fiber.str() + " is not real");
    Json r = to_json(fixed_curve(g.fiber));
    if (membership_H(g.fiber)) r["real_locus"] = to_string(real_locus_class(g.fiber));
    emit(r);
}

void run_eval(const std::string& input, const std::string& point) {
    SphereMap g = read_element(input);
    SpherePoint p = parse_sphere_point(point);
    if (!on_sphere(p)) throw DomainError("NotOnSphere", point + " is not on w^2 = x^2 + y^2 + z^2");
    auto q = eval_sphere(g, p);
    if (!q) throw DomainError("BasePoint", "the map is undefined at " + point);
    SpherePoint out = *q;
    for (const auto& c : *q)
        if (!c.is_zero()) {
            CoeffScalar s = c;
            for (auto& x : out) x = x / s;
            break;
        }
    emit(to_json(out));
}

void run_builtin(const std::string& name) {
    if (name.empty()) {
        for (const auto& n : builtin_names()) std::cout << n << "\n";
        return;
    }
    emit(to_json(builtin(name)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Birational maps of the real sphere preserving the conic bundle"};
    app.require_subcommand(1);

    std::string a, b, group = "H0", point, builtin_name;
    PicardArgs pic;

    auto* classify = app.add_subcommand("classify", "family report for an element, builtin or dp4:/dp2: datum");
    classify->add_option("input", a)->required();
    auto* conj = app.add_subcommand("conj", "conjugacy of two prime-order elements");
    conj->add_option("a", a)->required();
    conj->add_option("b", b)->required();
    auto* member = app.add_subcommand("member", "membership in G, H or H0");
    member->add_option("--group", group)->check(CLI::IsMember({"G", "H", "H0"}));
    member->add_option("input", a)->required();
    auto* fix = app.add_subcommand("fix", "fixed-curve model of an involution");
    fix->add_option("input", a)->required();
    auto* h2 = app.add_subcommand("h2", "H2 class of an involution over z -> -z");
    h2->add_option("input", a)->required();
    auto* eval = app.add_subcommand("eval", "image of a sphere point");
    eval->add_option("input", a)->required();
    eval->add_option("point", point, "w,x,y,z")->required();
    auto* order = app.add_subcommand("order", "order of an element");
    order->add_option("input", a)->required();
    auto* picard = app.add_subcommand("picard", "Picard lattice checks");
    picard->add_option("surface", pic.surface)->required();
    picard->add_option("--op", pic.op);
    picard->add_option("--matrix", pic.matrix_file);
    picard->add_option("--check", pic.check);
    picard->add_option("--count", pic.count);
    picard->add_option("--mu", pic.mu);
    picard->add_flag("--image-rho", pic.image_rho);
    auto* bl = app.add_subcommand("builtin", "list builtins or print one as JSON");
    bl->add_option("name", builtin_name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        int max_order = max_order_from_env();
        if (*classify) emit(classify_report(a, max_order));
        else if (*conj) emit(conj_report(read_element(a), read_element(b), max_order));
        else if (*member) run_member(group, a);
        else if (*fix) run_fix(a);
        else if (*h2) emit(to_json(h2_invariant(read_element(a))));
        else if (*eval) run_eval(a, point);
        else if (*order) {
            auto n = sphere_order(read_element(a), max_order);
            std::cout << (n ? Json(*n) : Json(nullptr)).dump() << "\n";
        } else if (*picard) run_picard(pic);
        else if (*bl) run_builtin(builtin_name);
        return 0;
    } catch (const ParseError& e) {
        std::cerr << Json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const UnsupportedExtension& e) {
        std::cerr << Json{{"error", "UnsupportedExtension"}, {"message", e.what()}}.dump() << "\n";
        return 3;
    } catch (const Undecided& e) {
        std::cerr << Json{{"error", "Undecided"}, {"message", e.what()}}.dump() << "\n";
        return 4;
    } catch (const DomainError& e) {
        std::cerr << Json{{"error", e.kind}, {"message", e.what()}}.dump() << "\n";
        return 5;
    }
}
