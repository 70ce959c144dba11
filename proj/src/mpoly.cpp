#include "birsphere/mpoly.hpp"

namespace bs {

MPoly::MPoly(const CoeffScalar& c) {
    if (!c.is_zero()) t_[Exp{0, 0, 0, 0}] = c;
}

MPoly MPoly::var(int k) {
    MPoly r;
    Exp e{0, 0, 0, 0};
    e[k] = 1;
    r.t_[e] = CoeffScalar(1);
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.t_) {
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.t_) {
        for (const auto& [eb, cb] : b.t_) {
            MPoly::Exp e;
            for (int k = 0; k < 4; ++k) e[k] = std::uint8_t(ea[k] + eb[k]);
            auto it = r.t_.find(e);
            if (it == r.t_.end()) {
                r.t_.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    }
    return r;
}

MPoly MPoly::conj() const {
    MPoly r = *this;
    for (auto& [e, c] : r.t_) c = c.conj();
    return r;
}

MPoly MPoly::reduce_sphere() const {
    // w^(2k+r) = (x^2+y^2+z^2)^k w^r
    MPoly q2 = var(1) * var(1) + var(2) * var(2) + var(3) * var(3);
    std::map<int, MPoly> powers;
    powers[0] = MPoly(CoeffScalar(1));
    MPoly r;
    for (const auto& [e, c] : t_) {
        int k = e[0] / 2;
        if (!powers.count(k)) {
            int j = powers.rbegin()->first;
            MPoly p = powers.rbegin()->second;
            while (j < k) {
                p = p * q2;
                powers[++j] = p;
            }
        }
        Exp rest{std::uint8_t(e[0] % 2), e[1], e[2], e[3]};
        MPoly m;
        m.t_[rest] = c;
        r += m * powers[k];
    }
    return r;
}

CoeffScalar MPoly::eval(const std::array<CoeffScalar, 4>& p) const {
    std::array<std::vector<CoeffScalar>, 4> pw;
    CoeffScalar r;
    for (const auto& [e, c] : t_) {
        CoeffScalar v = c;
        for (int k = 0; k < 4; ++k) {
            auto& tab = pw[k];
            if (tab.empty()) tab.push_back(CoeffScalar(1));
            while (int(tab.size()) <= e[k]) tab.push_back(tab.back() * p[k]);
            if (e[k]) v *= tab[e[k]];
        }
        r += v;
    }
    return r;
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    static const char* names = "wxyz";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        std::string mono;
        for (int k = 0; k < 4; ++k) {
            if (!it->first[k]) continue;
            if (!mono.empty()) mono += "*";
            mono += names[k];
            if (it->first[k] > 1) mono += "^" + std::to_string(it->first[k]);
        }
        std::string s;
        if (mono.empty()) s = it->second.coeff_str();
        else if (it->second == CoeffScalar(1)) s = mono;
        else if (it->second == CoeffScalar(-1)) s = "-" + mono;
        else s = it->second.coeff_str() + "*" + mono;
        if (out.empty()) out = s;
        else if (s[0] == '-') out += " - " + s.substr(1);
        else out += " + " + s;
    }
    return out;
}

bool same_map_on_sphere(const SphereFormula& f, const SphereFormula& g) {
    bool fz = true, gz = true;
    for (int i = 0; i < 4; ++i) {
        fz = fz && f[i].reduce_sphere().is_zero();
        gz = gz && g[i].reduce_sphere().is_zero();
    }
    if (fz || gz) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!(f[i] * g[j] - f[j] * g[i]).reduce_sphere().is_zero()) return false;
    return true;
}

}  // namespace bs
