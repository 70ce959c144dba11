#include "birsphere/rational.hpp"

#include "birsphere/errors.hpp"

namespace bs {

std::string to_string(const Q& q) {
    Q c = q;
    c.canonicalize();
    return c.get_str();
}

Q parse_rational(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    return q;
}

bool rational_sqrt(const Q& q, Q& root) {
    if (sgn(q) < 0) return false;
    Z n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    Z rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Q(rn, rd);
    root.canonicalize();
    return true;
}

SquareFreeSplit split_square_free(const Z& n0) {
    SquareFreeSplit out{1, 1, {}};
    Z n = abs(n0);
    if (n == 0) {
        out.square_root = 0;
        return out;
    }
    auto take = [&](const Z& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) out.square_root *= p;
        if (e % 2) {
            out.radicand *= p;
            out.primes.push_back(p);
        }
    };
    take(2);
    for (unsigned long p = 3; p <= 200000 && Z(p) * p <= n; p += 2) {
        if (n % p == 0) take(Z(p));
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            Z r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            out.square_root *= r;
        } else if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
            out.radicand *= n;
            out.primes.push_back(n);
        } else {
            throw UnsupportedExtension("cannot factor radicand cofactor " + n.get_str());
        }
    }
    return out;
}

double to_double(const Q& q) { return q.get_d(); }

}  // namespace bs
