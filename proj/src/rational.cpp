#include "hypercert/rational.hpp"

#include "hypercert/errors.hpp"

#include <sstream>

namespace hypercert {

Q parse_rational(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw parse_error("bad rational literal: " + s);
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw parse_error("bad rational literal: " + s);
    if (v.get_den() == 0) throw parse_error("zero denominator: " + s);
    v.canonicalize();
    return v;
}

std::string rational_str(const Q& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string vec_str(const QVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << rational_str(v[i]);
    }
    os << ")";
    return os.str();
}

Q pow10_q(int exponent) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent < 0 ? Q(1, p) : Q(p);
}

bool rational_square_root(const Q& v, Q* root) {
    if (v < 0) return false;
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2) == 0 && num != 0) return false;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2) == 0 && den != 1) return false;
    if (rn * rn != num || rd * rd != den) return false;
    if (root) *root = Q(rn, rd);
    return true;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace hypercert
