#include "clpolar/geometry/space_kind.hpp"

#include <stdexcept>

#include "clpolar/algebra/gf.hpp"
#include "clpolar/algebra/qfunc.hpp"

namespace clpolar::geometry {

HalfInt param_e(Family f) {
    switch (f) {
        case Family::HyperbolicQuadric: return HalfInt(0);
        case Family::HermitianOdd: return HalfInt::from_twice(1);
        case Family::Symplectic: return HalfInt(1);
        case Family::ParabolicQuadric: return HalfInt(1);
        case Family::HermitianEven: return HalfInt::from_twice(3);
        case Family::EllipticQuadric: return HalfInt(2);
    }
    throw std::logic_error("param_e: bad family");
}

int ambient_dim(SpaceKind k) {
    switch (k.family) {
        case Family::HyperbolicQuadric:
        case Family::HermitianOdd:
        case Family::Symplectic: return 2 * k.d - 1;
        case Family::ParabolicQuadric:
        case Family::HermitianEven: return 2 * k.d;
        case Family::EllipticQuadric: return 2 * k.d + 1;
    }
    throw std::logic_error("ambient_dim: bad family");
}

SchemeType classify_type(SpaceKind k) {
    switch (k.family) {
        case Family::EllipticQuadric:
        case Family::HermitianOdd:
        case Family::HermitianEven: return SchemeType::I;
        case Family::ParabolicQuadric: return k.d % 2 == 0 ? SchemeType::I : SchemeType::III;
        case Family::Symplectic: return k.d % 2 == 0 ? SchemeType::I : SchemeType::III;
        case Family::HyperbolicQuadric: return k.d % 2 == 0 ? SchemeType::II : SchemeType::I;
    }
    throw std::logic_error("classify_type: bad family");
}

std::string family_string(Family f) {
    switch (f) {
        case Family::HyperbolicQuadric: return "Q+";
        case Family::HermitianOdd:
        case Family::HermitianEven: return "H";
        case Family::Symplectic: return "W";
        case Family::ParabolicQuadric: return "Q";
        case Family::EllipticQuadric: return "Q-";
    }
    throw std::logic_error("family_string: bad family");
}

std::string label(SpaceKind k) {
    return family_string(k.family) + "(" + std::to_string(ambient_dim(k)) + "," +
           std::to_string(k.q) + ")";
}

std::string to_shorthand(SpaceKind k) {
    return family_string(k.family) + ":" + std::to_string(ambient_dim(k)) + ":" +
           std::to_string(k.q);
}

SpaceKind parse_shorthand(const std::string& s) {
    auto c1 = s.find(':');
    auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("space shorthand must look like W:5:2");
    std::string fam = s.substr(0, c1);
    int n, q;
    try {
        n = std::stoi(s.substr(c1 + 1, c2 - c1 - 1));
        q = std::stoi(s.substr(c2 + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("space shorthand must look like W:5:2");
    }
    SpaceKind k{};
    k.q = q;
    if (fam == "W") {
        if (n % 2 == 0) throw std::invalid_argument("W needs odd ambient dimension");
        k.family = Family::Symplectic;
        k.d = (n + 1) / 2;
    } else if (fam == "Q+") {
        if (n % 2 == 0) throw std::invalid_argument("Q+ needs odd ambient dimension");
        k.family = Family::HyperbolicQuadric;
        k.d = (n + 1) / 2;
    } else if (fam == "Q-") {
        if (n % 2 == 0) throw std::invalid_argument("Q- needs odd ambient dimension");
        k.family = Family::EllipticQuadric;
        k.d = (n - 1) / 2;
    } else if (fam == "Q") {
        if (n % 2 != 0) throw std::invalid_argument("Q needs even ambient dimension");
        k.family = Family::ParabolicQuadric;
        k.d = n / 2;
    } else if (fam == "H") {
        k.family = n % 2 ? Family::HermitianOdd : Family::HermitianEven;
        k.d = n % 2 ? (n + 1) / 2 : n / 2;
    } else {
        throw std::invalid_argument("unknown space kind '" + fam + "'");
    }
    validate_kind(k);
    return k;
}

void validate_kind(SpaceKind k) {
    if (!algebra::FiniteField::supported(k.q))
        throw std::invalid_argument("unsupported field size q=" + std::to_string(k.q));
    if (k.d < 1) throw std::invalid_argument("rank must be at least 1");
    if ((k.family == Family::HermitianOdd || k.family == Family::HermitianEven) &&
        algebra::exact_sqrt(k.q) == 0)
        throw std::invalid_argument("hermitian spaces need a square field size");
}

} // namespace clpolar::geometry
