#pragma once

#include <string>

#include "clpolar/algebra/halfint.hpp"

namespace clpolar::geometry {

using algebra::HalfInt;

// The six families of finite classical polar spaces. Hermitian spaces split
// by ambient parity since both share the letter H and the rank d:
// HermitianOdd is H(2d-1,q), HermitianEven is H(2d,q), q a square.
enum class Family {
    HyperbolicQuadric, // Q+(2d-1,q), e = 0
    HermitianOdd,      // H(2d-1,q),  e = 1/2
    Symplectic,        // W(2d-1,q),  e = 1
    ParabolicQuadric,  // Q(2d,q),    e = 1
    HermitianEven,     // H(2d,q),    e = 3/2
    EllipticQuadric    // Q-(2d+1,q), e = 2
};

struct SpaceKind {
    Family family;
    int d; // rank: generators have projective dimension d-1
    int q;

    bool operator==(const SpaceKind&) const = default;
};

// Eigenvalue/valency behaviour splits generator schemes into three types.
enum class SchemeType { I, II, III };

HalfInt param_e(Family f);
int ambient_dim(SpaceKind k);       // projective dimension of the ambient space
SchemeType classify_type(SpaceKind k);

std::string family_string(Family f); // "Q+", "H", "W", "Q", "Q-"
std::string label(SpaceKind k);      // e.g. "W(5,2)"

// kind letter + ambient projective dimension + field, e.g. "W:5:2", "Q+:7:2".
SpaceKind parse_shorthand(const std::string& s);
std::string to_shorthand(SpaceKind k);

// Throws std::invalid_argument when q is unsupported, q is not a square for
// hermitian kinds, or d < 1.
void validate_kind(SpaceKind k);

} // namespace clpolar::geometry
