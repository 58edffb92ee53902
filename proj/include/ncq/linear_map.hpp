#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncq/algebra.hpp"
#include "ncq/rat_matrix.hpp"

namespace ncq {

// Additive map given as a finite sum x -> sum_s l_s * x * r_s.
struct PairRep {
    std::vector<std::pair<Element, Element>> pairs;
};

// Standard components f^{ij}: f(x) = sum_{i,j} f^{ij} e_i x e_j.
struct StdComponents {
    RatMatrix m;  // dim x dim, m.at(i, j) = f^{ij}
    bool operator==(const StdComponents& o) const { return m == o.m; }
};

// Coordinate matrix _i f^j: f(a^i e_i) = a^i _i f^j e_j, i.e. row vector
// of coordinates times the matrix.  m.at(i, j) = _i f^j.
struct CoordMatrix {
    RatMatrix m;  // dim x dim
    bool operator==(const CoordMatrix& o) const { return m == o.m; }
};

// Map x -> sum f_G^{kr} e_k G(x) e_r built over a coordinate-given
// generator map G.
struct GeneratedMap {
    CoordMatrix generator;
    StdComponents components;
};

Element apply(const PairRep& f, const Element& x, const AlgebraSpec& alg);
Element apply(const StdComponents& f, const Element& x, const AlgebraSpec& alg);
Element apply(const CoordMatrix& f, const Element& x);
Element apply(const GeneratedMap& f, const Element& x, const AlgebraSpec& alg);

StdComponents pair_to_std(const PairRep& f, const AlgebraSpec& alg);

// Coordinate matrix of the map with standard components f:
// _i f^j = sum_{k,r,p} f^{kr} B[k][i][p] B[p][r][j].
CoordMatrix std_to_coord(const StdComponents& f, const AlgebraSpec& alg);

// Inverse conversion.  For the quaternion presets this is the exact
// 16-identity inversion (bijective).  For the complex algebra only
// Cauchy-Riemann matrices are realizable; the canonical preimage has
// f^{10} = f^{11} = 0, and NotRealizable (with the two exact residuals
// _0f^0 - _1f^1 and _0f^1 + _1f^0) is thrown otherwise.  Other algebras
// use exact elimination on the defining identity; NotRealizable carries
// the inconsistent rows' residuals.
StdComponents coord_to_std(const CoordMatrix& m, const AlgebraSpec& alg);

// Composition h = g after f.
PairRep compose(const PairRep& g, const PairRep& f, const AlgebraSpec& alg);
// h^{pr} = sum g^{ij} f^{kl} B[i][k][p] B[l][j][r].
StdComponents compose_std(const StdComponents& g, const StdComponents& f,
                          const AlgebraSpec& alg);

// Coordinate matrix in the basis e'_i = sum_k A[i][k] e_k:
// m' = A m A^{-1}.  SingularTransform when A is not invertible.
CoordMatrix transform_coords(const CoordMatrix& m, const RatMatrix& a_mat);

// Coordinate matrix of a generated map:
// _i f^j = sum G[i][l] f_G^{kr} B[k][l][p] B[p][r][j].
CoordMatrix generated_coords(const GeneratedMap& f, const AlgebraSpec& alg);

// Cauchy-Riemann check for dim-2 coordinate matrices.
struct CrReport {
    bool satisfied = false;
    std::vector<Rational> residuals;  // { m00 - m11, m01 + m10 }
};
CrReport cauchy_riemann_check(const CoordMatrix& m);

// Operator norm sup |f(x)|_2 / |x|_2 in doubles, via power iteration on
// M^T M to relative tolerance 1e-9.  Requires an all-ones norm signature
// (Euclidean coordinates); UnsupportedOperation otherwise.
double map_norm(const CoordMatrix& m, const AlgebraSpec& alg);

// Row-major JSON-ish serialization of exact matrices: every entry printed
// as "p/q" or "p".
std::vector<std::vector<std::string>> matrix_to_strings(const RatMatrix& m);
RatMatrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows);

}  // namespace ncq
