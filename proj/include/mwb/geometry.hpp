#pragma once

#include <memory>
#include <string>

#include "mwb/matroid.hpp"

namespace mwb {

// Names a coordinate geometry: PG(m-1,q) or AG(m-1,q), written with its
// rank m, so pg(3,2) is the Fano plane and ag(3,2) its affine part.
struct GeometryTag {
    enum Family { PG, AG } family;
    int rank;
    int q;

    long long point_count() const;
    std::string str() const;  // "pg:3:2"
    static GeometryTag parse(const std::string& s);
};

// Rank-m projective geometry over GF(q): one column per projective point,
// canonical representative with first nonzero coordinate 1, columns in
// lexicographic order of their code vectors (coordinate 0 most significant).
std::shared_ptr<const LinearMatroid> pg(int m, int q);

// Rank-m affine geometry: pg(m,q) with the hyperplane {coordinate 0 = 0}
// deleted, re-emitted as a fresh matrix of q^{m-1} columns.
std::shared_ptr<const LinearMatroid> ag(int m, int q);

std::shared_ptr<const LinearMatroid> make_geometry(const GeometryTag& tag);

}  // namespace mwb
