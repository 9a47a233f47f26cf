#pragma once

#include "ldp/fan.hpp"
#include "ldp/polygon.hpp"

#include <cstdint>
#include <vector>

namespace ldp {

// Deterministic LDP polygon: primitive points sampled from the box
// [-bound, bound]^2, hulled, retried until the origin is strictly
// interior. Identical seeds give identical polygons. Throws after a
// bounded number of failed attempts.
LatticePolygon random_ldp(std::uint64_t seed, int coordinate_bound, int max_vertices);

// Deterministic cone with V <= max_v: samples coprime (V, a), builds the
// normal form ((1,0), (c,V)) with c = -a mod V, then scrambles by a random
// orientation-preserving unimodular map.
Cone random_cone(std::uint64_t seed, int max_v);

// Representative of the GL(2,Z)-class of an LDP polygon: the
// lexicographically smallest image over the unimodular frames formed by
// consecutive rays of the refined fan, both orientations. Equal exactly on
// equivalent polygons.
LatticePolygon canonical_form(const LatticePolygon& p);

// All lattice polygons with exactly one interior lattice point, enumerated
// inside [-3, 3]^2 and deduplicated by canonical_form. These are precisely
// the reflexive polygons; the list is sorted and deterministic.
std::vector<LatticePolygon> reflexive_catalogue();

}  // namespace ldp
