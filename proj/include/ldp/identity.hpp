#pragma once

#include "ldp/fan.hpp"

#include <vector>

namespace ldp {

// Left-hand side of the cone-wise identity, by direct enumeration:
// 12 * sum of (kappa(n)+1)^2 over interior lattice points of conv(0, u1, u2),
// where kappa is the linear functional with value -1 on u1 and u2.
Rat cone_lhs_direct(const Cone& c);

// Right-hand side of the cone-wise identity: the sail complement volume
// plus the volumes of the dual triangles conv(m_sigma, m*_i, m*_{i+1}).
Rat cone_rhs(const Cone& c);

// Total of the dual triangle volumes of a sail.
Rat sail_triangle_total(const Sail& s);

struct ConeCheck {
    Cone cone;
    Rat lhs_direct, lhs_closed, rhs;
    bool ok = false;
};

// Evaluates the cone identity by all three routes and compares exactly.
ConeCheck verify_cone(const Cone& c);

// 12 * sum of (kappa(n)+1)^2 over all lattice points of an LDP polygon.
Rat global_lhs(const LatticePolygon& p);

// nvol(p) + nvol(dual(p)) for an LDP polygon.
Rat global_rhs(const LatticePolygon& p);

// sum of (3 - a_tau) over the rays; 12 for every complete unimodular fan.
Int twelve_theorem_sum(const CompleteUnimodularFan& fan);

// Signed determinants of the dual edges of the refined fan, one per ray:
// the dual edge of a ray runs from the functional of the CCW-previous cone
// to the functional of the CCW-next cone, and contributes det2(start, end).
struct DualChain {
    std::vector<Int> dets;  // aligned with refined_fan(p).rays
    Int total{0};
};

DualChain dual_chain_sum(const LatticePolygon& p);

// The two bookkeeping identities behind the global theorem, each side
// computed independently:
//   12 = nvol(dual) + nvol(union of sails) - sum of dual triangle volumes
//   sum of det(dual edges) = nvol(dual) - sum of dual triangle volumes
// plus the count check nvol(union of sails) = number of rays.
struct DecompositionCheck {
    Rat dual_volume;
    Int sails_volume{0};
    Int ray_count{0};
    Rat triangle_total;
    Int chain_total{0};
    bool diff_identity_ok = false;
    bool dual_chain_identity_ok = false;
    bool sails_match_rays = false;

    bool ok() const { return diff_identity_ok && dual_chain_identity_ok && sails_match_rays; }
};

DecompositionCheck verify_decomposition(const LatticePolygon& p);

struct VerificationReport {
    LatticePolygon polygon;
    bool reflexive = false;
    Rat lhs, rhs;
    Int nvol{0};
    Rat nvol_dual;
    bool global_identity_ok = false;
    bool cone_identity_ok = false;
    bool twelve_ok = false;
    Int twelve_sum{0};
    DecompositionCheck decomposition;
    DualChain dual_chain;
    std::vector<ConeCheck> cones;  // filled when per_cone is requested

    bool all_ok() const {
        return global_identity_ok && cone_identity_ok && twelve_ok && decomposition.ok();
    }
};

// Runs every check on one LDP polygon. Per-cone results are always
// evaluated; they are retained in the report only when per_cone is set.
VerificationReport verify_polygon(const LatticePolygon& p, bool per_cone = false);

}  // namespace ldp
