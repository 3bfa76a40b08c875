#pragma once

#include <optional>
#include <string>

#include "weights/weights.hpp"

namespace toric::stab {

using geom::AffineFunctional;
using geom::Rat;
using geom::RatVec;
using points::PointConfiguration;
using tri::Triangulation;

enum class PolytopeKind { chow, discriminant, hurwitz };

struct Degrees {
    Rat chow;         // deg R = (n+1)! vol(P)
    Rat hurwitz;      // n (n+1)! vol(P) - n! vol(dP)
    Rat discriminant; // alternating face-volume sum
};

Degrees compute_degrees(const PointConfiguration& config);

// The alternating sum over all nonempty faces, sign (-1)^codim, weight
// (dim F + 1)! vol(F).
Rat discriminant_degree(const PointConfiguration& config);
RatVec discriminant_moment_sum(const PointConfiguration& config);

struct WeightPolytope {
    PolytopeKind kind;
    std::vector<RatVec> generators; // parallel to the triangulation list
    std::vector<RatVec> distinct;   // deduplicated generator values, sorted
    std::vector<int> vertex_ids;    // indices into `distinct` of extreme points
    Rat entry_sum;                  // affine-hull row 1 right-hand side
    RatVec weighted_sum;            // affine-hull row 2 right-hand side
    int affine_dim = 0;
};

// Everything derived from one exhaustive enumeration of (P, A):
// triangulations with regularity certificates, the three weight vectors per
// triangulation, D-equivalence classes and degrees. Owns its configuration.
class StabilityContext {
  public:
    explicit StabilityContext(PointConfiguration config, long max_triangulations = 100000,
                              int jobs = 1);

    const PointConfiguration& config() const { return config_; }
    const std::vector<Triangulation>& triangulations() const { return tris_; }
    int regular_count() const { return regular_count_; }
    const std::vector<RatVec>& gkz() const { return gkz_; }
    const std::vector<RatVec>& eta() const { return eta_; }
    const std::vector<RatVec>& xi() const { return xi_; }
    // Deduplicated, sorted generator values.
    const std::vector<RatVec>& distinct_gkz() const { return distinct_gkz_; }
    const std::vector<RatVec>& distinct_xi() const { return distinct_xi_; }
    const std::vector<int>& d_class_of() const { return d_class_of_; }
    int d_class_count() const { return d_class_count_; }
    const Degrees& degrees() const { return degrees_; }

    // Assembles the polytope, classifies extreme points, checks the affine
    // hull rows on every generator, and for the Chow kind asserts the
    // vertex/regular-triangulation bijection.
    WeightPolytope polytope(PolytopeKind kind) const;

  private:
    PointConfiguration config_;
    std::vector<Triangulation> tris_;
    int regular_count_ = 0;
    std::vector<RatVec> gkz_, eta_, xi_;
    std::vector<RatVec> distinct_gkz_, distinct_xi_;
    std::vector<int> d_class_of_;
    int d_class_count_ = 0;
    Degrees degrees_;
};

enum class VerdictStatus { pass, fail, skipped };

struct FutakiPaulResult {
    Rat value;           // vol(dP) Int_P g - vol(P) Int_dP g
    Rat raw_weight_form; // deg(Hu) max<phi,Ch> - deg(R) max<phi,Hu>
    Rat integral_p;      // Int_P g
    Rat integral_dp;     // Int_dP g
};

// Concavifies the heights, integrates exactly, and checks the weight-form
// identity raw = -(n+1)! n! value before returning.
FutakiPaulResult futaki_paul(const StabilityContext& ctx, const RatVec& heights);

struct MembershipCertificate {
    RatVec point;        // the scaled Chow vertex that was tested
    RatVec coefficients; // over the scaled Hurwitz generators
};

struct NumericalSsResult {
    VerdictStatus status;
    std::string reason; // for skipped
    std::vector<MembershipCertificate> certificates;
    // Failure data: the violating vertex, a separating functional and the
    // destabilizing heights with their (negative) invariant value.
    RatVec violating_vertex;
    AffineFunctional separator;
    RatVec destabilizing_heights;
    Rat futaki_paul_value;
};

// Decides deg(Hu) Ch(P) inside deg(R) Hu(P) vertex-by-vertex.
NumericalSsResult check_numerical_ss(const StabilityContext& ctx);

struct ChowSsResult {
    VerdictStatus status;
    Rat constant; // (n+1)! vol(P) / N
    RatVec coefficients;
    AffineFunctional separator;
    RatVec destabilizing_heights;
    Rat chow_gap; // N Int_P g - vol(P) sum_a g(a), negative on failure
};

// Ono's criterion: membership of the constant vector in the Chow polytope.
ChowSsResult check_chow_ss(const StabilityContext& ctx);

struct BarycenterResult {
    VerdictStatus status;
    RatVec difference; // vol(dP) Int_P x - vol(P) Int_dP x
    RatVec destabilizing_heights;
    Rat futaki_paul_value;
};

// The linear-function necessary condition; failure destabilizes every
// dilation.
BarycenterResult check_barycenter_condition(const PointConfiguration& config);

// Futaki-Paul values of user-supplied height functions (concavified first).
std::vector<FutakiPaulResult> check_k_ss_functions(const StabilityContext& ctx,
                                                   const std::vector<RatVec>& heights);

struct ProductDegreeCheck {
    bool ok;
    Rat face_sum;    // alternating face sum, over Q = P x simplex for n = 2
    Rat closed_form; // n (n+1)! vol(P) - n! vol(dP)
};

// Exercises the product-polytope degree identity end to end (n <= 2).
ProductDegreeCheck verify_product_degree(const PointConfiguration& config);

} // namespace toric::stab
