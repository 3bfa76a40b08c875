#pragma once

#include <string>
#include <vector>

#include "geom/hull.hpp"

namespace toric::points {

using geom::Int;
using geom::IntMat;
using geom::IntVec;
using geom::Rat;
using geom::RatMat;
using geom::RatVec;

// Exact measure data attached to one face of the hull, all relative to the
// affine lattice generated by the configuration points on that face:
// vol is normalized so a unimodular d-simplex has volume 1/d!, and
// vol_z = d! * vol. `moment` is the vector integral of x over the face.
struct FaceData {
    IntMat lattice;                              // basis of Aff_Z(A ∩ F)
    Rat vol;
    Rat vol_z;
    RatVec moment;
    std::vector<std::vector<int>> triangulation; // pulling cells, point ids
};

// A lattice point configuration (P, A): the ordered list of points, the face
// lattice of the hull, the standing-hypothesis flags and per-face measures.
// Immutable after construction; every operation is const and re-entrant.
class PointConfiguration {
  public:
    static PointConfiguration load(std::vector<IntVec> raw, std::string name = "");

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    int count() const { return static_cast<int>(points_.size()); }
    const std::vector<IntVec>& points() const { return points_; }
    const RatMat& rational_points() const { return rpoints_; }
    const geom::FaceLattice& hull() const { return hull_; }
    const FaceData& face_data(int face_index) const { return face_data_[face_index]; }

    // Condition (*): saturation means A = P ∩ Z^n; generation means the
    // differences of A span Z^n over Z. Both recorded as flags, not errors.
    bool saturated() const { return saturated_; }
    bool generates() const { return generates_; }
    bool satisfies_star() const { return saturated_ && generates_; }

    // Every vertex cone unimodular (smooth associated toric variety).
    bool delzant() const { return delzant_; }

    Rat volume() const;          // vol(P)
    Rat boundary_volume() const; // vol(∂P), facet-lattice normalized
    RatVec moment() const;       // ∫_P x dv
    RatVec boundary_moment() const;

    // Σ vol(∂^j P) and ∫_{∂^j P} x dσ for a codimension j in [0, n].
    Rat codim_volume(int j) const;
    RatVec codim_moment(int j) const;

    // Lattice volume vol_Z of a simplex spanned by configuration points, with
    // respect to the lattice of the given containing face.
    Rat simplex_vol_z(const std::vector<int>& vertex_ids, int face_index) const;

    // (vol(P), vol(∂P)/2): leading and subleading Ehrhart coefficients.
    std::pair<Rat, Rat> ehrhart_coefficients() const;

    // Lattice points of iP, in lexicographic order.
    std::vector<IntVec> dilation_points(int factor) const;

  private:
    std::string name_;
    int dim_ = 0;
    std::vector<IntVec> points_;
    RatMat rpoints_;
    geom::FaceLattice hull_;
    bool saturated_ = false;
    bool generates_ = false;
    bool delzant_ = false;
    std::vector<FaceData> face_data_;
};

// Dilation (iP, A_i): points are re-indexed lexicographically; `embedding`
// maps each original label j to the index of i*a_j in the dilated list.
struct DilatedConfiguration {
    PointConfiguration config;
    int factor = 1;
    std::vector<int> embedding;
};

DilatedConfiguration dilate(const PointConfiguration& config, int factor);

// Lattice-point count of iP (the Ehrhart value E_P(i)).
long ehrhart_count(const PointConfiguration& config, int factor);

// Degree-n Ehrhart polynomial interpolated from the counts at t = 0..n,
// returned as coefficients [c_0, ..., c_n] of 1, t, ..., t^n.
RatVec ehrhart_interpolated(const PointConfiguration& config);

// The configuration A x V(Δ_k) in Z^{n+k}, whose hull is P x Δ_k.
PointConfiguration product_with_simplex(const PointConfiguration& config, int k);

} // namespace toric::points
