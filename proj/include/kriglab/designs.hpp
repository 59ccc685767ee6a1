#pragma once

#include <string>

#include <Eigen/Core>

#include "kriglab/common.hpp"

namespace kriglab {

// An ordered sequence of evaluation points with nested-prefix semantics:
// every generator guarantees that the size-n output is the first n rows of
// the size-(n+1) output.  `box` is the axis-aligned hull the sequence is
// (or becomes) dense in; all points lie inside it.
struct Design {
    Eigen::MatrixXd points;  // n x d, one point per row
    Eigen::VectorXd box_lo;
    Eigen::VectorXd box_hi;

    int size() const { return static_cast<int>(points.rows()); }
    int dim() const { return static_cast<int>(points.cols()); }
    Eigen::VectorXd point(int i) const { return points.row(i).transpose(); }
    Design prefix(int n) const;
};

// First n points of the base-2 digital (Sobol-type) sequence scaled to the
// box.  In one dimension this is exactly the van der Corput sequence
// 0.5, 0.25, 0.75, 0.125, ... so prefixes are themselves balanced dyadic
// grids; supported up to dim 8.
Design grid_sequence(const Eigen::VectorXd& box_lo, const Eigen::VectorXd& box_hi, int n);

// First n Halton points (bases = first d primes, index starting at 1),
// rescaled to the box; supported up to dim 16.
Design halton_sequence(const Eigen::VectorXd& box_lo, const Eigen::VectorXd& box_hi, int n);

// Points x + rate^i * direction for i = 1..n; x is the accumulation point
// of the infinite sequence.  `direction` is normalized to unit length.
Design accumulate_at(const Eigen::VectorXd& x, double rate,
                     const Eigen::VectorXd& direction, int n);

// Order-preserving subsequence of points at distance >= radius from center.
Design exclude_ball(const Design& design, const Eigen::VectorXd& center, double radius);

// CSV exchange format: header x1,...,xd then one point per row.
void write_design_csv(const Design& design, const std::string& path);
Design read_design_csv(const std::string& path);

// Largest distance from any point of the box to its nearest design point,
// estimated on a per-axis grid with `resolution` cells (exact in 1-d as
// resolution grows).  Used by density tests.
double fill_distance(const Design& design, int resolution = 512);

}  // namespace kriglab
