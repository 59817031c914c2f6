#pragma once

namespace bennett {

// Numerical thresholds shared by every module. Pass a modified copy to
// tighten or relax a single check; nothing reads global state.
struct Tolerances {
  // Max |R^T R - I| accepted on ingestion before SVD re-orthogonalization.
  // Three-decimal rotation tables sit around 1e-3.
  double orthogonality_ingest = 1e-2;
  // Max |R^T R - I| after re-orthogonalization.
  double orthogonality = 1e-9;
  // |p| below this fraction of |h| is a degenerate primal part.
  double degenerate_primal = 1e-12;
  // Study residual, relative to |h|^2.
  double study = 1e-6;
  // Relative singular-value cutoff for rank decisions.
  double rank = 1e-9;
  // Two axes closer than this (mm) intersect.
  double intersect_mm = 1e-7;
  // Parallel-direction cutoff on |d1 x d2|.
  double parallel = 1e-9;
  // Invertibility of a leading / linear coefficient, relative.
  double invertible = 1e-12;
  // Separation between conjugate root pairs of the norm polynomial.
  double root_separation = 1e-7;
  // Relative residual accepted when rebuilding a Bennett motion from axes.
  double reconstruction = 1e-7;
  // Transversal gap under which a configuration counts as folded.
  double folded_gap = 1e-4;
  // Loop-closure residual accepted for a wing configuration.
  double closure = 1e-6;
};

}  // namespace bennett
