#pragma once

#include <vector>

#include "qfid/complex_matrix.hpp"

namespace qfid {

/// Outcome of comparing the spectra of AB and BA.
struct CyclicityReport {
  bool holds = false;
  double max_deviation = 0.0;  // largest pairwise distance after matching
  double threshold = 0.0;      // what max_deviation was compared against
  std::vector<Complex> spectrum_ab;
  std::vector<Complex> spectrum_ba;
};

/// sigma(AB) = sigma(BA) as multisets, with tolerance tol * max(1, ||AB||_F, ||BA||_F).
/// Swapping the arguments gives the same deviation.
CyclicityReport check_cyclicity(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// sqrt applied to the clamped spectra of AB and BA, for PSD A and B.
/// Throws NotHermitian or NotPsd for inputs outside the PSD tolerance.
CyclicityReport check_mapped_cyclicity(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// |sum of eigenvalues - Tr A| / (1 + |Tr A|).
double trace_eigensum_defect(const ComplexMatrix& a);

}  // namespace qfid
