#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qfid/complex_matrix.hpp"
#include "qfid/errors.hpp"

namespace qfid {

/// Hermitian, PSD, unit-trace matrix. Only validate() and the generators
/// construct one, so holding a DensityMatrix means the checks passed.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }
  /// k with dim == 2^k, when dim is a power of two.
  std::optional<unsigned> qubits() const;

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  friend DensityMatrix validate(ComplexMatrix m);
  friend DensityMatrix assume_valid(ComplexMatrix m);

  ComplexMatrix m_;
};

enum class ValidationCause { not_finite, not_hermitian, trace_not_one, not_psd };

std::string_view to_string(ValidationCause cause);

class ValidationError : public Error {
 public:
  ValidationError(ValidationCause cause, const std::string& detail);
  ValidationCause cause() const { return cause_; }
  /// The message without the cause prefix.
  const std::string& detail() const { return detail_; }

 private:
  ValidationCause cause_;
  std::string detail_;
};

/// |Tr - 1| accepted by validate.
inline constexpr double kTraceTolerance = 1e-12;

/// Checks, in order: finite entries, hermiticity within tolerance::hermiticity,
/// trace within kTraceTolerance of 1, smallest eigenvalue >= -tolerance::psd.
/// Throws ValidationError naming the first check that failed.
DensityMatrix validate(ComplexMatrix m);

/// Ginibre state G G^H / Tr(G G^H) with G a dim x rank matrix of standard
/// complex Gaussians. Requires 1 <= rank <= dim.
DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// |psi><psi| for a normalized Gaussian vector psi.
DensityMatrix random_pure(std::size_t dim, std::uint64_t seed);

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's
/// diagonal moved into Q.
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);

/// Ginibre matrix scaled by 1/sqrt(dim), so its spectrum fills the unit disc.
ComplexMatrix random_ginibre(std::size_t dim, std::uint64_t seed);

/// Uniformly distributed point on the probability simplex.
std::vector<double> random_probability(std::size_t dim, std::uint64_t seed);

/// Two states diagonal in one Haar-random basis, with the eigenvalue
/// distributions kept for closed-form checks.
struct CommutingPair {
  DensityMatrix rho;
  DensityMatrix sigma;
  std::vector<double> p;  // eigenvalues of rho, basis column order
  std::vector<double> q;  // eigenvalues of sigma
  ComplexMatrix basis;
};

CommutingPair random_commuting_pair(std::size_t dim, std::uint64_t seed);

/// Test-corpus families.
enum class FamilyTag { mixed_full_rank, pure, commuting_pair, rank_deficient, identical_pair };

struct StateFamily {
  FamilyTag tag = FamilyTag::mixed_full_rank;
  /// Only for rank_deficient; defaults to max(1, dim / 2) when absent.
  std::optional<std::size_t> rank;
};

inline constexpr FamilyTag kAllFamilies[] = {FamilyTag::mixed_full_rank, FamilyTag::pure,
                                             FamilyTag::commuting_pair, FamilyTag::rank_deficient,
                                             FamilyTag::identical_pair};

/// Dashed names used on the command line: "mixed-full-rank", "pure", ...
std::string_view to_string(FamilyTag tag);
std::optional<FamilyTag> parse_family(std::string_view name);
/// commuting_pair and identical_pair are generated jointly.
bool is_pair_family(FamilyTag tag);

/// A (rho, sigma) pair drawn from the family. Deterministic in (family, dim, seed).
std::pair<DensityMatrix, DensityMatrix> generate_pair(const StateFamily& family, std::size_t dim,
                                                      std::uint64_t seed);

/// One state from a single-state family (mixed_full_rank, pure, rank_deficient).
DensityMatrix generate_state(const StateFamily& family, std::size_t dim, std::uint64_t seed);

}  // namespace qfid
