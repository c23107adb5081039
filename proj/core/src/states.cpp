#include "qfid/states.hpp"

#include <Eigen/QR>
#include <bit>
#include <cmath>
#include <string>

#include "qfid/kernels.hpp"
#include "qfid/rng.hpp"

namespace qfid {

std::optional<unsigned> DensityMatrix::qubits() const {
  const std::size_t n = dim();
  if (!std::has_single_bit(n)) return std::nullopt;
  return static_cast<unsigned>(std::countr_zero(n));
}

std::string_view to_string(ValidationCause cause) {
  switch (cause) {
    case ValidationCause::not_finite:
      return "not-finite";
    case ValidationCause::not_hermitian:
      return "not-hermitian";
    case ValidationCause::trace_not_one:
      return "trace-not-one";
    case ValidationCause::not_psd:
      return "not-psd";
  }
  return "unknown";
}

ValidationError::ValidationError(ValidationCause cause, const std::string& detail)
    : Error(std::string(to_string(cause)) + ": " + detail), cause_(cause), detail_(detail) {}

DensityMatrix assume_valid(ComplexMatrix m) { return DensityMatrix(std::move(m)); }

DensityMatrix validate(ComplexMatrix m) {
  if (!m.is_finite()) throw ValidationError(ValidationCause::not_finite, "matrix has NaN or Inf entries");
  const double defect = m.hermiticity_defect();
  if (defect > tolerance::hermiticity(m)) {
    throw ValidationError(ValidationCause::not_hermitian,
                          "||A - A^H||_F = " + std::to_string(defect));
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0)) > kTraceTolerance) {
    throw ValidationError(ValidationCause::trace_not_one,
                          "trace is " + std::to_string(tr.real()) + (tr.imag() < 0 ? "" : "+") +
                              std::to_string(tr.imag()) + "i");
  }
  const std::vector<double> eig = eigvalsh(symmetrize(m));
  if (eig.front() < -tolerance::psd(m)) {
    throw ValidationError(ValidationCause::not_psd,
                          "smallest eigenvalue is " + std::to_string(eig.front()));
  }
  return DensityMatrix(std::move(m));
}

namespace {

void require_dim(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("dimension must be at least 1");
}

// G G^H divided by its trace, exactly Hermitian with a real diagonal.
ComplexMatrix normalized_gram(const DenseMatrix& g) {
  const Eigen::Index n = g.rows();
  DenseMatrix rho = DenseMatrix::Zero(n, n);
  rho.selfadjointView<Eigen::Lower>().rankUpdate(g);
  rho.triangularView<Eigen::StrictlyUpper>() = rho.adjoint();
  double trace = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    rho(i, i) = rho(i, i).real();
    trace += rho(i, i).real();
  }
  rho /= trace;
  return ComplexMatrix(std::move(rho));
}

DenseMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  DenseMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  }
  return g;
}

// Streams below derive_seed(seed, stream); fixed so files stay reproducible.
enum Stream : std::uint64_t { kBasis = 1, kFirst = 2, kSecond = 3 };

}  // namespace

DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  require_dim(dim);
  if (rank < 1 || rank > dim) {
    throw InvalidArgument("rank " + std::to_string(rank) + " is outside [1, " +
                          std::to_string(dim) + "]");
  }
  Rng rng(seed);
  const DenseMatrix g =
      gaussian_matrix(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(rank), rng);
  return assume_valid(normalized_gram(g));
}

DensityMatrix random_pure(std::size_t dim, std::uint64_t seed) {
  require_dim(dim);
  Rng rng(seed);
  DenseMatrix psi = gaussian_matrix(static_cast<Eigen::Index>(dim), 1, rng);
  psi /= psi.norm();
  return assume_valid(normalized_gram(psi));
}

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
  require_dim(dim);
  Rng rng(seed);
  const auto n = static_cast<Eigen::Index>(dim);
  const Eigen::HouseholderQR<DenseMatrix> qr(gaussian_matrix(n, n, rng));
  DenseMatrix q = qr.householderQ();
  const DenseMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return ComplexMatrix(std::move(q));
}

ComplexMatrix random_ginibre(std::size_t dim, std::uint64_t seed) {
  require_dim(dim);
  Rng rng(seed);
  const auto n = static_cast<Eigen::Index>(dim);
  DenseMatrix g = gaussian_matrix(n, n, rng);
  g /= std::sqrt(static_cast<double>(dim));
  return ComplexMatrix(std::move(g));
}

std::vector<double> random_probability(std::size_t dim, std::uint64_t seed) {
  require_dim(dim);
  // |z|^2 of a standard complex Gaussian is Exp(1); normalized exponentials are flat Dirichlet.
  Rng rng(seed);
  std::vector<double> p(dim);
  double total = 0.0;
  for (double& x : p) {
    x = std::norm(rng.complex_normal());
    total += x;
  }
  for (double& x : p) x /= total;
  return p;
}

CommutingPair random_commuting_pair(std::size_t dim, std::uint64_t seed) {
  ComplexMatrix u = random_unitary(dim, derive_seed(seed, kBasis));
  std::vector<double> p = random_probability(dim, derive_seed(seed, kFirst));
  std::vector<double> q = random_probability(dim, derive_seed(seed, kSecond));
  const auto diagonal_in_basis = [&](const std::vector<double>& w) {
    DenseMatrix b = u.dense();
    for (Eigen::Index j = 0; j < b.cols(); ++j) b.col(j) *= std::sqrt(w[static_cast<std::size_t>(j)]);
    return assume_valid(normalized_gram(b));
  };
  DensityMatrix rho = diagonal_in_basis(p);
  DensityMatrix sigma = diagonal_in_basis(q);
  return CommutingPair{std::move(rho), std::move(sigma), std::move(p), std::move(q), std::move(u)};
}

std::string_view to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::mixed_full_rank:
      return "mixed-full-rank";
    case FamilyTag::pure:
      return "pure";
    case FamilyTag::commuting_pair:
      return "commuting-pair";
    case FamilyTag::rank_deficient:
      return "rank-deficient";
    case FamilyTag::identical_pair:
      return "identical-pair";
  }
  return "unknown";
}

std::optional<FamilyTag> parse_family(std::string_view name) {
  for (FamilyTag tag : kAllFamilies) {
    if (to_string(tag) == name) return tag;
  }
  return std::nullopt;
}

bool is_pair_family(FamilyTag tag) {
  return tag == FamilyTag::commuting_pair || tag == FamilyTag::identical_pair;
}

DensityMatrix generate_state(const StateFamily& family, std::size_t dim, std::uint64_t seed) {
  switch (family.tag) {
    case FamilyTag::mixed_full_rank:
      return random_density(dim, dim, seed);
    case FamilyTag::pure:
      return random_pure(dim, seed);
    case FamilyTag::rank_deficient:
      return random_density(dim, family.rank.value_or(std::max<std::size_t>(1, dim / 2)), seed);
    case FamilyTag::commuting_pair:
    case FamilyTag::identical_pair:
      break;
  }
  throw InvalidArgument(std::string(to_string(family.tag)) + " is generated as a pair");
}

std::pair<DensityMatrix, DensityMatrix> generate_pair(const StateFamily& family, std::size_t dim,
                                                      std::uint64_t seed) {
  switch (family.tag) {
    case FamilyTag::commuting_pair: {
      CommutingPair pair = random_commuting_pair(dim, seed);
      return {std::move(pair.rho), std::move(pair.sigma)};
    }
    case FamilyTag::identical_pair: {
      DensityMatrix rho = random_density(dim, dim, derive_seed(seed, kFirst));
      DensityMatrix copy = rho;
      return {std::move(rho), std::move(copy)};
    }
    default:
      return {generate_state(family, dim, derive_seed(seed, kFirst)),
              generate_state(family, dim, derive_seed(seed, kSecond))};
  }
}

}  // namespace qfid
