// Complex Hermitian operator algebra over labeled tensor-product spaces.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oneshot {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace tol {
// Entrywise deviation from the conjugate transpose accepted on construction.
inline constexpr double hermiticity = 1e-10;
// Eigenvalues in [-degeneracy, degeneracy] count as zero for sign/support
// classification.
inline constexpr double degeneracy = 1e-10;
// Smallest admissible eigenvalue of a (sub-normalized) state.
inline constexpr double psd = 1e-9;
// Upper slack on the trace of a state.
inline constexpr double trace = 1e-9;
}  // namespace tol

struct Factor {
  std::string label;
  int dim = 0;
};

// Ordered list of labeled tensor factors. Row-major multi-index convention:
// the last factor varies fastest.
class SystemLayout {
 public:
  SystemLayout() = default;
  explicit SystemLayout(std::vector<Factor> factors);

  int dim() const { return dim_; }
  int factor_count() const { return static_cast<int>(factors_.size()); }
  const Factor& factor(int i) const { return factors_.at(i); }
  const std::vector<Factor>& factors() const { return factors_; }

  bool has_label(const std::string& label) const;
  int index_of(const std::string& label) const;  // throws on unknown label
  std::vector<std::string> labels() const;
  int dim_of(const std::vector<std::string>& labels) const;

  // Concatenation; throws on duplicate labels.
  SystemLayout tensor(const SystemLayout& other) const;
  // Sub-layout of the given labels, kept in this layout's order.
  SystemLayout sublayout(const std::vector<std::string>& labels) const;
  // Labels of this layout not contained in `labels`, in layout order.
  std::vector<std::string> complement(const std::vector<std::string>& labels) const;

  bool operator==(const SystemLayout& other) const;

 private:
  std::vector<Factor> factors_;
  int dim_ = 1;
};

// Dense complex Hermitian matrix over a SystemLayout. Construction
// symmetrizes (H <- (H+H^dag)/2) after checking the input is within
// tol::hermiticity of Hermitian, so downstream code can rely on exact
// symmetry.
class HermitianOperator {
 public:
  HermitianOperator(SystemLayout layout, Matrix entries);

  const SystemLayout& layout() const { return layout_; }
  const Matrix& matrix() const { return entries_; }
  int dim() const { return static_cast<int>(entries_.rows()); }
  double trace() const { return entries_.trace().real(); }
  double operator_norm() const;       // largest |eigenvalue|
  double min_eigenvalue() const;
  double max_eigenvalue() const;

  static HermitianOperator identity(const SystemLayout& layout);
  static HermitianOperator zero(const SystemLayout& layout);

 private:
  SystemLayout layout_;
  Matrix entries_;
};

// Kronecker product with layout concatenation.
HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

// Trace over all factors not in `keep`; kept factors stay in layout order.
HermitianOperator partial_trace(const HermitianOperator& s,
                                const std::vector<std::string>& keep);

// Tensor `op` with identities so the result lives on `full`, matching factor
// positions. op's labels must be a subset of full's.
HermitianOperator embed_with_identity(const HermitianOperator& op,
                                      const SystemLayout& full);

// Eigendecomposition of a Hermitian operator, eigenvalues descending.
struct EigH {
  RealVector values;  // descending
  Matrix vectors;     // column i pairs with values[i]

  // Eigenprojectors clustered by tol::degeneracy, descending eigenvalue.
  std::vector<std::pair<double, Matrix>> projectors() const;
  Matrix reconstruct() const;
};

EigH eig_h(const HermitianOperator& h);
EigH eig_h(const Matrix& h);

// Spectral functions on the matrix itself. PSD variants clip small negative
// eigenvalues at zero; pseudo-inverses restrict to the support using
// tol::degeneracy.
Matrix sqrt_psd(const Matrix& h);
Matrix pinv_sqrt_psd(const Matrix& h);
Matrix pow_psd(const Matrix& h, double s);  // s=0 gives the support projector

// Projector onto eigenvectors with eigenvalue < -tol::degeneracy.
HermitianOperator negative_projector(const HermitianOperator& h);
// Complement: eigenvalue >= -tol::degeneracy.
HermitianOperator nonnegative_projector(const HermitianOperator& h);
// Projector onto eigenvalues > tol::degeneracy.
HermitianOperator support_projector(const HermitianOperator& h);

// Sub-normalized positive semidefinite operator (tr <= 1).
class QuantumState {
 public:
  explicit QuantumState(HermitianOperator op, std::optional<bool> pure = std::nullopt);

  const HermitianOperator& op() const { return op_; }
  const SystemLayout& layout() const { return op_.layout(); }
  const Matrix& matrix() const { return op_.matrix(); }
  int dim() const { return op_.dim(); }
  double trace() const { return op_.trace(); }
  std::optional<bool> purity() const { return pure_; }

  QuantumState reduced(const std::vector<std::string>& keep) const;

 private:
  HermitianOperator op_;
  std::optional<bool> pure_;
};

// Sub-normalized pure state: a vector with norm in (0, 1].
class PureState {
 public:
  PureState(SystemLayout layout, Vector amplitudes);

  const SystemLayout& layout() const { return layout_; }
  const Vector& amplitudes() const { return amp_; }
  double norm() const { return amp_.norm(); }
  QuantumState to_state() const;  // rank-1 outer product

 private:
  SystemLayout layout_;
  Vector amp_;
};

// Purification on layout (x) fresh factor of dimension rank(rho). The fresh
// label defaults to a generated one not present in the layout.
PureState purify(const QuantumState& rho, const std::string& fresh_label = "");

// Deterministic Gaussian test-state generators (Box-Muller over mt19937_64,
// so outputs are identical across platforms for a given seed).
QuantumState random_state(const SystemLayout& layout, int rank, std::uint64_t seed);
PureState random_pure(const SystemLayout& layout, std::uint64_t seed);
// Haar-like random projector of the given rank (QR of a Gaussian matrix).
HermitianOperator random_projector(const SystemLayout& layout, int rank,
                                   std::uint64_t seed);

// Deterministic standard-normal stream used by the generators above.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  double operator()();
  Complex complex_normal();

 private:
  double uniform();
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace oneshot
