#include "mono/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mono/error.hpp"

namespace mono {

namespace {

// Y (x) Y in the computational basis |00>, |01>, |10>, |11>.
CMatrix spin_flip_operator() {
  CMatrix s = CMatrix::Zero(4, 4);
  s(0, 3) = -1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 0) = -1.0;
  return s;
}

void require_two_qubit(const DensityMatrix& rho, std::string_view what) {
  if (rho.dim() != 4) {
    throw DomainError(std::string(what) + " requires a two-qubit state (dim 4), got dim " +
                      std::to_string(rho.dim()));
  }
}

void require_qubit_pair(const Dims& dims, std::string_view measure) {
  if (dims != Dims{2, 2, 2}) {
    throw DomainError(std::string(measure) +
                      " is supported only for three qubits: dims must be (2,2,2), got (" +
                      std::to_string(dims[0]) + "," + std::to_string(dims[1]) + "," +
                      std::to_string(dims[2]) + ")");
  }
}

constexpr double kTabulatedFidelity = 1.0 - 1e-9;

}  // namespace

std::string_view to_string(MeasureId id) {
  switch (id) {
    case MeasureId::Concurrence:
      return "c";
    case MeasureId::ConcurrenceOfAssistance:
      return "ca";
    case MeasureId::EoF:
      return "eof";
    case MeasureId::EntanglementCostLookup:
      return "ec-lookup";
  }
  return "?";
}

MeasureId parse_measure_id(std::string_view text) {
  if (text == "c") return MeasureId::Concurrence;
  if (text == "ca") return MeasureId::ConcurrenceOfAssistance;
  if (text == "eof") return MeasureId::EoF;
  if (text == "ec-lookup") return MeasureId::EntanglementCostLookup;
  throw InvalidArgument("unknown measure '" + std::string(text) +
                        "' (expected one of c, ca, eof, ec-lookup)");
}

double concurrence_pure_cut(const PureTripartiteState& state) {
  const Eigen::VectorXd p = cut_spectrum(state);
  double pairs = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    for (Eigen::Index j = i + 1; j < p.size(); ++j) pairs += p[i] * p[j];
  }
  return 2.0 * std::sqrt(pairs);
}

Eigen::Vector4d spin_flip_spectrum(const DensityMatrix& rho) {
  require_two_qubit(rho, "spin-flip spectrum");
  const CMatrix& w = rho.factor();
  const CMatrix tau = w.transpose() * spin_flip_operator() * w;
  Eigen::JacobiSVD<CMatrix> svd(tau);
  const Eigen::VectorXd& s = svd.singularValues();
  Eigen::Vector4d out = Eigen::Vector4d::Zero();
  for (Eigen::Index i = 0; i < std::min<Eigen::Index>(4, s.size()); ++i) out[i] = s[i];
  return out;
}

double wootters_concurrence(const DensityMatrix& rho) {
  const Eigen::Vector4d s = spin_flip_spectrum(rho);
  return std::clamp(s[0] - s[1] - s[2] - s[3], 0.0, 1.0);
}

double concurrence_of_assistance(const DensityMatrix& rho) {
  const auto& ld = rho.local_dims();
  if (rho.dim() == 4) return std::min(spin_flip_spectrum(rho).sum(), 1.0);
  if (ld.size() == 2 && ld[0] == 2 && ld[1] > 2) return concurrence_of_assistance_numeric(rho);
  throw DomainError("concurrence of assistance requires a qubit (x) qudit state, got dim " +
                    std::to_string(rho.dim()));
}

double assistance_pure_cut(const PureTripartiteState& state) {
  if (state.dims()[0] != 2) {
    throw DomainError("concurrence of assistance of the A|BC cut is defined only for d_A = 2");
  }
  return concurrence_pure_cut(state);
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -(p * std::log2(p) + (1.0 - p) * std::log1p(-p) / std::numbers::ln2);
}

double eof_from_concurrence(double c) {
  c = std::clamp(c, 0.0, 1.0);
  // (1 - sqrt(1 - C^2)) / 2 written without cancellation.
  const double root = std::sqrt((1.0 - c) * (1.0 + c));
  return binary_entropy(c * c / (2.0 * (1.0 + root)));
}

double eof_two_qubit(const DensityMatrix& rho) {
  return eof_from_concurrence(wootters_concurrence(rho));
}

double cut_entropy(const PureTripartiteState& state) {
  const Eigen::VectorXd p = cut_spectrum(state);
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) s -= p[i] * std::log2(p[i]);
  }
  return s;
}

MeasureTriple entanglement_cost_lookup(std::string_view name) {
  if (name == "afs" || name == "antisymmetric_qutrit") {
    return {std::log2(3.0), 1.0, 1.0, MeasureId::EntanglementCostLookup};
  }
  throw DomainError("no tabulated E_C for '" + std::string(name) +
                    "' (entanglement cost is not computable in general)");
}

std::string identify_tabulated_state(const PureTripartiteState& state) {
  static const PureTripartiteState afs = antisymmetric_qutrit();
  if (fidelity(state, afs) > kTabulatedFidelity) return "afs";
  return {};
}

MeasureTriple measure_triple(const PureTripartiteState& state, MeasureId id) {
  const Dims& d = state.dims();
  switch (id) {
    case MeasureId::Concurrence: {
      require_qubit_pair(d, "concurrence");
      return {concurrence_pure_cut(state),
              wootters_concurrence(reduced_density(state, {Party::A, Party::B})),
              wootters_concurrence(reduced_density(state, {Party::A, Party::C})), id};
    }
    case MeasureId::EoF: {
      require_qubit_pair(d, "entanglement of formation");
      return {cut_entropy(state), eof_two_qubit(reduced_density(state, {Party::A, Party::B})),
              eof_two_qubit(reduced_density(state, {Party::A, Party::C})), id};
    }
    case MeasureId::ConcurrenceOfAssistance: {
      if (d[0] != 2 || d[1] < 2 || d[2] < 2) {
        throw DomainError("concurrence of assistance requires d_A = 2 and d_B, d_C >= 2");
      }
      return {assistance_pure_cut(state),
              concurrence_of_assistance(reduced_density(state, {Party::A, Party::B})),
              concurrence_of_assistance(reduced_density(state, {Party::A, Party::C})), id};
    }
    case MeasureId::EntanglementCostLookup: {
      const std::string name = identify_tabulated_state(state);
      if (name.empty()) {
        throw DomainError(
            "no tabulated E_C for this state (only the antisymmetric qutrit state 'afs' is "
            "tabulated)");
      }
      return entanglement_cost_lookup(name);
    }
  }
  throw InvalidArgument("unknown measure id");
}

}  // namespace mono
