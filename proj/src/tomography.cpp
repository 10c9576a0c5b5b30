#include "cohsim/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "cohsim/measures.hpp"

namespace cohsim {

namespace {

Eigen::Vector2cd basis_ket(char symbol) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (symbol) {
    case 'H': return {1, 0};
    case 'V': return {0, 1};
    case 'D': return {s, s};
    case 'A': return {s, -s};
    case 'R': return {s, cplx(0, s)};
    case 'L': return {s, cplx(0, -s)};
  }
  throw std::invalid_argument("unknown basis symbol");
}

int basis_index(char symbol) {
  switch (symbol) {
    case 'H': case 'V': return 0;
    case 'D': case 'A': return 1;
    case 'R': case 'L': return 2;
  }
  throw std::invalid_argument("unknown basis symbol");
}

double mean_count(const TwoQubitState& rho, const Projector& p,
                  long n_per_setting) {
  double prob = (rho.matrix() * p.op).trace().real();
  return static_cast<double>(n_per_setting) * std::max(0.0, prob);
}

// Frequencies aligned with the projector order of `set`; normalized per
// measurement setting.
std::vector<double> frequencies(const std::vector<MeasurementRecord>& records,
                                const ProjectorSet& set) {
  std::map<std::string, double> by_label;
  std::map<int, double> setting_totals;
  for (const auto& r : records) {
    if (r.counts < 0) throw std::invalid_argument("negative counts");
    by_label[r.label] = r.counts;
    setting_totals[r.setting] += r.counts;
  }
  std::vector<double> f;
  f.reserve(set.projectors().size());
  for (const auto& p : set.projectors()) {
    auto it = by_label.find(p.label);
    if (it == by_label.end()) {
      throw std::invalid_argument("records do not cover projector " + p.label);
    }
    double total = setting_totals[p.setting];
    f.push_back(total > 0 ? it->second / total : 0.0);
  }
  return f;
}

double log_likelihood(const std::vector<double>& f,
                      const std::vector<double>& probs) {
  double ll = 0;
  for (size_t k = 0; k < f.size(); ++k) {
    if (f[k] > 0) ll += f[k] * std::log(std::max(probs[k], 1e-300));
  }
  return ll;
}

}  // namespace

ProjectorSet ProjectorSet::standard36() {
  static const char symbols[] = {'H', 'V', 'D', 'A', 'R', 'L'};
  ProjectorSet set;
  for (char sa : symbols) {
    for (char sb : symbols) {
      Eigen::Vector2cd ka = basis_ket(sa);
      Eigen::Vector2cd kb = basis_ket(sb);
      Vec4 ket;
      ket << ka(0) * kb(0), ka(0) * kb(1), ka(1) * kb(0), ka(1) * kb(1);
      Projector p;
      p.label = std::string{sa, sb};
      p.op = ket * ket.adjoint();
      p.setting = basis_index(sa) * 3 + basis_index(sb);
      set.projs_.push_back(std::move(p));
    }
  }
  return set;
}

std::vector<MeasurementRecord> expected_counts(const TwoQubitState& rho,
                                               const ProjectorSet& set,
                                               long n_per_setting) {
  std::vector<MeasurementRecord> out;
  out.reserve(set.projectors().size());
  for (const auto& p : set.projectors()) {
    out.push_back({p.label, mean_count(rho, p, n_per_setting),
                   static_cast<double>(n_per_setting), p.setting});
  }
  return out;
}

std::vector<MeasurementRecord> simulate_counts(const TwoQubitState& rho,
                                               const ProjectorSet& set,
                                               long n_per_setting,
                                               std::uint64_t seed) {
  if (n_per_setting <= 0) throw std::invalid_argument("n_per_setting must be > 0");
  std::mt19937_64 rng(seed);
  std::vector<MeasurementRecord> out;
  out.reserve(set.projectors().size());
  for (const auto& p : set.projectors()) {
    double mean = mean_count(rho, p, n_per_setting);
    double counts = 0;
    if (mean > 0) {
      std::poisson_distribution<long> poisson(mean);
      counts = static_cast<double>(poisson(rng));
    }
    out.push_back({p.label, counts, static_cast<double>(n_per_setting),
                   p.setting});
  }
  return out;
}

MleResult mle_reconstruct(const std::vector<MeasurementRecord>& records,
                          const ProjectorSet& set, MleOptions opts) {
  const auto& projs = set.projectors();
  const std::vector<double> f = frequencies(records, set);

  Mat4 rho = 0.25 * Mat4::Identity();
  std::vector<double> probs(projs.size());
  bool diluted = false;
  bool monotone = true;
  double prev_ll = -std::numeric_limits<double>::infinity();
  int iter = 0;
  bool converged = false;

  for (; iter < opts.max_iter; ++iter) {
    for (size_t k = 0; k < projs.size(); ++k) {
      probs[k] = std::max((rho * projs[k].op).trace().real(), 0.0);
    }
    Mat4 r_op = Mat4::Zero();
    for (size_t k = 0; k < projs.size(); ++k) {
      if (f[k] <= 0) continue;
      if (probs[k] < 1e-14) {
        // Nonzero counts on a zero-probability projector stall the plain
        // update; switch to the diluted iteration.
        diluted = true;
        continue;
      }
      r_op += (f[k] / probs[k]) * projs[k].op;
    }

    Mat4 next = r_op * rho * r_op;
    if (diluted) next = (1.0 - opts.dilution) * rho + opts.dilution * next;
    double tr = next.trace().real();
    if (tr <= 0) break;
    next /= tr;

    double ll = log_likelihood(f, probs);
    if (ll < prev_ll - 1e-12) {
      monotone = false;
      diluted = true;
    }
    prev_ll = ll;

    double delta = (next - rho).cwiseAbs().maxCoeff();
    rho = next;
    if (delta < opts.tol) {
      converged = true;
      ++iter;
      break;
    }
  }

  MleResult res{TwoQubitState::projected_to_physical(rho), converged, iter,
                prev_ll, monotone};
  return res;
}

UncertaintyReport resample_uncertainty(
    const std::vector<MeasurementRecord>& records, const ProjectorSet& set,
    int replicates, std::uint64_t seed, MleOptions opts) {
  if (replicates < 10) throw std::invalid_argument("replicates must be >= 10");
  std::mt19937_64 rng(seed);

  std::vector<double> da, db, t2, s2;
  std::vector<MeasurementRecord> draw = records;
  for (int r = 0; r < replicates; ++r) {
    for (size_t k = 0; k < records.size(); ++k) {
      double mean = records[k].counts;
      if (mean > 0) {
        std::poisson_distribution<long> poisson(mean);
        draw[k].counts = static_cast<double>(poisson(rng));
      } else {
        draw[k].counts = 0;
      }
    }
    TwoQubitState rho = mle_reconstruct(draw, set, opts).state;
    da.push_back(std::sqrt(std::max(
        0.0, local_coherence_sq(partial_trace(rho, Subsystem::A)))));
    db.push_back(std::sqrt(std::max(
        0.0, local_coherence_sq(partial_trace(rho, Subsystem::B)))));
    t2.push_back(correlation_T2(rho));
    s2.push_back(accessible_coherence_S2(rho));
  }

  auto stddev = [](const std::vector<double>& xs) {
    double mean = 0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double var = 0;
    for (double x : xs) var += (x - mean) * (x - mean);
    return std::sqrt(var / static_cast<double>(xs.size() - 1));
  };
  return {stddev(da), stddev(db), stddev(t2), stddev(s2)};
}

void write_counts_csv(const std::string& path,
                      const std::vector<MeasurementRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "label,setting,counts,total_per_setting\n";
  for (const auto& r : records) {
    out << r.label << ',' << r.setting << ',' << r.counts << ','
        << r.total_per_setting << '\n';
  }
}

std::vector<MeasurementRecord> read_counts_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty counts file");
  std::vector<MeasurementRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    MeasurementRecord r;
    std::string field;
    if (!std::getline(ss, r.label, ',')) continue;
    std::getline(ss, field, ',');
    r.setting = std::stoi(field);
    std::getline(ss, field, ',');
    r.counts = std::stod(field);
    std::getline(ss, field, ',');
    r.total_per_setting = std::stod(field);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cohsim
