#include "entrobounds/bounds.hpp"

#include <cmath>
#include <limits>

#include "entrobounds/errors.hpp"
#include "entrobounds/random.hpp"

namespace entrobounds {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

JointDistribution measurement_joint(const Ensemble& e, const POVM& povm) {
  const int na = e.size(), nw = povm.n_outcomes();
  std::vector<double> table(static_cast<size_t>(na) * nw);
  for (int a = 0; a < na; ++a)
    for (int w = 0; w < nw; ++w)
      table[static_cast<size_t>(a) * nw + w] =
          e.prior().weight(a) * trace_product(povm.element(w), e.state(a).mat()).real();
  return JointDistribution(e.prior().labels(), povm.outcomes(), std::move(table));
}

double chi_of(const std::vector<std::string>& labels, const std::vector<double>& weights,
              const std::vector<DensityMatrix>& states) {
  return chi_quantity(Ensemble(labels, weights, states));
}

// sum_w p_f(w) chi{p(.|w), a-posteriori states at w}: the average Holevo
// quantity of the conditional ensembles the measurement leaves behind.
double mean_a_posteriori_chi(const Ensemble& e, const Instrument& m) {
  const JointMarginals marg = joint_marginals(measurement_joint(e, povm_of(m)));
  double mean = 0.0;
  for (int w = 0; w < marg.col.size(); ++w) {
    if (marg.col.is_zero(w)) continue;
    std::vector<DensityMatrix> states;
    states.reserve(e.size());
    for (int a = 0; a < e.size(); ++a) states.push_back(a_posteriori(m, e.state(a), w).state);
    mean += marg.col.weight(w) *
            chi_of(marg.row.labels(), marg.row_given_col[w].weights(), states);
  }
  return mean;
}

// sum_a p(a) chi{p(.|a), a-posteriori states of letter a}: same average taken
// along the other margin.
double mean_letter_chi(const Ensemble& e, const Instrument& m) {
  const JointMarginals marg = joint_marginals(measurement_joint(e, povm_of(m)));
  double mean = 0.0;
  for (int a = 0; a < e.size(); ++a) {
    if (marg.row.is_zero(a)) continue;
    std::vector<DensityMatrix> states;
    std::vector<double> weights;
    for (int w = 0; w < marg.col.size(); ++w) {
      states.push_back(a_posteriori(m, e.state(a), w).state);
      weights.push_back(marg.col_given_row[a].weight(w));
    }
    mean += marg.row.weight(a) * chi_of(marg.col.labels(), weights, states);
  }
  return mean;
}

}  // namespace

double classical_info(const Ensemble& e, const POVM& povm) {
  return mutual_info_classical(measurement_joint(e, povm));
}

double holevo(const Ensemble& e) { return chi_quantity(e); }

SwwResult sww(const Ensemble& e, const Instrument& m) {
  const double b_hlv = holevo(e);
  const double mean = mean_a_posteriori_chi(e, m);
  const double b = b_hlv - mean;

  // Symmetric form: chi{p, rho} + chi{p_f, rho_f} - chi{p_if, rho_f^letter}.
  const HybridDecomposition final_hybrid = hybrid_decompose(channel_lambda_i(m, average_state(e)));
  const double chi_f = chi_of(final_hybrid.probs.labels(), final_hybrid.probs.weights(),
                              final_hybrid.states);
  const JointDistribution joint = measurement_joint(e, povm_of(m));
  std::vector<std::string> pair_labels;
  std::vector<double> pair_weights;
  std::vector<DensityMatrix> pair_states;
  for (int a = 0; a < joint.n_rows(); ++a)
    for (int w = 0; w < joint.n_cols(); ++w) {
      pair_labels.push_back(joint.rows()[a] + "," + joint.cols()[w]);
      pair_weights.push_back(joint.at(a, w));
      pair_states.push_back(a_posteriori(m, e.state(a), w).state);
    }
  const double chi_pair = chi_of(pair_labels, pair_weights, pair_states);
  const double b_sym = b_hlv + chi_f - chi_pair;
  if (std::abs(b - b_sym) > 1e-9)
    throw CheckFailure("SWW difference and symmetric forms disagree by " +
                       std::to_string(b - b_sym));
  return SwwResult{b, b_sym, mean};
}

double iq_gain(const Instrument& m, const DensityMatrix& eta) {
  const ProbVector p = outcome_probs(m, eta);
  double gain = vn_entropy(eta);
  for (int w = 0; w < m.n_outcomes(); ++w) {
    if (p.is_zero(w)) continue;
    gain -= p.weight(w) * vn_entropy(a_posteriori(m, eta, w).state);
  }
  return gain;
}

GroenewoldLindbladReport groenewold_lindblad_check(const Instrument& m, int trials,
                                                   uint64_t seed) {
  const int d = m.dim();
  GroenewoldLindbladReport rep{true, 0.0, std::numeric_limits<double>::infinity(),
                               std::numeric_limits<double>::infinity(), trials};
  for (int t = 0; t < trials; ++t) {
    Rng r(mix_seed(seed, t));
    const DensityMatrix pure = DensityMatrix::pure(random_pure(r, d));
    const ProbVector p = outcome_probs(m, pure);
    for (int w = 0; w < m.n_outcomes(); ++w) {
      if (p.is_zero(w)) continue;
      rep.max_apost_entropy =
          std::max(rep.max_apost_entropy, vn_entropy(a_posteriori(m, pure, w).state));
    }
  }
  rep.pure_preserving = rep.max_apost_entropy <= 1e-9;

  for (int t = 0; t < trials; ++t) {
    Rng r(mix_seed(seed, 1000000 + t));
    rep.min_iq_mixed = std::min(rep.min_iq_mixed, iq_gain(m, random_density(r, d)));
  }

  const POVM povm = povm_of(m);
  for (int t = 0; t < trials; ++t) {
    Rng r(mix_seed(seed, 2000000 + t));
    const Ensemble e = random_ensemble(r, d, r.uniform_int(2, 4));
    double lhs = iq_gain(m, average_state(e));
    for (int a = 0; a < e.size(); ++a)
      lhs -= e.prior().weight(a) * iq_gain(m, e.state(a));
    rep.min_gain_bound_slack =
        std::min(rep.min_gain_bound_slack, lhs - classical_info(e, povm));
  }
  return rep;
}

std::pair<double, double> lower_bounds(const Ensemble& e, const POVM& povm,
                                       const HallPackage& pkg) {
  (void)povm;
  const double b_nlb = chi_of(pkg.letters, e.prior().weights(), pkg.xi);
  const double b_scu = chi_of(pkg.outcomes, pkg.p_f.weights(), pkg.epsilon);
  return {b_nlb, b_scu};
}

HallBounds hall_and_nub(const Ensemble& e, const Instrument& m, const HallPackage& pkg) {
  (void)m;
  const double b_hall = chi_of(pkg.outcomes, pkg.p_f.weights(), pkg.sigma);
  double mean = 0.0;
  for (int w = 0; w < pkg.p_f.size(); ++w) {
    if (pkg.p_f.is_zero(w)) continue;
    const double iq = iq_gain(pkg.instrument_j, pkg.sigma[w]);
    if (iq < -1e-9)
      throw CheckFailure("dual instrument shows negative gain on a letter state");
    mean += pkg.p_f.weight(w) * iq;
  }
  const double b_hlv = holevo(e);
  const double anchor = iq_gain(pkg.instrument_j, average_state(e));
  if (std::abs(anchor - b_hlv) > 1e-9)
    throw CheckFailure("dual gain on the average state does not match the Holevo bound");
  return HallBounds{b_hall, b_hlv - mean, mean};
}

std::pair<double, double> b1_b2(const Ensemble& e, const Instrument& m, const HallPackage& pkg) {
  std::vector<DensityMatrix> eta_letters;
  eta_letters.reserve(e.size());
  for (int a = 0; a < e.size(); ++a) eta_letters.push_back(a_priori(m, e.state(a)));
  const double b1 =
      chi_of(pkg.letters, e.prior().weights(), eta_letters) - mean_a_posteriori_chi(e, m);

  const JointMarginals marg = joint_marginals(measurement_joint(e, povm_of(m)));
  double mean_dual = 0.0;
  for (int w = 0; w < marg.col.size(); ++w) {
    if (marg.col.is_zero(w)) continue;
    std::vector<DensityMatrix> states;
    states.reserve(e.size());
    for (int a = 0; a < e.size(); ++a)
      states.push_back(a_posteriori(pkg.instrument_j, pkg.sigma[w], a).state);
    mean_dual += marg.col.weight(w) *
                 chi_of(marg.row.labels(), marg.row_given_col[w].weights(), states);
  }
  const double b2 = holevo(e) - mean_dual;
  return {b1, b2};
}

TripartiteReport tripartite_final(const Ensemble& e, const Instrument& m) {
  const int na = e.size(), nw = m.n_outcomes();
  const int d = e.dim();

  TripartiteState state{e.prior().labels(), m.outcomes(), {}};
  state.blocks.reserve(static_cast<size_t>(na) * nw);
  for (int a = 0; a < na; ++a)
    for (int w = 0; w < nw; ++w)
      state.blocks.push_back(e.prior().weight(a) *
                             apply_operation(m.op(w), e.state(a).mat()));

  // Marginal block families; scalars live in 1x1 blocks so one relative
  // entropy routine serves every split.
  std::vector<Matrix> b012 = state.blocks;
  std::vector<Matrix> b01(na, Matrix(d)), b12(nw, Matrix(d));
  std::vector<Matrix> b02, b0(na, Matrix(1)), b2(nw, Matrix(1));
  Matrix eta_f(d);
  b02.reserve(b012.size());
  for (int a = 0; a < na; ++a)
    for (int w = 0; w < nw; ++w) {
      const Matrix& blk = state.block(a, w);
      b01[a] += blk;
      b12[w] += blk;
      Matrix tr(1);
      tr(0, 0) = blk.trace().real();
      b02.push_back(tr);
      b0[a](0, 0) += tr(0, 0);
      b2[w](0, 0) += tr(0, 0);
      eta_f += blk;
    }

  auto pair_product = [&](const std::function<Matrix(int, int)>& f) {
    std::vector<Matrix> out;
    out.reserve(b012.size());
    for (int a = 0; a < na; ++a)
      for (int w = 0; w < nw; ++w) out.push_back(f(a, w));
    return out;
  };

  TripartiteReport rep{state, {}, {}, {}, {}, {}, {}, {}, 0, 0, 0, 0};

  const JointDistribution joint = measurement_joint(e, povm_of(m));
  const double i_c = mutual_info_classical(joint);
  const double mac = mean_a_posteriori_chi(e, m);
  const double mlc = mean_letter_chi(e, m);

  // chi{p_f, rho_f} and chi{p, eta_f^letter} from the stored marginals.
  const HybridDecomposition dec12 = hybrid_decompose(HybridState(m.outcomes(), b12));
  const double chi_12 = chi_of(m.outcomes(), dec12.probs.weights(), dec12.states);
  const HybridDecomposition dec01 = hybrid_decompose(HybridState(e.prior().labels(), b01));
  const double chi_01 = chi_of(e.prior().labels(), dec01.probs.weights(), dec01.states);

  // chi{p_if, rho_f^letter} over the pair alphabet.
  {
    std::vector<std::string> labels;
    std::vector<double> weights;
    std::vector<DensityMatrix> states;
    for (int a = 0; a < na; ++a)
      for (int w = 0; w < nw; ++w) {
        labels.push_back(state.alphabet[a] + "," + state.outcomes[w]);
        const double p = state.block(a, w).trace().real();
        weights.push_back(std::max(p, 0.0));
        states.push_back(p > kZeroProb ? DensityMatrix((1.0 / p) * state.block(a, w))
                                       : DensityMatrix::maximally_mixed(d));
      }
    rep.me_02_1.chi_expr = chi_of(labels, weights, states);
  }

  rep.me_02 = {rel_entropy_blocks(b02, pair_product([&](int a, int w) {
                 Matrix t(1);
                 t(0, 0) = b0[a](0, 0) * b2[w](0, 0);
                 return t;
               })),
               i_c};
  rep.me_01.relent = rel_entropy_blocks(b01, [&] {
    std::vector<Matrix> out;
    for (int a = 0; a < na; ++a) out.push_back(b0[a](0, 0).real() * eta_f);
    return out;
  }());
  rep.me_01.chi_expr = chi_01;
  rep.me_12.relent = rel_entropy_blocks(b12, [&] {
    std::vector<Matrix> out;
    for (int w = 0; w < nw; ++w) out.push_back(b2[w](0, 0).real() * eta_f);
    return out;
  }());
  rep.me_12.chi_expr = chi_12;
  rep.me_02_1.relent = rel_entropy_blocks(
      b012, pair_product([&](int a, int w) {
        return std::max(state.block(a, w).trace().real(), 0.0) * eta_f;
      }));
  rep.me_0_12 = {rel_entropy_blocks(b012, pair_product([&](int a, int w) {
                   return b0[a](0, 0).real() * b12[w];
                 })),
                 i_c + mac};
  rep.me_01_2 = {rel_entropy_blocks(b012, pair_product([&](int a, int w) {
                   return b2[w](0, 0).real() * b01[a];
                 })),
                 i_c + mlc};
  rep.me_0_1_2 = {rel_entropy_blocks(b012, pair_product([&](int a, int w) {
                    return (b0[a](0, 0).real() * b2[w](0, 0).real()) * eta_f;
                  })),
                  i_c + rep.me_02_1.chi_expr};

  // Applying the instrument blockwise to the initial product state must land
  // exactly on the final (letter, system x outcome) marginals.
  double tensf = 0.0;
  const DensityMatrix eta_i = average_state(e);
  for (int a = 0; a < na; ++a)
    for (int w = 0; w < nw; ++w) {
      const Matrix lhs = e.prior().weight(a) * apply_operation(m.op(w), eta_i.mat());
      const Matrix rhs = b0[a](0, 0).real() * b12[w];
      tensf = std::max(tensf, (lhs - rhs).max_abs());
    }
  rep.tensf_residual = tensf;

  // Initial-time mutual entropy against chi{p, rho}.
  {
    std::vector<Matrix> init, init_prod;
    for (int a = 0; a < na; ++a) {
      init.push_back(e.prior().weight(a) * e.state(a).mat());
      init_prod.push_back(e.prior().weight(a) * eta_i.mat());
    }
    rep.initmentr_residual = std::abs(rel_entropy_blocks(init, init_prod) - holevo(e));
  }

  rep.idt1_residual = std::abs(rep.me_02_1.chi_expr - chi_12 - mac);
  rep.idt2_residual = std::abs(rep.me_02_1.chi_expr - chi_01 - mlc);
  return rep;
}

GammaReport gamma_channel_check(const Ensemble& e, const POVM& povm, const HallPackage& pkg) {
  const int na = e.size(), nw = povm.n_outcomes();
  const int d = e.dim();
  const JointDistribution joint = measurement_joint(e, povm);
  const DensityMatrix eta = average_state(e);

  std::vector<Matrix> g_joint(na, Matrix(d)), g_prod(na, Matrix(d));
  for (int a = 0; a < na; ++a)
    for (int w = 0; w < nw; ++w) {
      if (pkg.sigma_degenerate[w]) continue;
      g_joint[a] += joint.at(a, w) * pkg.sigma[w].mat();
      g_prod[a] += (e.prior().weight(a) * pkg.p_f.weight(w)) * pkg.sigma[w].mat();
    }

  GammaReport rep{0, 0, 0, 0};
  for (int a = 0; a < na; ++a) {
    rep.joint_residual = std::max(
        rep.joint_residual,
        (g_joint[a] - e.prior().weight(a) * pkg.xi[a].mat()).max_abs());
    rep.product_residual = std::max(
        rep.product_residual, (g_prod[a] - e.prior().weight(a) * eta.mat()).max_abs());
  }
  const double relent = rel_entropy_blocks(g_joint, g_prod);
  rep.nlb_match = std::abs(relent - chi_of(pkg.letters, e.prior().weights(), pkg.xi));
  rep.monotonicity_slack = mutual_info_classical(joint) - relent;
  return rep;
}

BoundsReport full_report(const Ensemble& e, const Instrument& m) {
  BoundsReport r;
  const POVM povm = povm_of(m);
  const JointDistribution joint = measurement_joint(e, povm);

  r.i_c = mutual_info_classical(joint);
  r.b_hlv = holevo(e);
  const SwwResult s = sww(e, m);
  r.b_sww = s.b_sww;
  r.mean_apost_chi = s.mean_apost_chi;

  const DensityMatrix eta = average_state(e);
  r.iq_eta = iq_gain(m, eta);
  r.b_subent = subentropy(eta);
  for (int a = 0; a < e.size(); ++a)
    r.b_subent -= e.prior().weight(a) * subentropy(e.state(a));

  for (int a = 0; a < joint.n_rows(); ++a)
    for (int w = 0; w < joint.n_cols(); ++w)
      if (joint.at(a, w) <= kZeroProb) r.zero_prob_flagged = true;

  try {
    const HallPackage pkg = build_hall(e, povm);
    const auto [b_nlb, b_scu] = lower_bounds(e, povm, pkg);
    r.b_nlb = b_nlb;
    r.b_scu = b_scu;
    const HallBounds hb = hall_and_nub(e, m, pkg);
    r.b_hall = hb.b_hall;
    r.b_nub = hb.b_nub;
    r.mean_iq_j = hb.mean_iq_j;
    const auto [b1, b2] = b1_b2(e, m, pkg);
    r.b1 = b1;
    r.b2 = b2;
  } catch (const SingularAverageState&) {
    r.hall_available = false;
    r.b_hall = r.b_nub = r.b_nlb = r.b_scu = r.b2 = r.mean_iq_j = kNan;
    // b1 needs no dual package.
    std::vector<DensityMatrix> eta_letters;
    for (int a = 0; a < e.size(); ++a) eta_letters.push_back(a_priori(m, e.state(a)));
    r.b1 = chi_of(e.prior().labels(), e.prior().weights(), eta_letters) - r.mean_apost_chi;
  }
  return r;
}

std::vector<InvariantCheck> report_invariants(const BoundsReport& r) {
  std::vector<InvariantCheck> checks;
  const auto add = [&](const std::string& name, double slack) {
    checks.push_back(InvariantCheck{name, slack, slack >= -1e-9});
  };
  add("I_c >= 0", r.i_c);
  add("I_c <= B_SWW", r.b_sww - r.i_c);
  add("B_SWW <= B_Hlv", r.b_hlv - r.b_sww);
  add("b_subent >= 0", r.b_subent);
  add("b_subent <= B_Hlv", r.b_hlv - r.b_subent);
  add("b1 <= I_c", r.i_c - r.b1);
  if (r.hall_available) {
    add("b_nlb >= 0", r.b_nlb);
    add("b_nlb <= I_c", r.i_c - r.b_nlb);
    add("b_Scu >= 0", r.b_scu);
    add("b_Scu <= I_c", r.i_c - r.b_scu);
    add("I_c <= B_nub", r.b_nub - r.i_c);
    add("B_nub <= B_Hall", r.b_hall - r.b_nub);
    add("B_nub <= B_Hlv", r.b_hlv - r.b_nub);
    add("b2 <= I_c", r.i_c - r.b2);
  }
  return checks;
}

}  // namespace entrobounds
