#include "gridfit/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridfit {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
    case LpStatus::NumericalFailure: return "NumericalFailure";
  }
  return "unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct InternalResult {
  LpSolution solution;
  Eigen::VectorXd dual;  // length N; nonzero only on rows basic at the end
};

InternalResult solve_internal(const RowMatrixXd& A, const Eigen::VectorXd& b,
                              const Eigen::VectorXd& c, const LpTolerances& tol,
                              bool allow_aux);

// Revised simplex on the dual of  min c.x s.t. Ax <= b  (x free):
//
//   min b.w   s.t.   A^T w = -c,   w >= 0.
//
// Columns 0..N-1 are the rows of A; columns N..N+d-1 are phase-1 artificials
// (sign-matched unit columns). The d x d working basis is refactorized every
// iteration with full-pivot LU; with d small this is cheaper than keeping an
// updated inverse honest. Pricing all N columns per iteration is one
// mat-vec: reduced cost of column j is cost_j - a_j.pi, which in phase 2 is
// exactly the primal residual b_j - a_j.pi of the multiplier vector pi.
class DualSimplex {
 public:
  DualSimplex(const RowMatrixXd& A, const Eigen::VectorXd& b,
              const Eigen::VectorXd& c, const LpTolerances& tol)
      : A_(A),
        b_(b),
        c_(c),
        tol_(tol),
        N_(A.rows()),
        d_(A.cols()),
        rhs_(-c),
        max_iterations_(50 * (N_ + d_) + 100),
        bland_after_(10 * (N_ + d_) + 100) {}

  InternalResult run(bool allow_aux);

 private:
  enum class PhaseOutcome { Optimal, Unbounded, Singular, IterationLimit };

  [[nodiscard]] double cost(Eigen::Index j, int phase) const {
    if (j < N_) return phase == 1 ? 0.0 : b_[j];
    return phase == 1 ? 1.0 : 0.0;
  }

  [[nodiscard]] Eigen::VectorXd column(Eigen::Index j) const {
    if (j < N_) return A_.row(j).transpose();
    Eigen::VectorXd e = Eigen::VectorXd::Zero(d_);
    e[j - N_] = art_sign_[static_cast<std::size_t>(j - N_)];
    return e;
  }

  void factorize() {
    for (Eigen::Index k = 0; k < d_; ++k) {
      WB_.col(k) = column(basis_[static_cast<std::size_t>(k)]);
    }
  }

  PhaseOutcome run_phase(int phase);
  InternalResult classify_dual_infeasible(bool allow_aux);
  void drive_out_artificials();

  const RowMatrixXd& A_;
  const Eigen::VectorXd& b_;
  const Eigen::VectorXd& c_;
  LpTolerances tol_;
  Eigen::Index N_, d_;
  Eigen::VectorXd rhs_;

  std::vector<double> art_sign_;
  std::vector<Eigen::Index> basis_;  // length d, values in [0, N+d)
  std::vector<char> in_basis_;       // length N+d
  std::vector<char> art_alive_;      // artificial may still enter (phase 1)

  long iterations_ = 0;
  long max_iterations_, bland_after_;
  bool bland_ = false;
  long stall_ = 0;
  double best_objective_ = kInf;

  Eigen::MatrixXd WB_{0, 0};
  Eigen::VectorXd wB_, pi_, priced_;
  Eigen::Index unbounded_entering_ = -1;
  Eigen::VectorXd unbounded_dir_;
};

DualSimplex::PhaseOutcome DualSimplex::run_phase(int phase) {
  best_objective_ = kInf;
  stall_ = 0;
  Eigen::VectorXd fB(d_);

  for (;;) {
    if (iterations_ >= max_iterations_) return PhaseOutcome::IterationLimit;

    factorize();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(WB_);
    if (lu.rank() < d_) return PhaseOutcome::Singular;
    wB_ = lu.solve(rhs_);

    double objective = 0;
    for (Eigen::Index k = 0; k < d_; ++k) {
      fB[k] = cost(basis_[static_cast<std::size_t>(k)], phase);
      objective += fB[k] * wB_[k];
    }
    if (objective < best_objective_ - 1e-12 * (1.0 + std::abs(best_objective_))) {
      best_objective_ = objective;
      stall_ = 0;
    } else if (++stall_ > bland_after_) {
      bland_ = true;
    }

    Eigen::FullPivLU<Eigen::MatrixXd> luT(WB_.transpose());
    pi_ = luT.solve(fB);

    // Pricing. Lowest index wins ties (and is the sole criterion under Bland).
    priced_.noalias() = A_ * pi_;
    Eigen::Index entering = -1;
    double best = -tol_.optimality;
    for (Eigen::Index j = 0; j < N_; ++j) {
      if (in_basis_[static_cast<std::size_t>(j)]) continue;
      const double reduced = (phase == 2 ? b_[j] : 0.0) - priced_[j];
      if (reduced < best) {
        best = reduced;
        entering = j;
        if (bland_) break;
      }
    }
    if (phase == 1 && !(bland_ && entering != -1)) {
      for (Eigen::Index i = 0; i < d_; ++i) {
        const Eigen::Index j = N_ + i;
        if (in_basis_[static_cast<std::size_t>(j)]) continue;
        if (!art_alive_[static_cast<std::size_t>(i)]) continue;
        const double reduced = 1.0 - art_sign_[static_cast<std::size_t>(i)] * pi_[i];
        if (reduced < best) {
          best = reduced;
          entering = j;
          if (bland_) break;
        }
      }
    }
    if (entering == -1) return PhaseOutcome::Optimal;

    const Eigen::VectorXd dir = lu.solve(column(entering));

    // Ratio test; basic artificials are not allowed to grow above zero.
    Eigen::Index leave_pos = -1;
    double theta = kInf;
    for (Eigen::Index k = 0; k < d_; ++k) {
      const double dk = dir[k];
      const double wk = std::max(wB_[k], 0.0);
      double candidate;
      if (dk > tol_.pivot) {
        candidate = wk / dk;
      } else if (basis_[static_cast<std::size_t>(k)] >= N_ && dk < -tol_.pivot) {
        candidate = 0.0;
      } else {
        continue;
      }
      if (candidate < theta ||
          (candidate == theta && leave_pos >= 0 &&
           basis_[static_cast<std::size_t>(k)] <
               basis_[static_cast<std::size_t>(leave_pos)])) {
        theta = candidate;
        leave_pos = k;
      }
    }
    if (leave_pos == -1) {
      unbounded_entering_ = entering;
      unbounded_dir_ = dir;
      return PhaseOutcome::Unbounded;
    }

    const Eigen::Index leaving = basis_[static_cast<std::size_t>(leave_pos)];
    in_basis_[static_cast<std::size_t>(leaving)] = 0;
    if (leaving >= N_) art_alive_[static_cast<std::size_t>(leaving - N_)] = 0;
    basis_[static_cast<std::size_t>(leave_pos)] = entering;
    in_basis_[static_cast<std::size_t>(entering)] = 1;
    ++iterations_;
  }
}

// Replaces basic artificials at level zero by real columns where possible.
// A row that admits no pivot is redundant; its artificial stays basic with
// zero cost and cannot re-enter elsewhere.
void DualSimplex::drive_out_artificials() {
  for (Eigen::Index pos = 0; pos < d_; ++pos) {
    if (basis_[static_cast<std::size_t>(pos)] < N_) continue;
    factorize();
    Eigen::FullPivLU<Eigen::MatrixXd> luT(WB_.transpose());
    Eigen::VectorXd e = Eigen::VectorXd::Zero(d_);
    e[pos] = 1.0;
    const Eigen::VectorXd v = luT.solve(e);
    const Eigen::VectorXd scores = A_ * v;  // (W_B^{-1} a_j)[pos]
    Eigen::Index best_col = -1;
    double best_mag = std::max(tol_.pivot, 1e-8);
    for (Eigen::Index j = 0; j < N_; ++j) {
      if (in_basis_[static_cast<std::size_t>(j)]) continue;
      const double mag = std::abs(scores[j]);
      if (mag > best_mag) {
        best_mag = mag;
        best_col = j;
      }
    }
    if (best_col == -1) continue;
    const Eigen::Index leaving = basis_[static_cast<std::size_t>(pos)];
    in_basis_[static_cast<std::size_t>(leaving)] = 0;
    art_alive_[static_cast<std::size_t>(leaving - N_)] = 0;
    basis_[static_cast<std::size_t>(pos)] = best_col;
    in_basis_[static_cast<std::size_t>(best_col)] = 1;
  }
}

// Dual infeasibility means the primal is unbounded or infeasible. An
// auxiliary program  min t  s.t.  Ax - t <= b, t >= 0  is always feasible
// and bounded, so it decides which: optimum ~0 means a feasible x exists.
InternalResult DualSimplex::classify_dual_infeasible(bool allow_aux) {
  InternalResult res;
  res.solution.iterations = iterations_;
  if (!allow_aux) {
    res.solution.status = LpStatus::NumericalFailure;
    res.solution.message = "auxiliary feasibility probe is itself dual-infeasible";
    return res;
  }

  const Eigen::VectorXd ray = pi_;  // phase-1 multipliers: A ray <= 0, c.ray < 0

  RowMatrixXd A_aux(N_ + 1, d_ + 1);
  A_aux.topLeftCorner(N_, d_) = A_;
  A_aux.topRightCorner(N_, 1).setConstant(-1.0);
  A_aux.bottomLeftCorner(1, d_).setZero();
  A_aux(N_, d_) = -1.0;
  Eigen::VectorXd b_aux(N_ + 1);
  b_aux.head(N_) = b_;
  b_aux[N_] = 0.0;
  Eigen::VectorXd c_aux = Eigen::VectorXd::Zero(d_ + 1);
  c_aux[d_] = 1.0;

  InternalResult aux = solve_internal(A_aux, b_aux, c_aux, tol_, false);
  res.solution.iterations = iterations_ + aux.solution.iterations;
  if (aux.solution.status != LpStatus::Optimal) {
    res.solution.status = LpStatus::NumericalFailure;
    res.solution.message = std::string("auxiliary feasibility probe failed: ") +
                           aux.solution.message;
    return res;
  }

  const double rhs_scale = 1.0 + b_.cwiseAbs().maxCoeff();
  if (aux.solution.objective_value <= tol_.feasibility * rhs_scale) {
    // Feasible, so unbounded. Verify both certificates before claiming it.
    const Eigen::VectorXd x_feas = aux.solution.x.head(d_);
    const double feas_viol = (A_ * x_feas - b_).maxCoeff();
    const double ray_scale = 1.0 + ray.cwiseAbs().maxCoeff();
    const double ray_viol = (A_ * ray).maxCoeff();
    const double ray_descent = c_.dot(ray);
    if (feas_viol <= 1e-6 * rhs_scale && ray_viol <= 1e-6 * ray_scale &&
        ray_descent < 0.0) {
      res.solution.status = LpStatus::Unbounded;
      res.solution.message = "feasible point and improving ray verified";
    } else {
      res.solution.status = LpStatus::NumericalFailure;
      res.solution.message = "unbounded candidate failed certificate check";
    }
    return res;
  }

  // Infeasible; the auxiliary dual solution is a Farkas certificate.
  const Eigen::VectorXd y = aux.dual.head(N_);
  const double y_scale = 1.0 + y.cwiseAbs().sum();
  const double combo = (A_.transpose() * y).cwiseAbs().maxCoeff();
  if (y.minCoeff() >= -tol_.feasibility && combo <= 1e-6 * y_scale &&
      b_.dot(y) < 0.0) {
    res.solution.status = LpStatus::Infeasible;
    res.solution.message = "Farkas certificate verified";
  } else {
    res.solution.status = LpStatus::NumericalFailure;
    res.solution.message = "infeasibility candidate failed certificate check";
  }
  return res;
}

InternalResult DualSimplex::run(bool allow_aux) {
  art_sign_.assign(static_cast<std::size_t>(d_), 1.0);
  basis_.assign(static_cast<std::size_t>(d_), 0);
  in_basis_.assign(static_cast<std::size_t>(N_ + d_), 0);
  art_alive_.assign(static_cast<std::size_t>(d_), 1);
  WB_.resize(d_, d_);
  priced_.resize(N_);
  for (Eigen::Index i = 0; i < d_; ++i) {
    art_sign_[static_cast<std::size_t>(i)] = rhs_[i] >= 0.0 ? 1.0 : -1.0;
    basis_[static_cast<std::size_t>(i)] = N_ + i;
    in_basis_[static_cast<std::size_t>(N_ + i)] = 1;
  }

  InternalResult res;
  LpSolution& sol = res.solution;

  const PhaseOutcome out1 = run_phase(1);
  sol.iterations = iterations_;
  if (out1 != PhaseOutcome::Optimal) {
    sol.status = LpStatus::NumericalFailure;
    sol.message = out1 == PhaseOutcome::IterationLimit
                      ? "iteration cap reached in phase 1"
                      : (out1 == PhaseOutcome::Singular
                             ? "singular working basis in phase 1"
                             : "phase 1 reported unbounded");
    return res;
  }

  double artificial_mass = 0;
  for (Eigen::Index k = 0; k < d_; ++k) {
    if (basis_[static_cast<std::size_t>(k)] >= N_) {
      artificial_mass += std::max(wB_[k], 0.0);
    }
  }
  if (artificial_mass > tol_.feasibility * (1.0 + c_.cwiseAbs().sum())) {
    return classify_dual_infeasible(allow_aux);
  }

  drive_out_artificials();

  const PhaseOutcome out2 = run_phase(2);
  sol.iterations = iterations_;
  if (out2 == PhaseOutcome::IterationLimit || out2 == PhaseOutcome::Singular) {
    sol.status = LpStatus::NumericalFailure;
    sol.message = out2 == PhaseOutcome::IterationLimit
                      ? "iteration cap reached in phase 2"
                      : "singular working basis in phase 2";
    return res;
  }

  if (out2 == PhaseOutcome::Unbounded) {
    // Dual unbounded: the improving dual ray is a Farkas certificate of
    // primal infeasibility.
    Eigen::VectorXd y = Eigen::VectorXd::Zero(N_);
    y[unbounded_entering_] = 1.0;
    for (Eigen::Index k = 0; k < d_; ++k) {
      const Eigen::Index j = basis_[static_cast<std::size_t>(k)];
      if (j < N_) y[j] = std::max(-unbounded_dir_[k], 0.0);
    }
    const double y_scale = 1.0 + y.cwiseAbs().sum();
    const double combo = (A_.transpose() * y).cwiseAbs().maxCoeff();
    if (combo <= 1e-6 * y_scale && b_.dot(y) < 0.0) {
      sol.status = LpStatus::Infeasible;
      sol.message = "Farkas certificate verified";
    } else {
      sol.status = LpStatus::NumericalFailure;
      sol.message = "infeasibility candidate failed certificate check";
    }
    return res;
  }

  // Optimal: the multipliers are the primal solution.
  sol.status = LpStatus::Optimal;
  sol.x = pi_;
  sol.objective_value = c_.dot(pi_);
  res.dual = Eigen::VectorXd::Zero(N_);
  for (Eigen::Index k = 0; k < d_; ++k) {
    const Eigen::Index j = basis_[static_cast<std::size_t>(k)];
    if (j < N_) res.dual[j] = std::max(wB_[k], 0.0);
  }
  const double viol = (A_ * pi_ - b_).maxCoeff();
  if (viol > 100.0 * tol_.feasibility * (1.0 + pi_.cwiseAbs().maxCoeff())) {
    sol.status = LpStatus::NumericalFailure;
    sol.message = "optimal candidate violates constraints (max " +
                  std::to_string(viol) + ")";
    sol.x.resize(0);
  }
  return res;
}

InternalResult solve_internal(const RowMatrixXd& A, const Eigen::VectorXd& b,
                              const Eigen::VectorXd& c, const LpTolerances& tol,
                              bool allow_aux) {
  DualSimplex solver(A, b, c, tol);
  return solver.run(allow_aux);
}

void validate_program(const LinearProgram& lp) {
  const Eigen::Index d = lp.num_variables();
  if (d < 1) throw std::invalid_argument("lp: objective is empty");
  if (!lp.objective.allFinite()) throw std::invalid_argument("lp: non-finite objective");
  if (lp.constraints.rows() != lp.rhs.size()) {
    throw std::invalid_argument("lp: constraint rows and rhs length differ");
  }
  if (lp.constraints.rows() > 0 && lp.constraints.cols() != d) {
    throw std::invalid_argument("lp: constraint column count does not match objective");
  }
  if (lp.constraints.size() > 0 && !lp.constraints.allFinite()) {
    throw std::invalid_argument("lp: non-finite constraint entry");
  }
  if (lp.rhs.size() > 0 && !lp.rhs.allFinite()) {
    throw std::invalid_argument("lp: non-finite rhs entry");
  }
  for (const auto* bounds : {&lp.lower_bounds, &lp.upper_bounds}) {
    if (bounds->size() != 0 && bounds->size() != d) {
      throw std::invalid_argument("lp: bounds length must be 0 or d");
    }
    for (Eigen::Index i = 0; i < bounds->size(); ++i) {
      if (std::isnan((*bounds)[i])) throw std::invalid_argument("lp: NaN bound");
    }
  }
}

}  // namespace

LpSolution solve(const LinearProgram& lp, const LpTolerances& tolerances) {
  validate_program(lp);
  const Eigen::Index d = lp.num_variables();
  const Eigen::Index n = lp.num_constraints();

  // Materialize finite variable bounds as ordinary rows.
  Eigen::Index extra = 0;
  for (Eigen::Index i = 0; i < lp.lower_bounds.size(); ++i) {
    if (lp.lower_bounds[i] > -kInf) ++extra;
  }
  for (Eigen::Index i = 0; i < lp.upper_bounds.size(); ++i) {
    if (lp.upper_bounds[i] < kInf) ++extra;
  }
  if (lp.lower_bounds.size() == d && lp.upper_bounds.size() == d) {
    for (Eigen::Index i = 0; i < d; ++i) {
      if (lp.lower_bounds[i] > lp.upper_bounds[i]) {
        LpSolution sol;
        sol.status = LpStatus::Infeasible;
        sol.message = "contradictory bounds on variable " + std::to_string(i);
        return sol;
      }
    }
  }

  RowMatrixXd A(n + extra, d);
  Eigen::VectorXd b(n + extra);
  if (n > 0) {
    A.topRows(n) = lp.constraints;
    b.head(n) = lp.rhs;
  }
  Eigen::Index row = n;
  for (Eigen::Index i = 0; i < lp.upper_bounds.size(); ++i) {
    if (lp.upper_bounds[i] < kInf) {
      A.row(row).setZero();
      A(row, i) = 1.0;
      b[row] = lp.upper_bounds[i];
      ++row;
    }
  }
  for (Eigen::Index i = 0; i < lp.lower_bounds.size(); ++i) {
    if (lp.lower_bounds[i] > -kInf) {
      A.row(row).setZero();
      A(row, i) = -1.0;
      b[row] = -lp.lower_bounds[i];
      ++row;
    }
  }

  if (A.rows() == 0) {
    LpSolution sol;
    if (lp.objective.lpNorm<Eigen::Infinity>() == 0.0) {
      sol.status = LpStatus::Optimal;
      sol.x = Eigen::VectorXd::Zero(d);
      sol.objective_value = 0.0;
    } else {
      sol.status = LpStatus::Unbounded;
      sol.message = "no constraints and a nonzero objective";
    }
    return sol;
  }

  return solve_internal(A, b, lp.objective, tolerances, true).solution;
}

LpVerification verify_solution(const LinearProgram& lp,
                               const LpSolution& solution,
                               const LpTolerances& tolerances) {
  LpVerification v;
  if (solution.status != LpStatus::Optimal || solution.x.size() != lp.num_variables()) {
    return v;
  }
  v.max_violation = -kInf;
  if (lp.num_constraints() > 0) {
    const Eigen::VectorXd residual = lp.constraints * solution.x - lp.rhs;
    v.max_violation = residual.maxCoeff(&v.worst_row);
  }
  for (Eigen::Index i = 0; i < lp.lower_bounds.size(); ++i) {
    v.max_violation = std::max(v.max_violation, lp.lower_bounds[i] - solution.x[i]);
  }
  for (Eigen::Index i = 0; i < lp.upper_bounds.size(); ++i) {
    v.max_violation = std::max(v.max_violation, solution.x[i] - lp.upper_bounds[i]);
  }
  if (v.max_violation == -kInf) v.max_violation = 0.0;
  const double recomputed = lp.objective.dot(solution.x);
  v.objective_error = std::abs(solution.objective_value - recomputed);
  v.pass = v.max_violation <= tolerances.feasibility &&
           v.objective_error <= 1e-9 * (1.0 + std::abs(recomputed));
  return v;
}

void write_lp_text(const LinearProgram& lp, std::ostream& out) {
  const auto precision = out.precision(17);
  Eigen::Index extra = 0;
  for (Eigen::Index i = 0; i < lp.lower_bounds.size(); ++i) {
    if (lp.lower_bounds[i] > -kInf) ++extra;
  }
  for (Eigen::Index i = 0; i < lp.upper_bounds.size(); ++i) {
    if (lp.upper_bounds[i] < kInf) ++extra;
  }
  out << "gridfit-lp 1\n";
  out << "vars " << lp.num_variables() << "\n";
  out << "rows " << lp.num_constraints() + extra << "\n";
  out << "objective";
  for (Eigen::Index i = 0; i < lp.objective.size(); ++i) out << " " << lp.objective[i];
  out << "\n";
  for (Eigen::Index r = 0; r < lp.num_constraints(); ++r) {
    out << "row";
    for (Eigen::Index i = 0; i < lp.constraints.cols(); ++i) {
      out << " " << lp.constraints(r, i);
    }
    out << " " << lp.rhs[r] << "\n";
  }
  for (Eigen::Index i = 0; i < lp.upper_bounds.size(); ++i) {
    if (lp.upper_bounds[i] >= kInf) continue;
    out << "row";
    for (Eigen::Index k = 0; k < lp.num_variables(); ++k) {
      out << " " << (k == i ? 1.0 : 0.0);
    }
    out << " " << lp.upper_bounds[i] << "\n";
  }
  for (Eigen::Index i = 0; i < lp.lower_bounds.size(); ++i) {
    if (lp.lower_bounds[i] <= -kInf) continue;
    out << "row";
    for (Eigen::Index k = 0; k < lp.num_variables(); ++k) {
      out << " " << (k == i ? -1.0 : 0.0);
    }
    out << " " << -lp.lower_bounds[i] << "\n";
  }
  out.precision(precision);
}

}  // namespace gridfit
