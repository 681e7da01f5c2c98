// Copyright (c) 2026 camgeom contributors
// SPDX-License-Identifier: MIT

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "camgeom/calib/calibrate.hpp"

namespace camgeom {

namespace {

constexpr double kLambdaFloor = 1e-12;
constexpr double kLambdaCeil = 1e14;

bool params_ok(const CameraModel& model) {
  try {
    validate(model);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

struct LmOutcome {
  Eigen::VectorXd x;
  int iterations = 0;
  bool converged = false;
  double cost = 0.0;
};

// Levenberg-Marquardt with a central-difference Jacobian. `eval` fills the
// residual vector and returns false when some residual is undefined (a
// projection-domain violation); such trial steps are rejected with increased
// damping. `retract` commits an accepted state (re-anchoring any locally
// parameterized blocks) and returns the parameter vector to iterate from.
LmOutcome run_lm(int n_res, const Eigen::VectorXd& x0,
                 const std::function<bool(const Eigen::VectorXd&, Eigen::VectorXd&)>& eval,
                 const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& retract,
                 const OptimizerConfig& cfg) {
  const int n_par = static_cast<int>(x0.size());
  LmOutcome out;
  out.x = x0;
  Eigen::VectorXd r(n_res);
  if (!eval(out.x, r)) {
    throw std::runtime_error("run_lm: residuals undefined at the initial point");
  }
  double cost = r.squaredNorm();
  double lambda = cfg.initial_damping;

  Eigen::VectorXd rp(n_res), rm(n_res), rt(n_res);
  while (out.iterations < cfg.max_iters) {
    Eigen::MatrixXd J(n_res, n_par);
    for (int j = 0; j < n_par; ++j) {
      const double h = std::max(1e-6, 1e-6 * std::abs(out.x(j)));
      Eigen::VectorXd xp = out.x;
      xp(j) += h;
      Eigen::VectorXd xm = out.x;
      xm(j) -= h;
      const bool okp = eval(xp, rp);
      const bool okm = eval(xm, rm);
      if (okp && okm) {
        J.col(j) = (rp - rm) / (2.0 * h);
      } else if (okp) {
        J.col(j) = (rp - r) / h;
      } else if (okm) {
        J.col(j) = (r - rm) / h;
      } else {
        J.col(j).setZero();
      }
    }
    const Eigen::MatrixXd JtJ = J.transpose() * J;
    const Eigen::VectorXd g = J.transpose() * r;
    const Eigen::VectorXd diag = JtJ.diagonal().cwiseMax(kLambdaFloor);

    bool accepted = false;
    while (!accepted && !out.converged) {
      Eigen::MatrixXd A = JtJ;
      A.diagonal() += lambda * diag;
      const Eigen::VectorXd delta = A.ldlt().solve(-g);
      if (!delta.allFinite()) {
        lambda *= cfg.damping_up;
        if (lambda > kLambdaCeil) break;
        continue;
      }
      if (delta.norm() < cfg.step_tol) {
        out.converged = true;  // no step worth taking; iteration not counted
        break;
      }
      const Eigen::VectorXd xt = out.x + delta;
      bool reject = true;
      if (eval(xt, rt)) {
        const double ct = rt.squaredNorm();
        if (ct < cost) {
          const double drop = cost - ct;
          out.x = retract(xt);
          r = rt;
          cost = ct;
          lambda = std::max(lambda * cfg.damping_down, kLambdaFloor);
          ++out.iterations;
          accepted = true;
          reject = false;
          if (drop <= cfg.cost_tol * std::max(cost, 1e-30)) out.converged = true;
        }
      }
      if (reject) {
        lambda *= cfg.damping_up;
        if (lambda > kLambdaCeil) break;
      }
    }
    if (out.converged || !accepted) break;
  }
  out.cost = cost;
  return out;
}

// Coarse pose search for models where DLT does not apply (or failed):
// look-at candidates on shells around the target centroid, scored by
// reprojection error with a fixed penalty per unprojectable point.
Pose grid_search_pose(const CameraModel& model, const ViewCorrespondences& view) {
  Point3 centroid = Point3::Zero();
  for (const auto& [P, p] : view.pairs) centroid += P;
  centroid /= static_cast<double>(view.pairs.size());
  double spread = 0.0;
  for (const auto& [P, p] : view.pairs) spread = std::max(spread, (P - centroid).norm());
  if (spread <= 0.0) spread = 1.0;

  const double radii[] = {1.5, 3.0, 6.0};
  const double elevs_deg[] = {-75.0, -45.0, -15.0, 0.0, 15.0, 45.0, 75.0};
  const int n_az = 16;
  const double kMissPenalty = 1e6;

  Pose best = Pose::Identity();
  double best_score = std::numeric_limits<double>::infinity();
  for (double mult : radii) {
    const double radius = mult * spread;
    for (double ed : elevs_deg) {
      const double e = ed * M_PI / 180.0;
      for (int ia = 0; ia < n_az; ++ia) {
        const double a = 2.0 * M_PI * ia / n_az;
        const Point3 pos =
            centroid + radius * Point3(std::cos(e) * std::cos(a), std::cos(e) * std::sin(a),
                                       std::sin(e));
        const Pose cand = look_at_pose(pos, centroid);
        double score = 0.0;
        for (const auto& [P, p] : view.pairs) {
          if (const auto px = try_project(model, cand * P))
            score += (*px - p).squaredNorm();
          else
            score += kMissPenalty;
        }
        if (score < best_score) {
          best_score = score;
          best = cand;
        }
      }
    }
  }
  return best;
}

Pose initial_pose_guess(const CameraModel& model, const ViewCorrespondences& view,
                        const OptimizerConfig& cfg) {
  const bool pinhole_family = std::holds_alternative<PinholeParams>(model) ||
                              std::holds_alternative<BrownConradyParams>(model);
  if (pinhole_family) {
    try {
      const auto M = dlt_projection_matrix(view);
      return decompose_projection(M).second;
    } catch (const std::exception&) {
      // Coplanar or otherwise DLT-hostile geometry: fall through.
    }
  }
  OptimizerConfig pose_cfg = cfg;
  pose_cfg.max_iters = std::min(cfg.max_iters, 100);
  return refine_pose(model, view, grid_search_pose(model, view), pose_cfg);
}

}  // namespace

ReprojectionStats mean_reprojection_error(const CameraModel& model,
                                          const std::vector<Pose>& poses,
                                          const CorrespondenceSet& corrs) {
  if (poses.size() != corrs.views.size()) {
    throw std::invalid_argument("mean_reprojection_error: pose count != view count");
  }
  ReprojectionStats stats;
  double sum_sq = 0.0;
  int used = 0;
  for (size_t v = 0; v < corrs.views.size(); ++v) {
    for (const auto& [P, p] : corrs.views[v].pairs) {
      ++stats.total;
      if (const auto px = try_project(model, poses[v] * P)) {
        sum_sq += (*px - p).squaredNorm();
        ++used;
      } else {
        ++stats.excluded;
      }
    }
  }
  stats.mean_sq = (used > 0) ? sum_sq / used : 0.0;
  stats.rms = std::sqrt(stats.mean_sq);
  return stats;
}

Pose refine_pose(const CameraModel& model, const ViewCorrespondences& view, const Pose& init,
                 const OptimizerConfig& cfg) {
  // Pairs unprojectable at the initial pose are held out of the objective.
  std::vector<int> included;
  for (size_t i = 0; i < view.pairs.size(); ++i) {
    if (try_project(model, init * view.pairs[i].first)) included.push_back(static_cast<int>(i));
  }
  if (included.empty()) return init;

  Pose anchor = init;
  const auto eval = [&](const Eigen::VectorXd& x, Eigen::VectorXd& r) -> bool {
    Pose eff;
    eff.R = anchor.R * rotation_from_axis_angle(x.head<3>());
    eff.t = anchor.t + x.tail<3>();
    int k = 0;
    for (int i : included) {
      const auto px = try_project(model, eff * view.pairs[i].first);
      if (!px) return false;
      r(k++) = px->x() - view.pairs[i].second.x();
      r(k++) = px->y() - view.pairs[i].second.y();
    }
    return true;
  };
  const auto retract = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    anchor.R = anchor.R * rotation_from_axis_angle(x.head<3>());
    anchor.t += x.tail<3>();
    return Eigen::VectorXd::Zero(6);
  };
  run_lm(2 * static_cast<int>(included.size()), Eigen::VectorXd::Zero(6), eval, retract, cfg);
  return anchor;
}

CalibrationResult refine(const CameraModel& model_init, const CorrespondenceSet& corrs,
                         const OptimizerConfig& cfg) {
  validate(model_init);
  if (corrs.views.empty()) throw std::invalid_argument("refine: no views");
  const int n_views = static_cast<int>(corrs.views.size());
  for (const auto& view : corrs.views) {
    if (view.pairs.empty()) throw std::invalid_argument("refine: view with no correspondences");
  }

  std::vector<Pose> anchors(n_views);
  for (int v = 0; v < n_views; ++v) {
    anchors[v] = corrs.views[v].initial_pose ? *corrs.views[v].initial_pose
                                             : initial_pose_guess(model_init, corrs.views[v], cfg);
  }

  // Freeze the inclusion set at the initial state: points outside the
  // projection domain get zero weight for the whole run.
  std::vector<std::vector<int>> included(n_views);
  int n_incl = 0;
  for (int v = 0; v < n_views; ++v) {
    for (size_t i = 0; i < corrs.views[v].pairs.size(); ++i) {
      if (try_project(model_init, anchors[v] * corrs.views[v].pairs[i].first)) {
        included[v].push_back(static_cast<int>(i));
        ++n_incl;
      }
    }
  }
  if (n_incl == 0) {
    throw std::invalid_argument("refine: no projectable correspondences at the initial state");
  }

  const Eigen::VectorXd theta0 = get_params(model_init);
  const int np = static_cast<int>(theta0.size());
  const int n_par = np + 6 * n_views;
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n_par);
  x0.head(np) = theta0;

  const auto eval = [&](const Eigen::VectorXd& x, Eigen::VectorXd& r) -> bool {
    const CameraModel model = with_params(model_init, x.head(np));
    if (!params_ok(model)) return false;
    int k = 0;
    for (int v = 0; v < n_views; ++v) {
      Pose eff;
      eff.R = anchors[v].R * rotation_from_axis_angle(x.segment<3>(np + 6 * v));
      eff.t = anchors[v].t + x.segment<3>(np + 6 * v + 3);
      for (int i : included[v]) {
        const auto px = try_project(model, eff * corrs.views[v].pairs[i].first);
        if (!px) return false;
        r(k++) = px->x() - corrs.views[v].pairs[i].second.x();
        r(k++) = px->y() - corrs.views[v].pairs[i].second.y();
      }
    }
    return true;
  };
  const auto retract = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    for (int v = 0; v < n_views; ++v) {
      anchors[v].R = anchors[v].R * rotation_from_axis_angle(x.segment<3>(np + 6 * v));
      anchors[v].t += x.segment<3>(np + 6 * v + 3);
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n_par);
    out.head(np) = x.head(np);
    return out;
  };

  const LmOutcome lm = run_lm(2 * n_incl, x0, eval, retract, cfg);

  CalibrationResult result;
  result.model = with_params(model_init, lm.x.head(np));
  result.poses = anchors;
  result.iterations = lm.iterations;
  result.converged = lm.converged;
  const ReprojectionStats stats = mean_reprojection_error(result.model, result.poses, corrs);
  result.mean_sq_error = stats.mean_sq;
  result.mre = stats.rms;
  return result;
}

}  // namespace camgeom
