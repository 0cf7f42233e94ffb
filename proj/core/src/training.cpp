/*
 * Copyright 2026 The lfsyn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lfsyn/training.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "lfsyn/adam.hpp"
#include "lfsyn/metrics.hpp"

namespace lfsyn {

namespace {

using json = nlohmann::ordered_json;

// Per-example constants reused every iteration.
struct PreparedExample {
  Tensor<float> y_input;                   // [1,H,W]
  Tensor<float> gt_y;                      // [N,H,W]
  std::vector<Tensor<float>> shifted_y;    // N tensors [1,H,W]
};

PreparedExample prepare(const TrainExample& ex, const TrainConfig& cfg) {
  const int n = cfg.angular_u * cfg.angular_v;
  require(ex.gt.U == cfg.angular_u && ex.gt.V == cfg.angular_v,
          "train: ground truth angular grid does not match the config");
  require(ex.gt.H == cfg.spatial_h && ex.gt.W == cfg.spatial_w,
          "train: ground truth spatial extents do not match the config");
  require(ex.central_rgb.h == cfg.spatial_h && ex.central_rgb.w == cfg.spatial_w,
          "train: central image extents do not match the config");

  const Image y_img =
      ex.central_rgb.c == 3 ? to_luminance(ex.central_rgb) : ex.central_rgb;
  const LightField gt_y = ex.gt.C == 3 ? to_luminance(ex.gt) : ex.gt;

  PreparedExample prep;
  prep.y_input = Tensor<float>::from_vector({1, y_img.h, y_img.w},
                                            std::vector<float>(y_img.px));
  prep.gt_y = Tensor<float>::from_vector(
      {n, cfg.spatial_h, cfg.spatial_w}, std::vector<float>(gt_y.data));

  const ShiftedStack stack =
      shift_stack(y_img, cfg.angular_u, cfg.angular_v, ex.gt.center_u,
                  ex.gt.center_v, cfg.eta);
  prep.shifted_y.reserve(n);
  for (int v = 0; v < cfg.angular_v; ++v)
    for (int u = 0; u < cfg.angular_u; ++u) {
      const Image view = stack.view(u, v);
      prep.shifted_y.push_back(Tensor<float>::from_vector(
          {1, view.h, view.w}, std::vector<float>(view.px)));
    }
  return prep;
}

}  // namespace

TrainResult train(const TrainConfig& cfg,
                  const std::vector<TrainExample>& dataset,
                  const TrainSinks& sinks) {
  require(!dataset.empty(), "train: dataset is empty");
  require(cfg.batch_size == 1, "train: only batch_size 1 is supported");
  require(cfg.iterations >= 1, "train: iterations must be >= 1");
  require(cfg.lambda_g >= 0 && cfg.lambda_e >= 0 && cfg.lambda_tv >= 0,
          "train: loss weights must be non-negative");

  TrainResult result;
  result.spec = make_network_spec(cfg.angular_u, cfg.angular_v);
  result.params = init_network<float>(result.spec, cfg.seed);

  std::vector<PreparedExample> prepared;
  prepared.reserve(dataset.size());
  for (const auto& ex : dataset) prepared.push_back(prepare(ex, cfg));

  std::vector<Tensor<float>> params = result.params.tensors();
  AdamState<float> adam(params, cfg.lr);
  const int n = cfg.angular_u * cfg.angular_v;
  bool have_checkpoint = false;

  result.log.reserve(cfg.iterations);
  for (int it = 0; it < cfg.iterations; ++it) {
    const PreparedExample& ex = prepared[it % prepared.size()];
    for (auto& p : params) p.zero_grad();

    Tensor<float> flow = forward(result.params, result.spec, ex.y_input);
    std::vector<Tensor<float>> warped;
    warped.reserve(n);
    for (int i = 0; i < n; ++i)
      warped.push_back(bilinear_sample(
          ex.shifted_y[i], slice_axis0(flow, int64_t(i) * 2, int64_t(i) * 2 + 2)));
    Tensor<float> pred = concat_channels(warped);

    LossLogRow row;
    row.iteration = it;
    Tensor<float> total;
    if (cfg.pixel_l1) {
      total = pixel_l1(pred, ex.gt_y);
      if (cfg.lambda_tv > 0) {
        Tensor<float> tv = tv_reg(flow);
        row.tv_term = tv.item();
        total = add(total, scale(tv, cfg.lambda_tv));
      }
    } else {
      Tensor<float> g = global_loss(pred, ex.gt_y);
      Tensor<float> l = local_loss(pred, ex.gt_y, cfg.angular_u, cfg.angular_v);
      row.global_term = g.item();
      row.local_term = l.item();
      total = add(scale(g, cfg.lambda_g), scale(l, cfg.lambda_e));
      if (cfg.lambda_tv > 0) {
        Tensor<float> tv = tv_reg(flow);
        row.tv_term = tv.item();
        total = add(total, scale(tv, cfg.lambda_tv));
      }
    }
    row.total = total.item();
    result.log.push_back(row);

    if (!std::isfinite(row.total)) {
      result.aborted = true;
      result.abort_reason = "non-finite loss at iteration " +
                            std::to_string(it) +
                            (have_checkpoint
                                 ? "; last good checkpoint retained"
                                 : "; no checkpoint was written yet");
      break;
    }

    total.backward();
    try {
      adam_step(params, adam);
    } catch (const std::runtime_error& e) {
      result.aborted = true;
      result.abort_reason = std::string(e.what()) +
                            (have_checkpoint
                                 ? "; last good checkpoint retained"
                                 : "; no checkpoint was written yet");
      break;
    }

    if (!sinks.checkpoint_path.empty() && cfg.checkpoint_every > 0 &&
        ((it + 1) % cfg.checkpoint_every == 0 || it + 1 == cfg.iterations)) {
      save_checkpoint(result.params, result.spec, sinks.checkpoint_path);
      have_checkpoint = true;
    }
  }

  if (!sinks.log_csv_path.empty())
    write_loss_log_csv(result.log, sinks.log_csv_path);
  return result;
}

void write_loss_log_csv(const std::vector<LossLogRow>& log,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("write_loss_log_csv: cannot write " + path);
  out << "iteration,total,global,local,tv\n";
  char buf[160];
  for (const auto& row : log) {
    std::snprintf(buf, sizeof(buf), "%d,%.9g,%.9g,%.9g,%.9g\n", row.iteration,
                  row.total, row.global_term, row.local_term, row.tv_term);
    out << buf;
  }
}

EvaluationReport evaluate_pair(const LightField& pred, const LightField& gt) {
  require(pred.U == gt.U && pred.V == gt.V && pred.H == gt.H &&
              pred.W == gt.W && pred.C == gt.C,
          "evaluate_pair: light field extents differ");
  EvaluationReport report;
  double psnr_acc = 0, ssim_acc = 0;
  for (int v = 0; v < pred.V; ++v)
    for (int u = 0; u < pred.U; ++u) {
      const Image a = pred.view(u, v);
      const Image b = gt.view(u, v);
      ViewMetrics m;
      m.u = u;
      m.v = v;
      m.psnr = psnr(a, b);
      m.ssim = ssim(a, b);
      psnr_acc += m.psnr;
      ssim_acc += m.ssim;
      report.per_view.push_back(m);
    }
  report.mean_psnr = psnr_acc / report.per_view.size();
  report.mean_ssim = ssim_acc / report.per_view.size();
  return report;
}

DatasetEvaluation evaluate(const NetworkParams<float>& params,
                           const NetworkSpec& spec,
                           const std::vector<TrainExample>& dataset,
                           double eta) {
  require(!dataset.empty(), "evaluate: dataset is empty");
  DatasetEvaluation eval;
  double psnr_acc = 0, ssim_acc = 0;
  size_t views = 0;
  for (const auto& ex : dataset) {
    require(ex.gt.C == 3, "evaluate: ground truth must be RGB");
    const SynthesisResult synth = synthesize(
        ex.central_rgb, params, spec, ex.gt.center_u, ex.gt.center_v, eta);
    EvaluationReport report = evaluate_pair(synth.rgb, ex.gt);
    for (const auto& m : report.per_view) {
      psnr_acc += m.psnr;
      ssim_acc += m.ssim;
      ++views;
    }
    eval.per_example.push_back(std::move(report));
  }
  eval.mean_psnr = psnr_acc / static_cast<double>(views);
  eval.mean_ssim = ssim_acc / static_cast<double>(views);
  return eval;
}

TrainConfig config_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("config_from_json_file: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("config_from_json_file: " + path +
                             ": invalid JSON (" + e.what() + ")");
  }
  TrainConfig cfg;
  cfg.eta = j.value("eta", cfg.eta);
  cfg.lambda_g = j.value("lambda_g", cfg.lambda_g);
  cfg.lambda_e = j.value("lambda_e", cfg.lambda_e);
  cfg.lambda_tv = j.value("lambda_tv", cfg.lambda_tv);
  cfg.iterations = j.value("iterations", cfg.iterations);
  cfg.batch_size = j.value("batch_size", cfg.batch_size);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.lr = j.value("lr", cfg.lr);
  cfg.checkpoint_every = j.value("checkpoint_every", cfg.checkpoint_every);
  if (j.contains("angular")) {
    cfg.angular_u = j["angular"].at(0).get<int>();
    cfg.angular_v = j["angular"].at(1).get<int>();
  }
  if (j.contains("spatial")) {
    cfg.spatial_h = j["spatial"].at(0).get<int>();
    cfg.spatial_w = j["spatial"].at(1).get<int>();
  }
  cfg.pixel_l1 = j.value("pixel_l1", cfg.pixel_l1);
  return cfg;
}

void config_to_json_file(const TrainConfig& cfg, const std::string& path) {
  json j;
  j["eta"] = cfg.eta;
  j["lambda_g"] = cfg.lambda_g;
  j["lambda_e"] = cfg.lambda_e;
  j["lambda_tv"] = cfg.lambda_tv;
  j["iterations"] = cfg.iterations;
  j["batch_size"] = cfg.batch_size;
  j["seed"] = cfg.seed;
  j["lr"] = cfg.lr;
  j["checkpoint_every"] = cfg.checkpoint_every;
  j["angular"] = {cfg.angular_u, cfg.angular_v};
  j["spatial"] = {cfg.spatial_h, cfg.spatial_w};
  j["pixel_l1"] = cfg.pixel_l1;
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("config_to_json_file: cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace lfsyn
