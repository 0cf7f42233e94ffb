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

#pragma once

#include <string>

#include "lfsyn/losses.hpp"
#include "lfsyn/warping.hpp"

namespace lfsyn {

struct TrainConfig {
  double eta = 0.8;
  float lambda_g = 10.f;
  float lambda_e = 10.f;
  float lambda_tv = 1e-6f;
  int iterations = 2000;   // desk-scale default
  int batch_size = 1;
  uint64_t seed = 0;
  float lr = 1e-3f;
  int checkpoint_every = 500;
  int angular_u = 8;
  int angular_v = 8;
  int spatial_h = 48;
  int spatial_w = 64;
  bool pixel_l1 = false;   // ablation: plain pixel loss instead of mean/std
};

TrainConfig config_from_json_file(const std::string& path);
void config_to_json_file(const TrainConfig& config, const std::string& path);

struct TrainExample {
  Image central_rgb;  // network input; RGB or luminance
  LightField gt;      // ground truth field (RGB or luminance)
};

struct LossLogRow {
  int iteration = 0;
  double total = 0;
  double global_term = 0;  // unweighted component values
  double local_term = 0;
  double tv_term = 0;
};

struct TrainResult {
  NetworkParams<float> params;
  NetworkSpec spec;
  std::vector<LossLogRow> log;
  bool aborted = false;
  std::string abort_reason;
};

/// Optional file outputs produced while training.
struct TrainSinks {
  std::string log_csv_path;     // per-iteration loss rows
  std::string checkpoint_path;  // written every checkpoint_every iterations
};

/// End-to-end optimization of the flow network on (central image, ground
/// truth light field) pairs, deterministic given the seed. A non-finite
/// loss aborts the run and the last good checkpoint is retained.
TrainResult train(const TrainConfig& config,
                  const std::vector<TrainExample>& dataset,
                  const TrainSinks& sinks = {});

void write_loss_log_csv(const std::vector<LossLogRow>& log,
                        const std::string& path);

struct ViewMetrics {
  int u = 0;
  int v = 0;
  double psnr = 0;
  double ssim = 0;
};

struct EvaluationReport {
  std::vector<ViewMetrics> per_view;
  double mean_psnr = 0;
  double mean_ssim = 0;
};

/// Per-view PSNR/SSIM of one synthesized field against ground truth.
EvaluationReport evaluate_pair(const LightField& pred, const LightField& gt);

struct DatasetEvaluation {
  std::vector<EvaluationReport> per_example;
  double mean_psnr = 0;
  double mean_ssim = 0;
};

/// Synthesizes every example and reports per-view and aggregate metrics.
DatasetEvaluation evaluate(const NetworkParams<float>& params,
                           const NetworkSpec& spec,
                           const std::vector<TrainExample>& dataset,
                           double eta);

}  // namespace lfsyn
