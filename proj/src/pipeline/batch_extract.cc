/*
 * Copyright (C) 2026 The prigen Authors
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

#include "prigen/pipeline/batch_extract.h"

#include <algorithm>
#include <atomic>
#include <thread>

#include "prigen/apkstat/apk.h"
#include "prigen/apkstat/call_graph.h"
#include "prigen/apkstat/dex_file.h"
#include "prigen/common/error.h"
#include "prigen/common/log.h"

namespace prigen::pipeline {

namespace fs = std::filesystem;

ApkResult AnalyzeApkBytes(std::vector<uint8_t> bytes, const std::string& apk_id, const permdb::ApiDb& db,
                          int max_hops) {
  apkstat::ApkContents apk = apkstat::ParseApkBytes(std::move(bytes), apk_id);
  ApkResult r;
  r.apk_id = apk.apk_id;
  if (apk.has_manifest) r.manifest = apkstat::ParseManifest(apk.manifest_bytes);
  std::vector<apkstat::DexFile> dexes;
  dexes.reserve(apk.dex_blobs.size());
  for (const auto& blob : apk.dex_blobs) dexes.emplace_back(blob);
  apkstat::CallGraph graph = apkstat::BuildCallGraph(dexes);
  r.prcs = apkstat::FindPrcs(graph, dexes, db, max_hops, r.apk_id);
  r.report = apkstat::CrossCheckPermissions(r.manifest, r.prcs);
  r.ok = true;
  return r;
}

ApkResult AnalyzeApk(const fs::path& path, const permdb::ApiDb& db, int max_hops) {
  std::string data = ReadFile(path);
  ApkResult r = AnalyzeApkBytes(std::vector<uint8_t>(data.begin(), data.end()), path.filename().string(), db,
                                max_hops);
  r.path = path;
  return r;
}

std::vector<fs::path> CollectApks(const std::vector<fs::path>& inputs) {
  std::vector<fs::path> out;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (!fs::exists(in, ec)) throw IoError(in.string() + ": no such file or directory");
    if (fs::is_directory(in, ec)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(in)) {
        if (entry.is_regular_file() && entry.path().extension() == ".apk") found.push_back(entry.path());
      }
      if (found.empty()) throw ArgumentError(in.string() + ": directory contains no .apk files");
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.push_back(in);
    }
  }
  return out;
}

BatchSummary BatchExtract(const std::vector<fs::path>& apks, const permdb::ApiDb& db, int max_hops, int workers) {
  if (max_hops < 1) throw ArgumentError("hops must be at least 1");
  if (workers < 1) throw ArgumentError("workers must be at least 1");
  std::vector<ApkResult> results(apks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < apks.size(); i = next++) {
      try {
        results[i] = AnalyzeApk(apks[i], db, max_hops);
      } catch (const std::exception& e) {
        results[i] = ApkResult{};
        results[i].apk_id = apks[i].filename().string();
        results[i].path = apks[i];
        results[i].error = e.what();
        spdlog::warn("skipping {}: {}", apks[i].string(), e.what());
      }
    }
  };
  const std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(1, apks.size()));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < n_threads; ++t) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }
  std::stable_sort(results.begin(), results.end(), [](const ApkResult& a, const ApkResult& b) {
    return std::tie(a.apk_id, a.path) < std::tie(b.apk_id, b.path);
  });
  BatchSummary s;
  for (const auto& r : results) {
    if (r.ok) {
      ++s.apks_ok;
      s.prcs_total += r.prcs.size();
    } else {
      ++s.apks_failed;
    }
  }
  s.results = std::move(results);
  return s;
}

OrderedJson PrcsToJson(const apkstat::Prcs& p) {
  OrderedJson j;
  j["apk_id"] = p.apk_id;
  j["class"] = p.method.class_name;
  j["method"] = p.method.method_name;
  j["descriptor"] = p.method.descriptor;
  j["hop"] = p.hop_distance;
  j["loc"] = p.loc;
  OrderedJson apis = OrderedJson::array();
  for (const auto& call : p.called_apis) {
    OrderedJson a;
    a["class"] = call.api.class_name;
    a["method"] = call.api.method_name;
    a["descriptor"] = call.api.descriptor ? OrderedJson(*call.api.descriptor) : OrderedJson(nullptr);
    a["permissions"] = call.api.permissions;
    a["group"] = std::string(permdb::GroupName(call.api.group));
    a["description"] = call.api.description;
    a["sensitive_info"] = call.api.sensitive_info;
    a["call_sites"] = call.call_sites;
    apis.push_back(std::move(a));
  }
  j["apis"] = std::move(apis);
  j["code"] = p.code_text;
  return j;
}

OrderedJson ReportToJson(const ApkResult& r) {
  OrderedJson j;
  j["apk_id"] = r.apk_id;
  j["ok"] = r.ok;
  if (!r.ok) {
    j["error"] = r.error;
    return j;
  }
  j["package"] = r.manifest.package_name;
  j["prcs"] = r.prcs.size();
  j["undeclared_use"] = r.report.undeclared_use;
  j["unmatched_declaration"] = r.report.unmatched_declaration;
  return j;
}

OrderedJson SummaryToJson(const BatchSummary& s) {
  OrderedJson j;
  j["apks_ok"] = s.apks_ok;
  j["apks_failed"] = s.apks_failed;
  j["prcs_total"] = s.prcs_total;
  return j;
}

}  // namespace prigen::pipeline
