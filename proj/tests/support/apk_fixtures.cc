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

#include "apk_fixtures.h"

#include <algorithm>
#include <limits>

#include "apk_builder.h"
#include "dex_builder.h"
#include "prigen/common/rng.h"

#ifndef PRIGEN_TEST_DATA_DIR
#error "PRIGEN_TEST_DATA_DIR must be defined"
#endif

namespace prigen::testing {
namespace {

std::string ToDescriptor(const std::string& dotted) {
  std::string s = "L" + dotted + ";";
  std::replace(s.begin(), s.end(), '.', '/');
  return s;
}

const char* const kDescriptors[] = {"()V", "(I)V", "(Ljava/lang/String;)I", "(IJ)Ljava/lang/Object;", "()Z"};

struct Framework {
  const char* cls;
  const char* name;
  const char* desc;
};
const Framework kFramework[] = {
    {"Ljava/lang/StringBuilder;", "append", "(Ljava/lang/String;)Ljava/lang/StringBuilder;"},
    {"Ljava/lang/Object;", "toString", "()Ljava/lang/String;"},
    {"Landroid/util/Log;", "d", "(Ljava/lang/String;Ljava/lang/String;)I"},
    {"Ljava/lang/Math;", "max", "(II)I"},
};

struct PlannedMethod {
  MethodId id;
  std::string class_desc;
  bool is_static = false;
  bool is_abstract = false;
  int dex = 0;
};

}  // namespace

std::string TestDataDir() { return PRIGEN_TEST_DATA_DIR; }

permdb::ApiDb LoadTestDb() { return permdb::LoadApiDb(TestDataDir() + "/permission_apis.json"); }

FixtureApp RandomApp(uint64_t seed, const permdb::ApiDb& db, const FixtureOptions& opt) {
  Rng rng(seed);
  FixtureApp app;
  app.apk_id = "fixture" + std::to_string(seed);
  app.package = "com.fixture.a" + std::to_string(seed);
  app.binary_manifest = seed % 3 != 0;

  const int dex_count = std::max(1, opt.dex_files);
  const int class_count = std::max(1, opt.methods / 4);
  std::vector<PlannedMethod> plan;
  for (int i = 0; i < opt.methods; ++i) {
    PlannedMethod m;
    const int cls = static_cast<int>(rng.Below(class_count));
    m.id.class_name = app.package + ".C" + std::to_string(cls);
    m.class_desc = ToDescriptor(m.id.class_name);
    m.id.method_name = "m" + std::to_string(i);
    m.id.descriptor = kDescriptors[rng.Below(std::size(kDescriptors))];
    m.is_static = rng.Bernoulli(0.4);
    m.is_abstract = !m.is_static && rng.Bernoulli(0.08);
    m.dex = cls % dex_count;
    plan.push_back(m);
  }

  std::set<std::string> wanted_permissions;
  for (int d = 0; d < dex_count; ++d) {
    DexBuilder dex;
    std::map<std::string, std::vector<DexBuilder::MethodDef>> direct, virtuals;
    std::vector<std::pair<const PlannedMethod*, uint32_t>> own;
    for (const auto& m : plan) {
      if (m.dex != d) continue;
      own.emplace_back(&m, dex.Method(m.class_desc, m.id.method_name, m.id.descriptor));
    }
    int call_site = 0;
    for (const auto& [m, idx] : own) {
      DexBuilder::MethodDef def;
      def.method_idx = idx;
      def.access_flags = DexBuilder::kAccPublic | (m->is_static ? DexBuilder::kAccStatic : 0);
      if (m->is_abstract) {
        def.access_flags |= DexBuilder::kAccAbstract;
        app.bodiless.insert(m->id);
      } else {
        CodeBuilder code;
        const int ops = 1 + static_cast<int>(rng.Below(8));
        for (int k = 0; k < ops; ++k) {
          const double u = rng.Uniform();
          const auto kind = static_cast<CodeBuilder::Kind>(rng.Below(5));
          auto emit_invoke = [&](uint32_t target, const std::string& desc) {
            const double form = rng.Uniform();
            if (form < 0.15) {
              code.InvokeRange(kind, target, 0, static_cast<uint8_t>(rng.Below(4)));
            } else if (form < 0.25) {
              code.InvokePolymorphic(target, dex.Proto(desc), {0, 1});
            } else {
              std::vector<uint8_t> regs(rng.Below(6));
              for (auto& r : regs) r = static_cast<uint8_t>(rng.Below(8));
              code.Invoke(kind, target, regs);
            }
            if (rng.Bernoulli(0.3)) code.MoveResult(0);
          };
          if (u < opt.api_call_rate) {
            const int e = static_cast<int>(rng.Below(db.size()));
            const permdb::ApiSpec& api = db.entries()[e];
            const std::string desc = api.descriptor.value_or("(Ljava/lang/String;)V");
            const MethodId callee{api.class_name, api.method_name, desc};
            emit_invoke(dex.Method(ToDescriptor(api.class_name), api.method_name, desc), desc);
            const permdb::ApiSpec* hit = db.Lookup(callee.class_name, callee.method_name, callee.descriptor);
            app.sites.push_back({m->id, callee, hit ? static_cast<int>(hit - db.entries().data()) : -1});
            if (rng.Bernoulli(0.7)) wanted_permissions.insert(api.permissions.front());
          } else if (u < opt.api_call_rate + opt.internal_call_rate) {
            const PlannedMethod& t = plan[rng.Below(plan.size())];
            emit_invoke(dex.Method(t.class_desc, t.id.method_name, t.id.descriptor), t.id.descriptor);
            app.sites.push_back({m->id, t.id, -1});
          } else if (u < opt.api_call_rate + opt.internal_call_rate + 0.08) {
            const Framework& f = kFramework[rng.Below(std::size(kFramework))];
            emit_invoke(dex.Method(f.cls, f.name, f.desc), f.desc);
            MethodId callee{f.cls, f.name, f.desc};
            callee.class_name = callee.class_name.substr(1, callee.class_name.size() - 2);
            std::replace(callee.class_name.begin(), callee.class_name.end(), '/', '.');
            app.sites.push_back({m->id, callee, -1});
          } else if (u < opt.api_call_rate + opt.internal_call_rate + 0.12) {
            const int cs = call_site++;
            code.InvokeCustom(static_cast<uint32_t>(cs), {0});
            app.sites.push_back(
                {m->id, MethodId{"<invoke-custom>", "call_site_" + std::to_string(d) + "_" + std::to_string(cs), ""}, -1});
          } else if (u < 0.9) {
            code.ConstString(static_cast<uint8_t>(rng.Below(8)), dex.String("s" + std::to_string(rng.Below(50))));
          } else {
            code.Const4(static_cast<uint8_t>(rng.Below(8)), static_cast<int8_t>(rng.Below(8)));
            code.AddInt(0, 0, 1);
          }
        }
        code.ReturnVoid();
        const double tail = rng.Uniform();
        if (tail < 0.3) {
          // Payload entries shaped like invoke-virtual {v0}, method 0.
          code.PackedSwitchPayload(0x106e, {0x0000106e, 0x0000106e, 0x00010000});
        } else if (tail < 0.45) {
          code.FillArrayPayload({0x1071, 0x0000, 0x0000, 0x10fc});
        }
        def.code = code.units();
        app.instruction_counts[m->id] = code.instructions();
      }
      (m->is_static ? direct : virtuals)[m->class_desc].push_back(std::move(def));
    }
    std::set<std::string> classes;
    for (const auto& [m, idx] : own) classes.insert(m->class_desc);
    for (const auto& cls : classes) {
      auto by_idx = [](const DexBuilder::MethodDef& a, const DexBuilder::MethodDef& b) { return a.method_idx < b.method_idx; };
      std::sort(direct[cls].begin(), direct[cls].end(), by_idx);
      std::sort(virtuals[cls].begin(), virtuals[cls].end(), by_idx);
      dex.AddClass(cls, direct[cls], virtuals[cls]);
    }
    app.dex_blobs.push_back(dex.Build());
  }

  app.declared_permissions.assign(wanted_permissions.begin(), wanted_permissions.end());
  app.declared_permissions.push_back("android.permission.VIBRATE");
  std::sort(app.declared_permissions.begin(), app.declared_permissions.end());

  std::vector<ZipInput> zip;
  zip.push_back({"AndroidManifest.xml",
                 app.binary_manifest ? EncodeAxml(ManifestTree(app.package, app.declared_permissions), seed % 2 == 0)
                                     : ToBytes(ManifestText(app.package, app.declared_permissions)),
                 true});
  for (int d = 0; d < dex_count; ++d) {
    const std::string name = d == 0 ? "classes.dex" : "classes" + std::to_string(d + 1) + ".dex";
    zip.push_back({name, app.dex_blobs[d], d % 2 == 0});
  }
  zip.push_back({"res/raw/blob.bin", ToBytes("not a dex"), false});
  app.apk_bytes = WriteZip(zip);
  return app;
}

std::set<std::pair<MethodId, MethodId>> OracleEdges(const FixtureApp& app) {
  std::set<std::pair<MethodId, MethodId>> out;
  for (const auto& s : app.sites) out.emplace(s.caller, s.callee);
  return out;
}

std::map<MethodId, ExpectedPrcs> OraclePrcs(const FixtureApp& app, const permdb::ApiDb& /*db*/, int max_hops) {
  // Nodes are the defined methods with code; distances by Floyd-Warshall.
  std::vector<MethodId> nodes;
  for (const auto& [id, n] : app.instruction_counts) nodes.push_back(id);
  const std::size_t n = nodes.size();
  auto index = [&](const MethodId& id) -> int {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
    return (it != nodes.end() && *it == id) ? static_cast<int>(it - nodes.begin()) : -1;
  };
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kInf));
  std::vector<std::map<int, uint32_t>> direct(n);
  std::vector<std::map<int, uint32_t>> site_count(n);  // callee node -> sites
  for (std::size_t i = 0; i < n; ++i) dist[i][i] = 0;
  for (const auto& s : app.sites) {
    const int a = index(s.caller);
    if (s.api_entry >= 0) ++direct[a][s.api_entry];
    const int b = index(s.callee);
    if (b < 0) continue;
    dist[a][b] = std::min(dist[a][b], 1);
    ++site_count[a][b];
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);

  std::vector<int> hop(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int best = kInf;
    for (std::size_t j = 0; j < n; ++j) {
      if (!direct[j].empty()) best = std::min(best, dist[i][j]);
    }
    if (best < kInf && best + 1 <= max_hops) hop[i] = best + 1;
  }
  std::vector<std::map<int, uint32_t>> apis(n);
  for (int h = 1; h <= max_hops; ++h) {
    for (std::size_t i = 0; i < n; ++i) {
      if (hop[i] != h) continue;
      if (h == 1) {
        apis[i] = direct[i];
        continue;
      }
      for (const auto& [callee, count] : site_count[i]) {
        if (hop[callee] != h - 1) continue;
        for (const auto& [api, unused] : apis[callee]) apis[i][api] += count;
      }
    }
  }
  std::map<MethodId, ExpectedPrcs> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (hop[i] == 0) continue;
    out[nodes[i]] = ExpectedPrcs{hop[i], app.instruction_counts.at(nodes[i]), apis[i]};
  }
  return out;
}

}  // namespace prigen::testing
