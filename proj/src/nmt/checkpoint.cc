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

#include "prigen/nmt/checkpoint.h"

#include <bit>
#include <cmath>
#include <cstring>

#include "prigen/common/error.h"
#include "prigen/common/json_lines.h"

namespace prigen::nmt {
namespace {

constexpr char kMagic[8] = {'P', 'R', 'I', 'G', 'E', 'N', 'M', '\0'};

class Writer {
 public:
  void U32(std::uint32_t v) { Le(v, 4); }
  void U64(std::uint64_t v) { Le(v, 8); }
  void I32(int v) { U32(static_cast<std::uint32_t>(v)); }
  void F64(double v) { U64(std::bit_cast<std::uint64_t>(v)); }
  void Str(const std::string& s) {
    U32(static_cast<std::uint32_t>(s.size()));
    out_ += s;
  }
  void Raw(const char* p, std::size_t n) { out_.append(p, n); }
  std::string Take() { return std::move(out_); }

 private:
  void Le(std::uint64_t v, int bytes) {
    for (int i = 0; i < bytes; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  std::string out_;
};

class Reader {
 public:
  explicit Reader(const std::string& s) : s_(s) {}
  std::uint32_t U32() { return static_cast<std::uint32_t>(Le(4)); }
  std::uint64_t U64() { return Le(8); }
  int I32() { return static_cast<int>(U32()); }
  double F64() { return std::bit_cast<double>(U64()); }
  std::string Str() {
    std::uint32_t n = U32();
    Need(n);
    std::string v = s_.substr(pos_, n);
    pos_ += n;
    return v;
  }
  void Expect(const char* p, std::size_t n, const char* what) {
    Need(n);
    if (std::memcmp(s_.data() + pos_, p, n) != 0) throw ParseError(std::string("checkpoint: bad ") + what);
    pos_ += n;
  }
  bool AtEnd() const { return pos_ == s_.size(); }

 private:
  void Need(std::size_t n) const {
    if (s_.size() - pos_ < n) throw ParseError("checkpoint: truncated");
  }
  std::uint64_t Le(int bytes) {
    Need(static_cast<std::size_t>(bytes));
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(s_[pos_ + i])) << (8 * i);
    pos_ += static_cast<std::size_t>(bytes);
    return v;
  }
  const std::string& s_;
  std::size_t pos_ = 0;
};

void WriteMap(Writer& w, const TokenMap& m) {
  auto toks = m.Tokens();
  w.U32(static_cast<std::uint32_t>(toks.size()));
  for (const auto& t : toks) w.Str(t);
}

TokenMap ReadMap(Reader& r) {
  std::uint32_t n = r.U32();
  std::vector<std::string> toks;
  for (std::uint32_t i = 0; i < n; ++i) toks.push_back(r.Str());
  return TokenMap(toks);
}

}  // namespace

std::string SerializeModel(const Model& model) {
  Writer w;
  w.Raw(kMagic, sizeof(kMagic));
  w.U32(kCheckpointVersion);
  const HyperParams& hp = model.hp;
  w.I32(hp.embedding_size);
  w.I32(hp.encoder_state_size);
  w.I32(hp.decoder_state_size);
  w.I32(hp.max_target_parts);
  w.I32(hp.max_contexts);
  w.I32(hp.beam_width);
  w.F64(hp.learning_rate);
  w.I32(hp.epochs);
  w.I32(hp.batch_size);
  w.U64(hp.seed);
  w.F64(hp.dropout_keep);
  WriteMap(w, model.vocab.subtokens);
  WriteMap(w, model.vocab.nodes);
  WriteMap(w, model.vocab.targets);
  auto tensors = model.params.All();
  w.U32(kNumTensors);
  for (int i = 0; i < kNumTensors; ++i) {
    w.Str(std::string(kTensorNames[i]));
    w.U32(static_cast<std::uint32_t>(tensors[i]->rows));
    w.U32(static_cast<std::uint32_t>(tensors[i]->cols));
    for (double v : tensors[i]->data) w.F64(v);
  }
  return w.Take();
}

Model DeserializeModel(const std::string& bytes) {
  Reader r(bytes);
  r.Expect(kMagic, sizeof(kMagic), "magic");
  std::uint32_t version = r.U32();
  if (version != kCheckpointVersion) throw ParseError("checkpoint: unsupported version " + std::to_string(version));
  Model m;
  HyperParams& hp = m.hp;
  hp.embedding_size = r.I32();
  hp.encoder_state_size = r.I32();
  hp.decoder_state_size = r.I32();
  hp.max_target_parts = r.I32();
  hp.max_contexts = r.I32();
  hp.beam_width = r.I32();
  hp.learning_rate = r.F64();
  hp.epochs = r.I32();
  hp.batch_size = r.I32();
  hp.seed = r.U64();
  hp.dropout_keep = r.F64();
  try {
    Validate(hp);
  } catch (const ArgumentError& e) {
    throw ValidationError(std::string("checkpoint: ") + e.what());
  }
  m.vocab.subtokens = ReadMap(r);
  m.vocab.nodes = ReadMap(r);
  m.vocab.targets = ReadMap(r);

  const auto shapes = TensorShapes(m.dims());
  if (r.U32() != kNumTensors) throw ValidationError("checkpoint: wrong tensor count");
  auto tensors = m.params.All();
  for (int i = 0; i < kNumTensors; ++i) {
    std::string name = r.Str();
    if (name != kTensorNames[i]) throw ValidationError("checkpoint: expected tensor " + std::string(kTensorNames[i]) +
                                                       ", found " + name);
    std::size_t rows = r.U32(), cols = r.U32();
    if (rows != shapes[i].first || cols != shapes[i].second) {
      throw ValidationError("checkpoint: tensor " + name + " has shape " + std::to_string(rows) + "x" +
                            std::to_string(cols) + ", expected " + std::to_string(shapes[i].first) + "x" +
                            std::to_string(shapes[i].second));
    }
    *tensors[i] = Tensor<double>(rows, cols);
    for (double& v : tensors[i]->data) {
      v = r.F64();
      if (!std::isfinite(v)) throw ValidationError("checkpoint: tensor " + name + " has a non-finite value");
    }
  }
  if (!r.AtEnd()) throw ParseError("checkpoint: trailing bytes");
  return m;
}

void SaveModel(const Model& model, const std::filesystem::path& path) { WriteFile(path, SerializeModel(model)); }

Model LoadModel(const std::filesystem::path& path) { return DeserializeModel(ReadFile(path)); }

}  // namespace prigen::nmt
