// Copyright 2026 The qpuf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpuf/serialization.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>

#include "qpuf/error.hpp"

namespace qpuf {
namespace {

TEST(Serialization, HamiltonianRoundTripIsExact) {
  const HermitianOperator h = sample_gue(8, 42);
  const io::Json j = io::to_json(h);
  EXPECT_EQ(j["dim"], 8);
  EXPECT_EQ(j["ensemble"], "GUE");
  EXPECT_EQ(j["seed"], 42u);
  EXPECT_EQ(j["entries"].size(), 64u);
  const HermitianOperator back = io::hermitian_from_json(io::Json::parse(io::dump(j)));
  EXPECT_EQ(back.entries(), h.entries());
  EXPECT_EQ(back.seed(), h.seed());
  EXPECT_EQ(back.ensemble(), h.ensemble());
}

TEST(Serialization, PlantedSpectrumSurvives) {
  PseudoChaoticSpec spec;
  spec.dim = 8;
  spec.seed = 3;
  const HermitianOperator h = build_pseudo_chaotic(spec);
  const HermitianOperator back = io::hermitian_from_json(io::Json::parse(io::dump(io::to_json(h))));
  EXPECT_EQ(back.planted_spectrum(), h.planted_spectrum());
  EXPECT_EQ(back.ensemble(), Ensemble::kPseudoChaotic);
}

TEST(Serialization, UnitaryRoundTripIsExact) {
  const UnitaryOperator u = sample_haar_unitary(4, 5);
  const UnitaryOperator back = io::unitary_from_json(io::Json::parse(io::dump(io::to_json(u))));
  EXPECT_EQ(back.entries(), u.entries());
  EXPECT_EQ(back.provenance(), UnitaryProvenance::kHaar);
}

TEST(Serialization, StatesRoundTrip) {
  const QuantumState pure = random_pure_state(4, 1);
  EXPECT_EQ(io::state_from_json(io::to_json(pure)).vector(), pure.vector());
  const QuantumState bell = max_entangled(3);
  const QuantumState back = io::state_from_json(io::to_json(bell));
  ASSERT_TRUE(back.factorization().has_value());
  EXPECT_EQ(back.factorization()->dim_c, 3u);
  const QuantumState mixed = QuantumState::maximally_mixed(4);
  const io::Json mj = io::to_json(mixed);
  EXPECT_EQ(mj["form"], "density");
  EXPECT_EQ(io::state_from_json(mj).density_matrix(), mixed.density_matrix());
}

TEST(Serialization, RejectsMalformedDocuments) {
  io::Json j = io::to_json(sample_gue(4, 1));
  j["entries"].erase(0);
  EXPECT_THROW(io::hermitian_from_json(j), Error);
  io::Json k = io::to_json(sample_gue(4, 1));
  k["entries"][1] = io::Json::array({1.0, 0.5});  // breaks Hermiticity
  EXPECT_THROW(io::hermitian_from_json(k), Error);
  EXPECT_THROW(io::hermitian_from_json(io::Json::object()), Error);
}

TEST(Serialization, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 4096.0, -2.5e-300, std::numeric_limits<double>::max()})
    EXPECT_EQ(std::stod(io::format_double(v)), v);
  EXPECT_EQ(io::format_double(4096.0), "4096");
}

TEST(Serialization, SffCsvLayout) {
  spectral::SffCurve c;
  c.times = {0.0, 0.5};
  c.values = {256.0, 100.25};
  c.std_error = {0.0, 1.5};
  c.samples = 3;
  c.dim = 16;
  const std::string csv = io::sff_csv(c);
  EXPECT_EQ(csv, "t,sff_mean,sff_stderr,samples,dim,ensemble\n0,256,0,3,16,GUE\n0.5,100.25,1.5,3,16,GUE\n");
}

TEST(Serialization, ReportEntries) {
  const io::ReportEntry e[] = {{"density_tv", 0.01, 0.05, true}};
  const io::Json j = io::to_json(std::span<const io::ReportEntry>(e));
  EXPECT_EQ(j[0]["statistic"], "density_tv");
  EXPECT_EQ(j[0]["pass"], true);
}

TEST(Serialization, WriteAndReadFile) {
  const auto dir = std::filesystem::temp_directory_path() / "qpuf-io-test" / "nested";
  const auto path = dir / "h.json";
  io::write_text(path, io::dump(io::to_json(sample_gue(2, 9))));
  EXPECT_EQ(io::hermitian_from_json(io::read_json(path)).entries(), sample_gue(2, 9).entries());
  std::filesystem::remove_all(dir.parent_path());
  EXPECT_THROW(io::read_json(path), Error);
}

}  // namespace
}  // namespace qpuf
