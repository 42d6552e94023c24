#include <cstdio>
#include <filesystem>

#include <gtest/gtest.h>

#include "beacon/error.hpp"
#include "beacon/io.hpp"
#include "beacon/library.hpp"
#include "beacon/perturb.hpp"

namespace beacon {
namespace {

ErrorCode code_of(std::string_view text) {
  try {
    instance_from_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::InvalidArgument;
}

std::string message_of(std::string_view text) {
  try {
    instance_from_json(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

const char* kSquare = R"({"name":"sq","polygon":[[0,0],[4,0],[4,4],[0,4]],"ball":["1/2","1/2"],"beacon":[0,0]})";

TEST(Io, ParsesRationalsAndDefaults) {
  const Instance inst = instance_from_json(kSquare);
  EXPECT_EQ(inst.name, "sq");
  EXPECT_EQ(inst.ball, (Point{Scalar(1, 2), Scalar(1, 2)}));
  EXPECT_EQ(inst.mode, BeaconMode::BoundaryOnly);
  EXPECT_EQ(inst.polygon.size(), 4u);
}

TEST(Io, ModeNamesRoundTrip) {
  for (auto m : {BeaconMode::BoundaryOnly, BeaconMode::BoundaryAndExterior, BeaconMode::Free}) {
    EXPECT_EQ(parse_mode(to_string(m)), m);
  }
  EXPECT_THROW(parse_mode("exterior"), Error);
}

TEST(Io, CanonicalRoundTrip) {
  for (const auto& name : builtin_names()) {
    const Instance a = builtin(name);
    const std::string text = instance_to_json(a);
    const Instance b = instance_from_json(text);
    EXPECT_EQ(instance_to_json(b), text) << name;
    EXPECT_EQ(b.polygon.vertices(), a.polygon.vertices());
    EXPECT_EQ(b.annotations, a.annotations);
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance a = random_orthogonal_instance(6, seed);
    EXPECT_EQ(instance_to_json(instance_from_json(instance_to_json(a))), instance_to_json(a));
  }
}

TEST(Io, Errors) {
  EXPECT_EQ(code_of("{"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("[]"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"polygon":[[0,0],[1,0],[1,1]],"ball":[0,0]})"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"polygon":[[0,0],[1,0],[1,1]],"ball":["1/0",0],"beacon":[0,0]})"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"polygon":[[0,0],[1,0],[1,1]],"ball":[0.5,0],"beacon":[0,0]})"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"polygon":[[0,0],[1,0],[1,1]],"ball":[0,0],"beacon":[0,0],"mode":"x"})"),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"polygon":[[0,0],[1,0],[0,1],[1,1]],"ball":[0,0],"beacon":[0,0]})"),
            ErrorCode::InvalidPolygon);
  EXPECT_EQ(code_of(R"({"polygon":[[0,0],[1,0],[1,1]],"ball":[5,5],"beacon":[0,0]})"),
            ErrorCode::PointOutsidePolygon);
  EXPECT_NE(message_of(R"({"polygon":[[0,0],[1,0],[1,"a"]],"ball":[0,0],"beacon":[0,0]})").find("$.polygon[2][1]"),
            std::string::npos);
  EXPECT_NE(message_of("{\n  \"polygon\": [,]\n}").find("line 2"), std::string::npos);
}

TEST(Io, Files) {
  const auto path = std::filesystem::temp_directory_path() / "beacon_io_test.json";
  const Instance a = builtin_l_shape();
  save_instance(a, path.string());
  EXPECT_EQ(instance_to_json(load_instance(path.string())), instance_to_json(a));
  std::filesystem::remove(path);
  try {
    load_instance(path.string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

}  // namespace
}  // namespace beacon
