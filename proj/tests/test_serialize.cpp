#include <cmath>
#include <limits>

#include "doctest.h"
#include "hmap/serialize.hpp"

using namespace hmap;

TEST_CASE("boundary specs round-trip through JSON bit-for-bit") {
  const char* docs[] = {
      R"({"kind":"exponential","n":1,"scale":[1.0,0.0]})",
      R"({"kind":"trig_poly","coeffs":{"3":[2.0,1.0],"-2":[0.25,-1.5]}})",
      R"({"kind":"extremal","n":2,"M":1.5,"alpha":[1.0,0.0],"beta":[0.0,1.0]})",
      R"({"kind":"samples","values":[[1.0,0.0],[0.0,1.0]]})",
  };
  for (const char* doc : docs) {
    const BoundarySpec spec = boundary_from_json(doc);
    const std::string emitted = to_json(spec);
    const BoundarySpec again = boundary_from_json(emitted);
    CHECK(to_json(again) == emitted);
  }
}

TEST_CASE("boundary JSON preserves doubles exactly") {
  TrigPolyBoundary poly;
  poly.coeffs[3] = Complex{0.1 + 0.2, -1.0 / 3.0};  // not exactly representable
  poly.coeffs[-7] = Complex{6.02214076e23, 5e-324}; // denormal corner
  const BoundarySpec spec{poly};
  const BoundarySpec back = boundary_from_json(to_json(spec));
  const auto& parsed = back.get_if<TrigPolyBoundary>()->coeffs;
  CHECK(parsed.at(3) == poly.coeffs.at(3));
  CHECK(parsed.at(-7) == poly.coeffs.at(-7));
}

TEST_CASE("malformed boundary JSON is rejected with MalformedJson") {
  const char* bad[] = {
      "not json at all",
      R"({"n":1})",
      R"({"kind":"nonsense"})",
      R"({"kind":"exponential","n":1,"scale":[1.0]})",
      R"({"kind":"trig_poly","coeffs":{"x":[1.0,0.0]}})",
      R"({"kind":"extremal","n":1,"M":1.0,"alpha":[1,0]})",
  };
  for (const char* doc : bad) {
    CHECK_THROWS_AS(boundary_from_json(doc), Error);
  }
}

TEST_CASE("coefficient tables round-trip through JSON") {
  const CoeffTable table = extremal_coeffs(1, 2.0, {0, 1}, {1, 0}, 7);
  const std::string emitted = to_json(table);
  const CoeffTable back = table_from_json(emitted);
  REQUIRE(back.truncation() == table.truncation());
  for (int k = 0; k <= table.truncation(); ++k) {
    CHECK(back.a[k] == table.a[k]);
    CHECK(back.b[k] == table.b[k]);
  }
  CHECK(back.tail_bound_rate == table.tail_bound_rate);

  CHECK_THROWS_AS(table_from_json(R"({"N":2,"a":[[0,0]],"b":[]})"), Error);
  CHECK_THROWS_AS(table_from_json("[1,2,3]"), Error);
}

TEST_CASE("radius reports serialize their parameter snapshot") {
  const RadiusReport report = bohr_lp(std::numeric_limits<double>::infinity());
  const std::string json = to_json(report);
  CHECK(json.find("\"name\":\"r_p\"") != std::string::npos);
  CHECK(json.find("\"method\":\"closed_form\"") != std::string::npos);
  CHECK(json.find("\"p\":\"inf\"") != std::string::npos);
  CHECK(json.find("\"flags\":[]") != std::string::npos);
}

TEST_CASE("majorant CSV has the documented header and row count") {
  const CoeffTable table = extremal_coeffs(1, 1.0, {1, 0}, {1, 0}, 41);
  std::vector<double> r_values;
  for (int i = 0; i <= 90; ++i) r_values.push_back(0.01 * i);
  const std::string csv = majorant_csv(table, r_values);
  CHECK(csv.rfind("r,value,tail\n", 0) == 0);
  std::size_t rows = 0;
  for (char c : csv) rows += c == '\n';
  CHECK(rows == 92);  // header + 91 samples
}
