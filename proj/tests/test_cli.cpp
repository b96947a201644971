#include "gralg/cli.hpp"
#include "gralg/json_io.hpp"

#include <doctest.h>

#include <sstream>

using namespace gralg;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> k;
  for (const auto& [key, v] : j.items()) k.push_back(key);
  return k;
}

}  // namespace

TEST_CASE("classify reports the pipeline breakdown, which enumeration confirms") {
  const auto r = call({"classify", "--family", "D3", "--m", "3", "4", "--field", "Fq:11"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(keys(j) == std::vector<std::string>{"family", "ms", "field", "M1", "M2", "M3", "M4", "M0", "M"});
  const GroupSpec spec = GroupSpec::make(Family::D3, {3, 4});
  const FieldSpec f = FieldSpec::finite(11);
  CHECK(j["M"].get<std::uint64_t>() == to_u64(k_class_count_group(spec, f)));
  CHECK(j["M0"].get<std::uint64_t>() == to_u64(pipeline_breakdown(spec, f).n_abelianization));

  const auto brute = call({"classify", "--family", "D3", "--m", "3", "4", "--field", "Fq:11", "--brute"});
  CHECK(brute.code == 0);
  CHECK(brute.out == r.out);
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({"classify", "--family", "D1", "--m", "2", "--field", "Fq:4"}).code == 2);
  CHECK(call({"classify", "--family", "D1", "--m", "2", "--field", "Fq:15"}).code == 2);
  CHECK(call({"classify", "--family", "D1", "--m", "2", "--field", "R"}).code == 2);
  CHECK(call({"classify", "--family", "D9", "--m", "2"}).code == 2);
  CHECK(call({"classify", "--family", "D3", "--m", "2"}).code == 2);  // arity
  CHECK(call({"classify", "--family", "D1", "--m", "0"}).code == 2);
  CHECK(call({"classify", "--family", "D1", "--m", "2", "--format", "xml"}).code == 2);
  CHECK(call({"classify", "--family", "D1"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"table", "tab9"}).code == 2);
  CHECK(call({"codes", "--exps", "2", "--field", "Q"}).code == 2);
  CHECK(call({"loop", "--class", "L8", "--m", "1"}).code == 2);
  CHECK(call({"classify", "--family", "D5", "--m", "6", "6", "6", "--brute", "--ceiling", "64"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("decompose json and tsv carry the same record") {
  const auto j = call({"decompose", "--family", "D4", "--m", "2", "2", "--field", "Fq:3"});
  REQUIRE(j.code == 0);
  const Json d = Json::parse(j.out);
  CHECK(keys(d) == std::vector<std::string>{"family", "ms", "field", "num_fields", "field_degrees", "num_quaternion",
                                            "commutative_dim", "total_dim"});
  CHECK(d["num_fields"] == 18);
  CHECK(d["num_quaternion"] == 4);

  const auto q = call({"decompose", "--family", "D3", "--m", "1", "2", "--format", "tsv"});
  CHECK(q.out ==
        "family\tms\tfield\tnum_fields\tnum_quaternion\tcommutative_dim\ttotal_dim\n"
        "D3\t1,2\tQ\t8\t3\t16\t32\n");
}

TEST_CASE("large parameters print exact counts") {
  const auto r = call({"decompose", "--family", "D5", "--m", "60", "50", "40"});
  REQUIRE(r.code == 0);
  const Json d = Json::parse(r.out);
  const DecompositionSummary s = decompose(GroupSpec::make(Family::D5, {60, 50, 40}), FieldSpec::rationals());
  CHECK(d["num_fields"] == s.num_fields.str());
  CHECK(d["total_dim"].is_string());  // 2^152 does not fit in 64 bits
  CHECK(d["total_dim"] == pow2(152).str());
}

TEST_CASE("loop summary and seeded identity check") {
  const auto r = call({"loop", "--class", "L5", "--m", "1", "1", "1"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["num_fields"] == 20);
  CHECK(j["num_cayley"] == 4);

  const std::vector<std::string> big{"loop", "--class", "L6", "--m", "3", "3", "2", "--check", "--seed", "7"};
  const auto a = call(big), b = call(big);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["moufang"]["mode"] == "random");
  auto other = big;
  other.back() = "8";
  CHECK(call(other).out != a.out);

  const auto small = call({"loop", "--class", "L1", "--m", "2", "--check"});
  CHECK(Json::parse(small.out)["moufang"]["mode"] == "exhaustive");
}

TEST_CASE("codes export matches the library table") {
  const auto r = call({"codes", "--exps", "3", "--field", "Fq:3"});
  REQUIRE(r.code == 0);
  CHECK(r.out == idempotent_table_tsv(primitive_idempotents(AbelianType{3}, 3)));
  const Json j = Json::parse(call({"codes", "--exps", "1", "2", "--field", "Fq:5", "--format", "json"}).out);
  CHECK(j["ambient"] == "C_4 x C_2");
  CHECK(j["verified"] == true);
  CHECK(j["codes"].size() == 8);  // every character is rational over F_5
}

TEST_CASE("table tab1 has zero diff and the documented header") {
  const auto r = call({"table", "tab1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("Group\tNumber of Q-classes\tNumber of F-classes\n", 0) == 0);
  CHECK(r.err.find("diff:") == std::string::npos);
  CHECK(r.err.find("0 stated mismatches") != std::string::npos);

  const auto t2 = call({"table", "tab2"});
  CHECK(t2.code == 0);
  CHECK(t2.err.find("diff:") == std::string::npos);
  CHECK(t2.err.find("annotated: L_8") != std::string::npos);
}

TEST_CASE("verify passes and is byte-stable") {
  const std::vector<std::string> args{"verify", "--family", "D5", "--field", "Q", "--field", "Fq:3", "--ceiling", "256"};
  const auto a = call(args), b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("oracle-mismatch") == std::string::npos);

  const Json j = Json::parse(call({"verify", "--family", "D1", "--format", "json", "--ceiling", "128"}).out);
  CHECK(j["summary"]["oracle_pipeline_disagreements"] == 0);
  CHECK(j["summary"]["theorem_disagreements"] == 3);  // D1(2) over F_3, F_11, F_19
}
