#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "limiter/cluster.hpp"
#include "limiter/corpus.hpp"
#include "limiter/limiter_space.hpp"
#include "limiter/literal.hpp"
#include "limiter/sequence_parser.hpp"

using namespace limiter;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.insert(args.begin(), "--json");
  const auto r = run(args);
  INFO(r.out << r.err);
  REQUIRE(r.code == expected_code);
  return json::parse(r.out);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Enough of JSON Schema for the shipped document: type, enum, required,
// properties, additionalProperties, items, min/maxItems, minimum, anyOf, $ref.
class SchemaCheck {
 public:
  explicit SchemaCheck(json root) : root_(std::move(root)) {}

  std::string check(const json& doc) const {
    std::string why;
    return valid(root_, doc, "$", why) ? std::string() : why;
  }

 private:
  static bool has_type(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    return false;
  }

  bool valid(const json& s, const json& v, const std::string& at, std::string& why) const {
    if (s.contains("$ref")) {
      const auto ref = s["$ref"].get<std::string>();
      return valid(root_.at(json::json_pointer(ref.substr(1))), v, at, why);
    }
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
      } else {
        ok = has_type(v, s["type"].get<std::string>());
      }
      if (!ok) return fail(why, at + ": wrong type");
    }
    if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end()) {
      return fail(why, at + ": not in enum");
    }
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>()) {
      return fail(why, at + ": below minimum");
    }
    if (s.contains("anyOf")) {
      bool any = false;
      std::string inner;
      for (const auto& alt : s["anyOf"]) any = any || valid(alt, v, at, inner);
      if (!any) return fail(why, at + ": no alternative matched (" + inner + ")");
    }
    if (v.is_object()) {
      for (const auto& key : s.value("required", json::array())) {
        if (!v.contains(key.get<std::string>())) return fail(why, at + ": missing " + key.get<std::string>());
      }
      const auto props = s.value("properties", json::object());
      for (const auto& [k, sub] : v.items()) {
        if (props.contains(k)) {
          if (!valid(props[k], sub, at + "." + k, why)) return false;
        } else if (s.contains("additionalProperties") && s["additionalProperties"] == false) {
          return fail(why, at + ": unexpected key " + k);
        }
      }
    }
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) return fail(why, at + ": too short");
      if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) return fail(why, at + ": too long");
      if (s.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (!valid(s["items"], v[i], at + "[" + std::to_string(i) + "]", why)) return false;
        }
      }
    }
    return true;
  }

  static bool fail(std::string& why, const std::string& msg) {
    why = msg;
    return false;
  }

  json root_;
};

const SchemaCheck& schema() {
  static const SchemaCheck s(json::parse(slurp(LIMITER_SOURCE_DIR "/docs/output.schema.json")));
  return s;
}

void require_valid(const json& doc) {
  const auto why = schema().check(doc);
  INFO(doc.dump());
  REQUIRE(why == "");
}

struct TempFile {
  explicit TempFile(const std::string& body) {
    path = (std::filesystem::temp_directory_path() / ("limiter_cli_test_" + std::to_string(counter++) + ".txt")).string();
    std::ofstream(path) << body;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string path;
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("limit command") {
  auto r = run({"limit", "const(7)"});
  CHECK(r.code == 0);
  CHECK(r.out == "lambda: {7}\nclassical: 7\n");
  r = run({"limit", "interleave(const(3),const(5))"});
  CHECK(r.code == 0);
  CHECK(r.out == "lambda: {3} ∪ {5}\nclassical: none\n");
  r = run({"limit", "const(1/0)"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("limiter: domain error") == 0);
  r = run({"limit", "geom(1, 2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("column 10") != std::string::npos);
}

TEST_CASE("similar command") {
  CHECK(run({"similar", "const(0)", "geom(1,1/2)"}).out == "true\n  {0}\n  {0}\n");
  CHECK(run({"similar", "const(0)", "const(1)"}).out.rfind("false", 0) == 0);
  CHECK(run({"similar", "arith(0,1)", "arith(0,1)"}).out.rfind("true", 0) == 0);
  CHECK(run({"similar", "const(0)", "const(1", }).code == 2);
  const auto three = run({"similar", "const(0)", "const(1)", "const(2)"});
  CHECK(three.code == 2);
  CHECK(three.err.find("arity") != std::string::npos);
}

TEST_CASE("member command") {
  auto r = run({"member", "interleave(const(3),const(5))", "(2,6)"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  CHECK(run({"member", "const(0)", "(0,1)"}).out == "false\n");
  CHECK(run({"member", "const(0)", "(0,1"}).code == 2);
  CHECK(run({"member", "const(0)", "(1,0)"}).code == 2);
  CHECK(run({"member", "const(5)", "(-1,1)", "(4,6)"}).out == "true\n");
  r = run({"member", "--witness", "const(5)", "(-1,1)", "(4,6)"});
  CHECK(r.out == "true  via (4,6)*\n");
  r = run({"member", "--witness", "const(5)", "(-1,1)"});
  CHECK(r.code == 1);
  CHECK(r.err.find("not a member") != std::string::npos);
}

TEST_CASE("certify command") {
  auto r = run({"certify", "geom(1,1/2)", "(-1/10,1/10)"});
  CHECK(r.code == 0);
  CHECK(r.out == "N = 4 (terms N..1004 checked, monotone-distance)\n");
  r = run({"certify", "geom(1,-1)", "(0,2)"});
  CHECK(r.code == 1);
  CHECK(r.err.find("not a neighborhood") != std::string::npos);
  CHECK(run({"certify", "const(5)", "(4,6)"}).out.rfind("N = 1 ", 0) == 0);
  CHECK(run({"--horizon", "10", "certify", "const(5)", "(4,6)"}).out == "N = 1 (terms N..11 checked, constant)\n");
  CHECK(run({"--scan-bound", "10", "certify", "ratio(n, 1)", "(1000,+inf]"}).code == 1);
}

TEST_CASE("oracle command") {
  auto r = run({"oracle", "const(7)"});
  CHECK(r.code == 0);
  CHECK(r.out == "estimate: {7}\nsymbolic: {7}\ndistance: 0\n");
  CHECK(run({"oracle", "arith(0,1)"}).out.rfind("estimate: {+inf}\n", 0) == 0);
  const auto doc = run_json({"oracle", "denseosc(0,1)"});
  CHECK(doc["result"][0]["distance"].get<double>() < 0.01);
  CHECK(doc["inputs"]["N"] == 100000);
  CHECK(run_json({"--oracle-n", "1000", "oracle", "const(1)"})["result"][0]["estimate"]["sampleCount"] == 500);
  CHECK(run({"--oracle-n", "5", "oracle", "const(1)"}).code == 2);
}

TEST_CASE("parse and cluster commands") {
  CHECK(run({"parse", "ratio( 2n^2 , n^2+1 )"}).out == "ratio(2n^2, n^2+1)\n");
  const auto r = run({"cluster", "geom(1,-1)"});
  CHECK(r.out == "geom(1, -1)\n  {-1} ∪ {1}  (oscillating)\n");
  CHECK(run({"cluster", "ratio(n, n+1)"}).out.find("convergent to 1") != std::string::npos);
}

TEST_CASE("verify command") {
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const auto manifest = run({"verify", "--manifest"});
  CHECK(manifest.code == 0);
  CHECK(manifest.out == slurp(LIMITER_SOURCE_DIR "/data/corpus_manifest.txt"));
  CHECK(manifest.out == corpus_manifest());
}

TEST_CASE("expression files") {
  TempFile f("# two sequences\nconst(0)\n\ngeom(1, 1/2)\n");
  CHECK(run({"similar", "@" + f.path}).out.rfind("true", 0) == 0);
  const auto doc = run_json({"limit", "@" + f.path, "const(2)"});
  CHECK(doc["result"].size() == 3);
  CHECK(doc["inputs"]["exprs"][2] == "const(2)");
  TempFile bad("const(1)\nconst(\n");
  const auto err = run_json({"limit", "@" + bad.path}, 2);
  CHECK(err["error"]["class"] == "SyntaxError");
  CHECK(err["error"]["line"] == 2);
  CHECK(run({"limit", "@/nonexistent/limiter/file"}).code == 2);
}

TEST_CASE("structured output matches the schema and round-trips") {
  auto doc = run_json({"limit", "const(7)", "geom(1,-1)", "denseosc(0,1)"});
  require_valid(doc);
  CHECK(doc["command"] == "limit");
  for (const auto& item : doc["result"]) {
    const auto p = limiter_point_from_json(item);
    CHECK(to_json(p) == item);
  }
  CHECK(doc["result"][0]["classical"] == "7");
  CHECK(doc["result"][1]["classical"].is_null());
  CHECK(parse_closed_set(doc["result"][1]["lambda"].get<std::string>()) == parse_closed_set("{-1,1}"));

  doc = run_json({"cluster", "interleave(const(3),const(5))"});
  require_valid(doc);
  CHECK(closed_set_from_json(doc["result"][0]["set"]) == parse_closed_set("{3} ∪ {5}"));

  doc = run_json({"certify", "interleave(geom(1,1/2), arith(0,1))", "(-1/10,1/10) ∪ (100,+inf]"});
  require_valid(doc);
  const auto cert = certificate_from_json(doc["result"][0]);
  CHECK(cert.start_index == 201);
  CHECK(to_json(cert) == doc["result"][0]);

  doc = run_json({"member", "--witness", "const(0)", "(-1,1)"});
  require_valid(doc);
  CHECK(doc["result"][0]["witness"] == "(-1,1)");
  CHECK(doc["inputs"]["open"] == json::array({"(-1,1)"}));

  doc = run_json({"similar", "const(0)", "geom(1,1/2)"});
  require_valid(doc);
  CHECK(doc["result"]["similar"] == true);

  doc = run_json({"parse", "tail(2, const(1))"});
  require_valid(doc);
  CHECK(parse_expr(doc["result"][0]["expr"].get<std::string>()) == parse_expr("tail(2, const(1))"));

  require_valid(run_json({"--oracle-n", "1000", "oracle", "geom(1,-1)"}));

  doc = run_json({"certify", "geom(1,-1)", "(0,2)"}, 1);
  require_valid(doc);
  CHECK(doc["result"].is_null());
  CHECK(doc["error"]["class"] == "NotANeighborhood");

  doc = run_json({"limit", "interleave(const(1) const(2))"}, 2);
  require_valid(doc);
  CHECK(doc["error"]["class"] == "SyntaxError");
  CHECK(doc["error"]["column"] == 21);
  CHECK(doc["diagnostics"].size() == 1);

  doc = run_json({"limit", "interleave(const(1))"}, 2);
  require_valid(doc);
  CHECK(doc["error"]["class"] == "ArityError");

  doc = run_json({"member", "const(0)", "∅"}, 0);
  require_valid(doc);
  CHECK(doc["result"][0]["member"] == false);
}

TEST_CASE("schema checker rejects malformed documents") {
  CHECK(schema().check(json{{"command", "limit"}}) != "");
  CHECK(schema().check(json{{"command", "nope"}, {"inputs", json::object()}, {"result", nullptr}, {"diagnostics", json::array()}}) != "");
  CHECK(schema().check(json{{"command", "limit"}, {"inputs", json::object()}, {"result", json::array({1})}, {"diagnostics", json::array()}}) != "");
  CHECK(schema().check(json{{"command", "limit"}, {"inputs", json::object()}, {"result", nullptr}, {"diagnostics", json::array()}}) == "");
}
