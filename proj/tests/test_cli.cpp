#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "catkit/cli.hpp"
#include "catkit/gen.hpp"
#include "catkit/groth.hpp"
#include "catkit/serialize.hpp"
#include "support/cats.hpp"

using namespace catkit;

namespace {

int cli(const std::vector<std::string>& args, std::string* text = nullptr) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  if (text) *text = out.str() + err.str();
  return code;
}

std::string tmp_file(const std::string& name, const std::string& content) {
  std::string path = "cli_tmp_" + name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

std::string read_back(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("check: a lawful category passes, reports render both ways") {
  std::string path = tmp_file("terminal.json", dump(testcats::terminal_cat()));
  std::string text;
  CHECK(cli({"check", path}, &text) == 0);
  CHECK(text.find("pass") != std::string::npos);

  CHECK(cli({"check", path, "--format", "records"}, &text) == 0);
  CHECK(text.find("result\tpass\n") != std::string::npos);
}

TEST_CASE("check: a broken compose table fails with a witness") {
  FinCat c = testcats::z2_cat();
  c.compose[{"s", "e"}] = "e";  // breaks the unit law
  std::string path = tmp_file("broken.json", dump(c));
  std::string text;
  CHECK(cli({"check", path}, &text) == 1);
  CHECK(text.find("FAIL") != std::string::npos);

  CHECK(cli({"check", path, "--format", "records"}, &text) == 1);
  CHECK(text.find("witness\t") != std::string::npos);
  CHECK(text.find("result\tfail\n") != std::string::npos);
}

TEST_CASE("zoo graphs piped through mongroth yields the 19-object total") {
  std::string zoo_out = "cli_tmp_graphs.json";
  CHECK(cli({"zoo", "graphs", "--vertex-bound", "2", "-o", zoo_out}) == 0);

  std::string mg_out = "cli_tmp_graphs_total.json";
  CHECK(cli({"mongroth", zoo_out, "-o", mg_out}) == 0);
  MonoidalFibrationData m = load_monoidal_fibration(read_back(mg_out));
  CHECK(m.carrier.total.objects.size() == 19);  // 1 + 2 + 16

  std::string text;
  CHECK(cli({"check", mg_out}, &text) == 0);
}

TEST_CASE("groth emits a checkable fibration") {
  Rng r(7);
  FinCat base = random_poset(r, 3);
  IndexedCat m = random_inclusion_indexed(r, base, 2);
  std::string path = tmp_file("indexed.json", dump(m));
  std::string out = "cli_tmp_fibration.json";
  CHECK(cli({"groth", path, "-o", out}) == 0);

  std::string text;
  CHECK(cli({"check", out}, &text) == 0);
  CHECK(cli({"roundtrip", out}, &text) == 0);
}

TEST_CASE("roundtrip flags a mutated cleavage") {
  GrothResult g = grothendieck(graph_opindexed(2).carrier);
  ClovenFibration p = g.fibration;
  REQUIRE(!p.cleavage.empty());
  // point the first chosen lift at an unrelated identity
  auto it = p.cleavage.begin();
  it->second = p.total.id(*p.total.objects.rbegin());
  std::string path = tmp_file("mutated.json", dump(p));
  std::string text;
  CHECK(cli({"roundtrip", path}, &text) == 1);
  CHECK((text.find("witness") != std::string::npos ||
         text.find("FAIL") != std::string::npos));
}

TEST_CASE("transfer works in both directions on the slice fixture") {
  std::string lax_path = "cli_tmp_slices.json";
  CHECK(cli({"zoo", "slices", "--base", "square", "-o", lax_path}) == 0);

  std::string fw_path = "cli_tmp_slices_fw.json";
  CHECK(cli({"transfer", "global-to-fibrewise", lax_path, "-o", fw_path}) ==
        0);
  CHECK(entity_kind(read_back(fw_path)) == "fibrewise_monoidal");

  std::string back_path = "cli_tmp_slices_back.json";
  CHECK(cli({"transfer", "fibrewise-to-global", fw_path, "-o", back_path}) ==
        0);
  CHECK(entity_kind(read_back(back_path)) == "lax_monoidal_indexed");

  std::string text;
  CHECK(cli({"roundtrip", lax_path}, &text) == 0);
}

TEST_CASE("seeded generation is reproducible and seed-sensitive") {
  std::string a, b, c;
  CHECK(cli({"zoo", "random-indexed", "--seed", "5"}, &a) == 0);
  CHECK(cli({"zoo", "random-indexed", "--seed", "5"}, &b) == 0);
  CHECK(cli({"zoo", "random-indexed", "--seed", "6"}, &c) == 0);
  CHECK(a == b);
  CHECK(a != c);

  std::string path = tmp_file("random.json", a);
  std::string text;
  CHECK(cli({"check", path}, &text) == 0);
}

TEST_CASE("unusable input exits 2") {
  std::string path = tmp_file("garbage.json", "not json at all");
  CHECK(cli({"check", path}) == 2);
  CHECK(cli({"check", "no_such_file.json"}) == 2);
  CHECK(cli({"frobnicate"}) == 2);
  CHECK(cli({"zoo", "no-such-fixture"}) == 2);
  CHECK(cli({"zoo", "graphs", "--vertex-bound", "3"}) == 2);  // over the cap
}
