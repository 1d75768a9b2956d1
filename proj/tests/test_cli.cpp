#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// End-to-end checks through the installed binary (path via POLYMAT_CLI).

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("POLYMAT_CLI");
  REQUIRE_MESSAGE(p != nullptr, "POLYMAT_CLI must point at the binary");
  return p;
}

RunResult run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
    res.out.append(buf.data(), got);
  const int rc = pclose(pipe);
  res.status = WEXITSTATUS(rc);
  return res;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("lambda --n 3 prints 1") {
  const RunResult r = run("lambda --n 3");
  CHECK(r.status == 0);
  CHECK(r.out == "1\n");
}

TEST_CASE("bound --n 3 prints the proved constant") {
  const RunResult r = run("bound --n 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("proved=128") != std::string::npos);
  CHECK(r.out.find("tightened=8") != std::string::npos);
}

TEST_CASE("check on a modular file") {
  write_file("/tmp/polymat_cli_mod.setfn",
             "n 3\nelements a b c\nvalues 0 1 2 3 3 4 5 6\n");
  const RunResult r = run("check --fn /tmp/polymat_cli_mod.setfn");
  CHECK(r.status == 0);
  CHECK(r.out.find("polymatroid: yes") != std::string::npos);
}

TEST_CASE("check rejects a non-polymatroid with exit 1") {
  write_file("/tmp/polymat_cli_bad.setfn",
             "n 2\nelements a b\nvalues 0 1 1 3\n");
  const RunResult r = run("check --fn /tmp/polymat_cli_bad.setfn");
  CHECK(r.status == 1);
  CHECK(r.out.find("polymatroid: no") != std::string::npos);
  CHECK(r.out.find("B2(a,b|{})") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("frobnicate").status == 2);
  CHECK(run("lambda").status == 2);           // missing --n
  CHECK(run("check --fn /does/not/exist").status == 2);
}

TEST_CASE("cap violations exit with 1") {
  CHECK(run("bound --n 40").status == 1);
  CHECK(run("verify --k 9").status == 1);
}

TEST_CASE("construct table round-trips through check and reduce") {
  const RunResult t =
      run("construct --k 2 --emit table --out /tmp/polymat_cli_k2.setfn");
  CHECK(t.status == 0);
  CHECK(run("check --fn /tmp/polymat_cli_k2.setfn").status == 0);

  const RunResult red =
      run("reduce --fn /tmp/polymat_cli_k2.setfn --element a --emit h");
  CHECK(red.status == 0);
  CHECK(red.out.find("a-reduced: yes") != std::string::npos);

  const RunResult el =
      run("elongation --fn /tmp/polymat_cli_k2.setfn --element a");
  CHECK(el.status == 0);
  CHECK(el.out == "2\n");
}

TEST_CASE("worked reduce example through the CLI") {
  write_file("/tmp/polymat_cli_f.setfn", "n 2\nelements a b\nvalues 0 1 2 2\n");
  const RunResult r =
      run("reduce --fn /tmp/polymat_cli_f.setfn --element a --emit both");
  CHECK(r.status == 0);
  CHECK(r.out.find("optimum h(N) = 1") != std::string::npos);
  CHECK(r.out.find("a-reduced: no") != std::string::npos);
}

TEST_CASE("rays file feeds decompose") {
  CHECK(run("rays --n 3 --out /tmp/polymat_cli_rays3.txt").status == 0);
  write_file("/tmp/polymat_cli_u2.setfn",
             "n 3\nelements a b c\nvalues 0 1 1 2 1 2 2 2\n");
  const RunResult r = run(
      "decompose --fn /tmp/polymat_cli_u2.setfn --rays "
      "/tmp/polymat_cli_rays3.txt");
  CHECK(r.status == 0);
  CHECK(r.out.find("residual zero: yes") != std::string::npos);
}

TEST_CASE("vertex and box") {
  const RunResult v =
      run("vertex --fn /tmp/polymat_cli_u2.setfn --perm a,b,c");
  CHECK(v.status == 0);
  CHECK(v.out == "a 1\nb 1\nc 0\n");
  const RunResult b = run("box --fn /tmp/polymat_cli_u2.setfn");
  CHECK(b.status == 0);
  CHECK(b.out.find("a [0, 1]") != std::string::npos);
}

TEST_CASE("structured output carries the schema header") {
  const RunResult r = run("lambda --n 2 --format structured");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"schema\": \"polymat/1\"") != std::string::npos);
  CHECK(r.out.find("\"lambda\": \"1\"") != std::string::npos);
}

TEST_CASE("verify pipeline k=2 and k=3") {
  const RunResult r2 = run("verify --k 2");
  CHECK(r2.status == 0);
  CHECK(r2.out.find("conditions (i)/(ii): hold/hold") != std::string::npos);
  CHECK(r2.out.find("construction a-reduced") != std::string::npos);

  const RunResult r3 = run("verify --k 3");
  CHECK(r3.status == 0);
  CHECK(r3.out.find("f(X) = 7") != std::string::npos);
}

TEST_CASE("rays output is byte-identical across thread counts") {
  const RunResult t1 = run("rays --n 4 --threads 1");
  const RunResult t4 = run("rays --n 4 --threads 4");
  const RunResult t8 = run("rays --n 4 --threads 8");
  CHECK(t1.status == 0);
  CHECK(t1.out == t4.out);
  CHECK(t1.out == t8.out);
  CHECK(t1.out.substr(0, 5) == "4 41\n");

  const RunResult s1 = run("rays --n 3 --format structured --threads 1");
  const RunResult s4 = run("rays --n 3 --format structured --threads 4");
  CHECK(s1.status == 0);
  CHECK(s1.out == s4.out);
}
