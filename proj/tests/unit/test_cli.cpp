#include <doctest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>

#ifndef COOKIE_CLI_PATH
#error "COOKIE_CLI_PATH must point at the cookiewalk binary"
#endif

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(COOKIE_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), n);
  r.status = pclose(pipe.release());
  return r;
}

}  // namespace

TEST_CASE("same config and seed give byte-identical output") {
  const std::string args = "simulate-walk --p 0.9,0.9,0.9 --level 300 --reps 40 --seed 0x2a --format csv";
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.status == 0);
  CHECK(!a.out.empty());
  CHECK(a.out == b.out);
  CHECK(a.out.find("rep,") != std::string::npos);

  const Run other = run("simulate-walk --p 0.9,0.9,0.9 --level 300 --reps 40 --seed 0x2b --format csv");
  CHECK(other.out != a.out);

  const Run chain1 = run("simulate-chain --p 0.9,0.9 --steps 500 --seed 5");
  const Run chain2 = run("simulate-chain --p 0.9,0.9 --steps 500 --seed 5");
  CHECK(chain1.status == 0);
  CHECK(chain1.out == chain2.out);
}

TEST_CASE("analyze labels the phase") {
  const Run rec = run("analyze --m 1 --p 0.6");
  CHECK(rec.status == 0);
  CHECK(rec.out.find("\"Recurrent\"") != std::string::npos);

  const Run two = run("analyze --m 2 --p 0.95,0.95 --cap 1024");
  CHECK(two.status == 0);
  CHECK(two.out.find("\"TransientZeroSpeed\"") != std::string::npos);
  CHECK(two.out.find("\"g0\"") != std::string::npos);
}

TEST_CASE("bad input is rejected with a nonzero status") {
  CHECK(run("analyze --m 2 --p 0.4,0.9").status != 0);
  CHECK(run("analyze --m 3 --p 0.9,0.9").status != 0);
  CHECK(run("no-such-command").status != 0);
}
