#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "elgv/cli.hpp"

namespace fs = std::filesystem;
using elgv::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("elgv-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void write(const std::string& path, const std::string& content) {
  std::ofstream(path, std::ios::binary) << content;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("keygen, sign and verify round trip for each scheme") {
  TempDir dir;
  write(dir / "m.bin", "attack at dawn");
  for (const std::string scheme : {"classic", "variant", "general"}) {
    std::vector<std::string> keygen{"keygen", "--bits", "64", "--scheme", scheme,
                                    "--seed", "7",      "--out", dir / "k.elgk"};
    if (scheme == "general") keygen.insert(keygen.end(), {"--n", "4"});
    REQUIRE(run(keygen).code == 0);
    CHECK(slurp(dir / "k.elgk").rfind("elgv-key-v1\nscheme=" + scheme + "\n", 0) == 0);
    REQUIRE(run({"sign", "--key", dir / "k.elgk.sec", "--msg", dir / "m.bin", "--seed", "3",
                 "--out", dir / "s.sig"})
                .code == 0);
    const Run ok = run({"verify", "--pub", dir / "k.elgk", "--msg", dir / "m.bin", "--sig",
                        dir / "s.sig"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid\n");

    write(dir / "other.bin", "attack at dusk");
    const Run bad = run({"verify", "--pub", dir / "k.elgk", "--msg", dir / "other.bin", "--sig",
                         dir / "s.sig"});
    CHECK(bad.code == 1);
    CHECK(bad.out == "invalid\n");
  }
}

TEST_CASE("seeded commands are byte-identical") {
  TempDir a, b;
  for (TempDir* d : {&a, &b}) {
    write(*d / "m.bin", "same");
    const Run kg = run({"keygen", "--bits", "96", "--scheme", "variant", "--seed", "99", "--out",
                        *d / "k.elgk"});
    REQUIRE(kg.code == 0);
    REQUIRE(run({"sign", "--key", *d / "k.elgk.sec", "--msg", *d / "m.bin", "--seed", "5", "--out",
                 *d / "s.sig"})
                .code == 0);
  }
  CHECK(slurp(a / "k.elgk.sec") == slurp(b / "k.elgk.sec"));
  CHECK(slurp(a / "s.sig") == slurp(b / "s.sig"));
  CHECK(run({"bench", "--bits", "64", "--seed", "1"}).out ==
        run({"bench", "--bits", "64", "--seed", "1"}).out);
}

TEST_CASE("corrupted signature hex is a parse error") {
  TempDir dir;
  write(dir / "m.bin", "x");
  REQUIRE(run({"keygen", "--bits", "64", "--scheme", "variant", "--seed", "1", "--out",
               dir / "k.elgk"})
              .code == 0);
  REQUIRE(run({"sign", "--key", dir / "k.elgk.sec", "--msg", dir / "m.bin", "--seed", "1",
               "--out", dir / "s.sig"})
              .code == 0);
  std::string sig = slurp(dir / "s.sig");
  sig.replace(sig.find("\nt=") + 3, 1, "Z");
  write(dir / "s.sig", sig);
  const Run r = run({"verify", "--pub", dir / "k.elgk", "--msg", dir / "m.bin", "--sig",
                     dir / "s.sig"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 6") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  TempDir dir;
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"keygen", "--bits", "64", "--scheme", "general", "--out", dir / "k"}).code == 2);
  CHECK(run({"keygen", "--bits", "8", "--scheme", "variant", "--out", dir / "k"}).code == 2);
  CHECK(run({"keygen", "--bits", "64", "--scheme", "variant", "--n", "3", "--out", dir / "k"})
            .code == 2);
  CHECK(run({"verify", "--pub", dir / "missing", "--msg", dir / "m", "--sig", dir / "s"}).code ==
        2);
  CHECK(run({"bench", "--n", "65"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("unhashed signing needs the override") {
  TempDir dir;
  write(dir / "m.bin", "x");
  REQUIRE(run({"keygen", "--bits", "64", "--scheme", "variant", "--seed", "1", "--out",
               dir / "k.elgk"})
              .code == 0);
  const Run refused = run({"sign", "--key", dir / "k.elgk.sec", "--msg", dir / "m.bin", "--hash",
                           "none", "--out", dir / "s.sig"});
  CHECK(refused.code == 2);
  CHECK_FALSE(fs::exists(dir / "s.sig"));
  CHECK(run({"sign", "--key", dir / "k.elgk.sec", "--msg", dir / "m.bin", "--hash", "none",
             "--allow-insecure-hash", "--out", dir / "s.sig"})
            .code == 0);
  CHECK(run({"verify", "--pub", dir / "k.elgk", "--msg", dir / "m.bin", "--sig", dir / "s.sig"})
            .code == 0);
  // Signing needs the private file.
  CHECK(run({"sign", "--key", dir / "k.elgk", "--msg", dir / "m.bin", "--out", dir / "t.sig"})
            .code == 2);
}

TEST_CASE("worked example through the command line") {
  TempDir dir;
  REQUIRE(run({"keygen", "--scheme", "variant", "--p", "509", "--g", "2", "--x", "281", "--out",
               dir / "k.elgk"})
              .code == 0);
  CHECK(slurp(dir / "k.elgk") == "elgv-key-v1\nscheme=variant\np=1fd\ng=2\ny=1e2\n");
  write(dir / "m.bin", std::string("\x01\xb0", 2));  // 432
  REQUIRE(run({"sign", "--key", dir / "k.elgk.sec", "--msg", dir / "m.bin", "--hash", "none",
               "--allow-insecure-hash", "--nonce", "208", "--nonce", "386", "--out",
               dir / "s.sig"})
              .code == 0);
  CHECK(slurp(dir / "s.sig") == "elgv-sig-v1\nscheme=variant\nhash=none\nr=14c\ns=27\nt=1b8\n");
  CHECK(run({"verify", "--pub", dir / "k.elgk", "--msg", dir / "m.bin", "--sig", dir / "s.sig"})
            .code == 0);
  CHECK(run({"sign", "--key", dir / "k.elgk.sec", "--msg", dir / "m.bin", "--nonce", "1", "--out",
             dir / "t.sig"})
            .code == 2);
}

TEST_CASE("nonce-reuse attack on the p = 23 fixture") {
  TempDir dir;
  write(dir / "k.elgk", "elgv-key-v1\nscheme=classic\np=17\ng=5\ny=a\n");
  write(dir / "m1.bin", "\x0a");
  write(dir / "m2.bin", "\x04");
  write(dir / "s1.sig", "elgv-sig-v1\nscheme=classic\nhash=none\nr=b\ns=11\n");
  write(dir / "s2.sig", "elgv-sig-v1\nscheme=classic\nhash=none\nr=b\ns=9\n");
  const std::vector<std::string> base{"attack", "nonce-reuse", "--pub",  dir / "k.elgk",
                                      "--msg1", dir / "m1.bin", "--sig1", dir / "s1.sig",
                                      "--msg2", dir / "m2.bin", "--sig2", dir / "s2.sig"};
  const Run r = run(base);
  CHECK(r.code == 0);
  CHECK(r.out.find("\nk=9\n") != std::string::npos);
  CHECK(r.out.find("\nx=3\n") != std::string::npos);

  auto tight = base;
  tight.insert(tight.end(), {"--budget", "1"});
  CHECK(run(tight).code == 3);

  write(dir / "s2.sig", "elgv-sig-v1\nscheme=classic\nhash=none\nr=b\ns=11\n");
  CHECK(run(base).code == 3);
}

TEST_CASE("pair-reuse attack on the p = 23 fixture") {
  TempDir dir;
  write(dir / "k.elgk", "elgv-key-v1\nscheme=variant\np=17\ng=5\ny=a\n");
  write(dir / "m1.bin", "\x05");
  write(dir / "m2.bin", "\x09");
  write(dir / "s1.sig", "elgv-sig-v1\nscheme=variant\nhash=none\nr=2\ns=11\nt=9\n");
  write(dir / "s2.sig", "elgv-sig-v1\nscheme=variant\nhash=none\nr=2\ns=11\nt=f\n");
  const Run r = run({"attack", "pair-reuse", "--pub", dir / "k.elgk", "--msg1", dir / "m1.bin",
                     "--sig1", dir / "s1.sig", "--msg2", dir / "m2.bin", "--sig2", dir / "s2.sig"});
  CHECK(r.code == 0);
  CHECK(r.out == "l=7\n");
  // Classic signatures are the wrong input for this attack.
  write(dir / "s3.sig", "elgv-sig-v1\nscheme=classic\nhash=none\nr=2\ns=11\n");
  CHECK(run({"attack", "pair-reuse", "--pub", dir / "k.elgk", "--msg1", dir / "m1.bin", "--sig1",
             dir / "s3.sig", "--msg2", dir / "m2.bin", "--sig2", dir / "s2.sig"})
            .code == 2);
}

TEST_CASE("smooth-forge output verifies") {
  TempDir dir;
  write(dir / "k.elgk", "elgv-key-v1\nscheme=classic\np=17\ng=5\ny=a\n");
  write(dir / "m.bin", "\x07");
  const Run r = run({"attack", "smooth-forge", "--pub", dir / "k.elgk", "--beta", "10", "--t0",
                     "15", "--msg", dir / "m.bin", "--hash", "none", "--bound", "1000", "--out",
                     dir / "f.sig"});
  CHECK(r.code == 0);
  CHECK(r.out == "beta=a\nt0=f\nD=2\nlambda=5\nz0=3\nr=a\ns=7\n");
  CHECK(run({"verify", "--pub", dir / "k.elgk", "--msg", dir / "m.bin", "--sig", dir / "f.sig"})
            .code == 0);
  CHECK(run({"attack", "smooth-forge", "--pub", dir / "k.elgk", "--beta", "10", "--t0", "14",
             "--msg", dir / "m.bin", "--out", dir / "g.sig"})
            .code == 3);
}

TEST_CASE("no-hash-forge output verifies") {
  TempDir dir;
  write(dir / "k.elgk", "elgv-key-v1\nscheme=variant\np=17\ng=5\ny=a\n");
  const Run r = run({"attack", "no-hash-forge", "--pub", dir / "k.elgk", "--k", "1", "--kp", "1",
                     "--l", "1", "--lp", "3", "--out-sig", dir / "f.sig", "--out-msg",
                     dir / "f.bin"});
  CHECK(r.code == 0);
  CHECK(r.out == "m=3\nr=4\ns=9\nt=c\n");
  CHECK(slurp(dir / "f.bin") == "\x03");
  CHECK(run({"verify", "--pub", dir / "k.elgk", "--msg", dir / "f.bin", "--sig", dir / "f.sig"})
            .code == 0);

  REQUIRE(run({"keygen", "--bits", "64", "--scheme", "variant", "--seed", "2", "--out",
               dir / "big.elgk"})
              .code == 0);
  CHECK(run({"attack", "no-hash-forge", "--pub", dir / "big.elgk", "--seed", "8", "--out-sig",
             dir / "g.sig", "--out-msg", dir / "g.bin"})
            .code == 0);
  CHECK(run({"verify", "--pub", dir / "big.elgk", "--msg", dir / "g.bin", "--sig", dir / "g.sig"})
            .code == 0);
  CHECK(run({"attack", "no-hash-forge", "--pub", dir / "k.elgk", "--k", "1", "--out-sig",
             dir / "h.sig", "--out-msg", dir / "h.bin"})
            .code == 2);
  CHECK(run({"attack", "no-hash-forge", "--pub", dir / "k.elgk", "--k", "1", "--kp", "1", "--l",
             "1", "--lp", "2", "--out-sig", dir / "h.sig", "--out-msg", dir / "h.bin"})
            .code == 3);
}

TEST_CASE("scheme mismatch between key and signature") {
  TempDir dir;
  write(dir / "k.elgk", "elgv-key-v1\nscheme=classic\np=17\ng=5\ny=a\n");
  write(dir / "m.bin", "\x05");
  write(dir / "s.sig", "elgv-sig-v1\nscheme=variant\nhash=none\nr=2\ns=11\nt=9\n");
  CHECK(run({"verify", "--pub", dir / "k.elgk", "--msg", dir / "m.bin", "--sig", dir / "s.sig"})
            .code == 2);
}

TEST_CASE("bench output format") {
  const Run r = run({"bench", "--bits", "64", "--n", "3", "--seed", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("sign_variant exp=2 mult=3 hash=1 weighted=483 comm_bits=384\n") !=
        std::string::npos);
  CHECK(r.out.find("verify_variant exp=4 mult=2 hash=1 weighted=962 comm_bits=384\n") !=
        std::string::npos);
  CHECK(r.out.find("sign_general exp=3 mult=4 hash=1 weighted=724 comm_bits=448\n") !=
        std::string::npos);
  CHECK(r.out.find("verify_general exp=5 mult=3 hash=1 weighted=1203 comm_bits=448\n") !=
        std::string::npos);
  CHECK(r.out.find("sign_classic exp=1 mult=2 hash=1 weighted=242 comm_bits=320 inv=1\n") !=
        std::string::npos);
  CHECK(r.out.find("verify_classic exp=3 mult=1 hash=1 weighted=721 comm_bits=320 inv=0\n") !=
        std::string::npos);
}
