#include "elgv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "elgv/attacks.hpp"
#include "elgv/costmeter.hpp"
#include "elgv/errors.hpp"
#include "elgv/sigfile.hpp"

namespace elgv::cli {
namespace {

/// Failures that are the user's fault rather than an attack's.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<unsigned char> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_text(const std::string& path) {
  const auto bytes = read_bytes(path);
  return {bytes.begin(), bytes.end()};
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw UsageError("write failed for " + path);
}

template <class F>
auto with_file_context(const std::string& path, F&& parse) {
  try {
    return parse(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

DecodedKey load_key(const std::string& path) {
  return with_file_context(path, [](const std::string& text) { return decode_key(text); });
}

SignatureFile load_signature(const std::string& path) {
  return with_file_context(path, [](const std::string& text) { return decode_signature(text); });
}

NonceSource make_rng(const std::optional<std::uint64_t>& seed) {
  return seed ? NonceSource::seeded(*seed) : NonceSource::system();
}

Natural flag_natural(const std::string& text, const char* name) {
  try {
    return parse_flag_integer(text);
  } catch (const ParseError&) {
    throw UsageError(std::string("--") + name + ": not an integer: '" + text + "'");
  }
}

Digest digest_file(const std::string& path, HashMode mode, const Natural& p) {
  const auto bytes = read_bytes(path);
  return digest_message(bytes, mode, p);
}

void require_scheme(const PublicKey& pub, const SignatureFile& sig) {
  if (!(pub.scheme == sig.scheme())) {
    throw UsageError("signature scheme does not match the key");
  }
}

// ---------------------------------------------------------------------------

struct KeygenArgs {
  unsigned bits = 0;
  std::string scheme;
  unsigned n = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string p, g, x;
};

int run_keygen(const KeygenArgs& a, std::ostream& out) {
  Scheme scheme{parse_scheme_name(a.scheme), 0};
  if (scheme.kind == SchemeKind::general) {
    if (a.n < 1 || a.n > kMaxGeneralNonces) {
      throw UsageError("--n must lie in [1, " + std::to_string(kMaxGeneralNonces) +
                       "] for the general scheme");
    }
    scheme.n = a.n;
  } else if (a.n != 0) {
    throw UsageError("--n applies to the general scheme only");
  }

  PrivateKey key;
  const bool injected = !a.p.empty() || !a.g.empty() || !a.x.empty();
  if (injected) {
    if (a.p.empty() || a.g.empty() || a.x.empty()) throw UsageError("--p, --g and --x go together");
    try {
      key = make_private_key(flag_natural(a.p, "p"), flag_natural(a.g, "g"), flag_natural(a.x, "x"),
                             scheme);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  } else {
    if (a.bits < 16 || a.bits > 4096) throw UsageError("--bits must lie in [16, 4096]");
    NonceSource rng = make_rng(a.seed);
    key = generate_keys(a.bits, scheme, rng);
  }
  write_file(a.out, encode_key(key.pub));
  write_file(a.out + ".sec", encode_key(key, true));
  out << "public=" << a.out << "\nprivate=" << a.out << ".sec\n";
  return kOk;
}

struct SignArgs {
  std::string key, msg, hash = "sha256", out;
  std::optional<std::uint64_t> seed;
  bool allow_insecure = false;
  std::vector<std::string> nonces;
};

int run_sign(const SignArgs& a, std::ostream& out) {
  const HashMode mode = parse_hash_mode(a.hash);
  if (mode == HashMode::none && !a.allow_insecure) {
    throw UsageError("--hash none permits existential forgery; pass --allow-insecure-hash");
  }
  const DecodedKey decoded = load_key(a.key);
  const auto* key = std::get_if<PrivateKey>(&decoded);
  if (!key) throw UsageError(a.key + " holds no private key");
  const PublicKey& pub = key->pub;
  const Digest m = digest_file(a.msg, mode, pub.p);

  std::vector<Natural> given;
  for (const auto& s : a.nonces) given.push_back(flag_natural(s, "nonce"));
  const std::size_t expected = pub.scheme.kind == SchemeKind::classic   ? 1
                               : pub.scheme.kind == SchemeKind::variant ? 2
                                                                        : pub.scheme.n;
  if (!given.empty() && given.size() != expected) {
    throw UsageError("this scheme takes " + std::to_string(expected) + " nonce(s)");
  }
  NonceSource rng = make_rng(a.seed);

  SignatureFile file;
  file.hash = mode;
  try {
    switch (pub.scheme.kind) {
      case SchemeKind::classic:
        file.sig = given.empty() ? sign_classic_random(*key, m, rng)
                                 : sign_classic(*key, m, ClassicNonce{given[0]});
        break;
      case SchemeKind::variant:
        file.sig = sign_variant(*key, m,
                                given.empty() ? draw_variant_nonces(pub.p, rng)
                                              : VariantNonces{given[0], given[1]});
        break;
      case SchemeKind::general:
        if (given.empty()) given = draw_general_nonces(pub.p, pub.scheme.n, rng);
        file.sig = sign_general(*key, m, given);
        break;
    }
  } catch (const InvalidNonceError& e) {
    throw UsageError(e.what());
  } catch (const ResampleRequired& e) {
    throw UsageError(e.what());
  }
  write_file(a.out, encode_signature(file));
  out << "signature=" << a.out << "\n";
  return kOk;
}

struct VerifyArgs {
  std::string pub, msg, sig;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const DecodedKey decoded = load_key(a.pub);
  const PublicKey& pub = public_part(decoded);
  const SignatureFile file = load_signature(a.sig);
  require_scheme(pub, file);
  const Digest m = digest_file(a.msg, file.hash, pub.p);

  const bool ok = std::visit(
      [&](const auto& sig) {
        using T = std::decay_t<decltype(sig)>;
        if constexpr (std::is_same_v<T, ClassicSignature>) return verify_classic(pub, m, sig);
        if constexpr (std::is_same_v<T, VariantSignature>) return verify_variant(pub, m, sig);
        if constexpr (std::is_same_v<T, GeneralSignature>) return verify_general(pub, m, sig);
      },
      file.sig);
  out << (ok ? "valid" : "invalid") << "\n";
  return ok ? kOk : kInvalidSignature;
}

struct ReuseArgs {
  std::string pub, msg1, sig1, msg2, sig2;
  std::string budget;
};

template <class Sig>
std::pair<Natural, Sig> load_signed(const std::string& msg, const std::string& sig_path,
                                    const PublicKey& pub) {
  const SignatureFile file = load_signature(sig_path);
  const auto* sig = std::get_if<Sig>(&file.sig);
  if (!sig) throw UsageError(sig_path + " has the wrong signature scheme for this attack");
  return {digest_file(msg, file.hash, pub.p).value, *sig};
}

Natural budget_of(const std::string& text) {
  return text.empty() ? Natural(attacks::kDefaultEnumerationBudget) : flag_natural(text, "budget");
}

int run_nonce_reuse(const ReuseArgs& a, std::ostream& out) {
  const DecodedKey decoded = load_key(a.pub);
  const PublicKey& pub = public_part(decoded);
  auto [m1, s1] = load_signed<ClassicSignature>(a.msg1, a.sig1, pub);
  auto [m2, s2] = load_signed<ClassicSignature>(a.msg2, a.sig2, pub);
  const Natural budget = budget_of(a.budget);
  const auto trace = attacks::recover_from_nonce_reuse(pub, {m1, s1}, {m2, s2}, budget);
  out << attacks::format_trace(trace);
  return kOk;
}

int run_pair_reuse(const ReuseArgs& a, std::ostream& out) {
  const DecodedKey decoded = load_key(a.pub);
  const PublicKey& pub = public_part(decoded);
  auto [m1, s1] = load_signed<VariantSignature>(a.msg1, a.sig1, pub);
  auto [m2, s2] = load_signed<VariantSignature>(a.msg2, a.sig2, pub);
  const Natural budget = budget_of(a.budget);
  const Natural l = attacks::recover_l_from_pair_reuse(pub, {m1, s1}, {m2, s2}, budget);
  out << "l=" << to_hex(l) << "\n";
  return kOk;
}

struct SmoothArgs {
  std::string pub, beta, t0, msg, hash = "sha256", bound, out;
};

int run_smooth_forge(const SmoothArgs& a, std::ostream& out) {
  const DecodedKey decoded = load_key(a.pub);
  const PublicKey& pub = public_part(decoded);
  const HashMode mode = parse_hash_mode(a.hash);
  const Digest m = digest_file(a.msg, mode, pub.p);
  const Natural beta = flag_natural(a.beta, "beta");
  const Natural t0 = flag_natural(a.t0, "t0");
  const Natural bound =
      a.bound.empty() ? Natural(nt::kDefaultSmoothnessBound) : flag_natural(a.bound, "bound");
  const auto forgery = attacks::smooth_subgroup_forge(pub, beta, t0, m, bound);
  write_file(a.out, encode_signature(SignatureFile{mode, forgery.sig}));
  out << attacks::format_trace(forgery);
  return kOk;
}

struct NoHashArgs {
  std::string pub, k, kp, l, lp, out_sig, out_msg;
  std::optional<std::uint64_t> seed;
};

int run_no_hash_forge(const NoHashArgs& a, std::ostream& out) {
  const DecodedKey decoded = load_key(a.pub);
  const PublicKey& pub = public_part(decoded);
  const int given = !a.k.empty() + !a.kp.empty() + !a.l.empty() + !a.lp.empty();
  attacks::ExistentialForgeryParams params;
  if (given == 4) {
    params = {flag_natural(a.k, "k"), flag_natural(a.kp, "kp"), flag_natural(a.l, "l"),
              flag_natural(a.lp, "lp")};
  } else if (given == 0) {
    NonceSource rng = make_rng(a.seed);
    params = attacks::draw_existential_params(pub.p, rng);
  } else {
    throw UsageError("--k, --kp, --l and --lp go together");
  }
  const auto forgery = attacks::existential_forge_no_hash(pub, params);
  const auto msg = to_bytes_be(forgery.m);
  write_file(a.out_msg, std::string_view(reinterpret_cast<const char*>(msg.data()), msg.size()));
  write_file(a.out_sig, encode_signature(SignatureFile{HashMode::none, forgery.sig}));
  out << attacks::format_trace(forgery);
  return kOk;
}

struct BenchArgs {
  unsigned bits = 64;
  unsigned n = 2;
  std::optional<std::uint64_t> seed;
};

void print_cost(std::ostream& out, std::string_view op, const CostReport& c, bool with_inv) {
  out << op << " exp=" << c.exp_count << " mult=" << c.mult_count << " hash=" << c.hash_count
      << " weighted=" << c.weighted_mults() << " comm_bits=" << c.comm_bits;
  if (with_inv) out << " inv=" << c.inv_count;
  out << "\n";
}

int run_bench(const BenchArgs& a, std::ostream& out) {
  if (a.bits < 16 || a.bits > 4096) throw UsageError("--bits must lie in [16, 4096]");
  if (a.n < 1 || a.n > kMaxGeneralNonces) {
    throw UsageError("--n must lie in [1, " + std::to_string(kMaxGeneralNonces) + "]");
  }
  NonceSource rng = make_rng(a.seed);
  const PrivateKey key = generate_keys(a.bits, Scheme::variant(), rng);
  static constexpr unsigned char kMessage[] = {'b', 'e', 'n', 'c', 'h'};
  const DigestInput msg = MessageBytes{kMessage, HashMode::sha256};

  Metered<ClassicSignature> classic{};
  for (;;) {
    try {
      classic = metered_sign_classic(key, msg, draw_classic_nonce(key.pub.p, rng));
      break;
    } catch (const ResampleRequired&) {
    }
  }
  print_cost(out, "sign_classic", classic.cost, true);
  print_cost(out, "verify_classic", metered_verify_classic(key.pub, msg, classic.value).cost,
             true);

  const auto variant = metered_sign_variant(key, msg, draw_variant_nonces(key.pub.p, rng));
  print_cost(out, "sign_variant", variant.cost, false);
  print_cost(out, "verify_variant", metered_verify_variant(key.pub, msg, variant.value).cost,
             false);

  const auto general = metered_sign_general(key, msg, draw_general_nonces(key.pub.p, a.n, rng));
  print_cost(out, "sign_general", general.cost, false);
  print_cost(out, "verify_general", metered_verify_general(key.pub, msg, general.value).cost,
             false);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ElGamal-family signature laboratory", "elgv"};
  app.require_subcommand(1);

  KeygenArgs keygen;
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair");
  keygen_cmd->add_option("--bits", keygen.bits, "Bit length of p");
  keygen_cmd->add_option("--scheme", keygen.scheme, "classic | variant | general")->required();
  keygen_cmd->add_option("--n", keygen.n, "Nonce count for the general scheme");
  keygen_cmd->add_option("--seed", keygen.seed, "Deterministic seed");
  keygen_cmd->add_option("--out", keygen.out, "Public key path; the private key gets .sec")
      ->required();
  keygen_cmd->add_option("--p", keygen.p, "Fixed prime (with --g and --x)");
  keygen_cmd->add_option("--g", keygen.g, "Fixed primitive root");
  keygen_cmd->add_option("--x", keygen.x, "Fixed private exponent");

  SignArgs sign;
  auto* sign_cmd = app.add_subcommand("sign", "Sign a message file");
  sign_cmd->add_option("--key", sign.key, "Private key file")->required();
  sign_cmd->add_option("--msg", sign.msg, "Message file")->required();
  sign_cmd->add_option("--hash", sign.hash, "sha256 | sha1 | none");
  sign_cmd->add_option("--seed", sign.seed, "Deterministic seed");
  sign_cmd->add_option("--out", sign.out, "Signature output path")->required();
  sign_cmd->add_flag("--allow-insecure-hash", sign.allow_insecure, "Permit --hash none");
  sign_cmd->add_option("--nonce", sign.nonces, "Explicit nonce(s), in scheme order");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a signature");
  verify_cmd->add_option("--pub", verify.pub, "Public (or private) key file")->required();
  verify_cmd->add_option("--msg", verify.msg, "Message file")->required();
  verify_cmd->add_option("--sig", verify.sig, "Signature file")->required();

  auto* attack_cmd = app.add_subcommand("attack", "Run an attack");
  attack_cmd->require_subcommand(1);

  auto reuse_options = [](CLI::App* cmd, ReuseArgs& r) {
    cmd->add_option("--pub", r.pub, "Public key file")->required();
    cmd->add_option("--msg1", r.msg1, "First message")->required();
    cmd->add_option("--sig1", r.sig1, "First signature")->required();
    cmd->add_option("--msg2", r.msg2, "Second message")->required();
    cmd->add_option("--sig2", r.sig2, "Second signature")->required();
    cmd->add_option("--budget", r.budget, "Candidate enumeration budget");
  };
  ReuseArgs nonce_reuse, pair_reuse;
  auto* nonce_reuse_cmd =
      attack_cmd->add_subcommand("nonce-reuse", "Recover k and x from a repeated classic nonce");
  reuse_options(nonce_reuse_cmd, nonce_reuse);
  auto* pair_reuse_cmd =
      attack_cmd->add_subcommand("pair-reuse", "Recover l from a repeated (k, l) pair");
  reuse_options(pair_reuse_cmd, pair_reuse);

  SmoothArgs smooth;
  auto* smooth_cmd =
      attack_cmd->add_subcommand("smooth-forge", "Forge a classic signature via a smooth subgroup");
  smooth_cmd->add_option("--pub", smooth.pub, "Public key file")->required();
  smooth_cmd->add_option("--beta", smooth.beta, "beta with beta^t0 = g")->required();
  smooth_cmd->add_option("--t0", smooth.t0, "Exponent t0")->required();
  smooth_cmd->add_option("--msg", smooth.msg, "Message file")->required();
  smooth_cmd->add_option("--hash", smooth.hash, "sha256 | sha1 | none");
  smooth_cmd->add_option("--bound", smooth.bound, "Smoothness bound");
  smooth_cmd->add_option("--out", smooth.out, "Forged signature path")->required();

  NoHashArgs nohash;
  auto* nohash_cmd = attack_cmd->add_subcommand(
      "no-hash-forge", "Existential forgery on the three-variable scheme without hashing");
  nohash_cmd->add_option("--pub", nohash.pub, "Public key file")->required();
  nohash_cmd->add_option("--k", nohash.k, "Parameter k");
  nohash_cmd->add_option("--kp", nohash.kp, "Parameter k'");
  nohash_cmd->add_option("--l", nohash.l, "Parameter l");
  nohash_cmd->add_option("--lp", nohash.lp, "Parameter l', coprime to p-1");
  nohash_cmd->add_option("--seed", nohash.seed, "Seed for drawing the parameters");
  nohash_cmd->add_option("--out-sig", nohash.out_sig, "Forged signature path")->required();
  nohash_cmd->add_option("--out-msg", nohash.out_msg, "Forged message path")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Print operation counts");
  bench_cmd->add_option("--bits", bench.bits, "Bit length of p");
  bench_cmd->add_option("--n", bench.n, "Nonce count for the general scheme");
  bench_cmd->add_option("--seed", bench.seed, "Deterministic seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help();
      return kOk;
    }
    err << "elgv: " << e.what() << "\n";
    return kUsageError;
  }

  bool attacking = false;
  try {
    if (*keygen_cmd) return run_keygen(keygen, out);
    if (*sign_cmd) return run_sign(sign, out);
    if (*verify_cmd) return run_verify(verify, out);
    if (*bench_cmd) return run_bench(bench, out);
    attacking = true;
    if (*nonce_reuse_cmd) return run_nonce_reuse(nonce_reuse, out);
    if (*pair_reuse_cmd) return run_pair_reuse(pair_reuse, out);
    if (*smooth_cmd) return run_smooth_forge(smooth, out);
    if (*nohash_cmd) return run_no_hash_forge(nohash, out);
  } catch (const UsageError& e) {
    err << "elgv: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "elgv: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "elgv: " << e.what() << "\n";
    return attacking ? kAttackFailed : kUsageError;
  }
  err << "elgv: no command\n";
  return kUsageError;
}

}  // namespace elgv::cli
