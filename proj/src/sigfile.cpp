#include "elgv/sigfile.hpp"

#include "elgv/errors.hpp"
#include "text_fields.hpp"

namespace elgv {
namespace {

constexpr std::string_view kSigHeader = "elgv-sig-v1";

void field(std::string& out, std::string_view key, const Natural& v) {
  out += key;
  out += '=';
  out += to_hex(v);
  out += '\n';
}

}  // namespace

Scheme SignatureFile::scheme() const {
  if (std::holds_alternative<ClassicSignature>(sig)) return Scheme::classic();
  if (std::holds_alternative<VariantSignature>(sig)) return Scheme::variant();
  return Scheme::general(static_cast<unsigned>(std::get<GeneralSignature>(sig).n()));
}

std::string encode_signature(const SignatureFile& file) {
  std::string out(kSigHeader);
  out += "\nscheme=";
  out += scheme_name(file.scheme().kind);
  out += "\nhash=";
  out += hash_mode_name(file.hash);
  out += '\n';
  if (const auto* c = std::get_if<ClassicSignature>(&file.sig)) {
    field(out, "r", c->r);
    field(out, "s", c->s);
  } else if (const auto* v = std::get_if<VariantSignature>(&file.sig)) {
    field(out, "r", v->r);
    field(out, "s", v->s);
    field(out, "t", v->t);
  } else {
    const auto& g = std::get<GeneralSignature>(file.sig);
    out += "n=" + std::to_string(g.n()) + "\n";
    for (std::size_t i = 0; i < g.n(); ++i) field(out, "r" + std::to_string(i + 1), g.r[i]);
    field(out, "t", g.t);
  }
  return out;
}

SignatureFile decode_signature(std::string_view text) {
  detail::FieldReader in(text);
  in.expect_header(kSigHeader);

  auto named = [&](auto parse, std::string_view key) {
    const std::size_t at = in.line() + 1;
    try {
      return parse(in.expect(key));
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(at, e.what());
    }
  };
  const SchemeKind kind = named(parse_scheme_name, "scheme");
  SignatureFile out;
  out.hash = named(parse_hash_mode, "hash");

  switch (kind) {
    case SchemeKind::classic: {
      ClassicSignature sig;
      sig.r = in.expect_hex("r");
      sig.s = in.expect_hex("s");
      out.sig = std::move(sig);
      break;
    }
    case SchemeKind::variant: {
      VariantSignature sig;
      sig.r = in.expect_hex("r");
      sig.s = in.expect_hex("s");
      sig.t = in.expect_hex("t");
      out.sig = std::move(sig);
      break;
    }
    case SchemeKind::general: {
      GeneralSignature sig;
      const unsigned n = in.expect_count("n", 1, kMaxGeneralNonces);
      for (unsigned i = 1; i <= n; ++i) sig.r.push_back(in.expect_hex("r" + std::to_string(i)));
      sig.t = in.expect_hex("t");
      out.sig = std::move(sig);
      break;
    }
  }
  in.expect_end();
  return out;
}

}  // namespace elgv
