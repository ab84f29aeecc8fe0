#include "elgv/attacks.hpp"

#include <optional>

#include "elgv/errors.hpp"

namespace elgv::attacks {
namespace {

// First j in [0, count) with g^(base + j*step) = target (mod p).
std::optional<Natural> first_matching_exponent(const PublicKey& pub, const Natural& base,
                                               const Natural& step, const Natural& count,
                                               const Natural& target, Natural* inspected) {
  Natural current = nt::mod_pow(pub.g, base, pub.p);
  const Natural stride = nt::mod_pow(pub.g, step, pub.p);
  std::optional<Natural> found;
  Natural j = 0;
  for (; j < count; ++j) {
    if (!found && current == target) found = j;
    if (found && !inspected) break;
    current = current * stride % pub.p;
  }
  if (inspected) *inspected = j;
  return found;
}

void require_within(const Natural& count, const Natural& budget, const char* what) {
  if (count > budget) {
    throw BudgetExceededError(std::string(what) + ": " + to_decimal(count) +
                              " candidates exceed budget " + to_decimal(budget));
  }
}

void line(std::string& out, const char* symbol, const Natural& v) {
  out += symbol;
  out += '=';
  out += to_hex(v);
  out += '\n';
}

}  // namespace

NonceReuseTrace recover_from_nonce_reuse(const PublicKey& pub, const SignedClassic& first,
                                         const SignedClassic& second, const Natural& budget) {
  if (first.sig.r != second.sig.r) throw DomainError("signatures do not share r");
  if (first.m == second.m && first.sig.s == second.sig.s) {
    throw DomainError("the two signatures are identical");
  }
  const Natural n = pub.group_order();
  const Natural& r = first.sig.r;

  NonceReuseTrace trace;
  const Natural ds = normalize(first.sig.s - second.sig.s, n);
  const Natural dm = normalize(first.m - second.m, n);
  // k (s1 - s2) = m1 - m2 (mod p-1) has d solutions when d | m1 - m2.
  const auto k_set = nt::solve_linear_congruence(ds, dm, n);
  trace.d = k_set.count;
  trace.P = k_set.step;
  trace.S = ds / trace.d;
  trace.M = dm / trace.d;
  require_within(trace.d, budget, "nonce enumeration");

  const auto K = first_matching_exponent(pub, k_set.base, k_set.step, k_set.count, r,
                                         &trace.candidates_inspected);
  if (!K) throw NoSolutionError("no candidate k satisfies g^k = r");
  trace.K_found = *K;
  trace.k = k_set.at(*K);

  // x r = m1 - k s1 (mod p-1); several x when gcd(r, p-1) > 1.
  const auto x_set = nt::solve_linear_congruence(r, first.m - trace.k * first.sig.s, n);
  require_within(x_set.count, budget, "private key enumeration");
  const auto j = first_matching_exponent(pub, x_set.base, x_set.step, x_set.count, pub.y, nullptr);
  if (!j) throw NoSolutionError("no candidate x satisfies g^x = y");
  trace.x = x_set.at(*j);
  return trace;
}

SmoothForgery smooth_subgroup_forge(const PublicKey& pub, const Natural& beta, const Natural& t0,
                                    const Digest& m, const Natural& bound) {
  if (beta < 1 || beta >= pub.p) throw DomainError("beta must lie in [1, p-1]");
  if (nt::mod_pow(beta, t0, pub.p) != pub.g) throw DomainError("beta^t0 != g (mod p)");
  const Natural n = pub.group_order();

  SmoothForgery out;
  out.beta = beta;
  out.t0 = t0;
  out.bound = bound;
  out.D = nt::gcd(n, beta);
  out.lambda = beta / out.D;

  // y^D lies in the subgroup generated by g^D, of smooth order (p-1)/D.
  const Natural subgroup_order = n / out.D;
  const nt::Factorization order_factors =
      subgroup_order == 1 ? nt::Factorization{} : nt::factor(subgroup_order, bound);
  // factor() accepts one large prime cofactor; the forgery needs every factor small.
  if (!order_factors.empty() && order_factors.factors().back().prime > bound) {
    throw NotSmoothError(order_factors.factors().back().prime, bound);
  }
  const Natural gD = nt::mod_pow(pub.g, out.D, pub.p);
  const Natural yD = nt::mod_pow(pub.y, out.D, pub.p);
  try {
    out.z0 = nt::pohlig_hellman(gD, yD, order_factors, pub.p);
  } catch (const NotFoundError& e) {
    throw Error(std::string("subgroup logarithm failed; is g a primitive root? ") + e.what());
  }

  out.sig.r = beta;
  out.sig.s = normalize(t0 * (m.value - beta * out.z0), n);
  return out;
}

ExistentialForgery existential_forge_no_hash(const PublicKey& pub,
                                             const ExistentialForgeryParams& params) {
  const Natural n = pub.group_order();
  if (nt::gcd(params.l_prime, n) != 1) throw InvalidParamsError("gcd(l', p-1) must be 1");

  ExistentialForgery out;
  out.sig.r = nt::mod_pow(pub.g, params.k, pub.p) * nt::mod_pow(pub.y, params.k_prime, pub.p) %
              pub.p;
  out.sig.s = nt::mod_pow(pub.g, params.l, pub.p) * nt::mod_pow(pub.y, params.l_prime, pub.p) %
              pub.p;
  out.m = normalize(-(out.sig.r + params.k_prime * out.sig.s) * nt::mod_inv(params.l_prime, n), n);
  out.sig.t = (params.k * out.sig.s + params.l * out.m) % n;
  return out;
}

ExistentialForgeryParams draw_existential_params(const Natural& p, NonceSource& rng) {
  const Natural n = p - 1;
  ExistentialForgeryParams params;
  params.k = rng.uniform(0, n - 1);
  params.k_prime = rng.uniform(0, n - 1);
  params.l = rng.uniform(0, n - 1);
  do {
    params.l_prime = rng.uniform(1, n - 1);
  } while (nt::gcd(params.l_prime, n) != 1);
  return params;
}

Natural recover_l_from_pair_reuse(const PublicKey& pub, const SignedVariant& first,
                                  const SignedVariant& second, const Natural& budget) {
  if (first.sig.r != second.sig.r || first.sig.s != second.sig.s) {
    throw DomainError("signatures do not share (r, s)");
  }
  const Natural n = pub.group_order();
  if (normalize(first.m - second.m, n) == 0) throw DomainError("messages must differ mod p-1");

  const auto l_set =
      nt::solve_linear_congruence(first.m - second.m, first.sig.t - second.sig.t, n);
  require_within(l_set.count, budget, "l enumeration");
  const auto j =
      first_matching_exponent(pub, l_set.base, l_set.step, l_set.count, first.sig.s, nullptr);
  if (!j) throw NoSolutionError("no candidate l satisfies g^l = s");
  return l_set.at(*j);
}

std::string format_trace(const NonceReuseTrace& trace) {
  std::string out;
  line(out, "d", trace.d);
  line(out, "S", trace.S);
  line(out, "P", trace.P);
  line(out, "M", trace.M);
  line(out, "K", trace.K_found);
  line(out, "k", trace.k);
  line(out, "x", trace.x);
  return out;
}

std::string format_trace(const SmoothForgery& forgery) {
  std::string out;
  line(out, "beta", forgery.beta);
  line(out, "t0", forgery.t0);
  line(out, "D", forgery.D);
  line(out, "lambda", forgery.lambda);
  line(out, "z0", forgery.z0);
  line(out, "r", forgery.sig.r);
  line(out, "s", forgery.sig.s);
  return out;
}

std::string format_trace(const ExistentialForgery& forgery) {
  std::string out;
  line(out, "m", forgery.m);
  line(out, "r", forgery.sig.r);
  line(out, "s", forgery.sig.s);
  line(out, "t", forgery.sig.t);
  return out;
}

}  // namespace elgv::attacks
