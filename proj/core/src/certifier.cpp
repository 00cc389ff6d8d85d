#include "permeq/certifier.hpp"

#include <algorithm>
#include <numeric>

namespace permeq {

bool is_prime(unsigned long long value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (unsigned long long f = 3; f * f <= value; f += 2)
    if (value % f == 0) return false;
  return true;
}

unsigned long long mod_pow(unsigned long long base, unsigned long long exp,
                           unsigned long long mod) {
  if (mod == 1) return 0;
  unsigned long long result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1)
      result = static_cast<unsigned long long>(
          (static_cast<__uint128_t>(result) * base) % mod);
    base = static_cast<unsigned long long>(
        (static_cast<__uint128_t>(base) * base) % mod);
    exp >>= 1;
  }
  return result;
}

bool mersenne_divisible(unsigned p, unsigned long long e) {
  if (p < 3 || !is_prime(p))
    throw Error("p = " + std::to_string(p) + " must be an odd prime");
  if (e < 1) throw Error("exponent must be >= 1");
  return mod_pow(2, e, p) == 1;
}

unsigned gcd_mersenne(unsigned d, unsigned r) {
  if (r == 0) throw Error("gcd_mersenne requires r >= 1");
  if (r == 1) return 1;
  const unsigned long long residue = (mod_pow(2, d, r) + r - 1) % r;
  return static_cast<unsigned>(std::gcd(residue, static_cast<unsigned long long>(r)));
}

namespace {

std::vector<unsigned> descending_lengths(const CycleType& type) {
  std::vector<unsigned> lengths;
  for (unsigned len = type.degree; len >= 1; --len)
    for (unsigned i = 0; i < type.counts[len]; ++i) lengths.push_back(len);
  return lengths;
}

std::vector<unsigned> odd_prime_divisors(unsigned long long value) {
  std::vector<unsigned> primes;
  while (value % 2 == 0) value /= 2;
  for (unsigned long long f = 3; f * f <= value; f += 2) {
    if (value % f == 0) {
      primes.push_back(static_cast<unsigned>(f));
      while (value % f == 0) value /= f;
    }
  }
  if (value > 1) primes.push_back(static_cast<unsigned>(value));
  return primes;
}

void settle_verdict(Certificate& cert, bool any_check, bool any_failure) {
  if (any_failure) {
    cert.verdict = Verdict::Inconclusive;
  } else {
    cert.verdict = Verdict::OnlyTrivial;
    cert.vacuous = !any_check;
  }
}

}  // namespace

Certificate certify_a1(const Permutation& alpha) {
  const unsigned n = alpha.degree();
  const CycleType type = cycle_type(alpha);

  Certificate cert;
  cert.theorem = Theorem::A1;
  cert.degree = n;
  cert.alpha_lengths = descending_lengths(type);

  std::vector<DRange> ranges;
  ranges.reserve(n);
  for (unsigned d = 1; d <= n; ++d) ranges.push_back(d_range(alpha, d));

  bool any_failure = false;
  for (unsigned d = 1; d <= n; ++d) {
    for (unsigned r = 3; d * r <= n; r += 2) {
      if (!ranges[d - 1].contains(d * r)) continue;
      PairRecord pair;
      pair.d = d;
      pair.r = r;
      pair.g_d = type.counts[d];
      pair.gcd_value = gcd_mersenne(d, r);
      pair.witness = d_range_witness(alpha, d, d * r);
      pair.ok = pair.g_d == 0 && pair.gcd_value == 1;
      if (!pair.ok && !any_failure) {
        any_failure = true;
        cert.failure_pair = {d, r};
        cert.failure = pair.g_d != 0
                           ? "g_" + std::to_string(d) + " = " + std::to_string(pair.g_d) +
                                 " is nonzero"
                           : "gcd(2^" + std::to_string(d) + "-1, " + std::to_string(r) +
                                 ") = " + std::to_string(pair.gcd_value);
      }
      cert.pairs.push_back(std::move(pair));
    }
  }
  settle_verdict(cert, !cert.pairs.empty(), any_failure);
  return cert;
}

Certificate certify_a2(const Permutation& alpha) {
  const unsigned n = alpha.degree();
  const CycleType type = cycle_type(alpha);

  Certificate cert;
  cert.theorem = Theorem::A2;
  cert.degree = n;
  cert.alpha_lengths = descending_lengths(type);

  auto fail = [&](const std::string& why) {
    if (!cert.failure) cert.failure = why;
  };

  if (type.counts[1] != 0)
    fail("g_1 = " + std::to_string(type.counts[1]) + " (alpha has fixed points)");

  std::vector<unsigned> present;
  for (unsigned len = 1; len <= n; ++len)
    if (type.counts[len] > 0) present.push_back(len);

  for (std::size_t i = 0; i < present.size(); ++i)
    for (std::size_t j = i + 1; j < present.size(); ++j)
      if (std::gcd(present[i], present[j]) != 1)
        fail("cycle lengths " + std::to_string(present[i]) + " and " +
             std::to_string(present[j]) + " are not coprime");

  for (unsigned len : present)
    if (type.counts[len] > 2)
      fail("g_" + std::to_string(len) + " = " + std::to_string(type.counts[len]) +
           " exceeds 2");

  for (unsigned len : present) {
    for (unsigned p : odd_prime_divisors(len)) {
      PrimeCheck check;
      check.p = p;
      check.e = len / p;
      check.divides = mersenne_divisible(p, check.e);
      check.cycle_length = len;
      if (check.divides)
        fail(std::to_string(p) + " divides 2^" + std::to_string(check.e) +
             "-1 for cycle length " + std::to_string(len));
      cert.prime_checks.push_back(check);
    }
  }

  settle_verdict(cert, true, cert.failure.has_value());
  cert.vacuous = false;  // the structural hypotheses are always checked
  return cert;
}

Certificate certify_a3_cyclic(unsigned n) {
  if (n < 1) throw Error("n must be >= 1");

  Certificate cert;
  cert.theorem = Theorem::A3;
  cert.degree = n;
  cert.alpha_lengths = {n};

  bool any_failure = false;
  for (unsigned p : odd_prime_divisors(n)) {
    PrimeCheck check;
    check.p = p;
    check.e = n / p;
    check.divides = mersenne_divisible(p, check.e);
    check.cycle_length = n;
    if (check.divides && !any_failure) {
      any_failure = true;
      cert.failure = std::to_string(p) + " divides 2^" + std::to_string(check.e) + "-1";
    }
    cert.prime_checks.push_back(check);
  }
  settle_verdict(cert, !cert.prime_checks.empty(), any_failure);
  return cert;
}

namespace {

Verdict replay_a1(const Certificate& cert) {
  for (const PairRecord& pair : cert.pairs) {
    if (pair.d < 1 || pair.r < 3 || pair.r % 2 == 0 ||
        pair.d * pair.r > cert.degree)
      throw VerificationError("recorded pair out of bounds");
    unsigned sum = 0;
    std::vector<unsigned> pool = cert.alpha_lengths;
    for (unsigned len : pair.witness) {
      if (len % pair.d != 0)
        throw VerificationError("witness length not divisible by d");
      const auto it = std::find(pool.begin(), pool.end(), len);
      if (it == pool.end())
        throw VerificationError("witness length is not a cycle length of alpha");
      pool.erase(it);
      sum += len;
    }
    if (sum != pair.d * pair.r)
      throw VerificationError("witness does not sum to d*r");
    const unsigned g_d = static_cast<unsigned>(
        std::count(cert.alpha_lengths.begin(), cert.alpha_lengths.end(), pair.d));
    if (g_d != pair.g_d) throw VerificationError("recorded g_d mismatch");
    if (gcd_mersenne(pair.d, pair.r) != pair.gcd_value)
      throw VerificationError("recorded gcd mismatch");
    if (pair.g_d != 0 || pair.gcd_value != 1) return Verdict::Inconclusive;
  }
  return Verdict::OnlyTrivial;
}

Verdict replay_a2(const Certificate& cert) {
  const auto& lengths = cert.alpha_lengths;
  if (std::count(lengths.begin(), lengths.end(), 1u) != 0)
    return Verdict::Inconclusive;
  std::vector<unsigned> distinct = lengths;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::size_t i = 0; i < distinct.size(); ++i)
    for (std::size_t j = i + 1; j < distinct.size(); ++j)
      if (std::gcd(distinct[i], distinct[j]) != 1) return Verdict::Inconclusive;
  for (unsigned len : distinct)
    if (std::count(lengths.begin(), lengths.end(), len) > 2)
      return Verdict::Inconclusive;
  for (const PrimeCheck& check : cert.prime_checks) {
    if (check.e * check.p != check.cycle_length)
      throw VerificationError("recorded prime check inconsistent");
    if (mersenne_divisible(check.p, check.e) != check.divides)
      throw VerificationError("recorded divisibility mismatch");
    if (check.divides) return Verdict::Inconclusive;
  }
  return Verdict::OnlyTrivial;
}

Verdict replay_a3(const Certificate& cert) {
  const std::vector<unsigned> primes = odd_prime_divisors(cert.degree);
  if (primes.size() != cert.prime_checks.size())
    throw VerificationError("recorded prime checks incomplete");
  for (const PrimeCheck& check : cert.prime_checks) {
    if (check.divides != mersenne_divisible(check.p, check.e))
      throw VerificationError("recorded divisibility mismatch");
    if (check.divides) return Verdict::Inconclusive;
  }
  return Verdict::OnlyTrivial;
}

}  // namespace

Verdict replay(const Certificate& certificate) {
  switch (certificate.theorem) {
    case Theorem::A1:
      return replay_a1(certificate);
    case Theorem::A2:
      return replay_a2(certificate);
    case Theorem::A3:
      return replay_a3(certificate);
  }
  throw Error("unknown theorem tag");
}

}  // namespace permeq
