#include "traced/check/rng.hpp"

namespace traced::check {

namespace {

std::uint64_t splitmix(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  std::uint64_t x = seed;
  std::uint64_t a = splitmix(x);
  x ^= fnv1a(stream);
  std::uint64_t b = splitmix(x);
  x ^= index * 0xd1b54a32d192ed03ULL;
  state_ = a ^ (b << 1) ^ splitmix(x);
}

std::uint64_t Rng::next() { return splitmix(state_); }

long Rng::uniform(long lo, long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<long>(r % span);
}

Rational Rng::small_rational() {
  Rational r(mpz_class(uniform(-3, 3)), mpz_class(uniform(1, 3)));
  r.canonicalize();
  return r;
}

Rational Rng::small_nonzero_rational() {
  long num = uniform(1, 3) * (chance(1, 2) ? -1 : 1);
  Rational r(mpz_class(num), mpz_class(uniform(1, 3)));
  r.canonicalize();
  return r;
}

}  // namespace traced::check
