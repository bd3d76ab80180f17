#include "higman/families.hpp"

#include <array>
#include <charconv>
#include <map>
#include <stdexcept>

namespace higman {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

using poly = std::vector<unsigned>;  // constant term first

// Conway polynomials for the small fields we actually meet.
const std::map<std::pair<unsigned, unsigned>, poly>& known_moduli() {
  static const std::map<std::pair<unsigned, unsigned>, poly> table = {
      {{2, 2}, {1, 1, 1}},    {{2, 3}, {1, 1, 0, 1}}, {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}}, {{3, 2}, {2, 2, 1}},    {{3, 3}, {1, 2, 0, 1}},
      {{5, 2}, {2, 4, 1}},    {{7, 2}, {3, 6, 1}},
  };
  return table;
}

poly poly_mod(poly a, const poly& m, unsigned p) {
  // m monic
  while (a.size() >= m.size()) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - m.size();
    if (lead)
      for (std::size_t i = 0; i < m.size(); ++i)
        a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    a.pop_back();
  }
  return a;
}

bool divides_evenly(const poly& a, const poly& m, unsigned p) {
  for (unsigned c : poly_mod(a, m, p))
    if (c) return false;
  return true;
}

bool is_irreducible(const poly& f, unsigned p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      poly g(d + 1, 0);
      std::size_t c = code;
      for (std::size_t i = 0; i < d; ++i, c /= p) g[i] = c % p;
      g[d] = 1;
      if (divides_evenly(f, g, p)) return false;
    }
  }
  return true;
}

poly find_modulus(unsigned p, unsigned degree) {
  if (auto it = known_moduli().find({p, degree}); it != known_moduli().end()) return it->second;
  std::size_t count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= p;
  for (std::size_t code = 0; code < count; ++code) {
    poly f(degree + 1, 0);
    std::size_t c = code;
    for (unsigned i = 0; i < degree; ++i, c /= p) f[i] = c % p;
    f[degree] = 1;
    if (f[0] != 0 && is_irreducible(f, p)) return f;
  }
  fail("no irreducible polynomial found");
}

}  // namespace

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<unsigned, unsigned> prime_power(unsigned long long q) {
  if (q < 2) fail(std::to_string(q) + " is not a prime power");
  unsigned long long p = 2;
  while (q % p) ++p;
  unsigned i = 0;
  while (q % p == 0) {
    q /= p;
    ++i;
  }
  if (q != 1) fail("not a prime power");
  return {static_cast<unsigned>(p), i};
}

galois_field::galois_field(unsigned p, unsigned degree) : p_(p), degree_(degree), q_(1) {
  if (!is_prime(p)) fail("field characteristic " + std::to_string(p) + " is not prime");
  if (degree == 0) fail("field degree must be positive");
  for (unsigned i = 0; i < degree; ++i) q_ *= p;
  if (q_ > 1024) fail("field too large for table arithmetic");
  modulus_ = find_modulus(p, degree);

  auto digits = [&](unsigned a) {
    poly d(degree_, 0);
    for (unsigned i = 0; i < degree_; ++i, a /= p_) d[i] = a % p_;
    return d;
  };
  auto encode = [&](const poly& d) {
    unsigned a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
    return a;
  };
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (unsigned a = 0; a < q_; ++a) {
    const poly da = digits(a);
    poly na(degree_);
    for (unsigned i = 0; i < degree_; ++i) na[i] = (p_ - da[i]) % p_;
    neg_[a] = encode(na);
    for (unsigned b = 0; b < q_; ++b) {
      const poly db = digits(b);
      poly s(degree_);
      for (unsigned i = 0; i < degree_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = encode(s);
      poly prod(2 * degree_ - 1, 0);
      for (unsigned i = 0; i < degree_; ++i)
        for (unsigned j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      prod = poly_mod(prod, modulus_, p_);
      prod.resize(degree_, 0);
      mul_[a * q_ + b] = encode(prod);
    }
  }
}

group_ptr cyclic_group(std::size_t n) {
  if (n == 0) fail("cyclic group order must be positive");
  std::vector<element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<element>((a + b) % n);
  return std::make_shared<finite_group>(n, std::move(t), std::vector<std::string>{},
                                        "C:" + std::to_string(n));
}

group_ptr elementary_abelian(unsigned p, unsigned rank) {
  if (!is_prime(p)) fail("EA: " + std::to_string(p) + " is not prime");
  std::size_t n = 1;
  for (unsigned i = 0; i < rank; ++i) n *= p;
  std::vector<element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t x = a, y = b, s = 0, place = 1;
      for (unsigned i = 0; i < rank; ++i, x /= p, y /= p, place *= p) s += ((x + y) % p) * place;
      t[a * n + b] = static_cast<element>(s);
    }
  return std::make_shared<finite_group>(n, std::move(t), std::vector<std::string>{},
                                        "EA:" + std::to_string(p) + ":" + std::to_string(rank));
}

group_ptr heisenberg(unsigned q, unsigned r) {
  if (r == 0) fail("Heis: r must be at least 1");
  const auto [p, i] = prime_power(q);
  const galois_field f(p, i);
  std::size_t qr = 1;
  for (unsigned k = 0; k < r; ++k) qr *= q;
  const std::size_t n = qr * qr * q;
  if (n > 4096) fail("Heis: group too large");

  struct triple {
    std::vector<unsigned> a, b;
    unsigned c;
  };
  auto decode = [&](std::size_t x) {
    triple t{std::vector<unsigned>(r), std::vector<unsigned>(r), 0};
    for (unsigned k = 0; k < r; ++k, x /= q) t.a[k] = x % q;
    for (unsigned k = 0; k < r; ++k, x /= q) t.b[k] = x % q;
    t.c = static_cast<unsigned>(x);
    return t;
  };
  auto encode = [&](const triple& t) {
    std::size_t x = t.c;
    for (unsigned k = r; k-- > 0;) x = x * q + t.b[k];
    for (unsigned k = r; k-- > 0;) x = x * q + t.a[k];
    return static_cast<element>(x);
  };
  std::vector<triple> cache;
  cache.reserve(n);
  for (std::size_t x = 0; x < n; ++x) cache.push_back(decode(x));
  std::vector<element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& u = cache[x];
      const auto& w = cache[y];
      triple s{std::vector<unsigned>(r), std::vector<unsigned>(r), f.add(u.c, w.c)};
      for (unsigned k = 0; k < r; ++k) {
        s.a[k] = f.add(u.a[k], w.a[k]);
        s.b[k] = f.add(u.b[k], w.b[k]);
        s.c = f.add(s.c, f.mul(u.a[k], w.b[k]));
      }
      t[x * n + y] = encode(s);
    }
  return std::make_shared<finite_group>(n, std::move(t), std::vector<std::string>{},
                                        "Heis:" + std::to_string(q) + ":" + std::to_string(r));
}

group_ptr q8_central_product(unsigned r) {
  if (r == 0) fail("Q8cp: r must be at least 1");
  if (r > 5) fail("Q8cp: group too large");
  // Unit quaternions 1,i,j,k as 0..3: unit part of the product and its sign.
  static constexpr std::array<std::array<unsigned, 4>, 4> unit = {{
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<unsigned, 4>, 4> negative = {{
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  std::size_t n = 2;
  for (unsigned k = 0; k < r; ++k) n *= 4;
  std::vector<element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      unsigned sign = static_cast<unsigned>((x ^ y) & 1);
      std::size_t ux = x >> 1, uy = y >> 1, out = 0, place = 1;
      for (unsigned k = 0; k < r; ++k, ux >>= 2, uy >>= 2, place <<= 2) {
        const unsigned a = ux & 3, b = uy & 3;
        out += unit[a][b] * place;
        sign ^= negative[a][b];
      }
      t[x * n + y] = static_cast<element>((out << 1) | sign);
    }
  std::vector<std::string> labels;
  if (r == 1) labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return std::make_shared<finite_group>(n, std::move(t), std::move(labels),
                                        "Q8cp:" + std::to_string(r));
}

group_ptr generalized_dihedral(group_ptr g) {
  if (!g->is_abelian()) fail("GenDih: inner group must be abelian");
  const std::size_t m = g->order();
  const std::size_t n = 2 * m;
  std::vector<element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const element gx = static_cast<element>(x % m), gy = static_cast<element>(y % m);
      const bool ux = x >= m, uy = y >= m;
      // (g u^a)(h u^b) = g h^{(-1)^a} u^{a+b}
      const element inner = g->mul(gx, ux ? g->inv(gy) : gy);
      t[x * n + y] = static_cast<element>(inner + ((ux != uy) ? m : 0));
    }
  return std::make_shared<finite_group>(n, std::move(t), std::vector<std::string>{},
                                        "GenDih:" + g->name());
}

group_ptr direct_product(group_ptr g, group_ptr h) {
  const std::size_t a = g->order(), b = h->order(), n = a * b;
  std::vector<element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const element gx = static_cast<element>(x % a), hx = static_cast<element>(x / a);
      const element gy = static_cast<element>(y % a), hy = static_cast<element>(y / a);
      t[x * n + y] = static_cast<element>(g->mul(gx, gy) + a * h->mul(hx, hy));
    }
  return std::make_shared<finite_group>(n, std::move(t), std::vector<std::string>{},
                                        "Prod:(" + g->name() + "),(" + h->name() + ")");
}

namespace {

unsigned parse_unsigned(std::string_view s, std::string_view spec) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    fail("bad number `" + std::string(s) + "` in group spec `" + std::string(spec) + "`");
  return v;
}

std::vector<std::string_view> split_colon(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == ':') {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return parts;
}

std::string_view strip_parens(std::string_view s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

group_ptr build_family(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? "" : spec.substr(colon + 1);

  if (head == "GenDih") return generalized_dihedral(build_family(strip_parens(rest)));
  if (head == "Prod") {
    // Split at the first top-level comma.
    int depth = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == '(') ++depth;
      else if (rest[i] == ')') --depth;
      else if (rest[i] == ',' && depth == 0)
        return direct_product(build_family(strip_parens(rest.substr(0, i))),
                              build_family(strip_parens(rest.substr(i + 1))));
    }
    fail("Prod spec needs two comma-separated operands: `" + std::string(spec) + "`");
  }

  const auto parts = split_colon(spec);
  auto arg = [&](std::size_t i) { return parse_unsigned(parts.at(i), spec); };
  auto want = [&](std::size_t count) {
    if (parts.size() != count + 1)
      fail("group spec `" + std::string(spec) + "` takes " + std::to_string(count) + " parameter(s)");
  };
  if (head == "C") {
    want(1);
    return cyclic_group(arg(1));
  }
  if (head == "EA") {
    want(2);
    return elementary_abelian(arg(1), arg(2));
  }
  if (head == "Heis") {
    want(2);
    return heisenberg(arg(1), arg(2));
  }
  if (head == "Q8cp") {
    want(1);
    return q8_central_product(arg(1));
  }
  if (head == "Q8" && parts.size() == 1) return q8_central_product(1);
  fail("unknown group family `" + std::string(spec) + "`");
}

}  // namespace higman
