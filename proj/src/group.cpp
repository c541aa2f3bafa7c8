#include "davlab/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace davlab {

long long mod_pow(long long base, long long exp, long long mod) {
  if (mod == 1) return 0;
  long long r = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long mult_order(long long g, long long n) {
  g %= n;
  if (g < 0) g += n;
  if (n <= 1) return 1;
  if (std::gcd(g, n) != 1) return 0;
  long long t = g % n, k = 1;
  while (t != 1) {
    t = t * g % n;
    ++k;
  }
  return k;
}

long long smallest_primitive_root(long long p) {
  for (long long g = 2; g < p; ++g)
    if (mult_order(g, p) == p - 1) return g;
  throw InvalidSpecError("no primitive root mod " + std::to_string(p));
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::cyclic(long long n) { return {Family::Cyclic, {n}}; }
GroupSpec GroupSpec::direct_product(std::vector<long long> ns) {
  return {Family::DirectProduct, std::move(ns)};
}
GroupSpec GroupSpec::dihedral(long long n) { return {Family::Dihedral, {n}}; }
GroupSpec GroupSpec::dicyclic(long long n) { return {Family::Dicyclic, {n}}; }
GroupSpec GroupSpec::metacyclic(long long a, long long b, long long g) {
  return {Family::Metacyclic, {a, b, g}};
}
GroupSpec GroupSpec::holomorph_prime(long long p) {
  return {Family::HolomorphPrime, {p}};
}

void GroupSpec::validate() const {
  auto need = [&](size_t n, const char* what) {
    if (params.size() != n)
      throw InvalidSpecError(std::string("expected ") + what);
  };
  switch (family) {
    case Family::Cyclic:
      need(1, "cyclic:n");
      if (params[0] < 1) throw InvalidSpecError("cyclic requires n >= 1");
      break;
    case Family::DirectProduct:
      if (params.empty())
        throw InvalidSpecError("product requires at least one factor");
      for (auto n : params)
        if (n < 1) throw InvalidSpecError("product factors must be >= 1");
      break;
    case Family::Dihedral:
      need(1, "dihedral:n");
      if (params[0] < 3) throw InvalidSpecError("dihedral requires n >= 3");
      break;
    case Family::Dicyclic:
      need(1, "dicyclic:n");
      if (params[0] < 2) throw InvalidSpecError("dicyclic requires n >= 2");
      break;
    case Family::Metacyclic: {
      need(3, "metacyclic:a,b,g");
      long long a = params[0], b = params[1], g = params[2];
      if (a < 1 || b < 1 || g < 0)
        throw InvalidSpecError("metacyclic parameters must be positive");
      if (gcd_ll(g % b == 0 ? b : g % b, b) != 1 && b > 1)
        throw InvalidSpecError("metacyclic requires gcd(g, b) = 1");
      if (mult_order(g, b) != a)
        throw InvalidSpecError("metacyclic requires ord_b(g) = a, got ord_" +
                               std::to_string(b) + "(" + std::to_string(g) +
                               ") = " + std::to_string(mult_order(g, b)));
      break;
    }
    case Family::HolomorphPrime:
      need(1, "holomorph:p");
      if (!is_prime_ll(params[0]) || params[0] == 2)
        throw InvalidSpecError("holomorph requires an odd prime p");
      break;
  }
}

long long GroupSpec::order() const {
  switch (family) {
    case Family::Cyclic: return params[0];
    case Family::DirectProduct: {
      long long o = 1;
      for (auto n : params) o *= n;
      return o;
    }
    case Family::Dihedral: return 2 * params[0];
    case Family::Dicyclic: return 4 * params[0];
    case Family::Metacyclic: return params[0] * params[1];
    case Family::HolomorphPrime: return params[0] * (params[0] - 1);
  }
  return 1;
}

std::string GroupSpec::str() const {
  std::ostringstream os;
  switch (family) {
    case Family::Cyclic: os << "cyclic:"; break;
    case Family::DirectProduct: os << "product:"; break;
    case Family::Dihedral: os << "dihedral:"; break;
    case Family::Dicyclic: os << "dicyclic:"; break;
    case Family::Metacyclic: os << "metacyclic:"; break;
    case Family::HolomorphPrime: os << "holomorph:"; break;
  }
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) os << ',';
    os << params[i];
  }
  return os.str();
}

GroupSpec GroupSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw InvalidSpecError("group spec needs the form family:params, got '" +
                           text + "'");
  std::string fam = text.substr(0, colon);
  std::vector<long long> ps;
  std::string rest = text.substr(colon + 1);
  std::stringstream ss(rest);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      ps.push_back(std::stoll(part));
    } catch (...) {
      throw InvalidSpecError("bad integer '" + part + "' in group spec");
    }
  }
  GroupSpec spec;
  if (fam == "cyclic") spec.family = Family::Cyclic;
  else if (fam == "product") spec.family = Family::DirectProduct;
  else if (fam == "dihedral") spec.family = Family::Dihedral;
  else if (fam == "dicyclic") spec.family = Family::Dicyclic;
  else if (fam == "metacyclic") spec.family = Family::Metacyclic;
  else if (fam == "holomorph") spec.family = Family::HolomorphPrime;
  else throw InvalidSpecError("unknown group family '" + fam + "'");
  spec.params = std::move(ps);
  spec.validate();
  return spec;
}

// ---------------------------------------------------------------------------
// Group construction

Group Group::build(const GroupSpec& spec) {
  spec.validate();
  Group g;
  g.spec_ = spec;
  g.name_ = spec.str();
  g.order_ = static_cast<int>(spec.order());
  switch (spec.family) {
    case Family::Cyclic:
      g.arith_ = Arith::Cyclic;
      break;
    case Family::DirectProduct:
      g.arith_ = Arith::Product;
      g.dp_mod_ = spec.params;
      break;
    case Family::Dihedral:
      // D_2n = Z_2 x|_{-1} Z_n
      g.arith_ = Arith::MetacyclicLike;
      g.mc_a_ = 2;
      g.mc_b_ = spec.params[0];
      break;
    case Family::Metacyclic:
      g.arith_ = Arith::MetacyclicLike;
      g.mc_a_ = spec.params[0];
      g.mc_b_ = spec.params[1];
      break;
    case Family::HolomorphPrime:
      g.arith_ = Arith::MetacyclicLike;
      g.mc_a_ = spec.params[0] - 1;
      g.mc_b_ = spec.params[0];
      break;
    case Family::Dicyclic:
      g.arith_ = Arith::Dicyclic;
      g.dc_n_ = spec.params[0];
      break;
  }
  if (g.arith_ == Arith::MetacyclicLike) {
    long long gg;
    if (spec.family == Family::Dihedral) gg = (g.mc_b_ - 1) % g.mc_b_;
    else if (spec.family == Family::HolomorphPrime)
      gg = smallest_primitive_root(spec.params[0]);
    else gg = spec.params[2] % g.mc_b_;
    g.mc_gpow_.resize(g.mc_a_);
    for (long long j = 0; j < g.mc_a_; ++j) g.mc_gpow_[j] = mod_pow(gg, j, g.mc_b_);
  }
  g.finish_construction();
  return g;
}

Group Group::from_table(int order, std::vector<int> table, std::string name,
                        std::optional<GroupSpec> iso) {
  if (static_cast<int>(table.size()) != order * order)
    throw InvalidSpecError("table size mismatch");
  Group g;
  g.order_ = order;
  g.arith_ = Arith::Table;
  g.table_ = std::move(table);
  g.name_ = std::move(name);
  g.spec_ = std::move(iso);
  g.finish_construction();
  return g;
}

void Group::finish_construction() {
  if (arith_ != Arith::Table && order_ <= kTableLimit) {
    table_.resize(static_cast<size_t>(order_) * order_);
    for (int u = 0; u < order_; ++u)
      for (int v = 0; v < order_; ++v)
        table_[static_cast<size_t>(u) * order_ + v] = mul_formula(u, v);
  }
  if (!table_.empty()) {
    inv_.assign(order_, -1);
    for (int u = 0; u < order_; ++u)
      for (int v = 0; v < order_; ++v)
        if (table_[static_cast<size_t>(u) * order_ + v] == 0) inv_[u] = v;
    eorder_.assign(order_, 1);
    for (int u = 1; u < order_; ++u) {
      int t = u, k = 1;
      while (t != 0) {
        t = table_[static_cast<size_t>(t) * order_ + u];
        ++k;
      }
      eorder_[u] = k;
    }
  }
}

int Group::mul_formula(int u, int v) const {
  switch (arith_) {
    case Arith::Cyclic:
      return static_cast<int>((u + v) % order_);
    case Arith::Product: {
      int r = 0, mulr = 1;
      int uu = u, vv = v;
      for (auto m : dp_mod_) {
        int a = uu % static_cast<int>(m), b = vv % static_cast<int>(m);
        uu /= static_cast<int>(m);
        vv /= static_cast<int>(m);
        r += ((a + b) % static_cast<int>(m)) * mulr;
        mulr *= static_cast<int>(m);
      }
      return r;
    }
    case Arith::MetacyclicLike: {
      long long b = mc_b_;
      long long i1 = u % b, j1 = u / b, i2 = v % b, j2 = v / b;
      long long i = (i1 + mc_gpow_[j1] * i2) % b;
      long long j = (j1 + j2) % mc_a_;
      return static_cast<int>(j * b + i);
    }
    case Arith::Dicyclic: {
      long long two_n = 2 * dc_n_;
      long long i1 = u % two_n, j1 = u / two_n, i2 = v % two_n, j2 = v / two_n;
      long long i = j1 == 0 ? (i1 + i2) % two_n
                            : ((i1 - i2 + dc_n_ * j2) % two_n + two_n) % two_n;
      long long j = (j1 + j2) % 2;
      return static_cast<int>(j * two_n + i);
    }
    case Arith::Table:
      return table_[static_cast<size_t>(u) * order_ + v];
  }
  return 0;
}

int Group::mul(int u, int v) const {
  if (!table_.empty()) return table_[static_cast<size_t>(u) * order_ + v];
  return mul_formula(u, v);
}

int Group::inv(int u) const {
  if (!inv_.empty()) return inv_[u];
  switch (arith_) {
    case Arith::Cyclic:
      return u == 0 ? 0 : order_ - u;
    case Arith::MetacyclicLike: {
      long long b = mc_b_;
      long long i = u % b, j = u / b;
      long long j2 = (mc_a_ - j) % mc_a_;
      long long i2 = ((-i % b + b) * mc_gpow_[j2]) % b;
      return static_cast<int>(j2 * b + i2);
    }
    default: {
      int t = u;
      while (mul(t, u) != 0) t = mul(t, u);
      return t;
    }
  }
}

int Group::element_order(int u) const {
  if (!eorder_.empty()) return eorder_[u];
  if (u == 0) return 1;
  int t = u, k = 1;
  while (t != 0) {
    t = mul(t, u);
    ++k;
  }
  return k;
}

int Group::max_element_order() const {
  int m = 1;
  for (int u = 0; u < order_; ++u) m = std::max(m, element_order(u));
  return m;
}

bool Group::is_abelian() const {
  for (int u = 0; u < order_; ++u)
    for (int v = u + 1; v < order_; ++v)
      if (mul(u, v) != mul(v, u)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// two-generator encode/decode and element names

bool Group::two_generator() const {
  return arith_ == Arith::MetacyclicLike || arith_ == Arith::Dicyclic;
}

std::pair<int, int> Group::decode(int e) const {
  if (arith_ == Arith::MetacyclicLike)
    return {static_cast<int>(e % mc_b_), static_cast<int>(e / mc_b_)};
  if (arith_ == Arith::Dicyclic)
    return {static_cast<int>(e % (2 * dc_n_)), static_cast<int>(e / (2 * dc_n_))};
  throw UnsupportedError("decode: not a two-generator family");
}

int Group::encode(int i, int j) const {
  if (arith_ == Arith::MetacyclicLike) {
    long long b = mc_b_;
    long long ii = ((i % b) + b) % b, jj = ((j % mc_a_) + mc_a_) % mc_a_;
    return static_cast<int>(jj * b + ii);
  }
  if (arith_ == Arith::Dicyclic) {
    long long tn = 2 * dc_n_;
    long long ii = ((i % tn) + tn) % tn, jj = ((j % 2) + 2) % 2;
    return static_cast<int>(jj * tn + ii);
  }
  throw UnsupportedError("encode: not a two-generator family");
}

int Group::gen_x() const { return encode(1, 0); }
int Group::gen_y() const { return encode(0, 1); }

std::string Group::element_name(int e) const {
  if (!two_generator()) return std::to_string(e);
  auto [i, j] = decode(e);
  if (i == 0 && j == 0) return "1";
  std::string s;
  if (i > 0) {
    s += "x";
    if (i > 1) s += "^" + std::to_string(i);
  }
  if (j > 0) {
    if (!s.empty()) s += "*";
    s += "y";
    if (j > 1) s += "^" + std::to_string(j);
  }
  return s;
}

namespace {
bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}
}  // namespace

int Group::parse_element(const std::string& token) const {
  if (token.empty()) throw ParseError("empty element token");
  if (two_generator() && token == "1") return 0;
  if (all_digits(token)) {
    int e = std::stoi(token);
    if (e < 0 || e >= order_)
      throw ParseError("element index " + token + " out of range");
    return e;
  }
  if (!two_generator())
    throw ParseError("element '" + token + "' not valid for this group");
  // forms: x, x^i, y, y^j, x^i*y^j (with * separator)
  int xi = 0, yj = 0;
  std::stringstream ss(token);
  std::string part;
  while (std::getline(ss, part, '*')) {
    if (part.empty()) throw ParseError("bad element token '" + token + "'");
    char gen = part[0];
    long long exp = 1;
    if (part.size() > 1) {
      if (part[1] != '^' || part.size() < 3)
        throw ParseError("bad element token '" + token + "'");
      try {
        exp = std::stoll(part.substr(2));
      } catch (...) {
        throw ParseError("bad exponent in '" + token + "'");
      }
    }
    if (gen == 'x') xi += static_cast<int>(exp);
    else if (gen == 'y') yj += static_cast<int>(exp);
    else throw ParseError("unknown generator '" + std::string(1, gen) + "'");
  }
  return encode(xi, yj);
}

// ---------------------------------------------------------------------------
// subgroup machinery

std::vector<int> Group::subgroup_generated(const std::vector<int>& gens) const {
  std::set<int> closure{0};
  std::vector<int> frontier{0};
  for (int g : gens)
    if (closure.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    int u = frontier.back();
    frontier.pop_back();
    std::vector<int> next;
    for (int v : closure) {
      next.push_back(mul(u, v));
      next.push_back(mul(v, u));
    }
    next.push_back(inv(u));
    for (int w : next)
      if (closure.insert(w).second) frontier.push_back(w);
  }
  return {closure.begin(), closure.end()};
}

bool Group::is_subgroup(const std::vector<int>& h) const {
  if (h.empty() || !std::binary_search(h.begin(), h.end(), 0)) return false;
  for (int u : h)
    for (int v : h)
      if (!std::binary_search(h.begin(), h.end(), mul(u, v))) return false;
  return true;
}

bool Group::is_normal(const std::vector<int>& h) const {
  for (int g = 0; g < order_; ++g) {
    int gi = inv(g);
    for (int u : h)
      if (!std::binary_search(h.begin(), h.end(), mul(mul(g, u), gi)))
        return false;
  }
  return true;
}

QuotientResult Group::quotient(const std::vector<int>& h) const {
  if (!is_subgroup(h)) throw NotSubgroupError("quotient: H is not a subgroup");
  if (!is_normal(h)) throw NotNormalError("quotient: H is not normal");
  int k = order_ / static_cast<int>(h.size());
  // coset of e = { e*u : u in H }; label = minimum member
  std::vector<int> coset_min(order_, -1);
  for (int e = 0; e < order_; ++e) {
    if (coset_min[e] != -1) continue;
    int mn = order_;
    std::vector<int> members;
    for (int u : h) {
      int m = mul(e, u);
      members.push_back(m);
      mn = std::min(mn, m);
    }
    for (int m : members) coset_min[m] = mn;
  }
  std::vector<int> labels;  // distinct minima, ascending
  for (int e = 0; e < order_; ++e)
    if (coset_min[e] == e) labels.push_back(e);
  std::vector<int> proj(order_);
  for (int e = 0; e < order_; ++e)
    proj[e] = static_cast<int>(std::lower_bound(labels.begin(), labels.end(),
                                                coset_min[e]) -
                               labels.begin());
  std::vector<int> qt(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      qt[static_cast<size_t>(a) * k + b] = proj[mul(labels[a], labels[b])];
  Group q = Group::from_table(k, std::move(qt), name_ + "/H");
  q.spec_ = recognize_spec(q);
  if (!q.spec_ && arith_ == Arith::MetacyclicLike && mc_gpow_.size() > 1) {
    // H inside <x>: the quotient satisfies x^b' = y^a = 1, x^g y = yx with
    // b' = b/|H|, and has order a*b', so it is metacyclic(a, b', g mod b')
    // whenever ord_{b'}(g) is still a
    bool in_x = std::all_of(h.begin(), h.end(),
                            [&](int e) { return e / mc_b_ == 0; });
    if (in_x) {
      long long bq = mc_b_ / static_cast<long long>(h.size());
      long long gq = mc_gpow_[1] % bq;
      if (bq > 1 && mult_order(gq, bq) == mc_a_) {
        try {
          GroupSpec qs = GroupSpec::metacyclic(mc_a_, bq, gq);
          qs.validate();
          q.spec_ = qs;
        } catch (const Error&) {
        }
      }
    }
  }
  return {std::move(q), std::move(proj)};
}

Group Group::subgroup_as_group(const std::vector<int>& h,
                               std::vector<int>* embedding) const {
  if (!is_subgroup(h)) throw NotSubgroupError("not a subgroup");
  int k = static_cast<int>(h.size());
  std::vector<int> t(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int m = mul(h[a], h[b]);
      t[static_cast<size_t>(a) * k + b] = static_cast<int>(
          std::lower_bound(h.begin(), h.end(), m) - h.begin());
    }
  if (embedding) *embedding = h;
  Group s = Group::from_table(k, std::move(t), "sub(" + name_ + ")");
  s.spec_ = recognize_spec(s);
  return s;
}

std::vector<int> Group::center() const {
  std::vector<int> z;
  for (int u = 0; u < order_; ++u) {
    bool central = true;
    for (int v = 0; v < order_ && central; ++v)
      central = mul(u, v) == mul(v, u);
    if (central) z.push_back(u);
  }
  return z;
}

std::vector<int> Group::centralizer(int h) const {
  std::vector<int> c;
  for (int u = 0; u < order_; ++u)
    if (mul(u, h) == mul(h, u)) c.push_back(u);
  return c;
}

// ---------------------------------------------------------------------------
// abelian structure recognition

std::vector<long long> Group::abelian_invariant_factors() const {
  if (!is_abelian()) return {};
  // per-prime partition of exponents, recovered from counts of elements
  // of order dividing p^i
  std::map<long long, std::vector<int>> prime_parts;
  std::vector<long long> primes;
  long long mm = order_;
  for (long long p = 2; p <= mm; ++p) {
    if (mm % p) continue;
    primes.push_back(p);
    while (mm % p == 0) mm /= p;
  }
  for (long long p : primes) {
    // c_i = #{elements with ord | p^i} = p^(sum_j min(i, a_j)),
    // so log_p(c_i) - log_p(c_{i-1}) = #{j : a_j >= i}
    std::vector<int> d;  // d[i-1] = #{j : a_j >= i}
    long long prev = 1;
    for (long long pi = p;; pi *= p) {
      long long c = 0;
      for (int u = 0; u < order_; ++u)
        if (pi % element_order(u) == 0) ++c;
      if (c == prev) break;
      int diff = 0;
      long long ratio = c / prev;
      while (ratio > 1) {
        ratio /= p;
        ++diff;
      }
      d.push_back(diff);
      prev = c;
    }
    // conjugate partition: exponent i+1 occurs d[i] - d[i+1] times
    std::vector<int> exps;
    for (size_t i = 0; i < d.size(); ++i) {
      int cnt = d[i] - (i + 1 < d.size() ? d[i + 1] : 0);
      for (int c = 0; c < cnt; ++c) exps.push_back(static_cast<int>(i) + 1);
    }
    std::sort(exps.rbegin(), exps.rend());
    prime_parts[p] = exps;
  }
  size_t rank = 0;
  for (auto& [p, e] : prime_parts) rank = std::max(rank, e.size());
  std::vector<long long> factors(rank, 1);
  for (auto& [p, e] : prime_parts)
    for (size_t i = 0; i < e.size(); ++i) {
      long long pw = 1;
      for (int c = 0; c < e[i]; ++c) pw *= p;
      factors[i] *= pw;  // descending exponents -> factors[0] largest
    }
  std::sort(factors.begin(), factors.end());  // n_1 | n_2 | ... ascending
  return factors;
}

std::optional<GroupSpec> recognize_spec(const Group& g) {
  if (g.spec()) return g.spec();
  if (!g.is_abelian()) return std::nullopt;
  auto f = g.abelian_invariant_factors();
  if (f.empty()) return std::nullopt;
  if (f.size() == 1) return GroupSpec::cyclic(f[0]);
  return GroupSpec::direct_product(f);
}

}  // namespace davlab
