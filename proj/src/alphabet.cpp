#include "cfdim/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cfdim {

Interval to_interval(const BigInt& z) {
  // mpz_get_d truncates toward zero; elements are >= 1 so this is the
  // downward endpoint. Exactness check decides whether to widen upward.
  double lo = mpz_get_d(z.get_mpz_t());
  if (mpz_cmp_d(z.get_mpz_t(), lo) == 0) return Interval(lo);
  return Interval(lo, detail::up1(lo));
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Explicit: return "explicit";
    case Family::PowerQ: return "P_q";
    case Family::PowerQStar: return "P_q_star";
    case Family::MonomialQ: return "M_q";
    case Family::Progression: return "progression";
    case Family::Primes: return "primes";
  }
  return "?";
}

namespace {

BigInt pow_big(long base, long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(e));
  return r;
}

std::vector<BigInt> sieve_primes(int count) {
  std::vector<BigInt> out;
  unsigned long bound = 64;
  while (true) {
    std::vector<bool> comp(bound + 1, false);
    out.clear();
    for (unsigned long p = 2; p <= bound; ++p) {
      if (comp[p]) continue;
      out.emplace_back(static_cast<unsigned long>(p));
      for (unsigned long k = p * p; k <= bound; k += p) comp[k] = true;
    }
    if (static_cast<int>(out.size()) >= count) {
      out.resize(static_cast<std::size_t>(count));
      return out;
    }
    bound *= 2;
    if (bound > (1ul << 31)) throw ParamError("prime count too large");
  }
}

bool is_prime_small(const BigInt& x) {
  if (x < 2) return false;
  if (mpz_fits_ulong_p(x.get_mpz_t())) {
    unsigned long v = mpz_get_ui(x.get_mpz_t());
    for (unsigned long d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  }
  throw ParamError("prime membership test only supported for machine-size values");
}

}  // namespace

Alphabet Alphabet::from_elements(std::vector<BigInt> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty()) throw ParamError("empty alphabet");
  if (elems.front() < 1) throw ParamError("alphabet elements must be >= 1");
  Alphabet a;
  a.elems_ = std::move(elems);
  return a;
}

Alphabet Alphabet::from_ints(const std::vector<long>& elems) {
  std::vector<BigInt> v;
  v.reserve(elems.size());
  for (long e : elems) v.emplace_back(e);
  return from_elements(std::move(v));
}

Alphabet Alphabet::make_family(Family tag, long q, long a, long b, int count) {
  if (count <= 0) throw ParamError("empty alphabet: count must be >= 1");
  Alphabet out;
  out.family_ = tag;
  out.q_ = q;
  out.a_ = a;
  out.b_ = b;
  switch (tag) {
    case Family::Explicit:
      throw ParamError("make_family does not build explicit alphabets");
    case Family::PowerQ: {
      if (q < 2) throw ParamError("P_q needs q >= 2");
      for (int n = 1; n <= count; ++n) out.elems_.push_back(pow_big(q, n));
      break;
    }
    case Family::PowerQStar: {
      if (q < 2) throw ParamError("P_q_star needs q >= 2");
      out.elems_.emplace_back(1);
      for (int n = 1; n < count; ++n) out.elems_.push_back(pow_big(q, n));
      break;
    }
    case Family::MonomialQ: {
      if (q < 1) throw ParamError("M_q needs q >= 1");
      for (int n = 1; n <= count; ++n) out.elems_.push_back(pow_big(n, q));
      break;
    }
    case Family::Progression: {
      if (!(0 <= a && a < b)) throw ParamError("progression needs 0 <= a < b");
      long n = (a >= 1) ? 0 : 1;
      for (int k = 0; k < count; ++k, ++n) out.elems_.emplace_back(a + b * n);
      break;
    }
    case Family::Primes:
      out.elems_ = sieve_primes(count);
      break;
  }
  return out;
}

const BigInt& Alphabet::gamma() const {
  if (elems_.empty()) throw ParamError("empty alphabet");
  return elems_.front();
}

const BigInt& Alphabet::max() const {
  if (elems_.empty()) throw ParamError("empty alphabet");
  return elems_.back();
}

bool Alphabet::contains(const BigInt& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

Alphabet::Finiteness Alphabet::finiteness() const {
  if (!tail_infinite_) return {0.0, true};
  switch (family_) {
    case Family::PowerQ:
    case Family::PowerQStar:
      return {0.0, true};
    case Family::MonomialQ:
      return {1.0 / (2.0 * static_cast<double>(q_)), true};
    case Family::Progression:
    case Family::Primes:
      return {0.5, true};
    case Family::Explicit:
      return {0.0, true};
  }
  return {0.0, true};
}

bool Alphabet::family_contains(const BigInt& x) const {
  if (x < 1) return false;
  switch (family_) {
    case Family::Explicit:
      return contains(x);
    case Family::PowerQ:
    case Family::PowerQStar: {
      if (x == 1) return family_ == Family::PowerQStar;
      BigInt v = x;
      while (v % q_ == 0) v /= q_;
      return v == 1;
    }
    case Family::MonomialQ: {
      BigInt root;
      return mpz_root(root.get_mpz_t(), x.get_mpz_t(),
                      static_cast<unsigned long>(q_)) != 0;
    }
    case Family::Progression: {
      if (x < gamma()) return false;
      BigInt r = (x - a_) % b_;
      return r == 0 && x >= a_;
    }
    case Family::Primes:
      return is_prime_small(x);
  }
  return false;
}

std::vector<BigInt> Alphabet::family_elements_above(const BigInt& x, int count) const {
  if (count < 0) throw ParamError("negative count");
  std::vector<BigInt> out;
  switch (family_) {
    case Family::Explicit: {
      for (const BigInt& e : elems_)
        if (e > x && static_cast<int>(out.size()) < count) out.push_back(e);
      return out;
    }
    case Family::PowerQ:
    case Family::PowerQStar: {
      BigInt v = (family_ == Family::PowerQ) ? BigInt(q_) : BigInt(1);
      while (v <= x) v *= q_;
      while (static_cast<int>(out.size()) < count) {
        out.push_back(v);
        v *= q_;
      }
      return out;
    }
    case Family::MonomialQ: {
      BigInt root;
      mpz_root(root.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(q_));
      BigInt n = root;  // floor(x^(1/q)); first candidate is n or n+1
      BigInt p;
      mpz_pow_ui(p.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(q_));
      if (p <= x) {
        n += 1;
        mpz_pow_ui(p.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(q_));
      }
      while (static_cast<int>(out.size()) < count) {
        out.push_back(p);
        n += 1;
        mpz_pow_ui(p.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(q_));
      }
      return out;
    }
    case Family::Progression: {
      BigInt v = gamma();
      while (v <= x) v += b_;
      while (static_cast<int>(out.size()) < count) {
        out.push_back(v);
        v += b_;
      }
      return out;
    }
    case Family::Primes: {
      BigInt v = x + 1;
      while (static_cast<int>(out.size()) < count) {
        while (!is_prime_small(v)) v += 1;
        out.push_back(v);
        v += 1;
      }
      return out;
    }
  }
  return out;
}

Alphabet Alphabet::extended(int count) const {
  if (family_ == Family::Explicit)
    throw ParamError("cannot extend an explicit alphabet");
  Alphabet out = *this;
  for (BigInt& e : family_elements_above(max(), count))
    out.elems_.push_back(std::move(e));
  return out;
}

Alphabet Alphabet::with_infinite_tail() const {
  if (family_ == Family::Explicit)
    throw ParamError("explicit alphabets have no infinite tail");
  Alphabet out = *this;
  out.tail_infinite_ = true;
  return out;
}

Alphabet Alphabet::without_tail() const {
  Alphabet out = *this;
  out.tail_infinite_ = false;
  return out;
}

Alphabet Alphabet::without_element(const BigInt& x) const {
  Alphabet out = *this;
  out.elems_.erase(std::remove(out.elems_.begin(), out.elems_.end(), x),
                   out.elems_.end());
  if (out.elems_.empty()) throw ParamError("removal left an empty alphabet");
  return out;
}

Alphabet Alphabet::with_element(const BigInt& x) const {
  if (x < 1) throw ParamError("alphabet elements must be >= 1");
  Alphabet out = *this;
  auto it = std::lower_bound(out.elems_.begin(), out.elems_.end(), x);
  if (it == out.elems_.end() || *it != x) out.elems_.insert(it, x);
  return out;
}

Alphabet Alphabet::adopt_family(const Alphabet& parent) const {
  Alphabet out = *this;
  out.family_ = parent.family_;
  out.q_ = parent.q_;
  out.a_ = parent.a_;
  out.b_ = parent.b_;
  return out;
}

std::string Alphabet::to_text() const {
  // Derived snapshots (f_sharp results, element removals) carry a family tag
  // but are not family prefixes; those serialize in explicit form and the
  // tail semantics travel separately (solver/certificate tail descriptor).
  bool family_form = false;
  if (family_ != Family::Explicit) {
    Alphabet pure = make_family(family_, q_, a_, b_, static_cast<int>(elems_.size()));
    family_form = pure.elems_ == elems_;
  }
  std::ostringstream os;
  if (!family_form) {
    os << "explicit:[";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) os << ",";
      os << elems_[i].get_str();
    }
    os << "]";
  } else {
    os << "family:" << family_name(family_) << "(";
    if (family_ == Family::Progression)
      os << "a=" << a_ << ",b=" << b_ << ",";
    else if (family_ != Family::Primes)
      os << "q=" << q_ << ",";
    os << "count=" << elems_.size() << ")";
    if (tail_infinite_) os << "+tail";
  }
  return os.str();
}

namespace {

long parse_long(const std::string& s) {
  std::size_t pos = 0;
  long v = std::stol(s, &pos);
  if (pos != s.size()) throw ParamError("bad integer '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Alphabet Alphabet::parse(const std::string& raw) {
  std::string line;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) line.push_back(c);

  bool tail = false;
  if (line.size() > 5 && line.substr(line.size() - 5) == "+tail") {
    tail = true;
    line = line.substr(0, line.size() - 5);
  }

  if (line.rfind("explicit:[", 0) == 0) {
    if (line.back() != ']') throw ParamError("alphabet spec missing ']'");
    std::string body = line.substr(10, line.size() - 11);
    if (body.empty()) throw ParamError("empty alphabet");
    std::vector<BigInt> elems;
    for (const std::string& tok : split(body, ','))
      elems.emplace_back(tok);
    if (tail) throw ParamError("explicit alphabets have no infinite tail");
    return from_elements(std::move(elems));
  }

  if (line.rfind("family:", 0) == 0) {
    auto open = line.find('(');
    if (open == std::string::npos || line.back() != ')')
      throw ParamError("bad family spec: '" + raw + "'");
    std::string name = line.substr(7, open - 7);
    std::string args = line.substr(open + 1, line.size() - open - 2);
    long q = 0, a = 0, b = 0;
    int count = -1;
    for (const std::string& kv : split(args, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw ParamError("bad family arg '" + kv + "'");
      std::string key = kv.substr(0, eq);
      long val = parse_long(kv.substr(eq + 1));
      if (key == "q") q = val;
      else if (key == "a") a = val;
      else if (key == "b") b = val;
      else if (key == "count") count = static_cast<int>(val);
      else throw ParamError("unknown family arg '" + key + "'");
    }
    if (count < 0) throw ParamError("family spec needs count=");
    Family tag;
    if (name == "P_q") tag = Family::PowerQ;
    else if (name == "P_q_star") tag = Family::PowerQStar;
    else if (name == "M_q") tag = Family::MonomialQ;
    else if (name == "progression") tag = Family::Progression;
    else if (name == "primes") tag = Family::Primes;
    else throw ParamError("unknown family '" + name + "'");
    Alphabet out = make_family(tag, q, a, b, count);
    return tail ? out.with_infinite_tail() : out;
  }

  throw ParamError("alphabet spec must start with 'explicit:' or 'family:': '" + raw + "'");
}

SubmultiplicativeCheck check_submultiplicative(const Alphabet& a, int max_index) {
  if (max_index < 3) throw ParamError("max_index must be >= 3");
  if (static_cast<int>(a.size()) < max_index)
    throw ParamError("alphabet snapshot shorter than max_index");
  if (a.gamma() < 2)
    throw ParamError("condition inapplicable: requires a_1 >= 2");

  SubmultiplicativeCheck out;
  out.alphabet_text = a.to_text();
  out.max_index = max_index;
  out.range_limited = a.family() != Family::Explicit;
  const auto& e = a.elements();
  for (int m = 2; m < max_index; ++m) {
    for (int n = 1; n <= m && n + m <= max_index; ++n) {
      BigInt prod = e[static_cast<std::size_t>(n - 1)] * e[static_cast<std::size_t>(m - 1)];
      const BigInt& sum_elem = e[static_cast<std::size_t>(n + m - 1)];
      if (prod < sum_elem)
        out.violations.push_back({n, m, e[static_cast<std::size_t>(n - 1)],
                                  e[static_cast<std::size_t>(m - 1)], sum_elem});
    }
  }
  out.holds = out.violations.empty();
  return out;
}

Alphabet f_sharp(const Alphabet& f, const Alphabet& parent, int tail_count) {
  if (f.size() == 0) throw ParamError("f_sharp of empty set");
  if (parent.family() == Family::Explicit)
    throw ParamError("f_sharp parent must be a family");
  if (tail_count < 1) throw ParamError("tail_count must be >= 1");
  for (const BigInt& e : f.elements())
    if (!parent.family_contains(e))
      throw ContainmentError("f_sharp: " + e.get_str() + " is not in the parent family");

  std::vector<BigInt> elems(f.elements().begin(), f.elements().end() - 1);
  for (BigInt& t : parent.family_elements_above(f.max(), tail_count))
    elems.push_back(std::move(t));

  return Alphabet::from_elements(std::move(elems))
      .adopt_family(parent)
      .with_infinite_tail();
}

}  // namespace cfdim
