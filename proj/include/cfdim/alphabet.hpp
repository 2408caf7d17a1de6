#ifndef CFDIM_ALPHABET_HPP
#define CFDIM_ALPHABET_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cfdim/errors.hpp"
#include "cfdim/interval.hpp"

namespace cfdim {

using BigInt = mpz_class;

// Outward conversion: smallest interval of doubles containing the integer.
Interval to_interval(const BigInt& z);

enum class Family { Explicit, PowerQ, PowerQStar, MonomialQ, Progression, Primes };

const char* family_name(Family f);

// Sorted distinct positive integers, optionally a finite snapshot of one of
// the named infinite families. `tail_infinite` marks that everything in the
// family above the snapshot is also meant (used to attach tail majorants).
// Values are immutable after construction.
class Alphabet {
 public:
  Alphabet() = default;

  // canonicalizes: sorts, deduplicates, rejects elements < 1
  static Alphabet from_elements(std::vector<BigInt> elems);
  static Alphabet from_ints(const std::vector<long>& elems);

  // first `count` members of the family in increasing order
  static Alphabet make_family(Family tag, long q, long a, long b, int count);
  static Alphabet power(long q, int count) { return make_family(Family::PowerQ, q, 0, 0, count); }
  static Alphabet power_star(long q, int count) { return make_family(Family::PowerQStar, q, 0, 0, count); }
  static Alphabet monomial(long q, int count) { return make_family(Family::MonomialQ, q, 0, 0, count); }
  static Alphabet primes(int count) { return make_family(Family::Primes, 0, 0, 0, count); }

  const std::vector<BigInt>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  const BigInt& gamma() const;  // minimum element
  const BigInt& max() const;
  Family family() const { return family_; }
  long param_q() const { return q_; }
  long param_a() const { return a_; }
  long param_b() const { return b_; }
  bool tail_infinite() const { return tail_infinite_; }

  bool contains(const BigInt& x) const;

  // s-threshold below which the full family's operator sum diverges
  struct Finiteness {
    double sigma0;
    bool exact;
  };
  Finiteness finiteness() const;

  // family membership of x in the *infinite* family (snapshot-independent)
  bool family_contains(const BigInt& x) const;

  // first `count` family members strictly greater than x
  std::vector<BigInt> family_elements_above(const BigInt& x, int count) const;

  // copy with `count` more family elements appended past the current max
  Alphabet extended(int count) const;

  // copy marked as carrying the family's infinite tail beyond the snapshot
  Alphabet with_infinite_tail() const;
  Alphabet without_tail() const;

  // copy with one element removed / added (keeps family tag for context)
  Alphabet without_element(const BigInt& x) const;
  Alphabet with_element(const BigInt& x) const;

  // copy of this snapshot carrying `parent`'s family tag and parameters
  Alphabet adopt_family(const Alphabet& parent) const;

  // single-line text format: explicit:[1,2,4] | family:P_q(q=2,count=12)
  std::string to_text() const;
  static Alphabet parse(const std::string& line);

  bool operator==(const Alphabet& o) const {
    return elems_ == o.elems_ && tail_infinite_ == o.tail_infinite_;
  }

 private:
  std::vector<BigInt> elems_;
  Family family_ = Family::Explicit;
  long q_ = 0, a_ = 0, b_ = 0;
  bool tail_infinite_ = false;
};

// Certificate of the Theorem-1.1 side condition a_n*a_m >= a_{n+m} for all
// 1 <= n <= m, m >= 2, n+m <= max_index. For family snapshots this is an
// empirical range check, and the record says so.
struct SubmultiplicativeCheck {
  std::string alphabet_text;
  int max_index = 0;
  bool holds = false;
  bool range_limited = false;  // family checked only up to max_index
  struct Violation {
    int n, m;
    BigInt an, am, anm;
  };
  std::vector<Violation> violations;
};

SubmultiplicativeCheck check_submultiplicative(const Alphabet& a, int max_index);

// F-sharp set: (f minus its maximum) joined with the parent-family elements
// above max f; the first tail_count of them are materialized and the result
// is marked tail-infinite.
Alphabet f_sharp(const Alphabet& f, const Alphabet& parent, int tail_count);

}  // namespace cfdim

#endif
