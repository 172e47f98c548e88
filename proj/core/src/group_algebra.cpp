#include "qga/group_algebra.hpp"

#include "qga/numtheory.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

namespace qga {

AlgebraElement::AlgebraElement(Group g)
    : group_(std::move(g)), coeffs_(static_cast<std::size_t>(group_.order())) {}

bool AlgebraElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

int AlgebraElement::support_size() const {
  int n = 0;
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) ++n;
  }
  return n;
}

AlgebraElement AlgebraElement::one(const Group& g) {
  AlgebraElement e(g);
  e.coeffs_[0] = 1;
  return e;
}

AlgebraElement AlgebraElement::basis(const Group& g, int x) {
  AlgebraElement e(g);
  e.coeffs_[static_cast<std::size_t>(x)] = 1;
  return e;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (group_.order() != o.group_.order()) throw std::invalid_argument("algebra elements over different groups");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (group_.order() != o.group_.order()) throw std::invalid_argument("algebra elements over different groups");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.group_.order() != b.group_.order()) throw std::invalid_argument("algebra elements over different groups");
  const Group& g = a.group_;
  AlgebraElement out(g);
  std::vector<int> supp_a, supp_b;
  for (int i = 0; i < g.order(); ++i) {
    if (sgn(a.coeffs_[static_cast<std::size_t>(i)]) != 0) supp_a.push_back(i);
    if (sgn(b.coeffs_[static_cast<std::size_t>(i)]) != 0) supp_b.push_back(i);
  }
  for (int x : supp_a) {
    const Rational& ca = a.coeffs_[static_cast<std::size_t>(x)];
    for (int y : supp_b) {
      out.coeffs_[static_cast<std::size_t>(g.mul(x, y))] += ca * b.coeffs_[static_cast<std::size_t>(y)];
    }
  }
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.group_.order() != b.group_.order()) return false;
  return a.coeffs_ == b.coeffs_;
}

bool AlgebraElement::is_idempotent() const { return (*this) * (*this) == *this; }

bool AlgebraElement::is_central() const {
  const Group& g = group_;
  for (int x = 0; x < g.order(); ++x) {
    for (int k = 0; k < g.order(); ++k) {
      if (coeffs_[static_cast<std::size_t>(g.conj(x, k))] != coeffs_[static_cast<std::size_t>(k)]) return false;
    }
  }
  return true;
}

AlgebraElement hat(const Group& g, const std::vector<int>& members) {
  if (members.empty()) throw std::invalid_argument("hat of an empty set");
  AlgebraElement e(g);
  Rational w = make_rational(1, static_cast<long>(members.size()));
  for (int x : members) e.at(x) += w;
  return e;
}

AlgebraElement epsilon(const Group& ambient, const Subgroup& h, const Subgroup& n) {
  if (!is_subgroup_subset(n, h)) throw std::invalid_argument("epsilon: N is not contained in H");
  AlgebraElement acc = hat(ambient, n.members);
  if (n.size() == h.size()) return acc;

  std::vector<int> hmap;
  Group hg = subgroup_as_group(ambient, h, &hmap);
  std::vector<int> local_of(static_cast<std::size_t>(ambient.order()), -1);
  for (std::size_t i = 0; i < hmap.size(); ++i) local_of[static_cast<std::size_t>(hmap[i])] = static_cast<int>(i);

  Subgroup n_local;
  n_local.mask.assign(static_cast<std::size_t>(hg.order()), 0);
  for (int x : n.members) {
    int lx = local_of[static_cast<std::size_t>(x)];
    if (lx < 0) throw std::logic_error("epsilon: inconsistent subgroup data");
    n_local.mask[static_cast<std::size_t>(lx)] = 1;
    n_local.members.push_back(lx);
  }
  std::sort(n_local.members.begin(), n_local.members.end());

  QuotientResult q = quotient(hg, n_local);  // checks N normal in H
  AlgebraElement identity = AlgebraElement::one(ambient);
  for (const Subgroup& minimal : minimal_normal_subgroups(q.group)) {
    // preimage of the minimal subgroup inside the ambient group
    std::vector<int> dmembers;
    for (int lx = 0; lx < hg.order(); ++lx) {
      if (minimal.contains(q.projection[static_cast<std::size_t>(lx)]))
        dmembers.push_back(hmap[static_cast<std::size_t>(lx)]);
    }
    std::sort(dmembers.begin(), dmembers.end());
    AlgebraElement factor = identity - hat(ambient, dmembers);
    acc = acc * factor;
  }
  return acc;
}

AlgebraElement rational_idempotent(const CharacterTable& t, int char_index) {
  const Character& chi = t.chars.at(static_cast<std::size_t>(char_index));
  const Group& g = t.group;
  long d = chi.conductor;
  std::vector<Rational> tr(chi.values.size());
  for (std::size_t j = 0; j < chi.values.size(); ++j) tr[j] = chi.values[j].trace_from(d);
  Rational scale = make_rational(chi.degree, g.order());
  AlgebraElement e(g);
  for (int x = 0; x < g.order(); ++x) {
    int j = t.classes.class_of[static_cast<std::size_t>(g.inv(x))];
    e.at(x) = scale * tr[static_cast<std::size_t>(j)];
  }
  return e;
}

std::optional<AlgebraElement> predicted_idempotent(const CharacterTable& t, int char_index,
                                                   const CaminaProfile& prof) {
  const Character& chi = t.chars.at(static_cast<std::size_t>(char_index));
  const Group& g = t.group;
  CharacterInvariants inv = character_invariants(t, char_index);
  if (chi.degree == 1) {
    return epsilon(g, full_subgroup(g), inv.kernel);
  }
  if (!prof.is_camina_group) return std::nullopt;
  if (prof.nilpotency_class == 2) {
    if (!is_subgroup_subset(inv.kernel, prof.center)) return std::nullopt;
    return epsilon(g, prof.center, inv.kernel);
  }
  if (prof.nilpotency_class == 3) {
    if (is_subgroup_subset(prof.center, inv.kernel)) {
      if (!is_subgroup_subset(inv.kernel, prof.derived)) return std::nullopt;
      return epsilon(g, prof.derived, inv.kernel);
    }
    if (!is_subgroup_subset(inv.kernel, prof.center)) return std::nullopt;
    return epsilon(g, prof.center, inv.kernel);
  }
  return std::nullopt;
}

namespace {

long bareiss_rank(std::vector<std::vector<Integer>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  long rank = 0;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

long modular_rank(const std::vector<std::vector<Integer>>& m, std::uint64_t p) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Integer v = m[i][j] % Integer(static_cast<unsigned long>(p));
      if (v < 0) v += Integer(static_cast<unsigned long>(p));
      a[i][j] = v.get_ui();
    }
  long rank = 0;
  std::size_t r = 0;
  auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(x) * y) % p);
  };
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::uint64_t inv = inv_mod(a[r][c], p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint64_t f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = (a[i][j] + p - mulmod(f, a[r][j])) % p;
    }
    ++r;
    ++rank;
  }
  return rank;
}

} // namespace

long component_dimension(const AlgebraElement& e, std::uint64_t seed) {
  if (!e.is_idempotent()) throw std::invalid_argument("component_dimension: element is not idempotent");
  const Group& g = e.group();
  int n = g.order();

  // rows of the left-translation matrix, deduplicated
  std::map<std::vector<Rational>, int> uniq;
  for (int x = 0; x < n; ++x) {
    std::vector<Rational> row(static_cast<std::size_t>(n));
    int xi = g.inv(x);
    for (int k = 0; k < n; ++k) row[static_cast<std::size_t>(k)] = e.at(g.mul(xi, k));
    uniq.emplace(std::move(row), x);
  }
  // clear denominators with one global factor
  Integer den_lcm = 1;
  for (const auto& [row, x] : uniq) {
    for (const Rational& v : row) {
      if (sgn(v) != 0) den_lcm = lcm(den_lcm, Integer(v.get_den()));
    }
  }
  std::vector<std::vector<Integer>> m;
  m.reserve(uniq.size());
  for (const auto& [row, x] : uniq) {
    std::vector<Integer> irow(row.size());
    bool nonzero = false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      Rational scaled = row[j] * Rational(den_lcm);
      if (scaled.get_den() != 1) throw std::logic_error("denominator clearing failed");
      irow[j] = scaled.get_num();
      if (irow[j] != 0) nonzero = true;
    }
    if (nonzero) m.push_back(std::move(irow));
  }

  long exact = bareiss_rank(m);

  // modular cross-check at two random primes above the group order
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(static_cast<std::uint64_t>(n) + 1, 1u << 30);
  for (int check = 0; check < 2; ++check) {
    long got = -1;
    for (int attempt = 0; attempt < 3; ++attempt) {
      std::uint64_t p = dist(rng);
      while (!is_prime(p)) ++p;
      got = modular_rank(m, p);
      if (got == exact) break;  // a bad prime can only lower the rank
    }
    if (got != exact)
      throw std::runtime_error("component_dimension: modular rank check failed");
  }
  return exact;
}

namespace {

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  int nthreads = std::min(threads, count);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (;;) {
          int i = next.fetch_add(1);
          if (i >= count) break;
          fn(i);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

} // namespace

CompleteSetReport verify_complete_set(const CharacterTable& t, const CaminaProfile& prof,
                                      int threads, std::uint64_t seed) {
  const Group& g = t.group;
  std::vector<GaloisClass> classes = galois_partition(t);
  int nclasses = static_cast<int>(classes.size());

  std::vector<AlgebraElement> idems(static_cast<std::size_t>(nclasses), AlgebraElement(g));
  CompleteSetReport rep;
  rep.checks.resize(static_cast<std::size_t>(nclasses));

  parallel_for(nclasses, threads, [&](int i) {
    const GaloisClass& cls = classes[static_cast<std::size_t>(i)];
    int rep_char = cls.members.front();
    AlgebraElement e = rational_idempotent(t, rep_char);
    IdempotentCheck chk;
    chk.char_index = rep_char;
    chk.degree = cls.degree;
    chk.conductor = cls.field_conductor;
    chk.idempotent = e.is_idempotent();
    chk.central = e.is_central();
    chk.expected_dimension =
        static_cast<long>(cls.degree) * cls.degree *
        static_cast<long>(euler_phi(static_cast<std::uint64_t>(cls.field_conductor)));
    chk.dimension = chk.idempotent ? component_dimension(e, seed) : -1;
    std::optional<AlgebraElement> predicted = predicted_idempotent(t, rep_char, prof);
    if (predicted.has_value()) {
      chk.has_prediction = true;
      chk.prediction_matches = (*predicted == e);
      if (cls.degree == 1) chk.prediction_kind = "epsilon(G,N)";
      else if (prof.nilpotency_class == 3 && is_subgroup_subset(prof.center, cls.kernel))
        chk.prediction_kind = "epsilon(G',N)";
      else chk.prediction_kind = "epsilon(Z,N)";
    }
    idems[static_cast<std::size_t>(i)] = std::move(e);
    rep.checks[static_cast<std::size_t>(i)] = std::move(chk);
  });

  // pairwise products vanish
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < nclasses; ++i)
    for (int j = i + 1; j < nclasses; ++j) pairs.emplace_back(i, j);
  std::atomic<bool> ortho{true};
  parallel_for(static_cast<int>(pairs.size()), threads, [&](int idx) {
    auto [i, j] = pairs[static_cast<std::size_t>(idx)];
    if (!ortho.load()) return;
    AlgebraElement prod = idems[static_cast<std::size_t>(i)] * idems[static_cast<std::size_t>(j)];
    if (!prod.is_zero()) ortho.store(false);
  });
  rep.pairwise_orthogonal = ortho.load();

  AlgebraElement sum(g);
  for (const auto& e : idems) sum += e;
  rep.sums_to_one = (sum == AlgebraElement::one(g));

  rep.all_pass = rep.pairwise_orthogonal && rep.sums_to_one;
  for (const auto& chk : rep.checks) {
    bool ok = chk.idempotent && chk.central && chk.dimension == chk.expected_dimension &&
              (!chk.has_prediction || chk.prediction_matches);
    if (!ok) rep.all_pass = false;
  }
  return rep;
}

std::string idempotent_to_json(const AlgebraElement& e, int char_index) {
  nlohmann::json doc;
  doc["character"] = char_index;
  nlohmann::json coeffs = nlohmann::json::array();
  const auto& c = e.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    nlohmann::json jc;
    jc["g"] = i;
    jc["num"] = c[i].get_num().get_str();
    jc["den"] = c[i].get_den().get_str();
    coeffs.push_back(std::move(jc));
  }
  doc["coeffs"] = std::move(coeffs);
  return doc.dump();
}

} // namespace qga
