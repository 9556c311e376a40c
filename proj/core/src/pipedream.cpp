#include "asmprism/pipedream.hpp"

#include "asmprism/error.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace asmprism {

// --- square word -------------------------------------------------------------------

SquareWord::SquareWord(int n) : n_(n) {
  if (n < 1) throw ValidationError("square word size must be positive");
  for (int i = 1; i <= n; ++i) {
    for (int j = n; j >= 1; --j) {
      order_.push_back({i, j});
      word_.letters.push_back(i + j - 1);
    }
  }
}

Word SquareWord::subword(const PlusDiagram& p) const {
  Word w;
  for (const auto& c : order_) {
    if (p.contains(c)) w.letters.push_back(letter_at(c));
  }
  return w;
}

const SquareWord& square_word(int n) {
  static const auto cache = [] {
    std::array<std::unique_ptr<SquareWord>, GridSet::max_size + 1> words;
    for (int k = 1; k <= GridSet::max_size; ++k) words[static_cast<std::size_t>(k)] = std::make_unique<SquareWord>(k);
    return words;
  }();
  if (n < 1 || n > GridSet::max_size) throw ValidationError("square word size outside 1..8");
  return *cache[static_cast<std::size_t>(n)];
}

Perm diagram_demazure(const PlusDiagram& p) {
  if (p.size() == 0) return Perm::identity(1);
  return demazure_product(square_word(p.size()).subword(p));
}

Perm diagram_product(const PlusDiagram& p) {
  if (p.size() == 0) return Perm::identity(1);
  return word_product(square_word(p.size()).subword(p));
}

bool diagram_is_reduced(const PlusDiagram& p) { return length(diagram_product(p)) == p.count(); }

Monomial diagram_weight(const PlusDiagram& p) {
  std::vector<unsigned> e;
  for (int c : p.row_counts()) e.push_back(static_cast<unsigned>(c));
  return Monomial(std::move(e));
}

// --- pipe dreams -------------------------------------------------------------------

namespace {

// Bottom pipe dream: row i holds c_i pluses flush left.
PlusDiagram bottom_pipe_dream(const Perm& w, int n) {
  PlusDiagram p(n);
  const auto code = w.code();
  for (int i = 1; i <= static_cast<int>(code.size()); ++i) {
    for (int j = 1; j <= code[static_cast<std::size_t>(i - 1)]; ++j) p.insert({i, j});
  }
  return p;
}

// All ladder moves out of p.
std::vector<PlusDiagram> ladder_moves(const PlusDiagram& p) {
  const int n = p.size();
  std::vector<PlusDiagram> out;
  for (const auto& c : p.cells()) {
    const int i = c.row;
    const int j = c.col;
    if (j + 1 > n || p.contains({i, j + 1})) continue;
    int m = 1;
    while (i - m >= 1 && p.contains({i - m, j}) && p.contains({i - m, j + 1})) ++m;
    if (i - m < 1 || p.contains({i - m, j}) || p.contains({i - m, j + 1})) continue;
    PlusDiagram q = p;
    q.erase(c);
    q.insert({i - m, j + 1});
    out.push_back(q);
  }
  return out;
}

}  // namespace

std::vector<PlusDiagram> pipe_dreams_of(const Perm& w, int n) {
  if (w.canonical().size() > n) {
    throw ValidationError("permutation " + w.to_string() + " does not fit in the " + std::to_string(n) + "x" +
                          std::to_string(n) + " grid");
  }
  const Perm v = w.embedded(n);
  std::set<PlusDiagram> seen;
  std::deque<PlusDiagram> queue;
  PlusDiagram start = bottom_pipe_dream(v, n);
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    PlusDiagram p = queue.front();
    queue.pop_front();
    for (auto& q : ladder_moves(p)) {
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  return {seen.begin(), seen.end()};
}

Polynomial schubert_polynomial(const Perm& w, int n) {
  Polynomial s;
  for (const auto& p : pipe_dreams_of(w, n)) s.add_term(diagram_weight(p), 1);
  return s;
}

Polynomial divided_difference(const Polynomial& f, int i) {
  if (i < 1) throw ValidationError("divided difference index must be positive");
  const auto ui = static_cast<std::size_t>(i);
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    const unsigned a = m.exponent(ui);
    const unsigned b = m.exponent(ui + 1);
    if (a == b) continue;
    std::vector<unsigned> rest(m.exponents().begin(), m.exponents().end());
    rest.resize(std::max<std::size_t>(rest.size(), ui + 1), 0);
    const unsigned lo = std::min(a, b);
    const unsigned gap = std::max(a, b) - lo;
    const Coefficient sign = a > b ? Coefficient(c) : Coefficient(-c);
    for (unsigned k = 0; k < gap; ++k) {
      rest[ui - 1] = lo + k;
      rest[ui] = lo + gap - 1 - k;
      out.add_term(Monomial(rest), sign);
    }
  }
  return out;
}

Polynomial schubert_oracle(const Perm& w) {
  const int m = std::max(w.canonical().size(), 1);
  Perm u = w.embedded(m);
  std::vector<int> steps;
  for (;;) {
    int asc = 0;
    for (int i = 1; i < m && asc == 0; ++i) {
      if (u(i) < u(i + 1)) asc = i;
    }
    if (asc == 0) break;
    steps.push_back(asc);
    u = u.times_simple(asc);
  }
  std::vector<unsigned> top;
  for (int i = 1; i < m; ++i) top.push_back(static_cast<unsigned>(m - i));
  Polynomial s(Monomial(std::move(top)));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) s = divided_difference(s, *it);
  return s;
}

// --- subword complex of an ASM -----------------------------------------------------

namespace {

std::vector<PlusDiagram> pipe_dream_union(const std::vector<Perm>& perms, int n) {
  std::vector<PlusDiagram> out;
  for (const auto& w : perms) {
    auto pd = pipe_dreams_of(w, n);
    out.insert(out.end(), pd.begin(), pd.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PlusDiagram> delta_facets(const Asm& a) { return pipe_dream_union(perm_set(a), a.size()); }

std::vector<PlusDiagram> delta_fmax(const Asm& a) { return pipe_dream_union(min_perm_set(a), a.size()); }

bool is_face(const PlusDiagram& p, const Asm& a) { return asm_leq(a, diagram_demazure(p).matrix()); }

PlusDiagram phi(const PrismTableau& t, int n) {
  PlusDiagram p(n);
  for (const auto& comp : t.components) {
    for (const auto& c : comp.cells()) {
      const int label = comp.at(c.row, c.col);
      const GridCell target{label, c.row + c.col - label};
      if (target.col < 1 || target.row > n || target.col > n) {
        throw ValidationError("tableau cell " + to_string(c) + " maps outside the " + std::to_string(n) + "x" +
                              std::to_string(n) + " grid");
      }
      p.insert(target);
    }
  }
  return p;
}

// --- bijection check ---------------------------------------------------------------

std::string BijectionReport::summary() const {
  std::ostringstream os;
  os << (passed ? "pass" : "FAIL") << ": n=" << ambient_size << " AllPrism=" << all_prism << " facets=" << facets
     << " facet-tableaux=" << facet_tableaux << " stable=" << stable_facet_tableaux << " F_max=" << fmax
     << " Prism=" << prism;
  if (!passed) os << " (" << failure << ")";
  return os.str();
}

BijectionReport verify_bijection(const PrismShapeSpec& spec, int n, TripleRule rule) {
  spec.validate();
  BijectionReport rep;
  rep.ambient_size = n == 0 ? spec.ambient_size() : n;
  const int N = rep.ambient_size;
  const Asm a = asm_of_spec(spec, N);

  auto fail = [&](std::string why, const PrismTableau* t) {
    if (!rep.passed) return;
    rep.passed = false;
    rep.failure = std::move(why);
    if (t != nullptr) rep.counterexample = *t;
  };

  const auto facets = delta_facets(a);
  const auto fmax = delta_fmax(a);
  rep.facets = facets.size();
  rep.fmax = fmax.size();
  const std::set<PlusDiagram> facet_set(facets.begin(), facets.end());
  const std::set<PlusDiagram> fmax_set(fmax.begin(), fmax.end());

  const auto all = enumerate_all_prism(spec);
  rep.all_prism = all.size();
  std::map<PlusDiagram, std::vector<std::size_t>> fibers;
  for (std::size_t k = 0; k < all.size(); ++k) {
    const PlusDiagram p = phi(all[k], N);
    if (diagram_weight(p) != prism_weight(all[k])) fail("Phi does not preserve weight", &all[k]);
    if (!is_face(p, a)) fail("Phi(T) is not a face of Delta_A", &all[k]);
    if (facet_set.count(p) != 0) fibers[p].push_back(k);
  }

  for (const auto& f : facets) {
    if (fibers.count(f) == 0) fail("facet not in the image of Phi:\n" + f.render(), nullptr);
  }

  std::set<PlusDiagram> stable_images;
  for (const auto& [p, members] : fibers) {
    rep.facet_tableaux += members.size();
    std::vector<std::size_t> stable;
    for (std::size_t k : members) {
      if (!has_unstable_triple(all[k], rule)) stable.push_back(k);
    }
    rep.stable_facet_tableaux += stable.size();
    if (stable.size() != 1) {
      fail("facet fiber has " + std::to_string(stable.size()) + " tableaux without unstable triples",
           stable.empty() ? &all[members.front()] : &all[stable[1]]);
      continue;
    }
    stable_images.insert(p);
    for (std::size_t k : members) {
      if (!all[k].entrywise_leq(all[stable.front()])) fail("stable tableau is not the fiber maximum", &all[stable.front()]);
    }
  }
  if (stable_images.size() != facets.size()) fail("stable facet tableaux do not cover the facets", nullptr);

  const auto prism = prism_set(spec, rule);
  rep.prism = prism.size();
  std::set<PlusDiagram> prism_images;
  for (const auto& t : prism) {
    const PlusDiagram p = phi(t, N);
    if (fmax_set.count(p) == 0) fail("Phi(T) for T in Prism is not in F_max", &t);
    if (!prism_images.insert(p).second) fail("Phi is not injective on Prism", &t);
  }
  if (prism_images.size() != fmax.size()) fail("Prism and F_max differ in size", nullptr);
  return rep;
}

}  // namespace asmprism
