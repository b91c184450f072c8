#include "prestab/relcore.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace prestab {

  namespace {
    constexpr std::size_t bits_per_word = kernels::word_bits;

    void require_same_size(Rel const& r, Rel const& s, char const* op) {
      if (r.size() != s.size()) {
        throw dimension_error(std::string(op) + ": relation sizes differ ("
                              + std::to_string(r.size()) + " vs "
                              + std::to_string(s.size()) + ")");
      }
    }

    // Clears the bits past `n` in the last word of a bitmask.
    word tail_mask(std::size_t n) {
      std::size_t const rem = n % bits_per_word;
      return rem == 0 ? ~word{0} : (word{1} << rem) - 1;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Carrier
  ////////////////////////////////////////////////////////////////////////

  Carrier::Carrier(std::size_t size, std::vector<std::string> labels)
      : _size(size) {
    if (labels.size() != size) {
      throw validation_error("carrier labels: expected "
                             + std::to_string(size) + " labels, got "
                             + std::to_string(labels.size()));
    }
    std::set<std::string> seen;
    for (auto const& l : labels) {
      if (!seen.insert(l).second) {
        throw validation_error("carrier labels: duplicate label \"" + l
                               + "\"");
      }
    }
    _labels = std::move(labels);
  }

  std::string Carrier::label(std::size_t i) const {
    return _labels ? (*_labels)[i] : std::to_string(i);
  }

  ////////////////////////////////////////////////////////////////////////
  // FinMap
  ////////////////////////////////////////////////////////////////////////

  FinMap::FinMap(std::size_t              dom_size,
                 std::size_t              cod_size,
                 std::vector<std::size_t> targets)
      : _cod_size(cod_size), _targets(std::move(targets)) {
    if (_targets.size() != dom_size) {
      throw dimension_error("map: expected " + std::to_string(dom_size)
                            + " targets, got "
                            + std::to_string(_targets.size()));
    }
    for (std::size_t i = 0; i < _targets.size(); ++i) {
      if (_targets[i] >= cod_size) {
        throw dimension_error("map: target " + std::to_string(_targets[i])
                              + " of element " + std::to_string(i)
                              + " is outside a codomain of size "
                              + std::to_string(cod_size));
      }
    }
  }

  FinMap FinMap::identity(std::size_t n) {
    std::vector<std::size_t> t(n);
    std::iota(t.begin(), t.end(), 0);
    return FinMap(unchecked_t{}, n, std::move(t));
  }

  FinMap FinMap::constant(std::size_t dom_size,
                          std::size_t cod_size,
                          std::size_t value) {
    return FinMap(dom_size,
                  cod_size,
                  std::vector<std::size_t>(dom_size, value));
  }

  FinMap compose(FinMap const& g, FinMap const& f) {
    if (f.cod_size() != g.dom_size()) {
      throw dimension_error("compose: codomain of size "
                            + std::to_string(f.cod_size())
                            + " does not match domain of size "
                            + std::to_string(g.dom_size()));
    }
    std::vector<std::size_t> t(f.dom_size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = g[f[i]];
    }
    return FinMap(FinMap::unchecked_t{}, g.cod_size(), std::move(t));
  }

  bool is_injective(FinMap const& f) {
    std::vector<bool> hit(f.cod_size(), false);
    for (auto t : f.targets()) {
      if (hit[t]) {
        return false;
      }
      hit[t] = true;
    }
    return true;
  }

  bool is_surjective(FinMap const& f) {
    std::vector<bool> hit(f.cod_size(), false);
    for (auto t : f.targets()) {
      hit[t] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  ////////////////////////////////////////////////////////////////////////
  // Subset
  ////////////////////////////////////////////////////////////////////////

  Subset Subset::full(std::size_t n) {
    Subset s(n);
    std::fill(s._words.begin(), s._words.end(), ~word{0});
    if (!s._words.empty()) {
      s._words.back() &= tail_mask(n);
    }
    return s;
  }

  Subset Subset::of(std::size_t n, std::span<std::size_t const> members) {
    Subset s(n);
    for (auto m : members) {
      if (m >= n) {
        throw dimension_error("subset: member " + std::to_string(m)
                              + " outside a carrier of size "
                              + std::to_string(n));
      }
      s.insert(m);
    }
    return s;
  }

  Subset Subset::of(std::size_t n, std::initializer_list<std::size_t> members) {
    return of(n, std::span<std::size_t const>(members.begin(), members.size()));
  }

  Subset Subset::from_mask(std::size_t n, std::uint64_t mask) {
    if (n > bits_per_word) {
      throw dimension_error("subset: from_mask needs a carrier of at most 64");
    }
    Subset s(n);
    if (n > 0) {
      s._words[0] = mask & tail_mask(n);
    }
    return s;
  }

  std::size_t Subset::count() const noexcept {
    std::size_t c = 0;
    for (auto w : _words) {
      c += std::popcount(w);
    }
    return c;
  }

  bool Subset::empty() const noexcept {
    return std::all_of(
        _words.begin(), _words.end(), [](word w) { return w == 0; });
  }

  bool Subset::is_full() const noexcept {
    return *this == full(_size);
  }

  std::vector<std::size_t> Subset::members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t w = 0; w < _words.size(); ++w) {
      word bits = _words[w];
      while (bits != 0) {
        out.push_back(w * bits_per_word + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  Subset Subset::complement() const {
    Subset c(_size);
    for (std::size_t w = 0; w < _words.size(); ++w) {
      c._words[w] = ~_words[w];
    }
    if (!c._words.empty()) {
      c._words.back() &= tail_mask(_size);
    }
    return c;
  }

  void Subset::require_same_size(Subset const& that) const {
    if (_size != that._size) {
      throw dimension_error("subset: carrier sizes differ ("
                            + std::to_string(_size) + " vs "
                            + std::to_string(that._size) + ")");
    }
  }

  bool Subset::is_subset_of(Subset const& that) const {
    require_same_size(that);
    return kernels::active().is_subset(
        _words.data(), that._words.data(), _words.size());
  }

  bool Subset::intersects(Subset const& that) const {
    require_same_size(that);
    return kernels::active().intersects(
        _words.data(), that._words.data(), _words.size());
  }

  Subset& Subset::operator|=(Subset const& that) {
    require_same_size(that);
    kernels::active().or_into(_words.data(), that._words.data(), _words.size());
    return *this;
  }

  Subset& Subset::operator&=(Subset const& that) {
    require_same_size(that);
    kernels::active().and_into(
        _words.data(), that._words.data(), _words.size());
    return *this;
  }

  Subset& Subset::operator-=(Subset const& that) {
    require_same_size(that);
    kernels::active().andnot_into(
        _words.data(), that._words.data(), _words.size());
    return *this;
  }

  Subset operator|(Subset a, Subset const& b) {
    return a |= b;
  }

  Subset operator&(Subset a, Subset const& b) {
    return a &= b;
  }

  Subset operator-(Subset a, Subset const& b) {
    return a -= b;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rel
  ////////////////////////////////////////////////////////////////////////

  Rel Rel::from_pairs(std::size_t                                          n,
                      std::span<std::pair<std::size_t, std::size_t> const> pairs) {
    Rel r(n);
    for (auto [i, j] : pairs) {
      if (i >= n || j >= n) {
        throw dimension_error("relation: pair (" + std::to_string(i) + ","
                              + std::to_string(j)
                              + ") outside a carrier of size "
                              + std::to_string(n));
      }
      r.set(i, j);
    }
    return r;
  }

  Rel Rel::from_pairs(
      std::size_t                                                n,
      std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
    return from_pairs(n,
                      std::span<std::pair<std::size_t, std::size_t> const>(
                          pairs.begin(), pairs.size()));
  }

  std::size_t Rel::count() const noexcept {
    std::size_t c = 0;
    for (auto w : _bits) {
      c += std::popcount(w);
    }
    return c;
  }

  std::vector<std::pair<std::size_t, std::size_t>> Rel::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < _size; ++i) {
      for (std::size_t j = 0; j < _size; ++j) {
        if (test(i, j)) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  std::size_t hash_value(Rel const& r) noexcept {
    std::size_t h = std::hash<std::size_t>{}(r.size());
    for (auto w : r.words()) {
      h ^= std::hash<word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  Rel delta(std::size_t n) {
    Rel r(n);
    for (std::size_t i = 0; i < n; ++i) {
      r.set(i, i);
    }
    return r;
  }

  Rel full_rel(std::size_t n) {
    Rel  r(n);
    auto row_bits = Subset::full(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::copy(
          row_bits.words().begin(), row_bits.words().end(), r.row(i).begin());
    }
    return r;
  }

  Rel rel_union(Rel const& r, Rel const& s) {
    require_same_size(r, s, "union");
    Rel out = r;
    kernels::active().or_into(
        out.words().data(), s.words().data(), out.words().size());
    return out;
  }

  Rel rel_intersection(Rel const& r, Rel const& s) {
    require_same_size(r, s, "intersection");
    Rel out = r;
    kernels::active().and_into(
        out.words().data(), s.words().data(), out.words().size());
    return out;
  }

  Rel rel_difference(Rel const& r, Rel const& s) {
    require_same_size(r, s, "difference");
    Rel out = r;
    kernels::active().andnot_into(
        out.words().data(), s.words().data(), out.words().size());
    return out;
  }

  Rel opposite(Rel const& r) {
    Rel out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      auto row = r.row(i);
      for (std::size_t w = 0; w < row.size(); ++w) {
        word bits = row[w];
        while (bits != 0) {
          out.set(w * bits_per_word + std::countr_zero(bits), i);
          bits &= bits - 1;
        }
      }
    }
    return out;
  }

  bool rel_subset(Rel const& r, Rel const& s) {
    require_same_size(r, s, "subset");
    return kernels::active().is_subset(
        r.words().data(), s.words().data(), r.words().size());
  }

  Rel compose_rel(Rel const& r, Rel const& s) {
    require_same_size(r, s, "compose");
    Rel         out(r.size());
    auto const& k = kernels::active();
    for (std::size_t a = 0; a < r.size(); ++a) {
      for (std::size_t b = 0; b < r.size(); ++b) {
        if (r.test(a, b)) {
          k.or_into(out.row(a).data(), s.row(b).data(), out.stride());
        }
      }
    }
    return out;
  }

  Rel transitive_closure(Rel const& r) {
    Rel out = r;
    kernels::active().warshall(out.words().data(), out.size(), out.stride());
    return out;
  }

  Rel reflexive_closure(Rel const& r) {
    return rel_union(r, delta(r.size()));
  }

  Rel equivalence_closure(Rel const& r) {
    return transitive_closure(
        rel_union(rel_union(r, opposite(r)), delta(r.size())));
  }

  Rel image_rel(FinMap const& f, Rel const& r) {
    if (r.size() != f.dom_size()) {
      throw dimension_error("image: relation of size "
                            + std::to_string(r.size())
                            + " does not match a map domain of size "
                            + std::to_string(f.dom_size()));
    }
    Rel out(f.cod_size());
    for (std::size_t a = 0; a < r.size(); ++a) {
      for (std::size_t b = 0; b < r.size(); ++b) {
        if (r.test(a, b)) {
          out.set(f[a], f[b]);
        }
      }
    }
    return out;
  }

  Rel pullback_rel(FinMap const& f, Rel const& s) {
    if (s.size() != f.cod_size()) {
      throw dimension_error("pullback: relation of size "
                            + std::to_string(s.size())
                            + " does not match a map codomain of size "
                            + std::to_string(f.cod_size()));
    }
    Rel out(f.dom_size());
    for (std::size_t a = 0; a < f.dom_size(); ++a) {
      for (std::size_t b = 0; b < f.dom_size(); ++b) {
        if (s.test(f[a], f[b])) {
          out.set(a, b);
        }
      }
    }
    return out;
  }

  Rel kernel_pair(FinMap const& f) {
    Rel out(f.dom_size());
    for (std::size_t a = 0; a < f.dom_size(); ++a) {
      for (std::size_t b = 0; b < f.dom_size(); ++b) {
        if (f[a] == f[b]) {
          out.set(a, b);
        }
      }
    }
    return out;
  }

  Rel restrict_rel(Rel const& r, Subset const& b) {
    if (b.size() != r.size()) {
      throw dimension_error("restrict: subset of a carrier of size "
                            + std::to_string(b.size())
                            + " applied to a relation of size "
                            + std::to_string(r.size()));
    }
    auto const members = b.members();
    Rel        out(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (r.test(members[i], members[j])) {
          out.set(i, j);
        }
      }
    }
    return out;
  }

  bool is_reflexive(Rel const& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!r.test(i, i)) {
        return false;
      }
    }
    return true;
  }

  bool is_transitive(Rel const& r) {
    // (i, k) in r requires row k to be contained in row i.
    auto const& k = kernels::active();
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (r.test(i, j)
            && !k.is_subset(r.row(j).data(), r.row(i).data(), r.stride())) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_symmetric(Rel const& r) {
    return r == opposite(r);
  }

  bool is_equivalence(Rel const& r) {
    return is_reflexive(r) && is_symmetric(r) && is_transitive(r);
  }

  bool is_antisymmetric(Rel const& r) {
    return rel_subset(rel_intersection(r, opposite(r)), delta(r.size()));
  }

  FinMap quotient_map(Rel const& e) {
    if (!is_equivalence(e)) {
      throw validation_error(
          "quotient: relation is not an equivalence relation");
    }
    std::size_t constexpr unassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> cls(e.size(), unassigned);
    std::size_t              next = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (cls[i] != unassigned) {
        continue;
      }
      for (std::size_t j = i; j < e.size(); ++j) {
        if (e.test(i, j)) {
          cls[j] = next;
        }
      }
      ++next;
    }
    return FinMap(e.size(), next, std::move(cls));
  }

  Subset preimage(FinMap const& f, Subset const& b) {
    if (b.size() != f.cod_size()) {
      throw dimension_error("preimage: subset size does not match codomain");
    }
    Subset out(f.dom_size());
    for (std::size_t a = 0; a < f.dom_size(); ++a) {
      if (b.contains(f[a])) {
        out.insert(a);
      }
    }
    return out;
  }

  Subset image(FinMap const& f, Subset const& b) {
    if (b.size() != f.dom_size()) {
      throw dimension_error("image: subset size does not match domain");
    }
    Subset out(f.cod_size());
    for (auto a : b.members()) {
      out.insert(f[a]);
    }
    return out;
  }

  FinMap restrict_map(FinMap const& f, Subset const& b) {
    if (b.size() != f.dom_size()) {
      throw dimension_error("restrict: subset size does not match domain");
    }
    std::vector<std::size_t> t;
    t.reserve(b.count());
    for (auto a : b.members()) {
      t.push_back(f[a]);
    }
    auto const k = t.size();
    return FinMap(k, f.cod_size(), std::move(t));
  }

  FinMap inclusion_map(Subset const& b) {
    auto       m = b.members();
    auto const k = m.size();
    return FinMap(k, b.size(), std::move(m));
  }

}  // namespace prestab
