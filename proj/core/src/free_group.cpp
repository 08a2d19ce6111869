#include "bdl/free_group.hpp"

#include <cstdlib>
#include <unordered_map>

#include "bdl/errors.hpp"

namespace bdl {

namespace {

void append_reduced(std::vector<int>& out, int g) {
  if (!out.empty() && out.back() == -g)
    out.pop_back();
  else
    out.push_back(g);
}

void append_reduced(std::vector<int>& out, const std::vector<int>& word) {
  for (int g : word) append_reduced(out, g);
}

}  // namespace

// ------------------------------------------------------------------- FreeWord

FreeWord::FreeWord(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int g : letters) {
    if (g == 0) throw RangeError("free group letter 0 is not a generator");
    append_reduced(letters_, g);
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int& g : w.letters_) g = -g;
  return w;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord w = a;
  append_reduced(w.letters_, b.letters_);
  return w;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '*';
    out += 'x' + std::to_string(std::abs(letters_[i]));
    if (letters_[i] < 0) out += "^-1";
  }
  return out;
}

// ----------------------------------------------------------- GroupRingElement

GroupRingElement GroupRingElement::of(const GammaElement& g, const Integer& c) {
  GroupRingElement u;
  u.add_term(g, c);
  return u;
}

void GroupRingElement::add_term(const GammaElement& g, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer GroupRingElement::coefficient(const GammaElement& g) const {
  const auto it = terms_.find(g);
  return it == terms_.end() ? Integer(0) : it->second;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, coeff] : terms_) coeff *= c;
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [ga, ca] : a.terms_) {
    if (ga.z_exp != 0) throw DomainError("untwisted product of elements with a z component");
    for (const auto& [gb, cb] : b.terms_) {
      if (gb.z_exp != 0) throw DomainError("untwisted product of elements with a z component");
      out.add_term(GammaElement{0, ga.word * gb.word}, ca * cb);
    }
  }
  return out;
}

GroupRingElement GroupRingElement::with_z(std::int64_t z_exp) const {
  GroupRingElement out;
  for (const auto& [g, c] : terms_) out.add_term(GammaElement{z_exp, g.word}, c);
  return out;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    const Integer mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string body;
    if (g.z_exp != 0) body = "z^" + std::to_string(g.z_exp);
    if (!g.word.empty() || body.empty()) {
      const std::string w = g.word.to_string();
      body = body.empty() ? w : (w == "1" ? body : body + "*" + w);
    }
    if (mag != 1)
      out += mag.get_str() + (body == "1" ? "" : "*" + body);
    else
      out += body;
  }
  return out;
}

Integer norm(const GroupRingElement& u) {
  Integer s = 0;
  for (const auto& [g, c] : u.terms()) s += abs(c);
  return s;
}

LaurentPoly specialize(const GroupRingElement& u) {
  LaurentPoly p(1);
  for (const auto& [g, c] : u.terms()) {
    int degree = 0;
    for (int x : g.word.letters()) degree += x > 0 ? 1 : -1;
    p.add_term({degree}, c);
  }
  return p;
}

// ----------------------------------------------------------- FreeAutomorphism

FreeAutomorphism::FreeAutomorphism(std::vector<FreeWord> images) : images_(std::move(images)) {
  const int n = rank();
  for (const auto& w : images_)
    for (int g : w.letters())
      if (std::abs(g) > n) throw RangeError("automorphism image uses a generator beyond the rank");
}

FreeAutomorphism FreeAutomorphism::identity(int n) {
  std::vector<FreeWord> images;
  images.reserve(n);
  for (int i = 1; i <= n; ++i) images.push_back(FreeWord::generator(i));
  return FreeAutomorphism(std::move(images));
}

FreeWord FreeAutomorphism::apply(const FreeWord& w) const {
  std::vector<int> out;
  for (int g : w.letters()) {
    const int i = std::abs(g);
    if (i > rank()) throw RangeError("word uses a generator beyond the automorphism's rank");
    const auto& image = images_[i - 1].letters();
    if (g > 0)
      for (int x : image) append_reduced(out, x);
    else
      for (auto it = image.rbegin(); it != image.rend(); ++it) append_reduced(out, -*it);
  }
  return FreeWord(std::move(out));
}

GroupRingElement FreeAutomorphism::apply(const GroupRingElement& u) const {
  GroupRingElement out;
  for (const auto& [g, c] : u.terms()) out.add_term(GammaElement{g.z_exp, apply(g.word)}, c);
  return out;
}

FreeAutomorphism FreeAutomorphism::after(const FreeAutomorphism& inner) const {
  if (inner.rank() != rank()) throw DomainError("automorphism ranks differ");
  std::vector<FreeWord> images;
  images.reserve(images_.size());
  for (const auto& w : inner.images_) images.push_back(apply(w));
  return FreeAutomorphism(std::move(images));
}

namespace {

/// Image of x_j (1-based) under a single Artin letter.
FreeWord generator_image(int letter, int j) {
  const int i = std::abs(letter);
  if (letter > 0) {
    if (j == i) return FreeWord({i, i + 1, -i});
    if (j == i + 1) return FreeWord({i});
  } else {
    if (j == i) return FreeWord({i + 1});
    if (j == i + 1) return FreeWord({-(i + 1), i, i + 1});
  }
  return FreeWord({j});
}

}  // namespace

FreeAutomorphism artin_automorphism(const BraidWord& b) {
  const int n = b.strands();
  FreeAutomorphism current = FreeAutomorphism::identity(n);
  for (int letter : b.letters()) {
    std::vector<FreeWord> step;
    step.reserve(n);
    for (int j = 1; j <= n; ++j) step.push_back(generator_image(letter, j));
    current = current.after(FreeAutomorphism(std::move(step)));
  }
  return current;
}

std::vector<FreeWord> artin_image(const BraidWord& b) { return artin_automorphism(b).images(); }

GroupRingElement fox_derivative(const FreeWord& w, int i, int n) {
  if (i < 1 || i > n) throw RangeError("Fox derivative index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  // d(y_1...y_m)/dx_i = sum_p y_1..y_{p-1} d(y_p)/dx_i, with
  // dx_i/dx_i = 1 and d(x_i^{-1})/dx_i = -x_i^{-1}.
  GroupRingElement out;
  std::vector<int> prefix;
  for (int g : w.letters()) {
    if (g == i) {
      out.add_term(GammaElement{0, FreeWord(prefix)}, 1);
      prefix.push_back(g);
    } else if (g == -i) {
      prefix.push_back(g);
      out.add_term(GammaElement{0, FreeWord(prefix)}, -1);
    } else {
      prefix.push_back(g);
    }
  }
  return out;
}

// ------------------------------------------------------------ GroupRingMatrix

GroupRingMatrix::GroupRingMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols) {}

GroupRingMatrix GroupRingMatrix::identity(std::size_t d) {
  GroupRingMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = GroupRingElement::one();
  return m;
}

GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix dimensions do not match for multiplication");
  GroupRingMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

GroupRingMatrix GroupRingMatrix::apply(const FreeAutomorphism& f) const {
  GroupRingMatrix out(rows_, cols_);
  for (std::size_t c = 0; c < cells_.size(); ++c) out.cells_[c] = f.apply(cells_[c]);
  return out;
}

GroupRingElement GroupRingMatrix::trace() const {
  if (rows_ != cols_) throw DomainError("trace of a non-square matrix");
  GroupRingElement t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

LaurentMatrix GroupRingMatrix::specialize() const {
  LaurentMatrix out(rows_, cols_, 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = bdl::specialize((*this)(i, j));
  return out;
}

GroupRingMatrix fox_matrix(const BraidWord& b) {
  const int n = b.strands();
  const auto images = artin_image(b);
  GroupRingMatrix m(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m(i - 1, j - 1) = fox_derivative(images[j - 1], i, n);
  return m;
}

// --------------------------------------------------------------- MappingTorus

MappingTorus::MappingTorus(const BraidWord& b)
    : braid_(b), forward_(artin_automorphism(b)), backward_(artin_automorphism(bdl::inverse(b))) {}

FreeAutomorphism MappingTorus::power(std::int64_t k) const {
  FreeAutomorphism result = FreeAutomorphism::identity(braid_.strands());
  const FreeAutomorphism& step = k < 0 ? backward_ : forward_;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) result = step.after(result);
  return result;
}

GroupRingElement MappingTorus::multiply(const GroupRingElement& u, const GroupRingElement& v) const {
  GroupRingElement out;
  std::map<std::int64_t, FreeAutomorphism> powers;
  for (const auto& [gv, cv] : v.terms()) {
    auto it = powers.find(gv.z_exp);
    if (it == powers.end()) it = powers.emplace(gv.z_exp, power(gv.z_exp)).first;
    for (const auto& [gu, cu] : u.terms())
      out.add_term(GammaElement{gu.z_exp + gv.z_exp, it->second.apply(gu.word) * gv.word}, cu * cv);
  }
  return out;
}

// -------------------------------------------------------------- zeta1 traces

namespace {

/// Interns prefixes of words: equal words map to the same node id.
class PrefixTrie {
 public:
  static constexpr std::int64_t kRoot = 0;

  std::int64_t child(std::int64_t node, int letter) {
    const std::uint64_t key = (static_cast<std::uint64_t>(node) << 32) ^ static_cast<std::uint32_t>(letter);
    auto [it, inserted] = edges_.try_emplace(key, next_);
    if (inserted) ++next_;
    return it->second;
  }

 private:
  std::unordered_map<std::uint64_t, std::int64_t> edges_;
  std::int64_t next_ = 1;
};

Integer l1(const std::unordered_map<std::int64_t, std::int64_t>& coeffs) {
  Integer s = 0;
  for (const auto& [node, c] : coeffs) s += Integer(static_cast<long>(c < 0 ? -c : c));
  return s;
}

}  // namespace

std::vector<Zeta1Sample> zeta1_trace_data(const BraidWord& b, int kmax, std::size_t term_cap) {
  if (kmax < 1) throw RangeError("kmax must be at least 1");
  const int n = b.strands();
  const FreeAutomorphism f = artin_automorphism(b);
  std::vector<Zeta1Sample> out;
  std::vector<FreeWord> images = FreeAutomorphism::identity(n).images();
  for (int k = 1; k <= kmax; ++k) {
    // f^k(x_j) = f^{k-1}(x_j) with every letter substituted by its f-image.
    std::size_t letters = 0;
    for (auto& w : images) {
      w = f.apply(w);
      letters += w.length();
    }
    if (letters > term_cap)
      throw ResourceLimit("zeta1 words total " + std::to_string(letters) + " letters at k = " + std::to_string(k) +
                          ", cap is " + std::to_string(term_cap));
    std::size_t terms = 0;
    for (int i = 1; i <= n; ++i)
      for (int g : images[i - 1].letters()) terms += std::abs(g) == i;
    if (terms > term_cap)
      throw ResourceLimit("zeta1 trace has " + std::to_string(terms) + " terms at k = " + std::to_string(k) +
                          ", cap is " + std::to_string(term_cap));

    // The diagonal entry d f^k(x_i)/dx_i has +prefix before each x_i and
    // -prefix-through each x_i^{-1}; all carry z^k, which collection ignores.
    PrefixTrie trie;
    std::unordered_map<std::int64_t, std::int64_t> collected;
    Zeta1Sample sample{k, 0, 0};
    for (int i = 1; i <= n; ++i) {
      std::unordered_map<std::int64_t, std::int64_t> entry;
      std::int64_t node = PrefixTrie::kRoot;
      for (int g : images[i - 1].letters()) {
        if (g == i) {
          ++entry[node];
          node = trie.child(node, g);
        } else if (g == -i) {
          node = trie.child(node, g);
          --entry[node];
        } else {
          node = trie.child(node, g);
        }
      }
      for (const auto& [key, c] : entry) collected[key] += c;
      sample.trace_of_norms += l1(entry);
    }
    sample.norm_of_collected_trace = l1(collected);
    out.push_back(std::move(sample));
  }
  return out;
}

}  // namespace bdl
