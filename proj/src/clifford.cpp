#include "gk/clifford.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gk {

namespace {

int lower_count(Mask m, std::size_t i) { return grade_of(m & ((Mask{1} << i) - 1)); }

TermList to_terms(const CliffordElement& e) {
  TermList t;
  t.reserve(e.size());
  for (const auto& [m, c] : e.terms()) t.emplace_back(m, c);
  return t;
}

std::uint64_t key_of(std::uint64_t a, std::uint64_t b) { return (a << 32) | b; }

}  // namespace

const TermList* ProductTable::find(std::uint64_t key) const {
  std::shared_lock lock(mu_);
  auto it = map_.find(key);
  return it == map_.end() ? nullptr : &it->second;
}

const TermList& ProductTable::insert(std::uint64_t key, TermList value) {
  std::unique_lock lock(mu_);
  // Entries are deterministic, so an existing entry is equal to the new one.
  auto [it, fresh] = map_.emplace(key, std::move(value));
  (void)fresh;
  return it->second;
}

std::size_t ProductTable::size() const {
  std::shared_lock lock(mu_);
  return map_.size();
}

std::vector<std::pair<std::uint64_t, TermList>> ProductTable::entries() const {
  std::shared_lock lock(mu_);
  std::vector<std::pair<std::uint64_t, TermList>> out(map_.begin(), map_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Clifford::Clifford(std::shared_ptr<const LieAlgebra> g)
    : g_(std::move(g)),
      n_(g_->dim()),
      table_(std::make_shared<ProductTable>()),
      left_table_(std::make_shared<ProductTable>()),
      quant_table_(std::make_shared<ProductTable>()) {
  if (n_ > 16) throw DimensionError("Clifford algebra too large");
  dual_ = dual_of_standard(*g_);
  // Theta = (1/6) sum Lambda_ijk e^i e^j e^k over ordered triples.
  std::vector<CliffordElement> duals;
  for (const auto& v : dual_) duals.push_back(vec(v));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < n_; ++k) {
        if (k == i || k == j) continue;
        const Scalar lam = g_->cartan_three_form(i, j, k);
        if (lam.is_zero()) continue;
        theta_.add_scaled(mul(duals[i], duals[j], duals[k]), lam * Scalar::rational(1, 6));
      }
    }
  }
}

CliffordElement Clifford::vec(const Vec& v) const {
  if (v.size() != n_) throw DimensionError("Clifford: vector of wrong length");
  CliffordElement e;
  for (std::size_t i = 0; i < n_; ++i) e.add(Mask{1} << i, v[i]);
  return e;
}

const TermList& Clifford::left_gen(std::size_t i, Mask b) const {
  const std::uint64_t key = key_of(i, b);
  if (const TermList* hit = left_table_->find(key)) return *hit;
  const Mask bit = Mask{1} << i;
  CliffordElement out;
  if (b == 0) {
    out.add(bit, 1);
  } else {
    const auto b1 = static_cast<std::size_t>(__builtin_ctz(b));
    const Mask b1bit = Mask{1} << b1;
    if (i < b1) {
      out.add(b | bit, 1);
    } else if (i == b1) {
      out.add(b ^ bit, g_->kappa_gram().at(i, i));
    } else {
      // x_i x_b1 x_B' = -x_b1 (x_i x_B') + 2 kappa(i, b1) x_B'
      const Mask rest = b ^ b1bit;
      for (const auto& [m, c] : left_gen(i, rest)) out.add(m | b1bit, -c);
      out.add(rest, Scalar(2) * g_->kappa_gram().at(i, b1));
    }
  }
  return left_table_->insert(key, to_terms(out));
}

const TermList& Clifford::monomial_product(Mask a, Mask b) const {
  const std::uint64_t key = key_of(a, b);
  if (const TermList* hit = table_->find(key)) return *hit;
  CliffordElement out;
  if (a == 0) {
    out.add(b, 1);
  } else {
    const auto a1 = static_cast<std::size_t>(__builtin_ctz(a));
    const TermList& inner = monomial_product(a ^ (Mask{1} << a1), b);
    for (const auto& [m, c] : inner) {
      for (const auto& [m2, c2] : left_gen(a1, m)) out.add(m2, c * c2);
    }
  }
  return table_->insert(key, to_terms(out));
}

CliffordElement Clifford::mul(const CliffordElement& a, const CliffordElement& b) const {
  CliffordElement out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const Scalar cab = ca * cb;
      for (const auto& [m, c] : monomial_product(ma, mb)) out.add(m, cab * c);
    }
  }
  return out;
}

Multivector Clifford::wedge(const Vec& a, const Multivector& v) const {
  Multivector out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    const Mask bit = Mask{1} << i;
    for (const auto& [m, c] : v.terms()) {
      if (m & bit) continue;
      const Scalar s = lower_count(m, i) % 2 ? -(a[i] * c) : a[i] * c;
      out.add(m | bit, s);
    }
  }
  return out;
}

Multivector Clifford::contract(const Vec& xi, const Multivector& v) const {
  Multivector out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (xi[i].is_zero()) continue;
    const Mask bit = Mask{1} << i;
    for (const auto& [m, c] : v.terms()) {
      if (!(m & bit)) continue;
      const Scalar s = lower_count(m, i) % 2 ? -(xi[i] * c) : xi[i] * c;
      out.add(m ^ bit, s);
    }
  }
  return out;
}

Multivector Clifford::contract_kappa(const Vec& x, const Multivector& v) const {
  Vec xi(n_);
  for (std::size_t j = 0; j < n_; ++j) xi[j] = g_->kappa(x, g_->basis(j));
  return contract(xi, v);
}

Form Clifford::wedge_form(const Vec& xi, const Form& f) const {
  Form out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (xi[i].is_zero()) continue;
    const Mask bit = Mask{1} << i;
    for (const auto& [m, c] : f.terms()) {
      if (m & bit) continue;
      const Scalar s = lower_count(m, i) % 2 ? -(xi[i] * c) : xi[i] * c;
      out.add(m | bit, s);
    }
  }
  return out;
}

Form Clifford::contract_form(const Vec& a, const Form& f) const {
  Form out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    const Mask bit = Mask{1} << i;
    for (const auto& [m, c] : f.terms()) {
      if (!(m & bit)) continue;
      const Scalar s = lower_count(m, i) % 2 ? -(a[i] * c) : a[i] * c;
      out.add(m ^ bit, s);
    }
  }
  return out;
}

Form Clifford::wedge_forms(const Form& a, const Form& b) const {
  Form out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      // sign of sorting the concatenation A B
      int swaps = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (ma & (Mask{1} << i)) swaps += lower_count(mb, i);
      }
      const Scalar c = ca * cb;
      out.add(ma | mb, swaps % 2 ? -c : c);
    }
  }
  return out;
}

CliffordElement Clifford::quantize(const Multivector& v) const {
  // q(x_A) = (1/k) sum_j (-1)^{j-1} a_j q(x_{A \ a_j}), memoized per blade.
  std::function<const TermList&(Mask)> q = [&](Mask a) -> const TermList& {
    if (const TermList* hit = quant_table_->find(a)) return *hit;
    CliffordElement out;
    if (a == 0) {
      out.add(0, 1);
    } else {
      const int k = grade_of(a);
      int j = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        const Mask bit = Mask{1} << i;
        if (!(a & bit)) continue;
        const Scalar sign = Scalar::rational(j % 2 ? -1 : 1, k);
        for (const auto& [m, c] : q(a ^ bit)) {
          for (const auto& [m2, c2] : left_gen(i, m)) out.add(m2, sign * c * c2);
        }
        ++j;
      }
    }
    return quant_table_->insert(a, to_terms(out));
  };
  CliffordElement out;
  for (const auto& [m, c] : v.terms()) {
    for (const auto& [m2, c2] : q(m)) out.add(m2, c * c2);
  }
  return out;
}

Multivector Clifford::dequantize(const CliffordElement& u) const {
  // q(x_A) = x_A + lower grades, so peel off the top grade repeatedly.
  Multivector out;
  CliffordElement rest = u;
  while (!rest.is_zero()) {
    const int top = rest.max_grade();
    Multivector layer;
    for (const auto& [m, c] : rest.terms()) {
      if (grade_of(m) == top) layer.add(m, c);
    }
    rest -= quantize(layer);
    out += layer;
  }
  return out;
}

Multivector Clifford::mu() const {
  return Multivector::blade(static_cast<Mask>((std::size_t{1} << n_) - 1), mu_scale_);
}

Multivector Clifford::star(const Form& f) const {
  Multivector out;
  const Multivector m = mu();
  for (const auto& [a, c] : f.terms()) {
    Multivector v = m;
    for (std::size_t k = n_; k-- > 0;) {
      if (a & (Mask{1} << k)) v = contract(unit_vec(n_, k), v);
    }
    out.add_scaled(v, c);
  }
  return out;
}

Form Clifford::star_inv(const Multivector& v) const {
  const Mask full = static_cast<Mask>((std::size_t{1} << n_) - 1);
  Form out;
  for (const auto& [m, c] : v.terms()) {
    const Mask a = full ^ m;
    const Scalar s = star(Form::blade(a)).coeff(m);
    out.add(a, c / s);
  }
  return out;
}

CliffordElement Clifford::tau_prime(const Vec& a) const {
  CliffordElement out;
  for (std::size_t i = 0; i < n_; ++i) {
    const Vec br = g_->bracket(a, g_->basis(i));
    if (is_zero(br)) continue;
    out += mul(vec(br), vec(dual_[i]));
  }
  return Scalar::rational(1, 4) * out;
}

CliffordElement Clifford::graded_commutator(const CliffordElement& x, const CliffordElement& u) const {
  CliffordElement out;
  for (int px = 0; px < 2; ++px) {
    const CliffordElement xp = x.parity_part(px);
    if (xp.is_zero()) continue;
    for (int pu = 0; pu < 2; ++pu) {
      const CliffordElement up = u.parity_part(pu);
      if (up.is_zero()) continue;
      out += mul(xp, up);
      if (px * pu % 2) {
        out += mul(up, xp);
      } else {
        out -= mul(up, xp);
      }
    }
  }
  return out;
}

CliffordElement Clifford::dcl(const CliffordElement& u) const {
  if (theta_.is_zero()) return {};
  return Scalar::rational(1, 4) * graded_commutator(theta_, u);
}

CliffordElement Clifford::spinor_action(const Vec& a, const Vec& a2, const CliffordElement& u) const {
  const CliffordElement va = vec(a);
  const CliffordElement va2 = vec(a2);
  CliffordElement out = mul(va2, u);
  const CliffordElement even = u.parity_part(0);
  const CliffordElement odd = u.parity_part(1);
  out -= mul(even, va);
  out += mul(odd, va);
  return out;
}

Multivector Clifford::vec_covec_action(const Vec& x, const Vec& y_dual, const Multivector& v) const {
  return wedge(x, v) + contract_kappa(y_dual, v);
}

CliffordElement Clifford::Operator::apply(const CliffordElement& u) const {
  CliffordElement out;
  for (const auto& [m, c] : u.terms()) out.add_scaled(columns.at(m), c);
  return out;
}

Matrix Clifford::Operator::to_matrix(std::size_t dim) const {
  Matrix m(dim, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, x] : columns[c].terms()) m.at(r, c) = x;
  }
  return m;
}

Clifford::Operator Clifford::operator_of(const std::function<CliffordElement(const CliffordElement&)>& f) const {
  Operator op;
  op.columns.reserve(dim());
  for (std::size_t m = 0; m < dim(); ++m) op.columns.push_back(f(CliffordElement::blade(static_cast<Mask>(m))));
  return op;
}

const Clifford::Operator& Clifford::dcl_operator() const {
  std::lock_guard lock(dcl_mu_);
  if (!dcl_op_) {
    dcl_op_ = std::make_shared<Operator>(operator_of([this](const CliffordElement& u) { return dcl(u); }));
  }
  return *dcl_op_;
}

std::string Clifford::digest() const {
  std::ostringstream text;
  text << "gkcl1;n=" << n_ << ";d=" << g_->field_d() << ";";
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      text << g_->kappa_gram().at(i, j).str() << ",";
      for (const auto& c : g_->basis_bracket(i, j)) text << c.str() << " ";
      text << ";";
    }
  }
  const std::string s = text.str();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(s.data(), s.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 15];
  }
  return out;
}

namespace {

void put_u32(std::string& buf, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) buf += static_cast<char>((v >> (8 * k)) & 0xff);
}
void put_u64(std::string& buf, std::uint64_t v) {
  for (int k = 0; k < 8; ++k) buf += static_cast<char>((v >> (8 * k)) & 0xff);
}

struct Reader {
  const std::string& s;
  std::size_t pos = 0;
  bool ok = true;
  std::uint64_t get(int bytes) {
    if (pos + static_cast<std::size_t>(bytes) > s.size()) {
      ok = false;
      return 0;
    }
    std::uint64_t v = 0;
    for (int k = 0; k < bytes; ++k) v |= std::uint64_t(static_cast<unsigned char>(s[pos++])) << (8 * k);
    return v;
  }
  std::string bytes(std::size_t n) {
    if (pos + n > s.size()) {
      ok = false;
      return {};
    }
    std::string out = s.substr(pos, n);
    pos += n;
    return out;
  }
};

const char kMagic[] = "GKCL1";

}  // namespace

std::size_t Clifford::save_cache(const std::string& dir) const {
  std::filesystem::create_directories(dir);
  std::string buf(kMagic, sizeof(kMagic));
  const auto entries = table_->entries();
  for (const auto& [key, terms] : entries) {
    std::string rec;
    put_u64(rec, key);
    put_u32(rec, static_cast<std::uint32_t>(terms.size()));
    for (const auto& [m, c] : terms) {
      const std::string cs = c.str();
      put_u32(rec, m);
      put_u32(rec, static_cast<std::uint32_t>(cs.size()));
      rec += cs;
    }
    put_u32(buf, static_cast<std::uint32_t>(rec.size()));
    buf += rec;
  }
  const std::filesystem::path path = std::filesystem::path(dir) / (digest() + ".bin");
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
  std::filesystem::rename(tmp, path);
  return entries.size();
}

std::size_t Clifford::load_cache(const std::string& dir) const {
  const std::filesystem::path path = std::filesystem::path(dir) / (digest() + ".bin");
  std::ifstream in(path, std::ios::binary);
  if (!in) return 0;
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string data = ss.str();
  if (data.size() < sizeof(kMagic) || std::memcmp(data.data(), kMagic, sizeof(kMagic)) != 0) return 0;
  Reader r{data, sizeof(kMagic)};
  // Parse fully before inserting so that a truncated file changes nothing.
  std::vector<std::pair<std::uint64_t, TermList>> parsed;
  while (r.ok && r.pos < data.size()) {
    const auto len = static_cast<std::size_t>(r.get(4));
    const std::string rec = r.bytes(len);
    if (!r.ok) break;
    Reader rr{rec};
    const std::uint64_t key = rr.get(8);
    const auto count = static_cast<std::size_t>(rr.get(4));
    TermList terms;
    for (std::size_t k = 0; k < count && rr.ok; ++k) {
      const auto m = static_cast<Mask>(rr.get(4));
      const auto cl = static_cast<std::size_t>(rr.get(4));
      const std::string cs = rr.bytes(cl);
      if (!rr.ok) break;
      terms.emplace_back(m, Scalar::parse(cs, g_->field_d()));
    }
    if (!rr.ok || rr.pos != rec.size()) return 0;
    parsed.emplace_back(key, std::move(terms));
  }
  if (!r.ok) return 0;
  for (auto& [key, terms] : parsed) table_->insert(key, std::move(terms));
  return parsed.size();
}

DclCohomology dcl_cohomology(const Clifford& cl) {
  if (cl.dim() > 256) throw DimensionError("d^Cl cohomology is bounded at Cl dimension 256");
  const auto& op = cl.dcl_operator();
  std::vector<Vec> even_cols, odd_cols;
  std::size_t n_even = 0, n_odd = 0;
  for (std::size_t m = 0; m < cl.dim(); ++m) {
    const Vec col = op.columns[m].to_dense(cl.n());
    if (grade_of(static_cast<Mask>(m)) % 2 == 0) {
      ++n_even;
      even_cols.push_back(col);
    } else {
      ++n_odd;
      odd_cols.push_back(col);
    }
  }
  // Rank of the columns equals rank of the matrix with those columns.
  const std::size_t re = even_cols.empty() ? 0 : rank(Matrix::from_rows(even_cols, cl.dim()));
  const std::size_t ro = odd_cols.empty() ? 0 : rank(Matrix::from_rows(odd_cols, cl.dim()));
  DclCohomology h;
  h.even = n_even - re - ro;
  h.odd = n_odd - ro - re;
  h.total = h.even + h.odd;
  return h;
}

}  // namespace gk
