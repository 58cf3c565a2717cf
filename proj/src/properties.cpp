#include "rellaws/properties.hpp"

#include <bit>

namespace rellaws {

namespace {

constexpr std::array<std::string_view, kPropertyCount> kNames = {
    "Empty",      "Univ",     "CoRefl",    "LfEucl",     "RgEucl",
    "LfUnique",   "RgUnique", "Sym",       "AntiTrans",  "ASym",
    "Connex",     "Trans",    "SemiOrd1",  "Irrefl",     "Refl",
    "QuasiRefl",  "AntiSym",  "SemiConnex", "IncTrans",  "SemiOrd2",
    "QuasiTrans", "Dense",    "LfSerial",  "RgSerial",   "LfQuasiRefl",
    "RgQuasiRefl",
};

constexpr std::array<std::string_view, kRelationKindCount> kKindNames = {
    "Equivalence",        "PartialEquivalence",    "Tolerance",
    "Idempotent",         "Trichotomous",          "NonStrictPartialOrder",
    "StrictPartialOrder", "SemiOrder",             "Preorder",
    "WeakOrdering",       "PartialFunction",       "TotalFunction",
    "InjectiveFunction",  "SurjectiveFunction",    "BijectiveFunction",
};

// Row and column bitmasks of a relation; every predicate below works on these.
struct Masks {
  int n;
  std::uint8_t full;
  std::uint8_t row[kMaxCard];
  std::uint8_t col[kMaxCard];

  explicit Masks(const Relation& r) : n(r.size()), full(r.full_mask()) {
    for (int i = 0; i < n; ++i) {
      row[i] = r.row(i);
      col[i] = r.column(i);
    }
  }
  bool diag(int i) const { return (row[i] >> i) & 1u; }
  std::uint8_t incomparable(int i) const {
    return static_cast<std::uint8_t>(~(row[i] | col[i]) & full);
  }
};

// Calls f(i) for every set bit i of m; stops and returns false when f does.
template <typename F>
bool all_bits(unsigned m, F&& f) {
  while (m) {
    const int i = std::countr_zero(m);
    if (!f(i)) return false;
    m &= m - 1;
  }
  return true;
}

bool is_empty(const Masks& m) {
  for (int x = 0; x < m.n; ++x)
    if (m.row[x]) return false;
  return true;
}

bool is_univ(const Masks& m) {
  for (int x = 0; x < m.n; ++x)
    if (m.row[x] != m.full) return false;
  return true;
}

bool is_corefl(const Masks& m) {
  for (int x = 0; x < m.n; ++x)
    if (m.row[x] & ~(1u << x)) return false;
  return true;
}

bool is_lf_quasi_refl(const Masks& m) {
  for (int x = 0; x < m.n; ++x)
    if (m.row[x] && !m.diag(x)) return false;
  return true;
}

bool is_rg_quasi_refl(const Masks& m) {
  for (int y = 0; y < m.n; ++y)
    if (m.col[y] && !m.diag(y)) return false;
  return true;
}

bool is_refl(const Masks& m) {
  for (int x = 0; x < m.n; ++x)
    if (!m.diag(x)) return false;
  return true;
}

bool is_irrefl(const Masks& m) {
  for (int x = 0; x < m.n; ++x)
    if (m.diag(x)) return false;
  return true;
}

bool is_sym(const Masks& m) {
  for (int x = 0; x < m.n; ++x)
    if (m.row[x] != m.col[x]) return false;
  return true;
}

bool is_asym(const Masks& m) {
  for (int x = 0; x < m.n; ++x)
    if (m.row[x] & m.col[x]) return false;
  return true;
}

bool is_antisym(const Masks& m) {
  for (int x = 0; x < m.n; ++x)
    if (m.row[x] & m.col[x] & ~(1u << x)) return false;
  return true;
}

bool is_connex(const Masks& m) {
  for (int x = 0; x < m.n; ++x)
    if ((m.row[x] | m.col[x]) != m.full) return false;
  return true;
}

bool is_semiconnex(const Masks& m) {
  for (int x = 0; x < m.n; ++x)
    if ((m.row[x] | m.col[x] | (1u << x)) != m.full) return false;
  return true;
}

// Transitivity of the relation given by `rows`.
bool transitive_rows(const std::uint8_t* rows, int n) {
  for (int x = 0; x < n; ++x) {
    const unsigned rx = rows[x];
    if (!all_bits(rx, [&](int y) { return (rows[y] & ~rx) == 0; })) return false;
  }
  return true;
}

bool is_trans(const Masks& m) { return transitive_rows(m.row, m.n); }

bool is_antitrans(const Masks& m) {
  for (int x = 0; x < m.n; ++x) {
    const unsigned rx = m.row[x];
    if (!all_bits(rx, [&](int y) { return (m.row[y] & rx) == 0; })) return false;
  }
  return true;
}

// The strict part x P y <=> xRy and not yRx must be transitive.
bool is_quasitrans(const Masks& m) {
  std::uint8_t strict[kMaxCard];
  for (int x = 0; x < m.n; ++x)
    strict[x] = static_cast<std::uint8_t>(m.row[x] & ~m.col[x]);
  return transitive_rows(strict, m.n);
}

// xRy and xRz imply yRz.
bool is_rg_eucl(const Masks& m) {
  for (int x = 0; x < m.n; ++x) {
    const unsigned rx = m.row[x];
    if (!all_bits(rx, [&](int y) { return (rx & ~m.row[y]) == 0; })) return false;
  }
  return true;
}

// yRx and zRx imply yRz.
bool is_lf_eucl(const Masks& m) {
  for (int x = 0; x < m.n; ++x) {
    const unsigned cx = m.col[x];
    if (!all_bits(cx, [&](int y) { return (cx & ~m.row[y]) == 0; })) return false;
  }
  return true;
}

// wRx, x and y incomparable, yRz imply wRz.
bool is_semiord1(const Masks& m) {
  for (int x = 0; x < m.n; ++x) {
    const unsigned preds = m.col[x];
    if (!preds) continue;
    const bool ok = all_bits(m.incomparable(x), [&](int y) {
      const unsigned ry = m.row[y];
      return all_bits(preds, [&](int w) { return (ry & ~m.row[w]) == 0; });
    });
    if (!ok) return false;
  }
  return true;
}

// xRy and yRz imply that every w is comparable with one of x, y, z.
bool is_semiord2(const Masks& m) {
  std::uint8_t comparable[kMaxCard];
  for (int i = 0; i < m.n; ++i)
    comparable[i] = static_cast<std::uint8_t>(m.row[i] | m.col[i]);
  for (int x = 0; x < m.n; ++x) {
    const bool ok = all_bits(m.row[x], [&](int y) {
      const unsigned cxy = comparable[x] | comparable[y];
      return all_bits(m.row[y], [&](int z) {
        return (cxy | comparable[z]) == m.full;
      });
    });
    if (!ok) return false;
  }
  return true;
}

bool is_rg_serial(const Masks& m) {
  for (int x = 0; x < m.n; ++x)
    if (!m.row[x]) return false;
  return true;
}

bool is_lf_serial(const Masks& m) {
  for (int y = 0; y < m.n; ++y)
    if (!m.col[y]) return false;
  return true;
}

// Every xRz has some y (possibly x or z) with xRy and yRz.
bool is_dense(const Masks& m) {
  for (int x = 0; x < m.n; ++x) {
    const unsigned rx = m.row[x];
    if (!all_bits(rx, [&](int z) { return (rx & m.col[z]) != 0; })) return false;
  }
  return true;
}

// Incomparability, quantified over all x, y, z including equal ones, is transitive.
bool is_inctrans(const Masks& m) {
  std::uint8_t inc[kMaxCard];
  for (int i = 0; i < m.n; ++i) inc[i] = m.incomparable(i);
  return transitive_rows(inc, m.n);
}

bool is_lf_unique(const Masks& m) {
  for (int y = 0; y < m.n; ++y)
    if (std::popcount(m.col[y]) > 1) return false;
  return true;
}

bool is_rg_unique(const Masks& m) {
  for (int x = 0; x < m.n; ++x)
    if (std::popcount(m.row[x]) > 1) return false;
  return true;
}

bool holds_on(const Masks& m, Property p) {
  switch (p) {
    case Property::Empty: return is_empty(m);
    case Property::Univ: return is_univ(m);
    case Property::CoRefl: return is_corefl(m);
    case Property::LfEucl: return is_lf_eucl(m);
    case Property::RgEucl: return is_rg_eucl(m);
    case Property::LfUnique: return is_lf_unique(m);
    case Property::RgUnique: return is_rg_unique(m);
    case Property::Sym: return is_sym(m);
    case Property::AntiTrans: return is_antitrans(m);
    case Property::ASym: return is_asym(m);
    case Property::Connex: return is_connex(m);
    case Property::Trans: return is_trans(m);
    case Property::SemiOrd1: return is_semiord1(m);
    case Property::Irrefl: return is_irrefl(m);
    case Property::Refl: return is_refl(m);
    case Property::QuasiRefl: return is_lf_quasi_refl(m) && is_rg_quasi_refl(m);
    case Property::AntiSym: return is_antisym(m);
    case Property::SemiConnex: return is_semiconnex(m);
    case Property::IncTrans: return is_inctrans(m);
    case Property::SemiOrd2: return is_semiord2(m);
    case Property::QuasiTrans: return is_quasitrans(m);
    case Property::Dense: return is_dense(m);
    case Property::LfSerial: return is_lf_serial(m);
    case Property::RgSerial: return is_rg_serial(m);
    case Property::LfQuasiRefl: return is_lf_quasi_refl(m);
    case Property::RgQuasiRefl: return is_rg_quasi_refl(m);
  }
  return false;
}

}  // namespace

const std::array<Property, kPropertyCount>& all_properties() {
  static const auto props = [] {
    std::array<Property, kPropertyCount> out{};
    for (int i = 0; i < kPropertyCount; ++i) out[i] = static_cast<Property>(i);
    return out;
  }();
  return props;
}

std::string_view property_name(Property p) {
  return kNames[static_cast<std::size_t>(p)];
}

std::optional<Property> property_from_name(std::string_view name) {
  for (int i = 0; i < kPropertyCount; ++i)
    if (kNames[i] == name) return static_cast<Property>(i);
  return std::nullopt;
}

Property dual(Property p) {
  switch (p) {
    case Property::LfEucl: return Property::RgEucl;
    case Property::RgEucl: return Property::LfEucl;
    case Property::LfUnique: return Property::RgUnique;
    case Property::RgUnique: return Property::LfUnique;
    case Property::LfSerial: return Property::RgSerial;
    case Property::RgSerial: return Property::LfSerial;
    case Property::LfQuasiRefl: return Property::RgQuasiRefl;
    case Property::RgQuasiRefl: return Property::LfQuasiRefl;
    default: return p;
  }
}

bool holds(const Relation& r, Property p) { return holds_on(Masks(r), p); }

PropertyVector property_vector(const Relation& r) {
  const Masks m(r);
  std::uint32_t bits = 0;
  for (int b = 0; b < kVectorProperties; ++b)
    if (holds_on(m, property_at_bit(b))) bits |= 1u << b;
  return PropertyVector{bits};
}

std::vector<std::string_view> property_names(PropertyVector v) {
  std::vector<std::string_view> out;
  for (int b = 0; b < kVectorProperties; ++b)
    if (v.bits & (1u << b)) out.push_back(kNames[b]);
  return out;
}

std::string_view kind_name(RelationKind k) {
  return kKindNames[static_cast<std::size_t>(k)];
}

std::vector<Property> kind_definition(RelationKind k) {
  using P = Property;
  switch (k) {
    case RelationKind::Equivalence: return {P::Refl, P::Sym, P::Trans};
    case RelationKind::PartialEquivalence: return {P::Sym, P::Trans};
    case RelationKind::Tolerance: return {P::Refl, P::Sym};
    case RelationKind::Idempotent: return {P::Dense, P::Trans};
    case RelationKind::Trichotomous: return {P::Irrefl, P::ASym, P::SemiConnex};
    case RelationKind::NonStrictPartialOrder: return {P::Refl, P::AntiSym, P::Trans};
    case RelationKind::StrictPartialOrder: return {P::Irrefl, P::ASym, P::Trans};
    case RelationKind::SemiOrder: return {P::ASym, P::SemiOrd1, P::SemiOrd2};
    case RelationKind::Preorder: return {P::Refl, P::Trans};
    case RelationKind::WeakOrdering: return {P::Irrefl, P::ASym, P::Trans, P::IncTrans};
    case RelationKind::PartialFunction: return {P::RgUnique};
    case RelationKind::TotalFunction: return {P::RgUnique, P::RgSerial};
    case RelationKind::InjectiveFunction: return {P::LfUnique, P::RgUnique, P::RgSerial};
    case RelationKind::SurjectiveFunction: return {P::RgUnique, P::LfSerial, P::RgSerial};
    case RelationKind::BijectiveFunction:
      return {P::LfUnique, P::RgUnique, P::LfSerial, P::RgSerial};
  }
  return {};
}

std::vector<RelationKind> classify_kinds(const Relation& r) {
  const Masks m(r);
  std::vector<RelationKind> out;
  for (int i = 0; i < kRelationKindCount; ++i) {
    const auto kind = static_cast<RelationKind>(i);
    bool all = true;
    for (Property p : kind_definition(kind)) all = all && holds_on(m, p);
    if (all) out.push_back(kind);
  }
  return out;
}

}  // namespace rellaws
