#include "mgn/picard_basis.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "mgn/errors.hpp"

namespace mgn {

SpaceId make_space(int g, int n) {
  SpaceId s{g, n};
  validate(s);
  return s;
}

void validate(const SpaceId& space) {
  if (space.g < 2)
    throw InvalidSpace("genus must be at least 2, got " + std::to_string(space.g));
  if (space.n < 0 || space.n > kMaxMarkedPoints)
    throw InvalidSpace("marked point count out of range: " + std::to_string(space.n));
}

std::string to_string(const SpaceId& space) {
  return "M(" + std::to_string(space.g) + "," + std::to_string(space.n) + ")";
}

PointSet PointSet::of(std::initializer_list<int> points) {
  return of(std::span<const int>(points.begin(), points.size()));
}

PointSet PointSet::of(std::span<const int> points) {
  std::uint32_t bits = 0;
  for (int p : points) {
    if (p < 1 || p > 32) throw InvalidGenerator("marked point label out of range: " + std::to_string(p));
    bits |= std::uint32_t{1} << (p - 1);
  }
  return PointSet(bits);
}

std::vector<int> PointSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::strong_ordering basis_order(PointSet a, PointSet b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const std::uint32_t diff = a.bits() ^ b.bits();
  if (diff == 0) return std::strong_ordering::equal;
  // Same size: the smallest element in the symmetric difference decides.
  const std::uint32_t lowest = diff & (~diff + 1);
  return (a.bits() & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (int p : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  out += '}';
  return out;
}

std::strong_ordering operator<=>(const GeneratorIndex& a, const GeneratorIndex& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  switch (a.kind) {
    case GeneratorKind::Lambda:
    case GeneratorKind::DeltaIrr:
      return std::strong_ordering::equal;
    case GeneratorKind::Omega:
      return a.index <=> b.index;
    case GeneratorKind::DeltaSep:
      if (auto c = a.index <=> b.index; c != 0) return c;
      return basis_order(a.points, b.points);
  }
  return std::strong_ordering::equal;
}

GeneratorIndex canonicalize(const SpaceId& space, int genus, PointSet s) {
  const int g = space.g;
  if (genus < 0 || genus > g)
    throw InvalidGenerator("genus " + std::to_string(genus) + " outside 0.." + std::to_string(g));
  if (!s.subset_of(PointSet::full(space.n)))
    throw InvalidGenerator("point set " + to_string(s) + " not contained in {1.." + std::to_string(space.n) + "}");
  const PointSet complement = s.complement_in(space.n);
  if ((genus == 0 && s.size() < 2) || (genus == g && complement.size() < 2))
    throw InvalidGenerator("d" + std::to_string(genus) + ";" + to_string(s) +
                           ": a genus-0 side must carry at least 2 marked points");
  const int other = g - genus;
  if (genus > other) return GeneratorIndex::delta_sep_raw(other, complement);
  if (genus == other && space.n >= 1 && !s.contains(1)) return GeneratorIndex::delta_sep_raw(genus, complement);
  return GeneratorIndex::delta_sep_raw(genus, s);
}

bool is_canonical(const SpaceId& space, const GeneratorIndex& x) {
  switch (x.kind) {
    case GeneratorKind::Lambda:
    case GeneratorKind::DeltaIrr:
      return x.index == 0 && x.points.empty();
    case GeneratorKind::Omega:
      return x.index >= 1 && x.index <= space.n && x.points.empty();
    case GeneratorKind::DeltaSep:
      try {
        return canonicalize(space, x.index, x.points) == x;
      } catch (const InvalidGenerator&) {
        return false;
      }
  }
  return false;
}

std::vector<GeneratorIndex> enumerate_basis(const SpaceId& space) {
  validate(space);
  std::vector<GeneratorIndex> out;
  out.push_back(GeneratorIndex::lambda());
  out.push_back(GeneratorIndex::delta_irr());
  for (int i = 1; i <= space.n; ++i) out.push_back(GeneratorIndex::omega(i));

  std::vector<GeneratorIndex> seps;
  const std::uint32_t subsets = std::uint32_t{1} << space.n;
  for (int i = 0; i <= space.g / 2; ++i) {
    for (std::uint32_t bits = 0; bits < subsets; ++bits) {
      const PointSet s(bits);
      if (i == 0 && s.size() < 2) continue;
      const auto x = canonicalize(space, i, s);
      if (x.index == i && x.points == s) seps.push_back(x);
    }
  }
  std::sort(seps.begin(), seps.end());
  out.insert(out.end(), seps.begin(), seps.end());
  return out;
}

std::string to_string(const GeneratorIndex& x) {
  switch (x.kind) {
    case GeneratorKind::Lambda:
      return "l";
    case GeneratorKind::DeltaIrr:
      return "d0";
    case GeneratorKind::Omega:
      return "w" + std::to_string(x.index);
    case GeneratorKind::DeltaSep:
      return "d" + std::to_string(x.index) + ";" + to_string(x.points);
  }
  return "?";
}

namespace {

// Reads a non-negative decimal integer starting at pos; returns -1 if none.
long read_uint(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return -1;
  long v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    if (v > 1'000'000) throw ParseError("integer too large", pos);
    ++pos;
  }
  return v;
}

PointSet read_set(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] != '{') throw ParseError("expected '{'", pos);
  ++pos;
  std::vector<int> pts;
  if (pos < s.size() && s[pos] == '}') {
    ++pos;
    return PointSet{};
  }
  while (true) {
    long v = read_uint(s, pos);
    if (v < 1 || v > 32) throw ParseError("expected marked point label", pos);
    pts.push_back(static_cast<int>(v));
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < s.size() && s[pos] == '}') {
      ++pos;
      break;
    }
    throw ParseError("expected ',' or '}'", pos);
  }
  return PointSet::of(std::span<const int>(pts));
}

}  // namespace

std::optional<RawDelta> parse_raw_delta(std::string_view label) {
  std::size_t pos = 0;
  if (label.empty() || label[0] != 'd') return std::nullopt;
  ++pos;
  try {
    long genus = read_uint(label, pos);
    if (genus < 0 || pos >= label.size() || label[pos] != ';') return std::nullopt;
    ++pos;
    PointSet s = read_set(label, pos);
    if (pos != label.size()) return std::nullopt;
    return RawDelta{static_cast<int>(genus), s};
  } catch (const Error&) {
    return std::nullopt;
  }
}

GeneratorIndex parse_generator(const SpaceId& space, std::string_view label) {
  if (label == "l") return GeneratorIndex::lambda();
  if (label == "d0") return GeneratorIndex::delta_irr();
  if (label.size() >= 2 && label[0] == 'w') {
    std::size_t pos = 1;
    long i = read_uint(label, pos);
    if (i < 0 || pos != label.size()) throw ParseError("malformed omega label '" + std::string(label) + "'", pos);
    if (i < 1 || i > space.n)
      throw InvalidGenerator("w" + std::to_string(i) + " outside 1.." + std::to_string(space.n));
    return GeneratorIndex::omega(static_cast<int>(i));
  }
  if (auto raw = parse_raw_delta(label)) return canonicalize(space, raw->genus, raw->points);
  throw ParseError("unrecognized generator label '" + std::string(label) + "'", 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw InvalidPermutation("not a bijection of {1.." + std::to_string(n) + "}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  const int pts[] = {a, b};
  return cycle(n, pts);
}

Permutation Permutation::cycle(int n, std::span<const int> points) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (std::size_t k = 0; k < points.size(); ++k) {
    const int from = points[k];
    const int to = points[(k + 1) % points.size()];
    if (from < 1 || from > n) throw InvalidPermutation("cycle point out of range: " + std::to_string(from));
    images[static_cast<std::size_t>(from - 1)] = to;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::standard_cycle(int n, int length) {
  if (length < 1 || length > n) throw InvalidPermutation("cycle length out of range: " + std::to_string(length));
  std::vector<int> pts(static_cast<std::size_t>(length));
  std::iota(pts.begin(), pts.end(), 1);
  return cycle(n, pts);
}

PointSet Permutation::operator()(PointSet s) const {
  std::uint32_t bits = 0;
  for (std::uint32_t b = s.bits(); b != 0; b &= b - 1) {
    const int p = std::countr_zero(b) + 1;
    bits |= std::uint32_t{1} << ((*this)(p)-1);
  }
  return PointSet(bits);
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= degree(); ++k)
    if ((*this)(k) != k) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int k = 1; k <= degree(); ++k) inv[static_cast<std::size_t>((*this)(k)-1)] = k;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidPermutation("composing permutations of different degree");
  std::vector<int> images(b.images_.size());
  for (int k = 1; k <= b.degree(); ++k) images[static_cast<std::size_t>(k - 1)] = a(b(k));
  return Permutation(std::move(images));
}

std::vector<Permutation> cyclic_group(const Permutation& generator) {
  std::vector<Permutation> out{Permutation::identity(generator.degree())};
  Permutation p = generator;
  while (!p.is_identity()) {
    out.push_back(p);
    p = generator * p;
  }
  return out;
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (int k = 1; k <= p.degree(); ++k) {
    if (k > 1) out += ',';
    out += std::to_string(p(k));
  }
  return out + "]";
}

GeneratorIndex apply_permutation(const SpaceId& space, const Permutation& perm, const GeneratorIndex& x) {
  if (perm.degree() != space.n)
    throw SpaceMismatch("permutation of degree " + std::to_string(perm.degree()) + " acting on " + to_string(space));
  switch (x.kind) {
    case GeneratorKind::Lambda:
    case GeneratorKind::DeltaIrr:
      return x;
    case GeneratorKind::Omega:
      return GeneratorIndex::omega(perm(x.index));
    case GeneratorKind::DeltaSep:
      return canonicalize(space, x.index, perm(x.points));
  }
  return x;
}

}  // namespace mgn
