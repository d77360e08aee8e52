#include "mgn/pullbacks.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "mgn/errors.hpp"

namespace mgn {

DivisorClass pullback_of_delta_irr(int g) {
  const SpaceId target = make_space(g, 2);
  DivisorClass p(target, "s*d0");
  p.accumulate(GeneratorIndex::delta_irr(), Rational(1));
  p.accumulate(GeneratorIndex::omega(1), Rational(-1));
  p.accumulate(GeneratorIndex::omega(2), Rational(-1));
  p.accumulate(canonicalize(target, 0, PointSet::of({1, 2})), Rational(-2));
  for (int i = 1; i <= g - 1; ++i) p.accumulate(canonicalize(target, i, PointSet::of({1})), Rational(1));
  return p;
}

DivisorClass clutch_pullback(const DivisorClass& c) {
  const SpaceId source = c.space();
  if (source.n != 0)
    throw SpaceMismatch("clutch pullback expects a class on M(h,0), got " + to_string(source));
  if (source.g < 3) throw SpaceMismatch("clutch pullback needs h >= 3 so that the target genus is >= 2");
  const int g = source.g - 1;
  const SpaceId target = make_space(g, 2);
  const PointSet both = PointSet::of({1, 2});

  DivisorClass out(target, c.provenance().empty() ? std::string{} : "s*" + c.provenance());
  const DivisorClass p = pullback_of_delta_irr(g);
  for (const auto& [x, coeff] : c.terms()) {
    if (coeff.is_unknown()) throw UnknownCoefficient("clutch pullback of Unknown coordinate " + to_string(x));
    const Rational& a = coeff.value();
    switch (x.kind) {
      case GeneratorKind::Lambda:
        out.accumulate(GeneratorIndex::lambda(), a);
        break;
      case GeneratorKind::DeltaIrr:
        for (const auto& [y, v] : p.terms()) out.accumulate(y, Rational(a * v.value()));
        break;
      case GeneratorKind::DeltaSep: {
        const int i = x.index;
        out.accumulate(canonicalize(target, i, PointSet{}), a);
        out.accumulate(canonicalize(target, i - 1, both), a);
        break;
      }
      case GeneratorKind::Omega:
        throw SpaceMismatch("omega coordinate on an unpointed space");
    }
  }
  return out;
}

ForgetPullback make_forget_pullback(int g, int n, std::vector<int> embedding) {
  validate(SpaceId{g, n});
  const int m = static_cast<int>(embedding.size());
  if (m > n) throw InvalidEmbedding("cannot embed " + std::to_string(m) + " points into " + std::to_string(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int v : embedding) {
    if (v < 1 || v > n) throw InvalidEmbedding("image " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (used[static_cast<std::size_t>(v)]) throw InvalidEmbedding("embedding is not injective at " + std::to_string(v));
    used[static_cast<std::size_t>(v)] = true;
  }
  return ForgetPullback{g, m, n, std::move(embedding)};
}

std::vector<int> parse_embedding(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  std::size_t pos = 0;
  auto read_int = [&](int& out) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), out);
    if (ec != std::errc{}) throw ParseError("expected integer in embedding", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  if (text.find_first_not_of(' ') == std::string_view::npos) return {};
  while (true) {
    int from = 0, to = 0;
    read_int(from);
    if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':' in embedding", pos);
    ++pos;
    read_int(to);
    pairs.emplace_back(from, to);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ',' in embedding", pos);
    ++pos;
  }
  std::vector<int> embedding(pairs.size(), 0);
  for (auto [from, to] : pairs) {
    if (from < 1 || from > static_cast<int>(pairs.size()) || embedding[static_cast<std::size_t>(from - 1)] != 0)
      throw InvalidEmbedding("embedding keys must be exactly 1.." + std::to_string(pairs.size()));
    embedding[static_cast<std::size_t>(from - 1)] = to;
  }
  return embedding;
}

std::string format_embedding(const std::vector<int>& embedding) {
  std::string out;
  for (std::size_t j = 0; j < embedding.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(j + 1) + ":" + std::to_string(embedding[j]);
  }
  return out;
}

namespace {

std::uint64_t pack(const GeneratorIndex& x) {
  return (std::uint64_t(x.kind) << 56) | (std::uint64_t(std::uint32_t(x.index)) << 32) | x.points.bits();
}

GeneratorIndex unpack(std::uint64_t key) {
  return GeneratorIndex{static_cast<GeneratorKind>(key >> 56), static_cast<int>((key >> 32) & 0xffffff),
                        PointSet(static_cast<std::uint32_t>(key))};
}

// Appends the targets of one source generator under one embedding (deduplicated).
void forget_targets(const ForgetPullback& op, const GeneratorIndex& x, std::vector<GeneratorIndex>& out) {
  switch (x.kind) {
    case GeneratorKind::Lambda:
    case GeneratorKind::DeltaIrr:
      out.push_back(x);
      return;
    case GeneratorKind::Omega:
      out.push_back(GeneratorIndex::omega(op.embedding[static_cast<std::size_t>(x.index - 1)]));
      return;
    case GeneratorKind::DeltaSep:
      break;
  }
  const SpaceId target = op.target();
  std::uint32_t image = 0;
  std::uint32_t mapped = 0;
  for (int j = 1; j <= op.m; ++j) {
    const std::uint32_t bit = std::uint32_t{1} << (op.embedding[static_cast<std::size_t>(j - 1)] - 1);
    image |= bit;
    if (x.points.contains(j)) mapped |= bit;
  }
  const std::uint32_t free = PointSet::full(op.n).bits() & ~image;
  const std::size_t first = out.size();
  std::uint32_t sub = 0;
  do {
    out.push_back(canonicalize(target, x.index, PointSet(mapped | sub)));
    sub = (sub - free) & free;
  } while (sub != 0);
  // Distinct T can only collide through the complement flip at genus g/2.
  if (2 * x.index != op.g) return;
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
  out.erase(std::unique(out.begin() + static_cast<std::ptrdiff_t>(first), out.end()), out.end());
}

void check_source(const ForgetPullback& op, const DivisorClass& c) {
  if (!(c.space() == op.source()))
    throw SpaceMismatch("forget pullback expects a class on " + to_string(op.source()) + ", got " +
                        to_string(c.space()));
  if (static_cast<int>(op.embedding.size()) != op.m) throw InvalidEmbedding("embedding size differs from m");
}

}  // namespace

DivisorClass forget_pullback(const ForgetPullback& op, const DivisorClass& c) {
  check_source(op, c);
  make_forget_pullback(op.g, op.n, op.embedding);
  DivisorClass out(op.target(), c.provenance());
  std::vector<GeneratorIndex> targets;
  for (const auto& [x, coeff] : c.terms()) {
    targets.clear();
    forget_targets(op, x, targets);
    for (const auto& y : targets) out.accumulate(y, coeff);
  }
  return out;
}

DivisorClass lift_and_average(const DivisorClass& c, int n) {
  if (c.space().n != 2) throw SpaceMismatch("lift_and_average expects a class on M(g,2), got " + to_string(c.space()));
  if (n < 2) throw InvalidEmbedding("lift_and_average needs n >= 2");
  const int g = c.space().g;

  std::vector<ForgetPullback> ops;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (a != b) ops.push_back(make_forget_pullback(g, n, {a, b}));

  // Integer incidence counts per source generator, then one rational scaling.
  DivisorClass out(make_space(g, n), c.provenance().empty() ? std::string{} : "lifted " + c.provenance());
  const Rational weight = make_rational(1, static_cast<long>(ops.size()));
  std::vector<GeneratorIndex> targets;
  std::unordered_map<std::uint64_t, long> counts;
  for (const auto& [x, coeff] : c.terms()) {
    counts.clear();
    for (const auto& op : ops) {
      targets.clear();
      forget_targets(op, x, targets);
      for (const auto& y : targets) ++counts[pack(y)];
    }
    std::vector<std::pair<GeneratorIndex, long>> sorted;
    sorted.reserve(counts.size());
    for (auto [key, k] : counts) sorted.emplace_back(unpack(key), k);
    std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    for (const auto& [y, k] : sorted) out.accumulate(y, Rational(weight * k) * coeff);
  }
  return out;
}

}  // namespace mgn
