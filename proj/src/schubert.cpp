#include "cominrule/schubert.hpp"

#include <bit>
#include <mutex>

namespace cominrule {

Space::Space(const SpaceSpec& spec) : poset_(build_box_poset(spec)) {
  shapes_ = all_shapes(poset_);
  for (int i = 0; i < num_shapes(); ++i) {
    index_.emplace(shapes_[i].mask(), i);
    canonical_.push_back(first_tableau(SkewShape(Shape::empty(poset_), shapes_[i])));
  }
}

std::shared_ptr<const Space> Space::make(const SpaceSpec& spec) { return std::shared_ptr<const Space>(new Space(spec)); }

std::shared_ptr<const Space> Space::make(std::string_view spec) { return make(SpaceSpec::parse(spec)); }

int Space::index(Mask m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw Error("box set is not a shape of " + spec().str());
  return it->second;
}

int Space::index(const Shape& s) const {
  if (s.poset_ptr() != &poset_) throw Error("shape belongs to a different space than " + spec().str());
  return index(s.mask());
}

std::shared_ptr<const std::map<Mask, std::int64_t>> Space::counts(Mask inner, Mask outer, Exec exec) const {
  const auto key = std::make_pair(inner, outer);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  auto value = std::make_shared<const std::map<Mask, std::int64_t>>(rectification_counts(poset_, inner, outer, exec));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = memo_.emplace(key, value);
  return it->second;
}

std::int64_t apply_short_root_factor(std::int64_t count, int short_skew, int short_mu, Flavor flavor) {
  if (flavor == Flavor::minuscule || count == 0) return count;
  int e = short_skew - short_mu;
  if (e >= 0) {
    if (e >= 62) throw Error("coefficient overflows 64 bits");
    std::int64_t out;
    if (__builtin_mul_overflow(count, std::int64_t{1} << e, &out)) throw Error("coefficient overflows 64 bits");
    return out;
  }
  std::int64_t d = std::int64_t{1} << -e;
  if (count % d) throw std::logic_error("short-root factor does not divide the tableau count");
  return count / d;
}

bool structural_zero(const Shape& lambda, const Shape& mu, const Shape& nu) {
  return !nu.contains(lambda) || lambda.size() + mu.size() != nu.size();
}

namespace {

void check_space(const Shape& s, const Space& space) {
  if (s.poset_ptr() != &space.poset()) throw Error("shape belongs to a different space than " + space.spec().str());
}

std::int64_t coefficient_from_counts(const std::map<Mask, std::int64_t>& counts, const Shape& lambda, const Shape& mu,
                                     const Shape& nu, const Space& space) {
  auto it = counts.find(mu.mask());
  if (it == counts.end()) return 0;
  const BoxPoset& p = space.poset();
  return apply_short_root_factor(it->second, shortroots(p, nu.mask() & ~lambda.mask()), shortroots(mu), p.flavor());
}

}  // namespace

std::int64_t lrc(const Shape& lambda, const Shape& mu, const Shape& nu, const Space& space) {
  check_space(lambda, space);
  check_space(mu, space);
  check_space(nu, space);
  if (structural_zero(lambda, mu, nu)) return 0;
  return coefficient_from_counts(*space.counts(lambda.mask(), nu.mask()), lambda, mu, nu, space);
}

std::map<Shape, std::int64_t> product_expand(const Shape& lambda, const Shape& mu, const Space& space) {
  check_space(lambda, space);
  check_space(mu, space);
  std::map<Shape, std::int64_t> out;
  for (const Shape& nu : space.shapes()) {
    if (structural_zero(lambda, mu, nu)) continue;
    std::int64_t c = lrc(lambda, mu, nu, space);
    if (c) out.emplace(nu, c);
  }
  return out;
}

std::map<Shape, std::int64_t> chevalley_product(const Shape& lambda, const Space& space) {
  check_space(lambda, space);
  const BoxPoset& p = space.poset();
  std::map<Shape, std::int64_t> out;
  for (int b = 0; b < p.size(); ++b) {
    if (lambda.has(b) || (p.lower_covers(b) & ~lambda.mask())) continue;
    std::int64_t c = p.flavor() == Flavor::cominuscule && p.is_short(b) ? 2 : 1;
    out.emplace(Shape(p, lambda.mask() | bit(b)), c);
  }
  return out;
}

std::map<Shape, std::int64_t> box_power(int i, const Space& space) {
  const BoxPoset& p = space.poset();
  if (i < 0 || i > p.size()) throw Error("box power exponent out of range");
  std::map<Shape, std::int64_t> cur{{Shape::empty(p), 1}};
  for (int step = 0; step < i; ++step) {
    std::map<Shape, std::int64_t> next;
    for (const auto& [lam, c] : cur) {
      for (const auto& [mu, d] : chevalley_product(lam, space)) {
        std::int64_t term;
        if (__builtin_mul_overflow(c, d, &term) || __builtin_add_overflow(next[mu], term, &next[mu])) {
          throw Error("box power overflows 64 bits");
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::map<Shape, std::int64_t> box_power_closed_form(int i, const Space& space) {
  const BoxPoset& p = space.poset();
  if (i < 0 || i > p.size()) throw Error("box power exponent out of range");
  std::map<Shape, std::int64_t> out;
  for (const Shape& g : space.shapes()) {
    if (g.size() != i) continue;
    auto f = static_cast<std::int64_t>(count_syt(SkewShape(Shape::empty(p), g)));
    out.emplace(g, apply_short_root_factor(f, shortroots(g), 0, p.flavor()));
  }
  return out;
}

CoeffTable::CoeffTable(std::shared_ptr<const Space> space)
    : space_(std::move(space)), n_(space_->num_shapes()), data_(static_cast<std::size_t>(n_) * n_ * n_, 0) {}

CoeffTable full_table(std::shared_ptr<const Space> space, Exec exec, int max_shapes) {
  if (space->num_shapes() > max_shapes) {
    throw Error(space->spec().str() + " has " + std::to_string(space->num_shapes()) + " shapes, above the bound " +
                std::to_string(max_shapes));
  }
  CoeffTable table(space);
  const auto& shapes = space->shapes();
  const int n = space->num_shapes();
  std::vector<std::pair<int, int>> pairs;
  for (int l = 0; l < n; ++l)
    for (int v = 0; v < n; ++v)
      if (shapes[v].contains(shapes[l])) pairs.emplace_back(l, v);

  auto fill = [&](std::size_t i) {
    auto [l, v] = pairs[i];
    const Shape& lam = shapes[l];
    const Shape& nu = shapes[v];
    auto counts = space->counts(lam.mask(), nu.mask(), Exec::serial);
    for (const auto& [mu_mask, cnt] : *counts) {
      const int m = space->index(mu_mask);
      table.at(l, m, v) = coefficient_from_counts(*counts, lam, shapes[m], nu, *space);
    }
  };
  if (exec == Exec::parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      try {
        fill(i);
      } catch (...) {
#pragma omp critical
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::size_t i = 0; i < pairs.size(); ++i) fill(i);
  }
  return table;
}

}  // namespace cominrule
